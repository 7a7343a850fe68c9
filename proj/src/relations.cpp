#include "ainfty/structures.hpp"

namespace ainfty {

namespace {

/* Exponent of the sign on the term that applies an inner map to the block of
 * size `i` starting at 1-based position `j` of a length-`K` tuple:
 *     i * (|x_1| + ... + |x_{j-1}|) + (j-1)(i+1) + (K - i).
 * The displayed low-arity equations of all three relation systems follow this
 * one exponent, with the block read uniformly across the marked entry. */
long long relation_sign_exp(int i, int j, long long prefix_degree, int K) {
    return static_cast<long long>(i) * prefix_degree +
           static_cast<long long>(j - 1) * (i + 1) + (K - i);
}

struct MarkedTuple {
    const std::vector<std::string>& labels;
    std::size_t mark;         // 0-based, or >= labels.size() for plain tuples
    const GradedBasis& main;
    const GradedBasis& marked;

    int entry_degree(std::size_t r) const {
        return r == mark ? marked.degree(labels[r]) : main.degree(labels[r]);
    }
    long long prefix_degree(std::size_t count) const {
        long long d = 0;
        for (std::size_t r = 0; r < count; ++r) d += entry_degree(r);
        return d;
    }
};

const MultiMap* find_plain(const PlainFamily& fam, int n) {
    auto it = fam.find(n);
    return it == fam.end() ? nullptr : &it->second;
}

const MultiMap* find_marked(const MarkedFamily& fam, int k, int l) {
    auto it = fam.find({k, l});
    return it == fam.end() ? nullptr : &it->second;
}

/* Applies `outer` to the tuple with the block [start, start+width) replaced by
 * each term of `inner_out`, accumulating into acc.  `out_mark` is the 0-based
 * mark slot of the outer map, or npos for a plain outer map. */
void accumulate_outer(SparseVec& acc, const MultiMap& outer,
                      const std::vector<std::string>& labels, std::size_t start,
                      std::size_t width, const SparseVec& inner_out, const Scalar& sign) {
    if (inner_out.is_zero()) return;
    std::vector<std::string> args;
    args.reserve(labels.size() - width + 1);
    args.insert(args.end(), labels.begin(), labels.begin() + start);
    const std::size_t slot = args.size();
    args.push_back("");
    args.insert(args.end(), labels.begin() + start + width, labels.end());
    for (const auto& [label, c] : inner_out.terms()) {
        args[slot] = label;
        acc += outer.apply(args).scaled(sign * c);
    }
}

}  // namespace

SparseVec algebra_relation(const AInfinityAlgebra& alg, const std::vector<std::string>& tuple) {
    const int K = static_cast<int>(tuple.size());
    SparseVec acc(alg.basis, alg.field);
    for (int i = 1; i <= K; ++i) {
        const MultiMap* inner = find_plain(alg.ops, i);
        const MultiMap* outer = find_plain(alg.ops, K - i + 1);
        if (!inner || !outer) continue;
        long long prefix = 0;
        for (int j = 1; j <= K - i + 1; ++j) {
            std::vector<std::string> block(tuple.begin() + (j - 1), tuple.begin() + (j - 1) + i);
            Scalar sign = sign_pow(alg.field, relation_sign_exp(i, j, prefix, K));
            accumulate_outer(acc, *outer, tuple, j - 1, i, inner->apply(block), sign);
            prefix += alg.basis->degree(tuple[j - 1]);
        }
    }
    return acc;
}

SparseVec bimodule_relation(const AInfinityBimodule& bim, const std::vector<std::string>& tuple,
                            std::size_t mark) {
    const int K = static_cast<int>(tuple.size());
    const AInfinityAlgebra& alg = *bim.algebra;
    MarkedTuple mt{tuple, mark, *alg.basis, *bim.module};
    SparseVec acc(bim.module, alg.field);
    const int mp = static_cast<int>(mark) + 1;  // 1-based mark position
    for (int i = 1; i <= K; ++i) {
        for (int j = 1; j <= K - i + 1; ++j) {
            const bool covers_mark = (j <= mp && mp <= j + i - 1);
            const MultiMap* inner;
            const MultiMap* outer;
            if (covers_mark) {
                inner = find_marked(bim.ops, mp - j, j + i - 1 - mp);
                outer = find_marked(bim.ops, j - 1, K - i + 1 - j);
            } else {
                inner = find_plain(alg.ops, i);
                int new_mark = mp < j ? mp - 1 : mp - i;  // 0-based mark after collapse
                outer = find_marked(bim.ops, new_mark, K - i - new_mark);
            }
            if (!inner || !outer) continue;
            std::vector<std::string> block(tuple.begin() + (j - 1), tuple.begin() + (j - 1) + i);
            Scalar sign = sign_pow(alg.field, relation_sign_exp(i, j, mt.prefix_degree(j - 1), K));
            accumulate_outer(acc, *outer, tuple, j - 1, i, inner->apply(block), sign);
        }
    }
    return acc;
}

SparseVec morphism_relation(const BimoduleMorphism& mor, const std::vector<std::string>& tuple,
                            std::size_t mark) {
    const AInfinityBimodule& src = *mor.source;
    const AInfinityBimodule& tgt = *mor.target;
    const AInfinityAlgebra& alg = *src.algebra;
    const int K = static_cast<int>(tuple.size());
    MarkedTuple mt{tuple, mark, *alg.basis, *src.module};
    SparseVec acc(tgt.module, alg.field);
    const int mp = static_cast<int>(mark) + 1;

    // One source operation inside, one morphism component outside.
    for (int i = 1; i <= K; ++i) {
        for (int j = 1; j <= K - i + 1; ++j) {
            const bool covers_mark = (j <= mp && mp <= j + i - 1);
            const MultiMap* inner;
            const MultiMap* outer;
            if (covers_mark) {
                inner = find_marked(src.ops, mp - j, j + i - 1 - mp);
                outer = find_marked(mor.comps, j - 1, K - i + 1 - j);
            } else {
                inner = find_plain(alg.ops, i);
                int new_mark = mp < j ? mp - 1 : mp - i;
                outer = find_marked(mor.comps, new_mark, K - i - new_mark);
            }
            if (!inner || !outer) continue;
            std::vector<std::string> block(tuple.begin() + (j - 1), tuple.begin() + (j - 1) + i);
            Scalar sign = sign_pow(alg.field, relation_sign_exp(i, j, mt.prefix_degree(j - 1), K));
            accumulate_outer(acc, *outer, tuple, j - 1, i, inner->apply(block), sign);
        }
    }

    // Minus: one morphism component inside (swallowing the mark), one target
    // operation outside, with exponent (i+1)(j+1+|x_1|+...+|x_{j-1}|).
    for (int j = 1; j <= mp; ++j) {
        for (int i = mp - j + 1; i <= K - j + 1; ++i) {
            const MultiMap* inner = find_marked(mor.comps, mp - j, j + i - 1 - mp);
            const MultiMap* outer = find_marked(tgt.ops, j - 1, K - i + 1 - j);
            if (!inner || !outer) continue;
            std::vector<std::string> block(tuple.begin() + (j - 1), tuple.begin() + (j - 1) + i);
            long long exp = static_cast<long long>(i + 1) * (j + 1 + mt.prefix_degree(j - 1));
            Scalar sign = -sign_pow(alg.field, exp);
            accumulate_outer(acc, *outer, tuple, j - 1, i, inner->apply(block), sign);
        }
    }
    return acc;
}

}  // namespace ainfty
