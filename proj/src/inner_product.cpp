#include "ainfty/structures.hpp"

#include "validity_cache.hpp"

#include <chrono>
#include <sstream>

namespace ainfty {

namespace {

std::string tuple_str(const std::vector<std::string>& tuple) {
    std::string s = "<";
    for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? "," : "") + tuple[i];
    return s + ">";
}

Scalar pairing_value(const InfinityInnerProduct& ip, int k, int l,
                     const std::vector<std::string>& tuple) {
    auto it = ip.pairings.find({k, l});
    if (it == ip.pairings.end()) return Scalar::zero(ip.algebra->field);
    auto jt = it->second.values.find(tuple);
    return jt == it->second.values.end() ? Scalar::zero(ip.algebra->field) : jt->second;
}

}  // namespace

BimoduleMorphism to_bimodule_morphism(const InfinityInnerProduct& ip) {
    const AlgebraPtr& alg = ip.algebra;
    const Field field = alg->field;
    auto src = std::make_shared<AInfinityBimodule>(self_bimodule(alg));
    auto tgt = std::make_shared<AInfinityBimodule>(dual_self_bimodule(alg));
    const BasisPtr& dual_basis = tgt->module;
    MarkedFamily comps;
    for (const auto& [kl, table] : ip.pairings) {
        MultiMap f = MultiMap::marked_map(alg->basis, alg->basis, dual_basis, kl.first, kl.second,
                                          kl.first + kl.second, field);
        for (const auto& [tuple, v] : table.values) {
            std::vector<std::string> args(tuple.begin(), tuple.end() - 1);
            const std::string& last = tuple.back();
            SparseVec out(dual_basis, field);
            out.add(last + "*", v * sign_pow(field, alg->basis->degree(last)));
            f.set(args, out);
        }
        if (!f.is_zero()) comps.emplace(kl, std::move(f));
    }
    return make_morphism(std::move(src), std::move(tgt), std::move(comps));
}

namespace {

bool same_marked_family(const MarkedFamily& a, const MarkedFamily& b) {
    auto nonzero = [](const MarkedFamily& f) {
        std::map<std::pair<int, int>, const MultiMap*> out;
        for (const auto& [kl, c] : f)
            if (!c.is_zero()) out.emplace(kl, &c);
        return out;
    };
    auto na = nonzero(a), nb = nonzero(b);
    if (na.size() != nb.size()) return false;
    for (const auto& [kl, c] : na) {
        auto it = nb.find(kl);
        if (it == nb.end() || !(*c == *it->second)) return false;
    }
    return true;
}

}  // namespace

InfinityInnerProduct to_inner_product(const BimoduleMorphism& mor) {
    const AlgebraPtr& alg = mor.source->algebra;
    const Field field = alg->field;
    AInfinityBimodule expect_src = self_bimodule(alg);
    AInfinityBimodule expect_tgt = dual_self_bimodule(alg);
    if (!same_basis(mor.source->module, expect_src.module) ||
        !same_basis(mor.target->module, expect_tgt.module) ||
        !same_marked_family(mor.source->ops, expect_src.ops) ||
        !same_marked_family(mor.target->ops, expect_tgt.ops))
        throw std::invalid_argument(
            "pairing form requires the canonical bimodule structure on A and on its dual");

    std::map<std::pair<int, int>, PairingTable> pairings;
    for (const auto& [kl, f] : mor.comps) {
        PairingTable table{kl.first, kl.second, {}};
        for (const auto& [args, out] : f.table()) {
            for (const auto& [dual_label, c] : out.terms()) {
                // dual labels are decorated with a trailing '*'
                std::string last = dual_label.substr(0, dual_label.size() - 1);
                std::vector<std::string> tuple = args;
                tuple.push_back(last);
                Scalar v = c * sign_pow(field, alg->basis->degree(last));
                if (!v.is_zero()) table.values.emplace(std::move(tuple), v);
            }
        }
        if (!table.values.empty()) pairings.emplace(kl, std::move(table));
    }
    return make_inner_product(alg, std::move(pairings));
}

/* The cyclic relation for the pairing family at one (k,l) and one argument
 * tuple (a_1,...,a_{k+l+2}): the derivative sum minus the sum over all single
 * multiplications compatible with the cyclic order, the two special slots
 * never being multiplied together.  Signs are assembled from the printed
 * exponents of the morphism relation, the dual-structure sign, and the
 * (-1)^{|a'|} twist of the pairing form. */
Scalar pairing_relation(const InfinityInnerProduct& ip, int k, int l,
                        const std::vector<std::string>& tuple) {
    const AInfinityAlgebra& alg = *ip.algebra;
    const Field field = alg.field;
    const GradedBasis& basis = *alg.basis;
    const int K = k + l + 1;  // tuple has K+1 entries, the mark sits at k+1
    if (static_cast<int>(tuple.size()) != K + 1)
        throw std::invalid_argument("pairing relation tuple has the wrong length");
    const int mp = k + 1;  // 1-based mark position

    std::vector<long long> prefix(K + 2, 0);
    for (int r = 0; r < K + 1; ++r) prefix[r + 1] = prefix[r] + basis.degree(tuple[r]);

    Scalar acc = Scalar::zero(field);
    auto find_m = [&](int n) -> const MultiMap* {
        auto it = alg.ops.find(n);
        return it == alg.ops.end() ? nullptr : &it->second;
    };

    // Derivative sum: one differential applied in each of the K+1 slots.
    if (const MultiMap* m1 = find_m(1)) {
        for (int pos = 1; pos <= K + 1; ++pos) {
            SparseVec out = m1->apply({tuple[pos - 1]});
            if (out.is_zero()) continue;
            Scalar sign = sign_pow(field, prefix[pos - 1]);
            for (const auto& [e, c] : out.terms()) {
                std::vector<std::string> t = tuple;
                t[pos - 1] = e;
                acc += pairing_value(ip, k, l, t) * sign * c;
            }
        }
    }

    // One multiplication among the first K arguments, the last slot untouched.
    for (int i = 2; i <= K; ++i) {
        const MultiMap* m = find_m(i);
        if (!m) continue;
        for (int j = 1; j <= K - i + 1; ++j) {
            std::vector<std::string> block(tuple.begin() + (j - 1), tuple.begin() + (j - 1) + i);
            SparseVec out = m->apply(block);
            if (out.is_zero()) continue;
            int nk, nl;
            if (j <= mp && mp <= j + i - 1) {
                nk = j - 1;
                nl = K - i + 1 - j;
            } else if (j + i - 1 < mp) {
                nk = k - i + 1;
                nl = l;
            } else {
                nk = k;
                nl = l - i + 1;
            }
            long long exp = K + static_cast<long long>(i) * prefix[j - 1] +
                            static_cast<long long>(j - 1) * (i + 1) + (K - i);
            Scalar sign = sign_pow(field, exp);
            for (const auto& [e, c] : out.terms()) {
                std::vector<std::string> t;
                t.reserve(K - i + 2);
                t.insert(t.end(), tuple.begin(), tuple.begin() + (j - 1));
                t.push_back(e);
                t.insert(t.end(), tuple.begin() + (j - 1) + i, tuple.end());
                acc -= pairing_value(ip, nk, nl, t) * sign * c;
            }
        }
    }

    // One multiplication swallowing the last argument, wrapping back to the
    // front; the remaining block around the mark forms the new pairing.
    for (int j = 1; j <= mp; ++j) {
        for (int i = std::max(1, mp - j + 1); i <= K - 1; ++i) {
            if (j + i - 1 < mp || j + i - 1 > K) continue;
            const MultiMap* m = find_m(K + 1 - i);
            if (!m) continue;
            std::vector<std::string> wrap;
            wrap.reserve(K + 1 - i);
            wrap.insert(wrap.end(), tuple.begin() + (j - 1) + i, tuple.begin() + K);
            wrap.push_back(tuple[K]);
            wrap.insert(wrap.end(), tuple.begin(), tuple.begin() + (j - 1));
            SparseVec out = m->apply(wrap);
            if (out.is_zero()) continue;
            const int nk = k - j + 1, nl = i + j - k - 2;
            const long long suffix_deg = prefix[K] - prefix[j - 1 + i];
            const long long last_deg = basis.degree(tuple[K]);
            const long long phi_deg = (prefix[j - 1 + i] - prefix[j - 1]) + (i - 1);
            const long long eps_prime =
                static_cast<long long>(i + 1) * (j + 1 + prefix[j - 1]);
            const long long eps_dual = prefix[j - 1] * (phi_deg + suffix_deg + last_deg) +
                                       phi_deg * (K + 1 - i);
            const long long z_deg = suffix_deg + last_deg + prefix[j - 1] + (K - 1 - i);
            long long exp = (K - 1) + eps_prime + eps_dual + z_deg + last_deg;
            Scalar sign = sign_pow(field, exp);
            for (const auto& [e, c] : out.terms()) {
                std::vector<std::string> t(tuple.begin() + (j - 1), tuple.begin() + (j - 1) + i);
                t.push_back(e);
                acc -= pairing_value(ip, nk, nl, t) * sign * c;
            }
        }
    }

    return acc;
}

Report check_inner_product(const InfinityInnerProduct& ip) {
    auto t0 = std::chrono::steady_clock::now();
    Report report;
    const AInfinityAlgebra& alg = *ip.algebra;
    const Field field = alg.field;

    CheckEntry base;
    base.name = "base-structure";
    base.formulation = "unsuspended-relations";
    base.ok = is_valid(alg);
    base.cases = 1;
    if (!base.ok) {
        base.notes.push_back("the underlying structure fails its own relations");
        for (const auto& e : check_ainfinity(alg).checks)
            for (const auto& ce : e.counterexamples)
                if (base.counterexamples.size() < 2) base.counterexamples.push_back(ce);
    }

    int max_total = std::max(1, alg.max_arity());
    for (const auto& [kl, p] : ip.pairings)
        max_total = std::max(max_total, kl.first + kl.second + 1);
    const int K_max = 2 * max_total - 1;

    CheckEntry relations;
    relations.name = "pairing-relations (blocks <= " + std::to_string(K_max) + ")";
    relations.formulation = "unsuspended-relations";
    for (int K = 1; K <= K_max; ++K) {
        for (int k = 0; k < K; ++k) {
            const int l = K - 1 - k;
            // Only tuples of total degree 1-(k+l) can contribute to any term.
            std::vector<std::string> cur(K + 1);
            std::function<void(int, long long)> walk = [&](int i, long long total) {
                if (i == K + 1) {
                    if (total != 1 - (k + l)) return;
                    ++relations.cases;
                    Scalar v = pairing_relation(ip, k, l, cur);
                    if (!v.is_zero())
                        relations.fail({"(k,l)=(" + std::to_string(k) + "," + std::to_string(l) +
                                            ") at " + tuple_str(cur),
                                        v.str(), "0"});
                    return;
                }
                for (const auto& e : alg.basis->elements()) {
                    cur[i] = e.label;
                    walk(i + 1, total + e.degree);
                }
            };
            walk(0, 0);
        }
    }

    // Independent formulation: convert to the morphism form and check it there.
    Report mor_report = check_bimodule_map(to_bimodule_morphism(ip));
    CheckEntry agree;
    agree.name = "formulation-agreement";
    agree.formulation = "unsuspended-relations vs suspended-bar";
    agree.cases = 1;
    if (relations.ok != mor_report.pass) {
        agree.ok = false;
        agree.notes.push_back(std::string("pairing relations say ") +
                              (relations.ok ? "pass" : "fail") + " but the morphism form says " +
                              (mor_report.pass ? "pass" : "fail") + " (implementation bug)");
    } else {
        agree.notes.push_back(std::string("both formulations agree: ") +
                              (relations.ok ? "valid" : "invalid"));
    }

    // Optional reported predicates on the lowest pairing; informational only.
    CheckEntry props;
    props.name = "pairing-properties";
    props.formulation = "unsuspended-relations";
    props.cases = 1;
    if (auto it = ip.pairings.find({0, 0}); it != ip.pairings.end()) {
        const auto& table = it->second.values;
        bool symmetric = true;
        for (const auto& [t, v] : table) {
            std::vector<std::string> rev = {t[1], t[0]};
            Scalar other = Scalar::zero(field);
            if (auto jt = table.find(rev); jt != table.end()) other = jt->second;
            long long e = static_cast<long long>(alg.basis->degree(t[0])) * alg.basis->degree(t[1]);
            if (!(v == other * sign_pow(field, e))) symmetric = false;
        }
        props.notes.push_back(std::string("lowest pairing graded-symmetric: ") +
                              (symmetric ? "yes" : "no"));
        // Exact rank of the Gram matrix decides degeneracy.
        const std::size_t n = alg.basis->size();
        std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(n, Scalar::zero(field)));
        for (const auto& [t, v] : table)
            mat[alg.basis->index(t[0])][alg.basis->index(t[1])] = v;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n && rank < n; ++col) {
            std::size_t pivot = rank;
            while (pivot < n && mat[pivot][col].is_zero()) ++pivot;
            if (pivot == n) continue;
            std::swap(mat[pivot], mat[rank]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == rank || mat[r][col].is_zero()) continue;
                Scalar factor = mat[r][col] / mat[rank][col];
                for (std::size_t c = 0; c < n; ++c) mat[r][c] -= mat[rank][c] * factor;
            }
            ++rank;
        }
        props.notes.push_back("lowest pairing nondegenerate: " + std::string(rank == n ? "yes" : "no"));
    } else {
        props.notes.push_back("no (0,0) pairing present");
    }

    report.add(std::move(base));
    report.add(std::move(agree));
    report.add(std::move(relations));
    for (auto& entry : mor_report.checks) {
        entry.name = "morphism-form: " + entry.name;
        report.add(std::move(entry));
    }
    report.add(std::move(props));
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    detail::store_verdict(ip.content_key(), report.pass);
    return report;
}

}  // namespace ainfty
