#include "ainfty/structures.hpp"

#include "ainfty/parallel.hpp"
#include "validity_cache.hpp"

#include <chrono>
#include <mutex>
#include <sstream>

namespace ainfty::detail {

namespace {
std::mutex cache_mutex;
std::map<std::string, bool> verdict_cache;
}  // namespace

bool cached_verdict(const std::string& key, const std::function<bool()>& compute) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = verdict_cache.find(key);
        if (it != verdict_cache.end()) return it->second;
    }
    bool v = compute();
    std::lock_guard<std::mutex> lock(cache_mutex);
    verdict_cache.insert_or_assign(key, v);
    return v;
}

void store_verdict(const std::string& key, bool verdict) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    verdict_cache.insert_or_assign(key, verdict);
}

}  // namespace ainfty::detail

namespace ainfty {

namespace {

std::string tuple_str(const std::vector<std::string>& tuple, std::size_t mark = SIZE_MAX) {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ",";
        if (i == mark) s += "[" + tuple[i] + "]";
        else s += tuple[i];
    }
    return s + ")";
}

std::string basis_key(const BasisPtr& b) {
    std::string s = b->name() + "{";
    for (const auto& e : b->elements()) s += e.label + ":" + std::to_string(e.degree) + ";";
    return s + "}";
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

}  // namespace

int AInfinityAlgebra::max_arity() const {
    int m = 0;
    for (const auto& [n, c] : ops)
        if (!c.is_zero()) m = std::max(m, n);
    return m;
}

CoderivationView AInfinityAlgebra::bar_view() const {
    PlainFamily lifted;
    for (const auto& [n, c] : ops)
        if (!c.is_zero()) lifted.emplace(n, c.suspend_conjugate(true));
    if (lifted.empty()) {
        CoderivationView v;
        v.kind = ViewKind::Coderivation;
        v.degree = -1;
        v.field = field;
        return v;
    }
    return make_coderivation_view(std::move(lifted));
}

std::string AInfinityAlgebra::content_key() const {
    std::string s = "alg:" + to_string(field) + ":" + basis_key(basis) + "[";
    for (const auto& [n, c] : ops) s += c.content_key() + ";";
    return s + "]";
}

int AInfinityBimodule::max_block() const {
    int m = 0;
    for (const auto& [kl, c] : ops)
        if (!c.is_zero()) m = std::max(m, kl.first + kl.second + 1);
    return m;
}

CoderivationView AInfinityBimodule::differential_view() const {
    PlainFamily psi;
    for (const auto& [n, c] : algebra->ops)
        if (!c.is_zero()) psi.emplace(n, c.suspend_conjugate(true));
    MarkedFamily rho;
    for (const auto& [kl, c] : ops)
        if (!c.is_zero()) rho.emplace(kl, c.suspend_conjugate(true));
    if (psi.empty() && rho.empty()) {
        CoderivationView v;
        v.kind = ViewKind::ModuleDifferential;
        v.degree = -1;
        v.field = algebra->field;
        return v;
    }
    return make_module_differential_view(std::move(psi), std::move(rho));
}

std::string AInfinityBimodule::content_key() const {
    std::string s = "bim:" + algebra->content_key() + ":" + basis_key(module) + "[";
    for (const auto& [kl, c] : ops) s += c.content_key() + ";";
    return s + "]";
}

CoderivationView BimoduleMorphism::view() const {
    MarkedFamily lifted;
    for (const auto& [kl, c] : comps)
        if (!c.is_zero()) lifted.emplace(kl, c.suspend_conjugate(true));
    if (lifted.empty()) {
        CoderivationView v;
        v.kind = ViewKind::ComoduleMorphism;
        v.degree = 0;
        v.field = source->algebra->field;
        return v;
    }
    return make_comodule_morphism_view(std::move(lifted));
}

std::string BimoduleMorphism::content_key() const {
    std::string s = "mor:" + source->content_key() + "->" + target->content_key() + "[";
    for (const auto& [kl, c] : comps) s += c.content_key() + ";";
    return s + "]";
}

std::string InfinityInnerProduct::content_key() const {
    std::string s = "ip:" + algebra->content_key() + "[";
    for (const auto& [kl, p] : pairings) {
        s += std::to_string(kl.first) + "," + std::to_string(kl.second) + "{";
        for (const auto& [tuple, v] : p.values) s += tuple_str(tuple) + "=" + v.str() + ";";
        s += "}";
    }
    return s + "]";
}

AInfinityAlgebra make_algebra(BasisPtr basis, Field field, PlainFamily ops) {
    AInfinityAlgebra a;
    a.basis = std::move(basis);
    a.field = field;
    for (auto& [n, c] : ops) {
        if (c.is_zero()) continue;
        if (!c.is_plain() || c.arity() != n)
            throw std::invalid_argument("operation m_" + std::to_string(n) + " has wrong arity");
        if (c.suspended())
            throw std::invalid_argument("operations must be given on unsuspended gradings");
        if (c.degree() != n - 2)
            throw std::invalid_argument("operation m_" + std::to_string(n) +
                                        " must have degree " + std::to_string(n - 2));
        if (!same_basis(c.plain_sig().in, a.basis) || !same_basis(c.plain_sig().out, a.basis))
            throw std::invalid_argument("operation m_" + std::to_string(n) +
                                        " is not defined on the algebra basis");
        if (c.field() != field) throw std::invalid_argument("operation field mismatch");
        a.ops.emplace(n, std::move(c));
    }
    return a;
}

AInfinityBimodule make_bimodule(AlgebraPtr algebra, BasisPtr module, MarkedFamily ops) {
    AInfinityBimodule b;
    b.algebra = std::move(algebra);
    b.module = std::move(module);
    for (auto& [kl, c] : ops) {
        if (c.is_zero()) continue;
        std::string nm = "b_" + std::to_string(kl.first) + "_" + std::to_string(kl.second);
        if (c.is_plain() || c.marked_sig().left != kl.first || c.marked_sig().right != kl.second)
            throw std::invalid_argument(nm + " has the wrong signature");
        if (c.suspended())
            throw std::invalid_argument("operations must be given on unsuspended gradings");
        if (c.degree() != kl.first + kl.second - 1)
            throw std::invalid_argument(nm + " must have degree " +
                                        std::to_string(kl.first + kl.second - 1));
        if (!same_basis(c.marked_sig().plain_in, b.algebra->basis) ||
            !same_basis(c.marked_sig().marked_in, b.module) ||
            !same_basis(c.marked_sig().out, b.module))
            throw std::invalid_argument(nm + " is not defined on A^k (x) M (x) A^l -> M");
        if (c.field() != b.algebra->field) throw std::invalid_argument(nm + ": field mismatch");
        b.ops.emplace(kl, std::move(c));
    }
    return b;
}

BimoduleMorphism make_morphism(BimodulePtr source, BimodulePtr target, MarkedFamily comps) {
    if (!same_basis(source->algebra->basis, target->algebra->basis) ||
        source->algebra->field != target->algebra->field)
        throw std::invalid_argument("morphism endpoints live over different algebras");
    BimoduleMorphism m;
    m.source = std::move(source);
    m.target = std::move(target);
    for (auto& [kl, c] : comps) {
        if (c.is_zero()) continue;
        std::string nm = "f_" + std::to_string(kl.first) + "_" + std::to_string(kl.second);
        if (c.is_plain() || c.marked_sig().left != kl.first || c.marked_sig().right != kl.second)
            throw std::invalid_argument(nm + " has the wrong signature");
        if (c.suspended())
            throw std::invalid_argument("components must be given on unsuspended gradings");
        if (c.degree() != kl.first + kl.second)
            throw std::invalid_argument(nm + " must have degree " +
                                        std::to_string(kl.first + kl.second));
        if (!same_basis(c.marked_sig().plain_in, m.source->algebra->basis) ||
            !same_basis(c.marked_sig().marked_in, m.source->module) ||
            !same_basis(c.marked_sig().out, m.target->module))
            throw std::invalid_argument(nm + " is not defined on A^k (x) M (x) A^l -> N");
        if (c.field() != m.source->algebra->field)
            throw std::invalid_argument(nm + ": field mismatch");
        m.comps.emplace(kl, std::move(c));
    }
    return m;
}

InfinityInnerProduct make_inner_product(AlgebraPtr algebra,
                                        std::map<std::pair<int, int>, PairingTable> pairings) {
    InfinityInnerProduct ip;
    ip.algebra = std::move(algebra);
    const GradedBasis& basis = *ip.algebra->basis;
    for (auto& [kl, table] : pairings) {
        std::string nm = "p_" + std::to_string(kl.first) + "_" + std::to_string(kl.second);
        if (table.left != kl.first || table.right != kl.second)
            throw std::invalid_argument(nm + " has inconsistent slot counts");
        PairingTable cleaned{kl.first, kl.second, {}};
        for (const auto& [tuple, v] : table.values) {
            if (v.is_zero()) continue;
            if (v.field() != ip.algebra->field) throw std::invalid_argument(nm + ": field mismatch");
            if (static_cast<int>(tuple.size()) != kl.first + kl.second + 2)
                throw std::invalid_argument(nm + " entry " + tuple_str(tuple) +
                                            " has the wrong number of arguments");
            int total = 0;
            for (const auto& label : tuple) total += basis.degree(label);
            if (total != -(kl.first + kl.second))
                throw std::invalid_argument(
                    nm + " entry " + tuple_str(tuple) + " has total degree " +
                    std::to_string(total) + ", expected " + std::to_string(-(kl.first + kl.second)));
            cleaned.values.emplace(tuple, v);
        }
        if (!cleaned.values.empty()) ip.pairings.emplace(kl, std::move(cleaned));
    }
    return ip;
}

AInfinityAlgebra from_dga(BasisPtr basis, Field field, const MultiMap* differential,
                          const MultiMap* product) {
    PlainFamily ops;
    if (differential && !differential->is_zero()) {
        if (differential->degree() != -1)
            throw std::invalid_argument("dg differential must have degree -1");
        if (differential->arity() != 1)
            throw std::invalid_argument("dg differential must be unary");
        ops.emplace(1, *differential);
    }
    if (product && !product->is_zero()) {
        if (product->degree() != 0) throw std::invalid_argument("dg product must have degree 0");
        if (product->arity() != 2) throw std::invalid_argument("dg product must be binary");
        ops.emplace(2, *product);
    }
    return make_algebra(std::move(basis), field, std::move(ops));
}

AInfinityBimodule from_dg_bimodule(AlgebraPtr algebra, BasisPtr module,
                                   const MultiMap* differential, const MultiMap* left_action,
                                   const MultiMap* right_action) {
    if (algebra->max_arity() > 2)
        throw std::invalid_argument("the base of a dg-bimodule must be a dg-algebra");
    MarkedFamily ops;
    if (differential && !differential->is_zero()) ops.emplace(std::make_pair(0, 0), *differential);
    if (left_action && !left_action->is_zero()) ops.emplace(std::make_pair(1, 0), *left_action);
    if (right_action && !right_action->is_zero()) ops.emplace(std::make_pair(0, 1), *right_action);
    return make_bimodule(std::move(algebra), std::move(module), std::move(ops));
}

BimoduleMorphism from_dg_bimodule_map(BimodulePtr source, BimodulePtr target, const MultiMap& f) {
    MarkedFamily comps;
    if (!f.is_zero()) comps.emplace(std::make_pair(0, 0), f);
    return make_morphism(std::move(source), std::move(target), std::move(comps));
}

AInfinityBimodule self_bimodule(AlgebraPtr algebra) {
    MarkedFamily ops;
    for (const auto& [n, m] : algebra->ops) {
        if (m.is_zero()) continue;
        // b_{k,l} := m_{k+l+1}, one marked copy per slot split.
        for (int k = 0; k < n; ++k) {
            int l = n - 1 - k;
            MultiMap b = MultiMap::marked_map(algebra->basis, algebra->basis, algebra->basis, k, l,
                                              n - 2, algebra->field);
            for (const auto& [tuple, out] : m.table()) b.set(tuple, out);
            ops.emplace(std::make_pair(k, l), std::move(b));
        }
    }
    return make_bimodule(algebra, algebra->basis, std::move(ops));
}

AInfinityBimodule dual_bimodule(const AInfinityBimodule& bim) {
    const Field field = bim.algebra->field;
    const BasisPtr dual_module = dual(bim.module);
    const GradedBasis& A = *bim.algebra->basis;
    const GradedBasis& M = *bim.module;
    MarkedFamily ops;
    for (const auto& [lk, b] : bim.ops) {
        if (b.is_zero()) continue;
        // The (l,k) component of the original induces the (k,l) component of
        // the dual, acting through the argument-rotated original table.
        const int l = lk.first, k = lk.second;
        MultiMap bd = MultiMap::marked_map(bim.algebra->basis, dual_module, dual_module, k, l,
                                           k + l - 1, field);
        // Entries of b_{l,k}: (y_1..y_l, m, x_1..x_k) -> sum_j c_j m_j.
        for (const auto& [tuple, out] : b.table()) {
            std::vector<std::string> ys(tuple.begin(), tuple.begin() + l);
            const std::string& m_in = tuple[l];
            std::vector<std::string> xs(tuple.begin() + l + 1, tuple.end());
            long long deg_x = 0, deg_y = 0;
            for (const auto& x : xs) deg_x += A.degree(x);
            for (const auto& y : ys) deg_y += A.degree(y);
            const long long deg_m = M.degree(m_in);
            for (const auto& [m_out, c] : out.terms()) {
                // dual pairing in degree 0 forces |m_out*| = -|m_out|
                const long long deg_mstar = -M.degree(m_out);
                long long exp = deg_x * (deg_mstar + deg_y + deg_m) +
                                deg_mstar * (k + l + 1);
                std::vector<std::string> args;
                args.reserve(k + l + 1);
                args.insert(args.end(), xs.begin(), xs.end());
                args.push_back(m_out + "*");
                args.insert(args.end(), ys.begin(), ys.end());
                SparseVec v(dual_module, field);
                v.add(m_in + "*", c * sign_pow(field, exp));
                bd.set(args, v);
            }
        }
        if (!bd.is_zero()) {
            auto [it, fresh] = ops.emplace(std::make_pair(k, l), bd);
            if (!fresh) throw std::logic_error("duplicate dual component");
        }
    }
    return make_bimodule(bim.algebra, dual_module, std::move(ops));
}

AInfinityBimodule dual_self_bimodule(AlgebraPtr algebra) {
    return dual_bimodule(self_bimodule(algebra));
}

/* ------------------------------------------------------------------ */
/* checkers                                                            */
/* ------------------------------------------------------------------ */

namespace {

std::vector<std::vector<std::string>> all_tuples(const GradedBasis& basis, int len) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> cur(len);
    std::function<void(int)> walk = [&](int i) {
        if (i == len) {
            out.push_back(cur);
            return;
        }
        for (const auto& e : basis.elements()) {
            cur[i] = e.label;
            walk(i + 1);
        }
    };
    walk(0);
    return out;
}

/* Relation sweep over all degree-admissible tuples; parallel over tuples. */
template <class Eval>
void sweep_tuples(CheckEntry& entry, const std::vector<std::vector<std::string>>& tuples,
                  std::size_t mark, const Eval& eval) {
    struct ChunkResult {
        std::size_t cases = 0;
        std::vector<Counterexample> bad;
    };
    std::function<ChunkResult(std::size_t, std::size_t)> work = [&](std::size_t b, std::size_t e) {
        ChunkResult r;
        for (std::size_t i = b; i < e; ++i) {
            ++r.cases;
            SparseVec v = eval(tuples[i]);
            if (!v.is_zero() && r.bad.size() < 4)
                r.bad.push_back({tuple_str(tuples[i], mark), v.str(), "0"});
        }
        return r;
    };
    for (auto& r : parallel_chunks<ChunkResult>(tuples.size(), 64, work)) {
        entry.cases += r.cases;
        for (auto& c : r.bad) entry.fail(std::move(c));
    }
}

bool degree_admissible(const GradedBasis& out_basis, long long total_degree) {
    return total_degree >= out_basis.min_degree() && total_degree <= out_basis.max_degree();
}

CheckEntry agreement_entry(const std::vector<const CheckEntry*>& entries) {
    CheckEntry agree;
    agree.name = "formulation-agreement";
    agree.formulation = "unsuspended-relations vs suspended-bar";
    bool first = entries.front()->ok;
    agree.cases = entries.size();
    for (const CheckEntry* e : entries) {
        if (e->ok != first) {
            agree.ok = false;
            agree.notes.push_back("verdicts disagree: '" + entries.front()->name + "' says " +
                                  (first ? "pass" : "fail") + " but '" + e->name + "' says " +
                                  (e->ok ? "pass" : "fail") + " (implementation bug)");
        }
    }
    if (agree.ok)
        agree.notes.push_back(std::string("both formulations agree: ") +
                              (first ? "valid" : "invalid"));
    return agree;
}

}  // namespace

Report check_ainfinity(const AInfinityAlgebra& alg, int max_arity_override) {
    Timer timer;
    Report report;
    const int max_arity = alg.max_arity();
    const int K_max = max_arity_override > 0 ? max_arity_override
                                             : std::max(1, 2 * max_arity - 1);

    CheckEntry relations;
    relations.name = "structure-relations (arity <= " + std::to_string(K_max) + ")";
    relations.formulation = "unsuspended-relations";
    for (int K = 1; K <= K_max; ++K) {
        auto tuples = all_tuples(*alg.basis, K);
        std::vector<std::vector<std::string>> admissible;
        for (auto& t : tuples) {
            long long total = K - 3;
            for (const auto& l : t) total += alg.basis->degree(l);
            if (degree_admissible(*alg.basis, total)) admissible.push_back(std::move(t));
        }
        sweep_tuples(relations, admissible, SIZE_MAX,
                     [&](const std::vector<std::string>& t) { return algebra_relation(alg, t); });
    }
    if (max_arity_override == 0 && max_arity > 0)
        relations.notes.push_back(
            "every relation of arity > " + std::to_string(K_max) +
            " vanishes termwise: each summand would need a component of arity > " +
            std::to_string(max_arity));

    CheckEntry bar;
    bar.name = "bar-differential-squared (words <= " + std::to_string(K_max) + ")";
    bar.formulation = "suspended-bar";
    {
        CoderivationView D = alg.bar_view();
        for (const Word& w :
             enumerate_plain_words(alg.suspended_basis(), static_cast<std::size_t>(K_max), true)) {
            ++bar.cases;
            FormalSum once = D.apply(w);
            FormalSum twice(alg.field);
            for (const auto& [u, c] : once.terms()) twice += D.apply(u).scaled(c);
            if (!twice.is_zero()) bar.fail({w.str(), to_string(twice), "0"});
        }
    }

    report.add(agreement_entry({&relations, &bar}));
    report.add(std::move(relations));
    report.add(std::move(bar));
    report.seconds = timer.seconds();
    detail::store_verdict(alg.content_key(), report.pass);
    return report;
}

Report check_bimodule(const AInfinityBimodule& bim) {
    Timer timer;
    Report report;
    const AInfinityAlgebra& alg = *bim.algebra;
    const int max_total = std::max({1, alg.max_arity(), bim.max_block()});
    const int K_max = 2 * max_total - 1;

    CheckEntry base;
    base.name = "base-structure";
    base.formulation = "unsuspended-relations";
    base.cases = 1;
    base.ok = is_valid(alg);
    if (!base.ok) {
        base.notes.push_back("the underlying algebra fails its own relations");
        for (const auto& e : check_ainfinity(alg).checks)
            for (const auto& ce : e.counterexamples)
                if (base.counterexamples.size() < 2) base.counterexamples.push_back(ce);
    }

    CheckEntry relations;
    relations.name = "module-relations (blocks <= " + std::to_string(K_max) + ")";
    relations.formulation = "unsuspended-relations";
    for (int K = 1; K <= K_max; ++K) {
        for (std::size_t mark = 0; mark < static_cast<std::size_t>(K); ++mark) {
            std::vector<std::vector<std::string>> admissible;
            std::vector<std::string> cur(K);
            std::function<void(int)> walk = [&](int i) {
                if (i == K) {
                    long long total = K - 3;
                    for (int r = 0; r < K; ++r)
                        total += (static_cast<std::size_t>(r) == mark)
                                     ? bim.module->degree(cur[r])
                                     : alg.basis->degree(cur[r]);
                    if (degree_admissible(*bim.module, total)) admissible.push_back(cur);
                    return;
                }
                const GradedBasis& b =
                    (static_cast<std::size_t>(i) == mark) ? *bim.module : *alg.basis;
                for (const auto& e : b.elements()) {
                    cur[i] = e.label;
                    walk(i + 1);
                }
            };
            walk(0);
            sweep_tuples(relations, admissible, mark, [&](const std::vector<std::string>& t) {
                return bimodule_relation(bim, t, mark);
            });
        }
    }

    CheckEntry bar;
    bar.name = "module-differential-squared (words <= " + std::to_string(K_max) + ")";
    bar.formulation = "suspended-bar";
    CoderivationView DM = bim.differential_view();
    {
        for (const Word& w : enumerate_marked_words(suspend(alg.basis), suspend(bim.module),
                                                    static_cast<std::size_t>(K_max))) {
            ++bar.cases;
            FormalSum once = DM.apply(w);
            FormalSum twice(alg.field);
            for (const auto& [u, c] : once.terms()) twice += DM.apply(u).scaled(c);
            if (!twice.is_zero()) bar.fail({w.str(), to_string(twice), "0"});
        }
    }

    CheckEntry square;
    square.name = "bicomodule-compatibility-square";
    square.formulation = "suspended-bar";
    {
        auto words = enumerate_marked_words(suspend(alg.basis), suspend(bim.module),
                                            static_cast<std::size_t>(K_max));
        auto res = check_coderivation_identity(DM, words);
        square.ok = res.ok;
        square.cases = res.words_checked;
        for (const auto& f : res.failures) square.fail({f.word.str(), f.detail, "0"});
    }

    report.add(agreement_entry({&relations, &bar}));
    report.add(std::move(base));
    report.add(std::move(relations));
    report.add(std::move(bar));
    report.add(std::move(square));
    report.seconds = timer.seconds();
    detail::store_verdict(bim.content_key(), report.pass);
    return report;
}

Report check_bimodule_map(const BimoduleMorphism& mor) {
    Timer timer;
    Report report;
    const AInfinityBimodule& src = *mor.source;
    const AInfinityBimodule& tgt = *mor.target;
    const AInfinityAlgebra& alg = *src.algebra;
    int max_comp = 1;
    for (const auto& [kl, c] : mor.comps)
        if (!c.is_zero()) max_comp = std::max(max_comp, kl.first + kl.second + 1);
    const int max_total = std::max({1, alg.max_arity(), src.max_block(), tgt.max_block(), max_comp});
    const int K_max = 2 * max_total - 1;

    CheckEntry base;
    base.name = "base-structures";
    base.formulation = "unsuspended-relations";
    base.cases = 2;
    base.ok = is_valid(src) && is_valid(tgt);
    if (!base.ok) {
        base.notes.push_back("an endpoint bimodule fails its own relations");
        for (const AInfinityBimodule* end : {&src, &tgt})
            if (!is_valid(*end))
                for (const auto& e : check_bimodule(*end).checks)
                    for (const auto& ce : e.counterexamples)
                        if (base.counterexamples.size() < 2) base.counterexamples.push_back(ce);
    }

    CheckEntry relations;
    relations.name = "morphism-relations (blocks <= " + std::to_string(K_max) + ")";
    relations.formulation = "unsuspended-relations";
    for (int K = 1; K <= K_max; ++K) {
        for (std::size_t mark = 0; mark < static_cast<std::size_t>(K); ++mark) {
            std::vector<std::vector<std::string>> admissible;
            std::vector<std::string> cur(K);
            std::function<void(int)> walk = [&](int i) {
                if (i == K) {
                    long long total = K - 2;
                    for (int r = 0; r < K; ++r)
                        total += (static_cast<std::size_t>(r) == mark)
                                     ? src.module->degree(cur[r])
                                     : alg.basis->degree(cur[r]);
                    if (degree_admissible(*tgt.module, total)) admissible.push_back(cur);
                    return;
                }
                const GradedBasis& b =
                    (static_cast<std::size_t>(i) == mark) ? *src.module : *alg.basis;
                for (const auto& e : b.elements()) {
                    cur[i] = e.label;
                    walk(i + 1);
                }
            };
            walk(0);
            sweep_tuples(relations, admissible, mark, [&](const std::vector<std::string>& t) {
                return morphism_relation(mor, t, mark);
            });
        }
    }

    CheckEntry bar;
    bar.name = "chain-map-identity (words <= " + std::to_string(K_max) + ")";
    bar.formulation = "suspended-bar";
    {
        CoderivationView F = mor.view();
        CoderivationView DM = src.differential_view();
        CoderivationView DN = tgt.differential_view();
        for (const Word& w : enumerate_marked_words(suspend(alg.basis), suspend(src.module),
                                                    static_cast<std::size_t>(K_max))) {
            ++bar.cases;
            FormalSum lhs(alg.field);
            for (const auto& [u, c] : DM.apply(w).terms()) lhs += F.apply(u).scaled(c);
            FormalSum rhs(alg.field);
            for (const auto& [u, c] : F.apply(w).terms()) rhs += DN.apply(u).scaled(c);
            lhs -= rhs;
            if (!lhs.is_zero()) bar.fail({w.str(), to_string(lhs), "0"});
        }
    }

    report.add(agreement_entry({&relations, &bar}));
    report.add(std::move(base));
    report.add(std::move(relations));
    report.add(std::move(bar));
    report.seconds = timer.seconds();
    detail::store_verdict(mor.content_key(), report.pass);
    return report;
}

bool is_valid(const AInfinityAlgebra& alg) {
    return detail::cached_verdict(alg.content_key(), [&] { return check_ainfinity(alg).pass; });
}

bool is_valid(const AInfinityBimodule& bim) {
    return detail::cached_verdict(bim.content_key(), [&] { return check_bimodule(bim).pass; });
}

bool is_valid(const BimoduleMorphism& mor) {
    return detail::cached_verdict(mor.content_key(), [&] { return check_bimodule_map(mor).pass; });
}

bool is_valid(const InfinityInnerProduct& ip) {
    return detail::cached_verdict(ip.content_key(), [&] { return check_inner_product(ip).pass; });
}

}  // namespace ainfty
