#pragma once

/* Structure bundles and their verifiers.  Every relation system is checked by
 * two independent computations: the explicit unsuspended equations with their
 * printed sign exponents, and the suspended bar-side identity obtained through
 * the lifting machinery.  The two verdicts must agree; a mismatch is an
 * implementation bug, never accepted silently. */

#include "ainfty/bar.hpp"
#include "ainfty/report.hpp"

#include <memory>

namespace ainfty {

struct AInfinityAlgebra {
    BasisPtr basis;  // unsuspended
    Field field = Field::Rational;
    PlainFamily ops;  // m_i : A^i -> A of degree i-2

    int max_arity() const;
    BasisPtr suspended_basis() const { return suspend(basis); }
    CoderivationView bar_view() const;  // degree -1 coderivation on the bar side
    std::string content_key() const;
};

using AlgebraPtr = std::shared_ptr<const AInfinityAlgebra>;

struct AInfinityBimodule {
    AlgebraPtr algebra;
    BasisPtr module;
    MarkedFamily ops;  // b_{k,l} : A^k (x) M (x) A^l -> M of degree k+l-1

    int max_block() const;  // largest k+l+1 among components
    CoderivationView differential_view() const;  // module differential on the bar side
    std::string content_key() const;
};

using BimodulePtr = std::shared_ptr<const AInfinityBimodule>;

struct BimoduleMorphism {
    BimodulePtr source;
    BimodulePtr target;
    MarkedFamily comps;  // f_{k,l} : A^k (x) M (x) A^l -> N of degree k+l

    CoderivationView view() const;  // degree 0 comodule morphism on the bar side
    std::string content_key() const;
};

struct PairingTable {
    int left = 0, right = 0;  // (k, l); the pairing takes k+l+2 arguments
    std::map<std::vector<std::string>, Scalar> values;  // nonzero only
};

struct InfinityInnerProduct {
    AlgebraPtr algebra;
    std::map<std::pair<int, int>, PairingTable> pairings;
    std::string content_key() const;
};

/* Validating constructors.  All of them audit arities, bases and the declared
 * degrees (i-2, k+l-1, k+l, and total pairing degree -(k+l)). */
AInfinityAlgebra make_algebra(BasisPtr basis, Field field, PlainFamily ops);
AInfinityBimodule make_bimodule(AlgebraPtr algebra, BasisPtr module, MarkedFamily ops);
BimoduleMorphism make_morphism(BimodulePtr source, BimodulePtr target, MarkedFamily comps);
InfinityInnerProduct make_inner_product(AlgebraPtr algebra,
                                        std::map<std::pair<int, int>, PairingTable> pairings);

/* Classical reductions: a differential graded algebra, a dg-bimodule over it,
 * and a dg-bimodule map.  Higher components are zero. */
AInfinityAlgebra from_dga(BasisPtr basis, Field field, const MultiMap* differential,
                          const MultiMap* product);
AInfinityBimodule from_dg_bimodule(AlgebraPtr algebra, BasisPtr module,
                                   const MultiMap* differential, const MultiMap* left_action,
                                   const MultiMap* right_action);
BimoduleMorphism from_dg_bimodule_map(BimodulePtr source, BimodulePtr target, const MultiMap& f);

/* Canonical bimodule structures on A and on its dual. */
AInfinityBimodule self_bimodule(AlgebraPtr algebra);
AInfinityBimodule dual_bimodule(const AInfinityBimodule& bim);
AInfinityBimodule dual_self_bimodule(AlgebraPtr algebra);

/* Pairing-form <-> morphism-form conversion; round trip is the identity. */
BimoduleMorphism to_bimodule_morphism(const InfinityInnerProduct& ip);
InfinityInnerProduct to_inner_product(const BimoduleMorphism& mor);

/* Checkers.  Each runs both formulations and reports whether they agree. */
Report check_ainfinity(const AInfinityAlgebra& alg, int max_arity_override = 0);
Report check_bimodule(const AInfinityBimodule& bim);
Report check_bimodule_map(const BimoduleMorphism& mor);
Report check_inner_product(const InfinityInnerProduct& ip);

/* Memoized pass/fail verdicts keyed by bundle content. */
bool is_valid(const AInfinityAlgebra& alg);
bool is_valid(const AInfinityBimodule& bim);
bool is_valid(const BimoduleMorphism& mor);
bool is_valid(const InfinityInnerProduct& ip);

/* Relation sums evaluated at one basis tuple; zero iff the relation holds
 * there.  Exposed for the checkers and for tests. */
SparseVec algebra_relation(const AInfinityAlgebra& alg, const std::vector<std::string>& tuple);
SparseVec bimodule_relation(const AInfinityBimodule& bim, const std::vector<std::string>& tuple,
                            std::size_t mark);
SparseVec morphism_relation(const BimoduleMorphism& mor, const std::vector<std::string>& tuple,
                            std::size_t mark);
/* The cyclic pairing relation at one (k,l) and one (k+l+2)-tuple: derivative
 * sum minus all single multiplications preserving the cyclic order, the two
 * special arguments never multiplied together. */
Scalar pairing_relation(const InfinityInnerProduct& ip, int k, int l,
                        const std::vector<std::string>& tuple);

/* Hochschild differential [D, f] (values in the algebra or in a bimodule) and
 * the pushforward of cochains along a bimodule map, returned as component
 * families recovered by projection. */
CoderivationView hochschild_differential(const AInfinityAlgebra& alg, const CoderivationView& f,
                                         const TruncationPolicy& trunc);
CoderivationView hochschild_differential(const AInfinityBimodule& bim, const CoderivationView& f,
                                         const TruncationPolicy& trunc);
CoderivationView pushforward(const BimoduleMorphism& mor, const CoderivationView& f,
                             const TruncationPolicy& trunc);

}  // namespace ainfty
