#pragma once

/* Truncated tensor-coalgebra machinery: comultiplications, the lifting
 * constructions for coderivations / module differentials / comodule morphisms,
 * component projection, and the commuting-square checks.
 *
 * Every operation here is word-length non-increasing, so a truncation policy
 * bounds enumeration only; nothing is ever silently dropped. */

#include "ainfty/multimap.hpp"

#include <functional>

namespace ainfty {

struct TruncationPolicy {
    std::size_t max_word_length = 7;
    bool allows(const Word& w) const { return w.size() <= max_word_length; }
};

/* All n+1 splittings of an unmarked word, including 1 (x) w and w (x) 1. */
PairSum comultiply(const Word& word, Field field);

/* The k+1 left and l+1 right splittings of a marked word; the two full-word
 * splittings 1 (x) w and w (x) 1 both appear. */
PairSum comultiply_marked(const Word& word, Field field);

using PlainFamily = std::map<int, MultiMap>;                   // arity -> component
using MarkedFamily = std::map<std::pair<int, int>, MultiMap>;  // (k,l) -> component

/* Coderivation lift of a single plain component V^n -> V: the sum over all
 * insertion positions with the prefix Koszul sign.  Zero on words shorter
 * than n. */
FormalSum lift_coderivation(const MultiMap& component, const Word& word);

/* Same insertion sum for a component V^n -> W; the inserted output becomes
 * the marked entry. */
FormalSum lift_marked_coderivation(const MultiMap& component, const Word& word);

/* Lift of a module differential on marked words: psi-insertions strictly left
 * of the mark, rho-applications swallowing the mark, psi-insertions strictly
 * right of the mark. */
FormalSum lift_module_differential(const PlainFamily& psi, const MarkedFamily& rho,
                                   const Word& word);

/* Lift of a comodule morphism: each component consumes the contiguous block
 * around the mark exactly once; prefix and suffix pass through. */
FormalSum lift_comodule_morphism(const MarkedFamily& components, const Word& word);

enum class ViewKind { Coderivation, MarkedCoderivation, ModuleDifferential, ComoduleMorphism };

struct CoderivationView {
    ViewKind kind = ViewKind::Coderivation;
    Field field = Field::Rational;
    int degree = 0;  // common homogeneous degree of all components
    PlainFamily plain;    // components, or the psi family for ModuleDifferential
    MarkedFamily marked;  // rho family / morphism components

    FormalSum apply(const Word& word) const;
    bool is_zero() const;
    std::string content_key() const;
};

CoderivationView make_coderivation_view(PlainFamily components);
CoderivationView make_marked_coderivation_view(PlainFamily components);
CoderivationView make_module_differential_view(PlainFamily psi, MarkedFamily rho);
CoderivationView make_comodule_morphism_view(MarkedFamily components);

std::vector<Word> enumerate_plain_words(const BasisPtr& basis, std::size_t max_len,
                                        bool include_unit);
std::vector<Word> enumerate_marked_words(const BasisPtr& v, const BasisPtr& w,
                                         std::size_t max_len);

/* Corestriction components recovered by evaluation: pr composed with the view,
 * restricted to basis words.  Together with the lift constructors this
 * realizes both directions of the component/coderivation bijections. */
struct ProjectedComponents {
    PlainFamily plain;
    MarkedFamily marked;
};
ProjectedComponents project_components(const CoderivationView& view, const TruncationPolicy& trunc,
                                       const BasisPtr& domain_main, const BasisPtr& domain_marked,
                                       const BasisPtr& target_main, const BasisPtr& target_marked);

/* The same projections for an arbitrary evaluator (used for brackets and
 * compositions, which are only views after projecting). */
PlainFamily project_plain_evaluator(const std::function<FormalSum(const Word&)>& fn, int degree,
                                    Field field, const BasisPtr& domain_main,
                                    const BasisPtr& out_basis, bool into_marked, std::size_t L);
MarkedFamily project_marked_evaluator(const std::function<FormalSum(const Word&)>& fn, int degree,
                                      Field field, const BasisPtr& domain_main,
                                      const BasisPtr& domain_marked, const BasisPtr& target_marked,
                                      std::size_t L);

struct IdentityFailure {
    Word word;
    std::string detail;
};

struct IdentityCheckResult {
    bool ok = true;
    std::size_t words_checked = 0;
    std::vector<IdentityFailure> failures;
};

/* Evaluates both paths of the commuting square that characterizes the view's
 * kind, on each provided word.  A nonzero difference is reported, not thrown.
 * `override_sigma`, when set, replaces the view's own evaluation map (the
 * components stay in place for the square's structure side). */
IdentityCheckResult check_coderivation_identity(
    const CoderivationView& view, const std::vector<Word>& words,
    const std::function<FormalSum(const Word&)>& override_sigma = nullptr);

}  // namespace ainfty
