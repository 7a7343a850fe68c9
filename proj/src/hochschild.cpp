#include "ainfty/structures.hpp"

namespace ainfty {

namespace {

CoderivationView zero_view(ViewKind kind, int degree, Field field) {
    CoderivationView v;
    v.kind = kind;
    v.degree = degree;
    v.field = field;
    return v;
}

CoderivationView from_plain_family(ViewKind kind, PlainFamily fam, int degree, Field field) {
    if (fam.empty()) return zero_view(kind, degree, field);
    CoderivationView v = (kind == ViewKind::Coderivation)
                             ? make_coderivation_view(std::move(fam))
                             : make_marked_coderivation_view(std::move(fam));
    if (v.degree != degree) throw std::logic_error("projected family has unexpected degree");
    return v;
}

}  // namespace

CoderivationView hochschild_differential(const AInfinityAlgebra& alg, const CoderivationView& f,
                                         const TruncationPolicy& trunc) {
    if (f.kind != ViewKind::Coderivation)
        throw std::invalid_argument("cochain must be a coderivation into the algebra");
    if (f.field != alg.field) throw std::invalid_argument("cochain field mismatch");
    CoderivationView D = alg.bar_view();
    const Scalar sg = sign_pow(alg.field, f.degree);
    auto bracket = [&](const Word& w) {
        FormalSum acc(alg.field);
        for (const auto& [u, c] : f.apply(w).terms()) acc += D.apply(u).scaled(c);
        for (const auto& [u, c] : D.apply(w).terms()) acc -= f.apply(u).scaled(c * sg);
        return acc;
    };
    BasisPtr sA = alg.suspended_basis();
    return from_plain_family(
        ViewKind::Coderivation,
        project_plain_evaluator(bracket, f.degree - 1, alg.field, sA, sA, false,
                                trunc.max_word_length),
        f.degree - 1, alg.field);
}

CoderivationView hochschild_differential(const AInfinityBimodule& bim, const CoderivationView& f,
                                         const TruncationPolicy& trunc) {
    if (f.kind != ViewKind::MarkedCoderivation)
        throw std::invalid_argument("cochain must be a coderivation into the module");
    const AInfinityAlgebra& alg = *bim.algebra;
    if (f.field != alg.field) throw std::invalid_argument("cochain field mismatch");
    CoderivationView D = alg.bar_view();
    CoderivationView DM = bim.differential_view();
    const Scalar sg = sign_pow(alg.field, f.degree);
    auto bracket = [&](const Word& w) {
        FormalSum acc(alg.field);
        for (const auto& [u, c] : f.apply(w).terms()) acc += DM.apply(u).scaled(c);
        for (const auto& [u, c] : D.apply(w).terms()) acc -= f.apply(u).scaled(c * sg);
        return acc;
    };
    BasisPtr sA = alg.suspended_basis();
    return from_plain_family(
        ViewKind::MarkedCoderivation,
        project_plain_evaluator(bracket, f.degree - 1, alg.field, sA, suspend(bim.module), true,
                                trunc.max_word_length),
        f.degree - 1, alg.field);
}

CoderivationView pushforward(const BimoduleMorphism& mor, const CoderivationView& f,
                             const TruncationPolicy& trunc) {
    if (f.kind != ViewKind::MarkedCoderivation)
        throw std::invalid_argument("cochain must be a coderivation into the source module");
    if (!is_valid(mor))
        throw std::invalid_argument("pushforward requires a valid bimodule map");
    const AInfinityAlgebra& alg = *mor.source->algebra;
    CoderivationView F = mor.view();
    auto composed = [&](const Word& w) {
        FormalSum acc(alg.field);
        for (const auto& [u, c] : f.apply(w).terms()) acc += F.apply(u).scaled(c);
        return acc;
    };
    BasisPtr sA = alg.suspended_basis();
    return from_plain_family(
        ViewKind::MarkedCoderivation,
        project_plain_evaluator(composed, f.degree, alg.field, sA, suspend(mor.target->module),
                                true, trunc.max_word_length),
        f.degree, alg.field);
}

}  // namespace ainfty
