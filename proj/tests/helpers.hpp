#pragma once

/* Shared fixtures and generators for the test suites. */

#include "ainfty/io.hpp"

#include <random>

namespace testutil {

using namespace ainfty;

inline AlgebraPtr frobenius_algebra(Field field = Field::Rational) {
    BasisPtr A = make_basis("A", {{"one", 0}, {"t", 0}});
    MultiMap m2 = MultiMap::plain_map(A, A, 2, 0, field);
    Scalar one = Scalar::one(field);
    m2.set_unit({"one", "one"}, "one", one);
    m2.set_unit({"one", "t"}, "t", one);
    m2.set_unit({"t", "one"}, "t", one);
    PlainFamily ops;
    ops.emplace(2, std::move(m2));
    return std::make_shared<AInfinityAlgebra>(make_algebra(A, field, std::move(ops)));
}

inline InfinityInnerProduct frobenius_pairing(const AlgebraPtr& alg) {
    PairingTable p{0, 0, {}};
    Scalar one = Scalar::one(alg->field);
    p.values.emplace(std::vector<std::string>{"one", "t"}, one);
    p.values.emplace(std::vector<std::string>{"t", "one"}, one);
    std::map<std::pair<int, int>, PairingTable> pairings;
    pairings.emplace(std::make_pair(0, 0), std::move(p));
    return make_inner_product(alg, std::move(pairings));
}

inline AlgebraPtr exterior_algebra() {
    BasisPtr A = make_basis("A", {{"one", 0}, {"x", -1}});
    MultiMap m2 = MultiMap::plain_map(A, A, 2, 0, Field::Rational);
    Scalar one = Scalar::one(Field::Rational);
    m2.set_unit({"one", "one"}, "one", one);
    m2.set_unit({"one", "x"}, "x", one);
    m2.set_unit({"x", "one"}, "x", one);
    PlainFamily ops;
    ops.emplace(2, std::move(m2));
    return std::make_shared<AInfinityAlgebra>(make_algebra(A, Field::Rational, std::move(ops)));
}

/* Exterior algebra on one degree +1 and one degree -1 generator; the top
 * class sits in degree 0, so the coefficient-of-top pairing is exactly
 * degree-compatible.  Exercises all the degree-dependent signs. */
struct GradedFrobenius {
    AlgebraPtr algebra;
    // tau = coefficient of the top class; pairing(x,y) = (-1)^{|x|} tau(x*y)
    InfinityInnerProduct pairing;
};

inline GradedFrobenius graded_frobenius() {
    Field f = Field::Rational;
    BasisPtr A = make_basis("A", {{"one", 0}, {"a", 1}, {"b", -1}, {"c", 0}});
    MultiMap m2 = MultiMap::plain_map(A, A, 2, 0, f);
    Scalar one = Scalar::one(f);
    auto unit = [&](const char* x, const char* y, const char* out, long long coef) {
        m2.set_unit({x, y}, out, Scalar::of_int(f, coef));
    };
    unit("one", "one", "one", 1);
    unit("one", "a", "a", 1);
    unit("one", "b", "b", 1);
    unit("one", "c", "c", 1);
    unit("a", "one", "a", 1);
    unit("b", "one", "b", 1);
    unit("c", "one", "c", 1);
    unit("a", "b", "c", 1);
    unit("b", "a", "c", -1);
    PlainFamily ops;
    ops.emplace(2, std::move(m2));
    AlgebraPtr alg = std::make_shared<AInfinityAlgebra>(make_algebra(A, f, std::move(ops)));

    PairingTable p{0, 0, {}};
    // tau(one*c)=1, tau(c*one)=1, tau(a*b)=1, tau(b*a)=-1, twisted by (-1)^{|x|}
    p.values.emplace(std::vector<std::string>{"one", "c"}, one);
    p.values.emplace(std::vector<std::string>{"c", "one"}, one);
    p.values.emplace(std::vector<std::string>{"a", "b"}, Scalar::of_int(f, -1));
    p.values.emplace(std::vector<std::string>{"b", "a"}, one);
    std::map<std::pair<int, int>, PairingTable> pairings;
    pairings.emplace(std::make_pair(0, 0), std::move(p));
    return {alg, make_inner_product(alg, pairings)};
}

/* Random graded bases and degree-homogeneous component families. */
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    bool coin() { return pick(0, 1) == 1; }
};

inline BasisPtr random_basis(Rng& rng, const std::string& name) {
    int n = rng.pick(2, 3);
    std::vector<BasisElement> es;
    for (int i = 0; i < n; ++i)
        es.push_back({name + std::to_string(i), rng.pick(-2, 2)});
    return make_basis(name, std::move(es));
}

inline Scalar random_coeff(Rng& rng, Field f) {
    if (f == Field::ModTwo) return Scalar::one(f);
    int c = rng.pick(-2, 2);
    return Scalar::of_int(f, c == 0 ? 1 : c);
}

/* Fills roughly half of the degree-admissible entries. */
inline void randomize_plain(MultiMap& m, Rng& rng) {
    const auto& sig = m.plain_sig();
    std::vector<std::string> tuple(sig.arity);
    std::function<void(int, int)> walk = [&](int i, int deg) {
        if (i == sig.arity) {
            for (const auto& e : sig.out->elements())
                if (e.degree == deg + m.degree() && rng.coin())
                    m.set_unit(tuple, e.label, random_coeff(rng, m.field()));
            return;
        }
        for (const auto& e : sig.in->elements()) {
            tuple[i] = e.label;
            walk(i + 1, deg + e.degree);
        }
    };
    walk(0, 0);
}

inline void randomize_marked(MultiMap& m, Rng& rng) {
    const auto& sig = m.marked_sig();
    const int arity = sig.left + 1 + sig.right;
    std::vector<std::string> tuple(arity);
    std::function<void(int, int)> walk = [&](int i, int deg) {
        if (i == arity) {
            for (const auto& e : sig.out->elements())
                if (e.degree == deg + m.degree() && rng.coin())
                    m.set_unit(tuple, e.label, random_coeff(rng, m.field()));
            return;
        }
        const BasisPtr& b = (i == sig.left) ? sig.marked_in : sig.plain_in;
        for (const auto& e : b->elements()) {
            tuple[i] = e.label;
            walk(i + 1, deg + e.degree);
        }
    };
    walk(0, 0);
}

}  // namespace testutil
