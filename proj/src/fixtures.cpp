#include "ainfty/io.hpp"

namespace ainfty {

namespace {

Bundles exterior_1gen() {
    Bundles b;
    b.field = Field::Rational;
    BasisPtr A = make_basis("A", {{"one", 0}, {"x", -1}});
    b.bases.emplace("A", A);
    MultiMap m2 = MultiMap::plain_map(A, A, 2, 0, b.field);
    Scalar one = Scalar::one(b.field);
    m2.set_unit({"one", "one"}, "one", one);
    m2.set_unit({"one", "x"}, "x", one);
    m2.set_unit({"x", "one"}, "x", one);
    PlainFamily ops;
    ops.emplace(2, std::move(m2));
    b.algebras.emplace("A", std::make_shared<AInfinityAlgebra>(make_algebra(A, b.field, ops)));
    b.order.emplace_back("algebra", "A");
    return b;
}

Bundles frobenius_1t() {
    Bundles b;
    b.field = Field::Rational;
    BasisPtr A = make_basis("A", {{"one", 0}, {"t", 0}});
    b.bases.emplace("A", A);
    MultiMap m2 = MultiMap::plain_map(A, A, 2, 0, b.field);
    Scalar one = Scalar::one(b.field);
    m2.set_unit({"one", "one"}, "one", one);
    m2.set_unit({"one", "t"}, "t", one);
    m2.set_unit({"t", "one"}, "t", one);
    PlainFamily ops;
    ops.emplace(2, std::move(m2));
    AlgebraPtr alg = std::make_shared<AInfinityAlgebra>(make_algebra(A, b.field, ops));
    b.algebras.emplace("A", alg);
    b.order.emplace_back("algebra", "A");

    PairingTable p{0, 0, {}};
    p.values.emplace(std::vector<std::string>{"one", "t"}, one);
    p.values.emplace(std::vector<std::string>{"t", "one"}, one);
    std::map<std::pair<int, int>, PairingTable> pairings;
    pairings.emplace(std::make_pair(0, 0), std::move(p));
    b.inner_products.emplace("pairing", make_inner_product(alg, std::move(pairings)));
    b.order.emplace_back("inner_product", "pairing");
    return b;
}

Bundles dga_nonassoc_mutant() {
    Bundles b;
    b.field = Field::Rational;
    BasisPtr A = make_basis("A", {{"u", 0}, {"v", 0}});
    b.bases.emplace("A", A);
    MultiMap m2 = MultiMap::plain_map(A, A, 2, 0, b.field);
    Scalar one = Scalar::one(b.field);
    // (u*u)*u = v*u = u while u*(u*u) = u*v = 0: associativity fails.
    m2.set_unit({"u", "u"}, "v", one);
    m2.set_unit({"v", "u"}, "u", one);
    PlainFamily ops;
    ops.emplace(2, std::move(m2));
    b.algebras.emplace("A", std::make_shared<AInfinityAlgebra>(make_algebra(A, b.field, ops)));
    b.order.emplace_back("algebra", "A");
    return b;
}

Bundles small_m3_mod2() {
    Bundles b;
    b.field = Field::ModTwo;
    BasisPtr A = make_basis("A", {{"x", 0}, {"y", 1}});
    b.bases.emplace("A", A);
    MultiMap m3 = MultiMap::plain_map(A, A, 3, 1, b.field);
    m3.set_unit({"x", "x", "x"}, "y", Scalar::one(b.field));
    PlainFamily ops;
    ops.emplace(3, std::move(m3));
    b.algebras.emplace("A", std::make_shared<AInfinityAlgebra>(make_algebra(A, b.field, ops)));
    b.order.emplace_back("algebra", "A");
    return b;
}

}  // namespace

std::vector<std::string> example_names() {
    return {"exterior-1gen", "frobenius-1t", "dga-nonassoc-mutant", "small-m3-mod2"};
}

Bundles example_bundles(const std::string& name) {
    if (name == "exterior-1gen") return exterior_1gen();
    if (name == "frobenius-1t") return frobenius_1t();
    if (name == "dga-nonassoc-mutant") return dga_nonassoc_mutant();
    if (name == "small-m3-mod2") return small_m3_mod2();
    throw std::invalid_argument("unknown example '" + name + "'");
}

std::string example_file(const std::string& name) {
    return serialize_structures(example_bundles(name));
}

}  // namespace ainfty
