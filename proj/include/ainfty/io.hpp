#pragma once

/* Declarative structure files (versioned JSON), canonical serialization, and
 * the shipped example fixtures. */

#include "ainfty/structures.hpp"

namespace ainfty {

struct Bundles {
    Field field = Field::Rational;
    std::map<std::string, BasisPtr> bases;
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, BimodulePtr> bimodules;
    std::map<std::string, BimoduleMorphism> morphisms;
    std::map<std::string, InfinityInnerProduct> inner_products;
    // file order of (kind, name), for stable round trips
    std::vector<std::pair<std::string, std::string>> order;
    // bimodules declared canonically: name -> "self" | "dual-self" (+ algebra)
    std::map<std::string, std::pair<std::string, std::string>> canonical_bimodules;

    const AInfinityAlgebra& sole_algebra(const std::string& name = "") const;
    const AInfinityBimodule& sole_bimodule(const std::string& name = "") const;
    const BimoduleMorphism& sole_morphism(const std::string& name = "") const;
    const InfinityInnerProduct& sole_inner_product(const std::string& name = "") const;
};

Bundles parse_structures(const std::string& json_text, const std::string& origin);
Bundles load_structures(const std::string& path);
std::string serialize_structures(const Bundles& b);
void save_structures(const Bundles& b, const std::string& path);

std::string report_json(const Report& r);

std::vector<std::string> example_names();
Bundles example_bundles(const std::string& name);
std::string example_file(const std::string& name);  // canonical JSON text

}  // namespace ainfty
