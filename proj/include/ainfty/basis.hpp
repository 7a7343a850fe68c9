#pragma once

/* Finite graded bases and the named-label vectors over them. */

#include "ainfty/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace ainfty {

struct BasisElement {
    std::string label;
    int degree = 0;
    bool operator==(const BasisElement&) const = default;
};

class GradedBasis {
public:
    GradedBasis(std::string name, std::vector<BasisElement> elements);

    const std::string& name() const { return name_; }
    const std::vector<BasisElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    bool contains(const std::string& label) const { return index_.count(label) != 0; }
    int degree(const std::string& label) const;
    std::size_t index(const std::string& label) const;
    const std::string& label_at(std::size_t i) const { return elements_.at(i).label; }
    bool has_degree(int d) const;
    int min_degree() const { return min_deg_; }
    int max_degree() const { return max_deg_; }

    bool operator==(const GradedBasis& o) const {
        return name_ == o.name_ && elements_ == o.elements_;
    }

private:
    std::string name_;
    std::vector<BasisElement> elements_;
    std::map<std::string, std::size_t> index_;
    int min_deg_ = 0, max_deg_ = 0;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

BasisPtr make_basis(std::string name, std::vector<BasisElement> elements);
// Same labels, degrees shifted by +1 / -1.
BasisPtr suspend(const BasisPtr& b);
BasisPtr unsuspend(const BasisPtr& b);
// Dual basis: labels decorated with '*', degrees negated, so evaluation pairs in degree 0.
BasisPtr dual(const BasisPtr& b);

bool same_basis(const BasisPtr& a, const BasisPtr& b);

/* Sparse homogeneous-or-not linear combination over one basis. */
class SparseVec {
public:
    SparseVec(BasisPtr basis, Field field) : basis_(std::move(basis)), field_(field) {}

    static SparseVec unit(const BasisPtr& basis, Field field, const std::string& label) {
        SparseVec v(basis, field);
        v.add(label, Scalar::one(field));
        return v;
    }

    const BasisPtr& basis() const { return basis_; }
    Field field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    // Ref-qualified so iterating the terms of a temporary stays safe.
    const std::map<std::string, Scalar>& terms() const& { return terms_; }
    std::map<std::string, Scalar> terms() const&& { return terms_; }

    void add(const std::string& label, const Scalar& c);
    SparseVec& operator+=(const SparseVec& o);
    SparseVec& operator-=(const SparseVec& o);
    SparseVec scaled(const Scalar& c) const;
    Scalar coeff(const std::string& label) const;

    bool homogeneous() const { return degree().has_value() || is_zero(); }
    // Defined only when every stored label has one common degree.
    std::optional<int> degree() const;

    bool operator==(const SparseVec& o) const;
    std::string str() const;

private:
    BasisPtr basis_;
    Field field_;
    std::map<std::string, Scalar> terms_;  // nonzero only
};

}  // namespace ainfty
