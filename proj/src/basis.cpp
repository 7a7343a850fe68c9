#include "ainfty/basis.hpp"

#include <algorithm>

namespace ainfty {

GradedBasis::GradedBasis(std::string name, std::vector<BasisElement> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
    if (elements_.empty())
        throw std::invalid_argument("basis '" + name_ + "' is empty");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i].label.empty())
            throw std::invalid_argument("basis '" + name_ + "' has an unnamed element");
        if (!index_.emplace(elements_[i].label, i).second)
            throw std::invalid_argument("basis '" + name_ + "' repeats label '" + elements_[i].label + "'");
    }
    min_deg_ = max_deg_ = elements_[0].degree;
    for (const auto& e : elements_) {
        min_deg_ = std::min(min_deg_, e.degree);
        max_deg_ = std::max(max_deg_, e.degree);
    }
}

int GradedBasis::degree(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw std::invalid_argument("label '" + label + "' is not in basis '" + name_ + "'");
    return elements_[it->second].degree;
}

std::size_t GradedBasis::index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw std::invalid_argument("label '" + label + "' is not in basis '" + name_ + "'");
    return it->second;
}

bool GradedBasis::has_degree(int d) const {
    return std::any_of(elements_.begin(), elements_.end(),
                       [d](const BasisElement& e) { return e.degree == d; });
}

BasisPtr make_basis(std::string name, std::vector<BasisElement> elements) {
    return std::make_shared<GradedBasis>(std::move(name), std::move(elements));
}

static BasisPtr shifted(const BasisPtr& b, int shift, const std::string& prefix) {
    std::vector<BasisElement> es = b->elements();
    for (auto& e : es) e.degree += shift;
    return make_basis(prefix + b->name(), std::move(es));
}

BasisPtr suspend(const BasisPtr& b) { return shifted(b, +1, "s"); }

BasisPtr unsuspend(const BasisPtr& b) {
    std::vector<BasisElement> es = b->elements();
    for (auto& e : es) e.degree -= 1;
    std::string n = b->name();
    if (n.size() > 1 && n.front() == 's') n = n.substr(1);
    return make_basis(n, std::move(es));
}

BasisPtr dual(const BasisPtr& b) {
    std::vector<BasisElement> es = b->elements();
    for (auto& e : es) {
        e.label += "*";
        e.degree = -e.degree;
    }
    return make_basis(b->name() + "*", std::move(es));
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void SparseVec::add(const std::string& label, const Scalar& c) {
    if (c.field() != field_) throw std::invalid_argument("mixed-field vector term");
    if (!basis_->contains(label))
        throw std::invalid_argument("label '" + label + "' is not in basis '" + basis_->name() + "'");
    auto it = terms_.find(label);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(label, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
    if (!same_basis(basis_, o.basis_)) throw std::invalid_argument("mixed-basis vector sum");
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
    if (!same_basis(basis_, o.basis_)) throw std::invalid_argument("mixed-basis vector sum");
    for (const auto& [l, c] : o.terms_) add(l, -c);
    return *this;
}

SparseVec SparseVec::scaled(const Scalar& c) const {
    SparseVec r(basis_, field_);
    if (c.is_zero()) return r;
    for (const auto& [l, v] : terms_) r.add(l, v * c);
    return r;
}

Scalar SparseVec::coeff(const std::string& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::optional<int> SparseVec::degree() const {
    std::optional<int> d;
    for (const auto& [l, c] : terms_) {
        int ld = basis_->degree(l);
        if (!d) d = ld;
        else if (*d != ld) return std::nullopt;
    }
    return d;
}

bool SparseVec::operator==(const SparseVec& o) const {
    return field_ == o.field_ && same_basis(basis_, o.basis_) && terms_ == o.terms_;
}

std::string SparseVec::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [l, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (c.is_one()) s += l;
        else s += c.str() + "*" + l;
    }
    return s;
}

}  // namespace ainfty
