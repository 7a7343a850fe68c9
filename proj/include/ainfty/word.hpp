#pragma once

/* Tensor words: tuples of basis labels, optionally with one marked entry drawn
 * from a second module.  The empty unmarked word is the coalgebra unit. */

#include "ainfty/basis.hpp"

#include <compare>
#include <cstddef>
#include <optional>

namespace ainfty {

class Word {
public:
    static Word unit(BasisPtr main);
    static Word plain(BasisPtr main, std::vector<std::string> labels);
    static Word with_mark(BasisPtr main, BasisPtr marked, std::vector<std::string> labels,
                          std::size_t mark_pos);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    bool marked() const { return mark_.has_value(); }
    std::size_t mark() const { return *mark_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const BasisPtr& main_basis() const { return main_; }
    const BasisPtr& marked_basis() const { return marked_basis_; }
    BasisPtr entry_basis(std::size_t i) const;

    int entry_degree(std::size_t i) const;
    int degree() const;                       // sum of entry degrees
    int degree_prefix(std::size_t count) const;  // sum over the first `count` entries

    bool operator==(const Word& o) const;
    std::strong_ordering operator<=>(const Word& o) const;

    std::string str() const;

private:
    Word() = default;
    BasisPtr main_;
    BasisPtr marked_basis_;  // null for plain words
    std::vector<std::string> labels_;
    std::optional<std::size_t> mark_;
};

/* Sparse scalar combination keyed by an ordered type (words, word pairs, ...). */
template <class K>
class Combo {
public:
    explicit Combo(Field f) : field_(f) {}

    Field field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    // Ref-qualified so iterating the terms of a temporary sum stays safe.
    const std::map<K, Scalar>& terms() const& { return terms_; }
    std::map<K, Scalar> terms() const&& { return terms_; }

    void add(const K& key, const Scalar& c) {
        if (c.field() != field_) throw std::invalid_argument("mixed-field combination");
        if (c.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Combo& operator+=(const Combo& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }

    Combo& operator-=(const Combo& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }

    Combo scaled(const Scalar& c) const {
        Combo r(field_);
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) r.add(k, v * c);
        return r;
    }

    Scalar coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    bool operator==(const Combo& o) const { return field_ == o.field_ && terms_ == o.terms_; }

private:
    Field field_;
    std::map<K, Scalar> terms_;
};

using FormalSum = Combo<Word>;
using PairSum = Combo<std::pair<Word, Word>>;

std::string to_string(const FormalSum& s);

}  // namespace ainfty
