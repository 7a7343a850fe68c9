#include "ainfty/word.hpp"

namespace ainfty {

Word Word::unit(BasisPtr main) {
    Word w;
    w.main_ = std::move(main);
    return w;
}

Word Word::plain(BasisPtr main, std::vector<std::string> labels) {
    Word w;
    w.main_ = std::move(main);
    w.labels_ = std::move(labels);
    for (const auto& l : w.labels_)
        if (!w.main_->contains(l))
            throw std::invalid_argument("label '" + l + "' is not in basis '" + w.main_->name() + "'");
    return w;
}

Word Word::with_mark(BasisPtr main, BasisPtr marked, std::vector<std::string> labels,
                     std::size_t mark_pos) {
    if (labels.empty()) throw std::invalid_argument("marked words are never empty");
    if (mark_pos >= labels.size()) throw std::invalid_argument("mark position out of range");
    Word w;
    w.main_ = std::move(main);
    w.marked_basis_ = std::move(marked);
    w.labels_ = std::move(labels);
    w.mark_ = mark_pos;
    for (std::size_t i = 0; i < w.labels_.size(); ++i) {
        const BasisPtr& b = (i == mark_pos) ? w.marked_basis_ : w.main_;
        if (!b->contains(w.labels_[i]))
            throw std::invalid_argument("label '" + w.labels_[i] + "' is not in basis '" + b->name() + "'");
    }
    return w;
}

BasisPtr Word::entry_basis(std::size_t i) const {
    return (mark_ && *mark_ == i) ? marked_basis_ : main_;
}

int Word::entry_degree(std::size_t i) const {
    return entry_basis(i)->degree(labels_.at(i));
}

int Word::degree() const { return degree_prefix(labels_.size()); }

int Word::degree_prefix(std::size_t count) const {
    int d = 0;
    for (std::size_t i = 0; i < count; ++i) d += entry_degree(i);
    return d;
}

bool Word::operator==(const Word& o) const { return (*this <=> o) == std::strong_ordering::equal; }

std::strong_ordering Word::operator<=>(const Word& o) const {
    auto name = [](const BasisPtr& b) -> const std::string& {
        static const std::string none;
        return b ? b->name() : none;
    };
    if (auto c = name(main_) <=> name(o.main_); c != 0) return c;
    if (auto c = name(marked_basis_) <=> name(o.marked_basis_); c != 0) return c;
    long long m1 = mark_ ? static_cast<long long>(*mark_) : -1;
    long long m2 = o.mark_ ? static_cast<long long>(*o.mark_) : -1;
    if (auto c = m1 <=> m2; c != 0) return c;
    return labels_ <=> o.labels_;
}

std::string Word::str() const {
    if (labels_.empty()) return "1";
    std::string s = "(";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) s += ",";
        if (mark_ && *mark_ == i) s += "[" + labels_[i] + "]";
        else s += labels_[i];
    }
    return s + ")";
}

std::string to_string(const FormalSum& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : s.terms()) {
        if (!out.empty()) out += " + ";
        if (!c.is_one()) out += c.str() + "*";
        out += w.str();
    }
    return out;
}

}  // namespace ainfty
