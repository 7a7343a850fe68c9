#include "ainfty/multimap.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ainfty {

MultiMap MultiMap::plain_map(BasisPtr in, BasisPtr out, int arity, int degree, Field field,
                             bool suspended) {
    if (arity < 1) throw std::invalid_argument("plain map arity must be >= 1");
    MultiMap m;
    m.sig_ = PlainSignature{std::move(in), std::move(out), arity};
    m.degree_ = degree;
    m.field_ = field;
    m.suspended_ = suspended;
    return m;
}

MultiMap MultiMap::marked_map(BasisPtr v, BasisPtr w, BasisPtr out, int left, int right,
                              int degree, Field field, bool suspended) {
    if (left < 0 || right < 0) throw std::invalid_argument("marked map slots must be >= 0");
    MultiMap m;
    m.sig_ = MarkedSignature{std::move(v), std::move(w), std::move(out), left, right};
    m.degree_ = degree;
    m.field_ = field;
    m.suspended_ = suspended;
    return m;
}

int MultiMap::arity() const {
    if (is_plain()) return plain_sig().arity;
    const auto& s = marked_sig();
    return s.left + 1 + s.right;
}

const BasisPtr& MultiMap::out_basis() const {
    return is_plain() ? plain_sig().out : marked_sig().out;
}

BasisPtr MultiMap::slot_basis(int slot) const {
    if (slot < 0 || slot >= arity()) throw std::invalid_argument("slot out of range");
    if (is_plain()) return plain_sig().in;
    const auto& s = marked_sig();
    return slot == s.left ? s.marked_in : s.plain_in;
}

int MultiMap::mark_slot() const { return is_plain() ? -1 : marked_sig().left; }

void MultiMap::check_tuple(const std::vector<std::string>& inputs) const {
    if (static_cast<int>(inputs.size()) != arity())
        throw std::invalid_argument("input tuple length does not match map arity");
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        BasisPtr b = slot_basis(static_cast<int>(i));
        if (!b->contains(inputs[i]))
            throw std::invalid_argument("label '" + inputs[i] + "' is not in basis '" + b->name() + "'");
    }
}

void MultiMap::set(const std::vector<std::string>& inputs, const SparseVec& out) {
    check_tuple(inputs);
    if (!same_basis(out.basis(), out_basis()))
        throw std::invalid_argument("output vector lives in the wrong basis");
    if (out.field() != field_) throw std::invalid_argument("output field mismatch");
    int in_deg = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i)
        in_deg += slot_basis(static_cast<int>(i))->degree(inputs[i]);
    for (const auto& [label, c] : out.terms()) {
        int od = out_basis()->degree(label);
        if (od != in_deg + degree_) {
            std::ostringstream msg;
            msg << "degree audit failed: entry (";
            for (std::size_t i = 0; i < inputs.size(); ++i) msg << (i ? "," : "") << inputs[i];
            msg << ") -> " << label << " has |output| = " << od << " but |inputs| + degree = "
                << in_deg << " + " << degree_;
            throw std::invalid_argument(msg.str());
        }
    }
    auto it = table_.find(inputs);
    if (it == table_.end()) {
        if (!out.is_zero()) table_.emplace(inputs, out);
        return;
    }
    it->second += out;
    if (it->second.is_zero()) table_.erase(it);
}

void MultiMap::set_unit(const std::vector<std::string>& inputs, const std::string& out_label,
                        const Scalar& c) {
    SparseVec v(out_basis(), field_);
    v.add(out_label, c);
    set(inputs, v);
}

SparseVec MultiMap::apply(const std::vector<std::string>& inputs) const {
    check_tuple(inputs);
    auto it = table_.find(inputs);
    return it == table_.end() ? SparseVec(out_basis(), field_) : it->second;
}

SparseVec MultiMap::apply_multilinear(const std::vector<SparseVec>& inputs) const {
    if (static_cast<int>(inputs.size()) != arity())
        throw std::invalid_argument("input count does not match map arity");
    SparseVec acc(out_basis(), field_);
    std::vector<std::string> tuple(inputs.size());
    std::function<void(std::size_t, Scalar)> walk = [&](std::size_t i, Scalar c) {
        if (i == inputs.size()) {
            auto it = table_.find(tuple);
            if (it != table_.end()) acc += it->second.scaled(c);
            return;
        }
        for (const auto& [label, coef] : inputs[i].terms()) {
            tuple[i] = label;
            walk(i + 1, c * coef);
        }
    };
    walk(0, Scalar::one(field_));
    return acc;
}

MultiMap MultiMap::suspend_conjugate(bool to_suspended) const {
    if (to_suspended == suspended_)
        throw std::invalid_argument("map is already on the requested side");
    auto shift = to_suspended ? &suspend : &unsuspend;
    MultiMap r;
    if (is_plain()) {
        const auto& s = plain_sig();
        r.sig_ = PlainSignature{shift(s.in), shift(s.out), s.arity};
    } else {
        const auto& s = marked_sig();
        r.sig_ = MarkedSignature{shift(s.plain_in), shift(s.marked_in), shift(s.out), s.left, s.right};
    }
    const int n = arity();
    r.degree_ = to_suspended ? degree_ + 1 - n : degree_ - 1 + n;
    r.field_ = field_;
    r.suspended_ = to_suspended;
    for (const auto& [inputs, out] : table_) {
        // Sign from sliding one shift past each earlier slot: per slot j the
        // exponent counts the later slots, weighted by the slot's unsuspended
        // degree + 1 (= its suspended degree).
        long long exp = 0;
        for (int j = 0; j < n; ++j) {
            int d = slot_basis(j)->degree(inputs[j]);
            int unsus = suspended_ ? d - 1 : d;
            exp += static_cast<long long>(n - 1 - j) * (unsus + 1);
        }
        SparseVec nv(r.out_basis(), field_);
        for (const auto& [label, c] : out.terms()) nv.add(label, c * sign_pow(field_, exp));
        r.set(inputs, nv);
    }
    return r;
}

bool MultiMap::operator==(const MultiMap& o) const {
    if (is_plain() != o.is_plain() || degree_ != o.degree_ || suspended_ != o.suspended_ ||
        field_ != o.field_)
        return false;
    if (is_plain()) {
        const auto &a = plain_sig(), &b = o.plain_sig();
        if (a.arity != b.arity || !same_basis(a.in, b.in) || !same_basis(a.out, b.out)) return false;
    } else {
        const auto &a = marked_sig(), &b = o.marked_sig();
        if (a.left != b.left || a.right != b.right || !same_basis(a.plain_in, b.plain_in) ||
            !same_basis(a.marked_in, b.marked_in) || !same_basis(a.out, b.out))
            return false;
    }
    return table_ == o.table_;
}

std::string MultiMap::content_key() const {
    std::ostringstream os;
    if (is_plain()) {
        const auto& s = plain_sig();
        os << "plain:" << s.in->name() << "->" << s.out->name() << ":n=" << s.arity;
    } else {
        const auto& s = marked_sig();
        os << "marked:" << s.plain_in->name() << "|" << s.marked_in->name() << "->"
           << s.out->name() << ":k=" << s.left << ",l=" << s.right;
    }
    os << ":deg=" << degree_ << ":s=" << suspended_ << "{";
    for (const auto& [inputs, out] : table_) {
        os << "(";
        for (std::size_t i = 0; i < inputs.size(); ++i) os << (i ? "," : "") << inputs[i];
        os << ")->" << out.str() << ";";
    }
    os << "}";
    return os.str();
}

FormalSum tensor_apply(const std::vector<TensorSlot>& slots, const Word& word, Field f) {
    int total = 0;
    for (const auto& s : slots) total += s.width();
    if (total != static_cast<int>(word.size()))
        throw std::invalid_argument("tensor factor arities do not sum to the word length");

    struct OutEntry {
        SparseVec vec;            // for map slots
        std::string pass_label;   // for identity slots
        BasisPtr basis;
        bool from_identity = false;
        bool is_marked = false;
    };

    // Lay out blocks, check mark alignment, and collect per-slot outputs.
    std::vector<OutEntry> outs;
    outs.reserve(slots.size());
    int pos = 0;
    Scalar sign = Scalar::one(f);
    for (const auto& s : slots) {
        int width = s.width();
        bool block_has_mark =
            word.marked() && word.mark() >= static_cast<std::size_t>(pos) &&
            word.mark() < static_cast<std::size_t>(pos + width);
        if (!s.map) {
            OutEntry e{SparseVec(word.entry_basis(pos), f), word.label(pos),
                       word.entry_basis(pos), true, block_has_mark};
            outs.push_back(std::move(e));
        } else {
            const MultiMap& m = *s.map;
            if (m.field() != f) throw std::invalid_argument("mixed-field tensor factors");
            if (m.is_plain()) {
                if (block_has_mark)
                    throw std::invalid_argument("plain factor cannot consume the marked entry");
                if (!same_basis(m.plain_sig().in, word.main_basis()))
                    throw std::invalid_argument("tensor factor input basis mismatch");
            } else {
                if (!block_has_mark ||
                    word.mark() != static_cast<std::size_t>(pos + m.marked_sig().left))
                    throw std::invalid_argument("marked factor does not align with the mark");
            }
            std::vector<std::string> tuple(word.labels().begin() + pos,
                                           word.labels().begin() + pos + width);
            sign *= sign_pow(f, static_cast<long long>(m.degree()) * word.degree_prefix(pos));
            bool out_marked = block_has_mark || !same_basis(m.out_basis(), word.main_basis());
            outs.push_back(OutEntry{m.apply(tuple), "", m.out_basis(), false, out_marked});
        }
        pos += width;
    }

    // The result is a word per combination of output terms.
    BasisPtr out_main, out_marked_basis;
    std::optional<std::size_t> out_mark;
    for (std::size_t i = 0; i < outs.size(); ++i) {
        if (outs[i].is_marked) {
            if (out_mark) throw std::invalid_argument("tensor result has two marked entries");
            out_mark = i;
            out_marked_basis = outs[i].basis;
        } else {
            if (out_main && !same_basis(out_main, outs[i].basis))
                throw std::invalid_argument("tensor result mixes plain bases");
            out_main = outs[i].basis;
        }
    }
    if (!out_main) out_main = word.main_basis();

    FormalSum result(f);
    std::vector<std::string> labels(outs.size());
    std::function<void(std::size_t, Scalar)> walk = [&](std::size_t i, Scalar c) {
        if (i == outs.size()) {
            Word w = out_mark ? Word::with_mark(out_main, out_marked_basis, labels, *out_mark)
                              : Word::plain(out_main, labels);
            result.add(w, c);
            return;
        }
        if (outs[i].from_identity) {
            labels[i] = outs[i].pass_label;
            walk(i + 1, c);
            return;
        }
        for (const auto& [label, coef] : outs[i].vec.terms()) {
            labels[i] = label;
            walk(i + 1, c * coef);
        }
    };
    walk(0, sign);
    return result;
}

}  // namespace ainfty
