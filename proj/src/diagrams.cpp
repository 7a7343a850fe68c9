#include "ainfty/diagrams.hpp"

#include <functional>
#include <sstream>

namespace ainfty {

Tree Tree::corolla(int n) {
    if (n < 2) throw std::invalid_argument("multiplication vertices need arity >= 2");
    Tree t;
    t.children.assign(n, Tree{});
    return t;
}

int Tree::leaf_count() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const Tree& c : children) n += c.leaf_count();
    return n;
}

int Tree::arity_excess() const {
    if (is_leaf()) return 0;
    int e = static_cast<int>(children.size()) - 2;
    for (const Tree& c : children) e += c.arity_excess();
    return e;
}

std::string Tree::serial() const {
    if (is_leaf()) return "*";
    std::string s = "(";
    for (const Tree& c : children) s += c.serial();
    return s + ")";
}

int Tree::compare(const Tree& a, const Tree& b) {
    if (a.children.size() != b.children.size())
        return a.children.size() < b.children.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (int c = compare(a.children[i], b.children[i]); c != 0) return c;
    return 0;
}

namespace {

void validate_tree(const Tree& t) {
    if (t.is_leaf()) return;
    if (t.children.size() < 2)
        throw std::invalid_argument("internal diagram vertices need arity >= 2");
    for (const Tree& c : t.children) validate_tree(c);
}

}  // namespace

Diagram::Diagram() { seal(); }

Diagram Diagram::bare(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("slot counts must be >= 0");
    Diagram d;
    d.top_.assign(k, Tree::leaf());
    d.bottom_.assign(l, Tree::leaf());
    d.seal();
    return d;
}

Diagram Diagram::assemble(std::vector<Tree> top, Tree left, std::vector<Tree> bottom, Tree right,
                          int right_wrap) {
    Diagram d;
    d.top_ = std::move(top);
    d.left_ = std::move(left);
    d.bottom_ = std::move(bottom);
    d.right_ = std::move(right);
    d.right_wrap_ = right_wrap;
    d.seal();
    return d;
}

void Diagram::seal() {
    for (const Tree& t : top_) validate_tree(t);
    validate_tree(left_);
    for (const Tree& t : bottom_) validate_tree(t);
    validate_tree(right_);
    if (right_wrap_ < 1 || right_wrap_ > right_.leaf_count())
        throw std::invalid_argument("right wrap offset out of range");
    // Canonical form: slots in drawn order (top left-to-right, left, bottom
    // left-to-right, right), preorder per slot, wrap offset appended.
    std::ostringstream os;
    os << "t[";
    for (auto it = top_.rbegin(); it != top_.rend(); ++it) os << it->serial();
    os << "]l" << left_.serial() << "b[";
    for (const Tree& t : bottom_) os << t.serial();
    os << "]r" << right_.serial() << "w" << right_wrap_;
    serial_ = os.str();
}

int Diagram::degree() const {
    int d = top_count() + bottom_count();
    for (const Tree& t : top_) d += t.arity_excess();
    d += left_.arity_excess();
    for (const Tree& t : bottom_) d += t.arity_excess();
    d += right_.arity_excess();
    return d;
}

int Diagram::leaf_count() const {
    int n = 0;
    for (const Tree& t : top_) n += t.leaf_count();
    n += left_.leaf_count();
    for (const Tree& t : bottom_) n += t.leaf_count();
    n += right_.leaf_count();
    return n;
}

std::string Diagram::serial() const { return serial_; }

std::vector<std::vector<int>> slot_leaf_globals(const Diagram& d) {
    const int N = d.leaf_count();
    const int p = d.right().leaf_count();
    const int wrap = d.right_wrap();
    std::vector<std::vector<int>> out;
    int next = p - wrap;  // the right tree's leading leaves open the cycle
    auto take = [&](const Tree& t) {
        std::vector<int> g(t.leaf_count());
        for (int i = 0; i < static_cast<int>(g.size()); ++i) g[i] = next++;
        return g;
    };
    for (const Tree& t : d.top()) out.push_back(take(t));
    out.push_back(take(d.left()));
    for (const Tree& t : d.bottom()) out.push_back(take(t));
    std::vector<int> right(p);
    for (int j = 0; j < p; ++j) right[j] = j < wrap ? N - wrap + j : j - wrap;
    out.push_back(std::move(right));
    return out;
}

namespace {

void display_tree(std::ostringstream& os, const Tree& t, const std::vector<int>& globals,
                  int& cursor) {
    if (t.is_leaf()) {
        os << "a" << globals[cursor++] + 1;
        return;
    }
    os << "m" << t.children.size() << "(";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) os << ",";
        display_tree(os, t.children[i], globals, cursor);
    }
    os << ")";
}

}  // namespace

std::string Diagram::display() const {
    auto globals = slot_leaf_globals(*this);
    std::ostringstream os;
    os << "<";
    std::size_t slot = 0;
    bool first = true;
    auto emit = [&](const Tree& t) {
        if (!first) os << ",";
        first = false;
        int cursor = 0;
        display_tree(os, t, globals[slot++], cursor);
    };
    for (const Tree& t : top_) emit(t);
    emit(left_);
    for (const Tree& t : bottom_) emit(t);
    emit(right_);
    os << ">_{" << top_count() << "," << bottom_count() << "}";
    return os.str();
}

/* ------------------------------------------------------------------ */
/* differential                                                        */
/* ------------------------------------------------------------------ */

namespace {

const Tree& slot_tree(const Diagram& d, const SlotRef& s) {
    switch (s.kind) {
        case SlotRef::Kind::Top: return d.top().at(s.index);
        case SlotRef::Kind::Left: return d.left();
        case SlotRef::Kind::Bottom: return d.bottom().at(s.index);
        case SlotRef::Kind::Right: return d.right();
    }
    throw std::logic_error("bad slot");
}

Tree replace_at(const Tree& t, const std::vector<int>& path, std::size_t depth,
                int child_start, int child_len) {
    Tree out = t;
    if (depth == path.size()) {
        Tree grouped;
        grouped.children.assign(t.children.begin() + child_start,
                                t.children.begin() + child_start + child_len);
        out.children.erase(out.children.begin() + child_start,
                           out.children.begin() + child_start + child_len);
        out.children.insert(out.children.begin() + child_start, std::move(grouped));
        return out;
    }
    out.children[path[depth]] =
        replace_at(t.children[path[depth]], path, depth + 1, child_start, child_len);
    return out;
}

void tree_sites(const Diagram& d, const SlotRef& slot, const Tree& t, std::vector<int>& path,
                std::vector<Insertion>& out) {
    if (t.is_leaf()) return;
    const int p = static_cast<int>(t.children.size());
    for (int len = 2; len <= p - 1; ++len) {
        for (int start = 0; start + len <= p; ++start) {
            Tree replaced = replace_at(slot_tree(d, slot), path, 0, start, len);
            std::vector<Tree> top = d.top();
            Tree left = d.left();
            std::vector<Tree> bottom = d.bottom();
            Tree right = d.right();
            switch (slot.kind) {
                case SlotRef::Kind::Top: top[slot.index] = std::move(replaced); break;
                case SlotRef::Kind::Left: left = std::move(replaced); break;
                case SlotRef::Kind::Bottom: bottom[slot.index] = std::move(replaced); break;
                case SlotRef::Kind::Right: right = std::move(replaced); break;
            }
            Insertion ins;
            ins.result = Diagram::assemble(std::move(top), std::move(left), std::move(bottom),
                                           std::move(right), d.right_wrap());
            std::vector<int> created_path = path;
            created_path.push_back(start);
            ins.created = {slot, std::move(created_path)};
            ins.at_circle = false;
            ins.host = {slot, path};
            ins.child_start = start;
            ins.child_len = len;
            out.push_back(std::move(ins));
        }
    }
    for (int i = 0; i < p; ++i) {
        path.push_back(i);
        tree_sites(d, slot, t.children[i], path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<Insertion> differential_insertions(const Diagram& d) {
    std::vector<Insertion> out;
    const int r = d.top_count(), s = d.bottom_count();
    const int total = r + s + 2;

    // Slot cycle in counterclockwise argument order: top slots, left, bottom
    // slots, right.
    std::vector<SlotRef> cycle;
    for (int i = 0; i < r; ++i) cycle.push_back({SlotRef::Kind::Top, i});
    cycle.push_back({SlotRef::Kind::Left, 0});
    for (int i = 0; i < s; ++i) cycle.push_back({SlotRef::Kind::Bottom, i});
    cycle.push_back({SlotRef::Kind::Right, 0});
    const int left_pos = r, right_pos = total - 1;

    for (int len = 2; len <= total - 1; ++len) {
        for (int start = 0; start < total; ++start) {
            bool has_left = false, has_right = false;
            std::vector<SlotRef> slots;
            for (int i = 0; i < len; ++i) {
                int pos = (start + i) % total;
                if (pos == left_pos) has_left = true;
                if (pos == right_pos) has_right = true;
                slots.push_back(cycle[pos]);
            }
            // The two special slots are never multiplied together.
            if (has_left && has_right) continue;
            // Wrapping past the right slot without containing it would pass
            // through it; every valid interval is therefore linear unless it
            // contains the right slot.
            if (!has_right && start + len > total) continue;

            std::vector<Tree> grouped;
            for (const SlotRef& sr : slots) grouped.push_back(slot_tree(d, sr));

            Insertion ins;
            ins.at_circle = true;
            ins.circle_start = start;
            ins.circle_len = len;
            ins.circle_slots = slots;

            if (!has_left && !has_right) {
                Tree vertex;
                vertex.children = std::move(grouped);
                if (slots.front().kind == SlotRef::Kind::Top) {
                    // contiguous run of top slots
                    std::vector<Tree> top(d.top().begin(), d.top().begin() + slots.front().index);
                    top.push_back(std::move(vertex));
                    top.insert(top.end(), d.top().begin() + slots.back().index + 1, d.top().end());
                    ins.result = Diagram::assemble(std::move(top), d.left(), d.bottom(), d.right(),
                                                   d.right_wrap());
                    ins.created = {{SlotRef::Kind::Top, slots.front().index}, {}};
                } else {
                    std::vector<Tree> bottom(d.bottom().begin(),
                                             d.bottom().begin() + slots.front().index);
                    bottom.push_back(std::move(vertex));
                    bottom.insert(bottom.end(), d.bottom().begin() + slots.back().index + 1,
                                  d.bottom().end());
                    ins.result = Diagram::assemble(d.top(), d.left(), std::move(bottom), d.right(),
                                                   d.right_wrap());
                    ins.created = {{SlotRef::Kind::Bottom, slots.front().index}, {}};
                }
            } else if (has_left) {
                // tops from slots.front() onward, the left slot, bottoms up to slots.back()
                Tree vertex;
                vertex.children = std::move(grouped);
                int first_top = r;  // index of the first consumed top slot
                if (slots.front().kind == SlotRef::Kind::Top) first_top = slots.front().index;
                int last_bottom = -1;
                if (slots.back().kind == SlotRef::Kind::Bottom) last_bottom = slots.back().index;
                std::vector<Tree> top(d.top().begin(), d.top().begin() + first_top);
                std::vector<Tree> bottom(d.bottom().begin() + (last_bottom + 1), d.bottom().end());
                ins.result = Diagram::assemble(std::move(top), std::move(vertex),
                                               std::move(bottom), d.right(), d.right_wrap());
                ins.created = {{SlotRef::Kind::Left, 0}, {}};
            } else {
                // Interval containing the right slot; leaves before the right
                // slot in the interval are appended to the trailing arc.
                Tree vertex;
                int extra_wrap = 0;
                for (const SlotRef& sr : slots) {
                    if (sr.kind == SlotRef::Kind::Right) break;
                    extra_wrap += slot_tree(d, sr).leaf_count();
                }
                vertex.children = std::move(grouped);
                int first_bottom = s;  // first consumed bottom slot, if any
                int last_top = -1;     // last consumed top slot, if any
                for (const SlotRef& sr : slots) {
                    if (sr.kind == SlotRef::Kind::Bottom)
                        first_bottom = std::min(first_bottom, sr.index);
                    if (sr.kind == SlotRef::Kind::Top) last_top = std::max(last_top, sr.index);
                }
                std::vector<Tree> top(d.top().begin() + (last_top + 1), d.top().end());
                std::vector<Tree> bottom(d.bottom().begin(), d.bottom().begin() + first_bottom);
                ins.result = Diagram::assemble(std::move(top), d.left(), std::move(bottom),
                                               std::move(vertex), extra_wrap + d.right_wrap());
                ins.created = {{SlotRef::Kind::Right, 0}, {}};
            }
            out.push_back(std::move(ins));
        }
    }

    // Tree-level regroupings inside every slot.
    std::vector<int> path;
    for (int i = 0; i < r; ++i) tree_sites(d, {SlotRef::Kind::Top, i}, d.top()[i], path, out);
    tree_sites(d, {SlotRef::Kind::Left, 0}, d.left(), path, out);
    for (int i = 0; i < s; ++i) tree_sites(d, {SlotRef::Kind::Bottom, i}, d.bottom()[i], path, out);
    tree_sites(d, {SlotRef::Kind::Right, 0}, d.right(), path, out);
    return out;
}

std::set<Diagram> differential(const Diagram& d) {
    std::set<Diagram> support;
    for (const Insertion& ins : differential_insertions(d)) {
        auto [it, fresh] = support.insert(ins.result);
        if (!fresh) support.erase(it);  // mod 2
    }
    return support;
}

bool insertion_nested(const Insertion& second, const VertexAddress& created_first) {
    if (second.at_circle) {
        if (!created_first.path.empty()) return false;
        for (const SlotRef& sr : second.circle_slots)
            if (sr == created_first.slot) return true;
        return false;
    }
    if (second.host == created_first) return true;  // regrouping its children
    if (!created_first.path.empty() && second.host.slot == created_first.slot &&
        std::vector<int>(created_first.path.begin(), created_first.path.end() - 1) ==
            second.host.path) {
        int idx = created_first.path.back();
        return idx >= second.child_start && idx < second.child_start + second.child_len;
    }
    return false;
}

/* ------------------------------------------------------------------ */
/* evaluation                                                          */
/* ------------------------------------------------------------------ */

namespace {

SparseVec eval_tree(const Tree& t, const AInfinityAlgebra& alg,
                    const std::vector<std::string>& inputs, const std::vector<int>& globals,
                    int& cursor) {
    if (t.is_leaf())
        return SparseVec::unit(alg.basis, alg.field, inputs.at(globals.at(cursor++)));
    std::vector<SparseVec> args;
    args.reserve(t.children.size());
    for (const Tree& c : t.children) args.push_back(eval_tree(c, alg, inputs, globals, cursor));
    auto it = alg.ops.find(static_cast<int>(t.children.size()));
    if (it == alg.ops.end()) return SparseVec(alg.basis, alg.field);
    return it->second.apply_multilinear(args);
}

}  // namespace

Scalar evaluate_diagram(const Diagram& d, const AInfinityAlgebra& alg,
                        const InfinityInnerProduct& ip, const std::vector<std::string>& inputs) {
    if (alg.field != Field::ModTwo)
        throw std::invalid_argument("diagram evaluation is defined over the two-element field");
    if (static_cast<int>(inputs.size()) != d.leaf_count())
        throw std::invalid_argument("input count does not match the diagram's leaves");
    auto globals = slot_leaf_globals(d);

    std::vector<SparseVec> slot_values;
    std::size_t slot = 0;
    auto eval_slot = [&](const Tree& t) {
        int cursor = 0;
        slot_values.push_back(eval_tree(t, alg, inputs, globals[slot++], cursor));
    };
    for (const Tree& t : d.top()) eval_slot(t);
    eval_slot(d.left());
    for (const Tree& t : d.bottom()) eval_slot(t);
    eval_slot(d.right());

    auto pit = ip.pairings.find({d.top_count(), d.bottom_count()});
    if (pit == ip.pairings.end()) return Scalar::zero(alg.field);
    const PairingTable& table = pit->second;

    Scalar acc = Scalar::zero(alg.field);
    std::vector<std::string> args(slot_values.size());
    std::function<void(std::size_t, Scalar)> walk = [&](std::size_t i, Scalar c) {
        if (i == slot_values.size()) {
            auto it = table.values.find(args);
            if (it != table.values.end()) acc += it->second * c;
            return;
        }
        for (const auto& [label, coef] : slot_values[i].terms()) {
            args[i] = label;
            walk(i + 1, c * coef);
        }
    };
    walk(0, Scalar::one(alg.field));
    return acc;
}

}  // namespace ainfty
