#pragma once

/* Planar pairing diagrams: one open-circle vertex with two special slots
 * (far left, far right) plus top and bottom slots, each slot carrying a
 * planted planar tree of multiplications.  The differential inserts one new
 * multiplication in every admissible spot; the two special inputs are never
 * multiplied together.  The abstract complex is taken over the two-element
 * field. */

#include "ainfty/structures.hpp"

#include <set>

namespace ainfty {

struct Tree {
    std::vector<Tree> children;  // empty = leaf; internal vertices have >= 2 children

    static Tree leaf() { return Tree{}; }
    static Tree corolla(int n);

    bool is_leaf() const { return children.empty(); }
    int leaf_count() const;
    int arity_excess() const;  // sum over internal vertices of (arity - 2)
    std::string serial() const;
    bool operator==(const Tree& o) const { return compare(*this, o) == 0; }
    bool operator<(const Tree& o) const { return compare(*this, o) < 0; }
    static int compare(const Tree& a, const Tree& b);
};

struct SlotRef {
    enum class Kind { Top, Left, Bottom, Right };
    Kind kind = Kind::Left;
    int index = 0;  // for Top/Bottom
    bool operator==(const SlotRef&) const = default;
};

struct VertexAddress {
    SlotRef slot;
    std::vector<int> path;  // child indices from the slot root; empty = root
    bool operator==(const VertexAddress&) const = default;
};

class Diagram {
public:
    Diagram();  // the bare (0,0) diagram

    // Bare diagram: k top leaves, l bottom leaves, leaf in each special slot.
    static Diagram bare(int k, int l);
    static Diagram assemble(std::vector<Tree> top, Tree left, std::vector<Tree> bottom, Tree right,
                            int right_wrap);

    const std::vector<Tree>& top() const { return top_; }    // argument order; [0] is slot 1
    const Tree& left() const { return left_; }
    const std::vector<Tree>& bottom() const { return bottom_; }  // argument order
    const Tree& right() const { return right_; }
    // Number of the right tree's leaves numbered at the end of the cycle
    // (the rest wrap around to the front); always >= 1.
    int right_wrap() const { return right_wrap_; }

    int top_count() const { return static_cast<int>(top_.size()); }
    int bottom_count() const { return static_cast<int>(bottom_.size()); }
    int degree() const;
    int leaf_count() const;

    std::string serial() const;   // canonical, byte-stable
    std::string display() const;  // angle-bracket form with positional labels

    bool operator==(const Diagram& o) const { return serial_ == o.serial_; }
    bool operator<(const Diagram& o) const { return serial_ < o.serial_; }

private:
    void seal();
    std::vector<Tree> top_;
    Tree left_;
    std::vector<Tree> bottom_;
    Tree right_;
    int right_wrap_ = 1;
    std::string serial_;
};

/* One result of the differential, with the address of the inserted vertex and
 * enough site information to relate a later insertion to it. */
struct Insertion {
    Diagram result;
    VertexAddress created;  // address inside `result`
    // Site description in the source diagram:
    bool at_circle = false;
    int circle_start = 0, circle_len = 0;        // cyclic slot interval
    VertexAddress host;                          // for tree-level: the grouped vertex
    int child_start = 0, child_len = 0;          // for tree-level: grouped children
    std::vector<SlotRef> circle_slots;           // slots covered by a circle site
};

std::vector<Insertion> differential_insertions(const Diagram& d);

/* The differential over the two-element field: the mod-2 support of all
 * single insertions.  Each application drops the degree by exactly one. */
std::set<Diagram> differential(const Diagram& d);

/* Whether a second insertion composes on the output of the vertex created by
 * a first insertion (same-output case) rather than acting at an independent
 * spot. */
bool insertion_nested(const Insertion& second, const VertexAddress& created_first);

/* Evaluation against a concrete structure over the two-element field: trees
 * compose through the multiplications, the circle feeds the pairing, inputs
 * are attached counterclockwise with the last one in the far right slot. */
Scalar evaluate_diagram(const Diagram& d, const AInfinityAlgebra& alg,
                        const InfinityInnerProduct& ip, const std::vector<std::string>& inputs);

/* For each circle slot, in argument order (top slots, left, bottom slots,
 * right), the 0-based global input position of each of its leaves in planar
 * order.  Global numbering starts just past the far-right axis and runs
 * counterclockwise, so the right tree's trailing `right_wrap` leaves close
 * the cycle. */
std::vector<std::vector<int>> slot_leaf_globals(const Diagram& d);

/* Parses the angle-bracket notation, e.g. "<a,b,m2(c,d)>_{1,1}" or
 * "<a2,m2(a3,a1)>_{0,0}".  Leaf names order the inputs counterclockwise
 * (natural label order = global order); the wrap of the right slot is read
 * off from where the last label sits inside it. */
Diagram parse_diagram(const std::string& text);

}  // namespace ainfty
