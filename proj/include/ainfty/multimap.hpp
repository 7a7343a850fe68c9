#pragma once

/* Sparse multilinear maps on basis tuples, extended multilinearly.  A map is
 * either plain (V^n -> V or W) or marked (V^k (x) W (x) V^l -> Z).  Tables can
 * live on suspended or unsuspended gradings; suspend_conjugate moves between
 * the two with the degree-shift sign bookkeeping. */

#include "ainfty/word.hpp"

#include <variant>

namespace ainfty {

struct PlainSignature {
    BasisPtr in;
    BasisPtr out;
    int arity = 1;  // >= 1
};

struct MarkedSignature {
    BasisPtr plain_in;   // V
    BasisPtr marked_in;  // W
    BasisPtr out;
    int left = 0, right = 0;  // k, l >= 0
};

class MultiMap {
public:
    static MultiMap plain_map(BasisPtr in, BasisPtr out, int arity, int degree, Field field,
                              bool suspended = false);
    static MultiMap marked_map(BasisPtr v, BasisPtr w, BasisPtr out, int left, int right,
                               int degree, Field field, bool suspended = false);

    bool is_plain() const { return std::holds_alternative<PlainSignature>(sig_); }
    const PlainSignature& plain_sig() const { return std::get<PlainSignature>(sig_); }
    const MarkedSignature& marked_sig() const { return std::get<MarkedSignature>(sig_); }

    int arity() const;  // total number of input slots
    int degree() const { return degree_; }
    bool suspended() const { return suspended_; }
    Field field() const { return field_; }
    const BasisPtr& out_basis() const;
    BasisPtr slot_basis(int slot) const;
    int mark_slot() const;  // -1 for plain maps

    // Adds the given output at the basis tuple; rejects entries breaking
    // |output| = |inputs| + degree.
    void set(const std::vector<std::string>& inputs, const SparseVec& out);
    void set_unit(const std::vector<std::string>& inputs, const std::string& out_label,
                  const Scalar& c);

    const std::map<std::vector<std::string>, SparseVec>& table() const { return table_; }
    bool is_zero() const { return table_.empty(); }

    SparseVec apply(const std::vector<std::string>& inputs) const;
    // Multilinear extension; no sign (signs arise from moving maps, not applying them).
    SparseVec apply_multilinear(const std::vector<SparseVec>& inputs) const;

    // Conjugation by the degree +1 shift on every slot and on the output:
    // a table on unsuspended gradings becomes the corresponding table on
    // suspended gradings (and back).  Round trip is the identity.
    MultiMap suspend_conjugate(bool to_suspended) const;

    bool operator==(const MultiMap& o) const;
    std::string content_key() const;  // canonical serialization, for hashing/caching

private:
    MultiMap() : field_(Field::Rational) {}
    void check_tuple(const std::vector<std::string>& inputs) const;

    std::variant<PlainSignature, MarkedSignature> sig_;
    int degree_ = 0;
    bool suspended_ = false;
    Field field_;
    std::map<std::vector<std::string>, SparseVec> table_;
};

/* One factor of a graded tensor product of maps: a map, or the identity on a
 * single slot (null map pointer). */
struct TensorSlot {
    const MultiMap* map = nullptr;
    int width() const { return map ? map->arity() : 1; }
};

/* Applies map_1 (x) ... (x) map_r to a word, inserting the Koszul sign for each
 * factor moved past the entries consumed by earlier factors. */
FormalSum tensor_apply(const std::vector<TensorSlot>& slots, const Word& word, Field field);

}  // namespace ainfty
