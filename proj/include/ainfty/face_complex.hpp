#pragma once

/* Face complexes: the insertion-closure of a bare pairing diagram, graded by
 * degree, with incidence given by the differential's support.  The (n,0)
 * shapes recover the classical associahedra, generated independently from
 * planar trees as an oracle. */

#include "ainfty/diagrams.hpp"

namespace ainfty {

struct FaceComplex {
    int k = 0, l = 0;
    std::vector<Diagram> cells;                    // sorted by (degree, serial)
    std::vector<int> degrees;                      // degrees[i] = cells[i].degree()
    std::vector<std::vector<std::size_t>> faces;   // codim-1 faces per cell
    std::map<std::string, std::size_t> index;      // serial -> cell position

    std::vector<long long> f_vector() const;  // counts by degree 0..k+l
    long long euler() const;
    std::size_t top_cell() const;  // position of the bare diagram
};

FaceComplex enumerate_faces(int k, int l, int bound = 6);

struct DSquaredReport {
    bool ok = true;
    std::size_t cells = 0;
    std::size_t pre_cancellation_terms = 0;
    std::size_t independent_pairs = 0;  // the two insertions act at different outputs
    std::size_t composed_pairs = 0;     // the two insertions stack on one output
    std::vector<std::string> failures;
};

/* Expands d(d(cell)) for every cell before mod-2 reduction and verifies that
 * each resulting diagram is reached an even number of times, split evenly
 * into the two cancellation cases. */
DSquaredReport check_d_squared(const FaceComplex& fc);

/* Graded poset presented by cells, degrees and codim-1 incidence. */
struct AbstractComplex {
    std::vector<std::string> ids;
    std::vector<int> degrees;
    std::vector<std::vector<std::size_t>> faces;
};

AbstractComplex to_abstract(const FaceComplex& fc);

/* Face poset of the polytope of bracketings on n+2 letters, generated from
 * planar trees by the same insertion closure but with no circle vertex. */
AbstractComplex associahedron_oracle(int n);

struct PosetIso {
    bool isomorphic = false;
    std::vector<std::pair<std::string, std::string>> witness;  // a-cell -> b-cell
};

PosetIso poset_isomorphic(const AbstractComplex& a, const AbstractComplex& b);

std::string export_face_complex(const FaceComplex& fc, const std::string& format);

struct NaturalityReport {
    bool ok = true;
    std::size_t cells = 0;
    std::size_t tuples = 0;
    std::vector<std::string> failures;
};

/* evaluate(d Gamma) = evaluate(Gamma) after precomposition with the summed
 * single-slot differential, on every cell and every input tuple. */
NaturalityReport naturality_check(const FaceComplex& fc, const AInfinityAlgebra& alg,
                                  const InfinityInnerProduct& ip);

}  // namespace ainfty
