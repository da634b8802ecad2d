#pragma once

#include <cstdint>
#include <vector>

#include "btt/bitmat.hpp"
#include "btt/tree.hpp"

namespace btt {

// One nonempty leaf set at the scheme depth.
struct Segment {
    std::uint64_t prefix;  // v1 at the MSB of the depth-bit value
    std::size_t lo, hi;    // column range [lo, hi)

    std::size_t size() const { return hi - lo; }
};

// The l parity relations extracted from the first l rows of a tree-sorted
// parity check matrix. Equation i (0-based) reads
//   w[chosen[i]] = S_i xor sum of w over relation[i],
// where w is the Hamming-weight parity per segment.
struct SegmentationScheme {
    int ell = 0;
    std::size_t n = 0;
    std::vector<Segment> segments;           // nonempty leaf sets, descending prefix order
    std::vector<std::size_t> chosen;         // segment index of prefix e_(i+1)
    std::vector<std::vector<std::size_t>> relation;  // non-chosen segment indices, per equation

    bool is_chosen(std::size_t seg_idx) const;
};

// Weight parity per segment; -1 marks unset entries.
struct ParityAssignment {
    std::vector<std::int8_t> bits;

    explicit ParityAssignment(std::size_t num_segments = 0) : bits(num_segments, -1) {}
    void set(std::size_t seg_idx, bool parity) { bits[seg_idx] = parity ? 1 : 0; }
};

// Requires max_usable_rows(layout) >= ell. ell == 0 yields the degenerate
// single-segment scheme with no constraints (the plain-ORBGRAND baseline).
// Throws SchemeError when a chosen column subset is empty.
SegmentationScheme build_scheme(const TreeLayout& layout, int ell);

// Chosen-segment parities from the non-chosen parities and syndrome bits
// S_1..S_ell. Non-chosen entries of `non_chosen` must all be set.
ParityAssignment solve_chosen(const SegmentationScheme& scheme,
                              const ParityAssignment& non_chosen, const BitVector& s);

// True iff z satisfies the first ell parity constraints for syndrome s,
// evaluated through segment weights.
bool verify_pattern(const SegmentationScheme& scheme, const BitVector& z, const BitVector& s);

}  // namespace btt
