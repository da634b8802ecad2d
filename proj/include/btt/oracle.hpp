#pragma once

#include <optional>
#include <string>
#include <vector>

#include "btt/code.hpp"
#include "btt/constraints.hpp"
#include "btt/pattern.hpp"
#include "btt/tree.hpp"

namespace btt::oracle {

// Brute-force reference checks, all exponential in n or k; callers must keep
// n <= 20. They deliberately avoid the modules they validate: constraints
// are evaluated as direct row dot products on H, codebooks by exhaustive
// message enumeration.

// Every z in {0,1}^n with H_{i,:} z^T == s_i for all i < ell.
std::vector<BitVector> admissible_patterns(const BitMatrix& h, int ell, const BitVector& s);

// All 2^k codewords as bit strings, sorted.
std::vector<std::string> codebook(const LinearCode& code);

struct Failure {
    std::string what;
    std::string counterexample;
};
using CheckResult = std::optional<Failure>;  // nullopt = pass

// Segmented stream emits exactly the admissible set, with non-decreasing
// pseudo-weights and no duplicates.
CheckResult check_stream_completeness(const SegmentationScheme& scheme,
                                      const RankPermutation& ranks, const BitMatrix& h,
                                      const BitVector& s);

// The equivalent code's codebook equals the column-permuted original.
CheckResult check_codebook_preservation(const LinearCode& code, const BitMatrix& a,
                                        const Permutation& perm);

// verify_pattern agrees with the dot-product definition for every z.
CheckResult check_constraint_equivalence(const SegmentationScheme& scheme, const BitMatrix& h,
                                         const BitVector& s);

}  // namespace btt::oracle
