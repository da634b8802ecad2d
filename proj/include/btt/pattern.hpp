#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "btt/bitmat.hpp"
#include "btt/constraints.hpp"

namespace btt {

// Reliability ranks, 1-based; rank 1 is the least reliable position.
struct RankPermutation {
    std::vector<std::int32_t> global;      // position -> global rank
    std::vector<std::int32_t> in_segment;  // position -> rank within its segment; empty until attached
};

// Ranks by (reliability, position); the position tie-break keeps everything
// deterministic.
RankPermutation rank_reliabilities(const std::vector<double>& gamma);

void attach_segment_ranks(RankPermutation& ranks, const std::vector<double>& gamma,
                          const SegmentationScheme& scheme);

enum class WeightMode { plain, segmented };

// Sum of ranks over flipped positions: global ranks in plain mode,
// within-segment ranks in segmented mode.
std::int64_t pseudo_weight(const BitVector& z, const RankPermutation& ranks, WeightMode mode);

// Stateful enumerator of candidate noise effects in non-decreasing
// pseudo-weight. Plain mode walks all 2^n patterns; segmented mode emits
// exactly the 2^(n-l) patterns satisfying the scheme's parity constraints,
// generating non-chosen sub-effects first and chosen sub-effects from the
// solved weight parities.
class PatternStream {
public:
    static PatternStream plain(const RankPermutation& ranks);
    static PatternStream segmented(const SegmentationScheme& scheme, const RankPermutation& ranks,
                                   const BitVector& syndrome);

    PatternStream(PatternStream&&) noexcept;
    PatternStream& operator=(PatternStream&&) noexcept;
    ~PatternStream();

    // Flipped positions of the next pattern, or nullptr when exhausted.
    // The pointee is valid until the next call.
    const std::vector<std::int32_t>* next_positions();

    // Materializing variant; returns false when exhausted.
    bool next(BitVector& out);

    std::int64_t last_weight() const;
    std::uint64_t emitted() const;
    std::size_t length() const;

private:
    PatternStream();
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace btt
