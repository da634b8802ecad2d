#pragma once

#include <cstdint>

#include "btt/channel.hpp"
#include "btt/code.hpp"
#include "btt/constraints.hpp"

namespace btt {

enum class DecodeStatus { decoded, abandoned };

struct DecodeOutcome {
    DecodeStatus status;
    BitVector codeword;      // valid only when decoded
    BitVector noise_effect;  // valid only when decoded
    std::uint64_t queries;   // syndrome-membership tests performed
    int ell_used;
};

// GRAND over the frame's hard decisions: walks the plain ORBGRAND stream
// (scheme == nullptr) or the segmented stream, testing the full m-bit
// syndrome per query, until a codeword is found or max_queries is spent.
DecodeOutcome decode(const ReceivedFrame& frame, const LinearCode& code,
                     const SegmentationScheme* scheme, std::uint64_t max_queries);

}  // namespace btt
