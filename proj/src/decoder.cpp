#include "btt/decoder.hpp"

#include <vector>

namespace btt {

DecodeOutcome decode(const ReceivedFrame& frame, const LinearCode& code,
                     const SegmentationScheme* scheme, std::uint64_t max_queries) {
    const std::size_t n = code.n();
    const std::size_t m = code.m();
    if (frame.hard.size() != n) throw ShapeError("decode: frame length != n");
    if (max_queries < 1) throw std::invalid_argument("decode: max_queries < 1");
    if (scheme) {
        if (scheme->n != n)
            throw std::invalid_argument("decode: scheme built for a different length");
        if (scheme->ell > static_cast<int>(m))
            throw std::invalid_argument("decode: scheme uses more rows than the code has");
    }

    // Column syndromes packed per column; a query XORs a handful of these.
    const std::size_t words = (m + 63) / 64;
    std::vector<std::uint64_t> col(n * words, 0);
    const BitMatrix& h = code.parity();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h.get(i, j)) col[j * words + i / 64] |= std::uint64_t(1) << (i % 64);

    const BitVector s = code.syndrome(frame.hard);

    PatternStream stream = [&] {
        if (!scheme) return PatternStream::plain(frame.ranks);
        RankPermutation ranks = frame.ranks;
        attach_segment_ranks(ranks, frame.reliability, *scheme);
        return PatternStream::segmented(*scheme, ranks, s);
    }();

    std::vector<std::uint64_t> target(words, 0), acc(words);
    for (std::size_t i = 0; i < m; ++i)
        if (s[i]) target[i / 64] |= std::uint64_t(1) << (i % 64);

    DecodeOutcome out;
    out.ell_used = scheme ? scheme->ell : 0;
    out.queries = 0;
    while (out.queries < max_queries) {
        const auto* pos = stream.next_positions();
        if (!pos) break;  // stream exhausted before the cap
        ++out.queries;
        acc.assign(words, 0);
        for (auto p : *pos) {
            const std::uint64_t* c = col.data() + static_cast<std::size_t>(p) * words;
            for (std::size_t w = 0; w < words; ++w) acc[w] ^= c[w];
        }
        if (acc == target) {
            out.status = DecodeStatus::decoded;
            out.noise_effect = BitVector(n);
            for (auto p : *pos) out.noise_effect.set(static_cast<std::size_t>(p), true);
            out.codeword = frame.hard ^ out.noise_effect;
            return out;
        }
    }
    out.status = DecodeStatus::abandoned;
    return out;
}

}  // namespace btt
