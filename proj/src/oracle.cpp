#include "btt/oracle.hpp"

#include <algorithm>

namespace btt::oracle {

namespace {

BitVector from_mask(std::uint64_t mask, std::size_t n) {
    BitVector z(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u) z.set(i, true);
    return z;
}

bool row_constraints_hold(const BitMatrix& h, const BitVector& z, int ell, const BitVector& s) {
    for (int i = 0; i < ell; ++i) {
        int parity = 0;
        for (std::size_t j = 0; j < h.cols(); ++j)
            parity ^= static_cast<int>(h.get(static_cast<std::size_t>(i), j) && z[j]);
        if (parity != (s[static_cast<std::size_t>(i)] ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace

std::vector<BitVector> admissible_patterns(const BitMatrix& h, int ell, const BitVector& s) {
    const std::size_t n = h.cols();
    if (n > 20) throw std::invalid_argument("oracle: n > 20");
    std::vector<BitVector> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        BitVector z = from_mask(mask, n);
        if (row_constraints_hold(h, z, ell, s)) out.push_back(std::move(z));
    }
    return out;
}

std::vector<std::string> codebook(const LinearCode& code) {
    if (code.k() > 20) throw std::invalid_argument("oracle: k > 20");
    std::vector<std::string> words;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << code.k()); ++mask)
        words.push_back(code.encode(from_mask(mask, code.k())).to_string());
    std::sort(words.begin(), words.end());
    return words;
}

CheckResult check_stream_completeness(const SegmentationScheme& scheme,
                                      const RankPermutation& ranks, const BitMatrix& h,
                                      const BitVector& s) {
    std::vector<BitVector> expect = admissible_patterns(h, scheme.ell, s);
    std::vector<std::string> expect_strs;
    for (const auto& z : expect) expect_strs.push_back(z.to_string());
    std::sort(expect_strs.begin(), expect_strs.end());

    PatternStream stream = PatternStream::segmented(scheme, ranks, s);
    std::vector<std::string> got;
    BitVector z;
    std::int64_t prev_w = -1;
    while (stream.next(z)) {
        const std::int64_t w = stream.last_weight();
        if (w < prev_w)
            return Failure{"pseudo-weight decreased", z.to_string() + " at weight " +
                                                          std::to_string(w) + " after " +
                                                          std::to_string(prev_w)};
        prev_w = w;
        got.push_back(z.to_string());
        if (got.size() > 2 * expect_strs.size() + 8)
            return Failure{"stream emits more patterns than admissible", z.to_string()};
    }
    std::vector<std::string> sorted_got = got;
    std::sort(sorted_got.begin(), sorted_got.end());
    auto dup = std::adjacent_find(sorted_got.begin(), sorted_got.end());
    if (dup != sorted_got.end()) return Failure{"duplicate emission", *dup};
    if (sorted_got != expect_strs) {
        std::vector<std::string> diff;
        std::set_symmetric_difference(sorted_got.begin(), sorted_got.end(), expect_strs.begin(),
                                      expect_strs.end(), std::back_inserter(diff));
        return Failure{"emitted set != brute-force admissible set (" +
                           std::to_string(sorted_got.size()) + " vs " +
                           std::to_string(expect_strs.size()) + ")",
                       diff.empty() ? "" : diff.front()};
    }
    return std::nullopt;
}

CheckResult check_codebook_preservation(const LinearCode& code, const BitMatrix& a,
                                        const Permutation& perm) {
    LinearCode eq = code.equivalent(a, perm);
    std::vector<std::string> orig;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << code.k()); ++mask) {
        BitVector u = from_mask(mask, code.k());
        orig.push_back(perm.apply(code.encode(u)).to_string());
    }
    std::sort(orig.begin(), orig.end());
    std::vector<std::string> transformed = codebook(eq);
    if (orig != transformed) {
        std::string ce;
        for (std::size_t i = 0; i < orig.size(); ++i)
            if (orig[i] != transformed[i]) {
                ce = "permuted original " + orig[i] + " vs transformed " + transformed[i];
                break;
            }
        return Failure{"codebooks differ under the column permutation", ce};
    }
    return std::nullopt;
}

CheckResult check_constraint_equivalence(const SegmentationScheme& scheme, const BitMatrix& h,
                                         const BitVector& s) {
    const std::size_t n = h.cols();
    if (n > 20) throw std::invalid_argument("oracle: n > 20");
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        BitVector z = from_mask(mask, n);
        const bool via_segments = verify_pattern(scheme, z, s);
        const bool via_rows = row_constraints_hold(h, z, scheme.ell, s);
        if (via_segments != via_rows)
            return Failure{"segment-weight and row-support checks disagree",
                           z.to_string() + (via_segments ? " accepted" : " rejected") +
                               " by segments only"};
    }
    return std::nullopt;
}

}  // namespace btt::oracle
