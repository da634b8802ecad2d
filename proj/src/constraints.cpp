#include "btt/constraints.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace btt {

namespace {

std::string prefix_bits(std::uint64_t prefix, int depth) {
    std::string s(depth, '0');
    for (int i = 0; i < depth; ++i)
        if ((prefix >> (depth - 1 - i)) & 1u) s[i] = '1';
    return s;
}

}  // namespace

bool SegmentationScheme::is_chosen(std::size_t seg_idx) const {
    return std::find(chosen.begin(), chosen.end(), seg_idx) != chosen.end();
}

SegmentationScheme build_scheme(const TreeLayout& layout, int ell) {
    SegmentationScheme scheme;
    scheme.ell = ell;
    scheme.n = layout.h_tree.cols();
    if (ell == 0) {
        scheme.segments.push_back(Segment{0, 0, scheme.n});
        return scheme;
    }
    if (max_usable_rows(layout) < ell)
        throw SchemeError("build_scheme: layout supports fewer than " + std::to_string(ell) +
                          " usable rows");

    for (const LeafSet& ls : leaf_sets(layout, ell))
        if (!ls.empty()) scheme.segments.push_back(Segment{ls.prefix, ls.lo, ls.hi});

    scheme.chosen.resize(ell);
    for (int i = 0; i < ell; ++i) {
        const std::uint64_t target = std::uint64_t(1) << (ell - 1 - i);
        auto it = std::find_if(scheme.segments.begin(), scheme.segments.end(),
                               [&](const Segment& s) { return s.prefix == target; });
        if (it == scheme.segments.end())
            throw SchemeError("build_scheme: empty chosen column subset for prefix " +
                              prefix_bits(target, ell));
        scheme.chosen[i] = static_cast<std::size_t>(it - scheme.segments.begin());
    }

    // Equation i collects every other nonempty prefix with bit i set; those
    // are exactly the non-chosen ones (a weight-one prefix with bit i set is
    // e_(i+1) itself).
    scheme.relation.resize(ell);
    for (int i = 0; i < ell; ++i) {
        const std::uint64_t bit = std::uint64_t(1) << (ell - 1 - i);
        for (std::size_t s = 0; s < scheme.segments.size(); ++s)
            if ((scheme.segments[s].prefix & bit) && s != scheme.chosen[i])
                scheme.relation[i].push_back(s);
    }
    return scheme;
}

ParityAssignment solve_chosen(const SegmentationScheme& scheme,
                              const ParityAssignment& non_chosen, const BitVector& s) {
    if (s.size() < static_cast<std::size_t>(scheme.ell))
        throw ShapeError("solve_chosen: syndrome shorter than ell");
    if (non_chosen.bits.size() != scheme.segments.size())
        throw std::invalid_argument("solve_chosen: assignment size mismatch");
    ParityAssignment out(scheme.segments.size());
    for (int i = 0; i < scheme.ell; ++i) {
        int parity = s[static_cast<std::size_t>(i)] ? 1 : 0;
        for (std::size_t seg : scheme.relation[i]) {
            if (non_chosen.bits[seg] < 0)
                throw std::invalid_argument("solve_chosen: missing parity for segment " +
                                            prefix_bits(scheme.segments[seg].prefix, scheme.ell));
            parity ^= non_chosen.bits[seg];
        }
        out.bits[scheme.chosen[i]] = static_cast<std::int8_t>(parity);
    }
    return out;
}

bool verify_pattern(const SegmentationScheme& scheme, const BitVector& z, const BitVector& s) {
    if (z.size() != scheme.n) throw ShapeError("verify_pattern: pattern length != n");
    if (s.size() < static_cast<std::size_t>(scheme.ell))
        throw ShapeError("verify_pattern: syndrome shorter than ell");

    std::vector<int> seg_parity(scheme.segments.size(), 0);
    for (std::size_t g = 0; g < scheme.segments.size(); ++g) {
        std::size_t w = 0;
        for (std::size_t j = scheme.segments[g].lo; j < scheme.segments[g].hi; ++j) w += z[j];
        seg_parity[g] = static_cast<int>(w & 1);
    }
    for (int i = 0; i < scheme.ell; ++i) {
        const std::uint64_t bit = std::uint64_t(1) << (scheme.ell - 1 - i);
        int parity = 0;
        for (std::size_t g = 0; g < scheme.segments.size(); ++g)
            if (scheme.segments[g].prefix & bit) parity ^= seg_parity[g];
        if (parity != (s[static_cast<std::size_t>(i)] ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace btt
