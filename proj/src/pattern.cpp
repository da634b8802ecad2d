#include "btt/pattern.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace btt {

RankPermutation rank_reliabilities(const std::vector<double>& gamma) {
    const std::size_t n = gamma.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return gamma[a] != gamma[b] ? gamma[a] < gamma[b] : a < b;
    });
    RankPermutation rp;
    rp.global.resize(n);
    for (std::size_t r = 0; r < n; ++r) rp.global[order[r]] = static_cast<std::int32_t>(r + 1);
    return rp;
}

void attach_segment_ranks(RankPermutation& ranks, const std::vector<double>& gamma,
                          const SegmentationScheme& scheme) {
    const std::size_t n = gamma.size();
    if (scheme.n != n) throw ShapeError("attach_segment_ranks: scheme length mismatch");
    ranks.in_segment.assign(n, 0);
    std::vector<std::size_t> order;
    for (const Segment& seg : scheme.segments) {
        order.resize(seg.size());
        std::iota(order.begin(), order.end(), seg.lo);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return gamma[a] != gamma[b] ? gamma[a] < gamma[b] : a < b;
        });
        for (std::size_t r = 0; r < order.size(); ++r)
            ranks.in_segment[order[r]] = static_cast<std::int32_t>(r + 1);
    }
}

std::int64_t pseudo_weight(const BitVector& z, const RankPermutation& ranks, WeightMode mode) {
    const auto& r = mode == WeightMode::plain ? ranks.global : ranks.in_segment;
    if (r.size() != z.size()) throw ShapeError("pseudo_weight: rank vector length mismatch");
    std::int64_t w = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i]) w += r[i];
    return w;
}

namespace {

// Subsets of {1..len} in non-decreasing rank-sum order; within one sum level,
// fewer elements first, then lexicographic on the ascending tuple. parity
// restricts the subset size mod 2; -1 means unconstrained. Emitted items are
// cached so streams can be shared and indexed.
class SubsetEnumerator {
public:
    SubsetEnumerator(int len, int parity)
        : len_(len), parity_(parity),
          max_level_(static_cast<std::int64_t>(len) * (len + 1) / 2) {}

    bool materialize(std::size_t idx) {
        while (items_.size() <= idx && next_level_ <= max_level_) expand_level();
        return idx < items_.size();
    }

    const std::vector<std::int32_t>& item(std::size_t idx) const { return items_[idx]; }
    std::int64_t weight(std::size_t idx) const { return weights_[idx]; }

private:
    void expand_level() {
        const std::int64_t w = next_level_++;
        if (w == 0) {
            if (parity_ != 1) push({});
            return;
        }
        scratch_.clear();
        for (int k = 1; static_cast<std::int64_t>(k) * (k + 1) / 2 <= w && k <= len_; ++k) {
            if (parity_ >= 0 && (k & 1) != parity_) continue;
            gen(1, w, k);
        }
    }

    // Ascending tuples starting at >= lo summing to rem with k parts <= len_.
    void gen(int lo, std::int64_t rem, int k) {
        if (k == 0) {
            if (rem == 0) push(scratch_);
            return;
        }
        for (int a = lo; a <= len_; ++a) {
            // cheapest completion: a, a+1, ..., a+k-1
            const std::int64_t cheapest =
                static_cast<std::int64_t>(k) * a + static_cast<std::int64_t>(k) * (k - 1) / 2;
            if (cheapest > rem) break;
            // most expensive completion: len_, len_-1, ..., len_-k+1 with a as smallest
            const std::int64_t richest = static_cast<std::int64_t>(a) +
                                         (static_cast<std::int64_t>(len_) * (k - 1) -
                                          static_cast<std::int64_t>(k - 1) * (k - 2) / 2);
            if (richest < rem) continue;
            scratch_.push_back(a);
            gen(a + 1, rem - a, k - 1);
            scratch_.pop_back();
        }
    }

    void push(std::vector<std::int32_t> v) {
        weights_.push_back(next_level_ - 1);
        items_.push_back(std::move(v));
    }

    int len_, parity_;
    std::int64_t next_level_ = 0, max_level_;
    std::vector<std::vector<std::int32_t>> items_;
    std::vector<std::int64_t> weights_;
    std::vector<std::int32_t> scratch_;
};

// Product of sorted subset streams, enumerated in non-decreasing total
// weight. Children are generated only past the last incremented coordinate,
// which makes every index tuple reachable exactly once (no visited set).
class ProductEnumerator {
public:
    explicit ProductEnumerator(std::vector<SubsetEnumerator*> comps) : comps_(std::move(comps)) {
        Node root;
        root.idx.assign(comps_.size(), 0);
        root.last_nz = -1;
        root.w = 0;
        bool ok = true;
        for (std::size_t j = 0; j < comps_.size(); ++j) {
            if (!comps_[j]->materialize(0)) {
                ok = false;
                break;
            }
            root.w += comps_[j]->weight(0);
        }
        if (ok) heap_.push(std::move(root));
    }

    // Moves to the next composite; false when exhausted.
    bool advance() {
        if (heap_.empty()) return false;
        current_ = heap_.top();
        heap_.pop();
        for (std::size_t j = std::max(current_.last_nz, 0);
             j < comps_.size(); ++j) {
            const std::size_t nxt = current_.idx[j] + 1;
            if (!comps_[j]->materialize(nxt)) continue;
            Node child = current_;
            child.w += comps_[j]->weight(nxt) - comps_[j]->weight(current_.idx[j]);
            child.idx[j] = static_cast<std::uint32_t>(nxt);
            child.last_nz = static_cast<int>(j);
            heap_.push(std::move(child));
        }
        return true;
    }

    std::int64_t weight() const { return current_.w; }
    const std::vector<std::uint32_t>& indices() const { return current_.idx; }

private:
    struct Node {
        std::int64_t w;
        std::vector<std::uint32_t> idx;
        int last_nz;
    };
    struct After {
        bool operator()(const Node& a, const Node& b) const {
            if (a.w != b.w) return a.w > b.w;
            return a.idx > b.idx;
        }
    };

    std::vector<SubsetEnumerator*> comps_;
    std::priority_queue<Node, std::vector<Node>, After> heap_;
    Node current_;
};

}  // namespace

struct PatternStream::Impl {
    std::size_t n = 0;
    bool is_plain = true;
    std::vector<std::int32_t> out;
    std::int64_t last_w = -1;
    std::uint64_t count = 0;

    // plain
    std::vector<std::int32_t> pos_of_rank;
    std::unique_ptr<SubsetEnumerator> plain_enum;
    std::size_t plain_idx = 0;

    // segmented
    SegmentationScheme scheme;
    std::vector<std::uint8_t> syndrome_bits;               // S_1..S_ell
    std::vector<std::vector<std::int32_t>> pos_by_segrank;  // [segment][rank-1]
    std::vector<std::size_t> nc_segs;                       // non-chosen segment indices
    std::vector<std::unique_ptr<SubsetEnumerator>> nc_enums;   // aligned with nc_segs
    std::unique_ptr<SubsetEnumerator> chosen_enums[2 * 64];    // [2*slot + parity]
    std::unique_ptr<ProductEnumerator> nc_product;
    bool nc_head_valid = false;

    struct Entry {
        std::int64_t w_nc;
        std::vector<std::uint32_t> nc_idx;
        std::vector<std::uint8_t> chosen_parity;
        std::unique_ptr<ProductEnumerator> chosen;
    };
    std::vector<Entry> entries;
    using HeapItem = std::pair<std::int64_t, std::size_t>;  // (total weight, entry id)
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;

    SubsetEnumerator* chosen_enum(std::size_t slot, int parity) {
        auto& p = chosen_enums[2 * slot + static_cast<std::size_t>(parity)];
        if (!p) {
            const Segment& seg = scheme.segments[scheme.chosen[slot]];
            p = std::make_unique<SubsetEnumerator>(static_cast<int>(seg.size()), parity);
        }
        return p.get();
    }

    void pull_nc_head() {
        Entry e;
        e.w_nc = nc_product->weight();
        e.nc_idx = nc_product->indices();
        // chosen parities from the syndrome and the non-chosen sub-effect parities
        std::vector<int> seg_parity(scheme.segments.size(), 0);
        for (std::size_t j = 0; j < nc_segs.size(); ++j)
            seg_parity[nc_segs[j]] = static_cast<int>(nc_enums[j]->item(e.nc_idx[j]).size() & 1);
        std::vector<SubsetEnumerator*> comps(scheme.chosen.size());
        e.chosen_parity.resize(scheme.chosen.size());
        for (std::size_t i = 0; i < scheme.chosen.size(); ++i) {
            int parity = syndrome_bits[i];
            for (std::size_t seg : scheme.relation[i]) parity ^= seg_parity[seg];
            e.chosen_parity[i] = static_cast<std::uint8_t>(parity);
            comps[i] = chosen_enum(i, parity);
        }
        e.chosen = std::make_unique<ProductEnumerator>(std::move(comps));
        e.chosen->advance();  // parity-constrained streams are never empty
        const std::int64_t total = e.w_nc + e.chosen->weight();
        entries.push_back(std::move(e));
        heap.emplace(total, entries.size() - 1);
        nc_head_valid = nc_product->advance();
    }
};

PatternStream::PatternStream() : impl_(std::make_unique<Impl>()) {}
PatternStream::PatternStream(PatternStream&&) noexcept = default;
PatternStream& PatternStream::operator=(PatternStream&&) noexcept = default;
PatternStream::~PatternStream() = default;

PatternStream PatternStream::plain(const RankPermutation& ranks) {
    PatternStream ps;
    Impl& im = *ps.impl_;
    im.n = ranks.global.size();
    im.is_plain = true;
    im.pos_of_rank.resize(im.n);
    for (std::size_t i = 0; i < im.n; ++i) im.pos_of_rank[ranks.global[i] - 1] =
        static_cast<std::int32_t>(i);
    im.plain_enum = std::make_unique<SubsetEnumerator>(static_cast<int>(im.n), -1);
    return ps;
}

PatternStream PatternStream::segmented(const SegmentationScheme& scheme,
                                       const RankPermutation& ranks, const BitVector& syndrome) {
    if (ranks.in_segment.size() != scheme.n)
        throw std::invalid_argument("segmented stream: within-segment ranks not attached");
    if (syndrome.size() < static_cast<std::size_t>(scheme.ell))
        throw ShapeError("segmented stream: syndrome shorter than ell");
    if (scheme.chosen.size() > 64)
        throw std::invalid_argument("segmented stream: ell > 64 unsupported");

    PatternStream ps;
    Impl& im = *ps.impl_;
    im.n = scheme.n;
    im.is_plain = false;
    im.scheme = scheme;
    im.syndrome_bits.resize(scheme.chosen.size());
    for (std::size_t i = 0; i < im.syndrome_bits.size(); ++i) im.syndrome_bits[i] = syndrome[i];

    im.pos_by_segrank.resize(scheme.segments.size());
    for (std::size_t g = 0; g < scheme.segments.size(); ++g) {
        const Segment& seg = scheme.segments[g];
        im.pos_by_segrank[g].resize(seg.size());
        for (std::size_t j = seg.lo; j < seg.hi; ++j)
            im.pos_by_segrank[g][ranks.in_segment[j] - 1] = static_cast<std::int32_t>(j);
    }

    for (std::size_t g = 0; g < scheme.segments.size(); ++g)
        if (!scheme.is_chosen(g)) im.nc_segs.push_back(g);
    std::vector<SubsetEnumerator*> nc_comps;
    for (std::size_t j = 0; j < im.nc_segs.size(); ++j) {
        im.nc_enums.push_back(std::make_unique<SubsetEnumerator>(
            static_cast<int>(im.scheme.segments[im.nc_segs[j]].size()), -1));
        nc_comps.push_back(im.nc_enums.back().get());
    }
    im.nc_product = std::make_unique<ProductEnumerator>(std::move(nc_comps));
    im.nc_head_valid = im.nc_product->advance();
    return ps;
}

const std::vector<std::int32_t>* PatternStream::next_positions() {
    Impl& im = *impl_;
    if (im.is_plain) {
        if (!im.plain_enum->materialize(im.plain_idx)) return nullptr;
        const auto& ranks = im.plain_enum->item(im.plain_idx);
        im.out.clear();
        for (auto r : ranks) im.out.push_back(im.pos_of_rank[r - 1]);
        im.last_w = im.plain_enum->weight(im.plain_idx);
        ++im.plain_idx;
        ++im.count;
        return &im.out;
    }

    while (im.nc_head_valid &&
           (im.heap.empty() || im.nc_product->weight() <= im.heap.top().first))
        im.pull_nc_head();
    if (im.heap.empty()) return nullptr;

    const auto [w, id] = im.heap.top();
    im.heap.pop();
    Impl::Entry& e = im.entries[id];

    im.out.clear();
    for (std::size_t j = 0; j < im.nc_segs.size(); ++j)
        for (auto r : im.nc_enums[j]->item(e.nc_idx[j]))
            im.out.push_back(im.pos_by_segrank[im.nc_segs[j]][r - 1]);
    const auto& cidx = e.chosen->indices();
    for (std::size_t i = 0; i < im.scheme.chosen.size(); ++i) {
        SubsetEnumerator* se = im.chosen_enum(i, e.chosen_parity[i]);
        for (auto r : se->item(cidx[i]))
            im.out.push_back(im.pos_by_segrank[im.scheme.chosen[i]][r - 1]);
    }
    im.last_w = w;
    ++im.count;

    if (e.chosen->advance())
        im.heap.emplace(e.w_nc + e.chosen->weight(), id);
    else
        e.chosen.reset();  // drop the exhausted product's state
    return &im.out;
}

bool PatternStream::next(BitVector& out) {
    const auto* pos = next_positions();
    if (!pos) return false;
    out = BitVector(impl_->n);
    for (auto p : *pos) out.set(static_cast<std::size_t>(p), true);
    return true;
}

std::int64_t PatternStream::last_weight() const { return impl_->last_w; }
std::uint64_t PatternStream::emitted() const { return impl_->count; }
std::size_t PatternStream::length() const { return impl_->n; }

}  // namespace btt
