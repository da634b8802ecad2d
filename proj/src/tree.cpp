#include "btt/tree.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "btt/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace btt {

namespace {

// Per-column sort key: row 0 is the most significant bit. Keys compare with
// plain lexicographic word order.
std::vector<std::uint64_t> column_key(const BitMatrix& h, std::size_t j) {
    const std::size_t m = h.rows();
    std::vector<std::uint64_t> key((m + 63) / 64, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (h.get(i, j)) key[i / 64] |= std::uint64_t(1) << (63 - (i % 64));
    return key;
}

std::uint64_t prefix_value(const BitMatrix& h, std::size_t j, int depth) {
    std::uint64_t v = 0;
    for (int i = 0; i < depth; ++i) v = (v << 1) | std::uint64_t(h.get(i, j));
    return v;
}

int floor_log2(std::size_t n) { return std::bit_width(n) - 1; }

}  // namespace

TreeLayout sort_columns_tree(const BitMatrix& h) {
    const std::size_t n = h.cols();
    std::vector<std::vector<std::uint64_t>> keys(n);
    for (std::size_t j = 0; j < n; ++j) keys[j] = column_key(h, j);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });

    std::vector<std::size_t> map(n);
    for (std::size_t s = 0; s < n; ++s) map[order[s]] = s;
    Permutation perm(std::move(map));

    TreeLayout layout;
    layout.h_tree = h.permuted_columns(perm);
    layout.perm = std::move(perm);
    const int top = static_cast<int>(std::min<std::size_t>(h.rows(), 64));
    layout.column_values.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        layout.column_values[j] = prefix_value(layout.h_tree, j, top);
    return layout;
}

std::vector<LeafSet> leaf_sets(const TreeLayout& layout, int depth) {
    const std::size_t m = layout.h_tree.rows();
    const std::size_t n = layout.h_tree.cols();
    if (depth < 1 || static_cast<std::size_t>(depth) > m)
        throw std::invalid_argument("leaf_sets: depth out of range [1, m]");
    if (depth > 30) throw std::invalid_argument("leaf_sets: depth > 30 unsupported");

    std::vector<std::uint64_t> pv(n);
    for (std::size_t j = 0; j < n; ++j) pv[j] = prefix_value(layout.h_tree, j, depth);

    std::vector<LeafSet> out;
    out.reserve(std::size_t(1) << depth);
    std::size_t idx = 0;
    for (std::uint64_t p = (std::uint64_t(1) << depth); p-- > 0;) {
        const std::size_t lo = idx;
        while (idx < n && pv[idx] == p) ++idx;
        out.push_back(LeafSet{p, depth, lo, idx});
    }
    return out;
}

int max_usable_rows(const TreeLayout& layout) {
    const std::size_t m = layout.h_tree.rows();
    const std::size_t n = layout.h_tree.cols();
    const int bound = std::min<int>(static_cast<int>(m), floor_log2(n));
    int best = 0;
    std::vector<std::uint64_t> pv(n);
    for (int ell = 1; ell <= bound; ++ell) {
        for (std::size_t j = 0; j < n; ++j) pv[j] = prefix_value(layout.h_tree, j, ell);
        bool ok = true;
        for (int i = 1; i <= ell && ok; ++i) {
            const std::uint64_t target = std::uint64_t(1) << (ell - i);
            auto it = std::lower_bound(pv.begin(), pv.end(), target, std::greater<>());
            ok = it != pv.end() && *it == target;
        }
        if (!ok) break;  // leaf sets only shrink with depth
        best = ell;
    }
    return best;
}

BttResult balanced_tree_transform(const BitMatrix& h, std::mt19937_64& rng, const BttParams& params) {
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    if (params.target_rows < 0 || params.target_rows > floor_log2(n))
        throw std::invalid_argument("balanced_tree_transform: target_rows must be in [0, floor(log2 n)]");
    if (!(params.balance_delta > 0.0 && params.balance_delta <= 0.5))
        throw std::invalid_argument("balanced_tree_transform: balance_delta must be in (0, 0.5]");
    if (params.max_attempts < 1) throw std::invalid_argument("balanced_tree_transform: max_attempts < 1");

    std::optional<BttResult> best;
    for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
        BitMatrix a = BitMatrix::random(m, m, rng);
        if (!a.is_invertible()) continue;  // one combined attempt counter
        TreeLayout layout = sort_columns_tree(a * h);
        const int usable = max_usable_rows(layout);
        double score = 0.0;
        for (int i = 0; i < params.target_rows; ++i) {
            const double frac = static_cast<double>(layout.h_tree.row_weight(i)) /
                                static_cast<double>(n);
            score = std::max(score, std::abs(frac - 0.5));
        }
        BttResult cand{std::move(a), std::move(layout), usable, score};
        if (usable >= params.target_rows && score <= params.balance_delta) return cand;
        if (!best || cand.usable_rows > best->usable_rows ||
            (cand.usable_rows == best->usable_rows && cand.balance_score < best->balance_score))
            best = std::move(cand);
    }
    throw TransformError("balanced_tree_transform: no acceptable transform in " +
                             std::to_string(params.max_attempts) + " attempts (target_rows=" +
                             std::to_string(params.target_rows) + ", delta=" +
                             std::to_string(params.balance_delta) + ")",
                         std::move(best));
}

Theorem1Report theorem1_diagnostics(const BitMatrix& h, std::mt19937_64& rng,
                                    std::size_t samples, double delta) {
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    Theorem1Report rep;
    rep.samples = samples;
    rep.delta = delta;
    rep.hoeffding_bound = 2.0 * std::exp(-2.0 * delta * delta * static_cast<double>(m));
    rep.kappa = (m > 0 && n % m == 0) ? n / m : 0;
    rep.preconditions_ok = rep.kappa >= 1;
    for (std::size_t j = 0; j < rep.kappa; ++j) {
        BitMatrix block(m, m);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) block.set(r, c, h.get(r, j * m + c));
        const bool inv = block.is_invertible();
        rep.block_invertible.push_back(inv);
        rep.preconditions_ok = rep.preconditions_ok && inv;
    }
    if (samples == 0 || rep.kappa == 0) return rep;

    const std::uint64_t base_seed = rng();
    const std::size_t pairs = m * (m - 1) / 2;

    // All accumulators are integers so the totals are independent of thread
    // count and iteration order.
    std::vector<std::uint64_t> entry_sum(rep.kappa, 0);
    std::vector<std::uint64_t> s1(m, 0), s2(m, 0), sxy(pairs, 0);
    std::uint64_t violations = 0;

#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<std::uint64_t> l_entry(rep.kappa, 0);
        std::vector<std::uint64_t> l_s1(m, 0), l_s2(m, 0), l_sxy(pairs, 0);
        std::uint64_t l_viol = 0;
        std::vector<std::uint64_t> w(m);

#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long s = 0; s < static_cast<long long>(samples); ++s) {
            std::mt19937_64 srng(mix_seed(base_seed, static_cast<std::uint64_t>(s)));
            BitMatrix a = BitMatrix::random(m, m, srng);
            BitMatrix at = a * h;
            for (std::size_t i = 0; i < m; ++i) w[i] = at.row_weight(i);
            for (std::size_t j = 0; j < rep.kappa; ++j) {
                l_entry[j] += at.get(0, j * m);
                for (std::size_t i = 0; i < m; ++i) {
                    std::size_t bw = 0;
                    for (std::size_t c = 0; c < m; ++c) bw += at.get(i, j * m + c);
                    const double frac = static_cast<double>(bw) / static_cast<double>(m);
                    if (std::abs(frac - 0.5) > delta) ++l_viol;
                }
            }
            std::size_t p = 0;
            for (std::size_t i = 0; i < m; ++i) {
                l_s1[i] += w[i];
                l_s2[i] += w[i] * w[i];
                for (std::size_t j = i + 1; j < m; ++j) l_sxy[p++] += w[i] * w[j];
            }
        }

#ifdef _OPENMP
#pragma omp critical
#endif
        {
            for (std::size_t j = 0; j < rep.kappa; ++j) entry_sum[j] += l_entry[j];
            for (std::size_t i = 0; i < m; ++i) {
                s1[i] += l_s1[i];
                s2[i] += l_s2[i];
            }
            for (std::size_t p = 0; p < pairs; ++p) sxy[p] += l_sxy[p];
            violations += l_viol;
        }
    }

    const double ns = static_cast<double>(samples);
    double entry_total = 0.0;
    for (std::size_t j = 0; j < rep.kappa; ++j) {
        rep.block_entry_mean.push_back(static_cast<double>(entry_sum[j]) / ns);
        entry_total += static_cast<double>(entry_sum[j]);
    }
    rep.tracked_entry_mean = entry_total / (ns * static_cast<double>(rep.kappa));
    rep.balance_violation_fraction =
        static_cast<double>(violations) / (ns * static_cast<double>(rep.kappa * m));

    double corr_sum = 0.0;
    std::size_t p = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j, ++p) {
            const double cov = ns * static_cast<double>(sxy[p]) -
                               static_cast<double>(s1[i]) * static_cast<double>(s1[j]);
            const double vi = ns * static_cast<double>(s2[i]) -
                              static_cast<double>(s1[i]) * static_cast<double>(s1[i]);
            const double vj = ns * static_cast<double>(s2[j]) -
                              static_cast<double>(s1[j]) * static_cast<double>(s1[j]);
            if (vi > 0 && vj > 0) corr_sum += std::abs(cov / std::sqrt(vi * vj));
        }
    }
    rep.mean_abs_row_correlation = pairs ? corr_sum / static_cast<double>(pairs) : 0.0;
    return rep;
}

}  // namespace btt
