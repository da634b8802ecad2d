#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "btt/bitmat.hpp"

namespace btt {

// Parity check matrix rewritten so column values (top row = MSB) are
// non-increasing left to right. `perm` maps original to sorted positions.
struct TreeLayout {
    BitMatrix h_tree;
    Permutation perm;
    std::vector<std::uint64_t> column_values;  // from the top min(m,64) rows
};

// Columns whose top `depth` entries equal `prefix` (v1 at the MSB); the run
// is contiguous in a tree layout and may be empty.
struct LeafSet {
    std::uint64_t prefix;
    int depth;
    std::size_t lo, hi;  // [lo, hi)

    bool empty() const { return lo == hi; }
    std::size_t size() const { return hi - lo; }
};

struct BttResult {
    BitMatrix a;
    TreeLayout layout;
    int usable_rows;       // max_usable_rows of the accepted layout
    double balance_score;  // max |ones/n - 1/2| over the first target rows
};

// Transformation failed within the attempt budget; carries the best
// candidate seen for diagnostics.
struct TransformError : std::runtime_error {
    TransformError(const std::string& what, std::optional<BttResult> best_seen)
        : std::runtime_error(what), best(std::move(best_seen)) {}
    std::optional<BttResult> best;
};

TreeLayout sort_columns_tree(const BitMatrix& h);

// All 2^depth leaf sets in descending prefix order; their ranges partition
// the columns. Requires 1 <= depth <= min(rows, 64).
std::vector<LeafSet> leaf_sets(const TreeLayout& layout, int depth);

// Largest l <= min(m, floor(log2 n)) such that every weight-one prefix
// e_1..e_l has a nonempty leaf set at depth l; 0 when even depth 1 fails.
int max_usable_rows(const TreeLayout& layout);

struct BttParams {
    int target_rows = 1;        // required usable rows (l)
    double balance_delta = 0.15;
    int max_attempts = 1000;
};

// Balanced Tree Transformation: rejection-samples invertible A until the
// tree-sorted A*H has target_rows usable rows and each of those rows has a
// ones fraction within balance_delta of 1/2. Deterministic given the rng
// state. Throws TransformError when attempts are exhausted.
BttResult balanced_tree_transform(const BitMatrix& h, std::mt19937_64& rng, const BttParams& params = {});

struct Theorem1Report {
    bool preconditions_ok = false;     // n == kappa*m with all blocks invertible
    std::size_t kappa = 0;
    std::vector<bool> block_invertible;
    std::size_t samples = 0;
    double tracked_entry_mean = 0.0;   // mean of entry (0,0) across blocks and samples
    std::vector<double> block_entry_mean;  // per block, entry (0,0)
    double mean_abs_row_correlation = 0.0;
    double balance_violation_fraction = 0.0;  // |ones/m - 1/2| > delta, per block row
    double hoeffding_bound = 0.0;             // 2 exp(-2 delta^2 m)
    double delta = 0.0;
};

// Empirical check of the random-transformation statistics: entry
// distribution, row independence, and per-row balance of A*H over `samples`
// Bernoulli(1/2) draws of A. Thread-count independent for a fixed rng state.
Theorem1Report theorem1_diagnostics(const BitMatrix& h, std::mt19937_64& rng,
                                    std::size_t samples, double delta = 0.15);

}  // namespace btt
