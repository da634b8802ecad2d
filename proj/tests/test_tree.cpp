#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "btt/oracle.hpp"
#include "btt/tree.hpp"
#include "test_util.hpp"

using namespace btt;

namespace {

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.get(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.get(i, j));
    }
    return m;
}

double exact_balance_violation(int m, double delta) {
    // two-sided binomial tail of |W/m - 1/2| > delta for W ~ Bin(m, 1/2)
    double total = 0.0;
    for (int w = 0; w <= m; ++w) {
        if (std::abs(w / double(m) - 0.5) <= delta) continue;
        double logc = std::lgamma(m + 1) - std::lgamma(w + 1) - std::lgamma(m - w + 1);
        total += std::exp(logc - m * std::log(2.0));
    }
    return total;
}

}  // namespace

TEST_CASE("sort_columns_tree on the worked example") {
    TreeLayout layout = sort_columns_tree(ref::paper_h34());
    CHECK(layout.column_values == std::vector<std::uint64_t>{7, 4, 3, 2});
    CHECK(layout.h_tree == ref::to_bits({{1, 1, 0, 0}, {1, 0, 1, 1}, {1, 0, 1, 0}}));
    CHECK(layout.perm == Permutation({1, 2, 3, 0}));
}

TEST_CASE("sort_columns_tree stability") {
    TreeLayout sorted = sort_columns_tree(ref::fig1_h38());
    CHECK(sorted.perm == Permutation::identity(8));

    // duplicate columns keep their relative order
    BitMatrix dup = ref::to_bits({{0, 1, 0, 1}, {1, 0, 1, 0}});
    TreeLayout layout = sort_columns_tree(dup);
    CHECK(layout.perm == Permutation({2, 0, 3, 1}));
    CHECK(layout.column_values == std::vector<std::uint64_t>{2, 2, 1, 1});
}

TEST_CASE("leaf sets of the tree illustration") {
    TreeLayout layout = sort_columns_tree(ref::fig1_h38());
    auto sets = leaf_sets(layout, 2);
    REQUIRE(sets.size() == 4);
    // descending prefixes 11, 10, 01, 00 with two columns each
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(sets[i].prefix == 3 - i);
        CHECK(sets[i].lo == 2 * i);
        CHECK(sets[i].hi == 2 * i + 2);
    }
}

TEST_CASE("leaf sets partition and nest") {
    BitMatrix ones(2, 5);
    for (std::size_t j = 0; j < 5; ++j) ones.set(0, j, true);
    TreeLayout all1 = sort_columns_tree(ones);
    auto sets = leaf_sets(all1, 1);
    CHECK(sets[0].size() == 5);  // L_1
    CHECK(sets[1].empty());      // L_0

    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        TreeLayout layout = sort_columns_tree(BitMatrix::random(4, 12, rng));
        for (int ell = 1; ell <= 4; ++ell) {
            auto ls = leaf_sets(layout, ell);
            CHECK(ls.size() == std::size_t(1) << ell);
            std::size_t covered = 0;
            for (std::size_t i = 0; i < ls.size(); ++i) {
                CHECK(ls[i].lo == (i == 0 ? 0 : ls[i - 1].hi));  // contiguous partition
                covered += ls[i].size();
                for (std::size_t j = ls[i].lo; j < ls[i].hi; ++j)
                    for (int b = 0; b < ell; ++b)
                        CHECK(layout.h_tree.get(b, j) ==
                              bool((ls[i].prefix >> (ell - 1 - b)) & 1));
            }
            CHECK(covered == 12);
        }
        // property 1: a depth-l set is the union of its two depth-(l+1) children
        auto parents = leaf_sets(layout, 2);
        auto children = leaf_sets(layout, 3);
        for (const auto& p : parents) {
            const auto& hi = children[2 * (3 - p.prefix)];
            const auto& lo = children[2 * (3 - p.prefix) + 1];
            CHECK(hi.prefix == 2 * p.prefix + 1);
            CHECK(lo.prefix == 2 * p.prefix);
            CHECK(p.lo == hi.lo);
            CHECK(hi.hi == lo.lo);
            CHECK(lo.hi == p.hi);
        }
    }
    CHECK_THROWS_AS(leaf_sets(all1, 0), std::invalid_argument);
    CHECK_THROWS_AS(leaf_sets(all1, 3), std::invalid_argument);
}

TEST_CASE("max_usable_rows") {
    CHECK(max_usable_rows(sort_columns_tree(ref::fig1_h38())) == 3);
    CHECK(max_usable_rows(sort_columns_tree(ref::to_bits({{1, 1}, {1, 1}}))) == 1);
    CHECK(max_usable_rows(sort_columns_tree(BitMatrix(2, 4))) == 0);  // zero matrix: L_1 empty

    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 4 + rng() % 13;
        TreeLayout layout = sort_columns_tree(BitMatrix::random(5, n, rng));
        const int got = max_usable_rows(layout);
        CHECK(got <= std::floor(std::log2(double(n))));
        CHECK(got <= 5);
        if (got >= 1) {
            // every weight-one prefix nonempty at the reported depth
            auto ls = leaf_sets(layout, got);
            for (int i = 1; i <= got; ++i) {
                const std::uint64_t target = std::uint64_t(1) << (got - i);
                bool found = false;
                for (const auto& s : ls) found |= (s.prefix == target && !s.empty());
                CHECK(found);
            }
        }
    }
}

TEST_CASE("btt accepts and is deterministic") {
    BitMatrix h = bch_code(15, 7).parity();
    std::mt19937_64 r1(42), r2(42);
    BttParams params{2, 0.2, 500};
    BttResult a = balanced_tree_transform(h, r1, params);
    BttResult b = balanced_tree_transform(h, r2, params);
    CHECK(a.a == b.a);
    CHECK(a.layout.h_tree == b.layout.h_tree);
    CHECK(a.layout.perm == b.layout.perm);
    CHECK(a.usable_rows == b.usable_rows);

    CHECK(a.usable_rows >= 2);
    CHECK(a.balance_score <= 0.2);
    CHECK(a.a.is_invertible());
    CHECK(a.layout.h_tree == sort_columns_tree(a.a * h).h_tree);
}

TEST_CASE("btt on the paper's BCH(127,106) code") {
    BitMatrix h = bch_code(127, 106).parity();
    std::mt19937_64 rng(7);
    BttResult r = balanced_tree_transform(h, rng, BttParams{6, 0.15, 100});
    CHECK(r.usable_rows >= 6);
    for (int i = 0; i < 6; ++i) {
        const double frac = r.layout.h_tree.row_weight(i) / 127.0;
        CHECK(std::abs(frac - 0.5) <= 0.15);
    }
    // the first rows split the columns into blocks of comparable size
    auto ls = leaf_sets(r.layout, 3);
    for (const auto& s : ls) CHECK(s.size() >= 4);
}

TEST_CASE("btt preserves the codebook") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 5; ++t) {
        LinearCode code = ref::random_code(10, 5, rng);
        BttResult r = balanced_tree_transform(code.parity(), rng, BttParams{1, 0.4, 500});
        CHECK(!oracle::check_codebook_preservation(code, r.a, r.layout.perm));
    }
}

TEST_CASE("btt failure reports the best attempt") {
    // a 1x4 all-ones row can never be balanced to within 0.15 of 1/2
    BitMatrix ones(1, 4);
    for (std::size_t j = 0; j < 4; ++j) ones.set(0, j, true);
    try {
        std::mt19937_64 rng(1);
        balanced_tree_transform(ones, rng, BttParams{1, 0.15, 50});
        CHECK(false);
    } catch (const TransformError& e) {
        REQUIRE(e.best.has_value());
        CHECK(e.best->usable_rows == 1);
        CHECK(e.best->balance_score == doctest::Approx(0.5));
    }
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(balanced_tree_transform(ones, rng, BttParams{3, 0.5, 10}), std::invalid_argument);
}

TEST_CASE("theorem 1 diagnostics: identity code, tracked entry") {
    std::mt19937_64 rng(13);
    Theorem1Report rep = theorem1_diagnostics(BitMatrix::identity(8), rng, 10000);
    CHECK(rep.preconditions_ok);
    CHECK(rep.kappa == 1);
    CHECK(std::abs(rep.tracked_entry_mean - 0.5) < 0.02);
}

TEST_CASE("theorem 1 diagnostics: two invertible blocks") {
    std::mt19937_64 rng(17);
    BitMatrix h = hstack(BitMatrix::random_invertible(16, rng),
                         BitMatrix::random_invertible(16, rng));
    Theorem1Report rep = theorem1_diagnostics(h, rng, 10000);
    CHECK(rep.preconditions_ok);
    CHECK(rep.kappa == 2);
    for (double mean : rep.block_entry_mean) CHECK(std::abs(mean - 0.5) < 0.02);
    CHECK(rep.mean_abs_row_correlation < 0.03);
    CHECK(rep.balance_violation_fraction < rep.hoeffding_bound);
}

TEST_CASE("theorem 1 diagnostics: balance violations match the binomial tail") {
    // With uniform block entries the violation rate is the exact two-sided
    // binomial tail; for m=24, delta=0.15 that is ~0.152, far below the
    // (loose) Hoeffding bound 2 exp(-2 delta^2 m) ~ 0.679.
    std::mt19937_64 rng(19);
    BitMatrix h = BitMatrix::random_invertible(24, rng);
    Theorem1Report rep = theorem1_diagnostics(h, rng, 10000, 0.15);
    const double exact = exact_balance_violation(24, 0.15);
    CHECK(exact == doctest::Approx(0.1516).epsilon(0.01));
    CHECK(std::abs(rep.balance_violation_fraction - exact) < 0.02);
    CHECK(rep.balance_violation_fraction < rep.hoeffding_bound);
}

TEST_CASE("theorem 1 diagnostics: degraded reports") {
    std::mt19937_64 rng(23);
    Theorem1Report bad_shape = theorem1_diagnostics(BitMatrix::random(3, 4, rng), rng, 10);
    CHECK(!bad_shape.preconditions_ok);
    CHECK(bad_shape.kappa == 0);

    BitMatrix singular(2, 4);  // first 2x2 block is all-zero
    singular.set(0, 2, true);
    singular.set(1, 3, true);
    Theorem1Report rep = theorem1_diagnostics(singular, rng, 100);
    CHECK(!rep.preconditions_ok);
    CHECK(rep.block_invertible == std::vector<bool>{false, true});
    CHECK(rep.samples == 100);
}
