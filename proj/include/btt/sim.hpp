#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "btt/code.hpp"
#include "btt/tree.hpp"

namespace btt {

struct ExperimentPlan {
    explicit ExperimentPlan(LinearCode c) : code(std::move(c)) {}

    LinearCode code;
    std::vector<int> l_values{0};       // constraint counts to sweep; 0 = plain ORBGRAND
    double balance_delta = 0.15;
    std::uint64_t btt_seed = 1;
    int btt_max_attempts = 1000;
    std::vector<double> ebn0_db{4.0};
    std::uint64_t frames = 10000;
    std::uint64_t max_queries = 1000000;  // abandoned frames count as block errors
    std::uint64_t seed = 0xb77dec0de5eedULL;
};

struct PointResult {
    double ebn0_db;
    int l;
    std::uint64_t frames;
    std::uint64_t block_errors;
    double bler;
    double bler_lo, bler_hi;  // Wilson 95% interval
    double avg_queries;
    double geomean_queries;
    std::uint64_t abandoned;
};

// Monte Carlo sweep over (ebn0, l). Any l > 0 triggers one BTT of the code's
// parity check matrix; every l value then runs on the transformed code so
// query counts are comparable. Per-frame rng streams are derived from
// (seed, point index, frame index), so results are bit-identical for any
// thread count. Frames are shared across l values at a given ebn0 point.
std::vector<PointResult> run(const ExperimentPlan& plan);

// Serial reference of the same experiment, for testing and benchmarking the
// parallel path; produces identical results.
std::vector<PointResult> run_reference(const ExperimentPlan& plan);

struct RatioRow {
    double ebn0_db;
    int l;
    double log2_ratio;  // log2(avg_queries[l=0] / avg_queries[l])
};

// Requires an l=0 baseline at every ebn0 point present in `results`.
std::vector<RatioRow> query_reduction_ratios(const std::vector<PointResult>& results);

// Wilson 95% score interval for a binomial proportion.
void wilson_interval(std::uint64_t successes, std::uint64_t trials, double& lo, double& hi);

// CSV with the exact column set the CLI contract pins down.
std::string to_csv(const std::vector<PointResult>& results, std::uint64_t seed);

}  // namespace btt
