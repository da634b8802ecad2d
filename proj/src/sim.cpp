#include "btt/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "btt/channel.hpp"
#include "btt/constraints.hpp"
#include "btt/decoder.hpp"
#include "btt/rng.hpp"

namespace btt {

namespace {

struct Prepared {
    LinearCode code;
    std::vector<std::optional<SegmentationScheme>> schemes;  // aligned with l_values
};

Prepared prepare(const ExperimentPlan& plan) {
    if (plan.frames < 1) throw std::invalid_argument("sim: frames must be >= 1");
    if (plan.l_values.empty() || plan.ebn0_db.empty())
        throw std::invalid_argument("sim: empty l or ebn0 grid");
    if (plan.max_queries < 1) throw std::invalid_argument("sim: max_queries must be >= 1");
    const int target = *std::max_element(plan.l_values.begin(), plan.l_values.end());
    if (target < 0) throw std::invalid_argument("sim: negative l");

    if (target == 0) return Prepared{plan.code, {std::nullopt}};

    std::mt19937_64 rng(plan.btt_seed);
    BttResult r = balanced_tree_transform(plan.code.parity(), rng,
                      BttParams{target, plan.balance_delta, plan.btt_max_attempts});
    LinearCode tcode = plan.code.equivalent(r.a, r.layout.perm);

    Prepared prep{std::move(tcode), {}};
    for (int l : plan.l_values)
        prep.schemes.push_back(l == 0 ? std::optional<SegmentationScheme>{}
                                      : std::optional<SegmentationScheme>{
                                            build_scheme(r.layout, l)});
    return prep;
}

struct FrameRecord {
    std::uint32_t queries;
    std::uint8_t error;
    std::uint8_t abandoned;
};

// One frame: draw message + noise from its own rng stream, decode under
// every requested l. Pure function of (plan, prepared state, indices).
void simulate_frame(const ExperimentPlan& plan, const Prepared& prep, const ChannelConfig& cfg,
                    std::size_t point, std::uint64_t frame, FrameRecord* out) {
    std::mt19937_64 rng(mix_seed(plan.seed, point, frame));
    const BitVector u = BitVector::random(prep.code.k(), rng);
    const BitVector x = prep.code.encode(u);
    const std::vector<double> soft = transmit(x, cfg, rng);
    const ReceivedFrame rf = demodulate(soft, cfg);
    for (std::size_t li = 0; li < prep.schemes.size(); ++li) {
        const SegmentationScheme* sch = prep.schemes[li] ? &*prep.schemes[li] : nullptr;
        DecodeOutcome d = decode(rf, prep.code, sch, plan.max_queries);
        const bool abandoned = d.status == DecodeStatus::abandoned;
        out[li].queries = static_cast<std::uint32_t>(d.queries);
        out[li].abandoned = abandoned;
        out[li].error = abandoned || !(d.codeword == x);
    }
}

std::vector<PointResult> aggregate(const ExperimentPlan& plan,
                                   const std::vector<FrameRecord>& records) {
    const std::size_t nl = plan.l_values.size();
    const std::uint64_t nf = plan.frames;
    std::vector<PointResult> results;
    for (std::size_t p = 0; p < plan.ebn0_db.size(); ++p) {
        for (std::size_t li = 0; li < nl; ++li) {
            PointResult pr{};
            pr.ebn0_db = plan.ebn0_db[p];
            pr.l = plan.l_values[li];
            pr.frames = nf;
            std::uint64_t qsum = 0;
            double logsum = 0.0;
            for (std::uint64_t f = 0; f < nf; ++f) {
                const FrameRecord& rec = records[(p * nf + f) * nl + li];
                pr.block_errors += rec.error;
                pr.abandoned += rec.abandoned;
                qsum += rec.queries;
                logsum += std::log(static_cast<double>(rec.queries));
            }
            pr.bler = static_cast<double>(pr.block_errors) / static_cast<double>(nf);
            wilson_interval(pr.block_errors, nf, pr.bler_lo, pr.bler_hi);
            pr.avg_queries = static_cast<double>(qsum) / static_cast<double>(nf);
            pr.geomean_queries = std::exp(logsum / static_cast<double>(nf));
            results.push_back(pr);
        }
    }
    return results;
}

}  // namespace

std::vector<PointResult> run(const ExperimentPlan& plan) {
    const Prepared prep = prepare(plan);
    const std::size_t np = plan.ebn0_db.size();
    const std::size_t nl = plan.l_values.size();
    std::vector<ChannelConfig> cfgs;
    for (double e : plan.ebn0_db)
        cfgs.push_back(ChannelConfig::make(
            e, static_cast<double>(prep.code.k()) / static_cast<double>(prep.code.n())));

    std::vector<FrameRecord> records(np * plan.frames * nl);
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic, 16)
#endif
    for (long long p = 0; p < static_cast<long long>(np); ++p) {
        for (long long f = 0; f < static_cast<long long>(plan.frames); ++f) {
            simulate_frame(plan, prep, cfgs[static_cast<std::size_t>(p)],
                           static_cast<std::size_t>(p), static_cast<std::uint64_t>(f),
                           records.data() + (static_cast<std::size_t>(p) * plan.frames +
                                             static_cast<std::size_t>(f)) *
                                                nl);
        }
    }
    return aggregate(plan, records);
}

std::vector<PointResult> run_reference(const ExperimentPlan& plan) {
    const Prepared prep = prepare(plan);
    const std::size_t nl = plan.l_values.size();
    std::vector<FrameRecord> records(plan.ebn0_db.size() * plan.frames * nl);
    for (std::size_t p = 0; p < plan.ebn0_db.size(); ++p) {
        const ChannelConfig cfg = ChannelConfig::make(
            plan.ebn0_db[p],
            static_cast<double>(prep.code.k()) / static_cast<double>(prep.code.n()));
        for (std::uint64_t f = 0; f < plan.frames; ++f)
            simulate_frame(plan, prep, cfg, p, f, records.data() + (p * plan.frames + f) * nl);
    }
    return aggregate(plan, records);
}

std::vector<RatioRow> query_reduction_ratios(const std::vector<PointResult>& results) {
    std::vector<RatioRow> rows;
    for (const PointResult& r : results) {
        const PointResult* base = nullptr;
        for (const PointResult& b : results)
            if (b.l == 0 && b.ebn0_db == r.ebn0_db) base = &b;
        if (!base)
            throw std::runtime_error("query_reduction_ratios: no l=0 baseline at ebn0 " +
                                     std::to_string(r.ebn0_db));
        rows.push_back(RatioRow{r.ebn0_db, r.l, std::log2(base->avg_queries / r.avg_queries)});
    }
    return rows;
}

void wilson_interval(std::uint64_t successes, std::uint64_t trials, double& lo, double& hi) {
    if (trials == 0) {
        lo = 0.0;
        hi = 1.0;
        return;
    }
    const double z = 1.959963984540054;  // 97.5th normal percentile
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

std::string to_csv(const std::vector<PointResult>& results, std::uint64_t seed) {
    std::string out =
        "ebn0_db,l,frames,block_errors,bler,bler_lo,bler_hi,avg_queries,geomean_queries,"
        "abandoned,seed\n";
    char buf[512];
    for (const PointResult& r : results) {
        std::snprintf(buf, sizeof buf,
                      "%.10g,%d,%llu,%llu,%.10g,%.10g,%.10g,%.10g,%.10g,%llu,%llu\n", r.ebn0_db,
                      r.l, static_cast<unsigned long long>(r.frames),
                      static_cast<unsigned long long>(r.block_errors), r.bler, r.bler_lo,
                      r.bler_hi, r.avg_queries, r.geomean_queries,
                      static_cast<unsigned long long>(r.abandoned),
                      static_cast<unsigned long long>(seed));
        out += buf;
    }
    return out;
}

}  // namespace btt
