#pragma once

#include <random>
#include <vector>

#include "btt/bitmat.hpp"
#include "btt/pattern.hpp"

namespace btt {

// BPSK over AWGN with bit 0 -> +1, bit 1 -> -1 and Es = 1.
struct ChannelConfig {
    double ebn0_db;
    double rate;
    double sigma;  // noise std dev, sigma = (2 * rate * 10^(ebn0/10))^(-1/2)

    static ChannelConfig make(double ebn0_db, double rate);
};

// Deterministic Box-Muller normal sampler over a caller-owned engine; the
// standard library distributions are implementation-defined, this is not.
class NormalSampler {
public:
    explicit NormalSampler(std::mt19937_64& rng) : rng_(rng) {}
    double next();

private:
    std::mt19937_64& rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

std::vector<double> transmit(const BitVector& x, const ChannelConfig& cfg, std::mt19937_64& rng);

// LLR(r) = log f(r|1)/f(r|0) = -2 r / sigma^2 for this mapping.
double llr(double r, const ChannelConfig& cfg);

struct ReceivedFrame {
    std::vector<double> soft;
    BitVector hard;                   // 1 iff LLR > 0 (ties -> 0)
    std::vector<double> reliability;  // |LLR|
    RankPermutation ranks;            // global ranks; segment ranks attached on demand
};

ReceivedFrame demodulate(const std::vector<double>& soft, const ChannelConfig& cfg);

// Gaussian upper-tail probability, for channel-statistics checks.
double gaussian_q(double x);

}  // namespace btt
