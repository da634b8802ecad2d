#include "btt/channel.hpp"

#include <cmath>

namespace btt {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}
}  // namespace

ChannelConfig ChannelConfig::make(double ebn0_db, double rate) {
    if (rate <= 0.0 || rate > 1.0) throw std::invalid_argument("channel: rate must be in (0,1]");
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    return ChannelConfig{ebn0_db, rate, 1.0 / std::sqrt(2.0 * rate * ebn0)};
}

double NormalSampler::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform01(rng_);
    const double u2 = uniform01(rng_);
    const double mag = std::sqrt(-2.0 * std::log1p(-u1));  // log(1-u1), never log(0)
    spare_ = mag * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return mag * std::cos(kTwoPi * u2);
}

std::vector<double> transmit(const BitVector& x, const ChannelConfig& cfg, std::mt19937_64& rng) {
    NormalSampler normal(rng);
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = (x[i] ? -1.0 : 1.0) + cfg.sigma * normal.next();
    return r;
}

double llr(double r, const ChannelConfig& cfg) { return -2.0 * r / (cfg.sigma * cfg.sigma); }

ReceivedFrame demodulate(const std::vector<double>& soft, const ChannelConfig& cfg) {
    ReceivedFrame f;
    f.soft = soft;
    f.hard = BitVector(soft.size());
    f.reliability.resize(soft.size());
    for (std::size_t i = 0; i < soft.size(); ++i) {
        const double l = llr(soft[i], cfg);
        if (l > 0.0) f.hard.set(i, true);
        f.reliability[i] = std::abs(l);
    }
    f.ranks = rank_reliabilities(f.reliability);
    return f;
}

double gaussian_q(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

}  // namespace btt
