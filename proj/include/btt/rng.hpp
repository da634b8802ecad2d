#pragma once

#include <cstdint>

namespace btt {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream seed for an indexed sub-task; results never depend on which thread
// runs the task.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a) {
    return splitmix64(master ^ splitmix64(a + 1));
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return mix_seed(mix_seed(master, a), b);
}

}  // namespace btt
