#pragma once

#include <cstdint>

namespace gaussconf {

// Counter-based generator: the k-th draw is a pure function of (key, k).
// Streams split without shared state, and replay is bit-exact on any platform
// with IEEE doubles, which is what makes reports byte-reproducible.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc908ull)) {}

    // Independent stream derived from this one; does not advance the parent.
    CounterRng split(std::uint64_t stream) const {
        return CounterRng(key_ + 0x9e3779b97f4a7c15ull * (stream + 1), 0);
    }

    std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

    // Uniform in [0, 1), 53 mantissa bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    CounterRng(std::uint64_t raw_key, std::uint64_t counter) : key_(mix(raw_key)), counter_(counter) {}

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace gaussconf
