#pragma once

#include <cstdint>

namespace cellq {

// Engine-wide default seed; every randomized search derives its stream from
// this so failures reproduce. Override with --seed.
inline constexpr std::uint64_t kDefaultSeed = 0x5EEDCE11ull;

// splitmix64: tiny, deterministic, platform-independent.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // uniform in [lo, hi] inclusive
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // derive an independent stream for a named sub-task
    Rng fork(std::uint64_t tag) const { return Rng(state_ ^ (tag * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull)); }

private:
    std::uint64_t state_;
};

} // namespace cellq
