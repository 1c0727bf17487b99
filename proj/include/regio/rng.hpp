#pragma once

#include <cstdint>

namespace regio {

// xoshiro256** seeded through splitmix64 (Blackman & Vigna). All pipeline
// randomness flows through this generator so runs are reproducible: the raw
// stream is a pure function of the 64-bit seed, independent of platform and
// standard-library internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    // Independent stream for substream `index` of run seed `seed`; used for
    // per-restart streams so restarts can run in any order.
    static Rng substream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();

    // Uniform on [0, 1), 53-bit resolution.
    double uniform();

    // Uniform integer in [0, bound), unbiased via rejection. bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    // Standard normal deviate (Box-Muller; the spare is cached).
    double normal();

private:
    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace regio
