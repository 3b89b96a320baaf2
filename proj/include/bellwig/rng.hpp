#pragma once

#include <array>
#include <cstdint>

namespace bellwig {

/// Seed used by every command when none is given.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// xoshiro256** seeded through splitmix64.
///
/// The state is derived from (seed, stream), so independent substreams for
/// parallel or per-step work come from distinct stream ids under one seed.
/// Output is fully specified by the algorithm and identical on every
/// platform; uniform() uses the top 53 bits rather than a std distribution
/// for the same reason.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = kDefaultSeed, std::uint64_t stream = 0) noexcept;

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    std::uint64_t next_u64() noexcept;
    result_type operator()() noexcept { return next_u64(); }
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    /// Uniform double in [0, 1).
    double uniform() noexcept;
    /// True with probability p (p <= 0 never, p >= 1 always).
    bool bernoulli(double p) noexcept { return uniform() < p; }
    /// Uniform integer in [0, bound), bound > 0, without modulo bias.
    std::uint64_t below(std::uint64_t bound) noexcept;

    bool operator==(const Rng&) const noexcept = default;

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::array<std::uint64_t, 4> s_;
};

/// One step of splitmix64 on `state`, returning the mixed output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

}  // namespace bellwig
