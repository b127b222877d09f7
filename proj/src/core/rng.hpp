#ifndef MARGIN_MCMC_RNG_HPP
#define MARGIN_MCMC_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>

namespace margin_mcmc {

// Seedable deterministic stream. The engine is std::mt19937_64, whose raw
// output sequence is fixed by the C++ standard, and every derived draw
// (bounded integers, pairs, unit doubles) is implemented here rather than
// with std::uniform_int_distribution, which is implementation-defined.
// Identical (seed, stream) pairs therefore produce identical draw sequences
// on every platform. Parallel chains take the same seed with distinct
// stream ids; the ids are whitened through a splitmix64 finalizer before
// seeding the engine.
class RngStream {
public:
    static constexpr std::string_view kAlgorithm = "mt19937-64/rs1";

    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(mix(seed, stream)) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound), bound >= 1. Unbiased via rejection.
    std::uint64_t below(std::uint64_t bound);

    int index(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    // Two distinct indices in [0, n), n >= 2, drawn as two independent
    // indices with rejection of equality. Order is as drawn.
    std::pair<int, int> distinct_pair(int n);

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

    std::mt19937_64 engine_;
};

}  // namespace margin_mcmc

#endif
