#include "core/rng.hpp"

#include "core/error.hpp"

namespace margin_mcmc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t RngStream::mix(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(~stream));
}

std::uint64_t RngStream::below(std::uint64_t bound) {
    if (bound == 0) {
        throw Error(ErrorCode::invalid_argument, "uniform draw with empty range");
    }
    // Largest multiple of bound that fits; values above it are rejected.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

std::pair<int, int> RngStream::distinct_pair(int n) {
    if (n < 2) {
        throw Error(ErrorCode::invalid_argument, "distinct pair requires at least two items");
    }
    int first = index(n);
    int second;
    do {
        second = index(n);
    } while (second == first);
    return {first, second};
}

}  // namespace margin_mcmc
