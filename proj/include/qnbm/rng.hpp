#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qnbm {

// splitmix64; used to whiten seeds and derive independent substreams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(base);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    return splitmix64(s ^ c);
}

//! Seeded random stream. mt19937_64 is bit-exact across platforms by the
//! standard; uniform doubles are produced by bit manipulation rather than
//! std::uniform_real_distribution so that sampled outputs are reproducible
//! independent of the standard library implementation.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    //! Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    //! Index into a cumulative probability vector (inverse CDF, one uniform).
    std::size_t sample_cumulative(std::span<const double> cumulative) {
        const double u = uniform();
        std::size_t lo = 0, hi = cumulative.size();
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cumulative[mid] <= u)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo < cumulative.size() ? lo : cumulative.size() - 1;
    }

  private:
    std::mt19937_64 engine_;
};

inline std::vector<double> cumulative_sum(std::span<const double> probabilities) {
    std::vector<double> cumulative(probabilities.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        acc += probabilities[i];
        cumulative[i] = acc;
    }
    return cumulative;
}

}  // namespace qnbm
