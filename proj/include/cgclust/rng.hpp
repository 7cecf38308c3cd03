#pragma once

#include <cstdint>
#include <random>

namespace cgclust {

namespace detail {

// splitmix64 finalizer; used to turn seeds and stream ids into well-mixed
// engine seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace detail

// Deterministic random source. std::mt19937_64 has a standard-specified
// output sequence, but the std distributions do not, so the bounded draws
// below are implemented directly; a seed reproduces the same stream on any
// toolchain.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased draw from [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // largest multiple of bound that fits in 64 bits
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    // Inclusive range [lo, hi].
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double real01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Independent child stream. Children with distinct ids do not share
    // draws with each other or with this stream.
    Rng derive(std::uint64_t stream_id) const {
        return Rng(detail::mix64(seed_ ^ detail::mix64(stream_id)));
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace cgclust
