/**
 * Deterministic splittable random number generation.
 *
 * All randomness in the census and sampling code flows from a single 64-bit
 * seed. Independent streams are derived from (seed, stream index) with a
 * SplitMix64-style mix, so results are reproducible regardless of how work
 * is distributed across threads, and identical across platforms (no
 * implementation-defined std:: distributions are involved).
 */

#ifndef CEP_RNG_HPP
#define CEP_RNG_HPP

#include <cstdint>

namespace cep {

class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(mix(seed + 0x9e3779b97f4a7c15ULL) ^ mix(stream + 0xbf58476d1ce4e5b9ULL)))
    {
    }

    /// Next raw 64-bit value.
    std::uint64_t next()
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0)  // full 64-bit range
            return static_cast<std::int64_t>(next());
        // rejection sampling keeps the draw unbiased
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v = next();
        while (v >= limit)
            v = next();
        return lo + static_cast<std::int64_t>(v % span);
    }

    /// Fair coin.
    bool flip() { return (next() & 1ULL) != 0; }

private:
    static std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace cep

#endif  // CEP_RNG_HPP
