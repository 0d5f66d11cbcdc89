// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random numbers and seed derivation.
//
// std::mt19937_64 has a fully specified output sequence, but the standard
// distributions do not. All variates are therefore built here from raw engine
// output so that a seed produces the same numbers with every standard library.

#ifndef MURAN_RNG_HPP
#define MURAN_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace muran {

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// 64-bit FNV-1a
constexpr std::uint64_t fnv1a64(std::string_view s) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s)
    {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Wildcard for the hour / policy slots of derive_seed when a purpose is not
// tied to a specific hour or policy.
inline constexpr std::uint64_t kAnySlot = 0xffffffffULL;

// Child seed for one (hour, policy, purpose) cell of an experiment:
//   s = mix64(mix64(mix64(mix64(master) ^ hour) ^ policy) ^ fnv1a64(purpose))
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t hour, std::uint64_t policy,
                          std::string_view purpose) noexcept;

class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of resolution.
    double uniform();

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (pairs are cached).
    double normal();

    // Circularly symmetric complex Gaussian with E|z|^2 = variance.
    std::complex<double> complex_normal(double variance = 1.0);

  private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace muran

#endif
