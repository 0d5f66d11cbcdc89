// SPDX-License-Identifier: Apache-2.0

#include "muran/rng.hpp"

#include <cmath>
#include <numbers>

namespace muran {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t hour, std::uint64_t policy,
                          std::string_view purpose) noexcept
{
    std::uint64_t s = mix64(master);
    s = mix64(s ^ hour);
    s = mix64(s ^ policy);
    return mix64(s ^ fnv1a64(purpose));
}

double Rng::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal()
{
    if (has_cached_)
    {
        has_cached_ = false;
        return cached_;
    }
    double u1 = 0.0;
    do
        u1 = uniform();
    while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(phi);
    has_cached_ = true;
    return r * std::cos(phi);
}

std::complex<double> Rng::complex_normal(double variance)
{
    const double s = std::sqrt(0.5 * variance);
    const double re = normal();
    const double im = normal();
    return {s * re, s * im};
}

} // namespace muran
