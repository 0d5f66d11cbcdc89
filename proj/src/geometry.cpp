// SPDX-License-Identifier: Apache-2.0

#include "muran/geometry.hpp"

#include <cmath>
#include <numbers>

namespace muran {

double distance(Vec2 a, Vec2 b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double distance3d(Vec2 a, double height_a, Vec2 b, double height_b)
{
    return std::hypot(distance(a, b), height_a - height_b);
}

double azimuth_deg(Vec2 from, Vec2 to)
{
    double deg = std::atan2(to.y - from.y, to.x - from.x) * 180.0 / std::numbers::pi;
    if (deg < 0.0)
        deg += 360.0;
    if (deg >= 360.0)
        deg -= 360.0;
    return deg;
}

double wrap_deg(double a_minus_b)
{
    double d = std::fmod(a_minus_b + 180.0, 360.0);
    if (d < 0.0)
        d += 360.0;
    return d - 180.0;
}

bool Hexagon::contains(Vec2 p) const
{
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    // Edge normals at 0, 60 and 120 degrees.
    constexpr double c60 = 0.5;
    constexpr double s60 = 0.86602540378443864676;
    const double eps = 1e-9;
    return std::abs(dx) <= apothem_m + eps && std::abs(c60 * dx + s60 * dy) <= apothem_m + eps &&
           std::abs(-c60 * dx + s60 * dy) <= apothem_m + eps;
}

double Hexagon::circumradius() const
{
    return apothem_m * 2.0 / std::sqrt(3.0);
}

int sector_for_azimuth(double azimuth, int n_sectors)
{
    const double width = 360.0 / n_sectors;
    double a = std::fmod(azimuth, 360.0);
    if (a < 0.0)
        a += 360.0;
    int k = static_cast<int>(std::floor((a + 0.5 * width) / width));
    return k % n_sectors;
}

double sector_boresight_deg(int sector, int n_sectors)
{
    return sector * 360.0 / n_sectors;
}

} // namespace muran
