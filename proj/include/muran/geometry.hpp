// SPDX-License-Identifier: Apache-2.0

#ifndef MURAN_GEOMETRY_HPP
#define MURAN_GEOMETRY_HPP

namespace muran {

struct Vec2
{
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Vec2 &, const Vec2 &) = default;
};

double distance(Vec2 a, Vec2 b);

// Slant range between two antennas at the given heights.
double distance3d(Vec2 a, double height_a, Vec2 b, double height_b);

// Azimuth of `to` seen from `from`, degrees in [0, 360), counter-clockwise from +x.
double azimuth_deg(Vec2 from, Vec2 to);

// Signed angular difference a - b wrapped to [-180, 180).
double wrap_deg(double a_minus_b);

// Regular hexagon with apothem = inter-site distance / 2 (the cell of one
// macro site in a hexagonal layout). Vertices point along +/- y.
struct Hexagon
{
    Vec2 center;
    double apothem_m = 0.0;

    bool contains(Vec2 p) const;
    double circumradius() const;
};

// Sector index (0..n_sectors-1) whose boresight is closest to the azimuth.
// Sector k has boresight k * 360 / n_sectors degrees.
int sector_for_azimuth(double azimuth_deg, int n_sectors);

double sector_boresight_deg(int sector, int n_sectors);

} // namespace muran

#endif
