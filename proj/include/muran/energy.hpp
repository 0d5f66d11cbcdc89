// SPDX-License-Identifier: Apache-2.0
//
// Sector-level energy accounting for the mmWave mesh:
//
//   P = sum over SC-BSs i of (N_i_on * p_on + N_i_off * p_off)
//
// The macro BS is not part of the sum.

#ifndef MURAN_ENERGY_HPP
#define MURAN_ENERGY_HPP

#include "muran/mesh_manager.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace muran {

class EnergyError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

class PowerModel
{
  public:
    // Defaults: 20 W per three-sector node when on, 10 % of that in standby.
    PowerModel() = default;
    // Requires p_on > p_off >= 0.
    PowerModel(double p_on_w, double p_off_w);
    // Skips the ordering check (test harnesses exploring degenerate models).
    static PowerModel unchecked(double p_on_w, double p_off_w);

    double p_on_w() const { return p_on_; }
    double p_off_w() const { return p_off_; }
    PowerModel scaled(double factor) const { return unchecked(p_on_ * factor, p_off_ * factor); }

  private:
    double p_on_ = 6.67;
    double p_off_ = 0.67;
};

// Sector count of every SC-BS, keyed by site id.
std::map<int, int> sector_counts(const Scenario &scenario);

// Throws EnergyError if `onoff` and `n_sectors` disagree on sites or counts.
double config_power(const OnOffConfig &onoff, const std::map<int, int> &n_sectors, const PowerModel &model);

struct HourEnergy
{
    int hour = 0;
    Policy policy = Policy::NetworkCentric;
    int active_sectors = 0;
    double watts = 0.0;
    double satisfied_fraction = 1.0;
};

struct EnergyReport
{
    PowerModel model;
    std::vector<HourEnergy> per_hour;            // ordered by (hour, policy)
    std::map<Policy, double> energy_wh;          // summed over the covered hours
    std::map<Policy, double> reduction_vs_always_on;
    std::vector<int> hours;                      // covered hours, ascending
    int total_sectors = 0;

    double daily_wh(Policy p) const { return energy_wh.at(p); }
};

// States per policy, each carrying one MeshState per covered hour (index i
// belongs to hours[i]). Reductions are taken against an all-sectors-on
// network over the same hours, which is what AlwaysOn consumes.
EnergyReport aggregate_energy(const std::map<Policy, std::vector<MeshState>> &states, const std::vector<int> &hours,
                              const std::map<int, int> &n_sectors, const PowerModel &model);

// Full-day variant: every policy must supply exactly hours 0..23.
EnergyReport daily_energy(const std::map<Policy, std::vector<MeshState>> &states, const std::map<int, int> &n_sectors,
                          const PowerModel &model);

} // namespace muran

#endif
