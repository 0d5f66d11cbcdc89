// SPDX-License-Identifier: Apache-2.0
//
// Link-level evaluation of a dual-polarised 2x2 MIMO backhaul link over a
// single-tap Rician channel with cross-polar leakage.

#ifndef MURAN_LINKLEVEL_HPP
#define MURAN_LINKLEVEL_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace muran {

struct LinkLevelParams
{
    double k_factor_db = 20.0; // +inf for a pure line-of-sight channel
    double carrier_hz = 26.0e9;
    double code_rate = 0.8;
    int n_tx = 2;
    int n_rx = 2;
    double xpd_db = 50.0; // +inf for no cross-polar leakage
    double cc_bandwidth_hz = 125.0e6;
    int n_cc = 8;
    double max_bits_per_symbol = 8.0;
    double overhead_factor = 0.5;

    static constexpr int kMaxComponentCarriers = 8;

    double se_cap() const { return n_tx * max_bits_per_symbol * code_rate; }
    void validate() const;
};

// Co-polar entries on the diagonal, cross-polar entries elsewhere.
struct ChannelRealization
{
    Eigen::MatrixXcd h;
};

class Rng;

ChannelRealization draw_channel(const LinkLevelParams &params, std::uint64_t seed);
ChannelRealization draw_channel(const LinkLevelParams &params, Rng &rng);

// code_rate * sum_i min(log2(1 + rho/n_tx * lambda_i), max_bits_per_symbol),
// lambda_i the eigenvalues of H H^H.
double spectral_efficiency(const ChannelRealization &channel, double snr_db, const LinkLevelParams &params);

// mean_se * n_cc * cc_bandwidth * overhead_factor
double throughput_bps(double mean_se, const LinkLevelParams &params);

struct SEResult
{
    std::vector<double> snr_grid_db;
    std::vector<double> mean_se_bps_hz;
    std::vector<double> ci95; // half-width, 1.96 * s / sqrt(n)
    int n_draws = 0;
};

// Draw d uses seed derive_seed(seed, d, 0, "linklevel.draw") and is reused at
// every SNR point, so each point sees the same channel population.
// `threads` <= 1 runs serially; results are identical either way.
SEResult sweep_snr(const LinkLevelParams &params, const std::vector<double> &snr_grid_db, int n_draws,
                   std::uint64_t seed, int threads = 1);

} // namespace muran

#endif
