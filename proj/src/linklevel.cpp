// SPDX-License-Identifier: Apache-2.0

#include "muran/linklevel.hpp"

#include "muran/rng.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <stdexcept>
#include <thread>

namespace muran {

void LinkLevelParams::validate() const
{
    auto fail = [](const char *field, const char *what) {
        throw std::invalid_argument(fmt::format("linklevel.{}: {}", field, what));
    };
    if (std::isnan(k_factor_db))
        fail("k_factor_db", "must be a number");
    if (!(carrier_hz > 0.0) || !std::isfinite(carrier_hz))
        fail("carrier_hz", "must be positive");
    if (!(code_rate > 0.0 && code_rate <= 1.0))
        fail("code_rate", "must be in (0, 1]");
    if (n_tx < 1)
        fail("n_tx", "must be at least 1");
    if (n_rx < 1)
        fail("n_rx", "must be at least 1");
    if (!(xpd_db >= 0.0))
        fail("xpd_db", "must be nonnegative");
    if (!(cc_bandwidth_hz > 0.0) || !std::isfinite(cc_bandwidth_hz))
        fail("cc_bandwidth_hz", "must be positive");
    if (n_cc < 1 || n_cc > kMaxComponentCarriers)
        fail("n_cc", "must be between 1 and 8 (at most eight component carriers)");
    if (!(max_bits_per_symbol > 0.0) || !std::isfinite(max_bits_per_symbol))
        fail("max_bits_per_symbol", "must be positive");
    if (!(overhead_factor > 0.0 && overhead_factor <= 1.0))
        fail("overhead_factor", "must be in (0, 1]");
}

ChannelRealization draw_channel(const LinkLevelParams &params, Rng &rng)
{
    const bool pure_los = std::isinf(params.k_factor_db) && params.k_factor_db > 0.0;
    const double k = pure_los ? 0.0 : std::pow(10.0, params.k_factor_db / 10.0);
    const double los_amp = pure_los ? 1.0 : std::sqrt(k / (k + 1.0));
    const double scatter_var = pure_los ? 0.0 : 1.0 / (k + 1.0);
    const double cross_var = std::isinf(params.xpd_db) ? 0.0 : std::pow(10.0, -params.xpd_db / 10.0);

    ChannelRealization ch;
    ch.h.resize(params.n_rx, params.n_tx);
    for (int r = 0; r < params.n_rx; ++r)
        for (int t = 0; t < params.n_tx; ++t)
        {
            // Both normals are always consumed to keep streams aligned across
            // parameter choices.
            const std::complex<double> g = rng.complex_normal(1.0);
            if (r == t)
                ch.h(r, t) = los_amp + std::sqrt(scatter_var) * g;
            else
                ch.h(r, t) = std::sqrt(cross_var) * g;
        }
    // Leakage redistributes power rather than adding it: each receive branch
    // keeps unit expected gain.
    for (int r = 0; r < params.n_rx; ++r)
    {
        const int cross = params.n_tx - (r < params.n_tx ? 1 : 0);
        const double branch = (r < params.n_tx ? 1.0 : 0.0) + cross * cross_var;
        if (branch > 0.0)
            ch.h.row(r) /= std::sqrt(branch);
    }
    return ch;
}

ChannelRealization draw_channel(const LinkLevelParams &params, std::uint64_t seed)
{
    params.validate();
    Rng rng(seed);
    return draw_channel(params, rng);
}

double spectral_efficiency(const ChannelRealization &channel, double snr_db, const LinkLevelParams &params)
{
    if (snr_db == -std::numeric_limits<double>::infinity())
        return 0.0;
    const Eigen::MatrixXcd gram = channel.h * channel.h.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
    const double rho = std::pow(10.0, snr_db / 10.0);
    const int n_tx = static_cast<int>(channel.h.cols());
    double se = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    {
        const double lambda = std::max(0.0, eig.eigenvalues()(i));
        const double stream = std::log2(1.0 + rho / n_tx * lambda);
        se += std::min(stream, params.max_bits_per_symbol);
    }
    return params.code_rate * se;
}

double throughput_bps(double mean_se, const LinkLevelParams &params)
{
    params.validate();
    return mean_se * params.n_cc * params.cc_bandwidth_hz * params.overhead_factor;
}

SEResult sweep_snr(const LinkLevelParams &params, const std::vector<double> &snr_grid_db, int n_draws,
                   std::uint64_t seed, int threads)
{
    params.validate();
    if (snr_grid_db.empty())
        throw std::invalid_argument("SNR grid is empty");
    if (n_draws < 1)
        throw std::invalid_argument("at least one draw per SNR point is required");

    const std::size_t n_points = snr_grid_db.size();
    const auto draws = static_cast<std::size_t>(n_draws);
    // samples[d * n_points + p]
    std::vector<double> samples(draws * n_points);

    auto work = [&](std::size_t first, std::size_t last) {
        for (std::size_t d = first; d < last; ++d)
        {
            Rng rng(derive_seed(seed, d, 0, "linklevel.draw"));
            const ChannelRealization ch = draw_channel(params, rng);
            for (std::size_t p = 0; p < n_points; ++p)
                samples[d * n_points + p] = spectral_efficiency(ch, snr_grid_db[p], params);
        }
    };

    const std::size_t n_threads = std::clamp<std::size_t>(threads < 1 ? 1 : static_cast<std::size_t>(threads), 1, draws);
    if (n_threads == 1)
        work(0, draws);
    else
    {
        std::vector<std::thread> pool;
        const std::size_t chunk = (draws + n_threads - 1) / n_threads;
        for (std::size_t t = 0; t < n_threads; ++t)
        {
            const std::size_t first = t * chunk;
            const std::size_t last = std::min(draws, first + chunk);
            if (first < last)
                pool.emplace_back(work, first, last);
        }
        for (auto &th : pool)
            th.join();
    }

    SEResult res;
    res.snr_grid_db = snr_grid_db;
    res.n_draws = n_draws;
    res.mean_se_bps_hz.resize(n_points);
    res.ci95.resize(n_points);
    for (std::size_t p = 0; p < n_points; ++p)
    {
        // Summing offsets from the largest sample keeps the mean at or below it.
        double top = samples[p];
        for (std::size_t d = 1; d < draws; ++d)
            top = std::max(top, samples[d * n_points + p]);
        double offset = 0.0;
        for (std::size_t d = 0; d < draws; ++d)
            offset += samples[d * n_points + p] - top;
        const double mean = top + offset / static_cast<double>(draws);
        double ss = 0.0;
        for (std::size_t d = 0; d < draws; ++d)
        {
            const double dev = samples[d * n_points + p] - mean;
            ss += dev * dev;
        }
        res.mean_se_bps_hz[p] = mean;
        res.ci95[p] = draws > 1 ? 1.96 * std::sqrt(ss / static_cast<double>(draws - 1)) / std::sqrt(static_cast<double>(draws)) : 0.0;
    }
    return res;
}

} // namespace muran
