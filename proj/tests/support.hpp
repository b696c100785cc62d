// Shared test helpers: independent oracles for the time-reversal metrics
// and deterministic random generators for property- and acceptance-style
// tests. The oracles are direct transcriptions of the defining sums and
// stay independent of the library's computation paths.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "geometry.hpp"
#include "nearfield_channel.hpp"
#include "tapped_delay.hpp"

namespace testsupport {

using complexd = std::complex<double>;

// --------------------------------------------------------------------
// Brute-force oracles (direct double-loop sums, 1-based index math)
// --------------------------------------------------------------------

// Normalized time-reversed conjugate taps from raw channel taps.
inline std::vector<complexd> oracle_prefilter(const std::vector<complexd> &taps) {
    const int count = static_cast<int>(taps.size());
    double energy = 0.0;
    for (const complexd &h : taps)
        energy += h.real() * h.real() + h.imag() * h.imag();
    const double scale = std::sqrt(energy);
    std::vector<complexd> out(taps.size());
    for (int k = 1; k <= count; ++k)
        out[k - 1] = std::conj(taps[count + 1 - k - 1]) / scale;
    return out;
}

// Full convolution (f*g)[lag], lag = 1..2L-1, by unconstrained double loop.
inline std::vector<complexd> oracle_convolution(const std::vector<complexd> &f,
                                                const std::vector<complexd> &g) {
    const int count = static_cast<int>(f.size());
    std::vector<complexd> out(2 * static_cast<std::size_t>(count) - 1);
    for (int lag = 1; lag <= 2 * count - 1; ++lag) {
        complexd sum{0.0, 0.0};
        for (int k = 1; k <= count; ++k) {
            const int j = lag + 1 - k;
            if (j >= 1 && j <= count)
                sum += f[k - 1] * g[j - 1];
        }
        out[lag - 1] = sum;
    }
    return out;
}

struct OracleMetrics {
    double useful_power_w = 0.0;
    double isi_power_w = 0.0;
    double sinr = 0.0;
    double snr_bound = 0.0;
};

// Metrics via the squared matched-filter peak (the library uses the
// sum-of-squares form, so the two routes are independent).
inline OracleMetrics oracle_metrics(const std::vector<complexd> &taps, double power_w,
                                    double noise_variance) {
    const int count = static_cast<int>(taps.size());
    const auto prefilter = oracle_prefilter(taps);
    const auto response = oracle_convolution(prefilter, taps);

    OracleMetrics metrics;
    metrics.useful_power_w = power_w * std::norm(response[static_cast<std::size_t>(count - 1)]);
    for (int lag = 1; lag <= 2 * count - 1; ++lag)
        if (lag != count)
            metrics.isi_power_w += power_w * std::norm(response[static_cast<std::size_t>(lag - 1)]);
    metrics.sinr = metrics.useful_power_w / (metrics.isi_power_w + noise_variance);
    metrics.snr_bound = metrics.useful_power_w / noise_variance;
    return metrics;
}

// --------------------------------------------------------------------
// Random scenario generation
// --------------------------------------------------------------------

struct RandomScenario {
    ristr::SystemConfig config;
    int rows = 1;
    int cols = 3;
    double spacing_m = 0.015;
};

inline ristr::Position3 random_endpoint(std::mt19937 &rng, double bound_m) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    const double radius = (0.05 + 0.95 * unit(rng)) * bound_m;
    double x = 0.1 + 0.9 * unit(rng);
    double y = sym(rng);
    double z = sym(rng);
    const double scale = radius / std::sqrt(x * x + y * y + z * z);
    return ristr::Position3{x * scale, y * scale, z * scale};
}

// Random odd grid with Q <= max_elements, random bandwidth in [w_lo, w_hi],
// endpoints drawn inside the near-field bound with x > 0.
inline RandomScenario random_scenario(std::mt19937 &rng, long max_elements = 2025,
                                      double w_lo = 0.5e9, double w_hi = 8e9) {
    RandomScenario scenario;

    std::uniform_int_distribution<int> rows_dist(0, 22);
    scenario.rows = 2 * rows_dist(rng) + 1;
    const long max_cols = max_elements / scenario.rows;
    const int min_cols = scenario.rows == 1 ? 3 : 1; // a 1x1 grid has a zero bound
    std::uniform_int_distribution<int> cols_dist(0, static_cast<int>((max_cols - 1) / 2));
    scenario.cols = std::max(min_cols, 2 * cols_dist(rng) + 1);

    std::uniform_real_distribution<double> w_dist(w_lo, w_hi);
    scenario.config.bandwidth_hz = w_dist(rng);

    const auto topology = ristr::build_topology(scenario.rows, scenario.cols, scenario.spacing_m);
    const double bound = ristr::near_field_bound(topology);
    scenario.config.tx_position = random_endpoint(rng, bound);
    scenario.config.rx_position = random_endpoint(rng, bound);
    return scenario;
}

inline ristr::RisTopology build(const RandomScenario &scenario) {
    return ristr::build_topology(scenario.rows, scenario.cols, scenario.spacing_m);
}

// Co-phasing phase shift for one element, 2*pi*(r_tx + r_rx)/lambda reduced
// into [0, 2*pi).
inline double co_phase(const ristr::SystemConfig &config, const ristr::Position3 &element) {
    const double lambda = config.wavelength();
    const double r_tx = ristr::distance(config.tx_position, element);
    const double r_rx = ristr::distance(config.rx_position, element);
    double phase = 2.0 * std::numbers::pi *
                   (std::fmod(r_tx, lambda) + std::fmod(r_rx, lambda)) / lambda;
    while (phase >= 2.0 * std::numbers::pi)
        phase -= 2.0 * std::numbers::pi;
    if (phase < 0.0)
        phase = 0.0;
    return phase;
}

// Topology with the members of one tap co-phased and every other element
// switched off; used for the cross-module PBF identity.
inline ristr::RisTopology co_phased_tap_topology(const ristr::SystemConfig &config,
                                                 const ristr::RisTopology &topology,
                                                 const ristr::PathSet &paths,
                                                 const std::vector<std::size_t> &members) {
    std::vector<double> amplitudes(static_cast<std::size_t>(topology.element_count()), 0.0);
    std::vector<double> phases(static_cast<std::size_t>(topology.element_count()), 0.0);
    for (std::size_t index : members) {
        const ristr::Path &path = paths.paths[index];
        const std::size_t flat = topology.flat_index(path.m, path.n);
        amplitudes[flat] = 1.0;
        phases[flat] = co_phase(config, topology.element_position(path.m, path.n));
    }
    return topology.with_reflection_profile(amplitudes, phases);
}

} // namespace testsupport
