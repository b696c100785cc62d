// ristr - RIS-enabled time reversal link simulator for near-field channels
// Copyright (C) 2026 ristr developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nearfield_channel.hpp"

#include <cmath>
#include <numbers>

namespace ristr {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
const double sqrt_4pi = std::sqrt(4.0 * std::numbers::pi);

// -2*pi*(r mod lambda)/lambda. fmod is exact, so the phase keeps full
// precision even when r spans hundreds of wavelengths.
double spherical_phase(double distance_m, double wavelength_m) {
    return -two_pi * std::fmod(distance_m, wavelength_m) / wavelength_m;
}

double endpoint_norm_checked(const Position3 &endpoint) {
    const double n = norm(endpoint);
    if (n == 0.0)
        throw Error(ErrorCode::endpoint_at_origin, "endpoint coincides with the array center");
    return n;
}

std::complex<double> cascade_coefficient(double amplitude, double phase_shift, double r_tx,
                                         double r_rx, double tx_norm, double rx_norm,
                                         double lambda) {
    const double magnitude = amplitude / (4.0 * std::numbers::pi * tx_norm * rx_norm);
    // Per-distance reduction keeps this consistent with the product of the
    // two link coefficients at any distance scale.
    const double angle =
        phase_shift + spherical_phase(r_tx, lambda) + spherical_phase(r_rx, lambda);
    return std::polar(magnitude, angle);
}

double cascade_delay(const SystemConfig &config, double phase_shift, double r_tx, double r_rx) {
    double length = r_tx + r_rx;
    if (config.delay_model == DelayModel::exact)
        length += config.wavelength() * phase_shift / two_pi;
    return length / config.speed_of_light;
}

} // namespace

std::complex<double> link_coefficient(const Position3 &endpoint, const Position3 &element,
                                      double wavelength_m) {
    const double center_distance = endpoint_norm_checked(endpoint);
    const double r = distance(endpoint, element);
    return std::polar(1.0 / (center_distance * sqrt_4pi), spherical_phase(r, wavelength_m));
}

std::complex<double> path_coefficient(const SystemConfig &config, const RisTopology &topology,
                                      int m, int n) {
    const double tx_norm = endpoint_norm_checked(config.tx_position);
    const double rx_norm = endpoint_norm_checked(config.rx_position);
    const Position3 element = topology.element_position(m, n);
    return cascade_coefficient(topology.amplitude(m, n), topology.phase_shift(m, n),
                               distance(config.tx_position, element),
                               distance(config.rx_position, element), tx_norm, rx_norm,
                               config.wavelength());
}

double path_delay(const SystemConfig &config, const RisTopology &topology, int m, int n) {
    const Position3 element = topology.element_position(m, n);
    return cascade_delay(config, topology.phase_shift(m, n),
                         distance(config.tx_position, element),
                         distance(config.rx_position, element));
}

PathSet build_path_set(const SystemConfig &config, const RisTopology &topology) {
    validate_near_field(config, topology);

    const double tx_norm = endpoint_norm_checked(config.tx_position);
    const double rx_norm = endpoint_norm_checked(config.rx_position);
    const double lambda = config.wavelength();

    PathSet set;
    set.paths.reserve(static_cast<std::size_t>(topology.element_count()));
    for (int m = -topology.half_rows(); m <= topology.half_rows(); ++m) {
        for (int n = -topology.half_cols(); n <= topology.half_cols(); ++n) {
            const Position3 element = topology.element_position(m, n);
            Path path;
            path.m = m;
            path.n = n;
            path.tx_distance_m = distance(config.tx_position, element);
            path.rx_distance_m = distance(config.rx_position, element);
            path.coefficient =
                cascade_coefficient(topology.amplitude(m, n), topology.phase_shift(m, n),
                                    path.tx_distance_m, path.rx_distance_m, tx_norm, rx_norm,
                                    lambda);
            path.delay_s = cascade_delay(config, topology.phase_shift(m, n), path.tx_distance_m,
                                         path.rx_distance_m);
            set.paths.push_back(path);
        }
    }

    set.tau_min_s = set.paths.front().delay_s;
    set.tau_max_s = set.paths.front().delay_s;
    for (const Path &path : set.paths) {
        set.tau_min_s = std::min(set.tau_min_s, path.delay_s);
        set.tau_max_s = std::max(set.tau_max_s, path.delay_s);
    }
    return set;
}

} // namespace ristr
