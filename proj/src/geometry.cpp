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

#include "geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ristr {

double norm(const Position3 &p) {
    return std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
}

double distance(const Position3 &p, const Position3 &q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    const double dz = p.z - q.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

namespace {

bool finite(const Position3 &p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

} // namespace

void validate(const SystemConfig &config) {
    if (!(config.carrier_frequency_hz > 0.0))
        throw Error(ErrorCode::unit_error, "carrier frequency must be positive");
    if (!(config.bandwidth_hz > 0.0))
        throw Error(ErrorCode::unit_error, "bandwidth must be positive");
    if (!(config.transmit_power_w > 0.0))
        throw Error(ErrorCode::unit_error, "transmit power must be positive");
    if (!(config.noise_variance > 0.0))
        throw Error(ErrorCode::unit_error, "noise variance must be positive");
    if (!finite(config.tx_position) || !finite(config.rx_position))
        throw Error(ErrorCode::unit_error, "endpoint positions must be finite");
    if (!(config.tx_position.x > 0.0))
        throw Error(ErrorCode::unit_error, "tx position must lie at x > 0");
    if (!(config.rx_position.x > 0.0))
        throw Error(ErrorCode::unit_error, "rx position must lie at x > 0");
    if (!(config.speed_of_light > 0.0))
        throw Error(ErrorCode::unit_error, "speed of light must be positive");
}

RisTopology::RisTopology(int rows, int cols, double spacing_m)
    : rows_(rows), cols_(cols), spacing_m_(spacing_m),
      amplitude_(static_cast<std::size_t>(rows) * cols, 1.0),
      phase_(static_cast<std::size_t>(rows) * cols, 0.0) {}

Position3 RisTopology::element_position(int m, int n) const {
    flat_index(m, n); // range check
    return Position3{0.0, n * spacing_m_, m * spacing_m_};
}

std::size_t RisTopology::flat_index(int m, int n) const {
    if (m < -half_rows() || m > half_rows() || n < -half_cols() || n > half_cols()) {
        std::ostringstream msg;
        msg << "element (" << m << ", " << n << ") outside " << rows_ << "x" << cols_ << " grid";
        throw Error(ErrorCode::unknown_index, msg.str());
    }
    return static_cast<std::size_t>(m + half_rows()) * cols_ + static_cast<std::size_t>(n + half_cols());
}

std::pair<int, int> RisTopology::element_at(std::size_t flat_index) const {
    if (flat_index >= amplitude_.size())
        throw Error(ErrorCode::unknown_index, "flat element index out of range");
    const int m = static_cast<int>(flat_index / cols_) - half_rows();
    const int n = static_cast<int>(flat_index % cols_) - half_cols();
    return {m, n};
}

namespace {

void check_reflection(double amplitude, double phase_shift) {
    if (!(amplitude >= 0.0 && amplitude <= 1.0))
        throw Error(ErrorCode::invalid_argument, "reflection amplitude must lie in [0, 1]");
    if (!(phase_shift >= 0.0 && phase_shift < 2.0 * std::numbers::pi))
        throw Error(ErrorCode::invalid_argument, "phase shift must lie in [0, 2*pi)");
}

} // namespace

RisTopology RisTopology::with_reflection(int m, int n, double amplitude, double phase_shift) const {
    check_reflection(amplitude, phase_shift);
    RisTopology out = *this;
    const std::size_t i = flat_index(m, n);
    out.amplitude_[i] = amplitude;
    out.phase_[i] = phase_shift;
    return out;
}

RisTopology RisTopology::with_uniform_reflection(double amplitude, double phase_shift) const {
    check_reflection(amplitude, phase_shift);
    RisTopology out = *this;
    out.amplitude_.assign(out.amplitude_.size(), amplitude);
    out.phase_.assign(out.phase_.size(), phase_shift);
    return out;
}

RisTopology RisTopology::with_reflection_profile(const std::vector<double> &amplitudes,
                                                 const std::vector<double> &phase_shifts) const {
    if (amplitudes.size() != amplitude_.size() || phase_shifts.size() != phase_.size())
        throw Error(ErrorCode::length_mismatch,
                    "reflection profile length must equal the element count");
    for (std::size_t i = 0; i < amplitudes.size(); ++i)
        check_reflection(amplitudes[i], phase_shifts[i]);
    RisTopology out = *this;
    out.amplitude_ = amplitudes;
    out.phase_ = phase_shifts;
    return out;
}

RisTopology build_topology(int rows, int cols, double spacing_m) {
    if (rows < 1 || cols < 1)
        throw Error(ErrorCode::invalid_argument, "grid dimensions must be at least 1");
    if (rows % 2 == 0 || cols % 2 == 0) {
        std::ostringstream msg;
        msg << "grid dimensions must be odd so the center element sits at the origin, got "
            << rows << "x" << cols;
        throw Error(ErrorCode::even_dimension, msg.str());
    }
    if (!(spacing_m > 0.0))
        throw Error(ErrorCode::nonpositive_spacing, "element spacing must be positive");
    return RisTopology(rows, cols, spacing_m);
}

double half_wave_spacing(const SystemConfig &config) {
    return config.speed_of_light / (2.0 * config.carrier_frequency_hz);
}

RisTopology build_half_wave_topology(const SystemConfig &config, int rows, int cols) {
    return build_topology(rows, cols, half_wave_spacing(config));
}

double aperture_m(const RisTopology &topology) {
    const double dm = topology.rows() - 1;
    const double dn = topology.cols() - 1;
    return topology.spacing_m() * std::sqrt(dm * dm + dn * dn);
}

double rayleigh_distance(const RisTopology &topology, double wavelength_m) {
    const double d = aperture_m(topology);
    return 2.0 * d * d / wavelength_m;
}

double near_field_bound(const RisTopology &topology) {
    const double dm = topology.rows() - 1;
    const double dn = topology.cols() - 1;
    return topology.spacing_m() * (dm * dm + dn * dn);
}

NearFieldReport validate_near_field(const SystemConfig &config, const RisTopology &topology) {
    NearFieldReport report;
    report.bound_m = near_field_bound(topology);
    report.tx_distance_m = norm(config.tx_position);
    report.rx_distance_m = norm(config.rx_position);
    report.tx_within = report.tx_distance_m <= report.bound_m;
    report.rx_within = report.rx_distance_m <= report.bound_m;
    if (config.near_field_policy == NearFieldPolicy::strict && !report.ok()) {
        std::ostringstream msg;
        msg << "endpoint outside the near-field bound of " << report.bound_m << " m:";
        if (!report.tx_within) msg << " tx at " << report.tx_distance_m << " m";
        if (!report.rx_within) msg << " rx at " << report.rx_distance_m << " m";
        throw Error(ErrorCode::outside_near_field, msg.str());
    }
    return report;
}

} // namespace ristr
