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

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ristr {

inline constexpr double speed_of_light_m_s = 299792458.0;

struct Position3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double norm(const Position3 &p);
double distance(const Position3 &p, const Position3 &q);

enum class DelayModel { approximate, exact };
enum class NearFieldPolicy { warn, strict };

/// Physical link parameters. Power is stored linear (watts); the config
/// loader converts from dBm at the boundary. The speed of light is a fixed
/// constant; the field exists so sensitivity harnesses can perturb it
/// programmatically (it is not configurable through the file schema).
struct SystemConfig {
    double carrier_frequency_hz = 10e9;
    double bandwidth_hz = 2e9;
    double transmit_power_w = 1.0; // 30 dBm
    double noise_variance = 1.0;
    Position3 tx_position{2.0, 2.0, 0.0};
    Position3 rx_position{2.0, -2.0, 0.0};
    DelayModel delay_model = DelayModel::approximate;
    NearFieldPolicy near_field_policy = NearFieldPolicy::warn;
    double speed_of_light = speed_of_light_m_s;

    double wavelength() const { return speed_of_light / carrier_frequency_hz; }
};

/// Throws Error(unit_error) when a physical parameter is out of range.
void validate(const SystemConfig &config);

/// Planar reflecting element grid in the yz-plane, centered on the origin.
/// Row index m and column index n are signed and run over
/// m = -(rows-1)/2 ... +(rows-1)/2, n = -(cols-1)/2 ... +(cols-1)/2,
/// so both dimensions must be odd. Element (m, n) sits at (0, n*d, m*d).
class RisTopology {
  public:
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long element_count() const { return static_cast<long>(rows_) * cols_; }
    double spacing_m() const { return spacing_m_; }

    int half_rows() const { return (rows_ - 1) / 2; }
    int half_cols() const { return (cols_ - 1) / 2; }

    Position3 element_position(int m, int n) const;
    std::size_t flat_index(int m, int n) const;
    std::pair<int, int> element_at(std::size_t flat_index) const;

    double amplitude(int m, int n) const { return amplitude_[flat_index(m, n)]; }
    double phase_shift(int m, int n) const { return phase_[flat_index(m, n)]; }

    /// Value-semantic overrides; the topology itself never mutates.
    RisTopology with_reflection(int m, int n, double amplitude, double phase_shift) const;
    RisTopology with_uniform_reflection(double amplitude, double phase_shift) const;

    /// Per-element override, vectors in flat (row-major) element order.
    RisTopology with_reflection_profile(const std::vector<double> &amplitudes,
                                        const std::vector<double> &phase_shifts) const;

    friend RisTopology build_topology(int rows, int cols, double spacing_m);

  private:
    RisTopology(int rows, int cols, double spacing_m);

    int rows_;
    int cols_;
    double spacing_m_;
    std::vector<double> amplitude_;
    std::vector<double> phase_;
};

/// Grid constructor. Dimensions must be odd (the coordinate formula assumes a
/// center element at the origin); spacing must be positive. All reflection
/// amplitudes default to 1 and phase shifts to 0.
RisTopology build_topology(int rows, int cols, double spacing_m);

/// Half-wavelength element spacing derived from the carrier, c0 / (2 fc).
double half_wave_spacing(const SystemConfig &config);

/// Grid with the spacing tied to the carrier, d = lambda / 2. On such a
/// grid the near-field endpoint bound equals the Rayleigh distance.
RisTopology build_half_wave_topology(const SystemConfig &config, int rows, int cols);

/// Largest inter-element distance D = d * sqrt((M-1)^2 + (N-1)^2).
double aperture_m(const RisTopology &topology);

/// Rayleigh distance 2 D^2 / lambda.
double rayleigh_distance(const RisTopology &topology, double wavelength_m);

/// Near-field endpoint bound d * [(M-1)^2 + (N-1)^2]. Coincides with the
/// Rayleigh distance when d equals half the wavelength.
double near_field_bound(const RisTopology &topology);

struct NearFieldReport {
    double bound_m = 0.0;
    double tx_distance_m = 0.0;
    double rx_distance_m = 0.0;
    bool tx_within = false;
    bool rx_within = false;

    bool ok() const { return tx_within && rx_within; }
};

/// Checks both endpoints against the near-field bound. Under the strict
/// policy a violation throws Error(outside_near_field); under warn the
/// report is returned with the offending endpoints flagged.
NearFieldReport validate_near_field(const SystemConfig &config, const RisTopology &topology);

} // namespace ristr
