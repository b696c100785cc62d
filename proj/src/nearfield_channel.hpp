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

#include <complex>
#include <vector>

#include "geometry.hpp"

namespace ristr {

/// One end-to-end Tx -> element -> Rx propagation path.
struct Path {
    int m = 0;
    int n = 0;
    double tx_distance_m = 0.0;
    double rx_distance_m = 0.0;
    std::complex<double> coefficient;
    double delay_s = 0.0;
};

/// The full set of element paths in row-major (m, n) order, with cached
/// delay extrema.
struct PathSet {
    std::vector<Path> paths;
    double tau_min_s = 0.0;
    double tau_max_s = 0.0;
};

/// Uniform-spherical-wave link coefficient between an endpoint and one
/// element: the magnitude uses the endpoint-to-center distance, the phase
/// the per-element distance. Distances are reduced modulo the wavelength
/// before the phase multiply so precision holds at r/lambda ~ 10^2..10^3.
std::complex<double> link_coefficient(const Position3 &endpoint, const Position3 &element,
                                      double wavelength_m);

/// Cascaded Tx-element-Rx coefficient including the element's reflection
/// coefficient. Equals the product of the two link coefficients times
/// a*exp(j*phi) up to floating-point rounding.
std::complex<double> path_coefficient(const SystemConfig &config, const RisTopology &topology,
                                      int m, int n);

/// Propagation delay of the (m, n) path. The approximate model ignores the
/// phase-shift-induced delay, the exact model adds lambda*phi/(2*pi) to the
/// path length.
double path_delay(const SystemConfig &config, const RisTopology &topology, int m, int n);

/// One path per element, row-major over (m, n), delay extrema cached.
/// Runs the near-field check first, honoring the config policy.
PathSet build_path_set(const SystemConfig &config, const RisTopology &topology);

} // namespace ristr
