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
#include <cstddef>
#include <vector>

#include "nearfield_channel.hpp"

namespace ristr {

/// Bandwidth-limited equivalent CIR. Tap l (1-based, l = 1..tap_count)
/// collects the paths whose delay offset from tap_origin falls in the
/// half-open interval [(l-1)/W, l/W). Interior taps with no members are
/// kept with a zero coefficient so lag arithmetic stays literal. Internal
/// storage is 0-based; every public accessor takes the 1-based tap index.
class TappedChannel {
  public:
    TappedChannel(double tap_origin_s, double bandwidth_hz,
                  std::vector<std::complex<double>> coefficients,
                  std::vector<std::vector<std::size_t>> members);

    /// Synthetic channel from raw tap coefficients, no path membership.
    static TappedChannel from_coefficients(std::vector<std::complex<double>> coefficients,
                                           double tap_origin_s = 0.0, double bandwidth_hz = 1.0);

    double tap_origin_s() const { return tap_origin_s_; }
    double bandwidth_hz() const { return bandwidth_hz_; }
    int tap_count() const { return static_cast<int>(coefficients_.size()); }

    const std::complex<double> &coefficient(int tap) const;
    const std::vector<std::size_t> &members(int tap) const;
    std::size_t cardinality(int tap) const { return members(tap).size(); }

    const std::vector<std::complex<double>> &coefficients() const { return coefficients_; }

    /// Sum of squared tap magnitudes.
    double energy() const;

  private:
    int checked(int tap) const;

    double tap_origin_s_;
    double bandwidth_hz_;
    std::vector<std::complex<double>> coefficients_;
    std::vector<std::vector<std::size_t>> members_;
};

/// Bins the path set into the tapped delay channel at bandwidth W.
/// tap_origin = floor(tau_min * W) / W and the tap count is
/// ceil((tau_max - tap_origin) * W), at least 1. Boundary ties resolve by
/// the literal double-precision comparison against the half-open interval,
/// no epsilon, so the result is reproducible.
TappedChannel bin_paths(const PathSet &paths, double bandwidth_hz);

/// Complex sum of the coefficients of the listed paths (flat indices into
/// the path set). Empty member list sums to zero.
std::complex<double> tap_coefficient(const PathSet &paths, const std::vector<std::size_t> &members);

} // namespace ristr
