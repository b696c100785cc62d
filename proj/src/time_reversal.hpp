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

#include "tapped_delay.hpp"

namespace ristr {

/// Unit-energy, time-reversed, conjugated copy of the channel taps:
/// taps[k-1] = conj(h_eq[L+1-k]) / sqrt(sum |h_eq|^2), k = 1..L.
struct TrPrefilter {
    std::vector<std::complex<double>> taps;
};

/// Link metrics of the time-reversal scheme. The effective response is the
/// full linear convolution of prefilter and channel (1-based lags 1..2L-1,
/// stored at index lag-1); its entry at lag L is the matched-filter peak.
struct LinkResult {
    double useful_power_w = 0.0;
    double isi_power_w = 0.0;
    double sinr = 0.0;
    double snr_bound = 0.0;
    std::vector<std::complex<double>> effective_response;
};

/// Throws Error(zero_channel) when every tap is zero.
TrPrefilter tr_prefilter(const TappedChannel &channel);

/// Full linear convolution (prefilter * channel)[lag], lag = 1..2L-1, with
/// the 1-based convention (f*g)[l] = sum_k f[k] g[l+1-k].
std::vector<std::complex<double>> effective_response(const TrPrefilter &prefilter,
                                                     const TappedChannel &channel);

/// P times the channel energy; equals P times the squared matched-filter
/// peak.
double useful_power(double transmit_power_w, const TappedChannel &channel);

/// P times the squared effective response summed over every lag except the
/// peak lag L.
double isi_power(double transmit_power_w, const TrPrefilter &prefilter,
                 const TappedChannel &channel);

/// useful / (ISI + noise).
double sinr(double transmit_power_w, const TappedChannel &channel, double noise_variance);

/// ISI-free upper bound, useful / noise.
double snr_bound(double transmit_power_w, const TappedChannel &channel, double noise_variance);

/// Runs the whole chain once and returns every metric along with the
/// effective response.
LinkResult analyze_link(double transmit_power_w, const TappedChannel &channel,
                        double noise_variance);

} // namespace ristr
