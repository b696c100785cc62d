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

#include <vector>

#include "tapped_delay.hpp"

namespace ristr {

/// CSI-based passive beamforming baseline. The scheme co-phases the
/// elements of one tap; ISI is assumed fully eliminated, so only SNR is
/// reported. Tap indices are 1-based.
struct PbfResult {
    std::vector<double> per_tap_snr;
    int best_tap = 1;
    double best_snr = 0.0;
};

/// SNR of co-phasing the elements of tap l:
/// P * |T_l|^2 / (16 pi^2 ||p_tx||^2 ||p_rx||^2 sigma^2).
double pbf_tap_snr(double transmit_power_w, const TappedChannel &channel, int tap,
                   const Position3 &tx_position, const Position3 &rx_position,
                   double noise_variance);

/// Evaluates every tap and returns the argmax; ties break toward the
/// lowest tap index.
PbfResult pbf_best_snr(double transmit_power_w, const TappedChannel &channel,
                       const Position3 &tx_position, const Position3 &rx_position,
                       double noise_variance);

} // namespace ristr
