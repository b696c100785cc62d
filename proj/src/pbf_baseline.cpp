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

#include "pbf_baseline.hpp"

#include <numbers>

namespace ristr {

namespace {

double co_phased_snr(double transmit_power_w, std::size_t cardinality, double tx_norm,
                     double rx_norm, double noise_variance) {
    const double members = static_cast<double>(cardinality);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return transmit_power_w * members * members /
           (16.0 * pi2 * tx_norm * tx_norm * rx_norm * rx_norm * noise_variance);
}

} // namespace

double pbf_tap_snr(double transmit_power_w, const TappedChannel &channel, int tap,
                   const Position3 &tx_position, const Position3 &rx_position,
                   double noise_variance) {
    if (!(noise_variance > 0.0))
        throw Error(ErrorCode::invalid_argument, "noise variance must be positive");
    return co_phased_snr(transmit_power_w, channel.cardinality(tap), norm(tx_position),
                         norm(rx_position), noise_variance);
}

PbfResult pbf_best_snr(double transmit_power_w, const TappedChannel &channel,
                       const Position3 &tx_position, const Position3 &rx_position,
                       double noise_variance) {
    if (!(noise_variance > 0.0))
        throw Error(ErrorCode::invalid_argument, "noise variance must be positive");
    const double tx_norm = norm(tx_position);
    const double rx_norm = norm(rx_position);

    PbfResult result;
    result.per_tap_snr.reserve(static_cast<std::size_t>(channel.tap_count()));
    for (int tap = 1; tap <= channel.tap_count(); ++tap) {
        const double snr = co_phased_snr(transmit_power_w, channel.cardinality(tap), tx_norm,
                                         rx_norm, noise_variance);
        result.per_tap_snr.push_back(snr);
        if (tap == 1 || snr > result.best_snr) {
            result.best_snr = snr;
            result.best_tap = tap;
        }
    }
    return result;
}

} // namespace ristr
