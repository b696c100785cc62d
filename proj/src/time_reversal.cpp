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

#include "time_reversal.hpp"

#include <cmath>

namespace ristr {

TrPrefilter tr_prefilter(const TappedChannel &channel) {
    const double energy = channel.energy();
    if (energy <= 0.0)
        throw Error(ErrorCode::zero_channel, "cannot normalize an all-zero channel");
    const double scale = 1.0 / std::sqrt(energy);
    const int count = channel.tap_count();

    TrPrefilter prefilter;
    prefilter.taps.resize(static_cast<std::size_t>(count));
    for (int k = 1; k <= count; ++k)
        prefilter.taps[static_cast<std::size_t>(k - 1)] =
            std::conj(channel.coefficient(count + 1 - k)) * scale;
    return prefilter;
}

std::vector<std::complex<double>> effective_response(const TrPrefilter &prefilter,
                                                     const TappedChannel &channel) {
    const int count = channel.tap_count();
    if (static_cast<int>(prefilter.taps.size()) != count)
        throw Error(ErrorCode::length_mismatch, "prefilter and channel tap counts differ");

    std::vector<std::complex<double>> response(static_cast<std::size_t>(2 * count - 1));
    for (int lag = 1; lag <= 2 * count - 1; ++lag) {
        std::complex<double> sum;
        const int k_lo = std::max(1, lag + 1 - count);
        const int k_hi = std::min(count, lag);
        for (int k = k_lo; k <= k_hi; ++k)
            sum += prefilter.taps[static_cast<std::size_t>(k - 1)] *
                   channel.coefficient(lag + 1 - k);
        response[static_cast<std::size_t>(lag - 1)] = sum;
    }
    return response;
}

double useful_power(double transmit_power_w, const TappedChannel &channel) {
    return transmit_power_w * channel.energy();
}

double isi_power(double transmit_power_w, const TrPrefilter &prefilter,
                 const TappedChannel &channel) {
    const auto response = effective_response(prefilter, channel);
    const std::size_t peak = static_cast<std::size_t>(channel.tap_count() - 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < response.size(); ++i)
        if (i != peak)
            sum += std::norm(response[i]);
    return transmit_power_w * sum;
}

double sinr(double transmit_power_w, const TappedChannel &channel, double noise_variance) {
    if (!(noise_variance > 0.0))
        throw Error(ErrorCode::invalid_argument, "noise variance must be positive");
    const TrPrefilter prefilter = tr_prefilter(channel);
    return useful_power(transmit_power_w, channel) /
           (isi_power(transmit_power_w, prefilter, channel) + noise_variance);
}

double snr_bound(double transmit_power_w, const TappedChannel &channel, double noise_variance) {
    if (!(noise_variance > 0.0))
        throw Error(ErrorCode::invalid_argument, "noise variance must be positive");
    return useful_power(transmit_power_w, channel) / noise_variance;
}

LinkResult analyze_link(double transmit_power_w, const TappedChannel &channel,
                        double noise_variance) {
    if (!(noise_variance > 0.0))
        throw Error(ErrorCode::invalid_argument, "noise variance must be positive");

    LinkResult result;
    const TrPrefilter prefilter = tr_prefilter(channel);
    result.effective_response = effective_response(prefilter, channel);
    result.useful_power_w = useful_power(transmit_power_w, channel);

    const std::size_t peak = static_cast<std::size_t>(channel.tap_count() - 1);
    double isi = 0.0;
    for (std::size_t i = 0; i < result.effective_response.size(); ++i)
        if (i != peak)
            isi += std::norm(result.effective_response[i]);
    result.isi_power_w = transmit_power_w * isi;

    result.sinr = result.useful_power_w / (result.isi_power_w + noise_variance);
    result.snr_bound = result.useful_power_w / noise_variance;
    return result;
}

} // namespace ristr
