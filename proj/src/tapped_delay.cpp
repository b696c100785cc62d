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

#include "tapped_delay.hpp"

#include <cmath>
#include <sstream>

namespace ristr {

TappedChannel::TappedChannel(double tap_origin_s, double bandwidth_hz,
                             std::vector<std::complex<double>> coefficients,
                             std::vector<std::vector<std::size_t>> members)
    : tap_origin_s_(tap_origin_s), bandwidth_hz_(bandwidth_hz),
      coefficients_(std::move(coefficients)), members_(std::move(members)) {
    if (coefficients_.empty())
        throw Error(ErrorCode::invalid_argument, "tapped channel needs at least one tap");
    if (members_.size() != coefficients_.size())
        throw Error(ErrorCode::length_mismatch, "tap membership and coefficient counts differ");
}

TappedChannel TappedChannel::from_coefficients(std::vector<std::complex<double>> coefficients,
                                               double tap_origin_s, double bandwidth_hz) {
    std::vector<std::vector<std::size_t>> members(coefficients.size());
    return TappedChannel(tap_origin_s, bandwidth_hz, std::move(coefficients), std::move(members));
}

int TappedChannel::checked(int tap) const {
    if (tap < 1 || tap > tap_count()) {
        std::ostringstream msg;
        msg << "tap " << tap << " outside 1.." << tap_count();
        throw Error(ErrorCode::tap_out_of_range, msg.str());
    }
    return tap - 1;
}

const std::complex<double> &TappedChannel::coefficient(int tap) const {
    return coefficients_[checked(tap)];
}

const std::vector<std::size_t> &TappedChannel::members(int tap) const {
    return members_[checked(tap)];
}

double TappedChannel::energy() const {
    double sum = 0.0;
    for (const auto &h : coefficients_)
        sum += std::norm(h);
    return sum;
}

TappedChannel bin_paths(const PathSet &paths, double bandwidth_hz) {
    if (paths.paths.empty())
        throw Error(ErrorCode::empty_path_set, "cannot bin an empty path set");
    if (!(bandwidth_hz > 0.0))
        throw Error(ErrorCode::invalid_argument, "bandwidth must be positive");

    const double w = bandwidth_hz;
    double tap_origin = std::floor(paths.tau_min_s * w) / w;
    // floor(tau_min*W) can round up across an integer; the origin must not
    // exceed tau_min or the first path would fall before tap 1.
    if (tap_origin > paths.tau_min_s)
        tap_origin = (std::floor(paths.tau_min_s * w) - 1.0) / w;

    long tap_count = static_cast<long>(std::ceil((paths.tau_max_s - tap_origin) * w));
    if (tap_count < 1)
        tap_count = 1;

    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(tap_count));
    std::vector<long> assigned(paths.paths.size());
    for (std::size_t i = 0; i < paths.paths.size(); ++i) {
        const double offset = paths.paths[i].delay_s - tap_origin;
        long tap = static_cast<long>(std::floor(offset * w)) + 1;
        if (tap < 1)
            tap = 1;
        // Settle on the literal half-open interval (l-1)/W <= offset < l/W;
        // the multiply-based seed can be off by one at representable
        // boundaries.
        while (tap > 1 && offset < static_cast<double>(tap - 1) / w)
            --tap;
        while (offset >= static_cast<double>(tap) / w)
            ++tap;
        if (tap > tap_count) {
            tap_count = tap;
            members.resize(static_cast<std::size_t>(tap_count));
        }
        assigned[i] = tap;
        members[static_cast<std::size_t>(tap - 1)].push_back(i);
    }

    std::vector<std::complex<double>> coefficients(static_cast<std::size_t>(tap_count));
    for (std::size_t i = 0; i < paths.paths.size(); ++i)
        coefficients[static_cast<std::size_t>(assigned[i] - 1)] += paths.paths[i].coefficient;

    return TappedChannel(tap_origin, w, std::move(coefficients), std::move(members));
}

std::complex<double> tap_coefficient(const PathSet &paths,
                                     const std::vector<std::size_t> &members) {
    std::complex<double> sum;
    for (std::size_t index : members) {
        if (index >= paths.paths.size())
            throw Error(ErrorCode::unknown_index, "path index outside the path set");
        sum += paths.paths[index].coefficient;
    }
    return sum;
}

} // namespace ristr
