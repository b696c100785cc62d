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

#include "ristr.h"

#include <cmath>
#include <cstring>
#include <new>
#include <numbers>
#include <string>
#include <utility>

#include "experiment.hpp"

struct ristr_config {
    ristr::RunSetup setup;
};

struct ristr_path_set {
    ristr::PathSet paths;
};

struct ristr_channel {
    explicit ristr_channel(ristr::TappedChannel c) : channel(std::move(c)) {}
    ristr::TappedChannel channel;
};

namespace {

thread_local std::string t_last_error;

ristr_status map_code(ristr::ErrorCode code) {
    using ristr::ErrorCode;
    switch (code) {
    case ErrorCode::invalid_argument: return RISTR_ERR_INVALID_ARGUMENT;
    case ErrorCode::even_dimension: return RISTR_ERR_EVEN_DIMENSION;
    case ErrorCode::nonpositive_spacing: return RISTR_ERR_NONPOSITIVE_SPACING;
    case ErrorCode::endpoint_at_origin: return RISTR_ERR_ENDPOINT_AT_ORIGIN;
    case ErrorCode::outside_near_field: return RISTR_ERR_OUTSIDE_NEAR_FIELD;
    case ErrorCode::empty_path_set: return RISTR_ERR_EMPTY_PATH_SET;
    case ErrorCode::zero_channel: return RISTR_ERR_ZERO_CHANNEL;
    case ErrorCode::tap_out_of_range: return RISTR_ERR_TAP_OUT_OF_RANGE;
    case ErrorCode::unknown_index: return RISTR_ERR_UNKNOWN_INDEX;
    case ErrorCode::length_mismatch: return RISTR_ERR_LENGTH_MISMATCH;
    case ErrorCode::parse_error: return RISTR_ERR_PARSE;
    case ErrorCode::schema_error: return RISTR_ERR_SCHEMA;
    case ErrorCode::unit_error: return RISTR_ERR_UNIT;
    case ErrorCode::replication_mismatch: return RISTR_ERR_REPLICATION_MISMATCH;
    case ErrorCode::io_error: return RISTR_ERR_IO;
    }
    return RISTR_ERR_INTERNAL;
}

template <typename F> ristr_status guarded(F &&body) {
    try {
        return body();
    } catch (const ristr::Error &e) {
        t_last_error = e.what();
        return map_code(e.code());
    } catch (const std::bad_alloc &) {
        t_last_error = "out of memory";
        return RISTR_ERR_INTERNAL;
    } catch (const std::exception &e) {
        t_last_error = e.what();
        return RISTR_ERR_INTERNAL;
    }
}

ristr_status null_fail(const char *what) {
    t_last_error = std::string(what) + " must not be NULL";
    return RISTR_ERR_NULL_POINTER;
}

ristr_status copy_text(const std::string &text, char *buffer, size_t capacity, size_t *required) {
    if (required)
        *required = text.size() + 1;
    if (buffer == nullptr)
        return required ? RISTR_OK : null_fail("required");
    if (capacity < text.size() + 1) {
        t_last_error = "buffer too small";
        return RISTR_ERR_BUFFER_TOO_SMALL;
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return RISTR_OK;
}

ristr_result_row convert(const ristr::ResultRow &row) {
    ristr_result_row out;
    out.rows = row.rows;
    out.cols = row.cols;
    out.element_count = row.element_count;
    out.bandwidth_hz = row.bandwidth_hz;
    out.tap_count = row.tap_count;
    out.tap_origin_s = row.tap_origin_s;
    out.snr_tr_linear = row.snr_tr_linear;
    out.snr_tr_db = row.snr_tr_db;
    out.sinr_tr_linear = row.sinr_tr_linear;
    out.sinr_tr_db = row.sinr_tr_db;
    out.snr_pbf_best_linear = row.snr_pbf_best_linear;
    out.snr_pbf_best_db = row.snr_pbf_best_db;
    out.pbf_best_tap = row.pbf_best_tap;
    out.useful_power_w = row.useful_power_w;
    out.isi_power_w = row.isi_power_w;
    return out;
}

ristr::ResultRow convert(const ristr_result_row &row) {
    ristr::ResultRow out;
    out.rows = row.rows;
    out.cols = row.cols;
    out.element_count = row.element_count;
    out.bandwidth_hz = row.bandwidth_hz;
    out.tap_count = row.tap_count;
    out.tap_origin_s = row.tap_origin_s;
    out.snr_tr_linear = row.snr_tr_linear;
    out.snr_tr_db = row.snr_tr_db;
    out.sinr_tr_linear = row.sinr_tr_linear;
    out.sinr_tr_db = row.sinr_tr_db;
    out.snr_pbf_best_linear = row.snr_pbf_best_linear;
    out.snr_pbf_best_db = row.snr_pbf_best_db;
    out.pbf_best_tap = row.pbf_best_tap;
    out.useful_power_w = row.useful_power_w;
    out.isi_power_w = row.isi_power_w;
    return out;
}

ristr::Table1Report convert(const ristr_table1_report &report) {
    ristr::Table1Report out;
    for (size_t i = 0; i < report.cell_count && i < 8; ++i) {
        ristr::Table1Cell cell;
        cell.rows = report.cells[i].rows;
        cell.cols = report.cells[i].cols;
        cell.bandwidth_hz = report.cells[i].bandwidth_hz;
        cell.expected_taps = report.cells[i].expected_taps;
        cell.computed_taps = report.cells[i].computed_taps;
        out.cells.push_back(cell);
    }
    return out;
}

ristr::Position3 to_position(const double xyz[3]) {
    return ristr::Position3{xyz[0], xyz[1], xyz[2]};
}

} // namespace

extern "C" {

const char *ristr_version(void) {
    return "0.1.0";
}

const char *ristr_status_name(ristr_status status) {
    switch (status) {
    case RISTR_OK: return "RISTR_OK";
    case RISTR_ERR_INVALID_ARGUMENT: return "RISTR_ERR_INVALID_ARGUMENT";
    case RISTR_ERR_EVEN_DIMENSION: return "RISTR_ERR_EVEN_DIMENSION";
    case RISTR_ERR_NONPOSITIVE_SPACING: return "RISTR_ERR_NONPOSITIVE_SPACING";
    case RISTR_ERR_ENDPOINT_AT_ORIGIN: return "RISTR_ERR_ENDPOINT_AT_ORIGIN";
    case RISTR_ERR_OUTSIDE_NEAR_FIELD: return "RISTR_ERR_OUTSIDE_NEAR_FIELD";
    case RISTR_ERR_EMPTY_PATH_SET: return "RISTR_ERR_EMPTY_PATH_SET";
    case RISTR_ERR_ZERO_CHANNEL: return "RISTR_ERR_ZERO_CHANNEL";
    case RISTR_ERR_TAP_OUT_OF_RANGE: return "RISTR_ERR_TAP_OUT_OF_RANGE";
    case RISTR_ERR_UNKNOWN_INDEX: return "RISTR_ERR_UNKNOWN_INDEX";
    case RISTR_ERR_LENGTH_MISMATCH: return "RISTR_ERR_LENGTH_MISMATCH";
    case RISTR_ERR_PARSE: return "RISTR_ERR_PARSE";
    case RISTR_ERR_SCHEMA: return "RISTR_ERR_SCHEMA";
    case RISTR_ERR_UNIT: return "RISTR_ERR_UNIT";
    case RISTR_ERR_REPLICATION_MISMATCH: return "RISTR_ERR_REPLICATION_MISMATCH";
    case RISTR_ERR_IO: return "RISTR_ERR_IO";
    case RISTR_ERR_BUFFER_TOO_SMALL: return "RISTR_ERR_BUFFER_TOO_SMALL";
    case RISTR_ERR_NULL_POINTER: return "RISTR_ERR_NULL_POINTER";
    case RISTR_ERR_INTERNAL: return "RISTR_ERR_INTERNAL";
    }
    return "RISTR_ERR_UNKNOWN";
}

const char *ristr_last_error(void) {
    return t_last_error.c_str();
}

/* ------------------------------------------------------------------ */
/* Configuration                                                       */
/* ------------------------------------------------------------------ */

ristr_status ristr_config_create(ristr_config **out) {
    if (!out)
        return null_fail("out");
    return guarded([&] {
        *out = new ristr_config{};
        return RISTR_OK;
    });
}

ristr_status ristr_config_load(const char *path, ristr_config **out) {
    if (!path)
        return null_fail("path");
    if (!out)
        return null_fail("out");
    return guarded([&] {
        auto setup = ristr::load_config(path);
        *out = new ristr_config{std::move(setup)};
        return RISTR_OK;
    });
}

ristr_status ristr_config_parse(const char *json_text, ristr_config **out) {
    if (!json_text)
        return null_fail("json_text");
    if (!out)
        return null_fail("out");
    return guarded([&] {
        auto setup = ristr::parse_config(json_text);
        *out = new ristr_config{std::move(setup)};
        return RISTR_OK;
    });
}

void ristr_config_destroy(ristr_config *config) {
    delete config;
}

ristr_status ristr_config_set_topology(ristr_config *config, int rows, int cols) {
    if (!config)
        return null_fail("config");
    return guarded([&] {
        ristr::build_topology(rows, cols, config->setup.element_spacing_m); // validates
        config->setup.ris_rows = rows;
        config->setup.ris_cols = cols;
        return RISTR_OK;
    });
}

ristr_status ristr_config_set_element_spacing(ristr_config *config, double spacing_m) {
    if (!config)
        return null_fail("config");
    return guarded([&] {
        if (!(spacing_m > 0.0))
            throw ristr::Error(ristr::ErrorCode::nonpositive_spacing,
                               "element spacing must be positive");
        config->setup.element_spacing_m = spacing_m;
        return RISTR_OK;
    });
}

ristr_status ristr_config_set_carrier_frequency(ristr_config *config, double hz) {
    if (!config)
        return null_fail("config");
    return guarded([&] {
        if (!(hz > 0.0))
            throw ristr::Error(ristr::ErrorCode::unit_error, "carrier frequency must be positive");
        config->setup.system.carrier_frequency_hz = hz;
        return RISTR_OK;
    });
}

ristr_status ristr_config_set_bandwidth(ristr_config *config, double hz) {
    if (!config)
        return null_fail("config");
    return guarded([&] {
        if (!(hz > 0.0))
            throw ristr::Error(ristr::ErrorCode::unit_error, "bandwidth must be positive");
        config->setup.system.bandwidth_hz = hz;
        return RISTR_OK;
    });
}

ristr_status ristr_config_set_transmit_power_dbm(ristr_config *config, double dbm) {
    if (!config)
        return null_fail("config");
    return guarded([&] {
        if (!std::isfinite(dbm))
            throw ristr::Error(ristr::ErrorCode::unit_error, "transmit power must be finite");
        config->setup.system.transmit_power_w = ristr::dbm_to_watts(dbm);
        return RISTR_OK;
    });
}

ristr_status ristr_config_set_noise_variance(ristr_config *config, double variance) {
    if (!config)
        return null_fail("config");
    return guarded([&] {
        if (!(variance > 0.0))
            throw ristr::Error(ristr::ErrorCode::unit_error, "noise variance must be positive");
        config->setup.system.noise_variance = variance;
        return RISTR_OK;
    });
}

ristr_status ristr_config_set_positions(ristr_config *config, const double tx_xyz[3],
                                        const double rx_xyz[3]) {
    if (!config)
        return null_fail("config");
    if (!tx_xyz || !rx_xyz)
        return null_fail("position");
    return guarded([&] {
        ristr::SystemConfig candidate = config->setup.system;
        candidate.tx_position = to_position(tx_xyz);
        candidate.rx_position = to_position(rx_xyz);
        ristr::validate(candidate);
        config->setup.system = candidate;
        return RISTR_OK;
    });
}

ristr_status ristr_config_set_uniform_reflection(ristr_config *config, double amplitude,
                                                 double phase_rad) {
    if (!config)
        return null_fail("config");
    return guarded([&] {
        if (!(amplitude >= 0.0 && amplitude <= 1.0))
            throw ristr::Error(ristr::ErrorCode::invalid_argument,
                               "reflection amplitude must lie in [0, 1]");
        if (!(phase_rad >= 0.0 && phase_rad < 2.0 * std::numbers::pi))
            throw ristr::Error(ristr::ErrorCode::invalid_argument,
                               "phase shift must lie in [0, 2*pi)");
        config->setup.reflection_amplitude = amplitude;
        config->setup.phase_shift_rad = phase_rad;
        return RISTR_OK;
    });
}

ristr_status ristr_config_set_delay_model(ristr_config *config, ristr_delay_model model) {
    if (!config)
        return null_fail("config");
    if (model != RISTR_DELAY_APPROXIMATE && model != RISTR_DELAY_EXACT) {
        t_last_error = "invalid delay model";
        return RISTR_ERR_INVALID_ARGUMENT;
    }
    config->setup.system.delay_model = model == RISTR_DELAY_EXACT
                                           ? ristr::DelayModel::exact
                                           : ristr::DelayModel::approximate;
    return RISTR_OK;
}

ristr_status ristr_config_set_near_field_policy(ristr_config *config,
                                                ristr_near_field_policy policy) {
    if (!config)
        return null_fail("config");
    if (policy != RISTR_NEAR_FIELD_WARN && policy != RISTR_NEAR_FIELD_STRICT) {
        t_last_error = "invalid near-field policy";
        return RISTR_ERR_INVALID_ARGUMENT;
    }
    config->setup.system.near_field_policy = policy == RISTR_NEAR_FIELD_STRICT
                                                 ? ristr::NearFieldPolicy::strict
                                                 : ristr::NearFieldPolicy::warn;
    return RISTR_OK;
}

ristr_status ristr_config_set_output_format(ristr_config *config, ristr_output_format format) {
    if (!config)
        return null_fail("config");
    if (format != RISTR_FORMAT_CSV && format != RISTR_FORMAT_TABLE) {
        t_last_error = "invalid output format";
        return RISTR_ERR_INVALID_ARGUMENT;
    }
    config->setup.output.format =
        format == RISTR_FORMAT_TABLE ? ristr::OutputFormat::table : ristr::OutputFormat::csv;
    return RISTR_OK;
}

ristr_status ristr_config_topology(const ristr_config *config, int *rows, int *cols) {
    if (!config)
        return null_fail("config");
    if (!rows || !cols)
        return null_fail("rows/cols");
    *rows = config->setup.ris_rows;
    *cols = config->setup.ris_cols;
    return RISTR_OK;
}

ristr_status ristr_config_element_spacing(const ristr_config *config, double *spacing_m) {
    if (!config)
        return null_fail("config");
    if (!spacing_m)
        return null_fail("spacing_m");
    *spacing_m = config->setup.element_spacing_m;
    return RISTR_OK;
}

ristr_status ristr_config_bandwidth(const ristr_config *config, double *hz) {
    if (!config)
        return null_fail("config");
    if (!hz)
        return null_fail("hz");
    *hz = config->setup.system.bandwidth_hz;
    return RISTR_OK;
}

ristr_status ristr_config_transmit_power_w(const ristr_config *config, double *watts) {
    if (!config)
        return null_fail("config");
    if (!watts)
        return null_fail("watts");
    *watts = config->setup.system.transmit_power_w;
    return RISTR_OK;
}

ristr_status ristr_config_noise_variance(const ristr_config *config, double *variance) {
    if (!config)
        return null_fail("config");
    if (!variance)
        return null_fail("variance");
    *variance = config->setup.system.noise_variance;
    return RISTR_OK;
}

ristr_status ristr_config_positions(const ristr_config *config, double tx_xyz[3],
                                    double rx_xyz[3]) {
    if (!config)
        return null_fail("config");
    if (!tx_xyz || !rx_xyz)
        return null_fail("position");
    tx_xyz[0] = config->setup.system.tx_position.x;
    tx_xyz[1] = config->setup.system.tx_position.y;
    tx_xyz[2] = config->setup.system.tx_position.z;
    rx_xyz[0] = config->setup.system.rx_position.x;
    rx_xyz[1] = config->setup.system.rx_position.y;
    rx_xyz[2] = config->setup.system.rx_position.z;
    return RISTR_OK;
}

ristr_status ristr_config_output_format(const ristr_config *config, ristr_output_format *format) {
    if (!config)
        return null_fail("config");
    if (!format)
        return null_fail("format");
    *format = config->setup.output.format == ristr::OutputFormat::table ? RISTR_FORMAT_TABLE
                                                                        : RISTR_FORMAT_CSV;
    return RISTR_OK;
}

ristr_status ristr_config_output_units(const ristr_config *config, ristr_output_units *units) {
    if (!config)
        return null_fail("config");
    if (!units)
        return null_fail("units");
    switch (config->setup.output.units) {
    case ristr::OutputUnits::db: *units = RISTR_UNITS_DB; break;
    case ristr::OutputUnits::linear: *units = RISTR_UNITS_LINEAR; break;
    case ristr::OutputUnits::both: *units = RISTR_UNITS_BOTH; break;
    }
    return RISTR_OK;
}

ristr_status ristr_config_has_sweep(const ristr_config *config, int *has_sweep) {
    if (!config)
        return null_fail("config");
    if (!has_sweep)
        return null_fail("has_sweep");
    *has_sweep = config->setup.sweep.has_value() ? 1 : 0;
    return RISTR_OK;
}

/* ------------------------------------------------------------------ */
/* Geometry                                                            */
/* ------------------------------------------------------------------ */

ristr_status ristr_rayleigh_distance(const ristr_config *config, double *distance_m) {
    if (!config)
        return null_fail("config");
    if (!distance_m)
        return null_fail("distance_m");
    return guarded([&] {
        const auto topology = config->setup.build_ris();
        *distance_m = ristr::rayleigh_distance(topology, config->setup.system.wavelength());
        return RISTR_OK;
    });
}

ristr_status ristr_near_field_check(const ristr_config *config, ristr_near_field_report *report) {
    if (!config)
        return null_fail("config");
    if (!report)
        return null_fail("report");
    return guarded([&] {
        const auto topology = config->setup.build_ris();
        ristr::SystemConfig warn_copy = config->setup.system;
        warn_copy.near_field_policy = ristr::NearFieldPolicy::warn;
        const auto nf = ristr::validate_near_field(warn_copy, topology);
        report->bound_m = nf.bound_m;
        report->tx_distance_m = nf.tx_distance_m;
        report->rx_distance_m = nf.rx_distance_m;
        report->tx_within = nf.tx_within ? 1 : 0;
        report->rx_within = nf.rx_within ? 1 : 0;
        if (config->setup.system.near_field_policy == ristr::NearFieldPolicy::strict && !nf.ok()) {
            t_last_error = "endpoint outside the near-field bound";
            return RISTR_ERR_OUTSIDE_NEAR_FIELD;
        }
        return RISTR_OK;
    });
}

/* ------------------------------------------------------------------ */
/* Channel pipeline                                                    */
/* ------------------------------------------------------------------ */

ristr_status ristr_path_set_build(const ristr_config *config, ristr_path_set **out) {
    if (!config)
        return null_fail("config");
    if (!out)
        return null_fail("out");
    return guarded([&] {
        auto paths = ristr::build_path_set(config->setup.system, config->setup.build_ris());
        *out = new ristr_path_set{std::move(paths)};
        return RISTR_OK;
    });
}

void ristr_path_set_destroy(ristr_path_set *paths) {
    delete paths;
}

ristr_status ristr_path_set_count(const ristr_path_set *paths, size_t *count) {
    if (!paths)
        return null_fail("paths");
    if (!count)
        return null_fail("count");
    *count = paths->paths.paths.size();
    return RISTR_OK;
}

ristr_status ristr_path_set_delay_bounds(const ristr_path_set *paths, double *tau_min_s,
                                         double *tau_max_s) {
    if (!paths)
        return null_fail("paths");
    if (!tau_min_s || !tau_max_s)
        return null_fail("tau bounds");
    *tau_min_s = paths->paths.tau_min_s;
    *tau_max_s = paths->paths.tau_max_s;
    return RISTR_OK;
}

ristr_status ristr_path_set_path(const ristr_path_set *paths, size_t index,
                                 ristr_path_info *info) {
    if (!paths)
        return null_fail("paths");
    if (!info)
        return null_fail("info");
    if (index >= paths->paths.paths.size()) {
        t_last_error = "path index out of range";
        return RISTR_ERR_UNKNOWN_INDEX;
    }
    const ristr::Path &path = paths->paths.paths[index];
    info->m = path.m;
    info->n = path.n;
    info->tx_distance_m = path.tx_distance_m;
    info->rx_distance_m = path.rx_distance_m;
    info->coefficient_re = path.coefficient.real();
    info->coefficient_im = path.coefficient.imag();
    info->delay_s = path.delay_s;
    return RISTR_OK;
}

ristr_status ristr_channel_bin(const ristr_path_set *paths, double bandwidth_hz,
                               ristr_channel **out) {
    if (!paths)
        return null_fail("paths");
    if (!out)
        return null_fail("out");
    return guarded([&] {
        *out = new ristr_channel(ristr::bin_paths(paths->paths, bandwidth_hz));
        return RISTR_OK;
    });
}

void ristr_channel_destroy(ristr_channel *channel) {
    delete channel;
}

ristr_status ristr_channel_tap_count(const ristr_channel *channel, int *count) {
    if (!channel)
        return null_fail("channel");
    if (!count)
        return null_fail("count");
    *count = channel->channel.tap_count();
    return RISTR_OK;
}

ristr_status ristr_channel_tap_origin(const ristr_channel *channel, double *tau_o_s) {
    if (!channel)
        return null_fail("channel");
    if (!tau_o_s)
        return null_fail("tau_o_s");
    *tau_o_s = channel->channel.tap_origin_s();
    return RISTR_OK;
}

ristr_status ristr_channel_tap(const ristr_channel *channel, int tap, double *coefficient_re,
                               double *coefficient_im, size_t *cardinality) {
    if (!channel)
        return null_fail("channel");
    return guarded([&] {
        const auto &h = channel->channel.coefficient(tap);
        if (coefficient_re)
            *coefficient_re = h.real();
        if (coefficient_im)
            *coefficient_im = h.imag();
        if (cardinality)
            *cardinality = channel->channel.cardinality(tap);
        return RISTR_OK;
    });
}

ristr_status ristr_channel_tap_members(const ristr_channel *channel, int tap, size_t *indices,
                                       size_t capacity, size_t *count) {
    if (!channel)
        return null_fail("channel");
    if (!count)
        return null_fail("count");
    return guarded([&] {
        const auto &members = channel->channel.members(tap);
        *count = members.size();
        if (indices == nullptr)
            return RISTR_OK;
        if (capacity < members.size()) {
            t_last_error = "buffer too small";
            return RISTR_ERR_BUFFER_TOO_SMALL;
        }
        std::memcpy(indices, members.data(), members.size() * sizeof(size_t));
        return RISTR_OK;
    });
}

/* ------------------------------------------------------------------ */
/* Link metrics                                                        */
/* ------------------------------------------------------------------ */

ristr_status ristr_tr_compute(const ristr_channel *channel, double transmit_power_w,
                              double noise_variance, ristr_tr_metrics *metrics) {
    if (!channel)
        return null_fail("channel");
    if (!metrics)
        return null_fail("metrics");
    return guarded([&] {
        const auto link =
            ristr::analyze_link(transmit_power_w, channel->channel, noise_variance);
        metrics->useful_power_w = link.useful_power_w;
        metrics->isi_power_w = link.isi_power_w;
        metrics->sinr = link.sinr;
        metrics->snr_bound = link.snr_bound;
        return RISTR_OK;
    });
}

ristr_status ristr_tr_effective_response(const ristr_channel *channel, double *re, double *im,
                                         size_t capacity, size_t *count) {
    if (!channel)
        return null_fail("channel");
    if (!count)
        return null_fail("count");
    return guarded([&] {
        const auto prefilter = ristr::tr_prefilter(channel->channel);
        const auto response = ristr::effective_response(prefilter, channel->channel);
        *count = response.size();
        if (re == nullptr && im == nullptr)
            return RISTR_OK;
        if (!re || !im)
            return null_fail("re/im (pass both or neither)");
        if (capacity < response.size()) {
            t_last_error = "buffer too small";
            return RISTR_ERR_BUFFER_TOO_SMALL;
        }
        for (size_t i = 0; i < response.size(); ++i) {
            re[i] = response[i].real();
            im[i] = response[i].imag();
        }
        return RISTR_OK;
    });
}

ristr_status ristr_pbf_per_tap(const ristr_channel *channel, double transmit_power_w,
                               const double tx_xyz[3], const double rx_xyz[3],
                               double noise_variance, double *snr, size_t capacity,
                               size_t *count) {
    if (!channel)
        return null_fail("channel");
    if (!tx_xyz || !rx_xyz)
        return null_fail("position");
    if (!count)
        return null_fail("count");
    return guarded([&] {
        const auto result = ristr::pbf_best_snr(transmit_power_w, channel->channel,
                                                to_position(tx_xyz), to_position(rx_xyz),
                                                noise_variance);
        *count = result.per_tap_snr.size();
        if (snr == nullptr)
            return RISTR_OK;
        if (capacity < result.per_tap_snr.size()) {
            t_last_error = "buffer too small";
            return RISTR_ERR_BUFFER_TOO_SMALL;
        }
        std::memcpy(snr, result.per_tap_snr.data(), result.per_tap_snr.size() * sizeof(double));
        return RISTR_OK;
    });
}

ristr_status ristr_pbf_best(const ristr_channel *channel, double transmit_power_w,
                            const double tx_xyz[3], const double rx_xyz[3], double noise_variance,
                            int *best_tap, double *best_snr) {
    if (!channel)
        return null_fail("channel");
    if (!tx_xyz || !rx_xyz)
        return null_fail("position");
    return guarded([&] {
        const auto result = ristr::pbf_best_snr(transmit_power_w, channel->channel,
                                                to_position(tx_xyz), to_position(rx_xyz),
                                                noise_variance);
        if (best_tap)
            *best_tap = result.best_tap;
        if (best_snr)
            *best_snr = result.best_snr;
        return RISTR_OK;
    });
}

/* ------------------------------------------------------------------ */
/* Experiments                                                         */
/* ------------------------------------------------------------------ */

ristr_status ristr_run_single(const ristr_config *config, ristr_result_row *row) {
    if (!config)
        return null_fail("config");
    if (!row)
        return null_fail("row");
    return guarded([&] {
        *row = convert(ristr::run_single(config->setup.system, config->setup.build_ris()));
        return RISTR_OK;
    });
}

ristr_status ristr_sweep_point_count(const ristr_config *config, size_t *count) {
    if (!config)
        return null_fail("config");
    if (!count)
        return null_fail("count");
    if (!config->setup.sweep) {
        t_last_error = "configuration has no sweep section";
        return RISTR_ERR_SCHEMA;
    }
    *count = config->setup.sweep->point_count();
    return RISTR_OK;
}

ristr_status ristr_run_sweep(const ristr_config *config, ristr_result_row *rows, size_t capacity,
                             size_t *produced) {
    if (!config)
        return null_fail("config");
    if (!rows)
        return null_fail("rows");
    if (!produced)
        return null_fail("produced");
    *produced = 0;
    return guarded([&] {
        ristr::run_sweep(config->setup, [&](const ristr::ResultRow &row) {
            if (*produced >= capacity)
                throw ristr::Error(ristr::ErrorCode::invalid_argument,
                                   "row buffer too small for the sweep");
            rows[*produced] = convert(row);
            ++*produced;
        });
        return RISTR_OK;
    });
}

ristr_status ristr_run_sweep_stream(const ristr_config *config, ristr_row_callback callback,
                                    void *user_data) {
    if (!config)
        return null_fail("config");
    if (!callback)
        return null_fail("callback");
    return guarded([&] {
        ristr::run_sweep(config->setup, [&](const ristr::ResultRow &row) {
            const ristr_result_row out = convert(row);
            callback(&out, user_data);
        });
        return RISTR_OK;
    });
}

ristr_status ristr_run_table1(double only_bandwidth_hz, ristr_table1_report *report) {
    if (!report)
        return null_fail("report");
    return guarded([&] {
        ristr::Table1Options options;
        options.only_bandwidth_hz = only_bandwidth_hz;
        const auto result = ristr::reproduce_table1(options);

        report->cell_count = result.cells.size();
        report->mismatch_count = result.mismatch_count();
        for (size_t i = 0; i < result.cells.size() && i < 8; ++i) {
            report->cells[i].rows = result.cells[i].rows;
            report->cells[i].cols = result.cells[i].cols;
            report->cells[i].bandwidth_hz = result.cells[i].bandwidth_hz;
            report->cells[i].expected_taps = result.cells[i].expected_taps;
            report->cells[i].computed_taps = result.cells[i].computed_taps;
        }
        if (report->mismatch_count > 0) {
            t_last_error = "computed tap counts differ from the reference table";
            return RISTR_ERR_REPLICATION_MISMATCH;
        }
        return RISTR_OK;
    });
}

/* ------------------------------------------------------------------ */
/* Serialization                                                       */
/* ------------------------------------------------------------------ */

ristr_status ristr_csv_header(char *buffer, size_t capacity, size_t *required) {
    return guarded([&] { return copy_text(ristr::csv_header(), buffer, capacity, required); });
}

ristr_status ristr_csv_row(const ristr_result_row *row, char *buffer, size_t capacity,
                           size_t *required) {
    if (!row)
        return null_fail("row");
    return guarded(
        [&] { return copy_text(ristr::csv_row(convert(*row)), buffer, capacity, required); });
}

ristr_status ristr_rows_text(const ristr_result_row *rows, size_t count, ristr_output_units units,
                             char *buffer, size_t capacity, size_t *required) {
    if (!rows && count > 0)
        return null_fail("rows");
    return guarded([&] {
        std::vector<ristr::ResultRow> converted;
        converted.reserve(count);
        for (size_t i = 0; i < count; ++i)
            converted.push_back(convert(rows[i]));
        ristr::OutputUnits cpp_units = ristr::OutputUnits::both;
        if (units == RISTR_UNITS_DB)
            cpp_units = ristr::OutputUnits::db;
        else if (units == RISTR_UNITS_LINEAR)
            cpp_units = ristr::OutputUnits::linear;
        return copy_text(ristr::format_table(converted, cpp_units), buffer, capacity, required);
    });
}

ristr_status ristr_table1_csv(const ristr_table1_report *report, char *buffer, size_t capacity,
                              size_t *required) {
    if (!report)
        return null_fail("report");
    return guarded(
        [&] { return copy_text(ristr::table1_csv(convert(*report)), buffer, capacity, required); });
}

ristr_status ristr_table1_text(const ristr_table1_report *report, char *buffer, size_t capacity,
                               size_t *required) {
    if (!report)
        return null_fail("report");
    return guarded([&] {
        return copy_text(ristr::format_table1(convert(*report)), buffer, capacity, required);
    });
}

} // extern "C"
