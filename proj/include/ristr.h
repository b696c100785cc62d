/* ristr - RIS-enabled time reversal link simulator for near-field channels
 * Copyright (C) 2026 ristr developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 *
 * C interface of the ristr shared library.
 *
 * The library models an RIS-generated multipath channel in the near-field
 * regime, bins it into a bandwidth-limited tapped delay channel, applies
 * the time-reversal prefilter and evaluates SNR/SINR against a passive
 * beamforming baseline.
 *
 * Conventions:
 *   - Every function returns a ristr_status; RISTR_OK is 0. On failure,
 *     ristr_last_error() returns a thread-local description.
 *   - Objects are created through *_create / *_build factories and must be
 *     released with the matching *_destroy. Handles are opaque.
 *   - Buffer-filling functions follow the two-call pattern: pass a NULL
 *     buffer to query the required size (returns RISTR_OK and sets the
 *     size output, including the terminating NUL for text); a non-NULL
 *     buffer with insufficient capacity yields RISTR_ERR_BUFFER_TOO_SMALL
 *     with the size output still set.
 *   - Tap indices are 1-based.
 */

#ifndef RISTR_H
#define RISTR_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(RISTR_BUILD_SHARED)
#define RISTR_API __declspec(dllexport)
#else
#define RISTR_API __declspec(dllimport)
#endif
#else
#define RISTR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define RISTR_VERSION_MAJOR 0
#define RISTR_VERSION_MINOR 1
#define RISTR_VERSION_PATCH 0

typedef enum ristr_status {
    RISTR_OK = 0,
    RISTR_ERR_INVALID_ARGUMENT = 1,
    RISTR_ERR_EVEN_DIMENSION = 2,
    RISTR_ERR_NONPOSITIVE_SPACING = 3,
    RISTR_ERR_ENDPOINT_AT_ORIGIN = 4,
    RISTR_ERR_OUTSIDE_NEAR_FIELD = 5,
    RISTR_ERR_EMPTY_PATH_SET = 6,
    RISTR_ERR_ZERO_CHANNEL = 7,
    RISTR_ERR_TAP_OUT_OF_RANGE = 8,
    RISTR_ERR_UNKNOWN_INDEX = 9,
    RISTR_ERR_LENGTH_MISMATCH = 10,
    RISTR_ERR_PARSE = 11,
    RISTR_ERR_SCHEMA = 12,
    RISTR_ERR_UNIT = 13,
    RISTR_ERR_REPLICATION_MISMATCH = 14,
    RISTR_ERR_IO = 15,
    RISTR_ERR_BUFFER_TOO_SMALL = 16,
    RISTR_ERR_NULL_POINTER = 17,
    RISTR_ERR_INTERNAL = 18
} ristr_status;

typedef enum ristr_delay_model {
    RISTR_DELAY_APPROXIMATE = 0,
    RISTR_DELAY_EXACT = 1
} ristr_delay_model;

typedef enum ristr_near_field_policy {
    RISTR_NEAR_FIELD_WARN = 0,
    RISTR_NEAR_FIELD_STRICT = 1
} ristr_near_field_policy;

typedef enum ristr_output_format {
    RISTR_FORMAT_CSV = 0,
    RISTR_FORMAT_TABLE = 1
} ristr_output_format;

typedef enum ristr_output_units {
    RISTR_UNITS_DB = 0,
    RISTR_UNITS_LINEAR = 1,
    RISTR_UNITS_BOTH = 2
} ristr_output_units;

typedef struct ristr_config ristr_config;
typedef struct ristr_path_set ristr_path_set;
typedef struct ristr_channel ristr_channel;

/* One Tx -> element -> Rx propagation path. */
typedef struct ristr_path_info {
    int m; /* signed row index */
    int n; /* signed column index */
    double tx_distance_m;
    double rx_distance_m;
    double coefficient_re;
    double coefficient_im;
    double delay_s;
} ristr_path_info;

typedef struct ristr_near_field_report {
    double bound_m;
    double tx_distance_m;
    double rx_distance_m;
    int tx_within;
    int rx_within;
} ristr_near_field_report;

/* Time-reversal link metrics (linear units, watts). */
typedef struct ristr_tr_metrics {
    double useful_power_w;
    double isi_power_w;
    double sinr;
    double snr_bound;
} ristr_tr_metrics;

/* One evaluated operating point. */
typedef struct ristr_result_row {
    int rows;
    int cols;
    long element_count;
    double bandwidth_hz;
    int tap_count;
    double tap_origin_s;
    double snr_tr_linear;
    double snr_tr_db;
    double sinr_tr_linear;
    double sinr_tr_db;
    double snr_pbf_best_linear;
    double snr_pbf_best_db;
    int pbf_best_tap;
    double useful_power_w;
    double isi_power_w;
} ristr_result_row;

typedef struct ristr_table1_cell {
    int rows;
    int cols;
    double bandwidth_hz;
    int expected_taps;
    int computed_taps;
} ristr_table1_cell;

typedef struct ristr_table1_report {
    ristr_table1_cell cells[8];
    size_t cell_count;
    size_t mismatch_count;
} ristr_table1_report;

/* ------------------------------------------------------------------ */
/* Library information and error reporting                             */
/* ------------------------------------------------------------------ */

RISTR_API const char *ristr_version(void);
RISTR_API const char *ristr_status_name(ristr_status status);

/* Thread-local message describing the most recent failure. */
RISTR_API const char *ristr_last_error(void);

/* ------------------------------------------------------------------ */
/* Configuration                                                       */
/* ------------------------------------------------------------------ */

/* Built-in defaults: 10 GHz carrier, 2 GHz bandwidth, 30 dBm transmit
 * power, unit noise variance, Tx (2,2,0), Rx (2,-2,0), linear 1 x 1225
 * array with 0.015 m spacing, unit reflection amplitude, zero phase. */
RISTR_API ristr_status ristr_config_create(ristr_config **out);
RISTR_API ristr_status ristr_config_load(const char *path, ristr_config **out);
RISTR_API ristr_status ristr_config_parse(const char *json_text, ristr_config **out);
RISTR_API void ristr_config_destroy(ristr_config *config);

RISTR_API ristr_status ristr_config_set_topology(ristr_config *config, int rows, int cols);
RISTR_API ristr_status ristr_config_set_element_spacing(ristr_config *config, double spacing_m);
RISTR_API ristr_status ristr_config_set_carrier_frequency(ristr_config *config, double hz);
RISTR_API ristr_status ristr_config_set_bandwidth(ristr_config *config, double hz);
RISTR_API ristr_status ristr_config_set_transmit_power_dbm(ristr_config *config, double dbm);
RISTR_API ristr_status ristr_config_set_noise_variance(ristr_config *config, double variance);
RISTR_API ristr_status ristr_config_set_positions(ristr_config *config, const double tx_xyz[3],
                                                  const double rx_xyz[3]);
RISTR_API ristr_status ristr_config_set_uniform_reflection(ristr_config *config, double amplitude,
                                                           double phase_rad);
RISTR_API ristr_status ristr_config_set_delay_model(ristr_config *config, ristr_delay_model model);
RISTR_API ristr_status ristr_config_set_near_field_policy(ristr_config *config,
                                                          ristr_near_field_policy policy);
RISTR_API ristr_status ristr_config_set_output_format(ristr_config *config,
                                                      ristr_output_format format);

RISTR_API ristr_status ristr_config_topology(const ristr_config *config, int *rows, int *cols);
RISTR_API ristr_status ristr_config_element_spacing(const ristr_config *config, double *spacing_m);
RISTR_API ristr_status ristr_config_bandwidth(const ristr_config *config, double *hz);
RISTR_API ristr_status ristr_config_transmit_power_w(const ristr_config *config, double *watts);
RISTR_API ristr_status ristr_config_noise_variance(const ristr_config *config, double *variance);
RISTR_API ristr_status ristr_config_positions(const ristr_config *config, double tx_xyz[3],
                                              double rx_xyz[3]);
RISTR_API ristr_status ristr_config_output_format(const ristr_config *config,
                                                  ristr_output_format *format);
RISTR_API ristr_status ristr_config_output_units(const ristr_config *config,
                                                 ristr_output_units *units);
RISTR_API ristr_status ristr_config_has_sweep(const ristr_config *config, int *has_sweep);

/* ------------------------------------------------------------------ */
/* Geometry                                                            */
/* ------------------------------------------------------------------ */

/* Rayleigh distance 2 D^2 / lambda for the configured array. */
RISTR_API ristr_status ristr_rayleigh_distance(const ristr_config *config, double *distance_m);

/* Checks both endpoints against the near-field bound. The report is
 * always filled; under the strict policy a violation additionally yields
 * RISTR_ERR_OUTSIDE_NEAR_FIELD. */
RISTR_API ristr_status ristr_near_field_check(const ristr_config *config,
                                              ristr_near_field_report *report);

/* ------------------------------------------------------------------ */
/* Channel pipeline                                                    */
/* ------------------------------------------------------------------ */

RISTR_API ristr_status ristr_path_set_build(const ristr_config *config, ristr_path_set **out);
RISTR_API void ristr_path_set_destroy(ristr_path_set *paths);
RISTR_API ristr_status ristr_path_set_count(const ristr_path_set *paths, size_t *count);
RISTR_API ristr_status ristr_path_set_delay_bounds(const ristr_path_set *paths, double *tau_min_s,
                                                   double *tau_max_s);
RISTR_API ristr_status ristr_path_set_path(const ristr_path_set *paths, size_t index,
                                           ristr_path_info *info);

RISTR_API ristr_status ristr_channel_bin(const ristr_path_set *paths, double bandwidth_hz,
                                         ristr_channel **out);
RISTR_API void ristr_channel_destroy(ristr_channel *channel);
RISTR_API ristr_status ristr_channel_tap_count(const ristr_channel *channel, int *count);
RISTR_API ristr_status ristr_channel_tap_origin(const ristr_channel *channel, double *tau_o_s);
RISTR_API ristr_status ristr_channel_tap(const ristr_channel *channel, int tap,
                                         double *coefficient_re, double *coefficient_im,
                                         size_t *cardinality);
RISTR_API ristr_status ristr_channel_tap_members(const ristr_channel *channel, int tap,
                                                 size_t *indices, size_t capacity, size_t *count);

/* ------------------------------------------------------------------ */
/* Link metrics                                                        */
/* ------------------------------------------------------------------ */

RISTR_API ristr_status ristr_tr_compute(const ristr_channel *channel, double transmit_power_w,
                                        double noise_variance, ristr_tr_metrics *metrics);

/* Effective response (prefilter convolved with channel), 2L-1 entries. */
RISTR_API ristr_status ristr_tr_effective_response(const ristr_channel *channel, double *re,
                                                   double *im, size_t capacity, size_t *count);

RISTR_API ristr_status ristr_pbf_per_tap(const ristr_channel *channel, double transmit_power_w,
                                         const double tx_xyz[3], const double rx_xyz[3],
                                         double noise_variance, double *snr, size_t capacity,
                                         size_t *count);
RISTR_API ristr_status ristr_pbf_best(const ristr_channel *channel, double transmit_power_w,
                                      const double tx_xyz[3], const double rx_xyz[3],
                                      double noise_variance, int *best_tap, double *best_snr);

/* ------------------------------------------------------------------ */
/* Experiments                                                         */
/* ------------------------------------------------------------------ */

RISTR_API ristr_status ristr_run_single(const ristr_config *config, ristr_result_row *row);

RISTR_API ristr_status ristr_sweep_point_count(const ristr_config *config, size_t *count);

/* Fills up to capacity rows in sweep order; *produced reflects the rows
 * finished even when a later point fails. */
RISTR_API ristr_status ristr_run_sweep(const ristr_config *config, ristr_result_row *rows,
                                       size_t capacity, size_t *produced);

/* Streaming variant; rows are handed to the callback as they finish. */
typedef void (*ristr_row_callback)(const ristr_result_row *row, void *user_data);
RISTR_API ristr_status ristr_run_sweep_stream(const ristr_config *config,
                                              ristr_row_callback callback, void *user_data);

/* Recomputes the published resolvable-tap table (four layouts at 2 and
 * 4 GHz). only_bandwidth_hz = 0 runs both columns. Returns
 * RISTR_ERR_REPLICATION_MISMATCH when any cell differs; the report is
 * filled either way. */
RISTR_API ristr_status ristr_run_table1(double only_bandwidth_hz, ristr_table1_report *report);

/* ------------------------------------------------------------------ */
/* Serialization                                                       */
/* ------------------------------------------------------------------ */

RISTR_API ristr_status ristr_csv_header(char *buffer, size_t capacity, size_t *required);
RISTR_API ristr_status ristr_csv_row(const ristr_result_row *row, char *buffer, size_t capacity,
                                     size_t *required);
RISTR_API ristr_status ristr_rows_text(const ristr_result_row *rows, size_t count,
                                       ristr_output_units units, char *buffer, size_t capacity,
                                       size_t *required);
RISTR_API ristr_status ristr_table1_csv(const ristr_table1_report *report, char *buffer,
                                        size_t capacity, size_t *required);
RISTR_API ristr_status ristr_table1_text(const ristr_table1_report *report, char *buffer,
                                         size_t capacity, size_t *required);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RISTR_H */
