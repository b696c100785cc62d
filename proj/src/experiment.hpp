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

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "pbf_baseline.hpp"
#include "time_reversal.hpp"

namespace ristr {

enum class SweepKind { element_count, bandwidth, topology };
enum class OutputFormat { csv, table };
enum class OutputUnits { db, linear, both };

/// One swept dimension. element_count sweeps grow a linear (1 x Q) array,
/// bandwidth sweeps rebin a fixed array, topology sweeps walk explicit
/// (rows, cols) pairs.
struct SweepSpec {
    SweepKind kind = SweepKind::element_count;
    std::vector<long> element_counts;
    std::vector<double> bandwidths_hz;
    std::vector<std::pair<int, int>> topologies;

    std::size_t point_count() const;
};

struct OutputSpec {
    OutputFormat format = OutputFormat::csv;
    OutputUnits units = OutputUnits::both;
};

/// Fully resolved run configuration: physical parameters, array layout,
/// optional sweep and presentation preferences.
struct RunSetup {
    SystemConfig system;
    int ris_rows = 1;
    int ris_cols = 1225;
    double element_spacing_m = 0.015;
    double reflection_amplitude = 1.0;
    double phase_shift_rad = 0.0;
    std::optional<SweepSpec> sweep;
    OutputSpec output;

    RisTopology build_ris() const;
    RisTopology build_ris(int rows, int cols) const;
};

/// One evaluated operating point. Linear and dB values are stored for each
/// ratio; tap indices are 1-based.
struct ResultRow {
    int rows = 0;
    int cols = 0;
    long element_count = 0;
    double bandwidth_hz = 0.0;
    int tap_count = 0;
    double tap_origin_s = 0.0;
    double snr_tr_linear = 0.0;
    double snr_tr_db = 0.0;
    double sinr_tr_linear = 0.0;
    double sinr_tr_db = 0.0;
    double snr_pbf_best_linear = 0.0;
    double snr_pbf_best_db = 0.0;
    int pbf_best_tap = 0;
    double useful_power_w = 0.0;
    double isi_power_w = 0.0;
};

double dbm_to_watts(double power_dbm);
double watts_to_dbm(double power_w);
double to_db(double linear);

/// Parses the JSON configuration text (schema_version 1). Missing keys take
/// the built-in defaults; unknown keys are listed in a schema error. Empty
/// or whitespace-only text means "all defaults".
RunSetup parse_config(const std::string &json_text);

/// parse_config over the contents of a file.
RunSetup load_config(const std::string &path);

/// Serialized form of the built-in default configuration (documentation
/// and golden-test aid).
std::string default_config_json();

/// Geometry -> path set -> binning -> TR metrics -> PBF baseline.
ResultRow run_single(const SystemConfig &config, const RisTopology &topology);

/// Evaluates every sweep point in order, handing each finished row to the
/// sink before the next point starts so partial results survive an error.
void run_sweep(const RunSetup &setup, const std::function<void(const ResultRow &)> &sink);
std::vector<ResultRow> run_sweep(const RunSetup &setup);

struct Table1Cell {
    int rows = 0;
    int cols = 0;
    double bandwidth_hz = 0.0;
    int expected_taps = 0;
    int computed_taps = 0;

    bool match() const { return expected_taps == computed_taps; }
};

struct Table1Report {
    std::vector<Table1Cell> cells;

    bool all_match() const;
    std::size_t mismatch_count() const;
};

/// Knobs for the replication harness. only_bandwidth_hz = 0 runs every
/// column; base overrides the reference configuration (sensitivity checks).
struct Table1Options {
    double only_bandwidth_hz = 0.0;
    std::optional<SystemConfig> base;
};

/// Recomputes the published resolvable-tap counts for the four reference
/// layouts at 2 and 4 GHz and reports computed next to expected values.
Table1Report reproduce_table1(const Table1Options &options = {});

std::string csv_header();
std::string csv_row(const ResultRow &row);
std::string format_csv(const std::vector<ResultRow> &rows);

std::string table1_csv_header();
std::string table1_csv(const Table1Report &report);

std::string format_table(const std::vector<ResultRow> &rows, OutputUnits units);
std::string format_table1(const Table1Report &report);

} // namespace ristr
