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

#include "experiment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <iomanip>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace ristr {

namespace {

using nlohmann::json;

constexpr double table1_spacing_m = 0.015;

double to_db_checked(double linear) {
    return 10.0 * std::log10(linear);
}

} // namespace

double dbm_to_watts(double power_dbm) {
    return std::pow(10.0, (power_dbm - 30.0) / 10.0);
}

double watts_to_dbm(double power_w) {
    return 10.0 * std::log10(power_w) + 30.0;
}

double to_db(double linear) {
    return to_db_checked(linear);
}

std::size_t SweepSpec::point_count() const {
    switch (kind) {
    case SweepKind::element_count: return element_counts.size();
    case SweepKind::bandwidth: return bandwidths_hz.size();
    case SweepKind::topology: return topologies.size();
    }
    return 0;
}

RisTopology RunSetup::build_ris() const {
    return build_ris(ris_rows, ris_cols);
}

RisTopology RunSetup::build_ris(int rows, int cols) const {
    RisTopology topology = build_topology(rows, cols, element_spacing_m);
    if (reflection_amplitude != 1.0 || phase_shift_rad != 0.0)
        topology = topology.with_uniform_reflection(reflection_amplitude, phase_shift_rad);
    return topology;
}

// ---------------------------------------------------------------------------
// Configuration schema (version 1)
// ---------------------------------------------------------------------------

namespace {

struct KeySet {
    const char *const *names;
    std::size_t count;

    bool contains(const std::string &key) const {
        for (std::size_t i = 0; i < count; ++i)
            if (key == names[i])
                return true;
        return false;
    }
};

constexpr const char *root_keys[] = {
    "schema_version",     "carrier_frequency_hz", "bandwidth_hz", "transmit_power_dbm",
    "noise_variance",     "tx_position_m",        "rx_position_m", "ris",
    "delay_model",        "near_field_policy",    "output",        "sweep",
};
constexpr const char *ris_keys[] = {
    "rows", "cols", "element_spacing_m", "reflection_amplitude", "phase_shift_rad",
};
constexpr const char *output_keys[] = {"format", "units"};
constexpr const char *sweep_keys[] = {"kind", "values", "values_hz", "pairs", "topology_rule"};

void collect_unknown(const json &object, const KeySet &allowed, const std::string &prefix,
                     std::vector<std::string> &unknown) {
    for (const auto &item : object.items())
        if (!allowed.contains(item.key()))
            unknown.push_back(prefix + item.key());
}

[[noreturn]] void schema_fail(const std::string &message) {
    throw Error(ErrorCode::schema_error, message);
}

[[noreturn]] void unit_fail(const std::string &message) {
    throw Error(ErrorCode::unit_error, message);
}

double require_number(const json &object, const std::string &key, const std::string &path) {
    const json &value = object.at(key);
    if (!value.is_number())
        schema_fail(path + key + " must be a number");
    return value.get<double>();
}

long require_integer(const json &value, const std::string &path) {
    if (!value.is_number_integer() && !value.is_number_unsigned())
        schema_fail(path + " must be an integer");
    return value.get<long>();
}

std::string require_string(const json &object, const std::string &key, const std::string &path) {
    const json &value = object.at(key);
    if (!value.is_string())
        schema_fail(path + key + " must be a string");
    return value.get<std::string>();
}

Position3 require_position(const json &object, const std::string &key) {
    const json &value = object.at(key);
    if (!value.is_array() || value.size() != 3 || !value[0].is_number() ||
        !value[1].is_number() || !value[2].is_number())
        schema_fail(key + " must be an array of three numbers [x, y, z]");
    return Position3{value[0].get<double>(), value[1].get<double>(), value[2].get<double>()};
}

void parse_ris_section(const json &section, RunSetup &setup) {
    if (!section.is_object())
        schema_fail("ris must be an object");
    if (section.contains("rows"))
        setup.ris_rows = static_cast<int>(require_integer(section.at("rows"), "ris.rows"));
    if (section.contains("cols"))
        setup.ris_cols = static_cast<int>(require_integer(section.at("cols"), "ris.cols"));
    if (section.contains("element_spacing_m"))
        setup.element_spacing_m = require_number(section, "element_spacing_m", "ris.");
    if (section.contains("reflection_amplitude"))
        setup.reflection_amplitude = require_number(section, "reflection_amplitude", "ris.");
    if (section.contains("phase_shift_rad"))
        setup.phase_shift_rad = require_number(section, "phase_shift_rad", "ris.");

    if (setup.ris_rows < 1 || setup.ris_cols < 1)
        unit_fail("ris dimensions must be at least 1");
    if (setup.ris_rows % 2 == 0 || setup.ris_cols % 2 == 0)
        unit_fail("ris dimensions must be odd so the grid is centered on the origin");
    if (!(setup.element_spacing_m > 0.0))
        unit_fail("ris.element_spacing_m must be positive");
    if (!(setup.reflection_amplitude >= 0.0 && setup.reflection_amplitude <= 1.0))
        unit_fail("ris.reflection_amplitude must lie in [0, 1]");
    if (!(setup.phase_shift_rad >= 0.0 && setup.phase_shift_rad < 2.0 * 3.14159265358979323846))
        unit_fail("ris.phase_shift_rad must lie in [0, 2*pi)");
}

void parse_output_section(const json &section, RunSetup &setup) {
    if (!section.is_object())
        schema_fail("output must be an object");
    if (section.contains("format")) {
        const std::string format = require_string(section, "format", "output.");
        if (format == "csv")
            setup.output.format = OutputFormat::csv;
        else if (format == "table")
            setup.output.format = OutputFormat::table;
        else
            schema_fail("output.format must be \"csv\" or \"table\"");
    }
    if (section.contains("units")) {
        const std::string units = require_string(section, "units", "output.");
        if (units == "db")
            setup.output.units = OutputUnits::db;
        else if (units == "linear")
            setup.output.units = OutputUnits::linear;
        else if (units == "both")
            setup.output.units = OutputUnits::both;
        else
            schema_fail("output.units must be \"db\", \"linear\" or \"both\"");
    }
}

void parse_sweep_section(const json &section, RunSetup &setup) {
    if (!section.is_object())
        schema_fail("sweep must be an object");
    if (!section.contains("kind"))
        schema_fail("sweep.kind is required");
    const std::string kind = require_string(section, "kind", "sweep.");

    SweepSpec spec;
    if (kind == "element_count") {
        spec.kind = SweepKind::element_count;
        if (section.contains("values_hz") || section.contains("pairs"))
            schema_fail("sweep of kind element_count takes \"values\" only");
        if (section.contains("topology_rule")) {
            const std::string rule = require_string(section, "topology_rule", "sweep.");
            if (rule != "linear")
                schema_fail("sweep.topology_rule must be \"linear\"");
        }
        if (!section.contains("values"))
            schema_fail("sweep.values is required for an element_count sweep");
        const json &values = section.at("values");
        if (!values.is_array() || values.empty())
            schema_fail("sweep.values must be a nonempty array");
        for (const json &value : values) {
            const long q = require_integer(value, "sweep.values entry");
            if (q < 1)
                unit_fail("sweep.values entries must be positive");
            if (q % 2 == 0)
                unit_fail("sweep.values entries must be odd (linear 1 x Q layout)");
            if (q > std::numeric_limits<int>::max())
                unit_fail("sweep.values entry too large");
            if (!spec.element_counts.empty() && q <= spec.element_counts.back())
                unit_fail("sweep.values must be strictly increasing");
            spec.element_counts.push_back(q);
        }
    } else if (kind == "bandwidth") {
        spec.kind = SweepKind::bandwidth;
        if (section.contains("values") || section.contains("pairs") ||
            section.contains("topology_rule"))
            schema_fail("sweep of kind bandwidth takes \"values_hz\" only");
        if (!section.contains("values_hz"))
            schema_fail("sweep.values_hz is required for a bandwidth sweep");
        const json &values = section.at("values_hz");
        if (!values.is_array() || values.empty())
            schema_fail("sweep.values_hz must be a nonempty array");
        for (const json &value : values) {
            if (!value.is_number())
                schema_fail("sweep.values_hz entries must be numbers");
            const double w = value.get<double>();
            if (!(w > 0.0))
                unit_fail("sweep.values_hz entries must be positive");
            if (!spec.bandwidths_hz.empty() && w <= spec.bandwidths_hz.back())
                unit_fail("sweep.values_hz must be strictly increasing");
            spec.bandwidths_hz.push_back(w);
        }
    } else if (kind == "topology") {
        spec.kind = SweepKind::topology;
        if (section.contains("values") || section.contains("values_hz") ||
            section.contains("topology_rule"))
            schema_fail("sweep of kind topology takes \"pairs\" only");
        if (!section.contains("pairs"))
            schema_fail("sweep.pairs is required for a topology sweep");
        const json &pairs = section.at("pairs");
        if (!pairs.is_array() || pairs.empty())
            schema_fail("sweep.pairs must be a nonempty array");
        for (const json &pair : pairs) {
            if (!pair.is_array() || pair.size() != 2)
                schema_fail("sweep.pairs entries must be [rows, cols] arrays");
            const long rows = require_integer(pair[0], "sweep.pairs rows");
            const long cols = require_integer(pair[1], "sweep.pairs cols");
            if (rows < 1 || cols < 1)
                unit_fail("sweep.pairs entries must be positive");
            if (rows % 2 == 0 || cols % 2 == 0)
                unit_fail("sweep.pairs dimensions must be odd");
            spec.topologies.emplace_back(static_cast<int>(rows), static_cast<int>(cols));
        }
    } else {
        schema_fail("sweep.kind must be \"element_count\", \"bandwidth\" or \"topology\"");
    }
    setup.sweep = std::move(spec);
}

std::string trim_copy(const std::string &text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return {};
    const auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

} // namespace

RunSetup parse_config(const std::string &json_text) {
    const std::string trimmed = trim_copy(json_text);
    json root = json::object();
    if (!trimmed.empty()) {
        try {
            root = json::parse(trimmed);
        } catch (const json::parse_error &e) {
            throw Error(ErrorCode::parse_error, e.what());
        }
    }
    if (!root.is_object())
        schema_fail("top-level configuration must be a JSON object");

    std::vector<std::string> unknown;
    collect_unknown(root, {root_keys, std::size(root_keys)}, "", unknown);
    if (root.contains("ris") && root.at("ris").is_object())
        collect_unknown(root.at("ris"), {ris_keys, std::size(ris_keys)}, "ris.", unknown);
    if (root.contains("output") && root.at("output").is_object())
        collect_unknown(root.at("output"), {output_keys, std::size(output_keys)}, "output.",
                        unknown);
    if (root.contains("sweep") && root.at("sweep").is_object())
        collect_unknown(root.at("sweep"), {sweep_keys, std::size(sweep_keys)}, "sweep.", unknown);
    if (!unknown.empty()) {
        std::ostringstream msg;
        msg << "unknown configuration keys:";
        for (const std::string &key : unknown)
            msg << " " << key;
        schema_fail(msg.str());
    }

    if (root.contains("schema_version")) {
        const long version = require_integer(root.at("schema_version"), "schema_version");
        if (version != 1)
            schema_fail("unsupported schema_version (this build reads version 1)");
    }

    RunSetup setup;
    if (root.contains("carrier_frequency_hz"))
        setup.system.carrier_frequency_hz = require_number(root, "carrier_frequency_hz", "");
    if (root.contains("bandwidth_hz"))
        setup.system.bandwidth_hz = require_number(root, "bandwidth_hz", "");
    if (root.contains("transmit_power_dbm"))
        setup.system.transmit_power_w = dbm_to_watts(require_number(root, "transmit_power_dbm", ""));
    if (root.contains("noise_variance"))
        setup.system.noise_variance = require_number(root, "noise_variance", "");
    if (root.contains("tx_position_m"))
        setup.system.tx_position = require_position(root, "tx_position_m");
    if (root.contains("rx_position_m"))
        setup.system.rx_position = require_position(root, "rx_position_m");

    if (root.contains("delay_model")) {
        const std::string model = require_string(root, "delay_model", "");
        if (model == "approximate" || model == "approx")
            setup.system.delay_model = DelayModel::approximate;
        else if (model == "exact")
            setup.system.delay_model = DelayModel::exact;
        else
            schema_fail("delay_model must be \"approximate\" or \"exact\"");
    }
    if (root.contains("near_field_policy")) {
        const std::string policy = require_string(root, "near_field_policy", "");
        if (policy == "warn")
            setup.system.near_field_policy = NearFieldPolicy::warn;
        else if (policy == "strict")
            setup.system.near_field_policy = NearFieldPolicy::strict;
        else
            schema_fail("near_field_policy must be \"warn\" or \"strict\"");
    }

    if (root.contains("ris"))
        parse_ris_section(root.at("ris"), setup);
    if (root.contains("output"))
        parse_output_section(root.at("output"), setup);
    if (root.contains("sweep"))
        parse_sweep_section(root.at("sweep"), setup);

    validate(setup.system);
    return setup;
}

RunSetup load_config(const std::string &path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream)
        throw Error(ErrorCode::io_error, "cannot open configuration file: " + path);
    std::ostringstream content;
    content << stream.rdbuf();
    return parse_config(content.str());
}

std::string default_config_json() {
    const RunSetup defaults;
    json root;
    root["schema_version"] = 1;
    root["carrier_frequency_hz"] = defaults.system.carrier_frequency_hz;
    root["bandwidth_hz"] = defaults.system.bandwidth_hz;
    root["transmit_power_dbm"] = watts_to_dbm(defaults.system.transmit_power_w);
    root["noise_variance"] = defaults.system.noise_variance;
    root["tx_position_m"] = {defaults.system.tx_position.x, defaults.system.tx_position.y,
                             defaults.system.tx_position.z};
    root["rx_position_m"] = {defaults.system.rx_position.x, defaults.system.rx_position.y,
                             defaults.system.rx_position.z};
    root["ris"] = {{"rows", defaults.ris_rows},
                   {"cols", defaults.ris_cols},
                   {"element_spacing_m", defaults.element_spacing_m},
                   {"reflection_amplitude", defaults.reflection_amplitude},
                   {"phase_shift_rad", defaults.phase_shift_rad}};
    root["delay_model"] = "approximate";
    root["near_field_policy"] = "warn";
    root["output"] = {{"format", "csv"}, {"units", "both"}};
    return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

ResultRow run_single(const SystemConfig &config, const RisTopology &topology) {
    validate(config);
    const PathSet paths = build_path_set(config, topology);
    const TappedChannel channel = bin_paths(paths, config.bandwidth_hz);
    const LinkResult link = analyze_link(config.transmit_power_w, channel, config.noise_variance);
    const PbfResult pbf = pbf_best_snr(config.transmit_power_w, channel, config.tx_position,
                                       config.rx_position, config.noise_variance);

    ResultRow row;
    row.rows = topology.rows();
    row.cols = topology.cols();
    row.element_count = topology.element_count();
    row.bandwidth_hz = config.bandwidth_hz;
    row.tap_count = channel.tap_count();
    row.tap_origin_s = channel.tap_origin_s();
    row.snr_tr_linear = link.snr_bound;
    row.snr_tr_db = to_db(link.snr_bound);
    row.sinr_tr_linear = link.sinr;
    row.sinr_tr_db = to_db(link.sinr);
    row.snr_pbf_best_linear = pbf.best_snr;
    row.snr_pbf_best_db = to_db(pbf.best_snr);
    row.pbf_best_tap = pbf.best_tap;
    row.useful_power_w = link.useful_power_w;
    row.isi_power_w = link.isi_power_w;
    return row;
}

void run_sweep(const RunSetup &setup, const std::function<void(const ResultRow &)> &sink) {
    if (!setup.sweep)
        throw Error(ErrorCode::schema_error, "configuration has no sweep section");
    const SweepSpec &spec = *setup.sweep;
    if (spec.point_count() == 0)
        throw Error(ErrorCode::schema_error, "sweep has no points");

    switch (spec.kind) {
    case SweepKind::element_count:
        for (long q : spec.element_counts)
            sink(run_single(setup.system, setup.build_ris(1, static_cast<int>(q))));
        break;
    case SweepKind::bandwidth: {
        const RisTopology topology = setup.build_ris();
        for (double w : spec.bandwidths_hz) {
            SystemConfig config = setup.system;
            config.bandwidth_hz = w;
            sink(run_single(config, topology));
        }
        break;
    }
    case SweepKind::topology:
        for (const auto &[rows, cols] : spec.topologies)
            sink(run_single(setup.system, setup.build_ris(rows, cols)));
        break;
    }
}

std::vector<ResultRow> run_sweep(const RunSetup &setup) {
    std::vector<ResultRow> rows;
    if (setup.sweep)
        rows.reserve(setup.sweep->point_count());
    run_sweep(setup, [&rows](const ResultRow &row) { rows.push_back(row); });
    return rows;
}

// ---------------------------------------------------------------------------
// Table 1 replication
// ---------------------------------------------------------------------------

namespace {

struct Table1Column {
    double bandwidth_hz;
    std::array<int, 4> expected_taps;
};

constexpr std::array<std::pair<int, int>, 4> table1_layouts{{{35, 35}, {7, 175}, {5, 245}, {1, 1225}}};
constexpr std::array<Table1Column, 2> table1_columns{{{2e9, {1, 3, 6, 89}}, {4e9, {1, 5, 10, 176}}}};

} // namespace

bool Table1Report::all_match() const {
    return mismatch_count() == 0;
}

std::size_t Table1Report::mismatch_count() const {
    std::size_t count = 0;
    for (const Table1Cell &cell : cells)
        if (!cell.match())
            ++count;
    return count;
}

Table1Report reproduce_table1(const Table1Options &options) {
    const SystemConfig base = options.base.value_or(SystemConfig{});

    Table1Report report;
    for (const Table1Column &column : table1_columns) {
        if (options.only_bandwidth_hz > 0.0 &&
            std::abs(column.bandwidth_hz - options.only_bandwidth_hz) >
                1e-6 * column.bandwidth_hz)
            continue;
        for (std::size_t i = 0; i < table1_layouts.size(); ++i) {
            const auto [rows, cols] = table1_layouts[i];
            SystemConfig config = base;
            config.bandwidth_hz = column.bandwidth_hz;

            const RisTopology topology = build_topology(rows, cols, table1_spacing_m);
            const PathSet paths = build_path_set(config, topology);
            const TappedChannel channel = bin_paths(paths, config.bandwidth_hz);

            Table1Cell cell;
            cell.rows = rows;
            cell.cols = cols;
            cell.bandwidth_hz = column.bandwidth_hz;
            cell.expected_taps = column.expected_taps[i];
            cell.computed_taps = channel.tap_count();
            report.cells.push_back(cell);
        }
    }
    if (report.cells.empty())
        throw Error(ErrorCode::invalid_argument, "bandwidth filter matches no reference column");
    return report;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

std::string formatted(const char *format, ...)
#if defined(__GNUC__)
    __attribute__((format(printf, 1, 2)))
#endif
    ;

std::string formatted(const char *format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    const int written = std::vsnprintf(buffer, sizeof(buffer), format, args);
    va_end(args);
    if (written < 0)
        return {};
    return std::string(buffer, std::min(static_cast<std::size_t>(written), sizeof(buffer) - 1));
}

} // namespace

std::string csv_header() {
    return "M,N,Q,W_hz,L,tau_o_s,snr_tr_db,snr_tr_linear,sinr_tr_db,snr_pbf_best_db,"
           "pbf_best_tap,p_u_w,p_isi_w\n";
}

std::string csv_row(const ResultRow &row) {
    return formatted("%d,%d,%ld,%.12g,%d,%.12g,%.12g,%.12g,%.12g,%.12g,%d,%.12g,%.12g\n",
                     row.rows, row.cols, row.element_count, row.bandwidth_hz, row.tap_count,
                     row.tap_origin_s, row.snr_tr_db, row.snr_tr_linear, row.sinr_tr_db,
                     row.snr_pbf_best_db, row.pbf_best_tap, row.useful_power_w, row.isi_power_w);
}

std::string format_csv(const std::vector<ResultRow> &rows) {
    std::string out = csv_header();
    for (const ResultRow &row : rows)
        out += csv_row(row);
    return out;
}

std::string table1_csv_header() {
    return "M,N,Q,W_hz,L_expected,L_computed,match\n";
}

std::string table1_csv(const Table1Report &report) {
    std::string out = table1_csv_header();
    for (const Table1Cell &cell : report.cells)
        out += formatted("%d,%d,%ld,%.12g,%d,%d,%d\n", cell.rows, cell.cols,
                         static_cast<long>(cell.rows) * cell.cols, cell.bandwidth_hz,
                         cell.expected_taps, cell.computed_taps, cell.match() ? 1 : 0);
    return out;
}

std::string format_table(const std::vector<ResultRow> &rows, OutputUnits units) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "M" << std::setw(6) << "N" << std::setw(8) << "Q"
        << std::setw(14) << "W_hz" << std::setw(6) << "L";
    if (units != OutputUnits::linear)
        out << std::setw(12) << "SNR_TR_dB" << std::setw(13) << "SINR_TR_dB" << std::setw(12)
            << "PBF_dB";
    if (units != OutputUnits::db)
        out << std::setw(14) << "SNR_TR" << std::setw(14) << "SINR_TR" << std::setw(14) << "PBF";
    out << std::setw(9) << "PBF_tap" << "\n";

    for (const ResultRow &row : rows) {
        out << std::left << std::setw(6) << row.rows << std::setw(6) << row.cols << std::setw(8)
            << row.element_count << std::setw(14) << std::setprecision(6) << row.bandwidth_hz
            << std::setw(6) << row.tap_count;
        out << std::setprecision(6);
        if (units != OutputUnits::linear)
            out << std::setw(12) << row.snr_tr_db << std::setw(13) << row.sinr_tr_db
                << std::setw(12) << row.snr_pbf_best_db;
        if (units != OutputUnits::db)
            out << std::setw(14) << row.snr_tr_linear << std::setw(14) << row.sinr_tr_linear
                << std::setw(14) << row.snr_pbf_best_linear;
        out << std::setw(9) << row.pbf_best_tap << "\n";
    }
    return out.str();
}

std::string format_table1(const Table1Report &report) {
    std::ostringstream out;
    out << "Resolvable taps per layout and bandwidth\n";
    for (const Table1Cell &cell : report.cells) {
        out << "  " << std::right << std::setw(3) << cell.rows << " x " << std::left
            << std::setw(5) << cell.cols << "  W = " << std::setprecision(3)
            << cell.bandwidth_hz / 1e9 << " GHz"
            << "  L = " << std::setw(4) << cell.computed_taps
            << " expected " << std::setw(4) << cell.expected_taps << "  "
            << (cell.match() ? "ok" : "MISMATCH") << "\n";
    }
    out << (report.all_match() ? "all cells match\n"
                               : formatted("%zu cell(s) mismatch\n", report.mismatch_count()));
    return out.str();
}

} // namespace ristr
