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
//
// Command line front end. Talks to the simulator exclusively through the
// C interface of the shared library.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ristr.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_replication = 2;

struct CommonOptions {
    std::string config_path;
    std::string output_path;
    std::string format; // empty = take from config
    bool strict_near_field = false;
    std::string delay_model; // empty = take from config
};

void add_common_options(CLI::App *cmd, CommonOptions &options) {
    cmd->add_option("--config", options.config_path, "Configuration file (JSON, schema version 1)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", options.output_path, "Write results to this file instead of stdout");
    cmd->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"csv", "table"}));
    cmd->add_flag("--strict-near-field", options.strict_near_field,
                  "Treat near-field violations as errors");
    cmd->add_option("--delay-model", options.delay_model, "Path delay model")
        ->check(CLI::IsMember({"approx", "exact"}));
}

void print_error(const char *context, ristr_status status) {
    std::fprintf(stderr, "error: %s: %s (%s)\n", context, ristr_last_error(),
                 ristr_status_name(status));
}

using ConfigPtr = std::unique_ptr<ristr_config, decltype(&ristr_config_destroy)>;

ConfigPtr make_config(const CommonOptions &options, ristr_status &status) {
    ristr_config *raw = nullptr;
    if (options.config_path.empty())
        status = ristr_config_create(&raw);
    else
        status = ristr_config_load(options.config_path.c_str(), &raw);
    ConfigPtr config(raw, &ristr_config_destroy);
    if (status != RISTR_OK)
        return config;

    if (options.strict_near_field)
        status = ristr_config_set_near_field_policy(config.get(), RISTR_NEAR_FIELD_STRICT);
    if (status == RISTR_OK && !options.delay_model.empty())
        status = ristr_config_set_delay_model(config.get(), options.delay_model == "exact"
                                                                ? RISTR_DELAY_EXACT
                                                                : RISTR_DELAY_APPROXIMATE);
    if (status == RISTR_OK && !options.format.empty())
        status = ristr_config_set_output_format(config.get(), options.format == "table"
                                                                  ? RISTR_FORMAT_TABLE
                                                                  : RISTR_FORMAT_CSV);
    return config;
}

ristr_output_format resolve_format(const ristr_config *config) {
    ristr_output_format format = RISTR_FORMAT_CSV;
    ristr_config_output_format(config, &format);
    return format;
}

ristr_output_units resolve_units(const ristr_config *config) {
    ristr_output_units units = RISTR_UNITS_BOTH;
    ristr_config_output_units(config, &units);
    return units;
}

// Two-call pattern wrapper for the library's text serializers.
std::string fetch_text(const std::function<ristr_status(char *, size_t, size_t *)> &fill,
                       ristr_status &status) {
    size_t needed = 0;
    status = fill(nullptr, 0, &needed);
    if (status != RISTR_OK)
        return {};
    std::string text(needed, '\0');
    status = fill(text.data(), text.size(), &needed);
    if (status != RISTR_OK)
        return {};
    text.resize(needed - 1); // drop the terminating NUL
    return text;
}

struct OutputFile {
    std::FILE *stream = stdout;
    bool owned = false;

    ~OutputFile() {
        if (owned && stream)
            std::fclose(stream);
    }

    bool open(const std::string &path) {
        if (path.empty())
            return true;
        stream = std::fopen(path.c_str(), "wb");
        owned = true;
        if (!stream) {
            std::fprintf(stderr, "error: cannot open output file %s\n", path.c_str());
            return false;
        }
        return true;
    }
};

void warn_if_outside_near_field(const ristr_config *config) {
    ristr_near_field_report report{};
    if (ristr_near_field_check(config, &report) != RISTR_OK)
        return; // strict violations surface later as pipeline errors
    if (!report.tx_within || !report.rx_within)
        std::fprintf(stderr,
                     "warning: endpoint outside the near-field bound of %.6g m "
                     "(tx at %.6g m, rx at %.6g m)\n",
                     report.bound_m, report.tx_distance_m, report.rx_distance_m);
}

int run_single_command(const CommonOptions &options) {
    ristr_status status = RISTR_OK;
    ConfigPtr config = make_config(options, status);
    if (status != RISTR_OK) {
        print_error("loading configuration", status);
        return exit_usage;
    }

    warn_if_outside_near_field(config.get());

    ristr_result_row row{};
    status = ristr_run_single(config.get(), &row);
    if (status != RISTR_OK) {
        print_error("evaluating the link", status);
        return exit_usage;
    }

    std::string text;
    if (resolve_format(config.get()) == RISTR_FORMAT_CSV) {
        text = fetch_text(ristr_csv_header, status);
        if (status == RISTR_OK)
            text += fetch_text(
                [&row](char *buf, size_t cap, size_t *req) {
                    return ristr_csv_row(&row, buf, cap, req);
                },
                status);
    } else {
        const ristr_output_units units = resolve_units(config.get());
        text = fetch_text(
            [&row, units](char *buf, size_t cap, size_t *req) {
                return ristr_rows_text(&row, 1, units, buf, cap, req);
            },
            status);
    }
    if (status != RISTR_OK) {
        print_error("formatting the result", status);
        return exit_usage;
    }

    OutputFile out;
    if (!out.open(options.output_path))
        return exit_usage;
    std::fwrite(text.data(), 1, text.size(), out.stream);
    return exit_ok;
}

struct StreamContext {
    std::FILE *stream;
};

extern "C" void stream_row(const ristr_result_row *row, void *user_data) {
    auto *context = static_cast<StreamContext *>(user_data);
    size_t needed = 0;
    if (ristr_csv_row(row, nullptr, 0, &needed) != RISTR_OK)
        return;
    std::string line(needed, '\0');
    if (ristr_csv_row(row, line.data(), line.size(), &needed) != RISTR_OK)
        return;
    std::fwrite(line.data(), 1, needed - 1, context->stream);
    std::fflush(context->stream);
}

int run_sweep_command(const CommonOptions &options) {
    ristr_status status = RISTR_OK;
    ConfigPtr config = make_config(options, status);
    if (status != RISTR_OK) {
        print_error("loading configuration", status);
        return exit_usage;
    }

    int has_sweep = 0;
    status = ristr_config_has_sweep(config.get(), &has_sweep);
    if (status != RISTR_OK || !has_sweep) {
        std::fprintf(stderr, "error: the configuration file has no sweep section\n");
        return exit_usage;
    }

    OutputFile out;
    if (!out.open(options.output_path))
        return exit_usage;

    if (resolve_format(config.get()) == RISTR_FORMAT_CSV) {
        // Stream rows so partial results are flushed if a later point fails.
        std::string header = fetch_text(ristr_csv_header, status);
        if (status != RISTR_OK) {
            print_error("formatting the header", status);
            return exit_usage;
        }
        std::fwrite(header.data(), 1, header.size(), out.stream);
        std::fflush(out.stream);

        StreamContext context{out.stream};
        status = ristr_run_sweep_stream(config.get(), &stream_row, &context);
        if (status != RISTR_OK) {
            print_error("running the sweep", status);
            return exit_usage;
        }
        return exit_ok;
    }

    size_t count = 0;
    if (ristr_sweep_point_count(config.get(), &count) != RISTR_OK)
        return exit_usage;
    std::vector<ristr_result_row> rows(count);
    size_t produced = 0;
    status = ristr_run_sweep(config.get(), rows.data(), rows.size(), &produced);
    rows.resize(produced);

    ristr_status format_status = RISTR_OK;
    const ristr_output_units units = resolve_units(config.get());
    const std::string text = fetch_text(
        [&rows, units](char *buf, size_t cap, size_t *req) {
            return ristr_rows_text(rows.data(), rows.size(), units, buf, cap, req);
        },
        format_status);
    if (format_status == RISTR_OK)
        std::fwrite(text.data(), 1, text.size(), out.stream);

    if (status != RISTR_OK) {
        print_error("running the sweep", status);
        return exit_usage;
    }
    if (format_status != RISTR_OK) {
        print_error("formatting the results", format_status);
        return exit_usage;
    }
    return exit_ok;
}

int run_table1_command(const CommonOptions &options, double only_bandwidth_hz) {
    ristr_status status = RISTR_OK;
    ConfigPtr config = make_config(options, status);
    if (status != RISTR_OK) {
        print_error("loading configuration", status);
        return exit_usage;
    }

    ristr_table1_report report{};
    const ristr_status run_status = ristr_run_table1(only_bandwidth_hz, &report);
    if (run_status != RISTR_OK && run_status != RISTR_ERR_REPLICATION_MISMATCH) {
        print_error("running the replication", run_status);
        return exit_usage;
    }

    std::string text;
    if (resolve_format(config.get()) == RISTR_FORMAT_CSV)
        text = fetch_text(
            [&report](char *buf, size_t cap, size_t *req) {
                return ristr_table1_csv(&report, buf, cap, req);
            },
            status);
    else
        text = fetch_text(
            [&report](char *buf, size_t cap, size_t *req) {
                return ristr_table1_text(&report, buf, cap, req);
            },
            status);
    if (status != RISTR_OK) {
        print_error("formatting the report", status);
        return exit_usage;
    }

    OutputFile out;
    if (!out.open(options.output_path))
        return exit_usage;
    std::fwrite(text.data(), 1, text.size(), out.stream);

    if (run_status == RISTR_ERR_REPLICATION_MISMATCH) {
        std::fprintf(stderr, "error: %zu cell(s) differ from the reference table\n",
                     report.mismatch_count);
        return exit_replication;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"RIS-enabled time-reversal link simulator"};
    app.set_version_flag("--version", ristr_version());
    app.require_subcommand(1);

    CommonOptions single_options;
    CLI::App *single = app.add_subcommand("single", "Evaluate one operating point");
    add_common_options(single, single_options);

    CommonOptions sweep_options;
    CLI::App *sweep = app.add_subcommand("sweep", "Run the sweep defined in the configuration");
    add_common_options(sweep, sweep_options);

    CommonOptions table1_options;
    double only_bandwidth_hz = 0.0;
    CLI::App *table1 =
        app.add_subcommand("table1", "Reproduce the resolvable-tap reference table");
    add_common_options(table1, table1_options);
    table1->add_option("--bandwidth", only_bandwidth_hz,
                       "Restrict the replication to one bandwidth column (Hz)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    if (single->parsed())
        return run_single_command(single_options);
    if (sweep->parsed())
        return run_sweep_command(sweep_options);
    if (table1->parsed())
        return run_table1_command(table1_options, only_bandwidth_hz);
    return exit_usage;
}
