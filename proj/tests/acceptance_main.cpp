// Acceptance suite: runs every release criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "experiment.hpp"
#include "pbf_baseline.hpp"
#include "support.hpp"
#include "time_reversal.hpp"

using namespace ristr;
using testsupport::complexd;

namespace {

int failures = 0;

void report(int number, const std::string &name, bool ok, const std::string &detail) {
    std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok)
        ++failures;
}

bool close_rel(double a, double b, double tolerance) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0)
        return true;
    return std::abs(a - b) <= tolerance * scale;
}

double seconds_since(const std::chrono::steady_clock::time_point &start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SystemConfig reference_config(double bandwidth_hz) {
    SystemConfig config;
    config.bandwidth_hz = bandwidth_hz;
    return config;
}

ResultRow linear_point(long elements, double bandwidth_hz) {
    const SystemConfig config = reference_config(bandwidth_hz);
    return run_single(config, build_topology(1, static_cast<int>(elements), 0.015));
}

// --------------------------------------------------------------------
// 1. Table 1 exact replication
// --------------------------------------------------------------------
void criterion_table1() {
    const auto start = std::chrono::steady_clock::now();
    const auto report1 = reproduce_table1();
    const double elapsed = seconds_since(start);

    std::ostringstream detail;
    bool ok = report1.cells.size() == 8 && report1.all_match();
    for (const auto &cell : report1.cells)
        if (!cell.match())
            detail << cell.rows << "x" << cell.cols << "@" << cell.bandwidth_hz / 1e9
                   << "GHz got " << cell.computed_taps << " want " << cell.expected_taps << "; ";
    if (elapsed >= 5.0) {
        ok = false;
        detail << "runtime " << elapsed << " s exceeds 5 s";
    } else {
        detail << "8/8 cells, " << elapsed << " s";
    }
    report(1, "Table 1 exact replication", ok, detail.str());
}

// --------------------------------------------------------------------
// 2. Matched-filter peak property over random configurations
// --------------------------------------------------------------------
void criterion_matched_filter_peak() {
    std::mt19937 rng(20260808);
    bool ok = true;
    std::ostringstream detail;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const auto scenario = testsupport::random_scenario(rng);
        const auto paths = build_path_set(scenario.config, testsupport::build(scenario));
        const auto channel = bin_paths(paths, scenario.config.bandwidth_hz);
        if (channel.energy() <= 0.0)
            continue;
        const auto prefilter = tr_prefilter(channel);

        double prefilter_energy = 0.0;
        for (const auto &tap : prefilter.taps)
            prefilter_energy += std::norm(tap);
        if (std::abs(prefilter_energy - 1.0) > 1e-12) {
            ok = false;
            detail << "trial " << trial << ": prefilter energy " << prefilter_energy;
            break;
        }

        const auto response = effective_response(prefilter, channel);
        const auto &peak = response[static_cast<std::size_t>(channel.tap_count() - 1)];
        const double expected_peak = std::sqrt(channel.energy());
        if (std::abs(peak.imag()) > 1e-10 * std::max(1.0, std::abs(peak.real()))) {
            ok = false;
            detail << "trial " << trial << ": peak imaginary part " << peak.imag();
            break;
        }
        if (!close_rel(peak.real(), expected_peak, 1e-10)) {
            ok = false;
            detail << "trial " << trial << ": peak " << peak.real() << " want " << expected_peak;
            break;
        }
    }
    if (ok)
        detail << "1000 random configurations";
    report(2, "matched-filter peak property", ok, detail.str());
}

// --------------------------------------------------------------------
// 3. Brute-force oracle equivalence on small channels
// --------------------------------------------------------------------
void criterion_oracle_equivalence() {
    std::mt19937 rng(31415926);
    std::uniform_int_distribution<int> tap_count(1, 8);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> power(0.1, 10.0);
    std::uniform_real_distribution<double> noise(0.1, 10.0);

    bool ok = true;
    std::ostringstream detail;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        std::vector<complexd> taps(static_cast<std::size_t>(tap_count(rng)));
        for (auto &h : taps)
            h = complexd{gauss(rng), gauss(rng)};
        const double p = power(rng);
        const double s2 = noise(rng);

        const auto channel = TappedChannel::from_coefficients(taps);
        const auto link = analyze_link(p, channel, s2);
        const auto oracle = testsupport::oracle_metrics(taps, p, s2);

        const struct {
            const char *name;
            double got, want;
        } checks[] = {
            {"P_U", link.useful_power_w, oracle.useful_power_w},
            {"P_ISI", link.isi_power_w, oracle.isi_power_w},
            {"SINR", link.sinr, oracle.sinr},
            {"SNR bound", link.snr_bound, oracle.snr_bound},
        };
        for (const auto &check : checks)
            if (!close_rel(check.got, check.want, 1e-12)) {
                ok = false;
                detail << "trial " << trial << " " << check.name << ": " << check.got << " want "
                       << check.want;
                break;
            }
    }
    if (ok)
        detail << "200 random channels, L <= 8";
    report(3, "brute-force oracle equivalence", ok, detail.str());
}

// --------------------------------------------------------------------
// 4. Single-element degeneracy
// --------------------------------------------------------------------
void criterion_single_element() {
    const SystemConfig config = reference_config(2e9);
    const auto paths = build_path_set(config, build_topology(1, 1, 0.015));
    const auto channel = bin_paths(paths, config.bandwidth_hz);

    const double tr = snr_bound(1.0, channel, 1.0);
    const double pbf = pbf_tap_snr(1.0, channel, 1, config.tx_position, config.rx_position, 1.0);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double expected = 1.0 / (16.0 * pi2 * 8.0 * 8.0);

    const bool ok = close_rel(tr, expected, 1e-9) && close_rel(pbf, expected, 1e-9);
    std::ostringstream detail;
    detail << "snr " << tr << " vs P/(16 pi^2 |tx|^2 |rx|^2) = " << expected << " ("
           << 10.0 * std::log10(tr) << " dB)";
    report(4, "single-element degeneracy", ok, detail.str());
}

// --------------------------------------------------------------------
// 5. Large-array trend against the beamforming baseline (2 GHz)
// --------------------------------------------------------------------
void criterion_large_array_trend() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream detail;

    const auto full = linear_point(1225, 2e9);
    const auto small = linear_point(49, 2e9);

    if (!(full.snr_tr_linear > full.snr_pbf_best_linear)) {
        ok = false;
        detail << "TR " << full.snr_tr_db << " dB does not exceed PBF " << full.snr_pbf_best_db
               << " dB at Q=1225; ";
    }
    if (!(full.snr_tr_linear > small.snr_tr_linear)) {
        ok = false;
        detail << "TR at Q=1225 does not exceed TR at Q=49; ";
    }

    // The baseline's best tap saturates once the relevant elements are all
    // present; past that, growing the array changes nothing.
    const double plateau = linear_point(401, 2e9).snr_pbf_best_linear;
    for (long q : {601L, 801L, 1001L, 1225L})
        if (!close_rel(linear_point(q, 2e9).snr_pbf_best_linear, plateau, 1e-9)) {
            ok = false;
            detail << "PBF best still moving at Q=" << q << "; ";
            break;
        }

    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) {
        ok = false;
        detail << "runtime " << elapsed << " s exceeds 10 s";
    } else if (ok) {
        detail << "TR " << full.snr_tr_db << " dB > PBF " << full.snr_pbf_best_db
               << " dB at Q=1225, PBF flat from Q=401, " << elapsed << " s";
    }
    report(5, "large-array TR vs PBF trend", ok, detail.str());
}

// --------------------------------------------------------------------
// 6. Bandwidth crossover trend
// --------------------------------------------------------------------
void criterion_bandwidth_crossover() {
    bool ok = true;
    std::ostringstream detail;

    long crossover = 0;
    for (long q = 3; q <= 301; q += 2) {
        const double narrow = linear_point(q, 2e9).snr_tr_linear;
        const double wide = linear_point(q, 4e9).snr_tr_linear;
        if (wide > narrow) {
            crossover = q;
            break;
        }
    }
    if (crossover == 0 || crossover > 201) {
        ok = false;
        detail << "no crossover found at moderate Q (searched 3..301); ";
    }

    const auto narrow_full = linear_point(1225, 2e9);
    const auto wide_full = linear_point(1225, 4e9);
    if (!(narrow_full.snr_tr_linear > wide_full.snr_tr_linear)) {
        ok = false;
        detail << "no reversal at Q=1225 (2 GHz " << narrow_full.snr_tr_db << " dB vs 4 GHz "
               << wide_full.snr_tr_db << " dB)";
    }
    if (ok)
        detail << "4 GHz first beats 2 GHz at Q=" << crossover << ", ordering reverses by Q=1225";
    report(6, "bandwidth crossover trend", ok, detail.str());
}

// --------------------------------------------------------------------
// 7. Tap-partition invariants over random configurations
// --------------------------------------------------------------------
void criterion_tap_partition() {
    std::mt19937 rng(987654321);
    bool ok = true;
    std::ostringstream detail;

    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const auto scenario = testsupport::random_scenario(rng);
        const double w = scenario.config.bandwidth_hz;
        const auto paths = build_path_set(scenario.config, testsupport::build(scenario));
        const auto channel = bin_paths(paths, w);

        if (channel.tap_origin_s() > paths.tau_min_s) {
            ok = false;
            detail << "trial " << trial << ": tap origin exceeds tau_min";
            break;
        }
        const long expected_taps =
            std::max(1L, static_cast<long>(
                             std::ceil((paths.tau_max_s - channel.tap_origin_s()) * w)));
        if (channel.tap_count() != expected_taps) {
            ok = false;
            detail << "trial " << trial << ": L " << channel.tap_count() << " want "
                   << expected_taps;
            break;
        }

        std::vector<bool> seen(paths.paths.size(), false);
        std::size_t covered = 0;
        for (int tap = 1; tap <= channel.tap_count() && ok; ++tap) {
            for (std::size_t index : channel.members(tap)) {
                if (seen[index]) {
                    ok = false;
                    detail << "trial " << trial << ": path " << index << " in two taps";
                    break;
                }
                seen[index] = true;
                ++covered;
                const double offset = paths.paths[index].delay_s - channel.tap_origin_s();
                if (!(static_cast<double>(tap - 1) / w <= offset &&
                      offset < static_cast<double>(tap) / w)) {
                    ok = false;
                    detail << "trial " << trial << ": path " << index
                           << " violates the half-open interval of tap " << tap;
                    break;
                }
            }
        }
        if (ok && covered != paths.paths.size()) {
            ok = false;
            detail << "trial " << trial << ": " << covered << " of " << paths.paths.size()
                   << " paths covered";
        }
    }
    if (ok)
        detail << "1000 random configurations";
    report(7, "tap-partition invariant suite", ok, detail.str());
}

// --------------------------------------------------------------------
// 8. Cross-module PBF identity
// --------------------------------------------------------------------
void criterion_pbf_identity() {
    std::mt19937 rng(112233);
    bool ok = true;
    std::ostringstream detail;

    for (int trial = 0; trial < 100 && ok; ++trial) {
        const auto scenario = testsupport::random_scenario(rng, 1225, 0.5e9, 4e9);
        const auto topology = testsupport::build(scenario);
        const auto paths = build_path_set(scenario.config, topology);
        const auto channel = bin_paths(paths, scenario.config.bandwidth_hz);

        for (int tap = 1; tap <= channel.tap_count(); ++tap) {
            const double direct = pbf_tap_snr(1.0, channel, tap, scenario.config.tx_position,
                                              scenario.config.rx_position, 1.0);
            const auto co_phased = testsupport::co_phased_tap_topology(
                scenario.config, topology, paths, channel.members(tap));
            const auto co_channel =
                bin_paths(build_path_set(scenario.config, co_phased),
                          scenario.config.bandwidth_hz);
            const double via_tr = snr_bound(1.0, co_channel, 1.0);
            const bool match = direct == 0.0 ? via_tr == 0.0 : close_rel(via_tr, direct, 1e-9);
            if (!match) {
                ok = false;
                detail << "trial " << trial << " tap " << tap << ": " << via_tr << " want "
                       << direct;
                break;
            }
        }
    }
    if (ok)
        detail << "100 random configurations, every tap";
    report(8, "cross-module PBF identity", ok, detail.str());
}

// --------------------------------------------------------------------
// 9. Byte-identical serialization across repeated runs
// --------------------------------------------------------------------
void criterion_determinism() {
    bool ok = true;
    std::ostringstream detail;

    const std::string table_a = table1_csv(reproduce_table1());
    const std::string table_b = table1_csv(reproduce_table1());
    if (table_a != table_b) {
        ok = false;
        detail << "table1 CSV differs between runs; ";
    }

    RunSetup setup;
    SweepSpec spec;
    spec.kind = SweepKind::element_count;
    for (long q = 3; q <= 101; q += 2)
        spec.element_counts.push_back(q); // 50 points
    setup.sweep = spec;

    const std::string sweep_a = format_csv(run_sweep(setup));
    const std::string sweep_b = format_csv(run_sweep(setup));
    if (sweep_a != sweep_b) {
        ok = false;
        detail << "50-point sweep CSV differs between runs";
    }
    if (ok)
        detail << "table1 and 50-point sweep byte-identical";
    report(9, "serialization determinism", ok, detail.str());
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_table1();
    criterion_matched_filter_peak();
    criterion_oracle_equivalence();
    criterion_single_element();
    criterion_large_array_trend();
    criterion_bandwidth_crossover();
    criterion_tap_partition();
    criterion_pbf_identity();
    criterion_determinism();

    if (failures == 0)
        std::printf("all 9 criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
