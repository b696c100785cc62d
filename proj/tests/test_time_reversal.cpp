#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "support.hpp"
#include "time_reversal.hpp"

using namespace ristr;
using testsupport::complexd;

namespace {

TappedChannel channel_of(std::vector<complexd> taps) {
    return TappedChannel::from_coefficients(std::move(taps));
}

std::vector<complexd> random_taps(std::mt19937 &rng, int count) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<complexd> taps(static_cast<std::size_t>(count));
    for (auto &h : taps)
        h = complexd{gauss(rng), gauss(rng)};
    return taps;
}

} // namespace

TEST_CASE("prefilter construction") {
    SUBCASE("single tap normalizes to unit magnitude") {
        const auto prefilter = tr_prefilter(channel_of({complexd{0.3, -0.4}}));
        REQUIRE(prefilter.taps.size() == 1);
        CHECK(std::abs(prefilter.taps[0]) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(prefilter.taps[0].real() == doctest::Approx(0.6).epsilon(1e-12));
        CHECK(prefilter.taps[0].imag() == doctest::Approx(0.8).epsilon(1e-12));
    }

    SUBCASE("two-tap symbolic case") {
        const auto prefilter = tr_prefilter(channel_of({complexd{1, 0}, complexd{0, 1}}));
        REQUIRE(prefilter.taps.size() == 2);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        CHECK(prefilter.taps[0].real() == doctest::Approx(0.0));
        CHECK(prefilter.taps[0].imag() == doctest::Approx(-inv_sqrt2).epsilon(1e-12));
        CHECK(prefilter.taps[1].real() == doctest::Approx(inv_sqrt2).epsilon(1e-12));
        CHECK(prefilter.taps[1].imag() == doctest::Approx(0.0));
    }

    SUBCASE("unit energy for random channels") {
        std::mt19937 rng(7);
        for (int i = 0; i < 100; ++i) {
            std::uniform_int_distribution<int> count(1, 12);
            const auto prefilter = tr_prefilter(channel_of(random_taps(rng, count(rng))));
            double energy = 0.0;
            for (const auto &tap : prefilter.taps)
                energy += std::norm(tap);
            CHECK(std::abs(energy - 1.0) <= 1e-12);
        }
    }

    SUBCASE("all-zero channel is an error") {
        try {
            (void)tr_prefilter(channel_of({complexd{0, 0}, complexd{0, 0}}));
            FAIL("expected an error");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::zero_channel);
        }
    }
}

TEST_CASE("effective response") {
    SUBCASE("two-tap symbolic convolution") {
        const auto channel = channel_of({complexd{1, 0}, complexd{0, 1}});
        const auto response = effective_response(tr_prefilter(channel), channel);
        REQUIRE(response.size() == 3);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        CHECK(response[0].imag() == doctest::Approx(-inv_sqrt2).epsilon(1e-12));
        CHECK(response[1].real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
        CHECK(response[1].imag() == doctest::Approx(0.0));
        CHECK(response[2].imag() == doctest::Approx(inv_sqrt2).epsilon(1e-12));
    }

    SUBCASE("single tap yields the magnitude") {
        const auto channel = channel_of({complexd{0.3, -0.4}});
        const auto response = effective_response(tr_prefilter(channel), channel);
        REQUIRE(response.size() == 1);
        CHECK(response[0].real() == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("matches the brute-force convolution oracle") {
        std::mt19937 rng(1234);
        for (int i = 0; i < 50; ++i) {
            const auto taps = random_taps(rng, 5);
            const auto channel = channel_of(taps);
            const auto prefilter = tr_prefilter(channel);
            const auto response = effective_response(prefilter, channel);
            const auto expected = testsupport::oracle_convolution(prefilter.taps, taps);
            REQUIRE(response.size() == expected.size());
            for (std::size_t l = 0; l < response.size(); ++l)
                CHECK(std::abs(response[l] - expected[l]) <=
                      1e-12 * std::max(1.0, std::abs(expected[l])));
        }
    }

    SUBCASE("length mismatch is an error") {
        const auto prefilter = tr_prefilter(channel_of({complexd{1, 0}, complexd{0, 1}}));
        const auto other = channel_of({complexd{1, 0}, complexd{0, 1}, complexd{1, 1}});
        try {
            (void)effective_response(prefilter, other);
            FAIL("expected an error");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::length_mismatch);
        }
    }
}

TEST_CASE("power metrics") {
    SUBCASE("single reference element") {
        const SystemConfig config;
        const auto paths = build_path_set(config, build_topology(1, 1, 0.015));
        const auto channel = bin_paths(paths, config.bandwidth_hz);
        const double expected = 1.0 / (1024.0 * std::numbers::pi * std::numbers::pi);
        CHECK(useful_power(1.0, channel) == doctest::Approx(expected).epsilon(1e-9));
        CHECK(snr_bound(1.0, channel, 1.0) == doctest::Approx(expected).epsilon(1e-9));
        CHECK(10.0 * std::log10(snr_bound(1.0, channel, 1.0)) ==
              doctest::Approx(-40.0459970202808).epsilon(1e-9));
        CHECK(isi_power(1.0, tr_prefilter(channel), channel) == 0.0);
        CHECK(sinr(1.0, channel, 1.0) == doctest::Approx(snr_bound(1.0, channel, 1.0)));
    }

    SUBCASE("zero channel has zero useful power") {
        CHECK(useful_power(2.0, channel_of({complexd{0, 0}})) == 0.0);
    }

    SUBCASE("useful power is linear in the transmit power") {
        const auto channel = channel_of({complexd{1, 2}, complexd{-0.5, 0.25}});
        CHECK(useful_power(2.0, channel) == doctest::Approx(2.0 * useful_power(1.0, channel)));
    }

    SUBCASE("two-tap symbolic ISI and SINR") {
        const auto channel = channel_of({complexd{1, 0}, complexd{0, 1}});
        const auto prefilter = tr_prefilter(channel);
        CHECK(isi_power(1.0, prefilter, channel) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(sinr(1.0, channel, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(snr_bound(1.0, channel, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
    }

    SUBCASE("noise scaling halves the bound") {
        const auto channel = channel_of({complexd{1, 1}});
        CHECK(snr_bound(1.0, channel, 2.0) ==
              doctest::Approx(0.5 * snr_bound(1.0, channel, 1.0)));
    }

    SUBCASE("co-phased single-tap channel reaches the coherent-gain formula") {
        SystemConfig config; // 3x3 grid, tiny spread: one tap at 2 GHz
        auto topology = build_topology(3, 3, 0.015);
        std::vector<double> amplitudes(9, 1.0);
        std::vector<double> phases(9, 0.0);
        for (int m = -1; m <= 1; ++m)
            for (int n = -1; n <= 1; ++n)
                phases[topology.flat_index(m, n)] =
                    testsupport::co_phase(config, topology.element_position(m, n));
        topology = topology.with_reflection_profile(amplitudes, phases);

        const auto channel = bin_paths(build_path_set(config, topology), config.bandwidth_hz);
        REQUIRE(channel.tap_count() == 1);
        const double pi2 = std::numbers::pi * std::numbers::pi;
        const double expected = 81.0 / (16.0 * pi2 * 64.0);
        CHECK(snr_bound(1.0, channel, 1.0) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("link analysis bundles every metric consistently") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> count(1, 10);
    std::uniform_real_distribution<double> power(0.1, 10.0);
    std::uniform_real_distribution<double> noise(0.1, 10.0);

    for (int i = 0; i < 100; ++i) {
        const auto taps = random_taps(rng, count(rng));
        const auto channel = channel_of(taps);
        const double p = power(rng);
        const double s2 = noise(rng);
        const auto link = analyze_link(p, channel, s2);

        const auto prefilter = tr_prefilter(channel);
        CHECK(link.useful_power_w == useful_power(p, channel));
        CHECK(link.isi_power_w == doctest::Approx(isi_power(p, prefilter, channel)).epsilon(1e-14));
        CHECK(link.sinr == doctest::Approx(sinr(p, channel, s2)).epsilon(1e-14));
        CHECK(link.snr_bound == doctest::Approx(snr_bound(p, channel, s2)).epsilon(1e-14));
        CHECK(link.sinr <= link.snr_bound * (1.0 + 1e-12));
        CHECK(link.useful_power_w >= 0.0);
        CHECK(link.isi_power_w >= 0.0);

        // matched-filter peak: real, dominant, equal to sqrt of the energy
        const auto &peak = link.effective_response[static_cast<std::size_t>(channel.tap_count() - 1)];
        CHECK(std::abs(peak.imag()) <= 1e-12 * std::abs(peak.real()));
        CHECK(peak.real() == doctest::Approx(std::sqrt(channel.energy())).epsilon(1e-12));
        for (const auto &entry : link.effective_response)
            CHECK(std::abs(entry) <= std::abs(peak) * (1.0 + 1e-12));

        // the two defining forms of the useful power agree
        CHECK(link.useful_power_w == doctest::Approx(p * std::norm(peak)).epsilon(1e-12));
    }
}

TEST_CASE("global phase invariance") {
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 50; ++i) {
        const auto taps = random_taps(rng, 6);
        const double theta = angle(rng);
        auto rotated = taps;
        for (auto &h : rotated)
            h *= std::polar(1.0, theta);

        const auto base = analyze_link(1.0, channel_of(taps), 1.0);
        const auto turned = analyze_link(1.0, channel_of(rotated), 1.0);
        CHECK(turned.useful_power_w == doctest::Approx(base.useful_power_w).epsilon(1e-12));
        CHECK(turned.isi_power_w ==
              doctest::Approx(base.isi_power_w).epsilon(1e-10).scale(base.useful_power_w));
        CHECK(turned.sinr == doctest::Approx(base.sinr).epsilon(1e-10));
        CHECK(turned.snr_bound == doctest::Approx(base.snr_bound).epsilon(1e-12));
    }
}

TEST_CASE("pipeline metrics match the brute-force oracle") {
    std::mt19937 rng(90210);
    std::uniform_int_distribution<int> count(1, 8);
    for (int i = 0; i < 50; ++i) {
        const auto taps = random_taps(rng, count(rng));
        const auto channel = channel_of(taps);
        const auto link = analyze_link(1.7, channel, 0.9);
        const auto oracle = testsupport::oracle_metrics(taps, 1.7, 0.9);
        CHECK(link.useful_power_w ==
              doctest::Approx(oracle.useful_power_w).epsilon(1e-12));
        CHECK(link.isi_power_w ==
              doctest::Approx(oracle.isi_power_w).epsilon(1e-10).scale(oracle.useful_power_w));
        CHECK(link.sinr == doctest::Approx(oracle.sinr).epsilon(1e-10));
        CHECK(link.snr_bound == doctest::Approx(oracle.snr_bound).epsilon(1e-12));
    }
}
