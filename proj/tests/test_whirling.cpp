#include <cmath>
#include <numbers>

#include "abprop/asymptotics.hpp"
#include "abprop/whirling.hpp"
#include "doctest.h"
#include "oracle/oracle_values.hpp"

using namespace abprop;
using std::numbers::pi;

TEST_CASE("default whirl count") {
    CHECK(default_n_max(1.0) == 12);
    CHECK(default_n_max(pi) == 6);
    CHECK(default_n_max(8.0 * pi) == 3);
    CHECK(default_n_max(1e4) == 3);
}

TEST_CASE("whirls are translates of T_0") {
    const double z = 8.0 * pi;
    for (double phi : {-2.0, 0.0, 0.9}) {
        for (int n : {-2, 1, 3}) {
            CHECK(std::abs(whirl(n, z, phi) - whirl(0, z, phi + 2.0 * pi * n)) < 1e-8);
        }
        const auto batch = whirls(-2, 2, z, phi);
        REQUIRE(batch.size() == 5);
        for (int n = -2; n <= 2; ++n) CHECK(std::abs(batch[n + 2] - whirl(n, z, phi)) < 1e-12);
    }
}

TEST_CASE("T_0 is even and centred on the backward axis") {
    const double z = 8.0 * pi;
    for (double phi : {0.3, 1.0, 2.5, 5.0}) {
        CHECK(std::abs(whirl(0, z, phi) - whirl(0, z, -phi)) < 1e-10);
    }
    // plateau over |phi| < pi with Fresnel edges, tails outside
    for (double phi : {0.0, 1.0, 2.0, 2.8}) CHECK(std::abs(whirl(0, z, phi)) > 0.5);
    for (double phi : {4.0, 6.0, 9.0}) CHECK(std::abs(whirl(0, z, phi)) < 0.1);
}

TEST_CASE("whirl sum approaches the series as n_max grows") {
    const auto cfg = ReducedConfig::from_phi_b(8.0 * pi, 0.5, 0.25);
    const Complex exact(oracle::kSeries_z8pi_phi0p5_a0p25_re, oracle::kSeries_z8pi_phi0p5_a0p25_im);
    double previous = 1.0;
    for (int n : {3, 12, 100}) {
        WhirlSpec spec;
        spec.n_max = n;
        const auto r = whirl_sum(cfg, spec);
        const double dev = std::abs(r.value - exact);
        CAPTURE(n);
        CHECK(dev < previous);
        CHECK(r.err_estimate > 0.0);
        previous = dev;
    }
    CHECK(previous < 1e-5);
}

TEST_CASE("whirl sum truncation error tracks the boundary whirls") {
    const auto cfg = ReducedConfig::from_phi_b(pi, 0.4, 0.25);
    WhirlSpec a;
    a.n_max = 4;
    WhirlSpec b;
    b.n_max = 5;
    const Complex step = whirl_sum(cfg, b).value - whirl_sum(cfg, a).value;
    const Complex expected = whirl(5, pi, 0.4) * std::polar(1.0, -0.25 * (0.4 + 10.0 * pi)) +
                             whirl(-5, pi, 0.4) * std::polar(1.0, -0.25 * (0.4 - 10.0 * pi));
    CHECK(std::abs(step - expected) < 1e-9);
}

TEST_CASE("half-flux grouping") {
    const double z = 8.0 * pi;
    WhirlSpec spec;
    spec.n_max = 40;
    for (double phi : {-2.0, 0.3, 1.5}) {
        const auto cfg = ReducedConfig::from_phi_b(z, phi, 0.5);
        const auto groups = half_flux_grouping(cfg, spec);
        CHECK(std::abs(groups.even + groups.odd - whirl_sum(cfg, spec).value) < 1e-12);
        const int side = phi >= 0.0 ? 1 : -1;
        const Complex even = std::polar(1.0, -0.5 * phi) * half_wave(cfg, side);
        const Complex odd = std::polar(1.0, -0.5 * (phi - side * 2.0 * pi)) * half_wave(cfg, -side);
        CHECK(std::abs(groups.even - even) < 1e-3);
        CHECK(std::abs(groups.odd - odd) < 1e-3);
        const Complex s = whirl_sum(cfg, spec).value;
        CHECK(std::abs(std::norm(groups.even) + std::norm(groups.odd) +
                       2.0 * std::real(groups.even * std::conj(groups.odd)) - std::norm(s)) < 1e-12);
    }
}

TEST_CASE("a single whirl carries the backward direction") {
    const auto cfg = ReducedConfig::from_phi_b(8.0 * pi, 0.0, 0.25);
    WhirlSpec spec;
    spec.n_max = 0;
    const Complex s = reduced_kernel_series(cfg).value;
    CHECK(std::abs(whirl_sum(cfg, spec).value - s) / std::abs(s) < 0.05);
}
