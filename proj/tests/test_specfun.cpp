#include <cmath>
#include <numbers>
#include <vector>

#include "abprop/errors.hpp"
#include "abprop/specfun.hpp"
#include "doctest.h"
#include "oracle/oracle_values.hpp"

using namespace abprop;
using namespace abprop::specfun;
using std::numbers::pi;

namespace {

// J for any real order through J_{-v} = cos(v pi) J_v - sin(v pi) Y_v.
double j_any(double nu, double x) {
    if (nu >= 0.0) return bessel_j(nu, x);
    const double v = -nu;
    return cospi(v) * bessel_j(v, x) - sinpi(v) * bessel_y(v, x);
}

// Oscillation envelope used to scale absolute tolerances near zeros.
double envelope(double nu, double x) {
    return x > nu ? std::sqrt(2.0 / (pi * x)) : 0.0;
}

}  // namespace

TEST_CASE("bessel_j closed forms") {
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(2.5, 0.0) == 0.0);
    CHECK(bessel_j(0.5, pi / 2) == doctest::Approx(2.0 / pi).epsilon(1e-14));
    for (double x : {0.1, 0.9, 1.7, 2.0, 5.5, 33.0, 250.0}) {
        const double amp = std::sqrt(2.0 / (pi * x));
        CHECK(std::abs(bessel_j(0.5, x) - amp * std::sin(x)) <= 1e-12 * amp);
        CHECK(std::abs(j_any(-0.5, x) - amp * std::cos(x)) <= 1e-12 * amp);
    }
}

TEST_CASE("bessel_j and bessel_y against extended-precision table") {
    for (const auto& ref : oracle::kBesselTable) {
        CAPTURE(ref.nu);
        CAPTURE(ref.x);
        const double scale_j = std::max(std::abs(ref.j), envelope(ref.nu, ref.x));
        CHECK(std::abs(bessel_j(ref.nu, ref.x) - ref.j) <= 1e-12 * scale_j);
        const double scale_y = std::max(std::abs(ref.y), envelope(ref.nu, ref.x));
        CHECK(std::abs(bessel_y(ref.nu, ref.x) - ref.y) <= 1e-12 * scale_y);
    }
}

TEST_CASE("bessel_y half-order values and errors") {
    CHECK(std::abs(bessel_y(0.5, pi / 2)) < 1e-15);
    CHECK(bessel_y(0.5, pi) == doctest::Approx(std::sqrt(2.0) / pi).epsilon(1e-14));
    CHECK_THROWS_AS(bessel_y(0.3, 0.0), PoleError);
    CHECK_THROWS_AS(bessel_y(0.3, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(-0.3, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0.3, std::nan("")), DomainError);
    CHECK_THROWS_AS(bessel_j(INFINITY, 1.0), DomainError);
}

TEST_CASE("integer orders need no near-integer workaround") {
    // Y_1 from the integer branch against its neighbours: the function is
    // smooth in the order, so symmetric differences must agree closely.
    for (double x : {0.7, 3.0, 12.0}) {
        const double y1 = bessel_y(1.0, x);
        const double mid = 0.5 * (bessel_y(1.0 - 1e-6, x) + bessel_y(1.0 + 1e-6, x));
        CHECK(std::abs(y1 - mid) < 1e-10 * std::max(1.0, std::abs(y1)));
    }
    CHECK(bessel_y(0.0, 1.0) == doctest::Approx(0.088256964215676957983).epsilon(1e-13));
}

TEST_CASE("hankel1") {
    const Complex h = hankel1(0.5, pi / 2);
    CHECK(h.real() == doctest::Approx(2.0 / pi).epsilon(1e-14));
    CHECK(std::abs(h.imag()) < 1e-15);

    const double x = 2.0e4;
    CHECK(std::abs(hankel1(0.0, x)) == doctest::Approx(std::sqrt(2.0 / (pi * x))).epsilon(1e-5));

    const auto& ref = oracle::kBesselTable[3];  // (0.7, 5.0)
    REQUIRE(ref.nu == 0.7);
    const Complex h07 = hankel1(0.7, 5.0);
    CHECK(std::abs(h07 - Complex(ref.j, ref.y)) < 1e-13);

    // H_{-v} = exp(i v pi) H_v
    const Complex lhs = hankel1(-0.3, 4.0);
    const Complex rhs = std::exp(Complex(0.0, 0.3 * pi)) * hankel1(0.3, 4.0);
    CHECK(std::abs(lhs - rhs) < 1e-14);

    const auto pair = hankel1_pair(0.4, 9.0);
    CHECK(std::abs(pair[0] - hankel1(0.4, 9.0)) < 1e-14);
    CHECK(std::abs(pair[1] - hankel1(1.4, 9.0)) < 1e-14);
}

TEST_CASE("scaled asymptotic Hankel matches the real-axis evaluation") {
    for (double nu : {-0.75, -0.25, 0.25, 0.5, 1.0}) {
        for (double x : {20.0, 45.0, 80.0}) {
            const Complex direct = hankel1(nu, x) * std::exp(Complex(0.0, -x));
            const Complex asym = hankel1_scaled_asymptotic(nu, Complex(x, 0.0));
            CHECK(std::abs(direct - asym) < 1e-14);
        }
    }
}

TEST_CASE("bessel_j_sequence agrees with single evaluations") {
    for (double x : {0.3, 1.9, 2.1, 17.0, 140.0}) {
        const auto seq = bessel_j_sequence(0.35, x, 60);
        for (std::size_t k = 0; k < seq.size(); k += 7) {
            const double single = bessel_j(0.35 + static_cast<double>(k), x);
            CHECK(std::abs(seq[k] - single) <= 1e-14 * std::max(std::abs(single), 1e-300) + 1e-300);
        }
    }
    const auto at_zero = bessel_j_sequence(0.0, 0.0, 3);
    CHECK(at_zero[0] == 1.0);
    CHECK(at_zero[1] == 0.0);
    const auto tiny = bessel_j_sequence(0.25, 1e-9, 2);
    CHECK(tiny[0] == doctest::Approx(std::pow(0.5e-9, 0.25) / std::tgamma(1.25)).epsilon(1e-14));
}

TEST_CASE("three-term recurrence on the property grid") {
    double worst = 0.0;
    for (double nu = 0.1; nu <= 20.0; nu += 0.37) {
        for (double x = 0.5; x <= 100.0; x *= 1.23) {
            const double jm = j_any(nu - 1.0, x);
            const double j0 = bessel_j(nu, x);
            const double jp = bessel_j(nu + 1.0, x);
            const double residual = std::abs(jm + jp - (2.0 * nu / x) * j0);
            worst = std::max(worst, residual / std::max(1.0, std::abs(j0)));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("Wronskian on the property grid") {
    double worst = 0.0;
    for (double nu = 0.1; nu <= 20.0; nu += 0.37) {
        for (double x = 0.5; x <= 100.0; x *= 1.23) {
            const BesselJY a = bessel_jy(nu, x);
            const BesselJY b = bessel_jy(nu + 1.0, x);
            const double jp = (nu / x) * a.j - b.j;
            const double yp = (nu / x) * a.y - b.y;
            worst = std::max(worst, std::abs(a.j * yp - jp * a.y - 2.0 / (pi * x)));
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("bessel_i_rotated") {
    for (double z : {0.5, 3.0, 41.0}) {
        const Complex i0 = bessel_i_rotated(0.0, z);
        CHECK(i0.real() == doctest::Approx(bessel_j(0.0, z)).epsilon(1e-15));
        CHECK(i0.imag() == 0.0);
        const Complex i1 = bessel_i_rotated(1.0, z);
        CHECK(i1.real() == 0.0);
        CHECK(i1.imag() == doctest::Approx(-bessel_j(1.0, z)).epsilon(1e-15));
    }
    const Complex v = bessel_i_rotated(0.25, 2.0);
    CHECK(v.real() == doctest::Approx(oracle::kRotatedI_0p25_2p0_re).epsilon(1e-13));
    CHECK(v.imag() == doctest::Approx(oracle::kRotatedI_0p25_2p0_im).epsilon(1e-13));
    CHECK_THROWS_AS(bessel_i_rotated(0.25, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_i_rotated(0.25, -2.0), DomainError);
}

TEST_CASE("fresnel_upper endpoints and table") {
    CHECK(fresnel_upper(-INFINITY) == Complex(1.0, 0.0));
    CHECK(fresnel_upper(INFINITY) == Complex(0.0, 0.0));
    CHECK(std::abs(fresnel_upper(0.0) - Complex(0.5, 0.0)) < 1e-16);
    for (const auto& ref : oracle::kFresnelTable) {
        CAPTURE(ref.a);
        CHECK(std::abs(fresnel_upper(ref.a) - Complex(ref.re, ref.im)) < 1e-14);
    }
    const FresnelCS cs = fresnel_cs(1.0);
    CHECK(cs.c == doctest::Approx(0.7798934003768228).epsilon(1e-14));
    CHECK(cs.s == doctest::Approx(0.4382591473903548).epsilon(1e-14));
}

TEST_CASE("fresnel_upper reflection and decay") {
    for (double a = -6.0; a <= 6.0; a += 0.173) {
        CHECK(std::abs(fresnel_upper(-a) - (1.0 - fresnel_upper(a))) < 1e-15);
    }
    double previous = std::abs(fresnel_upper(2.0));
    for (double a = 2.01; a <= 40.0; a += 0.01) {
        const double current = std::abs(fresnel_upper(a));
        CHECK(current < previous);
        previous = current;
    }
    // continuity across the series / continued-fraction switch (t = 1.6)
    const double a_switch = 1.6 * std::sqrt(pi / 2.0);
    const double below = std::nextafter(a_switch, 0.0);
    const double above = std::nextafter(a_switch, 10.0);
    CHECK(std::abs(fresnel_upper(below) - fresnel_upper(above)) < 1e-14);
}

TEST_CASE("bessel_i_asymptotic truncations") {
    const double z = 50.0;
    const auto zeroth = bessel_i_asymptotic(0.0, z, 0);
    const Complex x(0.0, -z);
    const Complex expected = (std::exp(Complex(0.0, -z)) +
                              std::exp(Complex(0.0, z - pi / 2))) /
                             std::sqrt(2.0 * pi * x);
    CHECK(std::abs(zeroth.value - expected) < 1e-15);
    CHECK(std::abs(zeroth.first + zeroth.second - zeroth.value) < 1e-16);

    const auto four = bessel_i_asymptotic(0.25, 100.0, 4);
    const Complex exact = bessel_i_rotated(0.25, 100.0);
    CHECK(std::abs(four.value - exact) / std::abs(exact) < 1e-6);

    // nu = 0 removes the Gaussian factor from the limit form
    CHECK(std::abs(bessel_i_limit_form(0.0, z) - zeroth.value) < 1e-15);
    CHECK_THROWS_AS(bessel_i_asymptotic(0.25, 0.0, 2), DomainError);
    CHECK_THROWS_AS(bessel_i_asymptotic(0.25, 3.0, -1), DomainError);
}

TEST_CASE("asymptotic expansion within ten first-omitted terms at optimal truncation") {
    for (double z : {20.0, 35.0, 80.0, 300.0}) {
        for (double nu = 0.0; nu <= std::sqrt(z); nu += 0.61) {
            const int k = optimal_truncation(nu, z);
            const auto series = bessel_i_asymptotic(nu, z, k);
            const Complex exact = bessel_i_rotated(nu, z);
            CAPTURE(z);
            CAPTURE(nu);
            CHECK(std::abs(series.value - exact) <=
                  10.0 * series.first_omitted_term * std::sqrt(2.0 / (pi * z)) + 1e-15);
            CHECK_FALSE(series.past_minimal_term);
        }
    }
}

TEST_CASE("summing past the minimal term is flagged") {
    const auto over = bessel_i_asymptotic(0.3, 2.0, 30);
    CHECK(over.past_minimal_term);
}

TEST_CASE("expansion term polynomials reproduce the tableau columns") {
    const auto k1 = expansion_term_polynomial(1);
    CHECK(k1 == std::vector<double>{-0.25, 1.0});
    const auto k2 = expansion_term_polynomial(2);
    CHECK(k2[0] == doctest::Approx(9.0 / 16.0));
    CHECK(k2[1] == doctest::Approx(-5.0 / 2.0));
    CHECK(k2[2] == 1.0);
    const auto k3 = expansion_term_polynomial(3);
    CHECK(k3[0] == doctest::Approx(-225.0 / 64.0));
    CHECK(k3[1] == doctest::Approx(259.0 / 16.0));
    CHECK(k3[2] == doctest::Approx(-35.0 / 4.0));
    CHECK(k3[3] == 1.0);
}

TEST_CASE("sinpi and cospi reduce exactly") {
    CHECK(sinpi(1e6) == 0.0);
    CHECK(cospi(1e6 + 0.5) == 0.0);
    CHECK(sinpi(-3.5) == 1.0);
    CHECK(cospi(3.0) == -1.0);
    CHECK(sinpi(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}
