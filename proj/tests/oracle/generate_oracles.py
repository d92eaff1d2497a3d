#!/usr/bin/env python3
"""Extended-precision reference values for the test suites.

Run from the repository root:  python3 tests/oracle/generate_oracles.py
Writes tests/oracle/oracle_values.hpp. Requires mpmath.
"""
import mpmath as mp

mp.mp.dps = 40
out = []


def emit(name, value):
    out.append(f"inline constexpr double {name} = {mp.nstr(value, 20, strip_zeros=False)};")


def emit_complex(name, value):
    emit(name + "_re", mp.re(value))
    emit(name + "_im", mp.im(value))


def fresnel_upper(a):
    # (1/sqrt(i*pi)) * int_a^inf exp(i x^2) dx = erfc(exp(-i pi/4) a) / 2
    return mp.erfc(mp.exp(-1j * mp.pi / 4) * a) / 2


def rotated_i(nu, z):
    return mp.exp(-1j * mp.pi * nu / 2) * mp.besselj(nu, z)


def series_kernel(z, phi, alpha, L=200):
    L = max(L, int(z + 12 * mp.cbrt(z) + 60))
    s = mp.mpc(0)
    for l in range(-L, L + 1):
        nu = abs(l + alpha)
        s += rotated_i(nu, z) * mp.exp(1j * l * phi)
    return s


def wavefunction(kr, phi, alpha, L=200):
    s = mp.mpc(0)
    for l in range(-L, L + 1):
        nu = abs(l + alpha)
        s += mp.power(-1j, nu) * mp.besselj(nu, kr) * mp.exp(1j * l * phi)
    return s


# Bessel J, Y on a grid covering the series, gap and large-argument regimes.
bessel_grid = [
    (0.25, 3.7), (0.25, 2.0), (0.3, 2.0), (0.7, 5.0), (0.5, 0.1), (2.5, 1.5),
    (10.3, 0.5), (30.7, 20.0), (100.25, 50.0), (100.25, 150.0), (0.1, 1000.0),
    (0.0, 1.0), (1.0, 7.0), (3.0, 2.0), (0.75, 30.0), (1000.6, 1000.0),
    (5000.5, 4990.0), (0.75, 94247.77960769379715),
]
out.append("// Bessel reference table: {nu, x, J_nu(x), Y_nu(x)}")
out.append("struct BesselRef { double nu, x, j, y; };")
out.append("inline constexpr BesselRef kBesselTable[] = {")
for nu, x in bessel_grid:
    j = mp.besselj(nu, x)
    y = mp.bessely(nu, x)
    out.append(f"    {{{nu!r}, {x!r}, {mp.nstr(j, 20)}, {mp.nstr(y, 20)}}},")
out.append("};")

out.append("// Fresnel upper integral reference table: {a, Re F(a), Im F(a)}")
out.append("struct FresnelRef { double a, re, im; };")
out.append("inline constexpr FresnelRef kFresnelTable[] = {")
for a in [-3.0, -1.2, -0.3, 0.0, 0.7, 1.1, 1.2, 1.3, 2.0, 2.5, 4.0, 10.0, 100.0]:
    f = fresnel_upper(a)
    out.append(f"    {{{a!r}, {mp.nstr(mp.re(f), 20)}, {mp.nstr(mp.im(f), 20)}}},")
out.append("};")

emit_complex("kRotatedI_0p25_2p0", rotated_i(mp.mpf("0.25"), 2))
emit_complex("kSeries_z2_phi0p3_a0p25", series_kernel(2, mp.mpf("0.3"), mp.mpf("0.25")))
emit_complex("kSeries_z1_phi0p3_a0p25", series_kernel(1, mp.mpf("0.3"), mp.mpf("0.25")))
emit_complex("kWavefunction_kr5_phi1_a0p25", wavefunction(5, 1, mp.mpf("0.25")))
emit_complex("kSeries_zpi_phi0p7_a1p5", series_kernel(mp.pi, mp.mpf("0.7"), mp.mpf("1.5")))
emit_complex("kSeries_z3pi_phi0p3_a0p25", series_kernel(3 * mp.pi, mp.mpf("0.3"), mp.mpf("0.25")))
emit_complex("kSeries_z8pi_phi0p5_a0p25", series_kernel(8 * mp.pi, mp.mpf("0.5"), mp.mpf("0.25")))

# Exact |S/S_free|^2 on the forward axis (phi_b = pi) at alpha = 0.25.
out.append("// {z, |S/S_free|^2} at phi_f = 0, alpha = 0.25")
out.append("struct ForwardAxisRef { double z, abs2; };")
out.append("inline constexpr ForwardAxisRef kForwardAxisAbs2[] = {")
for factor in [1, 3, 10, 100]:
    zf = factor * mp.pi
    v = series_kernel(zf, mp.pi, mp.mpf("0.25"))
    out.append(f"    {{{mp.nstr(zf, 20)}, {mp.nstr(abs(v) ** 2, 20)}}},")
out.append("};")

# Half-flux closed form at z = 1e4, phi_b = 0: |S/S_free|^2 = |F(-sqrt(2z))|^2 (second term
# carries 1 - F and a phase; evaluate the whole bracket).
z = mp.mpf(10) ** 4
f = fresnel_upper(-mp.sqrt(2 * z))
bracket = f + mp.exp(-1j * mp.mpf("0.5") * (-2 * mp.pi)) * (1 - f)
emit("kHalfFluxBackwardAbs2_z1e4", abs(bracket) ** 2)

# Taylor coefficients of 1/Gamma(1+mu) about mu = 0.
coeffs = mp.taylor(lambda t: mp.rgamma(1 + t), 0, 27)
out.append("inline constexpr double kReciprocalGammaTaylor[] = {")
for c in coeffs:
    out.append(f"    {mp.nstr(c, 22)},")
out.append("};")

header = [
    "// Generated by tests/oracle/generate_oracles.py (mpmath, 40 digits). Do not edit.",
    "#pragma once",
    "",
    "namespace abprop::oracle {",
    "",
]
with open("tests/oracle/oracle_values.hpp", "w") as fh:
    fh.write("\n".join(header + out + ["", "}  // namespace abprop::oracle", ""]))
print("wrote", len(out), "lines")
