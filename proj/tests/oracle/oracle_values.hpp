// Generated by tests/oracle/generate_oracles.py (mpmath, 40 digits). Do not edit.
#pragma once

namespace abprop::oracle {

// Bessel reference table: {nu, x, J_nu(x), Y_nu(x)}
struct BesselRef { double nu, x, j, y; };
inline constexpr BesselRef kBesselTable[] = {
    {0.25, 3.7, -0.33062710910098983433, 0.24834477592155001699},
    {0.25, 2.0, 0.39781106433817834873, 0.39273839961538505532},
    {0.3, 2.0, 0.4256940619814137223, 0.36348280782609224042},
    {0.7, 5.0, -0.35763991666007156279, 0.0010614491552285156203},
    {0.5, 0.1, 0.25189294032600095267, -2.5105273689585092433},
    {2.5, 1.5, 0.124446359798387602, -1.3150372048051936778},
    {10.3, 0.5, 8.4794575814193436927e-14, -364890072527.89707498},
    {30.7, 20.0, 0.000061337868918410456567, -223.10672275548036459},
    {100.25, 50.0, 8.0126270418681046811e-22, -4572075587642989588.6},
    {100.25, 150.0, 0.00037895370183806628068, 0.07553061141813071398},
    {0.1, 1000.0, 0.025219249181648209649, 0.00078049131146548246655},
    {0.0, 1.0, 0.76519768655796655145, 0.088256964215676957983},
    {1.0, 7.0, -0.0046828234823458326991, -0.30266723702418487006},
    {3.0, 2.0, 0.1289432494744020511, -1.1277837768404277861},
    {0.75, 30.0, -0.14176169104122454354, 0.03358513094223686717},
    {1000.6, 1000.0, 0.042265372196025995238, -0.081744789762383318685},
    {5000.5, 4990.0, 0.012878329718815205749, -0.075463156504459132547},
    {0.75, 94247.7796076938, -0.00099458617955964326403, -0.0024011547029926297151},
};
// Fresnel upper integral reference table: {a, Re F(a), Im F(a)}
struct FresnelRef { double a, re, im; };
inline constexpr FresnelRef kFresnelTable[] = {
    {-3.0, 1.0890087890440722387, 0.028204807980117373786},
    {-1.2, 1.0864692253881510335, -0.19062609738729939677},
    {-0.3, 0.62317418120259395796, -0.11599737378363199075},
    {0.0, 0.5, 0.0},
    {0.7, 0.18253520781789690073, 0.22779259393973572774},
    {1.1, -0.038125097718135197506, 0.21946938053059938136},
    {1.2, -0.086469225388151033483, 0.19062609738729939677},
    {1.3, -0.12655554568149434702, 0.15113382104093524964},
    {2.0, -0.0051558560127447458212, -0.13696287973176994951},
    {2.5, 0.086765379866753695072, 0.069731159229451595443},
    {4.0, -0.035218638409172595269, -0.060907921088844602096},
    {10.0, 0.027334748141911496331, 0.0069632522143278075574},
    {100.0, -0.0012897880981223493666, -0.0025088231737340257672},
};
inline constexpr double kRotatedI_0p25_2p0_re = 0.36752950014857363119;
inline constexpr double kRotatedI_0p25_2p0_im = -0.15223570353374364979;
inline constexpr double kSeries_z2_phi0p3_a0p25_re = -0.24227828803498760749;
inline constexpr double kSeries_z2_phi0p3_a0p25_im = -1.0257752627495684973;
inline constexpr double kSeries_z1_phi0p3_a0p25_re = 0.48944288626039167417;
inline constexpr double kSeries_z1_phi0p3_a0p25_im = -1.1194747156816234826;
inline constexpr double kWavefunction_kr5_phi1_a0p25_re = -1.0518605255934774872;
inline constexpr double kWavefunction_kr5_phi1_a0p25_im = -0.066766834294086889295;
inline constexpr double kSeries_zpi_phi0p7_a1p5_re = -0.73047754668520583360;
inline constexpr double kSeries_zpi_phi0p7_a1p5_im = 0.22580707880487439763;
inline constexpr double kSeries_z3pi_phi0p3_a0p25_re = -0.86495686701619219424;
inline constexpr double kSeries_z3pi_phi0p3_a0p25_im = -0.28588270234642543431;
inline constexpr double kSeries_z8pi_phi0p5_a0p25_re = -1.0321676312315265780;
inline constexpr double kSeries_z8pi_phi0p5_a0p25_im = 0.15964757843911801827;
// {z, |S/S_free|^2} at phi_f = 0, alpha = 0.25
struct ForwardAxisRef { double z, abs2; };
inline constexpr ForwardAxisRef kForwardAxisAbs2[] = {
    {3.1415926535897932385, 0.42356433375043791735},
    {9.4247779607693797154, 0.45545346342540691649},
    {31.415926535897932385, 0.4753458188145151278},
    {314.15926535897932385, 0.49210162808960756507},
};
inline constexpr double kHalfFluxBackwardAbs2_z1e4 = 0.99871122816672229964;
inline constexpr double kReciprocalGammaTaylor[] = {
    1.0,
    0.5772156649015328606065,
    -0.655878071520253881077,
    -0.042002635034095235529,
    0.1665386113822914895017,
    -0.04219773455554433674821,
    -0.009621971527876973562115,
    0.007218943246663099542395,
    -0.001165167591859065112114,
    -0.0002152416741149509728157,
    0.0001280502823881161861532,
    -0.00002013485478078823865569,
    -0.000001250493482142670657345,
    0.000001133027231981695882374,
    -2.05633841697760710345e-7,
    6.116095104481415817862e-9,
    5.002007644469222930056e-9,
    -1.181274570487020144588e-9,
    1.043426711691100510492e-10,
    7.78226343990507125405e-12,
    -3.696805618642205708188e-12,
    5.100370287454475979015e-13,
    -2.058326053566506783222e-14,
    -5.34812253942301798237e-15,
    1.226778628238260790159e-15,
    -1.181259301697458769514e-16,
    1.18669225475160033258e-18,
    1.412380655318031781556e-18,
};

}  // namespace abprop::oracle
