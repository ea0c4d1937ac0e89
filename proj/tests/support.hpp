#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "zetakit/numerics.hpp"

namespace zt {

using zk::cplx;

using zk::pi;
using zk::euler_gamma;

inline bool near_abs(cplx got, cplx want, double tol) { return std::abs(got - want) <= tol; }
inline bool near_rel(cplx got, cplx want, double tol) { return std::abs(got - want) <= tol * std::abs(want); }

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240917);
    return g;
}
inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

// Reference values, 40-digit mpmath (tests/oracles/gen_oracles.py).
namespace oracle {
inline constexpr double gamma_2_3 = 1.3541179394264004169;
inline constexpr double psi2_1 = -2.4041138063191885708;
inline const cplx gamma_a{0.053019426201761701519, -0.059829016981994704816};  // Gamma(0.3+2.1i)
inline const cplx gamma_b{-0.42601364816873742892, 0.036482419059879668823};   // Gamma(-2.7+0.4i)
inline const cplx trigamma_c{0.39838135667474235521, 0.19304498919054687237};  // psi'(2.5-i)
inline const cplx digamma_d{2.6923275850058860302, 2.2447232305190949383};     // psi(-3.3+0.2i)
inline constexpr double psi3_07 = 25.879149678427731566;                     // psi'''(0.7)

inline constexpr double tail2_101 = 0.0099501666633335713952;  // zeta(2) - sum_{n<=100} n^-2
inline constexpr double tail4_50 = 2.7477331201136755141e-6;   // zeta(4) - sum_{n<=49} n^-4

inline constexpr double airy_zeta[6] = {0,
                                        -0.72901113294722698142,
                                        0.53145723196099945287,
                                        0.11256176121511457943,
                                        0.039443078421238584544,
                                        0.015533659376623159601};
inline constexpr double airy_prime_zeta2 = 1.3717211641984483473;
inline constexpr double airy_zeta_prime0 = -0.22995365589171536688;
inline constexpr double airy_zero1 = 2.3381074104597670385;
inline constexpr double airy_zero2 = 4.0879494441309706166;
inline constexpr double airy_zero5 = 7.9441335871208531231;
inline constexpr double airy_zeta8 = 0.0011339649814066757179;
inline constexpr double airy_zeta_half = -0.39079556704245316146;
inline constexpr double airy_zeta_mhalf = -0.13941929787916211054;
inline constexpr double airy_zeta_2_5 = 0.21457062477632235418;
inline constexpr double airy_zeta_1_25 = -1.3715603965218228494;
inline const cplx airy_zeta_c{-0.27020036562422126882, -0.39734304456368512553};  // s = 1.2+0.7i
inline constexpr double airy_res_1_501 = 0.31820769131481772879;                // (s-3/2) zeta at 1.501
inline const cplx airy_p[9] = {0.0,
                               {0.0, 5.0 / 48.0},
                               -5.0 / 64.0,
                               {0.0, -0.11990017361111111111},
                               565.0 / 2048.0,
                               {0.0, 0.84253946940104166667},
                               -3.2023111979166666667,
                               {0.0, -14.555244502567109608},
                               76.988148689270019531};

inline constexpr double riemann_half = -1.4603545088095868129;
inline constexpr double riemann_mhalf = -0.20788622497735456602;
inline constexpr double riemann_2_5 = 1.3414872572509171798;

struct HurwitzPrime {
    double a;
    cplx value;
};
inline const HurwitzPrime hurwitz_prime0[5] = {{0.25, 0.36908399149340471559},
                                               {0.5, -0.34657359027997265471},
                                               {2.0, -0.91893853320467274178},
                                               {-2.5, {-0.97518224970234679245, 9.4247779607693797154}},
                                               {-0.3, {0.54590151765292978869, 3.14159265358979323846}}};

struct PcfRow {
    double a;
    double zeta[6];
};
inline const PcfRow pcf[3] = {
    {0.0,
     {0, 0.47798879748612499536, -0.27152670947776818731, 0.1092076733944196632, -0.031133288851277192286,
      0.0050348365954450411874}},
    {1.0,
     {0, 1.046049620053101649, -0.40578019238676168058, 0.098558593955304278145, -0.01164275611116547881,
      -0.0014463644226777670901}},
    {2.5,
     {0, 1.5957691216057307118, -0.4535209105296746277, 0.074169895777095286889, -0.0037078784581338685988,
      -0.001234784364164387403}}};

struct ChfRow {
    double a, b;
    double zeta[6];    // zeta_M(2..5)
    double minus_jf[5];  // -j f_j, j = 1..4
};
inline const ChfRow chf[2] = {
    {0.5, 1.5, {0, 0, -0.088888888888888888889, -0.0084656084656084656085, 0.0011287477954144620811,
                0.00034204478648923093368},
     {0, -0.5, -1.25, -4.625, -22.0625}},
    {1.2, 2.7, {0, 0, -0.066733400066733395491, -0.0015776217509866063321, 0.00075053603136868666578,
                0.000043873584970065355478},
     {0, 0.3, 0.69, 2.187, 8.9901}}};
}  // namespace oracle

}  // namespace zt
