#pragma once

#include <complex>

namespace galorb {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286;

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a),
/// a > 0, x >= 0. Series for x < a + 1, continued fraction otherwise.
double gamma_q(double a, double x);

/// log Gamma(z) for Re(z) > 0 (Lanczos approximation).
std::complex<double> lgamma_complex(std::complex<double> z);

/// Digamma function for real x > 0.
double digamma(double x);

/// Hurwitz zeta at s = 1/2: zeta(1/2, a) for a > 0, Euler-Maclaurin,
/// absolute error well below 1e-13 over the ranges used here.
double hurwitz_zeta_half(double a);

}  // namespace galorb
