#pragma once

namespace galorb {

/// Smoothing kernel U(x) of the first approximate functional equation:
/// the Mellin contour integral of Gamma((s+iota)/2 + 1/4) (sqrt(pi) x)^{-s}/s,
/// normalized by Gamma(iota/2 + 1/4). Evaluated through the identity
/// U(x) = Q(iota/2 + 1/4, pi x^2) with Q the regularized upper incomplete
/// gamma function (the identity is pinned against kernel_U_quadrature in
/// the test suite). U(0+) = 1 and U decays faster than any power.
double kernel_U(double x, int iota);

/// U(x) by direct numerical contour integration on Re(s) = 2; the slow
/// cross-check path for the incomplete-gamma identity.
double kernel_U_quadrature(double x, int iota);

/// Smoothing kernel V(x) of the second approximate functional equation:
/// same contour integral with the Gamma factor squared. Evaluated by
/// quadrature on Re(s) = 2 for x >= 1/2 and, for x < 1/2, on Re(s) = -1/4
/// after extracting the residue 1 at s = 0 (better conditioning near 0).
double kernel_V(double x, int iota);

}  // namespace galorb
