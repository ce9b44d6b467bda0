#include "galorb/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace galorb {

namespace {

// Q(a,x) by its power series around x = 0 (good for x < a + 1).
double gamma_q_series(double a, double x) {
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 1; n < 1000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-17) break;
    }
    // P(a,x) = x^a e^{-x} sum / Gamma(a)
    double p = std::exp(a * std::log(x) - x - std::lgamma(a)) * sum;
    return 1.0 - p;
}

// Q(a,x) by the Lentz continued fraction (good for x >= a + 1).
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(a * std::log(x) - x - std::lgamma(a)) * h;
}

// Lanczos g = 7, n = 9 coefficients (Godfrey).
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_q: need a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? gamma_q_series(a, x) : gamma_q_cf(a, x);
}

std::complex<double> lgamma_complex(std::complex<double> z) {
    if (z.real() <= 0.0) throw std::domain_error("lgamma_complex: need Re(z) > 0");
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: need x > 0");
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic series psi(x) ~ ln x - 1/(2x) - sum B_{2n}/(2n x^{2n})
    double inv2 = 1.0 / (x * x);
    double series = inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 -
                    inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * 691.0 / 32760)))));
    return result + std::log(x) - 0.5 / x - series;
}

double hurwitz_zeta_half(double a) {
    if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta_half: need a > 0");
    const double s = 0.5;
    int N = 0;
    while (a + N < 18.0) ++N;
    double sum = 0.0;
    for (int n = 0; n < N; ++n) sum += 1.0 / std::sqrt(a + n);
    const double w = a + N;
    sum += std::pow(w, 1.0 - s) / (s - 1.0);  // = -2 sqrt(w)
    sum += 0.5 * std::pow(w, -s);
    // Euler-Maclaurin correction: sum_j B_{2j}/(2j)! (s)_{2j-1} w^{-s-2j+1}
    static const double b2j[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
                                 5.0 / 66, -691.0 / 2730, 7.0 / 6};
    double poch = s;                 // (s)_1
    double wpow = std::pow(w, -s - 1.0);
    double fact = 1.0;               // (2j)!
    for (int j = 1; j <= 7; ++j) {
        fact *= (2 * j - 1) * (2 * j);
        sum += b2j[j - 1] / fact * poch * wpow;
        poch *= (s + 2 * j - 1) * (s + 2 * j);  // -> (s)_{2j+1}
        wpow /= w * w;
    }
    return sum;
}

}  // namespace galorb
