#include "galorb/kernels.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "galorb/special.hpp"

namespace galorb {

namespace {

constexpr int kNodesPerPanel = 20;
constexpr double kPanelLength = 2.0;

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
struct GaussRule {
    std::array<double, kNodesPerPanel> x{};
    std::array<double, kNodesPerPanel> w{};
    GaussRule() {
        const int n = kNodesPerPanel;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (z * p0 - p1) / (z * z - 1.0);
                double z1 = z;
                z = z1 - p0 / pp;
                if (std::abs(z - z1) < 1e-16) break;
            }
            x[static_cast<std::size_t>(i)] = -z;
            x[static_cast<std::size_t>(n - 1 - i)] = z;
            w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
            w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
        }
    }
};

// Quadrature data for one contour Re(s) = sigma and one parity: the
// x-independent Gamma-quotient factor at each node of [0, T], so each
// kernel evaluation costs one complex exp and divide per node.
struct ContourTable {
    double sigma = 0.0;
    std::vector<double> t;                     // node ordinates
    std::vector<double> w;                     // node weights
    std::vector<std::complex<double>> gpart;   // Gamma factor at sigma + i t

    ContourTable(double sigma_, double height, int iota, int gamma_power) : sigma(sigma_) {
        static const GaussRule rule;
        const double lg0 = std::lgamma(iota / 2.0 + 0.25);
        // graded panels near t = 0, where the 1/s factor varies on the
        // scale |sigma|, then uniform panels out to the truncation height
        std::vector<double> cuts{0.0, 0.125, 0.25, 0.5, 1.0, 2.0};
        while (cuts.back() < height) cuts.push_back(cuts.back() + kPanelLength);
        for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
            double a = cuts[p], b = cuts[p + 1];
            for (int i = 0; i < kNodesPerPanel; ++i) {
                double ti = 0.5 * (a + b) + 0.5 * (b - a) * rule.x[static_cast<std::size_t>(i)];
                std::complex<double> s(sigma, ti);
                std::complex<double> lg = lgamma_complex(0.5 * (s + static_cast<double>(iota)) + 0.25);
                t.push_back(ti);
                w.push_back(0.5 * (b - a) * rule.w[static_cast<std::size_t>(i)]);
                gpart.push_back(std::exp(static_cast<double>(gamma_power) * (lg - lg0)));
            }
        }
    }

    // (1/pi) Int_0^T Re[ gpart(t) * base^{-s} / s ] dt, using f(-t) = conj(f(t)).
    double integrate(double base) const {
        const double lb = std::log(base);
        double acc = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::complex<double> s(sigma, t[i]);
            std::complex<double> f = gpart[i] * std::exp(-s * lb) / s;
            acc += w[i] * f.real();
        }
        return acc / std::numbers::pi;
    }
};

// Gamma decays like exp(-pi|t|/4) on vertical lines (exp(-pi|t|/2) when
// squared); the heights below put the truncated tail far under 1e-12.
const ContourTable& u_table(int iota) {
    static const ContourTable t0(2.0, 64.0, 0, 1), t1(2.0, 64.0, 1, 1);
    return iota == 0 ? t0 : t1;
}

const ContourTable& v_table_right(int iota) {
    static const ContourTable t0(2.0, 40.0, 0, 2), t1(2.0, 40.0, 1, 2);
    return iota == 0 ? t0 : t1;
}

const ContourTable& v_table_left(int iota) {
    static const ContourTable t0(-0.25, 40.0, 0, 2), t1(-0.25, 40.0, 1, 2);
    return iota == 0 ? t0 : t1;
}

void check_args(double x, int iota, const char* name) {
    if (!(x > 0.0)) throw std::domain_error(std::string(name) + ": need x > 0");
    if (iota != 0 && iota != 1) throw std::domain_error(std::string(name) + ": iota must be 0 or 1");
}

}  // namespace

double kernel_U(double x, int iota) {
    check_args(x, iota, "kernel_U");
    double arg = std::numbers::pi * x * x;
    if (arg > 700.0) return 0.0;  // Q underflows; tail < 1e-300
    return gamma_q(iota / 2.0 + 0.25, arg);
}

double kernel_U_quadrature(double x, int iota) {
    check_args(x, iota, "kernel_U_quadrature");
    return u_table(iota).integrate(std::sqrt(std::numbers::pi) * x);
}

double kernel_V(double x, int iota) {
    check_args(x, iota, "kernel_V");
    const double base = std::numbers::pi * x;
    if (x >= 0.5) {
        if (std::log(base) * 2.0 > 700.0) return 0.0;
        return v_table_right(iota).integrate(base);
    }
    // Shift left past s = 0: V = 1 (residue) + integral on Re(s) = -1/4.
    return 1.0 + v_table_left(iota).integrate(base);
}

}  // namespace galorb
