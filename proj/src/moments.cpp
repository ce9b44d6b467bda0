#include "galorb/moments.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "galorb/padic.hpp"
#include "galorb/special.hpp"

namespace galorb {

namespace {

std::int64_t pow_i64(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Kahan compensated accumulator; reductions run in fixed index order so
// reports are byte-identical across worker counts.
struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double second_moment_constant(std::int64_t p, int iota) {
    return digamma((1.0 + 2.0 * iota) / 4.0) + 2.0 * kEulerGamma +
           2.0 * std::log(static_cast<double>(p)) / static_cast<double>(p - 1);
}

double predicted_second_main_term(std::int64_t p, std::int64_t q, int iota,
                                  const MollifierSpec& mollifier) {
    const double C = second_moment_constant(p, iota);
    Kahan total;
    for (const auto& [m1, a1] : mollifier.coefficients) {
        for (const auto& [m2, a2] : mollifier.coefficients) {
            std::int64_t g = std::gcd(m1, m2);
            std::int64_t lcm = m1 / g * m2;
            double logterm = std::log(static_cast<double>(q) * static_cast<double>(g) *
                                      static_cast<double>(g) /
                                      (std::numbers::pi * static_cast<double>(m1) *
                                       static_cast<double>(m2)));
            total.add(a1 * a2 / static_cast<double>(lcm) * (logterm + C));
        }
    }
    return static_cast<double>(p - 1) / static_cast<double>(p) * total.sum;
}

double thin_target_ratio(int kappa, int k) {
    double r = static_cast<double>(kappa) / k;
    return (r - 0.5) / (r + 0.5);
}

MomentReport MomentEngine::reduce(const std::vector<std::int64_t>& gammas,
                                  const MollifierSpec& mollifier, const AfeConfig& cfg,
                                  int workers) const {
    if (gammas.empty()) throw std::invalid_argument("MomentEngine: empty family");
    const auto& g = lvalues_.group();
    auto lvals = lvalues_.sweep_afe(gammas, cfg, workers);
    MomentReport rep;
    rep.p = g.p();
    rep.k = g.k();
    rep.q = g.q();
    rep.iota = DirichletCharacter(lvalues_.group_ptr(), gammas[0]).parity();
    rep.orbit_size = gammas.size();
    rep.theta = mollifier.theta;
    rep.lambda = cfg.lambda;
    Kahan s1re, s1im, s2;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        DirichletCharacter chi(lvalues_.group_ptr(), gammas[i]);
        std::complex<double> lm = lvals[i].value * evaluate_mollifier(mollifier, chi);
        s1re.add(lm.real());
        s1im.add(lm.imag());
        s2.add(std::norm(lm));
        if (std::abs(lvals[i].value) > lvals[i].abs_error_bound)
            ++rep.nonvanishing_count;
        else
            ++rep.undetermined_count;
    }
    const auto n = static_cast<double>(gammas.size());
    rep.empirical_first = {s1re.sum / n, s1im.sum / n};
    rep.empirical_second = s2.sum / n;
    rep.predicted_second = predicted_second_main_term(rep.p, rep.q, rep.iota, mollifier);
    rep.first_error = std::abs(rep.empirical_first - 1.0);
    if (rep.predicted_second != 0.0)
        rep.second_ratio_error = std::abs(rep.empirical_second / rep.predicted_second - 1.0);
    if (rep.empirical_second <= 0.0)
        throw std::domain_error("MomentEngine: degenerate second moment");
    rep.lower_bound = std::norm(rep.empirical_first) / rep.empirical_second;
    rep.nonvanishing_fraction = static_cast<double>(rep.nonvanishing_count) / n;
    return rep;
}

MomentReport MomentEngine::full_moments(const OrbitSpec& orbit, const MollifierSpec& mollifier,
                                        const AfeConfig& cfg, int workers) const {
    if (mollifier.theta >= 0.5)
        throw std::invalid_argument("full_moments: need theta < 1/2");
    MomentReport rep = reduce(orbit.gammas, mollifier, cfg, workers);
    rep.thin = false;
    rep.d = orbit.d;
    rep.target_ratio = mollifier.theta / (1.0 + mollifier.theta);
    return rep;
}

MomentReport MomentEngine::thin_moments(const ThinOrbitSpec& orbit, const MollifierSpec& mollifier,
                                        const AfeConfig& cfg, int workers) const {
    MomentReport rep = reduce(orbit.gammas, mollifier, cfg, workers);
    rep.thin = true;
    rep.kappa = orbit.kappa;
    rep.base_gamma = orbit.base_gamma;
    rep.target_ratio = thin_target_ratio(orbit.kappa, rep.k);
    double ratio = static_cast<double>(orbit.kappa) / rep.k;
    rep.outside_predicted_regime =
        !(ratio > 0.5 && mollifier.theta <= ratio - 0.5 + 1e-12);
    return rep;
}

OffdiagonalCensus offdiagonal_census(std::int64_t p, int k, std::int64_t height) {
    if (k < 2) throw std::invalid_argument("offdiagonal_census: need k >= 2");
    if (height < 1 || height > 10'000'000)
        throw std::invalid_argument("offdiagonal_census: height out of budget");
    const std::int64_t mod = pow_i64(p, k - 1);
    OffdiagonalCensus census;
    census.p = p;
    census.k = k;
    census.height = height;
    std::vector<std::int64_t> roots;
    for (const auto& z : teichmuller_roots(p, k - 1))
        roots.push_back(static_cast<std::int64_t>(z.residue()));
    for (std::int64_t r : roots) census.per_root[r] = 0;
    for (std::int64_t b = 1; b <= height; ++b) {
        if (b % p == 0) continue;
        for (std::int64_t z : roots) {
            // a = b z mod p^{k-1} pins a's residue class
            std::int64_t r = static_cast<std::int64_t>(
                static_cast<__int128>(b) * z % mod);
            std::int64_t a = r == 0 ? mod : r;
            for (; a <= height; a += mod) {
                ++census.per_root[z];
                if (a == b) {
                    ++census.diagonal;
                } else if ((a - b) % mod == 0 || (a + b) % mod == 0) {
                    ++census.class_pm;
                } else {
                    ++census.class_other;
                }
            }
        }
    }
    return census;
}

}  // namespace galorb
