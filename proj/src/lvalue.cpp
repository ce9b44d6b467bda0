#include "galorb/lvalue.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "galorb/kernels.hpp"
#include "galorb/special.hpp"

namespace galorb {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

}  // namespace

LValueEngine::LValueEngine(std::shared_ptr<const UnitGroup> group) : group_(std::move(group)) {
    if (!group_) throw std::invalid_argument("LValueEngine: null group");
    const std::int64_t phi = group_->phi();
    const std::int64_t q = group_->q();
    ephi_.resize(static_cast<std::size_t>(phi));
    for (std::int64_t j = 0; j < phi; ++j) {
        double ph = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(phi);
        ephi_[static_cast<std::size_t>(j)] = {std::cos(ph), std::sin(ph)};
    }
    eq_.resize(static_cast<std::size_t>(q));
    for (std::int64_t a = 0; a < q; ++a) {
        double ph = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(q);
        eq_[static_cast<std::size_t>(a)] = {std::cos(ph), std::sin(ph)};
    }
}

std::shared_ptr<const LValueEngine::UWeights> LValueEngine::u_weights(int iota,
                                                                      const AfeConfig& cfg) const {
    auto key = std::make_pair(iota, static_cast<long long>(std::llround(cfg.lambda * 1e9)));
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = uw_cache_.find(key);
        if (it != uw_cache_.end()) return it->second;
    }
    const double q = static_cast<double>(group_->q());
    const std::int64_t p = group_->p();
    // Cut each sum where the Gaussian decay of U pushes the remaining tail
    // below tolerance: n/X > sqrt(log(1/tol)/pi) + margin.
    const double cut = std::sqrt(std::log(2.0 / cfg.tolerance) / std::numbers::pi) + 1.0;
    const double X1 = std::pow(q, 1.0 + cfg.lambda);   // primary length scale
    const double X2 = std::pow(q, -cfg.lambda);        // dual length scale
    auto uw = std::make_shared<UWeights>();
    auto fill = [&](std::vector<double>& w, double X) {
        auto N = static_cast<std::int64_t>(std::ceil(cut * X)) + 4;
        w.assign(static_cast<std::size_t>(N) + 1, 0.0);
        for (std::int64_t n = 1; n <= N; ++n) {
            if (n % p == 0) continue;
            w[static_cast<std::size_t>(n)] =
                kernel_U(static_cast<double>(n) / X, iota) / std::sqrt(static_cast<double>(n));
        }
        // heuristic tail proxy: first dropped kernel value times a slowly
        // divergent partial-sum factor
        return kernel_U(static_cast<double>(N + 1) / X, iota) * 2.0 *
               std::sqrt(static_cast<double>(N + 1));
    };
    double t1 = fill(uw->primary, X1);
    double t2 = fill(uw->dual, X2);
    uw->tail_bound = t1 + t2 + cfg.tolerance;
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = uw_cache_.emplace(key, uw);
    return it->second;
}

const std::vector<double>& LValueEngine::v_table(int iota, const AfeConfig& cfg) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto& tab = v_cache_[iota];
    auto need = static_cast<std::size_t>(cfg.sq_cutoff * static_cast<double>(group_->q())) + 1;
    if (tab.size() < need + 1) {
        const double q = static_cast<double>(group_->q());
        tab.resize(need + 1);
        tab[0] = 0.0;
        for (std::size_t m = 1; m <= need; ++m)
            tab[m] = kernel_V(static_cast<double>(m) / q, iota);
    }
    return tab;
}

const std::vector<double>& LValueEngine::hurwitz_table() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (hz_cache_.empty()) {
        const std::int64_t q = group_->q();
        hz_cache_.resize(static_cast<std::size_t>(q) + 1, 0.0);
        for (std::int64_t a = 1; a <= q; ++a)
            hz_cache_[static_cast<std::size_t>(a)] =
                hurwitz_zeta_half(static_cast<double>(a) / static_cast<double>(q));
    }
    return hz_cache_;
}

std::complex<double> LValueEngine::gauss_sum(const DirichletCharacter& chi) const {
    const auto& g = *group_;
    const std::int64_t q = g.q(), phi = g.phi(), gamma = chi.gamma();
    std::complex<double> tau = 0.0;
    for (std::int64_t a = 1; a < q; ++a) {
        if (a % g.p() == 0) continue;
        tau += ephi_[static_cast<std::size_t>(mulmod(gamma, g.ind(a), phi))] *
               eq_[static_cast<std::size_t>(a)];
    }
    return tau;
}

std::complex<double> LValueEngine::root_number(const DirichletCharacter& chi) const {
    std::complex<double> denom =
        chi.parity() == 0 ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, 1.0);
    return gauss_sum(chi) / (denom * std::sqrt(static_cast<double>(group_->q())));
}

CentralValue LValueEngine::central_value_afe(const DirichletCharacter& chi,
                                             const AfeConfig& cfg) const {
    if (!chi.is_primitive())
        throw std::domain_error("central_value_afe: character must be primitive");
    const auto& g = *group_;
    const std::int64_t q = g.q(), phi = g.phi(), gamma = chi.gamma();
    const int iota = chi.parity();
    auto uw = u_weights(iota, cfg);
    std::complex<double> s1 = 0.0;
    for (std::size_t n = 1; n < uw->primary.size(); ++n) {
        double w = uw->primary[n];
        if (w == 0.0) continue;
        std::int64_t ind = g.ind(static_cast<std::int64_t>(n % static_cast<std::size_t>(q)));
        s1 += ephi_[static_cast<std::size_t>(mulmod(gamma, ind, phi))] * w;
    }
    std::complex<double> eps = root_number(chi);
    std::complex<double> s2 = 0.0;
    for (std::size_t n = 1; n < uw->dual.size(); ++n) {
        double w = uw->dual[n];
        if (w == 0.0) continue;
        std::int64_t ind = g.ind(static_cast<std::int64_t>(n % static_cast<std::size_t>(q)));
        s2 += std::conj(ephi_[static_cast<std::size_t>(mulmod(gamma, ind, phi))]) * w;
    }
    CentralValue out;
    out.value = s1 + eps * s2;
    out.abs_error_bound =
        uw->tail_bound + 1e-13 * std::sqrt(static_cast<double>(uw->primary.size()));
    out.method = "afe";
    return out;
}

CentralValue LValueEngine::central_value_sq_afe(const DirichletCharacter& chi,
                                                const AfeConfig& cfg) const {
    if (!chi.is_primitive())
        throw std::domain_error("central_value_sq_afe: character must be primitive");
    const auto& g = *group_;
    const std::int64_t phi = g.phi(), p = g.p(), gamma = chi.gamma();
    const int iota = chi.parity();
    const auto& vt = v_table(iota, cfg);
    const auto ncut = static_cast<std::int64_t>(vt.size()) - 1;
    std::complex<double> acc = 0.0;
    for (std::int64_t n1 = 1; n1 <= ncut; ++n1) {
        if (n1 % p == 0) continue;
        std::int64_t i1 = g.ind(n1);
        double r1 = std::sqrt(static_cast<double>(n1));
        for (std::int64_t n2 = 1; n1 * n2 <= ncut; ++n2) {
            if (n2 % p == 0) continue;
            std::int64_t delta = i1 - g.ind(n2);
            delta %= phi;
            if (delta < 0) delta += phi;
            acc += ephi_[static_cast<std::size_t>(mulmod(gamma, delta, phi))] *
                   (vt[static_cast<std::size_t>(n1 * n2)] /
                    (r1 * std::sqrt(static_cast<double>(n2))));
        }
    }
    CentralValue out;
    out.value = 2.0 * acc;
    out.abs_error_bound = 1e-6 + std::abs(out.value.imag());
    out.method = "afe-squared";
    return out;
}

CentralValue LValueEngine::central_value_hurwitz(const DirichletCharacter& chi,
                                                 const AfeConfig& cfg) const {
    if (!chi.is_primitive())
        throw std::domain_error("central_value_hurwitz: character must be primitive");
    const auto& g = *group_;
    if (g.q() > cfg.oracle_bound)
        throw std::domain_error("central_value_hurwitz: q exceeds the oracle bound");
    const auto& hz = hurwitz_table();
    const std::int64_t q = g.q(), phi = g.phi(), gamma = chi.gamma();
    std::complex<double> acc = 0.0;
    for (std::int64_t a = 1; a <= q; ++a) {
        if (a % g.p() == 0) continue;
        acc += ephi_[static_cast<std::size_t>(mulmod(gamma, g.ind(a), phi))] *
               hz[static_cast<std::size_t>(a)];
    }
    CentralValue out;
    out.value = acc / std::sqrt(static_cast<double>(q));
    out.abs_error_bound = 1e-11 * std::sqrt(static_cast<double>(q));
    out.method = "hurwitz";
    return out;
}

std::vector<CentralValue> LValueEngine::sweep_afe(const std::vector<std::int64_t>& gammas,
                                                  const AfeConfig& cfg, int workers) const {
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    // warm the parity-keyed weight caches before fanning out
    for (std::int64_t gm : gammas) {
        DirichletCharacter chi(group_, gm);
        u_weights(chi.parity(), cfg);
    }
    std::vector<CentralValue> out(gammas.size());
    std::vector<std::thread> pool;
    std::size_t chunk = (gammas.size() + static_cast<std::size_t>(workers) - 1) /
                        static_cast<std::size_t>(workers);
    if (chunk == 0) chunk = 1;
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = static_cast<std::size_t>(w) * chunk;
        if (lo >= gammas.size()) break;
        std::size_t hi = std::min(lo + chunk, gammas.size());
        pool.emplace_back([this, &gammas, &cfg, &out, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i)
                out[i] = central_value_afe(DirichletCharacter(group_, gammas[i]), cfg);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace galorb
