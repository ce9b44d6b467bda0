#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "galorb/characters.hpp"

namespace galorb {

/// Tuning knobs for the approximate-functional-equation evaluators.
struct AfeConfig {
    double lambda = 0.1;       ///< slack exponent: primary sum length ~ q^{1+lambda}
    double tolerance = 1e-9;   ///< truncation tolerance per smoothed sum
    std::int64_t oracle_bound = 3000;  ///< largest q the Hurwitz oracle accepts
    double sq_cutoff = 60.0;   ///< drop V(x) terms past this x (V there < 1e-12)
};

struct CentralValue {
    std::complex<double> value;
    double abs_error_bound = 0.0;
    std::string method;  ///< "afe", "afe-squared", or "hurwitz"
};

/// Central-value evaluator for one family (fixed q = p^k). Owns the phase
/// tables shared by every character mod q; immutable state plus internal
/// mutex-guarded caches, safe for concurrent use.
class LValueEngine {
public:
    explicit LValueEngine(std::shared_ptr<const UnitGroup> group);

    /// L(1/2, chi) from the smoothed primary sum plus the root-number dual
    /// sum; the reported bound covers both truncation tails.
    CentralValue central_value_afe(const DirichletCharacter& chi, const AfeConfig& cfg) const;

    /// |L(1/2, chi)|^2 directly from the V-kernel double sum.
    CentralValue central_value_sq_afe(const DirichletCharacter& chi, const AfeConfig& cfg) const;

    /// Independent oracle: q^{-1/2} sum_a chi(a) zeta(1/2, a/q). Refuses
    /// non-primitive characters and q above cfg.oracle_bound.
    CentralValue central_value_hurwitz(const DirichletCharacter& chi, const AfeConfig& cfg) const;

    /// AFE values for many characters, computed in parallel and returned in
    /// input order; results are identical for every worker count.
    std::vector<CentralValue> sweep_afe(const std::vector<std::int64_t>& gammas,
                                        const AfeConfig& cfg, int workers) const;

    std::complex<double> gauss_sum(const DirichletCharacter& chi) const;
    /// epsilon(chi) = tau(chi) / (i^iota sqrt(q)).
    std::complex<double> root_number(const DirichletCharacter& chi) const;

    const UnitGroup& group() const { return *group_; }
    std::shared_ptr<const UnitGroup> group_ptr() const { return group_; }

private:
    struct UWeights {
        std::vector<double> primary;  // U(n/q^{1+lambda})/sqrt(n), 0 at p|n; index n
        std::vector<double> dual;     // U(n q^lambda)/sqrt(n), 0 at p|n; index n
        double tail_bound = 0.0;
    };

    std::shared_ptr<const UWeights> u_weights(int iota, const AfeConfig& cfg) const;
    const std::vector<double>& v_table(int iota, const AfeConfig& cfg) const;
    const std::vector<double>& hurwitz_table() const;

    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::complex<double>> ephi_;  // e(j/phi)
    std::vector<std::complex<double>> eq_;    // e(a/q)

    mutable std::mutex mu_;
    mutable std::map<std::pair<int, long long>, std::shared_ptr<const UWeights>> uw_cache_;
    mutable std::vector<double> v_cache_[2];
    mutable std::vector<double> hz_cache_;
};

}  // namespace galorb
