#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "galorb/lvalue.hpp"
#include "galorb/mollifier.hpp"
#include "galorb/orbits.hpp"

namespace galorb {

/// One family-average run: empirical first/second mollified moments against
/// the predicted main terms, plus the Cauchy-Schwarz non-vanishing bound.
struct MomentReport {
    std::int64_t p = 0;
    int k = 0;
    std::int64_t q = 0;
    bool thin = false;
    std::int64_t d = 0;           // full orbits
    int kappa = 0;                // thin orbits
    std::int64_t base_gamma = 0;  // thin orbits
    int iota = 0;
    std::size_t orbit_size = 0;
    double theta = 0.0;
    double lambda = 0.0;

    std::complex<double> empirical_first;
    double empirical_second = 0.0;
    double predicted_first = 1.0;
    double predicted_second = 0.0;
    double first_error = 0.0;        // |empirical_first - 1|
    double second_ratio_error = 0.0; // |empirical_second/predicted_second - 1|

    double lower_bound = 0.0;        // |M1|^2 / M2 (Cauchy-Schwarz)
    double target_ratio = 0.0;       // theta/(1+theta), or c_kappa for thin
    std::size_t nonvanishing_count = 0;
    std::size_t undetermined_count = 0;  // |L| inside its error bound
    double nonvanishing_fraction = 0.0;
    bool outside_predicted_regime = false;  // thin run with theta out of range
    // finite-range caveat: asymptotic targets carry ineffective constants
    std::string caveat = "ineffective-threshold";
};

/// Main term of the mollified second moment (Proposition 2.5 shape):
/// (p-1)/p sum a_{m1} a_{m2} / [m1,m2] (log(q (m1,m2)^2/(pi m1 m2)) + C).
double predicted_second_main_term(std::int64_t p, std::int64_t q, int iota,
                                  const MollifierSpec& mollifier);

/// C = psi((1+2 iota)/4) + 2 gamma + 2 log p/(p-1).
double second_moment_constant(std::int64_t p, int iota);

/// c_kappa = (kappa/k - 1/2)/(kappa/k + 1/2).
double thin_target_ratio(int kappa, int k);

class MomentEngine {
public:
    explicit MomentEngine(std::shared_ptr<const UnitGroup> group) : lvalues_(std::move(group)) {}

    MomentReport full_moments(const OrbitSpec& orbit, const MollifierSpec& mollifier,
                              const AfeConfig& cfg, int workers) const;
    MomentReport thin_moments(const ThinOrbitSpec& orbit, const MollifierSpec& mollifier,
                              const AfeConfig& cfg, int workers) const;

    const LValueEngine& lvalues() const { return lvalues_; }

private:
    MomentReport reduce(const std::vector<std::int64_t>& gammas, const MollifierSpec& mollifier,
                        const AfeConfig& cfg, int workers) const;

    LValueEngine lvalues_;
};

/// Pair census for the off-diagonal congruence a^{p-1} = b^{p-1} mod p^{k-1}
/// over 1 <= a, b <= height (heights from q^{(1+2 theta)/2 + eps}).
struct OffdiagonalCensus {
    std::int64_t p = 0;
    int k = 0;
    std::int64_t height = 0;
    std::int64_t diagonal = 0;       // a = b
    std::int64_t class_pm = 0;       // a = +-b mod p^{k-1}, a != b
    std::int64_t class_other = 0;    // a = zeta b with zeta != +-1
    std::map<std::int64_t, std::int64_t> per_root;  // zeta residue -> pair count
};

OffdiagonalCensus offdiagonal_census(std::int64_t p, int k, std::int64_t height);

}  // namespace galorb
