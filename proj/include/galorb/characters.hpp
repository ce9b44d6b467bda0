#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <vector>

namespace galorb {

/// Exact value of a character: either 0 or the root of unity e(num/den).
struct PhaseValue {
    bool zero = false;
    std::int64_t num = 0;  // reduced into [0, den)
    std::int64_t den = 1;

    std::complex<double> to_complex() const;
    PhaseValue conj() const;
    bool operator==(const PhaseValue&) const = default;
};

/// (Z/p^k Z)^x presented by a fixed generator and a full discrete-log table.
/// Immutable once built; shareable across threads.
class UnitGroup {
public:
    static std::shared_ptr<const UnitGroup> build(std::int64_t p, int k);

    /// Loads the ind table from a versioned cache file, building and saving
    /// it on a miss or a stale version.
    static std::shared_ptr<const UnitGroup> load_or_build(std::int64_t p, int k,
                                                          const std::filesystem::path& cache_dir);

    std::int64_t p() const { return p_; }
    int k() const { return k_; }
    std::int64_t q() const { return q_; }
    std::int64_t phi() const { return phi_; }
    std::int64_t generator() const { return g_; }

    bool is_unit(std::int64_t n) const { return ind_[mod_q(n)] != kNonUnit; }

    /// ind(n) with g^{ind(n)} = n mod q; n is reduced mod q first.
    std::int64_t ind(std::int64_t n) const;

    std::int64_t ind_minus_one() const { return ind(q_ - 1); }

    const std::vector<std::uint32_t>& table() const { return ind_; }

    std::size_t mod_q(std::int64_t n) const {
        std::int64_t r = n % q_;
        if (r < 0) r += q_;
        return static_cast<std::size_t>(r);
    }

private:
    UnitGroup() = default;
    static constexpr std::uint32_t kNonUnit = 0xFFFFFFFFu;

    std::int64_t p_ = 0;
    int k_ = 0;
    std::int64_t q_ = 0;
    std::int64_t phi_ = 0;
    std::int64_t g_ = 0;
    std::vector<std::uint32_t> ind_;
};

/// Smallest positive generator of (Z/p^2 Z)^x; such a g generates
/// (Z/p^k Z)^x for every k >= 1.
std::int64_t find_generator(std::int64_t p);

/// Dirichlet character mod p^k determined by chi(g) = e(gamma/phi(q)).
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::int64_t gamma);

    const UnitGroup& group() const { return *group_; }
    std::shared_ptr<const UnitGroup> group_ptr() const { return group_; }
    std::int64_t gamma() const { return gamma_; }

    PhaseValue evaluate(std::int64_t n) const;
    std::complex<double> operator()(std::int64_t n) const { return evaluate(n).to_complex(); }

    std::int64_t order() const;
    bool is_primitive() const;
    /// d with order = p^{k-1} d (primitive characters only).
    std::int64_t order_divisor() const;
    /// iota with chi(-1) = (-1)^iota.
    int parity() const;

    DirichletCharacter conj() const;

private:
    std::shared_ptr<const UnitGroup> group_;
    std::int64_t gamma_;
};

/// Data for evaluating the principal part chi^{(1)} on 1 + pZ through the
/// p-adic logarithm: chi^{(1)}(u) = e(a0 * log_p(u) / p^k).
struct PostnikovParam {
    std::int64_t p = 0;
    int k = 0;
    std::int64_t a0 = 0;          // unit mod p^k
    std::int64_t component0 = 0;  // gamma mod (p-1): the order-(p-1) part

    static PostnikovParam from_character(const DirichletCharacter& chi);

    /// Value at a unit u = 1 mod p; rejects other arguments.
    PhaseValue eval(std::int64_t u) const;
    /// Value at 1 + p*t.
    PhaseValue eval_at_t(std::int64_t t) const;
};

/// Conductor of (chi1 * conj(chi2)) restricted to the principal part X_{k1};
/// a power of p, or 1 when the principal parts coincide.
std::int64_t conductor_distance(const DirichletCharacter& chi1, const DirichletCharacter& chi2);

}  // namespace galorb
