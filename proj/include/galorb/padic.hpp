#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace galorb {

using BigInt = boost::multiprecision::cpp_int;

/// Largest supported precision exponent k; keeps residue widths predictable.
inline constexpr int kMaxPrecision = 64;

bool is_odd_prime(std::int64_t p);

/// p-adic valuation of a residue known mod p^k. The zero residue has
/// valuation >= k, reported as infinite at working precision.
struct Valuation {
    int v = 0;
    bool infinite = false;

    static Valuation finite(int v) { return {v, false}; }
    static Valuation inf() { return {0, true}; }

    bool operator==(const Valuation&) const = default;
};

/// Element of Z/p^k Z viewed as a truncated p-adic integer. Immutable;
/// all arithmetic is exact mod p^k.
class PadicInt {
public:
    PadicInt(std::int64_t p, int k, BigInt value);

    std::int64_t prime() const { return p_; }
    int precision() const { return k_; }
    const BigInt& residue() const { return value_; }
    const BigInt& modulus() const { return mod_; }

    PadicInt operator+(const PadicInt& rhs) const;
    PadicInt operator-(const PadicInt& rhs) const;
    PadicInt operator*(const PadicInt& rhs) const;
    PadicInt operator-() const;

    bool operator==(const PadicInt& rhs) const;

    /// Multiplicative inverse; requires the residue to be coprime to p.
    PadicInt inverse() const;

    PadicInt pow(BigInt e) const;

    bool is_unit() const;

private:
    void check_compatible(const PadicInt& rhs) const;

    std::int64_t p_;
    int k_;
    BigInt mod_;
    BigInt value_;
};

/// Largest v <= k with p^v | x, or infinite for the zero residue.
Valuation valuation(const PadicInt& x);

/// The p-1 Teichmuller lifts: residues z mod p^k with z^{p-1} = 1,
/// pairwise distinct mod p, found by Frobenius fixed-point iteration.
/// Returned in order of their reductions 1, 2, ..., p-1 mod p.
std::vector<PadicInt> teichmuller_roots(std::int64_t p, int k);

struct PadicLogResult {
    PadicInt value;       // log_p(x) reduced mod p^k
    int certified_k;      // precision to which the value is exact
};

/// p-adic logarithm on 1 + pZ, exact mod p^k (guard digits absorb the
/// 1/n denominators, so certified_k == k for all supported inputs).
PadicLogResult padic_log(const PadicInt& x);

/// (p^k | m^p - 1, p^{k-1} | m - 1).
std::pair<bool, bool> refine_check(const BigInt& m, std::int64_t p, int k);

}  // namespace galorb
