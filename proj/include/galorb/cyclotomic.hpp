#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace galorb {

/// Formal integer combination of N-th roots of unity, sum_j c_j e(j/N).
/// Supports exact zero/equality tests by reduction modulo the N-th
/// cyclotomic polynomial, so sums of character values can be compared
/// without any floating point.
class CyclotomicSum {
public:
    explicit CyclotomicSum(std::int64_t n);

    std::int64_t order() const { return n_; }

    /// Adds c * e(j/N).
    void add(std::int64_t j, std::int64_t c = 1);

    bool is_zero() const;
    bool operator==(const CyclotomicSum& rhs) const;

    /// True iff this equals the rational integer c.
    bool equals_integer(std::int64_t c) const;

    std::complex<double> to_complex() const;

private:
    std::int64_t n_;
    std::vector<std::int64_t> coef_;  // exponent basis, size N
};

/// Coefficients of the N-th cyclotomic polynomial (constant term first).
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

}  // namespace galorb
