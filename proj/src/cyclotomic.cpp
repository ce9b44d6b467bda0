#include "galorb/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace galorb {

// Exact division of integer polynomials, quotient only; divisor must be monic.
static std::vector<std::int64_t> poly_div_exact(const std::vector<std::int64_t>& num,
                                                const std::vector<std::int64_t>& den) {
    std::vector<std::int64_t> rem = num;
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(rem.size() - dd, 0);
    for (std::size_t i = rem.size(); i-- > dd;) {
        std::int64_t c = rem[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
    }
    for (std::int64_t c : rem)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

static std::vector<std::int64_t> cyclotomic_impl(std::int64_t n);

static const std::vector<std::int64_t>& cyclotomic_cached(std::int64_t n) {
    static std::map<std::int64_t, std::vector<std::int64_t>> cache;
    // recursive: cyclotomic_impl(n) re-enters for the divisors of n
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, cyclotomic_impl(n)).first;
    return it->second;
}

static std::vector<std::int64_t> cyclotomic_impl(std::int64_t n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num.back() = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_div_exact(num, cyclotomic_cached(d));
    }
    return num;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    return cyclotomic_cached(n);
}

CyclotomicSum::CyclotomicSum(std::int64_t n) : n_(n) {
    if (n < 1) throw std::invalid_argument("CyclotomicSum: order must be positive");
    coef_.assign(static_cast<std::size_t>(n), 0);
}

void CyclotomicSum::add(std::int64_t j, std::int64_t c) {
    j %= n_;
    if (j < 0) j += n_;
    coef_[static_cast<std::size_t>(j)] += c;
}

bool CyclotomicSum::is_zero() const {
    // Reduce the coefficient polynomial mod Phi_N; zero remainder means the
    // algebraic number is zero.
    const auto& phi = cyclotomic_cached(n_);
    std::vector<std::int64_t> rem = coef_;
    const std::size_t dd = phi.size() - 1;
    for (std::size_t i = rem.size(); i-- > dd;) {
        std::int64_t c = rem[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * phi[j];
    }
    for (std::int64_t c : rem)
        if (c != 0) return false;
    return true;
}

bool CyclotomicSum::operator==(const CyclotomicSum& rhs) const {
    if (n_ != rhs.n_) return false;
    CyclotomicSum diff(n_);
    for (std::int64_t j = 0; j < n_; ++j)
        diff.coef_[static_cast<std::size_t>(j)] =
            coef_[static_cast<std::size_t>(j)] - rhs.coef_[static_cast<std::size_t>(j)];
    return diff.is_zero();
}

bool CyclotomicSum::equals_integer(std::int64_t c) const {
    CyclotomicSum other(n_);
    other.add(0, c);
    return *this == other;
}

std::complex<double> CyclotomicSum::to_complex() const {
    std::complex<double> s = 0;
    for (std::int64_t j = 0; j < n_; ++j) {
        std::int64_t c = coef_[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        double ph = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_);
        s += static_cast<double>(c) * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    return s;
}

}  // namespace galorb
