#include "galorb/padic.hpp"

#include <boost/integer/mod_inverse.hpp>

namespace galorb {

namespace mp = boost::multiprecision;

bool is_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

static BigInt pow_int(std::int64_t base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

PadicInt::PadicInt(std::int64_t p, int k, BigInt value) : p_(p), k_(k) {
    if (!is_odd_prime(p)) throw std::invalid_argument("PadicInt: p must be an odd prime");
    if (k < 1 || k > kMaxPrecision) throw std::invalid_argument("PadicInt: precision k out of range");
    mod_ = pow_int(p, k);
    value_ = value % mod_;
    if (value_ < 0) value_ += mod_;
}

void PadicInt::check_compatible(const PadicInt& rhs) const {
    if (p_ != rhs.p_ || k_ != rhs.k_)
        throw std::invalid_argument("PadicInt: mismatched (p, k)");
}

PadicInt PadicInt::operator+(const PadicInt& rhs) const {
    check_compatible(rhs);
    return PadicInt(p_, k_, value_ + rhs.value_);
}

PadicInt PadicInt::operator-(const PadicInt& rhs) const {
    check_compatible(rhs);
    return PadicInt(p_, k_, value_ - rhs.value_);
}

PadicInt PadicInt::operator*(const PadicInt& rhs) const {
    check_compatible(rhs);
    return PadicInt(p_, k_, value_ * rhs.value_);
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, k_, -value_); }

bool PadicInt::operator==(const PadicInt& rhs) const {
    return p_ == rhs.p_ && k_ == rhs.k_ && value_ == rhs.value_;
}

bool PadicInt::is_unit() const { return value_ % p_ != 0; }

PadicInt PadicInt::inverse() const {
    if (!is_unit()) throw std::domain_error("PadicInt::inverse: residue not coprime to p");
    BigInt inv = boost::integer::mod_inverse(value_, mod_);
    return PadicInt(p_, k_, inv);
}

PadicInt PadicInt::pow(BigInt e) const {
    if (e < 0) return inverse().pow(-e);
    return PadicInt(p_, k_, mp::powm(value_, e, mod_));
}

Valuation valuation(const PadicInt& x) {
    if (x.residue() == 0) return Valuation::inf();
    BigInt v = x.residue();
    int e = 0;
    while (v % x.prime() == 0) {
        v /= x.prime();
        ++e;
    }
    return Valuation::finite(e);
}

std::vector<PadicInt> teichmuller_roots(std::int64_t p, int k) {
    if (!is_odd_prime(p)) throw std::invalid_argument("teichmuller_roots: p must be an odd prime");
    BigInt q = pow_int(p, k);
    std::vector<PadicInt> roots;
    roots.reserve(static_cast<std::size_t>(p - 1));
    for (std::int64_t x0 = 1; x0 < p; ++x0) {
        BigInt x = x0;
        // x <- x^p converges to the fixed point in <= k steps
        for (int i = 0; i < k; ++i) {
            BigInt nx = mp::powm(x, p, q);
            if (nx == x) break;
            x = nx;
        }
        roots.emplace_back(p, k, x);
    }
    return roots;
}

PadicLogResult padic_log(const PadicInt& x) {
    const std::int64_t p = x.prime();
    const int k = x.precision();
    if (x.residue() % p != 1)
        throw std::domain_error("padic_log: argument must be congruent to 1 mod p");

    // Find the truncation index: smallest N with n - floor(log_p n) >= k
    // for all n > N (t = x - 1 has valuation >= 1).
    int nmax = 1;
    while (true) {
        int lg = 0;
        std::int64_t pw = p;
        while (pw <= nmax) { pw *= p; ++lg; }
        if (nmax - lg >= k) break;
        ++nmax;
    }
    int guard = 0;
    {
        std::int64_t pw = 1;
        while (pw <= nmax) { pw *= p; ++guard; }
    }

    const int kw = k + guard;
    BigInt modw = 1;
    for (int i = 0; i < kw; ++i) modw *= p;

    BigInt t = x.residue() % modw;  // representative; t-1 has valuation >= 1
    t = (t + modw - 1) % modw;
    BigInt tp = 1;  // t^n mod p^kw
    BigInt acc = 0;
    for (int n = 1; n <= nmax; ++n) {
        tp = (tp * t) % modw;
        // split n = p^e * n', divide t^n exactly by p^e, invert n'
        std::int64_t nn = n;
        int e = 0;
        while (nn % p == 0) { nn /= p; ++e; }
        BigInt term = tp;
        for (int i = 0; i < e; ++i) {
            if (term % p != 0)
                throw std::logic_error("padic_log: term lost p-divisibility");
            term /= p;
        }
        term = (term * boost::integer::mod_inverse(BigInt(nn), modw)) % modw;
        if (n % 2 == 0) term = modw - term;
        acc = (acc + term) % modw;
    }
    return {PadicInt(p, k, acc), k};
}

std::pair<bool, bool> refine_check(const BigInt& m, std::int64_t p, int k) {
    if (!is_odd_prime(p) || k < 1) throw std::invalid_argument("refine_check: bad (p, k)");
    BigInt qk = pow_int(p, k);
    BigInt qk1 = qk / p;
    BigInt mp_ = mp::powm(((m % qk) + qk) % qk, p, qk);
    bool first = (mp_ == 1 % qk);
    BigInt r = ((m - 1) % qk1 + qk1) % qk1;
    bool second = (r == 0);
    return {first, second};
}

}  // namespace galorb
