#include "galorb/dioph.hpp"

#include <cmath>
#include <stdexcept>

namespace galorb {

namespace {

std::int64_t pow_i64(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    std::int64_t r = static_cast<std::int64_t>(static_cast<__int128>(a % m) * (b % m) % m);
    return r < 0 ? r + m : r;
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// v_p(x mod p^k), with the zero residue reported as k (>= working precision).
int valuation_mod(std::int64_t x, std::int64_t p, int k, std::int64_t q) {
    x %= q;
    if (x < 0) x += q;
    if (x == 0) return k;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace

std::vector<ApproxRecord> best_approximations(int zeta_index, std::int64_t p, int k,
                                              std::int64_t height_bound) {
    if (zeta_index < 2 || zeta_index > p - 2)
        throw std::invalid_argument(
            "best_approximations: zeta must not reduce to +-1 (rational roots)");
    if (height_bound < 1 || height_bound > 100'000'000)
        throw std::invalid_argument("best_approximations: height bound out of budget");
    const std::int64_t q = pow_i64(p, k);
    auto roots = teichmuller_roots(p, k);
    const auto zeta =
        static_cast<std::int64_t>(roots[static_cast<std::size_t>(zeta_index - 1)].residue());
    std::vector<ApproxRecord> records;
    int best = -1;
    for (std::int64_t b = 1; b <= height_bound; ++b) {
        if (b % p == 0) continue;
        // For this b the best a is the centered representative of b zeta
        // mod p^j, for the largest j keeping |a| <= height_bound.
        const std::int64_t bz = mulmod(b, zeta, q);
        std::int64_t pj = 1;
        for (int j = 1; j <= k; ++j) {
            pj *= p;
            std::int64_t a = bz % pj;
            if (a > pj / 2) a -= pj;  // centered residue: v_p(a - b zeta) >= j
            if (std::llabs(a) > height_bound || a == 0) break;
            int v = valuation_mod(a - bz, p, k, q);
            if (v > best) {
                best = v;
                records.push_back({a, b, v});
            }
            if (v >= k) break;
        }
        if (best >= k) break;
    }
    return records;
}

BoxScanResult box_pair_count(const BoxScan& scan) {
    const std::int64_t p = scan.p;
    const int k = scan.k;
    if (k < 2) throw std::invalid_argument("box_pair_count: need k >= 2");
    const double max_len = std::pow(static_cast<double>(pow_i64(p, k)), 0.5 - scan.delta);
    if (scan.length < 1 || static_cast<double>(scan.length) > max_len)
        throw std::invalid_argument(
            "box_pair_count: interval longer than (p^k)^{1/2-delta}; the bound is not "
            "claimed in that regime");
    if (scan.a0 < 1 || scan.b0 < 1)
        throw std::invalid_argument("box_pair_count: intervals must be positive");
    const std::int64_t mod = pow_i64(p, k - 1);
    std::vector<std::int64_t> roots;
    for (const auto& z : teichmuller_roots(p, k - 1))
        roots.push_back(static_cast<std::int64_t>(z.residue()));
    BoxScanResult out;
    for (std::int64_t b = scan.b0; b < scan.b0 + scan.length; ++b) {
        if (b % p == 0) continue;
        for (std::int64_t z : roots) {
            std::int64_t r = mulmod(b, z, mod);
            // smallest a >= a0 with a = r mod p^{k-1}
            std::int64_t a = scan.a0 + (r - scan.a0 % mod + mod) % mod;
            for (; a < scan.a0 + scan.length; a += mod) {
                if (a % p == 0) continue;
                if ((a - b) % mod == 0 || (a + b) % mod == 0) continue;
                // re-verify the defining congruence independently
                if (powmod(a, p - 1, mod) != powmod(b, p - 1, mod)) continue;
                ++out.total;
                ++out.per_root[z];
                out.pairs.push_back({z, a, b});
            }
        }
    }
    return out;
}

}  // namespace galorb
