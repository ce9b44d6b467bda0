#include "galorb/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "galorb/padic.hpp"

namespace galorb {

static std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

static std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

static std::int64_t pow_i64(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

DirichletCharacter galois_act(const DirichletCharacter& chi, std::int64_t a) {
    std::int64_t phi = chi.group().phi();
    std::int64_t ar = a % phi;
    if (ar < 0) ar += phi;
    if (std::gcd(ar, phi) != 1)
        throw std::invalid_argument("galois_act: exponent not coprime to phi(q)");
    return DirichletCharacter(chi.group_ptr(), mulmod(ar, chi.gamma(), phi));
}

OrbitSpec enumerate_orbit(std::shared_ptr<const UnitGroup> group, std::int64_t d) {
    const std::int64_t p = group->p();
    if (d < 1 || (p - 1) % d != 0)
        throw std::invalid_argument("enumerate_orbit: d must divide p-1");
    const std::int64_t phi = group->phi();
    const std::int64_t target_gcd = (p - 1) / d;  // gcd(gamma, phi) for order p^{k-1} d
    OrbitSpec orbit;
    orbit.group = group;
    orbit.d = d;
    for (std::int64_t g = 0; g < phi; ++g)
        if (std::gcd(g, phi) == target_gcd) orbit.gammas.push_back(g);
    if (orbit.gammas.empty())
        throw std::logic_error("enumerate_orbit: empty orbit");
    return orbit;
}

ThinOrbitSpec enumerate_thin_orbit(const DirichletCharacter& base, int kappa) {
    const auto& g = base.group();
    const std::int64_t p = g.p();
    const int k = g.k();
    if (!base.is_primitive())
        throw std::invalid_argument("enumerate_thin_orbit: base must be primitive");
    if (kappa <= 0 || kappa > k - 1)
        throw std::invalid_argument("enumerate_thin_orbit: kappa out of range");
    const std::int64_t phi = g.phi();
    ThinOrbitSpec thin;
    thin.group = base.group_ptr();
    thin.base_gamma = base.gamma();
    thin.kappa = kappa;
    if (kappa < k - 1) {
        const std::int64_t step = pow_i64(p, k - 1 - kappa) * (p - 1);
        const std::int64_t count = pow_i64(p, kappa);
        for (std::int64_t j = 0; j < count; ++j)
            thin.gammas.push_back((base.gamma() + j * step) % phi);
    } else {
        const std::int64_t count = pow_i64(p, k - 1);
        for (std::int64_t j = 0; j < count; ++j) {
            std::int64_t gm = (base.gamma() + j * (p - 1)) % phi;
            if (gm % p != 0) thin.gammas.push_back(gm);  // keep primitive members
        }
    }
    std::sort(thin.gammas.begin(), thin.gammas.end());
    return thin;
}

CyclotomicSum char_average_direct(const UnitGroup& group,
                                  const std::vector<std::int64_t>& gammas, std::int64_t n) {
    CyclotomicSum sum(group.phi());
    std::size_t r = group.mod_q(n);
    if (!group.is_unit(static_cast<std::int64_t>(r))) return sum;  // chi(n) = 0 termwise
    std::int64_t ind = group.ind(static_cast<std::int64_t>(r));
    for (std::int64_t g : gammas) sum.add(mulmod(g, ind, group.phi()));
    return sum;
}

// mu on small arguments via factorization
static int mobius(std::int64_t n) {
    int mu = 1;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

static std::int64_t euler_phi(std::int64_t n) {
    std::int64_t r = n;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            r -= r / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

CyclotomicSum char_average_closed(const OrbitSpec& orbit, std::int64_t n) {
    const auto& g = *orbit.group;
    CyclotomicSum sum(g.phi());
    std::size_t r = g.mod_q(n);
    if (!g.is_unit(static_cast<std::int64_t>(r))) return sum;
    // t = multiplicative order of n^{(p-1)/d} mod q, via the index table
    std::int64_t e = mulmod((g.p() - 1) / orbit.d, g.ind(static_cast<std::int64_t>(r)), g.phi());
    std::int64_t t = g.phi() / std::gcd(e, g.phi());
    std::int64_t value = static_cast<std::int64_t>(orbit.size()) * mobius(t);
    std::int64_t pt = euler_phi(t);
    if (value % pt != 0)
        throw std::logic_error("char_average_closed: non-integral closed form");
    sum.add(0, value / pt);
    return sum;
}

CyclotomicSum char_average_closed(const ThinOrbitSpec& orbit, std::int64_t n) {
    const auto& g = *orbit.group;
    const std::int64_t p = g.p();
    const int k = g.k();
    CyclotomicSum sum(g.phi());
    std::size_t rr = g.mod_q(n);
    if (!g.is_unit(static_cast<std::int64_t>(rr))) return sum;
    const std::int64_t r = g.ind(static_cast<std::int64_t>(rr));
    const std::int64_t g0 = orbit.base_gamma;
    if (orbit.kappa < k - 1) {
        const std::int64_t pk = pow_i64(p, orbit.kappa);
        if (mulmod(g0 % pk, r % pk, pk) % pk == 0) {
            // chi0(n) * p^kappa
            sum.add(mulmod(g0, r, g.phi()), pk);
        }
        return sum;
    }
    // kappa = k-1: chi0(n)^p times the Ramanujan sum c_{p^{k-1}}(g0 r)
    const std::int64_t pk1 = pow_i64(p, k - 1);
    const std::int64_t m = mulmod(g0 % pk1, r % pk1, pk1);
    std::int64_t c;
    if (m == 0) {
        c = pk1 - pk1 / p;
    } else if (m % (pk1 / p) == 0) {
        c = -(pk1 / p);
    } else {
        c = 0;
    }
    if (c != 0) sum.add(mulmod(mulmod(g0, r, g.phi()), p, g.phi()), c);
    return sum;
}

bool survives(std::int64_t n, std::int64_t p, std::int64_t mod_power) {
    if (n % p == 0) return false;
    std::int64_t r = n % mod_power;
    if (r < 0) r += mod_power;
    return powmod(r, p - 1, mod_power) == 1;
}

SurvivorSet survivor_set(std::int64_t p, int k, int modulus_exponent, std::int64_t bound) {
    if (modulus_exponent < 1 || modulus_exponent > k)
        throw std::invalid_argument("survivor_set: modulus_exponent out of range");
    SurvivorSet out;
    out.p = p;
    out.modulus_exponent = modulus_exponent;
    const std::int64_t mod = pow_i64(p, modulus_exponent);
    auto roots = teichmuller_roots(p, modulus_exponent);
    for (const auto& z : roots) out.roots.push_back(static_cast<std::int64_t>(z.residue()));
    out.by_root.resize(out.roots.size());
    for (std::int64_t n = 1; n <= bound; ++n) {
        if (n % p == 0) continue;
        if (!survives(n, p, mod)) continue;
        // a survivor reduces mod p^{me} to exactly one Teichmuller root
        std::int64_t nm = n % mod;
        for (std::size_t i = 0; i < out.roots.size(); ++i) {
            if (out.roots[i] == nm) {
                out.by_root[i].push_back(n);
                break;
            }
        }
        out.all.push_back(n);
    }
    return out;
}

}  // namespace galorb
