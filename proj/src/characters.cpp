#include "galorb/characters.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "galorb/padic.hpp"

namespace galorb {

std::complex<double> PhaseValue::to_complex() const {
    if (zero) return {0.0, 0.0};
    double ph = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(ph), std::sin(ph)};
}

PhaseValue PhaseValue::conj() const {
    if (zero) return *this;
    return {false, num == 0 ? 0 : den - num, den};
}

static std::int64_t pow_i64(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

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

std::int64_t find_generator(std::int64_t p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("find_generator: p must be an odd prime");
    const std::int64_t m = p * p;
    const std::int64_t phi = p * (p - 1);
    // distinct prime factors of phi
    std::vector<std::int64_t> fac{p};
    std::int64_t t = p - 1;
    for (std::int64_t d = 2; d * d <= t; ++d) {
        if (t % d == 0) {
            fac.push_back(d);
            while (t % d == 0) t /= d;
        }
    }
    if (t > 1) fac.push_back(t);
    for (std::int64_t g = 2; g < m; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (std::int64_t f : fac)
            if (powmod(g, phi / f, m) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("find_generator: no generator found");
}

std::shared_ptr<const UnitGroup> UnitGroup::build(std::int64_t p, int k) {
    if (!is_odd_prime(p)) throw std::invalid_argument("UnitGroup: p must be an odd prime");
    if (k < 1 || k > kMaxPrecision) throw std::invalid_argument("UnitGroup: k out of range");
    auto grp = std::shared_ptr<UnitGroup>(new UnitGroup());
    grp->p_ = p;
    grp->k_ = k;
    grp->q_ = pow_i64(p, k);
    grp->phi_ = grp->q_ / p * (p - 1);
    grp->g_ = find_generator(p);
    grp->ind_.assign(static_cast<std::size_t>(grp->q_), kNonUnit);
    std::int64_t x = 1;
    for (std::int64_t j = 0; j < grp->phi_; ++j) {
        grp->ind_[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(j);
        x = mulmod(x, grp->g_, grp->q_);
    }
    if (x != 1) throw std::logic_error("UnitGroup: generator order mismatch");
    return grp;
}

namespace {
constexpr std::uint32_t kCacheMagic = 0x47524C42u;  // "GRLB"
constexpr std::uint32_t kCacheVersion = 1;
}  // namespace

std::shared_ptr<const UnitGroup> UnitGroup::load_or_build(std::int64_t p, int k,
                                                          const std::filesystem::path& cache_dir) {
    namespace fs = std::filesystem;
    fs::path file = cache_dir / ("ind_p" + std::to_string(p) + "_k" + std::to_string(k) + ".bin");
    std::int64_t g = find_generator(p);
    if (fs::exists(file)) {
        std::ifstream in(file, std::ios::binary);
        std::uint32_t magic = 0, ver = 0;
        std::int64_t fp = 0, fk = 0, fg = 0, fq = 0;
        in.read(reinterpret_cast<char*>(&magic), sizeof magic);
        in.read(reinterpret_cast<char*>(&ver), sizeof ver);
        in.read(reinterpret_cast<char*>(&fp), sizeof fp);
        in.read(reinterpret_cast<char*>(&fk), sizeof fk);
        in.read(reinterpret_cast<char*>(&fg), sizeof fg);
        in.read(reinterpret_cast<char*>(&fq), sizeof fq);
        if (in && magic == kCacheMagic && ver == kCacheVersion && fp == p && fk == k && fg == g) {
            auto grp = std::shared_ptr<UnitGroup>(new UnitGroup());
            grp->p_ = p;
            grp->k_ = k;
            grp->q_ = fq;
            grp->phi_ = fq / p * (p - 1);
            grp->g_ = g;
            grp->ind_.resize(static_cast<std::size_t>(fq));
            in.read(reinterpret_cast<char*>(grp->ind_.data()),
                    static_cast<std::streamsize>(grp->ind_.size() * sizeof(std::uint32_t)));
            if (in) return grp;
        }
        // stale or corrupt: fall through and rebuild
    }
    auto grp = build(p, k);
    std::error_code ec;
    fs::create_directories(cache_dir, ec);
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (out) {
        std::uint32_t magic = kCacheMagic, ver = kCacheVersion;
        std::int64_t fp = p, fk = k, fg = g, fq = grp->q();
        out.write(reinterpret_cast<const char*>(&magic), sizeof magic);
        out.write(reinterpret_cast<const char*>(&ver), sizeof ver);
        out.write(reinterpret_cast<const char*>(&fp), sizeof fp);
        out.write(reinterpret_cast<const char*>(&fk), sizeof fk);
        out.write(reinterpret_cast<const char*>(&fg), sizeof fg);
        out.write(reinterpret_cast<const char*>(&fq), sizeof fq);
        out.write(reinterpret_cast<const char*>(grp->table().data()),
                  static_cast<std::streamsize>(grp->table().size() * sizeof(std::uint32_t)));
    }
    return grp;
}

std::int64_t UnitGroup::ind(std::int64_t n) const {
    std::uint32_t v = ind_[mod_q(n)];
    if (v == kNonUnit) throw std::domain_error("UnitGroup::ind: argument is not a unit");
    return static_cast<std::int64_t>(v);
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::int64_t gamma)
    : group_(std::move(group)) {
    if (!group_) throw std::invalid_argument("DirichletCharacter: null group");
    gamma_ = gamma % group_->phi();
    if (gamma_ < 0) gamma_ += group_->phi();
}

PhaseValue DirichletCharacter::evaluate(std::int64_t n) const {
    const auto& g = *group_;
    std::size_t r = g.mod_q(n);
    if (!g.is_unit(static_cast<std::int64_t>(r))) return {true, 0, 1};
    std::int64_t num = mulmod(gamma_, g.ind(static_cast<std::int64_t>(r)), g.phi());
    return {false, num, g.phi()};
}

std::int64_t DirichletCharacter::order() const {
    return group_->phi() / std::gcd(gamma_, group_->phi());
}

bool DirichletCharacter::is_primitive() const {
    if (group_->k() == 1) return gamma_ != 0;
    return gamma_ % group_->p() != 0;
}

std::int64_t DirichletCharacter::order_divisor() const {
    if (!is_primitive()) throw std::domain_error("order_divisor: character not primitive");
    std::int64_t pk1 = group_->q() / group_->p();  // p^{k-1}
    return order() / pk1;
}

int DirichletCharacter::parity() const {
    std::int64_t v = mulmod(gamma_, group_->ind_minus_one(), group_->phi());
    if (v == 0) return 0;
    if (2 * v == group_->phi()) return 1;
    throw std::logic_error("parity: chi(-1) not +-1");
}

DirichletCharacter DirichletCharacter::conj() const {
    return DirichletCharacter(group_, group_->phi() - gamma_);
}

PostnikovParam PostnikovParam::from_character(const DirichletCharacter& chi) {
    const auto& g = chi.group();
    const std::int64_t p = g.p();
    const int k = g.k();
    PostnikovParam param;
    param.p = p;
    param.k = k;
    param.component0 = chi.gamma() % (p - 1);
    if (k == 1) {
        param.a0 = 1;  // principal part is trivial mod p
        return param;
    }
    // Solve a0 * L' = gamma mod p^{k-1} where log_p(g^{p-1}) = p * L'.
    std::int64_t pk1 = g.q() / p;
    std::int64_t gp = powmod(g.generator(), p - 1, g.q());
    PadicLogResult lg = padic_log(PadicInt(p, k, gp));
    BigInt L = lg.value.residue();
    if (L % p != 0) throw std::logic_error("PostnikovParam: log valuation < 1");
    BigInt Lp = (L / p) % pk1;
    PadicInt inv = PadicInt(p, k - 1, Lp).inverse();  // k >= 2 here
    BigInt a0 = (inv.residue() * (chi.gamma() % pk1)) % pk1;
    std::int64_t a = static_cast<std::int64_t>(a0);
    if (a % p == 0) a += pk1;  // lift to a unit mod p^k
    param.a0 = a;
    return param;
}

PhaseValue PostnikovParam::eval(std::int64_t u) const {
    std::int64_t q = pow_i64(p, k);
    std::int64_t r = u % q;
    if (r < 0) r += q;
    if (r % p != 1) throw std::domain_error("PostnikovParam::eval: argument must be 1 mod p");
    PadicLogResult lg = padic_log(PadicInt(p, k, r));
    std::int64_t lv = static_cast<std::int64_t>(lg.value.residue());
    std::int64_t num = mulmod(a0 % q, lv, q);
    return {false, num, q};
}

PhaseValue PostnikovParam::eval_at_t(std::int64_t t) const {
    std::int64_t q = pow_i64(p, k);
    std::int64_t tr = t % q;
    if (tr < 0) tr += q;
    std::int64_t u = (1 + mulmod(p, tr, q)) % q;
    return eval(u);
}

std::int64_t conductor_distance(const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
    if (chi1.group().q() != chi2.group().q())
        throw std::invalid_argument("conductor_distance: modulus mismatch");
    const auto& g = chi1.group();
    const std::int64_t p = g.p();
    std::int64_t pk1 = g.q() / p;  // p^{k-1}
    std::int64_t delta = chi1.gamma() - chi2.gamma();
    delta %= pk1;
    if (delta < 0) delta += pk1;
    // order of the X_{k1}-restriction is p^{k-1}/gcd(delta, p^{k-1}) = p^j
    std::int64_t ord = pk1 / std::gcd(delta, pk1);
    if (ord == 1) return 1;
    return ord * p;  // conductor p^{j+1}
}

}  // namespace galorb
