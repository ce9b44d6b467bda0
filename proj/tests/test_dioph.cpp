#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "galorb/dioph.hpp"

using namespace galorb;

namespace {

std::int64_t pow_i64(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// independent v_p(a - b zeta mod p^k)
int val_of(std::int64_t a, std::int64_t b, std::int64_t zeta, std::int64_t p, int k) {
    std::int64_t q = pow_i64(p, k);
    std::int64_t x = (a - static_cast<std::int64_t>(static_cast<__int128>(b) * zeta % q)) % q;
    if (x < 0) x += q;
    if (x == 0) return k;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::int64_t root_residue(int zeta_index, std::int64_t p, int k) {
    auto roots = teichmuller_roots(p, k);
    return static_cast<std::int64_t>(roots[static_cast<std::size_t>(zeta_index - 1)].residue());
}

}  // namespace

TEST_CASE("best_approximations rejects rational roots and oversized budgets") {
    CHECK_THROWS_AS(best_approximations(1, 5, 6, 100), std::invalid_argument);   // zeta = 1
    CHECK_THROWS_AS(best_approximations(4, 5, 6, 100), std::invalid_argument);   // zeta = -1
    CHECK_THROWS_AS(best_approximations(2, 5, 6, 0), std::invalid_argument);
    CHECK_THROWS_AS(best_approximations(2, 5, 6, 200'000'000), std::invalid_argument);
}

TEST_CASE("record profile: strictly improving, independently re-verified") {
    for (int zi : {2, 3}) {
        const std::int64_t p = 5;
        const int k = 8;
        const std::int64_t height = 100'000;
        auto recs = best_approximations(zi, p, k, height);
        REQUIRE(!recs.empty());
        const std::int64_t zeta = root_residue(zi, p, k);
        int prev = -1;
        for (const auto& r : recs) {
            CHECK(std::llabs(r.a) <= height);
            CHECK(r.b >= 1);
            CHECK(r.b <= height);
            CHECK(r.b % p != 0);
            CHECK(r.valuation > prev);
            CHECK(val_of(r.a, r.b, zeta, p, k) == r.valuation);
            prev = r.valuation;
        }
        // records are found in increasing b
        for (std::size_t i = 1; i < recs.size(); ++i) CHECK(recs[i].b >= recs[i - 1].b);
    }
}

TEST_CASE("below the Roth-type box length, same-root pairs are exactly proportional") {
    // p = 5, k = 6, box [1, 47]^2 with 47 < (5^6)^{0.4}: any two pairs
    // (a1, b1), (a2, b2) with a_i = zeta b_i mod 5^5 have a1 b2 = a2 b1 mod
    // 5^5 with both products below 5^5, hence equal as integers. This is the
    // rigidity that caps the per-box count. Verified exhaustively.
    const std::int64_t p = 5;
    const int k = 6;
    const std::int64_t mod = pow_i64(p, k - 1);  // 3125
    const auto bound = static_cast<std::int64_t>(
        std::pow(static_cast<double>(pow_i64(p, k)), 0.4));  // 47
    REQUIRE(bound * bound < mod);
    for (int zi : {2, 3}) {
        const std::int64_t zeta = root_residue(zi, p, k - 1);
        std::vector<std::pair<std::int64_t, std::int64_t>> hits;
        for (std::int64_t a = 1; a <= bound; ++a)
            for (std::int64_t b = 1; b <= bound; ++b) {
                if (a % p == 0 || b % p == 0) continue;
                if ((a - static_cast<std::int64_t>(
                             static_cast<__int128>(b) * zeta % mod)) % mod == 0)
                    hits.emplace_back(a, b);
            }
        for (std::size_t i = 0; i < hits.size(); ++i)
            for (std::size_t j = i + 1; j < hits.size(); ++j)
                CHECK(hits[i].first * hits[j].second == hits[j].first * hits[i].second);
    }
}

TEST_CASE("box_pair_count equals brute force at p = 5, k = 4") {
    const std::int64_t p = 5;
    const int k = 4;
    const std::int64_t mod = 125;
    auto pw4 = [&](std::int64_t x) {
        std::int64_t r = 1;
        for (int i = 0; i < 4; ++i) r = r * (x % mod) % mod;
        return r;
    };
    for (auto [a0, b0] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {1, 1}, {100, 1}, {57, 411}, {1000, 3}}) {
        BoxScan scan{p, k, 0.1, a0, b0, 13};
        auto res = box_pair_count(scan);
        std::int64_t brute = 0;
        for (std::int64_t a = a0; a < a0 + 13; ++a)
            for (std::int64_t b = b0; b < b0 + 13; ++b) {
                if (a % p == 0 || b % p == 0) continue;
                if ((a - b) % mod == 0 || (a + b) % mod == 0) continue;
                if (pw4(a) == pw4(b)) ++brute;
            }
        CHECK(res.total == brute);
        CHECK(res.pairs.size() == static_cast<std::size_t>(res.total));
        std::int64_t per_root_total = 0;
        for (const auto& [z, n] : res.per_root) per_root_total += n;
        CHECK(per_root_total == res.total);
        // every reported pair satisfies its congruences
        for (const auto& pr : res.pairs) {
            CHECK(pw4(pr.a) == pw4(pr.b));
            CHECK((pr.a - static_cast<std::int64_t>(
                              static_cast<__int128>(pr.b) * pr.zeta % mod)) % mod == 0);
            CHECK((pr.a - pr.b) % mod != 0);
            CHECK((pr.a + pr.b) % mod != 0);
        }
    }
}

TEST_CASE("box_pair_count refuses boxes longer than (p^k)^{1/2-delta}") {
    CHECK_THROWS_AS(box_pair_count(BoxScan{5, 4, 0.1, 1, 1, 14}), std::invalid_argument);
    CHECK_THROWS_AS(box_pair_count(BoxScan{5, 4, 0.1, 1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(box_pair_count(BoxScan{5, 4, 0.1, 0, 1, 10}), std::invalid_argument);
    CHECK_THROWS_AS(box_pair_count(BoxScan{5, 1, 0.1, 1, 1, 2}), std::invalid_argument);
    CHECK_NOTHROW(box_pair_count(BoxScan{5, 4, 0.1, 1, 1, 13}));
}

TEST_CASE("same-root pairs in one box satisfy the cross-ratio congruence") {
    // if a1 = z b1 and a2 = z b2 mod p^{k-1} then a1 b2 = a2 b1; this is the
    // rigidity behind the at-most-(p-3) count
    const std::int64_t p = 7;
    const int k = 4;
    const std::int64_t mod = pow_i64(p, k - 1);
    BoxScan scan{p, k, 0.05, 1, 1, 33};  // (7^4)^{0.45} ~ 33.2
    auto res = box_pair_count(scan);
    for (std::size_t i = 0; i < res.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < res.pairs.size(); ++j) {
            if (res.pairs[i].zeta != res.pairs[j].zeta) continue;
            __int128 lhs = static_cast<__int128>(res.pairs[i].a) * res.pairs[j].b;
            __int128 rhs = static_cast<__int128>(res.pairs[j].a) * res.pairs[i].b;
            CHECK(static_cast<std::int64_t>((lhs - rhs) % mod) == 0);
        }
}

TEST_CASE("seeded boxes at p = 5, k = 10 stay within the p - 3 budget") {
    const std::int64_t p = 5;
    const int k = 10;
    const std::int64_t q = pow_i64(p, k);  // 9765625
    const auto len = static_cast<std::int64_t>(std::pow(static_cast<double>(q), 0.4));
    std::mt19937_64 rng(20260823);
    std::uniform_int_distribution<std::int64_t> pos(1, 10'000'000);
    for (int trial = 0; trial < 10; ++trial) {
        BoxScan scan{p, k, 0.1, pos(rng), pos(rng), len};
        auto res = box_pair_count(scan);
        CHECK(res.total <= p - 3);
    }
}
