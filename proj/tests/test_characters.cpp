#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>

#include "galorb/characters.hpp"
#include "galorb/cyclotomic.hpp"

using namespace galorb;

namespace {

std::int64_t pow_i64(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("find_generator picks the smallest generator of (Z/p^2)^x") {
    CHECK(find_generator(3) == 2);
    CHECK(find_generator(5) == 2);
    CHECK(find_generator(7) == 3);
    CHECK_THROWS_AS(find_generator(4), std::invalid_argument);
    CHECK_THROWS_AS(find_generator(2), std::invalid_argument);
}

TEST_CASE("UnitGroup table invariants") {
    auto g = UnitGroup::build(3, 3);
    CHECK(g->q() == 27);
    CHECK(g->phi() == 18);
    CHECK(g->generator() == 2);
    CHECK(g->ind(1) == 0);
    CHECK(g->ind(2) == 1);
    std::int64_t x = 1;
    for (std::int64_t j = 0; j < g->phi(); ++j) {
        CHECK(g->ind(x) == j);
        x = x * g->generator() % g->q();
    }
    CHECK(g->is_unit(3) == false);
    CHECK_THROWS_AS(g->ind(9), std::domain_error);
}

TEST_CASE("character evaluation examples") {
    auto g = UnitGroup::build(3, 2);
    DirichletCharacter chi(g, 1);
    CHECK(chi.evaluate(1) == PhaseValue{false, 0, 6});
    CHECK(chi.evaluate(3).zero);
    CHECK(chi.evaluate(2) == PhaseValue{false, 1, 6});  // chi(g) = e(1/6)
    // multiplicativity on units, q-periodicity
    auto g4 = UnitGroup::build(3, 4);
    DirichletCharacter psi(g4, 5);
    for (std::int64_t m : {2, 5, 7, 80}) {
        for (std::int64_t n : {4, 11, 26}) {
            auto prod = psi.evaluate(m * n % g4->q());
            auto vm = psi.evaluate(m), vn = psi.evaluate(n);
            CHECK(prod == PhaseValue{false, (vm.num + vn.num) % vm.den, vm.den});
        }
        CHECK(psi.evaluate(m) == psi.evaluate(m + g4->q()));
    }
}

TEST_CASE("order, primitivity, parity") {
    auto g = UnitGroup::build(3, 3);
    CHECK(DirichletCharacter(g, 0).order() == 1);
    CHECK(DirichletCharacter(g, 0).is_primitive() == false);
    CHECK(DirichletCharacter(g, 2).order() == 9);
    CHECK(DirichletCharacter(g, 2).order_divisor() == 1);
    CHECK(DirichletCharacter(g, 1).order() == 18);
    CHECK(DirichletCharacter(g, 1).order_divisor() == 2);
    CHECK(DirichletCharacter(g, 3).is_primitive() == false);  // 3 | gamma
    // chi(-1) = (-1)^gamma here since ind(-1) = phi/2 and phi/2 = 9 is odd
    CHECK(DirichletCharacter(g, 2).parity() == 0);
    CHECK(DirichletCharacter(g, 1).parity() == 1);
    // primitivity iff p does not divide gamma (k >= 2), exhaustive
    for (std::int64_t gamma = 0; gamma < g->phi(); ++gamma) {
        DirichletCharacter chi(g, gamma);
        CHECK(chi.is_primitive() == (gamma % 3 != 0));
        if (chi.is_primitive()) {
            std::int64_t d = chi.order_divisor();
            CHECK(chi.order() == 9 * d);
            CHECK((3 - 1) % d == 0);
        }
    }
    // k = 1: primitive iff non-principal
    auto g1 = UnitGroup::build(5, 1);
    CHECK(DirichletCharacter(g1, 0).is_primitive() == false);
    CHECK(DirichletCharacter(g1, 1).is_primitive());
}

TEST_CASE("primitive character sums vanish exactly") {
    auto g = UnitGroup::build(3, 4);
    for (std::int64_t gamma = 1; gamma < g->phi(); ++gamma) {
        DirichletCharacter chi(g, gamma);
        CyclotomicSum sum(g->phi());
        for (std::int64_t n = 1; n <= g->q(); ++n) {
            auto v = chi.evaluate(n);
            if (!v.zero) sum.add(v.num);
        }
        CHECK(sum.is_zero());
    }
}

TEST_CASE("primitive character count per order matches phi(p^{k-1} d)") {
    for (auto [p, k] : std::vector<std::pair<std::int64_t, int>>{{3, 3}, {3, 4}, {5, 2}}) {
        auto g = UnitGroup::build(p, k);
        std::map<std::int64_t, std::int64_t> count;  // order -> #characters
        for (std::int64_t gamma = 0; gamma < g->phi(); ++gamma) {
            DirichletCharacter chi(g, gamma);
            if (chi.is_primitive()) ++count[chi.order()];
        }
        for (std::int64_t d = 1; d <= p - 1; ++d) {
            if ((p - 1) % d != 0) continue;
            std::int64_t order = pow_i64(p, k - 1) * d;
            std::int64_t phi_order = order;
            for (std::int64_t f = 2; f * f <= order; ++f)
                if (order % f == 0) {
                    phi_order -= phi_order / f;
                    while (order % f == 0) order /= f;
                }
            if (order > 1) phi_order -= phi_order / order;
            CHECK(count[pow_i64(p, k - 1) * d] == phi_order);
        }
    }
}

TEST_CASE("conjugation") {
    auto g = UnitGroup::build(3, 3);
    DirichletCharacter chi(g, 5);
    auto bar = chi.conj();
    for (std::int64_t n = 1; n <= g->q(); ++n)
        CHECK(bar.evaluate(n) == chi.evaluate(n).conj());
}

TEST_CASE("Postnikov parametrization agrees with direct evaluation") {
    // exhaustive on 1 + 3Z mod 3^5 for a primitive character
    auto g = UnitGroup::build(3, 5);
    for (std::int64_t gamma : {1, 2, 7, 100}) {
        DirichletCharacter chi(g, gamma);
        if (!chi.is_primitive()) continue;
        auto param = PostnikovParam::from_character(chi);
        for (std::int64_t t = 0; 1 + 3 * t < g->q(); ++t) {
            std::int64_t u = 1 + 3 * t;
            auto direct = chi.evaluate(u);
            auto post = param.eval(u);
            // both are roots of unity; compare as reduced fractions
            CHECK(direct.num * post.den == post.num * direct.den);
            CHECK(param.eval_at_t(t) == post);
        }
    }
    auto param = PostnikovParam::from_character(DirichletCharacter(g, 1));
    CHECK(param.eval(1) == PhaseValue{false, 0, 243});
    CHECK_THROWS_AS(param.eval(2), std::domain_error);
}

TEST_CASE("Postnikov evaluation is multiplicative") {
    auto g = UnitGroup::build(5, 4);
    auto param = PostnikovParam::from_character(DirichletCharacter(g, 3));
    const std::int64_t q = g->q();
    for (std::int64_t x : {6, 11, 101, 621}) {
        for (std::int64_t y : {16, 56, 456}) {
            auto vx = param.eval(x), vy = param.eval(y), vxy = param.eval(x * y % q);
            CHECK(vxy.num == (vx.num + vy.num) % q);
        }
    }
}

TEST_CASE("conductor distance") {
    auto g = UnitGroup::build(3, 4);
    DirichletCharacter chi(g, 1);
    CHECK(conductor_distance(chi, chi) == 1);
    // twist of order 3 mod 81 has conductor 9
    DirichletCharacter chi2(g, 1 + 18);  // gamma differs by phi/p^1 = 18
    CHECK(conductor_distance(chi, chi2) == 9);
    // twist of full order p^{k-1} has conductor p^k
    DirichletCharacter chi3(g, 1 + 2);  // difference 2, coprime to 27
    CHECK(conductor_distance(chi, chi3) == 81);
    auto h = UnitGroup::build(3, 3);
    CHECK_THROWS_AS(conductor_distance(chi, DirichletCharacter(h, 1)),
                    std::invalid_argument);
}

TEST_CASE("conductor distance matches brute-force minimal induction modulus") {
    // cond(chi) = smallest p^j such that chi is trivial on units = 1 mod p^j
    auto g = UnitGroup::build(3, 4);
    auto brute_conductor = [&](const DirichletCharacter& chi) -> std::int64_t {
        for (std::int64_t pj : {1, 3, 9, 27, 81}) {
            bool trivial = true;
            for (std::int64_t u = 1; u < g->q(); ++u) {
                if (u % 3 == 0 || (u - 1) % pj != 0) continue;
                if (!(chi.evaluate(u) == PhaseValue{false, 0, chi.evaluate(u).den}))
                    trivial = false;
            }
            if (trivial) return pj;
        }
        return g->q();
    };
    DirichletCharacter a(g, 5), b(g, 23);
    // chi_a * conj(chi_b) restricted to X_{k1} has gamma difference 18 = phi/3
    DirichletCharacter twist(g, (a.gamma() - b.gamma() + g->phi()) % g->phi());
    // restrict to the principal part by raising to the (p-1)-th power
    DirichletCharacter principal_part(g, twist.gamma() * 2 % g->phi());
    (void)principal_part;
    CHECK(conductor_distance(a, b) == brute_conductor(DirichletCharacter(
                                          g, (a.gamma() - b.gamma() + g->phi()) % g->phi() * 2 %
                                                 g->phi())));
}

TEST_CASE("ind-table cache: warm load matches cold build, stale cache rebuilt") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "galorb-test-cache";
    fs::remove_all(dir);
    auto cold = UnitGroup::load_or_build(3, 4, dir);
    auto built = UnitGroup::build(3, 4);
    CHECK(cold->table() == built->table());
    auto warm = UnitGroup::load_or_build(3, 4, dir);
    CHECK(warm->table() == built->table());
    // corrupt the cache file; loader must fall back to a rebuild
    fs::path file;
    for (const auto& e : fs::directory_iterator(dir)) file = e.path();
    std::ofstream(file, std::ios::trunc) << "garbage";
    auto rebuilt = UnitGroup::load_or_build(3, 4, dir);
    CHECK(rebuilt->table() == built->table());
    fs::remove_all(dir);
}
