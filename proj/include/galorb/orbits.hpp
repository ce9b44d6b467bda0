#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "galorb/characters.hpp"
#include "galorb/cyclotomic.hpp"

namespace galorb {

/// Full Galois orbit: all primitive characters mod p^k of order p^{k-1} d.
/// Member exponents are kept sorted so enumeration order is deterministic.
struct OrbitSpec {
    std::shared_ptr<const UnitGroup> group;
    std::int64_t d = 1;
    std::vector<std::int64_t> gammas;

    std::size_t size() const { return gammas.size(); }
    DirichletCharacter member(std::size_t i) const {
        return DirichletCharacter(group, gammas[i]);
    }
    int parity() const { return member(0).parity(); }
};

/// Thin orbit O_kappa: members of the full orbit whose twist against the
/// base character has order dividing p^kappa.
struct ThinOrbitSpec {
    std::shared_ptr<const UnitGroup> group;
    std::int64_t base_gamma = 0;
    int kappa = 0;
    std::vector<std::int64_t> gammas;

    std::size_t size() const { return gammas.size(); }
    DirichletCharacter member(std::size_t i) const {
        return DirichletCharacter(group, gammas[i]);
    }
    DirichletCharacter base() const { return DirichletCharacter(group, base_gamma); }
    int parity() const { return base().parity(); }
};

/// chi^sigma where sigma(xi) = xi^a; requires gcd(a, phi(q)) = 1.
DirichletCharacter galois_act(const DirichletCharacter& chi, std::int64_t a);

OrbitSpec enumerate_orbit(std::shared_ptr<const UnitGroup> group, std::int64_t d);

ThinOrbitSpec enumerate_thin_orbit(const DirichletCharacter& base, int kappa);

/// sum_{chi in orbit} chi(n) by direct summation of exact phases.
CyclotomicSum char_average_direct(const UnitGroup& group,
                                  const std::vector<std::int64_t>& gammas, std::int64_t n);

/// Closed-form evaluation |O| mu(t)/phi(t), t = ord(n^{(p-1)/d}).
CyclotomicSum char_average_closed(const OrbitSpec& orbit, std::int64_t n);

/// Closed form from the geometric-sum evaluation over the thin orbit.
CyclotomicSum char_average_closed(const ThinOrbitSpec& orbit, std::int64_t n);

/// n^{p-1} = 1 mod p^e, the survival condition of the orthogonality lemmas.
bool survives(std::int64_t n, std::int64_t p, std::int64_t mod_power);

/// All n <= bound coprime to p with n^{p-1} = 1 mod p^{me}, grouped by the
/// Teichmuller root they reduce to mod p^{me}.
struct SurvivorSet {
    std::int64_t p = 0;
    int modulus_exponent = 0;
    std::vector<std::int64_t> roots;                 // Teichmuller roots mod p^{me}
    std::vector<std::vector<std::int64_t>> by_root;  // survivors per root
    std::vector<std::int64_t> all;                   // sorted union
};
SurvivorSet survivor_set(std::int64_t p, int k, int modulus_exponent, std::int64_t bound);

}  // namespace galorb
