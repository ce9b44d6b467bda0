#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "galorb/characters.hpp"

namespace galorb {

/// Mollifier M(chi) = sum_{m <= q^theta} a_m chi(m)/sqrt(m); coefficients
/// are kept sparse as (m, a_m) pairs sorted by m, with a_1 = 1.
struct MollifierSpec {
    std::int64_t q = 0;
    double theta = 0.0;
    double length = 1.0;  // M = q^theta
    std::vector<std::pair<std::int64_t, double>> coefficients;

    double max_abs_value() const;  // triangle-inequality cap sum |a_m|/sqrt(m)
};

/// The Iwaniec-Sarnak choice a_m = mu(m) log(M/m)/log M on squarefree
/// m <= M = q^theta coprime to p; theta = 0 gives the trivial mollifier.
MollifierSpec iwaniec_sarnak_coefficients(std::int64_t q, double theta, std::int64_t p);

/// Custom coefficient table from a CSV of "m,a_m" rows (override path).
/// Rows with p | m are rejected; a warning string is appended for every
/// coefficient with |a_m| > m^{0.1}.
MollifierSpec load_mollifier_csv(const std::filesystem::path& file, std::int64_t q, double theta,
                                 std::int64_t p, std::vector<std::string>& warnings);

std::complex<double> evaluate_mollifier(const MollifierSpec& spec, const DirichletCharacter& chi);

}  // namespace galorb
