#include "galorb/mollifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace galorb {

double MollifierSpec::max_abs_value() const {
    double cap = 0.0;
    for (const auto& [m, a] : coefficients) cap += std::abs(a) / std::sqrt(static_cast<double>(m));
    return cap;
}

namespace {

// mu(m) for 1 <= m <= n by linear sieve.
std::vector<int> mobius_sieve(std::int64_t n) {
    std::vector<int> mu(static_cast<std::size_t>(n) + 1, 1);
    std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= n; ++i) {
        if (!comp[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            mu[static_cast<std::size_t>(i)] = -1;
        }
        for (std::int64_t p : primes) {
            if (i * p > n) break;
            comp[static_cast<std::size_t>(i * p)] = true;
            if (i % p == 0) {
                mu[static_cast<std::size_t>(i * p)] = 0;
                break;
            }
            mu[static_cast<std::size_t>(i * p)] = -mu[static_cast<std::size_t>(i)];
        }
    }
    return mu;
}

}  // namespace

MollifierSpec iwaniec_sarnak_coefficients(std::int64_t q, double theta, std::int64_t p) {
    if (theta < 0.0 || theta >= 0.5)
        throw std::invalid_argument("iwaniec_sarnak_coefficients: need 0 <= theta < 1/2");
    MollifierSpec spec;
    spec.q = q;
    spec.theta = theta;
    spec.length = std::pow(static_cast<double>(q), theta);
    spec.coefficients.emplace_back(1, 1.0);
    if (theta == 0.0) return spec;
    const auto cap = static_cast<std::int64_t>(spec.length);
    const double logM = std::log(spec.length);
    auto mu = mobius_sieve(cap);
    for (std::int64_t m = 2; m <= cap; ++m) {
        if (m % p == 0 || mu[static_cast<std::size_t>(m)] == 0) continue;
        double a = mu[static_cast<std::size_t>(m)] * std::log(spec.length / static_cast<double>(m)) / logM;
        spec.coefficients.emplace_back(m, a);
    }
    return spec;
}

MollifierSpec load_mollifier_csv(const std::filesystem::path& file, std::int64_t q, double theta,
                                 std::int64_t p, std::vector<std::string>& warnings) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("load_mollifier_csv: cannot open " + file.string());
    MollifierSpec spec;
    spec.q = q;
    spec.theta = theta;
    spec.length = std::pow(static_cast<double>(q), theta);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string mfield, afield;
        if (!std::getline(row, mfield, ',') || !std::getline(row, afield))
            throw std::runtime_error("load_mollifier_csv: malformed row: " + line);
        std::int64_t m = std::stoll(mfield);
        double a = std::stod(afield);
        if (m < 1) throw std::runtime_error("load_mollifier_csv: m must be positive");
        if (m % p == 0)
            throw std::runtime_error("load_mollifier_csv: coefficient at multiple of p");
        if (std::abs(a) > std::pow(static_cast<double>(m), 0.1) && m > 1)
            warnings.push_back("coefficient a_" + std::to_string(m) +
                               " exceeds m^0.1; the a_m << m^eps assumption may fail");
        spec.coefficients.emplace_back(m, a);
    }
    std::sort(spec.coefficients.begin(), spec.coefficients.end());
    if (spec.coefficients.empty() || spec.coefficients.front().first != 1 ||
        spec.coefficients.front().second != 1.0)
        throw std::runtime_error("load_mollifier_csv: table must contain a_1 = 1");
    return spec;
}

std::complex<double> evaluate_mollifier(const MollifierSpec& spec, const DirichletCharacter& chi) {
    if (spec.q != chi.group().q())
        throw std::invalid_argument("evaluate_mollifier: modulus mismatch");
    std::complex<double> acc = 0.0;
    for (const auto& [m, a] : spec.coefficients)
        acc += chi(m) * (a / std::sqrt(static_cast<double>(m)));
    return acc;
}

}  // namespace galorb
