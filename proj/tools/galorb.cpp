// galorb: central values of Dirichlet L-functions over Galois orbits of
// characters mod p^k, orbit moments with mollification, and finite-range
// p-adic approximation scans.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "galorb/dioph.hpp"
#include "galorb/kernels.hpp"
#include "galorb/lvalue.hpp"
#include "galorb/moments.hpp"
#include "galorb/mollifier.hpp"
#include "galorb/orbits.hpp"
#include "galorb/padic.hpp"
#include "galorb/special.hpp"

namespace {

using nlohmann::ordered_json;
using namespace galorb;

constexpr const char* kVersion = "0.1.0";
// trend/envelope parameters: asymptotic error exponents are applied with
// this epsilon and an absolute floor at the smallest moduli, since the
// implied constants are not effective
constexpr double kEnvelopeEpsilon = 0.05;
constexpr double kEnvelopeFloor = 0.5;

std::string fmt15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

// round to 15 significant digits before serialization so reports are
// byte-stable and match the documented precision
double num15(double x) { return std::stod(fmt15(x)); }

ordered_json complex_json(std::complex<double> z) {
    return ordered_json{{"re", num15(z.real())}, {"im", num15(z.imag())}};
}

std::int64_t pow_i64(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

struct CommonOpts {
    std::int64_t p = 3;
    int k = 4;
    int workers = 0;
    std::string cache_dir = ".galorb-cache";
    std::string out;
    std::string format = "json";
    bool assert_mode = false;
    double lambda = 0.1;
    double tolerance = 1e-9;
    std::int64_t oracle_bound = 3000;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_pk = true) {
    if (with_pk) {
        cmd->add_option("--p", o.p, "odd prime modulus base")->capture_default_str();
        cmd->add_option("--k", o.k, "modulus exponent: q = p^k")->capture_default_str();
    }
    cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)")
        ->capture_default_str();
    cmd->add_option("--cache-dir", o.cache_dir, "directory for the ind-table cache")
        ->capture_default_str();
    cmd->add_option("--out", o.out, "output file (default: stdout)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_flag("--assert", o.assert_mode, "exit nonzero on any check breach");
    cmd->add_option("--lambda", o.lambda, "AFE slack exponent (> 0)")->capture_default_str();
    cmd->add_option("--tolerance", o.tolerance, "truncation tolerance")->capture_default_str();
    cmd->add_option("--oracle-bound", o.oracle_bound, "largest q the Hurwitz oracle accepts")
        ->capture_default_str();
}

void validate_common(const CommonOpts& o) {
    if (!is_odd_prime(o.p)) throw CLI::ValidationError("--p must be an odd prime");
    if (o.k < 1 || o.k > kMaxPrecision) throw CLI::ValidationError("--k out of range");
    if (o.lambda <= 0.0) throw CLI::ValidationError("--lambda must be positive");
}

AfeConfig afe_config(const CommonOpts& o) {
    AfeConfig cfg;
    cfg.lambda = o.lambda;
    cfg.tolerance = o.tolerance;
    cfg.oracle_bound = o.oracle_bound;
    return cfg;
}

ordered_json config_echo(const CommonOpts& o) {
    return ordered_json{{"p", o.p},
                        {"k", o.k},
                        {"workers", o.workers},
                        {"cache_dir", o.cache_dir},
                        {"format", o.format},
                        {"lambda", num15(o.lambda)},
                        {"tolerance", num15(o.tolerance)},
                        {"oracle_bound", o.oracle_bound}};
}

ordered_json envelope_json() {
    return ordered_json{{"epsilon", kEnvelopeEpsilon}, {"absolute_floor", kEnvelopeFloor}};
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(o.out, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open output file " + o.out);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }
}

ordered_json moment_report_json(const MomentReport& r) {
    ordered_json j;
    j["p"] = r.p;
    j["k"] = r.k;
    j["q"] = r.q;
    j["family"] = r.thin ? "thin" : "full";
    if (r.thin) {
        j["kappa"] = r.kappa;
        j["base_gamma"] = r.base_gamma;
    } else {
        j["d"] = r.d;
    }
    j["iota"] = r.iota;
    j["orbit_size"] = r.orbit_size;
    j["theta"] = num15(r.theta);
    j["lambda"] = num15(r.lambda);
    j["empirical_first"] = complex_json(r.empirical_first);
    j["empirical_second"] = num15(r.empirical_second);
    j["predicted_first"] = num15(r.predicted_first);
    j["predicted_second"] = num15(r.predicted_second);
    j["first_error"] = num15(r.first_error);
    j["second_ratio_error"] = num15(r.second_ratio_error);
    j["lower_bound"] = num15(r.lower_bound);
    j["target_ratio"] = num15(r.target_ratio);
    j["nonvanishing_count"] = r.nonvanishing_count;
    j["undetermined_count"] = r.undetermined_count;
    j["nonvanishing_fraction"] = num15(r.nonvanishing_fraction);
    j["outside_predicted_regime"] = r.outside_predicted_regime;
    j["caveat"] = r.caveat;
    return j;
}

const char* kMomentCsvHeader =
    "p,k,q,family,d,kappa,base_gamma,iota,orbit_size,theta,lambda,"
    "first_re,first_im,second,predicted_second,first_error,second_ratio_error,"
    "lower_bound,target_ratio,nonvanishing_count,undetermined_count,"
    "nonvanishing_fraction,outside_predicted_regime";

std::string moment_report_csv_row(const MomentReport& r) {
    std::string row;
    row += std::to_string(r.p) + "," + std::to_string(r.k) + "," + std::to_string(r.q) + ",";
    row += std::string(r.thin ? "thin" : "full") + ",";
    row += std::to_string(r.thin ? 0 : r.d) + "," + std::to_string(r.thin ? r.kappa : 0) + ",";
    row += std::to_string(r.thin ? r.base_gamma : 0) + "," + std::to_string(r.iota) + ",";
    row += std::to_string(r.orbit_size) + "," + fmt15(r.theta) + "," + fmt15(r.lambda) + ",";
    row += fmt15(r.empirical_first.real()) + "," + fmt15(r.empirical_first.imag()) + ",";
    row += fmt15(r.empirical_second) + "," + fmt15(r.predicted_second) + ",";
    row += fmt15(r.first_error) + "," + fmt15(r.second_ratio_error) + ",";
    row += fmt15(r.lower_bound) + "," + fmt15(r.target_ratio) + ",";
    row += std::to_string(r.nonvanishing_count) + "," + std::to_string(r.undetermined_count) +
           "," + fmt15(r.nonvanishing_fraction) + ",";
    row += r.outside_predicted_regime ? "1" : "0";
    return row;
}

// report invariants enforced under --assert: Cauchy-Schwarz, positivity,
// and (unmollified runs) the first-moment envelope
bool moment_breach(const MomentReport& r) {
    if (r.empirical_second <= 0.0) return true;
    if (r.lower_bound > 1.0 + 1e-6) return true;
    if (r.theta == 0.0) {
        double env = std::max(kEnvelopeFloor,
                              std::pow(static_cast<double>(r.q), -0.25 + kEnvelopeEpsilon));
        if (r.first_error > env) return true;
    }
    return false;
}

// ---------------------------------------------------------------- orbits

int cmd_orbits(const CommonOpts& o) {
    auto group = UnitGroup::load_or_build(o.p, o.k, o.cache_dir);
    ordered_json rows = ordered_json::array();
    std::int64_t total = 0;
    for (std::int64_t d = 1; d <= o.p - 1; ++d) {
        if ((o.p - 1) % d != 0) continue;
        auto orbit = enumerate_orbit(group, d);
        total += static_cast<std::int64_t>(orbit.size());
        ordered_json row;
        row["d"] = d;
        row["order"] = pow_i64(o.p, o.k - 1) * d;
        row["size"] = orbit.size();
        row["iota"] = orbit.parity();
        ordered_json thin = ordered_json::array();
        for (int kappa = 1; kappa <= o.k - 1; ++kappa) {
            auto t = enumerate_thin_orbit(orbit.member(0), kappa);
            thin.push_back(ordered_json{{"kappa", kappa},
                                        {"size", t.size()},
                                        {"count_in_orbit", orbit.size() / t.size()}});
        }
        row["thin_orbits"] = thin;
        rows.push_back(row);
    }
    std::int64_t expected = group->phi() - (o.k >= 2 ? pow_i64(o.p, o.k - 2) * (o.p - 1)
                                                     : std::int64_t{1});
    ordered_json j;
    j["tool"] = "galorb";
    j["version"] = kVersion;
    j["command"] = "orbits";
    j["config"] = config_echo(o);
    j["orbits"] = rows;
    j["primitive_total"] = total;
    j["primitive_expected"] = expected;
    if (o.format == "csv") {
        std::string text = "d,order,size,iota\n";
        for (const auto& row : rows)
            text += std::to_string(row["d"].get<std::int64_t>()) + "," +
                    std::to_string(row["order"].get<std::int64_t>()) + "," +
                    std::to_string(row["size"].get<std::int64_t>()) + "," +
                    std::to_string(row["iota"].get<int>()) + "\n";
        emit(o, text);
    } else {
        emit(o, j.dump(2));
    }
    return (o.assert_mode && total != expected) ? 1 : 0;
}

// ---------------------------------------------------------------- moment

struct MomentOpts {
    std::int64_t d = 1;
    bool thin = false;
    int kappa = 0;
    std::int64_t base_gamma = 1;
    double theta = 0.0;
    std::string mollifier_csv;
};

MomentReport run_moment(const CommonOpts& o, const MomentOpts& m) {
    auto group = UnitGroup::load_or_build(o.p, o.k, o.cache_dir);
    MollifierSpec moll;
    if (!m.mollifier_csv.empty()) {
        std::vector<std::string> warnings;
        moll = load_mollifier_csv(m.mollifier_csv, group->q(), m.theta, o.p, warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    } else {
        moll = iwaniec_sarnak_coefficients(group->q(), m.theta, o.p);
    }
    MomentEngine engine(group);
    if (m.thin) {
        DirichletCharacter base(group, m.base_gamma);
        auto orbit = enumerate_thin_orbit(base, m.kappa);
        return engine.thin_moments(orbit, moll, afe_config(o), o.workers);
    }
    auto orbit = enumerate_orbit(group, m.d);
    return engine.full_moments(orbit, moll, afe_config(o), o.workers);
}

int cmd_moment(const CommonOpts& o, const MomentOpts& m) {
    MomentReport r = run_moment(o, m);
    if (r.outside_predicted_regime)
        std::cerr << "warning: thin run outside the predicted (kappa, theta) regime\n";
    if (o.format == "csv") {
        emit(o, std::string(kMomentCsvHeader) + "\n" + moment_report_csv_row(r) + "\n");
    } else {
        ordered_json j;
        j["tool"] = "galorb";
        j["version"] = kVersion;
        j["command"] = "moment";
        j["config"] = config_echo(o);
        j["envelope"] = envelope_json();
        j["report"] = moment_report_json(r);
        emit(o, j.dump(2));
    }
    return (o.assert_mode && moment_breach(r)) ? 1 : 0;
}

// -------------------------------------------------------------- nonvanish

int cmd_nonvanish(const CommonOpts& o, MomentOpts m, std::vector<double> thetas) {
    if (thetas.empty()) thetas = {0.1, 0.2, 0.3, 0.4};
    std::vector<MomentReport> reports;
    for (double th : thetas) {
        m.theta = th;
        reports.push_back(run_moment(o, m));
    }
    bool breach = false;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (moment_breach(reports[i])) breach = true;
        if (reports[i].nonvanishing_fraction < 1.0 / 3.0) breach = true;
        if (i > 0 && reports[i].lower_bound < reports[i - 1].lower_bound) breach = true;
    }
    if (o.format == "csv") {
        std::string text = std::string(kMomentCsvHeader) + "\n";
        for (const auto& r : reports) text += moment_report_csv_row(r) + "\n";
        emit(o, text);
    } else {
        ordered_json j;
        j["tool"] = "galorb";
        j["version"] = kVersion;
        j["command"] = "nonvanish";
        j["config"] = config_echo(o);
        j["envelope"] = envelope_json();
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(moment_report_json(r));
        j["reports"] = arr;
        emit(o, j.dump(2));
    }
    return (o.assert_mode && breach) ? 1 : 0;
}

// --------------------------------------------------------------- char-avg

int cmd_char_avg(const CommonOpts& o, const MomentOpts& m, std::vector<std::int64_t> ns) {
    auto group = UnitGroup::load_or_build(o.p, o.k, o.cache_dir);
    std::vector<std::int64_t> gammas;
    std::string family;
    CyclotomicSum (*closed_full)(const OrbitSpec&, std::int64_t) = &char_average_closed;
    OrbitSpec full;
    ThinOrbitSpec thin;
    if (m.thin) {
        thin = enumerate_thin_orbit(DirichletCharacter(group, m.base_gamma), m.kappa);
        gammas = thin.gammas;
        family = "thin";
    } else {
        full = enumerate_orbit(group, m.d);
        gammas = full.gammas;
        family = "full";
    }
    (void)closed_full;
    if (ns.empty())
        for (std::int64_t n = 1; n <= std::min<std::int64_t>(group->q(), 50); ++n)
            ns.push_back(n);
    bool all_match = true;
    ordered_json rows = ordered_json::array();
    std::string csv = "n,direct_re,direct_im,closed_matches,survives\n";
    for (std::int64_t n : ns) {
        CyclotomicSum direct = char_average_direct(*group, gammas, n);
        CyclotomicSum closed = m.thin ? char_average_closed(thin, n)
                                      : char_average_closed(full, n);
        bool match = direct == closed;
        all_match = all_match && match;
        int me = m.thin ? std::min(m.kappa, o.k - 2) + 1 : o.k - 1;
        bool surv = o.k == 1 || survives(n, o.p, pow_i64(o.p, std::max(me, 1)));
        auto z = direct.to_complex();
        rows.push_back(ordered_json{{"n", n},
                                    {"direct", complex_json(z)},
                                    {"closed_matches", match},
                                    {"survives", surv}});
        csv += std::to_string(n) + "," + fmt15(z.real()) + "," + fmt15(z.imag()) + "," +
               (match ? "1" : "0") + "," + (surv ? "1" : "0") + "\n";
    }
    if (o.format == "csv") {
        emit(o, csv);
    } else {
        ordered_json j;
        j["tool"] = "galorb";
        j["version"] = kVersion;
        j["command"] = "char-avg";
        j["config"] = config_echo(o);
        j["family"] = family;
        j["orbit_size"] = gammas.size();
        j["rows"] = rows;
        emit(o, j.dump(2));
    }
    return (o.assert_mode && !all_match) ? 1 : 0;
}

// --------------------------------------------------------------- roth-scan

int cmd_roth_scan(const CommonOpts& o, double delta, int trials, std::uint64_t seed,
                  std::int64_t height) {
    const auto qk = static_cast<double>(pow_i64(o.p, o.k));
    const auto length = static_cast<std::int64_t>(std::pow(qk, 0.5 - delta));
    if (length < 1) throw CLI::ValidationError("box length below 1; raise k or lower delta");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(1, std::max<std::int64_t>(height - length, 1));
    std::string csv = "trial,a0,b0,length,total,bound\n";
    ordered_json rows = ordered_json::array();
    std::int64_t worst = 0, exceed = 0;
    for (int t = 0; t < trials; ++t) {
        BoxScan scan{o.p, o.k, delta, dist(rng), dist(rng), length};
        auto res = box_pair_count(scan);
        worst = std::max(worst, res.total);
        if (res.total > o.p - 3) ++exceed;
        csv += std::to_string(t) + "," + std::to_string(scan.a0) + "," +
               std::to_string(scan.b0) + "," + std::to_string(length) + "," +
               std::to_string(res.total) + "," + std::to_string(o.p - 3) + "\n";
        ordered_json row{{"trial", t},        {"a0", scan.a0},
                         {"b0", scan.b0},     {"length", length},
                         {"total", res.total}, {"bound", o.p - 3}};
        ordered_json pr = ordered_json::array();
        for (const auto& pair : res.pairs)
            pr.push_back(ordered_json{{"zeta", pair.zeta}, {"a", pair.a}, {"b", pair.b}});
        row["pairs"] = pr;
        rows.push_back(row);
    }
    if (o.format == "csv") {
        emit(o, csv);
    } else {
        ordered_json j;
        j["tool"] = "galorb";
        j["version"] = kVersion;
        j["command"] = "roth-scan";
        j["config"] = config_echo(o);
        j["delta"] = num15(delta);
        j["trials"] = trials;
        j["seed"] = seed;
        j["height"] = height;
        j["box_length"] = length;
        j["worst_count"] = worst;
        j["exceed_count"] = exceed;
        j["caveat"] = "ineffective-threshold";
        j["boxes"] = rows;
        emit(o, j.dump(2));
    }
    return (o.assert_mode && exceed > 0) ? 1 : 0;
}

// ------------------------------------------------------------------ verify

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::int64_t checks = 0;
    std::int64_t mismatches = 0;
};

SuiteResult suite_orthogonality(const CommonOpts& o) {
    SuiteResult res{"orthogonality"};
    auto group = UnitGroup::load_or_build(o.p, o.k, o.cache_dir);
    const std::int64_t q = group->q();
    const std::int64_t mod = pow_i64(o.p, o.k - 1);
    for (std::int64_t d = 1; d <= o.p - 1; ++d) {
        if ((o.p - 1) % d != 0) continue;
        auto orbit = enumerate_orbit(group, d);
        for (std::int64_t n = 1; n <= q; ++n) {
            CyclotomicSum direct = char_average_direct(*group, orbit.gammas, n);
            ++res.checks;
            if (!(direct == char_average_closed(orbit, n))) ++res.mismatches;
            if (n % o.p != 0 && o.k >= 2 && !survives(n, o.p, mod) && !direct.is_zero())
                ++res.mismatches;
        }
    }
    res.pass = res.mismatches == 0;
    return res;
}

SuiteResult suite_thin_orthogonality(const CommonOpts& o) {
    SuiteResult res{"thin-orthogonality"};
    auto group = UnitGroup::load_or_build(o.p, o.k, o.cache_dir);
    const std::int64_t q = group->q();
    DirichletCharacter base(group, 1);
    for (int kappa = 1; kappa <= o.k - 1; ++kappa) {
        auto orbit = enumerate_thin_orbit(base, kappa);
        int ktilde = std::min(kappa, o.k - 2);
        std::int64_t mod = pow_i64(o.p, ktilde + 1);
        for (std::int64_t n = 1; n <= q; ++n) {
            CyclotomicSum direct = char_average_direct(*group, orbit.gammas, n);
            ++res.checks;
            if (!(direct == char_average_closed(orbit, n))) ++res.mismatches;
            if (n % o.p != 0 && !survives(n, o.p, mod) && !direct.is_zero()) ++res.mismatches;
        }
    }
    res.pass = res.mismatches == 0;
    return res;
}

SuiteResult suite_oracle_equivalence(const CommonOpts& o) {
    SuiteResult res{"oracle-equivalence"};
    auto group = UnitGroup::load_or_build(o.p, o.k, o.cache_dir);
    LValueEngine eng(group);
    AfeConfig cfg = afe_config(o);
    for (std::int64_t gm = 0; gm < group->phi(); ++gm) {
        DirichletCharacter chi(group, gm);
        if (!chi.is_primitive()) continue;
        ++res.checks;
        auto a = eng.central_value_afe(chi, cfg);
        auto h = eng.central_value_hurwitz(chi, cfg);
        if (std::abs(a.value - h.value) > 1e-6) ++res.mismatches;
    }
    res.pass = res.mismatches == 0;
    return res;
}

SuiteResult suite_teichmuller(const CommonOpts&) {
    SuiteResult res{"teichmuller"};
    for (std::int64_t p : {3, 5, 7, 11}) {
        for (int k = 1; k <= 6; ++k) {
            auto roots = teichmuller_roots(p, k);
            std::vector<bool> seen(static_cast<std::size_t>(p), false);
            for (const auto& z : roots) {
                ++res.checks;
                if (!(z.pow(p - 1) == PadicInt(p, k, 1))) ++res.mismatches;
                auto r = static_cast<std::size_t>(z.residue() % p);
                if (r == 0 || seen[r]) ++res.mismatches;
                seen[r] = true;
            }
        }
    }
    res.pass = res.mismatches == 0;
    return res;
}

SuiteResult suite_refine_lemma(const CommonOpts&) {
    SuiteResult res{"refine-lemma"};
    for (std::int64_t p : {3, 5}) {
        for (int k = 1; k <= 6; ++k) {
            std::int64_t q = pow_i64(p, k);
            for (std::int64_t m = 1; m <= q; ++m) {
                auto [hyp, conc] = refine_check(m, p, k);
                if (!hyp) continue;
                ++res.checks;
                if (!conc) ++res.mismatches;
            }
        }
    }
    res.pass = res.mismatches == 0;
    return res;
}

SuiteResult suite_roth_box(const CommonOpts& o) {
    SuiteResult res{"roth-box"};
    std::mt19937_64 rng(7);
    std::int64_t p = 5;
    int k = 10;
    auto length = static_cast<std::int64_t>(std::pow(std::pow(5.0, 10), 0.4));
    std::uniform_int_distribution<std::int64_t> dist(1, 10'000'000 - length);
    for (int t = 0; t < 20; ++t) {
        BoxScan scan{p, k, 0.1, dist(rng), dist(rng), length};
        ++res.checks;
        if (box_pair_count(scan).total > p - 3) ++res.mismatches;
    }
    (void)o;
    res.pass = res.mismatches == 0;
    return res;
}

int cmd_verify(const CommonOpts& o, const std::string& suite) {
    std::vector<SuiteResult> results;
    auto run = [&](const std::string& name) {
        if (name == "orthogonality") return suite_orthogonality(o);
        if (name == "thin-orthogonality") return suite_thin_orthogonality(o);
        if (name == "oracle-equivalence") return suite_oracle_equivalence(o);
        if (name == "teichmuller") return suite_teichmuller(o);
        if (name == "refine-lemma") return suite_refine_lemma(o);
        if (name == "roth-box") return suite_roth_box(o);
        throw CLI::ValidationError("unknown suite: " + name);
    };
    if (suite == "all") {
        for (const char* n : {"orthogonality", "thin-orthogonality", "oracle-equivalence",
                              "teichmuller", "refine-lemma", "roth-box"})
            results.push_back(run(n));
    } else {
        results.push_back(run(suite));
    }
    ordered_json rows = ordered_json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        rows.push_back(ordered_json{{"suite", r.name},
                                    {"pass", r.pass},
                                    {"checks", r.checks},
                                    {"mismatches", r.mismatches}});
        all_pass = all_pass && r.pass;
        std::cerr << r.name << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.checks
                  << " checks, " << r.mismatches << " mismatches)\n";
    }
    ordered_json j;
    j["tool"] = "galorb";
    j["version"] = kVersion;
    j["command"] = "verify";
    j["config"] = config_echo(o);
    j["suites"] = rows;
    if (o.format == "csv") {
        std::string text = "suite,pass,checks,mismatches\n";
        for (const auto& r : results)
            text += r.name + "," + (r.pass ? "1" : "0") + "," + std::to_string(r.checks) +
                    "," + std::to_string(r.mismatches) + "\n";
        emit(o, text);
    } else {
        emit(o, j.dump(2));
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet L-function central values over Galois orbits mod p^k"};
    app.set_config("--config", "", "flat key=value config file; CLI flags override");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("galorb ") + kVersion);

    CommonOpts common;
    MomentOpts mopts;
    std::vector<double> thetas;
    std::vector<std::int64_t> ns;
    double delta = 0.1;
    int trials = 100;
    std::uint64_t seed = 7;
    std::int64_t height = 10'000'000;
    std::string suite = "all";

    auto* orbits_cmd = app.add_subcommand("orbits", "list Galois orbits and their thin partitions");
    add_common(orbits_cmd, common);

    auto* moment_cmd = app.add_subcommand("moment", "first/second mollified moments for one family");
    add_common(moment_cmd, common);
    moment_cmd->add_option("--d", mopts.d, "orbit order divisor d | p-1")->capture_default_str();
    moment_cmd->add_flag("--thin", mopts.thin, "use a thin orbit O_kappa");
    moment_cmd->add_option("--kappa", mopts.kappa, "thin orbit depth");
    moment_cmd->add_option("--base-gamma", mopts.base_gamma, "thin orbit base exponent")
        ->capture_default_str();
    moment_cmd->add_option("--theta", mopts.theta, "mollifier length exponent")
        ->capture_default_str();
    moment_cmd->add_option("--mollifier-csv", mopts.mollifier_csv,
                           "custom coefficient table (m,a_m rows)");

    auto* nonvanish_cmd =
        app.add_subcommand("nonvanish", "Cauchy-Schwarz non-vanishing bounds over a theta sweep");
    add_common(nonvanish_cmd, common);
    nonvanish_cmd->add_option("--d", mopts.d)->capture_default_str();
    nonvanish_cmd->add_flag("--thin", mopts.thin);
    nonvanish_cmd->add_option("--kappa", mopts.kappa);
    nonvanish_cmd->add_option("--base-gamma", mopts.base_gamma)->capture_default_str();
    nonvanish_cmd->add_option("--theta", thetas, "theta values (repeatable)");

    auto* charavg_cmd =
        app.add_subcommand("char-avg", "orbit character averages, direct vs closed form");
    add_common(charavg_cmd, common);
    charavg_cmd->add_option("--d", mopts.d)->capture_default_str();
    charavg_cmd->add_flag("--thin", mopts.thin);
    charavg_cmd->add_option("--kappa", mopts.kappa);
    charavg_cmd->add_option("--base-gamma", mopts.base_gamma)->capture_default_str();
    charavg_cmd->add_option("--n", ns, "argument values (repeatable; default 1..min(q,50))");

    auto* roth_cmd = app.add_subcommand("roth-scan", "randomized box-pair count scan");
    add_common(roth_cmd, common);
    roth_cmd->add_option("--delta", delta, "box length exponent slack")->capture_default_str();
    roth_cmd->add_option("--trials", trials)->capture_default_str();
    roth_cmd->add_option("--seed", seed)->capture_default_str();
    roth_cmd->add_option("--height", height, "largest admissible box coordinate")
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "run a named property suite");
    add_common(verify_cmd, common);
    verify_cmd->add_option("suite", suite,
                           "orthogonality | thin-orthogonality | oracle-equivalence | "
                           "teichmuller | refine-lemma | roth-box | all");

    CLI11_PARSE(app, argc, argv);

    auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        validate_common(common);
        if (*orbits_cmd) rc = cmd_orbits(common);
        if (*moment_cmd) rc = cmd_moment(common, mopts);
        if (*nonvanish_cmd) rc = cmd_nonvanish(common, mopts, thetas);
        if (*charavg_cmd) rc = cmd_char_avg(common, mopts, ns);
        if (*roth_cmd) rc = cmd_roth_scan(common, delta, trials, seed, height);
        if (*verify_cmd) rc = cmd_verify(common, suite);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    // wall time goes to stderr only, so report files stay byte-deterministic
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "wall_time_s=" << fmt15(dt) << "\n";
    return rc;
}
