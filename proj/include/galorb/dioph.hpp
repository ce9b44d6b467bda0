#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "galorb/padic.hpp"

namespace galorb {

/// One record-setting rational approximation to a Teichmuller root:
/// v = v_p(a - b zeta), capped at the working precision k.
struct ApproxRecord {
    std::int64_t a = 0;
    std::int64_t b = 0;
    int valuation = 0;
};

/// Record profile of v_p(a - b zeta) over pairs |a|, |b| <= height_bound with
/// gcd(b, p) = 1, scanned in increasing |b|. zeta is selected by its
/// reduction mod p (2 <= zeta_index <= p-2: the roots +-1 are excluded as
/// rational). Each entry strictly improves the best valuation seen so far.
std::vector<ApproxRecord> best_approximations(int zeta_index, std::int64_t p, int k,
                                              std::int64_t height_bound);

/// A box-pair scan instance: count pairs a in [a0, a0+length),
/// b in [b0, b0+length) with gcd(ab, p) = 1, a != +-b mod p^{k-1} and
/// a^{p-1} = b^{p-1} mod p^{k-1}.
struct BoxScan {
    std::int64_t p = 0;
    int k = 0;
    double delta = 0.1;  // boxes must have length <= (p^k)^{1/2 - delta}
    std::int64_t a0 = 0;
    std::int64_t b0 = 0;
    std::int64_t length = 0;
};

struct BoxPair {
    std::int64_t zeta = 0;  // a = zeta b mod p^{k-1}
    std::int64_t a = 0;
    std::int64_t b = 0;
};

struct BoxScanResult {
    std::int64_t total = 0;
    std::map<std::int64_t, std::int64_t> per_root;
    std::vector<BoxPair> pairs;
};

/// Exhaustive count for one box; refuses intervals longer than
/// (p^k)^{1/2 - delta} (the bound is not claimed there). Every counted pair
/// re-verifies its defining congruences independently of the search path.
BoxScanResult box_pair_count(const BoxScan& scan);

}  // namespace galorb
