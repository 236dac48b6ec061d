#pragma once

/// Search for prime pairs (p, q) with ord_p(q) = 2n and the auxiliary
/// congruence conditions, plus an independent re-validation path.
///
/// The complete-splitting condition on q is replaced by a cyclotomic
/// surrogate: q = 1 (mod N) for every N = 2^a ell^b <= conductor_bound with
/// phi(N) <= d. Reports label it as a surrogate.

#include "ggt/numth.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ggt::prime_search {

inline constexpr std::uint64_t kDefaultCeiling = 1000000;

struct SearchRequest {
    unsigned n = 1;
    std::uint64_t ell = 2;
    std::uint64_t t = 1;
    std::uint64_t d = 1;
    /// Empty means 4d, which covers every N = 2^a ell^b with phi(N) <= d.
    std::optional<std::uint64_t> conductor_bound;
    /// Exclusive upper bound for both p and q.
    std::uint64_t ceiling = kDefaultCeiling;

    std::uint64_t effective_conductor_bound() const;
    void validate() const;
};

struct ConditionCheck {
    std::string name;
    bool pass = false;
    std::string witness;

    friend bool operator==(const ConditionCheck&, const ConditionCheck&) = default;
};

struct SearchCertificate {
    numth::PrimePair pair;
    unsigned n = 1;
    std::uint64_t ell = 2;
    std::uint64_t t = 1;
    std::uint64_t d = 1;
    std::uint64_t conductor_bound = 1;
    std::uint64_t k_min = 1;
    /// ord_p(ell).
    std::uint64_t f = 1;
    /// f / gcd(f, 2i) for i = 1..n.
    std::vector<std::uint64_t> condition3_values;
    /// Moduli N of the splitting surrogate.
    std::vector<std::uint64_t> surrogate_moduli;
    /// q^k mod p for k = 1..2n.
    std::vector<std::uint64_t> order_trace;
    bool ell_is_two = false;
    std::vector<ConditionCheck> checks;

    bool all_pass() const;
    friend bool operator==(const SearchCertificate&, const SearchCertificate&) = default;
};

/// t divides f / gcd(f, 2i) for every i in 1..n, f = ord_p(ell).
bool check_condition3(std::uint64_t p, std::uint64_t ell, std::uint64_t t, unsigned n);

/// All N = 2^a ell^b <= bound with phi(N) <= d, ascending.
std::vector<std::uint64_t> surrogate_moduli(std::uint64_t ell, std::uint64_t d, std::uint64_t bound);

bool splits_in_cyclotomic_surrogate(std::uint64_t q, std::uint64_t ell, std::uint64_t d, std::uint64_t bound);

/// Lexicographically smallest (p, q). Throws SearchExhausted when nothing
/// exists below the ceiling.
SearchCertificate find_pq(const SearchRequest& req);

/// Recomputes every condition from scratch with trial division and brute
/// force (no shared code with the search) and returns one check per condition.
std::vector<ConditionCheck> validate_certificate(const SearchCertificate& cert);

} // namespace ggt::prime_search
