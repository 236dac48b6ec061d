#pragma once

/// Exact modular arithmetic, primality, multiplicative orders and
/// cyclotomic polynomial values.
///
/// Every 64-bit product goes through a 128-bit intermediate; results that do
/// not fit raise ggt::Overflow instead of wrapping.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ggt {

using BigInt = boost::multiprecision::cpp_int;

namespace numth {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, unsigned exp);
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

/// Non-negative remainder of a modulo m (m > 0).
std::uint64_t mod(std::int64_t a, std::uint64_t m);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// increasing prime order. Intended for the small moduli this library uses.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Smallest k >= 1 with a^k = 1 (mod m). Throws DomainError if gcd(a, m) != 1.
std::uint64_t mult_order(std::int64_t a, std::uint64_t m);

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
/// Results are memoized; safe to call concurrently.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n);

/// Exact value Phi_d(q) for 1 <= d <= 64, via
/// Phi_d(q) = (q^d - 1) / prod_{e | d, e < d} Phi_e(q).
BigInt cyclotomic_value(unsigned d, std::int64_t q);

/// Smallest k such that p divides |SO_{2n+1}(F_{ell^k})|, i.e.
/// min over i in 1..n of f / gcd(f, 2i) with f = ord_p(ell).
/// Throws DomainError if p == ell or p is even.
std::uint64_t min_k_order_appears(std::uint64_t ell, unsigned n, std::uint64_t p);

/// Odd primes p, q with p != q and ord_p(q) == m.
struct PrimePair {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t m = 0;

    /// Validates every invariant; throws DomainError naming the broken one.
    static PrimePair make(std::uint64_t p, std::uint64_t q, std::uint64_t m);

    friend bool operator==(const PrimePair&, const PrimePair&) = default;
};

/// All primes below `limit`, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_below(std::uint64_t limit);

} // namespace numth
} // namespace ggt
