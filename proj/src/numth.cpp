#include "ggt/numth.hpp"

#include "ggt/error.hpp"

#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace ggt::numth {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw Overflow("int64 addition overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow("int64 multiplication overflow");
    return r;
}

std::int64_t checked_pow(std::int64_t base, unsigned exp) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0)
        return 0;
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a / std::gcd(a, b), b, &r))
        throw Overflow("lcm overflow");
    return r;
}

std::uint64_t mod(std::int64_t a, std::uint64_t m) {
    if (m == 0)
        throw DomainError("modulus must be positive");
    const auto sm = static_cast<__int128>(m);
    auto r = static_cast<__int128>(a) % sm;
    if (r < 0)
        r += sm;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1)
        return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1U)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : kBases) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++r;
    }
    for (auto a : kBases) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    if (n < 2)
        return out;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (auto [p, e] : factorize(n))
        phi = phi / p * (p - 1);
    return phi;
}

std::uint64_t mult_order(std::int64_t a, std::uint64_t m) {
    if (m == 0)
        throw DomainError("mult_order: modulus must be positive");
    const std::uint64_t base = mod(a, m);
    if (std::gcd(base, m) != 1)
        throw DomainError("mult_order: " + std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    if (m == 1)
        return 1;
    // The order divides phi(m); strip prime factors while the power stays 1.
    std::uint64_t order = euler_phi(m);
    for (auto [p, e] : factorize(order)) {
        for (unsigned i = 0; i < e; ++i) {
            if (powmod(base, order / p, m) != 1)
                break;
            order /= p;
        }
    }
    return order;
}

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division of `num` by the monic polynomial `den`.
Poly divide_exact(Poly num, const Poly& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size())
        throw VerificationFailure("cyclotomic division: degree mismatch");
    Poly quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        const std::int64_t c = num[k];
        quot[k - dn] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dn; ++j)
            num[k - dn + j] = checked_add(num[k - dn + j], -checked_mul(c, den[j]));
    }
    for (std::size_t j = 0; j < dn; ++j) {
        if (num[j] != 0)
            throw VerificationFailure("cyclotomic division left a remainder");
    }
    return quot;
}

std::mutex g_cyclo_mutex;
std::map<std::uint64_t, Poly> g_cyclo_cache;

} // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n) {
    if (n == 0)
        throw DomainError("cyclotomic_polynomial: index must be positive");
    {
        std::lock_guard lock(g_cyclo_mutex);
        if (auto it = g_cyclo_cache.find(n); it != g_cyclo_cache.end())
            return it->second;
    }
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::uint64_t d = 1; d < n; ++d) {
        if (n % d == 0)
            p = divide_exact(std::move(p), cyclotomic_polynomial(d));
    }
    std::lock_guard lock(g_cyclo_mutex);
    return g_cyclo_cache.emplace(n, std::move(p)).first->second;
}

BigInt cyclotomic_value(unsigned d, std::int64_t q) {
    if (d < 1 || d > 64)
        throw DomainError("cyclotomic_value: d must lie in 1..64");
    if (q == 1 || q == -1) {
        // q is itself a root of unity and the quotient recurrence is 0/0;
        // evaluate the integer polynomial instead.
        const auto& coeffs = cyclotomic_polynomial(d);
        BigInt acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = acc * q + *it;
        return acc;
    }
    const BigInt bq = q;
    BigInt num = boost::multiprecision::pow(bq, d) - 1;
    BigInt den = 1;
    for (unsigned e = 1; e < d; ++e) {
        if (d % e == 0)
            den *= cyclotomic_value(e, q);
    }
    if (num % den != 0)
        throw VerificationFailure("cyclotomic_value: inexact quotient");
    return num / den;
}

std::uint64_t min_k_order_appears(std::uint64_t ell, unsigned n, std::uint64_t p) {
    if (p == ell)
        throw DomainError("min_k_order_appears: p must differ from ell");
    if (p % 2 == 0)
        throw DomainError("min_k_order_appears: p must be odd");
    if (n == 0)
        throw DomainError("min_k_order_appears: rank must be positive");
    const std::uint64_t f = mult_order(static_cast<std::int64_t>(ell), p);
    std::uint64_t best = f;
    for (std::uint64_t i = 1; i <= n; ++i)
        best = std::min(best, f / std::gcd(f, 2 * i));
    return best;
}

PrimePair PrimePair::make(std::uint64_t p, std::uint64_t q, std::uint64_t m) {
    if (!is_prime(p) || p == 2)
        throw DomainError("PrimePair: p must be an odd prime");
    if (!is_prime(q) || q == 2)
        throw DomainError("PrimePair: q must be an odd prime");
    if (p == q)
        throw DomainError("PrimePair: p and q must differ");
    if (mult_order(static_cast<std::int64_t>(q), p) != m)
        throw DomainError("PrimePair: order of q modulo p is not " + std::to_string(m));
    return PrimePair{p, q, m};
}

std::vector<std::uint64_t> primes_below(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 3)
        return out;
    std::vector<bool> composite(limit, false);
    for (std::uint64_t i = 2; i < limit; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j < limit; j += i)
            composite[j] = true;
    }
    return out;
}

} // namespace ggt::numth
