#include "ggt/prime_search.hpp"

#include "ggt/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ggt::prime_search {

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    return out.str();
}

const std::vector<std::uint64_t>& sieve_for(std::uint64_t ceiling) {
    static const auto cached = numth::primes_below(kDefaultCeiling);
    if (ceiling <= kDefaultCeiling)
        return cached;
    thread_local std::vector<std::uint64_t> local;
    thread_local std::uint64_t local_ceiling = 0;
    if (local_ceiling != ceiling) {
        local = numth::primes_below(ceiling);
        local_ceiling = ceiling;
    }
    return local;
}

std::vector<std::uint64_t> condition3_values(std::uint64_t f, unsigned n) {
    std::vector<std::uint64_t> out;
    for (unsigned i = 1; i <= n; ++i)
        out.push_back(f / std::gcd(f, std::uint64_t{2} * i));
    return out;
}

} // namespace

std::uint64_t SearchRequest::effective_conductor_bound() const {
    return conductor_bound.value_or(std::max<std::uint64_t>(2, numth::checked_mul(4, static_cast<std::int64_t>(d))));
}

void SearchRequest::validate() const {
    if (n == 0)
        throw DomainError("search: n must be positive");
    if (!numth::is_prime(ell))
        throw DomainError("search: ell must be prime");
    if (t == 0 || d == 0)
        throw DomainError("search: t and d must be positive");
    if (conductor_bound && *conductor_bound == 0)
        throw DomainError("search: conductor bound must be positive");
    if (ceiling < 3 || ceiling > 100000000)
        throw DomainError("search: ceiling must lie in 3..10^8");
}

bool SearchCertificate::all_pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

bool check_condition3(std::uint64_t p, std::uint64_t ell, std::uint64_t t, unsigned n) {
    if (p == ell)
        throw DomainError("check_condition3: p must differ from ell");
    if (t == 0)
        throw DomainError("check_condition3: t must be positive");
    const auto f = numth::mult_order(static_cast<std::int64_t>(ell), p);
    for (auto v : condition3_values(f, n)) {
        if (v % t != 0)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> surrogate_moduli(std::uint64_t ell, std::uint64_t d, std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 1; a <= bound; a *= 2) {
        for (std::uint64_t N = a; N <= bound; N *= ell) {
            if (numth::euler_phi(N) <= d)
                out.push_back(N);
            if (ell == 2)
                break;
        }
        if (a > bound / 2)
            break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool splits_in_cyclotomic_surrogate(std::uint64_t q, std::uint64_t ell, std::uint64_t d, std::uint64_t bound) {
    if (q == 2 || q == ell)
        throw DomainError("surrogate: q must differ from 2 and ell");
    for (auto N : surrogate_moduli(ell, d, bound)) {
        if (q % N != 1 % N)
            return false;
    }
    return true;
}

SearchCertificate find_pq(const SearchRequest& req) {
    req.validate();
    const std::uint64_t m = 2ULL * req.n;
    const std::uint64_t bound = req.effective_conductor_bound();
    const auto moduli = surrogate_moduli(req.ell, req.d, bound);
    std::uint64_t M = 1;
    for (auto N : moduli)
        M = numth::checked_lcm(M, N);

    const auto& primes = sieve_for(req.ceiling);
    for (auto p : primes) {
        if (p >= req.ceiling)
            break;
        if (p == 2 || p == req.ell || p <= req.d || (p - 1) % m != 0)
            continue;
        if (!check_condition3(p, req.ell, req.t, req.n))
            continue;
        for (auto q : primes) {
            if (q >= req.ceiling)
                break;
            if (q == 2 || q == req.ell || q == p || q % M != 1 % M)
                continue;
            if (numth::powmod(q, m, p) != 1 || numth::mult_order(static_cast<std::int64_t>(q), p) != m)
                continue;

            SearchCertificate c;
            c.pair = numth::PrimePair::make(p, q, m);
            c.n = req.n;
            c.ell = req.ell;
            c.t = req.t;
            c.d = req.d;
            c.conductor_bound = bound;
            c.k_min = numth::min_k_order_appears(req.ell, req.n, p);
            c.f = numth::mult_order(static_cast<std::int64_t>(req.ell), p);
            c.condition3_values = condition3_values(c.f, req.n);
            c.surrogate_moduli = moduli;
            for (std::uint64_t k = 1; k <= m; ++k)
                c.order_trace.push_back(numth::powmod(q, k, p));
            c.ell_is_two = req.ell == 2;
            c.checks = validate_certificate(c);
            if (!c.all_pass())
                throw VerificationFailure("find_pq: independent validation rejected (" + std::to_string(p) + ", " +
                                          std::to_string(q) + ")");
            return c;
        }
    }
    throw SearchExhausted("find_pq: no prime pair below " + std::to_string(req.ceiling));
}

// ---- independent validation ----

namespace {

bool trial_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0)
            return false;
    }
    return true;
}

// Orders by repeated multiplication.
std::uint64_t brute_order(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0)
        return 0;
    std::uint64_t x = a;
    std::uint64_t k = 1;
    while (x != 1) {
        x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * a) % p);
        ++k;
    }
    return k;
}

std::uint64_t brute_phi(std::uint64_t N) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= N; ++k)
        c += std::gcd(k, N) == 1;
    return c;
}

bool only_two_and(std::uint64_t N, std::uint64_t ell) {
    while (N % 2 == 0)
        N /= 2;
    while (N % ell == 0)
        N /= ell;
    return N == 1;
}

} // namespace

std::vector<ConditionCheck> validate_certificate(const SearchCertificate& cert) {
    const auto p = cert.pair.p;
    const auto q = cert.pair.q;
    const auto ell = cert.ell;
    std::vector<ConditionCheck> out;

    {
        const bool ok = trial_prime(p) && trial_prime(q) && trial_prime(ell) && p % 2 == 1 && q % 2 == 1 &&
                        p != q && p != ell && q != ell;
        out.push_back({"distinct_primes", ok,
                       "l=" + std::to_string(ell) + " p=" + std::to_string(p) + " q=" + std::to_string(q)});
    }
    out.push_back({"p_exceeds_d", p > cert.d, std::to_string(p) + " > " + std::to_string(cert.d)});

    {
        // every k with p | |SO_{2n+1}(F_{l^k})| must be divisible by t; scan one full period and the next.
        const auto f = brute_order(ell, p);
        bool ok = f != 0;
        std::vector<std::uint64_t> hits;
        std::uint64_t lk = 1;
        for (std::uint64_t k = 1; ok && k <= 2 * f; ++k) {
            lk = static_cast<std::uint64_t>((static_cast<unsigned __int128>(lk) * ell) % p);
            std::uint64_t lk2 = static_cast<std::uint64_t>((static_cast<unsigned __int128>(lk) * lk) % p);
            std::uint64_t power = 1;
            bool divides = false;
            for (unsigned i = 1; i <= cert.n; ++i) {
                power = static_cast<std::uint64_t>((static_cast<unsigned __int128>(power) * lk2) % p);
                if (power == 1)
                    divides = true;
            }
            if (divides) {
                if (hits.size() < 8)
                    hits.push_back(k);
                if (k % cert.t != 0)
                    ok = false;
            }
        }
        out.push_back({"condition3", ok,
                       "ord_p(l)=" + std::to_string(f) + " first k with p | |SO|: " + join(hits) +
                           " t=" + std::to_string(cert.t)});
    }

    {
        bool ok = true;
        std::vector<std::uint64_t> used;
        for (std::uint64_t N = 1; N <= cert.conductor_bound; ++N) {
            if (!only_two_and(N, ell) || brute_phi(N) > cert.d)
                continue;
            used.push_back(N);
            if (q % N != 1 % N)
                ok = false;
        }
        out.push_back({"splitting_surrogate", ok,
                       "surrogate: q = 1 mod N for N in {" + join(used) + "}, conductor bound " +
                           std::to_string(cert.conductor_bound)});
    }

    {
        std::vector<std::uint64_t> trace;
        std::uint64_t x = 1;
        for (std::uint64_t k = 1; k <= 2ULL * cert.n; ++k) {
            x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * q) % p);
            trace.push_back(x);
        }
        const bool ok = brute_order(q, p) == 2ULL * cert.n && trace == cert.order_trace;
        out.push_back({"order_of_q", ok, "q^k mod p, k=1.." + std::to_string(2 * cert.n) + ": " + join(trace)});
    }
    return out;
}

} // namespace ggt::prime_search
