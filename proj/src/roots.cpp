#include "ggt/roots.hpp"

#include "ggt/error.hpp"
#include "ggt/numth.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ggt {

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
    if (den <= 0)
        throw DomainError("RootOfUnity: denominator must be positive");
    auto n = static_cast<std::int64_t>(numth::mod(num, static_cast<std::uint64_t>(den)));
    const std::int64_t g = std::gcd(n, den);
    num_ = n / g;
    den_ = den / g;
}

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw DomainError("not an integer: '" + std::string(s) + "'");
    return v;
}

} // namespace

RootOfUnity RootOfUnity::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return {parse_int(text), 1};
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

RootOfUnity RootOfUnity::inverse() const { return {-num_, den_}; }

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
    const auto e = numth::mulmod(numth::mod(k, static_cast<std::uint64_t>(den_)),
                                 static_cast<std::uint64_t>(num_), static_cast<std::uint64_t>(den_));
    return {static_cast<std::int64_t>(e), den_};
}

std::int64_t RootOfUnity::exponent_mod(std::int64_t n) const {
    if (n <= 0 || n % den_ != 0)
        throw DomainError("exponent_mod: " + std::to_string(den_) + " does not divide " + std::to_string(n));
    return num_ * (n / den_);
}

std::string RootOfUnity::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    const auto den = static_cast<std::int64_t>(numth::checked_lcm(static_cast<std::uint64_t>(a.den_),
                                                                  static_cast<std::uint64_t>(b.den_)));
    return {numth::checked_add(numth::checked_mul(a.num_, den / a.den_), numth::checked_mul(b.num_, den / b.den_)),
            den};
}

std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs != rhs)
        return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.den_ <=> b.den_;
}

RootOfUnity product(const std::vector<RootOfUnity>& roots) {
    RootOfUnity acc;
    for (const auto& r : roots)
        acc *= r;
    return acc;
}

bool FrobeniusOrbit::contains(const RootOfUnity& r) const { return index_of(r).has_value(); }

std::optional<std::size_t> FrobeniusOrbit::index_of(const RootOfUnity& r) const {
    auto it = std::find(elements.begin(), elements.end(), r);
    if (it == elements.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
}

FrobeniusOrbit frobenius_orbit(const RootOfUnity& tau, std::int64_t q) {
    if (q < 2 || !numth::is_prime(static_cast<std::uint64_t>(q)))
        throw DomainError("frobenius_orbit: q must be prime");
    if (tau.den() % q == 0)
        throw DomainError("frobenius_orbit: q = " + std::to_string(q) + " divides the order " +
                          std::to_string(tau.den()));
    std::vector<RootOfUnity> raw;
    RootOfUnity cur = tau;
    do {
        raw.push_back(cur);
        cur = cur.pow(q);
    } while (cur != tau);

    auto start = std::min_element(raw.begin(), raw.end());
    std::rotate(raw.begin(), start, raw.end());

    FrobeniusOrbit orbit;
    orbit.q = q;
    orbit.selfdual = std::find(raw.begin(), raw.end(), tau.inverse()) != raw.end();
    orbit.elements = std::move(raw);
    return orbit;
}

bool check_orbit_lemma(const FrobeniusOrbit& orbit) {
    if (orbit.elements.empty())
        throw DomainError("check_orbit_lemma: empty orbit");
    const auto& tau = orbit.representative();
    if (tau.den() <= 2)
        throw DomainError("check_orbit_lemma: tau must differ from 1 and -1");
    if (!orbit.selfdual)
        return true;
    const std::size_t m = orbit.size();
    if (m % 2 != 0)
        return false;
    for (std::size_t i = 0; i < m; ++i) {
        if (orbit.elements[(i + m / 2) % m] != orbit.elements[i].inverse())
            return false;
    }
    return true;
}

RootOfUnity selfdual_tau(std::int64_t q, unsigned n, std::optional<std::int64_t> p) {
    if (q < 2 || !numth::is_prime(static_cast<std::uint64_t>(q)))
        throw DomainError("selfdual_tau: q must be prime");
    if (n == 0)
        throw DomainError("selfdual_tau: n must be positive");
    std::int64_t chosen = 0;
    if (p) {
        chosen = *p;
        if (chosen < 3 || !numth::is_prime(static_cast<std::uint64_t>(chosen)))
            throw DomainError("selfdual_tau: p = " + std::to_string(chosen) + " is not an odd prime");
        if (chosen == q)
            throw DomainError("selfdual_tau: p must differ from q");
        if (numth::mult_order(q, static_cast<std::uint64_t>(chosen)) != 2ULL * n)
            throw DomainError("selfdual_tau: order of q modulo p is not 2n");
    } else {
        const std::int64_t target = numth::checked_add(numth::checked_pow(q, n), 1);
        for (auto [f, e] : numth::factorize(static_cast<std::uint64_t>(target))) {
            if (f > 2 && numth::mult_order(q, f) == 2ULL * n)
                chosen = static_cast<std::int64_t>(f);
        }
        if (chosen == 0)
            throw DomainError("selfdual_tau: no prime factor of q^n + 1 has order 2n");
    }
    return RootOfUnity::primitive(chosen);
}

} // namespace ggt
