#pragma once

/// Roots of unity in exponent form and Frobenius orbits on them.
///
/// A root of unity exp(2 pi i num/den) is stored as the reduced fraction
/// num/den in Q/Z, so multiplication is addition of exponents and every
/// equality test is exact.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ggt {

class RootOfUnity {
public:
    /// The identity 0/1.
    constexpr RootOfUnity() = default;
    /// exp(2 pi i num/den); normalized to 0 <= num < den, gcd(num, den) = 1.
    RootOfUnity(std::int64_t num, std::int64_t den);

    static RootOfUnity one() { return {}; }
    static RootOfUnity minus_one() { return {1, 2}; }
    /// Primitive root exp(2 pi i / n).
    static RootOfUnity primitive(std::int64_t n) { return {1, n}; }
    /// Parses "NUM/DEN" (NUM may be negative); a bare integer means NUM/1.
    static RootOfUnity parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    /// Multiplicative order; equals den() by normalization.
    std::int64_t order() const { return den_; }
    bool is_one() const { return num_ == 0; }

    RootOfUnity inverse() const;
    RootOfUnity pow(std::int64_t k) const;
    /// Exponent of this root as a power of exp(2 pi i / n); requires den() | n.
    std::int64_t exponent_mod(std::int64_t n) const;

    std::string to_string() const;

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    RootOfUnity& operator*=(const RootOfUnity& rhs) { return *this = *this * rhs; }
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    /// Orders by the exponent as a rational number in [0, 1).
    friend std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Sum of exponents of a multiset, i.e. the product of the roots.
RootOfUnity product(const std::vector<RootOfUnity>& roots);

/// The orbit {tau, tau^q, tau^(q^2), ...} under the Frobenius tau -> tau^q.
struct FrobeniusOrbit {
    std::int64_t q = 0;
    /// Frobenius order, starting at the element with the smallest exponent.
    std::vector<RootOfUnity> elements;
    bool selfdual = false;

    std::size_t size() const { return elements.size(); }
    const RootOfUnity& representative() const { return elements.front(); }
    bool contains(const RootOfUnity& r) const;
    /// Position of r in `elements`, if present.
    std::optional<std::size_t> index_of(const RootOfUnity& r) const;

    friend bool operator==(const FrobeniusOrbit&, const FrobeniusOrbit&) = default;
};

/// Full Frobenius orbit of tau; throws DomainError if q divides den(tau).
FrobeniusOrbit frobenius_orbit(const RootOfUnity& tau, std::int64_t q);

/// Runtime check of the self-dual orbit lemma: if the orbit contains the
/// inverse of its elements then its size m is even and tau^(q^(m/2)) is
/// exactly tau^-1. Throws DomainError for tau in {1, -1}.
bool check_orbit_lemma(const FrobeniusOrbit& orbit);

/// tau = 1/p with a self-dual Frobenius orbit of size exactly 2n.
/// `p` empty selects the largest prime factor of q^n + 1 satisfying
/// ord_p(q) = 2n. Throws DomainError when p is not an odd prime or the
/// order condition fails.
RootOfUnity selfdual_tau(std::int64_t q, unsigned n, std::optional<std::int64_t> p);

} // namespace ggt
