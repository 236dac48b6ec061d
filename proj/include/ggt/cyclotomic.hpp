#pragma once

#include "ggt/roots.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ggt {

/// An element of Z[zeta_N], kept as an integer combination of the powers
/// zeta_N^0 .. zeta_N^(N-1). Equality and printing go through the canonical
/// remainder modulo the N-th cyclotomic polynomial, so two combinations are
/// equal exactly when they are equal as algebraic integers.
class CyclotomicInt {
public:
    explicit CyclotomicInt(std::int64_t n = 1);

    static CyclotomicInt from_int(std::int64_t n, std::int64_t value);
    /// zeta_n^k.
    static CyclotomicInt root(std::int64_t n, std::int64_t k);
    /// The root r; requires den(r) | n.
    static CyclotomicInt from_root(std::int64_t n, const RootOfUnity& r);

    std::int64_t modulus() const { return n_; }
    /// Raw coefficient of zeta_n^k (not reduced).
    std::int64_t coeff(std::int64_t k) const { return coeffs_[static_cast<std::size_t>(k)]; }

    CyclotomicInt& operator+=(const CyclotomicInt& rhs);
    CyclotomicInt& operator-=(const CyclotomicInt& rhs);
    CyclotomicInt& operator*=(std::int64_t s);
    /// Multiplies in place by zeta_n^k (a rotation of the coefficients).
    CyclotomicInt& mul_root(std::int64_t k);

    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
    CyclotomicInt operator-() const;

    /// Complex conjugation zeta -> zeta^-1.
    CyclotomicInt conj() const;

    /// Canonical remainder modulo Phi_n: phi(n) coefficients, lowest first.
    std::vector<std::int64_t> reduced() const;
    bool is_zero() const;
    /// The value as a rational integer when it is one.
    std::optional<std::int64_t> rational() const;

    /// e.g. "2 - z^3 + z^5 (z = zeta_21)" over the reduced form.
    std::string to_string() const;

    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);

private:
    void require_same(const CyclotomicInt& rhs) const;

    std::int64_t n_;
    std::vector<std::int64_t> coeffs_;
};

} // namespace ggt
