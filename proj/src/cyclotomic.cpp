#include "ggt/cyclotomic.hpp"

#include "ggt/error.hpp"
#include "ggt/numth.hpp"

#include <algorithm>

namespace ggt {

using numth::checked_add;
using numth::checked_mul;

CyclotomicInt::CyclotomicInt(std::int64_t n) : n_(n) {
    if (n <= 0)
        throw DomainError("CyclotomicInt: modulus must be positive");
    coeffs_.assign(static_cast<std::size_t>(n), 0);
}

CyclotomicInt CyclotomicInt::from_int(std::int64_t n, std::int64_t value) {
    CyclotomicInt z(n);
    z.coeffs_[0] = value;
    return z;
}

CyclotomicInt CyclotomicInt::root(std::int64_t n, std::int64_t k) {
    CyclotomicInt z(n);
    z.coeffs_[numth::mod(k, static_cast<std::uint64_t>(n))] = 1;
    return z;
}

CyclotomicInt CyclotomicInt::from_root(std::int64_t n, const RootOfUnity& r) { return root(n, r.exponent_mod(n)); }

void CyclotomicInt::require_same(const CyclotomicInt& rhs) const {
    if (rhs.n_ != n_)
        throw DomainError("CyclotomicInt: mismatched moduli " + std::to_string(n_) + " and " + std::to_string(rhs.n_));
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& rhs) {
    require_same(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& rhs) {
    require_same(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = checked_add(coeffs_[i], -rhs.coeffs_[i]);
    return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(std::int64_t s) {
    for (auto& c : coeffs_)
        c = checked_mul(c, s);
    return *this;
}

CyclotomicInt& CyclotomicInt::mul_root(std::int64_t k) {
    const auto shift = numth::mod(k, static_cast<std::uint64_t>(n_));
    std::rotate(coeffs_.rbegin(), coeffs_.rbegin() + static_cast<std::ptrdiff_t>(shift), coeffs_.rend());
    return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    a.require_same(b);
    CyclotomicInt out(a.n_);
    const auto n = static_cast<std::size_t>(a.n_);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coeffs_[j] == 0)
                continue;
            auto& slot = out.coeffs_[(i + j) % n];
            slot = checked_add(slot, checked_mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return out;
}

CyclotomicInt CyclotomicInt::operator-() const {
    CyclotomicInt out = *this;
    out *= -1;
    return out;
}

CyclotomicInt CyclotomicInt::conj() const {
    CyclotomicInt out(n_);
    const auto n = static_cast<std::size_t>(n_);
    for (std::size_t i = 0; i < n; ++i)
        out.coeffs_[(n - i) % n] = coeffs_[i];
    return out;
}

std::vector<std::int64_t> CyclotomicInt::reduced() const {
    const auto& phi = numth::cyclotomic_polynomial(static_cast<std::uint64_t>(n_));
    const std::size_t deg = phi.size() - 1;
    std::vector<std::int64_t> r = coeffs_;
    // Phi_n is monic: eliminate from the top degree down.
    for (std::size_t k = r.size(); k-- > deg;) {
        const std::int64_t c = r[k];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= deg; ++j)
            r[k - deg + j] = checked_add(r[k - deg + j], -checked_mul(c, phi[j]));
    }
    r.resize(deg);
    return r;
}

bool CyclotomicInt::is_zero() const {
    const auto r = reduced();
    return std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; });
}

std::optional<std::int64_t> CyclotomicInt::rational() const {
    const auto r = reduced();
    if (std::any_of(r.begin() + 1, r.end(), [](std::int64_t c) { return c != 0; }))
        return std::nullopt;
    return r.empty() ? 0 : r[0];
}

std::string CyclotomicInt::to_string() const {
    const auto r = reduced();
    std::string out;
    for (std::size_t k = 0; k < r.size(); ++k) {
        const std::int64_t c = r[k];
        if (c == 0)
            continue;
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        const std::int64_t a = c < 0 ? -c : c;
        if (k == 0 || a != 1)
            out += std::to_string(a);
        if (k > 0)
            out += k == 1 ? "z" : "z^" + std::to_string(k);
    }
    if (out.empty())
        out = "0";
    if (n_ > 2)
        out += " (z = zeta_" + std::to_string(n_) + ")";
    return out;
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    a.require_same(b);
    return (a - b).is_zero();
}

} // namespace ggt
