#include "ggt/monomial.hpp"

#include "ggt/error.hpp"
#include "ggt/numth.hpp"

#include <numeric>

namespace ggt {

MonomialMatrix::MonomialMatrix(std::vector<std::uint32_t> perm, std::vector<RootOfUnity> diag)
    : perm_(std::move(perm)), diag_(std::move(diag)) {
    if (perm_.size() != diag_.size())
        throw DomainError("MonomialMatrix: permutation and diagonal lengths differ");
    std::vector<bool> seen(perm_.size(), false);
    for (auto p : perm_) {
        if (p >= perm_.size() || seen[p])
            throw DomainError("MonomialMatrix: not a permutation");
        seen[p] = true;
    }
}

MonomialMatrix MonomialMatrix::identity(std::size_t dim) {
    std::vector<std::uint32_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0U);
    return {std::move(perm), std::vector<RootOfUnity>(dim)};
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<RootOfUnity> diag) {
    std::vector<std::uint32_t> perm(diag.size());
    std::iota(perm.begin(), perm.end(), 0U);
    return {std::move(perm), std::move(diag)};
}

MonomialMatrix MonomialMatrix::permutation(std::vector<std::uint32_t> perm) {
    const auto n = perm.size();
    return {std::move(perm), std::vector<RootOfUnity>(n)};
}

bool MonomialMatrix::is_diagonal() const {
    for (std::size_t j = 0; j < perm_.size(); ++j) {
        if (perm_[j] != j)
            return false;
    }
    return true;
}

bool MonomialMatrix::is_identity() const {
    if (!is_diagonal())
        return false;
    for (const auto& d : diag_) {
        if (!d.is_one())
            return false;
    }
    return true;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.dim() != b.dim())
        throw DomainError("MonomialMatrix: dimension mismatch");
    MonomialMatrix out;
    out.perm_.resize(a.dim());
    out.diag_.resize(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        const auto mid = b.perm_[j];
        out.perm_[j] = a.perm_[mid];
        out.diag_[j] = b.diag_[j] * a.diag_[mid];
    }
    return out;
}

MonomialMatrix MonomialMatrix::inverse() const {
    MonomialMatrix out;
    out.perm_.resize(dim());
    out.diag_.resize(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        out.perm_[perm_[j]] = static_cast<std::uint32_t>(j);
        out.diag_[perm_[j]] = diag_[j].inverse();
    }
    return out;
}

MonomialMatrix MonomialMatrix::pow(std::int64_t k) const {
    MonomialMatrix base = k < 0 ? inverse() : *this;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    MonomialMatrix result = identity(dim());
    while (e > 0) {
        if (e & 1U)
            result = result * base;
        base = base * base;
        e >>= 1U;
    }
    return result;
}

int permutation_sign(const std::vector<std::uint32_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

RootOfUnity MonomialMatrix::determinant() const {
    RootOfUnity det = product(diag_);
    if (permutation_sign(perm_) < 0)
        det *= RootOfUnity::minus_one();
    return det;
}

bool MonomialMatrix::preserves_antidiagonal_form() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t mirror = n - 1 - i;
        if (perm_[mirror] != n - 1 - perm_[i])
            return false;
        if (!(diag_[i] * diag_[mirror]).is_one())
            return false;
    }
    return true;
}

std::int64_t MonomialMatrix::entry_modulus() const {
    std::uint64_t m = 1;
    for (const auto& d : diag_)
        m = numth::checked_lcm(m, static_cast<std::uint64_t>(d.den()));
    return static_cast<std::int64_t>(m);
}

} // namespace ggt
