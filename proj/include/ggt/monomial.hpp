#pragma once

#include "ggt/roots.hpp"

#include <cstdint>
#include <vector>

namespace ggt {

/// A square matrix with exactly one nonzero entry, a root of unity, in every
/// row and column. Column j holds diag[j] in row perm[j].
class MonomialMatrix {
public:
    MonomialMatrix() = default;
    MonomialMatrix(std::vector<std::uint32_t> perm, std::vector<RootOfUnity> diag);

    static MonomialMatrix identity(std::size_t dim);
    static MonomialMatrix diagonal(std::vector<RootOfUnity> diag);
    static MonomialMatrix permutation(std::vector<std::uint32_t> perm);

    std::size_t dim() const { return perm_.size(); }
    const std::vector<std::uint32_t>& perm() const { return perm_; }
    const std::vector<RootOfUnity>& diag() const { return diag_; }

    bool is_diagonal() const;
    bool is_identity() const;
    MonomialMatrix inverse() const;
    MonomialMatrix pow(std::int64_t k) const;

    /// sign(perm) * prod(diag), exactly.
    RootOfUnity determinant() const;

    /// M^T J M == J for the antidiagonal J (J_{i, dim-1-i} = 1). In terms of
    /// (perm, diag): perm commutes with i -> dim-1-i and
    /// diag[i] * diag[dim-1-i] == 1 for every i.
    bool preserves_antidiagonal_form() const;

    /// Least common multiple of the orders of the nonzero entries.
    std::int64_t entry_modulus() const;

    friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
    friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

private:
    std::vector<std::uint32_t> perm_;
    std::vector<RootOfUnity> diag_;
};

/// Sign of a permutation given as an image list.
int permutation_sign(const std::vector<std::uint32_t>& perm);

} // namespace ggt
