#pragma once

/// Finite images of the depth-one 2-adic parameters.
///
/// SO case: m odd, chi the sign character (-,-,+,...,+) of F_2^m, F the cyclic
/// shift. The image I is generated by the diagonal sign matrices D_{e_j}
/// (D_{e_j}[i] = (chi o F^i)(e_j)) and the m-cycle P : e_i -> e_{i-1}.
///
/// G2 case: G = F_8 x| (F_8^x x| Gal(F_8/F_2)) = AGammaL(1, 8) with
/// F_8 = F_2[x]/(x^3 + x + 1) and primitive element e = x; basis e, e^2, e^4.
/// The 21-dimensional representation is Ind_J^G(psi o Tr) for the translation
/// subgroup J = F_8 and psi the nontrivial character of F_2.

#include "ggt/cyclotomic.hpp"
#include "ggt/fingroup.hpp"
#include "ggt/monomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ggt::wild {

struct WildImageSO {
    unsigned m = 0;
    std::vector<MonomialMatrix> d_gens;
    MonomialMatrix p_gen;
    FinGroup group;
};

/// m odd, 3 <= m <= 15.
WildImageSO build_so_wild(unsigned m, std::size_t bound = 1U << 20);

/// Sign tuple of chi o F^i on e_0, ..., e_{m-1}.
std::vector<int> shifted_character(unsigned m, unsigned i);

struct PropTwoReport {
    unsigned m = 0;
    std::uint64_t order = 0;
    std::uint64_t expected_order = 0;
    std::vector<std::uint64_t> abelianization;
    std::uint64_t commutator_order = 0;
    bool commutator_elementary = false;
    bool det_trivial = false;
    std::int64_t character_norm = 0;
    bool irreducible = false;
    bool selfdual = false;
    bool conjugates_distinct = false;
    bool joint_kernel_is_diagonal = false;
    bool p_det_one = false;
    bool conj_relation = false;
    /// Only evaluated for m = 7: the multiset {1^5, (-1)^2} is not G2-admissible.
    bool g2_checked = false;
    bool g2_obstruction = false;

    /// Clauses (1)-(3), irreducibility and, for m = 7, (4).
    bool all_pass() const;
};

PropTwoReport verify_prop_two(const WildImageSO& w);

struct Constituent {
    unsigned k = 0;
    std::int64_t degree = 0;
    std::int64_t norm = 0;
    std::int64_t multiplicity = 0;
    bool selfdual = false;
    bool faithful = false;
    /// Character values, one per element of the group (same indexing).
    std::vector<CyclotomicInt> values;
};

struct G2JordanGroup {
    /// AGammaL(1, 8) on the 8 points of F_8.
    FinGroup affine;
    /// The same group as 21 x 21 monomial sign matrices.
    FinGroup group;
    /// For each element of `affine`, its index in `group`.
    std::vector<std::uint32_t> to_induced;
    /// Translations, as indices into `affine`.
    Subgroup translations;
    /// Character of the 21-dimensional representation on `affine` elements.
    std::vector<std::int64_t> induced_character;
};

G2JordanGroup build_g2_jordan();

struct JordanReport {
    std::uint64_t order = 0;
    std::int64_t induced_degree = 0;
    std::int64_t induced_norm = 0;
    std::uint64_t j_order = 0;
    bool j_elementary_abelian = false;
    bool j_unique_minimal_normal = false;
    std::vector<std::uint64_t> normal_subgroup_orders;
    std::uint64_t quotient_order = 0;
    bool quotient_nonabelian = false;
    std::uint64_t stabilizer_order = 0;
    bool stabilizer_is_galois = false;
    std::uint64_t character_orbit_size = 0;
    bool constituents_sum_to_induced = false;
    bool constituents_distinct = false;
    std::vector<Constituent> constituents;

    std::size_t selfdual_count() const;
    bool all_pass() const;
};

/// Constituents Ind_T^G(theta_k), T = J x| Gal, theta_k(j s^i) = psi(Tr j) w^(k i)
/// with w = zeta_3, checked by exact inner products in Z[zeta_21].
std::vector<Constituent> mackey_decompose(const G2JordanGroup& g2j);

JordanReport verify_jordan(const G2JordanGroup& g2j);

namespace f8 {
std::uint32_t add(std::uint32_t a, std::uint32_t b);
std::uint32_t mul(std::uint32_t a, std::uint32_t b);
std::uint32_t trace(std::uint32_t a);
} // namespace f8

} // namespace ggt::wild
