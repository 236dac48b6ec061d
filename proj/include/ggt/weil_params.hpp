#pragma once

/// Tame discrete-series parameters as explicit monomial matrices, their
/// finite images, G2 containment tests, and archimedean parameters.
///
/// Basis order for a tame parameter of dimension 2n+1 built from orbits
/// O_1, ..., O_s with |O_i| = 2 n_i: positions 0..n-1 hold tau_i^(q^j) for
/// j < n_i, orbit-major; position n is the line of chi_q^s; position 2n-k
/// holds the inverse of the eigenvalue at position k. The form being
/// preserved is sum x_i x_(2n-i), so the chi_q line must sit in the middle.

#include "ggt/cyclotomic.hpp"
#include "ggt/fingroup.hpp"
#include "ggt/monomial.hpp"
#include "ggt/roots.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ggt::weil {

struct TameParameter {
    unsigned n = 0;
    std::int64_t q = 0;
    std::vector<FrobeniusOrbit> orbits;
    MonomialMatrix inertia;
    MonomialMatrix frobenius;
    /// chi_q(Fr)^s on the middle coordinate: -1 for odd s, +1 for even s.
    int middle_sign = 1;

    std::size_t s() const { return orbits.size(); }
    std::size_t dim() const { return 2 * static_cast<std::size_t>(n) + 1; }
    /// Diagonal of the inertia generator, i.e. its eigenvalues in basis order.
    const std::vector<RootOfUnity>& eigenvalues() const { return inertia.diag(); }

    friend bool operator==(const TameParameter&, const TameParameter&) = default;
};

struct TameChecks {
    bool conj_relation = false;
    bool det_inertia = false;
    bool det_frobenius = false;
    bool form_inertia = false;
    bool form_frobenius = false;
    bool eigenvalues_match_orbits = false;

    bool all() const {
        return conj_relation && det_inertia && det_frobenius && form_inertia && form_frobenius &&
               eigenvalues_match_orbits;
    }
};

/// Builds the parameter from one representative per orbit. Throws DomainError
/// if an orbit is not self-dual, has size < 2, repeats, or the sizes do not
/// add up to 2n. Throws VerificationFailure if the built matrices fail det = 1.
TameParameter build_tame_parameter(std::int64_t q, const std::vector<RootOfUnity>& taus, unsigned n);
/// Single orbit through tau = 1/p.
TameParameter build_tame_parameter_prime(std::int64_t q, std::int64_t p, unsigned n);

TameChecks check_tame_parameter(const TameParameter& param);

/// Group generated by the inertia generator and the Frobenius.
FinGroup image_group(const TameParameter& param, std::size_t bound = kDefaultGroupBound);
/// Image of a single-orbit parameter with tau of prime order p; verifies the
/// order 2np (VerificationFailure otherwise).
FinGroup parameter_image(const TameParameter& param, std::size_t bound = kDefaultGroupBound);

struct G2Verdict {
    bool g2 = false;
    std::string reason;
};

/// Requires n = 3.
G2Verdict is_g2_parameter(const TameParameter& param);

/// Pairing of seven eigenvalues into {l_i, l_i^-1} (i = 1..3) and a 1 with
/// l_1 l_2 l_3 = 1, by exhaustive search. Other sizes are never admissible.
bool g2_admissible_eigenvalues(const std::vector<RootOfUnity>& eigs);

/// {l_i^(+-1)} plus 1, sorted. Throws DomainError unless l1 l2 l3 = 1.
std::vector<RootOfUnity> satake_lift_g2(const RootOfUnity& l1, const RootOfUnity& l2, const RootOfUnity& l3);

struct CharPolyShape {
    bool passes = false;
    /// Common modulus N of the coefficient ring Z[zeta_N].
    std::int64_t modulus = 1;
    /// g(x) = f(x) / (x - 1), leading coefficient first.
    std::vector<CyclotomicInt> g;
    /// Each g coefficient as an integer when it is one.
    std::vector<std::optional<std::int64_t>> g_rational;
};

/// f(x) = prod (x - l) = (x - 1) g(x) with g palindromic. The multiset must
/// have odd size, contain 1 and be closed under inversion (DomainError).
CharPolyShape char_poly_shape(const std::vector<RootOfUnity>& eigs);

struct RealParameter {
    std::vector<std::int64_t> a;
    /// (a_1, ..., a_n, -a_1, ..., -a_n, 0).
    std::vector<std::int64_t> infinitesimal_character;

    friend bool operator==(const RealParameter&, const RealParameter&) = default;
};

/// Throws DomainError on a zero entry or repeated absolute values.
RealParameter real_parameter(const std::vector<std::int64_t>& a);
/// Some signed sum e1 a1 + e2 a2 + e3 a3 vanishes.
bool is_g2_real(std::int64_t a1, std::int64_t a2, std::int64_t a3);

} // namespace ggt::weil
