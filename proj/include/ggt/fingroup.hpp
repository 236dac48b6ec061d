#pragma once

/// Finite groups given by generators, enumerated exactly.
///
/// Elements are flat integer tuples interpreted by an ElementCodec: either a
/// permutation (image list) or a monomial matrix (permutation followed by the
/// exponent vector of its entries modulo N). A FinGroup stores every element in
/// lexicographic order of that canonical form, so element indices, and every
/// result expressed through them, are deterministic.
///
/// Profinite statements (Gamma^d, groups of type (n,p,l), quotient lemmas)
/// are implemented for finite groups only.

#include "ggt/monomial.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace ggt {

using Element = std::vector<std::uint32_t>;

struct ElementHash {
    std::size_t operator()(const Element& e) const noexcept;
};

class ElementCodec {
public:
    enum class Kind { Permutation, Monomial };

    static ElementCodec permutations(std::size_t degree);
    static ElementCodec monomials(std::size_t dim, std::uint32_t modulus);

    Kind kind() const { return kind_; }
    /// Number of points (permutations) or matrix dimension (monomials).
    std::size_t degree() const { return degree_; }
    std::uint32_t modulus() const { return modulus_; }

    Element identity() const;
    /// Composition a * b, acting by b first.
    Element multiply(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;

    Element encode(const MonomialMatrix& m) const;
    MonomialMatrix decode(const Element& e) const;
    /// Trace of a monomial element as an exact cyclotomic integer numerator
    /// list: entry k counts fixed columns carrying zeta_N^k.
    std::vector<std::int64_t> trace_profile(const Element& e) const;

    friend bool operator==(const ElementCodec&, const ElementCodec&) = default;

private:
    Kind kind_ = Kind::Permutation;
    std::size_t degree_ = 0;
    std::uint32_t modulus_ = 1;
};

inline constexpr std::size_t kDefaultGroupBound = 100000;

class FinGroup {
public:
    /// Breadth-first product closure of the generators. Throws BoundExceeded
    /// once more than `bound` elements are found.
    static FinGroup closure(ElementCodec codec, std::vector<Element> generators,
                            std::size_t bound = kDefaultGroupBound);
    static FinGroup from_permutations(const std::vector<std::vector<std::uint32_t>>& generators,
                                      std::size_t bound = kDefaultGroupBound);
    /// Monomial generators; the exponent modulus is the lcm of all entry orders.
    static FinGroup from_monomials(const std::vector<MonomialMatrix>& generators,
                                   std::size_t bound = kDefaultGroupBound);

    const ElementCodec& codec() const { return codec_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Element>& elements() const { return elements_; }
    const Element& element(std::uint32_t i) const { return elements_[i]; }
    /// Indices of the generators (duplicates and the identity removed).
    const std::vector<std::uint32_t>& generators() const { return generators_; }

    std::optional<std::uint32_t> find(const Element& e) const;
    /// Index of e; throws DomainError if e is not in the group.
    std::uint32_t index_of(const Element& e) const;
    std::uint32_t identity() const { return identity_; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const { return inverses_[a]; }
    /// g * x * g^-1.
    std::uint32_t conjugate(std::uint32_t g, std::uint32_t x) const { return mul(mul(g, x), inv(g)); }
    std::uint32_t power(std::uint32_t a, std::uint64_t k) const;
    std::uint64_t element_order(std::uint32_t a) const;
    bool is_abelian() const;

private:
    ElementCodec codec_;
    std::vector<Element> elements_;
    std::unordered_map<Element, std::uint32_t, ElementHash> index_;
    std::vector<std::uint32_t> generators_;
    std::vector<std::uint32_t> inverses_;
    std::uint32_t identity_ = 0;
    mutable std::vector<std::uint64_t> orders_;
};

/// A subgroup of a FinGroup as a sorted list of element indices together with
/// a small generating set.
struct Subgroup {
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> generators;

    std::size_t order() const { return members.size(); }
    bool contains(std::uint32_t x) const;
    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

/// Quotient G/N realized as a permutation group on the cosets, together with
/// the projection of every element of G.
struct QuotientMap {
    FinGroup group;
    std::vector<std::uint32_t> image;
};

struct TypeNPWitness {
    /// Index (in the analyzed group) of a generator of the normal Z/p.
    std::uint32_t delta_generator = 0;
    /// Order of the conjugation image in Aut(Z/p) = (Z/p)^x.
    std::uint64_t n_observed = 0;
    /// a with g x g^-1 = x^a, one per group generator.
    std::vector<std::uint64_t> conjugation_exponents;
};

namespace groups {

Subgroup trivial_subgroup(const FinGroup& g);
Subgroup whole_group(const FinGroup& g);
/// Subgroup generated by the given elements.
Subgroup generate(const FinGroup& g, const std::vector<std::uint32_t>& gens);
/// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const FinGroup& g, const std::vector<std::uint32_t>& elems);
bool is_normal(const FinGroup& g, const Subgroup& h);
Subgroup intersect(const FinGroup& g, const Subgroup& a, const Subgroup& b);

/// Conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<std::uint32_t>> conjugacy_classes(const FinGroup& g);

/// Every normal subgroup (ordered by size, then members), optionally only
/// those of index <= max_index. Joins of normal closures of classes.
std::vector<Subgroup> normal_subgroups(const FinGroup& g, std::optional<std::size_t> max_index = std::nullopt);

/// Intersection of all normal subgroups of index <= d.
Subgroup gamma_d(const FinGroup& g, std::size_t d);

Subgroup commutator_subgroup(const FinGroup& g);
/// Invariant factors d_1 | d_2 | ... of G/[G,G] (empty for a perfect group).
std::vector<std::uint64_t> abelianization(const FinGroup& g);
/// Invariant factors of an abelian group.
std::vector<std::uint64_t> abelian_invariants(const FinGroup& g);

QuotientMap quotient(const FinGroup& g, const Subgroup& n);
/// Image of a subgroup under a quotient map, as a subgroup of the quotient.
Subgroup image(const QuotientMap& q, const Subgroup& h);

/// A normal subgroup Delta = Z/p on which inner automorphisms act through a
/// cyclic group of order exactly n. Throws DomainError for n < 2 or p not prime.
std::optional<TypeNPWitness> is_type_np(const FinGroup& g, std::uint64_t n, std::uint64_t p);

/// Largest normal ell-subgroup.
Subgroup ell_core(const FinGroup& g, std::uint64_t ell);

/// G/N of type (n,p) for some normal ell-subgroup N. All normal
/// ell-subgroups are tried; the verdict must agree with N = ell_core
/// (VerificationFailure otherwise).
bool is_type_npl(const FinGroup& g, std::uint64_t n, std::uint64_t p, std::uint64_t ell);

/// Z/p x| Z/m with faithful action, on p points: x -> x + 1 and x -> a x
/// with a of order m. Throws DomainError unless m | p - 1.
FinGroup metacyclic(std::uint64_t m, std::uint64_t p);
FinGroup cyclic(std::uint64_t n);
FinGroup alternating4();
/// Any FinGroup as a permutation group (monomials act on dim * N points).
FinGroup to_permutation_group(const FinGroup& g);
FinGroup direct_product(const FinGroup& a, const FinGroup& b);
/// Z/ell x| Q where Q (given as a permutation group) acts on Z/ell through
/// the multipliers chosen per generator of Q. Each multiplier must be a unit
/// mod ell and the assignment must define a homomorphism (checked by order).
FinGroup affine_extension(std::uint64_t ell, const FinGroup& q, const std::vector<std::uint64_t>& multipliers);

} // namespace groups
} // namespace ggt
