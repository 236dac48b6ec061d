#include <doctest.h>

#include "ggt/error.hpp"
#include "ggt/fingroup.hpp"

#include <set>

using namespace ggt;
using namespace ggt::groups;

namespace {

std::multiset<std::size_t> normal_orders(const FinGroup& g) {
    std::multiset<std::size_t> out;
    for (const auto& h : normal_subgroups(g))
        out.insert(h.order());
    return out;
}

// Normal subgroups found independently: every subgroup generated by at most
// two elements, kept when invariant under conjugation by all elements.
std::set<std::vector<std::uint32_t>> brute_normal(const FinGroup& g) {
    std::set<std::vector<std::uint32_t>> out;
    for (std::uint32_t a = 0; a < g.order(); ++a) {
        for (std::uint32_t b = a; b < g.order(); ++b) {
            const Subgroup h = generate(g, {a, b});
            if (out.count(h.members))
                continue;
            bool normal = true;
            for (std::uint32_t x = 0; x < g.order() && normal; ++x) {
                for (auto y : h.members) {
                    if (!h.contains(g.conjugate(x, y))) {
                        normal = false;
                        break;
                    }
                }
            }
            if (normal)
                out.insert(h.members);
        }
    }
    return out;
}

} // namespace

TEST_CASE("closure examples") {
    const auto w = RootOfUnity(1, 3);
    const MonomialMatrix x = MonomialMatrix::diagonal({w, w.inverse()});
    const MonomialMatrix f = MonomialMatrix::permutation({1, 0});
    const auto g = FinGroup::from_monomials({x, f});
    CHECK(g.order() == 6);
    CHECK_FALSE(g.is_abelian());

    CHECK(FinGroup::from_monomials({MonomialMatrix::identity(3)}).order() == 1);

    std::vector<MonomialMatrix> signs;
    for (std::size_t i = 0; i < 6; ++i) {
        std::vector<RootOfUnity> d(6);
        d[i] = RootOfUnity::minus_one();
        signs.push_back(MonomialMatrix::diagonal(d));
    }
    CHECK(FinGroup::from_monomials(signs).order() == 64);

    CHECK_THROWS_AS(FinGroup::from_monomials(signs, 63), BoundExceeded);
    CHECK_THROWS_AS(FinGroup::from_permutations({{0, 0}}), DomainError);
}

TEST_CASE("group element bookkeeping") {
    const auto g = metacyclic(6, 7);
    CHECK(g.order() == 42);
    CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        CHECK(g.mul(x, g.inv(x)) == g.identity());
        CHECK(g.power(x, g.element_order(x)) == g.identity());
        CHECK(42 % g.element_order(x) == 0);
    }
    std::set<std::uint64_t> orders;
    for (std::uint32_t x = 0; x < g.order(); ++x)
        orders.insert(g.element_order(x));
    CHECK(orders == std::set<std::uint64_t>{1, 2, 3, 6, 7});
    // monomial codec round trip
    const auto codec = ElementCodec::monomials(2, 6);
    const MonomialMatrix m({1, 0}, {RootOfUnity(1, 3), RootOfUnity(1, 2)});
    CHECK(codec.decode(codec.encode(m)) == m);
}

TEST_CASE("normal subgroup examples") {
    CHECK(normal_orders(metacyclic(6, 7)) == std::multiset<std::size_t>{1, 7, 14, 21, 42});
    CHECK(normal_orders(cyclic(6)) == std::multiset<std::size_t>{1, 2, 3, 6});
    CHECK(normal_orders(alternating4()) == std::multiset<std::size_t>{1, 4, 12});
    CHECK(normal_subgroups(metacyclic(6, 7), 3).size() == 3);
}

TEST_CASE("normal subgroup lattice agrees with brute force") {
    const std::vector<FinGroup> battery{metacyclic(6, 7), metacyclic(2, 3), cyclic(12), alternating4(),
                                        metacyclic(4, 5), direct_product(cyclic(2), metacyclic(2, 3))};
    for (const auto& g : battery) {
        std::set<std::vector<std::uint32_t>> lattice;
        for (const auto& h : normal_subgroups(g)) {
            CHECK(is_normal(g, h));
            lattice.insert(h.members);
        }
        CHECK(lattice == brute_normal(g));
    }
}

TEST_CASE("gamma_d examples") {
    const auto g = metacyclic(6, 7);
    CHECK(gamma_d(g, 6).order() == 7);
    CHECK(gamma_d(g, 1).order() == 42);
    CHECK(gamma_d(cyclic(6), 2).order() == 3);
    CHECK_THROWS_AS(gamma_d(g, 0), DomainError);
}

TEST_CASE("commutator and abelianization") {
    const auto a4 = alternating4();
    CHECK(abelianization(a4) == std::vector<std::uint64_t>{3});
    CHECK(commutator_subgroup(a4).order() == 4);
    const auto g = metacyclic(6, 7);
    CHECK(abelianization(g) == std::vector<std::uint64_t>{6});
    CHECK(commutator_subgroup(g).order() == 7);
    CHECK(commutator_subgroup(cyclic(10)).order() == 1);
    CHECK(abelianization(direct_product(cyclic(2), cyclic(4))) == std::vector<std::uint64_t>{2, 4});
    CHECK(abelianization(direct_product(cyclic(6), cyclic(4))) == std::vector<std::uint64_t>{2, 12});
    CHECK(abelianization(direct_product(cyclic(3), cyclic(5))) == std::vector<std::uint64_t>{15});
    CHECK(abelianization(cyclic(1)).empty());
}

TEST_CASE("type (n,p) detection") {
    const auto g = metacyclic(6, 7);
    const auto w = is_type_np(g, 6, 7);
    REQUIRE(w.has_value());
    CHECK(w->n_observed == 6);
    CHECK(g.element_order(w->delta_generator) == 7);
    CHECK_FALSE(is_type_np(g, 3, 7).has_value());
    CHECK_FALSE(is_type_np(cyclic(42), 6, 7).has_value());
    CHECK_FALSE(is_type_np(g, 6, 5).has_value());
    CHECK(is_type_np(metacyclic(2, 3), 2, 3).has_value());
    CHECK_THROWS_AS(is_type_np(g, 1, 7), DomainError);
    CHECK_THROWS_AS(is_type_np(g, 6, 9), DomainError);
    // Delta must be normal: S4-free example, A4 has no normal Z/3
    CHECK_FALSE(is_type_np(alternating4(), 2, 3).has_value());
}

TEST_CASE("ell-core and type (n,p,ell)") {
    const auto g = metacyclic(6, 7);
    const auto prod = direct_product(cyclic(5), g);
    CHECK(ell_core(prod, 5).order() == 5);
    CHECK(is_type_npl(prod, 6, 7, 5));
    CHECK(ell_core(g, 5).order() == 1);
    CHECK(is_type_npl(g, 6, 7, 5));
    CHECK_FALSE(is_type_npl(cyclic(35), 6, 7, 5));
    CHECK(ell_core(alternating4(), 2).order() == 4);
    CHECK_THROWS_AS(is_type_npl(g, 6, 7, 7), DomainError);
}

TEST_CASE("metacyclic preconditions") {
    CHECK(metacyclic(2, 3).order() == 6);
    CHECK_THROWS_AS(metacyclic(4, 7), DomainError);
    CHECK_THROWS_AS(metacyclic(2, 9), DomainError);
    CHECK_THROWS_AS(metacyclic(1, 7), DomainError);
}

TEST_CASE("quotients") {
    const auto g = metacyclic(6, 7);
    const auto n = commutator_subgroup(g);
    const auto q = quotient(g, n);
    CHECK(q.group.order() == 6);
    CHECK(q.group.is_abelian());
    for (std::uint32_t a = 0; a < g.order(); ++a) {
        for (std::uint32_t b = 0; b < g.order(); b += 5)
            REQUIRE(q.image[g.mul(a, b)] == q.group.mul(q.image[a], q.image[b]));
    }
    const Subgroup not_normal = generate(g, {g.index_of(std::vector<std::uint32_t>{0, 3, 6, 2, 5, 1, 4})});
    CHECK_THROWS_AS(quotient(g, not_normal), DomainError);
}

TEST_CASE("affine extensions") {
    const auto q = metacyclic(6, 7);
    // generators of Gamma_{6,7}: translation (order 7) and scaling (order 6)
    std::vector<std::uint64_t> mult;
    for (auto s : q.generators())
        mult.push_back(q.element_order(s) == 6 ? 4 : 1);
    const auto g = affine_extension(5, q, mult);
    CHECK(g.order() == 210);
    CHECK(ell_core(g, 5).order() == 5);
    CHECK_FALSE(g.is_abelian());
    std::vector<std::uint64_t> bad;
    for (auto s : q.generators())
        bad.push_back(q.element_order(s) == 7 ? 4 : 1);
    CHECK_THROWS_AS(affine_extension(5, q, bad), DomainError);
}
