#include <doctest.h>

#include "ggt/error.hpp"
#include "ggt/wild_two.hpp"

#include <set>

using namespace ggt;
using namespace ggt::wild;

TEST_CASE("F_8 arithmetic") {
    // x^3 = x + 1
    CHECK(f8::mul(4, 2) == 3);
    CHECK(f8::mul(2, f8::mul(2, f8::mul(2, 1))) == 3);
    std::uint32_t u = 1;
    for (int k = 0; k < 7; ++k)
        u = f8::mul(u, 2);
    CHECK(u == 1);
    int ones = 0;
    for (std::uint32_t a = 0; a < 8; ++a)
        ones += static_cast<int>(f8::trace(a));
    CHECK(ones == 4);
    CHECK(f8::trace(1) == 1);
}

TEST_CASE("SO wild image m=3 is A4") {
    const auto w = build_so_wild(3);
    CHECK(w.group.order() == 12);
    CHECK(groups::abelianization(w.group) == std::vector<std::uint64_t>{3});
    CHECK(groups::commutator_subgroup(w.group).order() == 4);
    std::multiset<std::size_t> orders;
    for (const auto& h : groups::normal_subgroups(w.group))
        orders.insert(h.order());
    CHECK(orders == std::multiset<std::size_t>{1, 4, 12});
    const auto r = verify_prop_two(w);
    CHECK(r.all_pass());
    CHECK(r.character_norm == 1);
    CHECK_FALSE(r.g2_checked);
}

TEST_CASE("SO wild images m=5,7") {
    const auto w5 = verify_prop_two(build_so_wild(5));
    CHECK(w5.order == 80);
    CHECK(w5.abelianization == std::vector<std::uint64_t>{5});
    CHECK(w5.commutator_order == 16);
    CHECK(w5.det_trivial);
    CHECK(w5.all_pass());

    const auto w7 = build_so_wild(7);
    CHECK(w7.group.order() == 448);
    const auto r7 = verify_prop_two(w7);
    CHECK(r7.g2_checked);
    CHECK(r7.g2_obstruction);
    CHECK(r7.all_pass());
    for (const auto& d : w7.d_gens) {
        int minus = 0;
        for (const auto& e : d.diag())
            minus += e == RootOfUnity::minus_one();
        CHECK(minus == 2);
    }
}

TEST_CASE("SO wild preconditions") {
    CHECK_THROWS_AS(build_so_wild(2), DomainError);
    CHECK_THROWS_AS(build_so_wild(1), DomainError);
    CHECK_THROWS_AS(build_so_wild(17), DomainError);
}

TEST_CASE("shifted characters") {
    CHECK(shifted_character(5, 0) == std::vector<int>{-1, -1, 1, 1, 1});
    CHECK(shifted_character(5, 1) == std::vector<int>{-1, 1, 1, 1, -1});
}

TEST_CASE("G2 Jordan group") {
    const auto g2j = build_g2_jordan();
    CHECK(g2j.group.order() == 168);
    CHECK(g2j.group.codec().degree() == 21);
    CHECK(g2j.induced_character[g2j.affine.identity()] == 21);
    const auto r = verify_jordan(g2j);
    CHECK(r.j_order == 8);
    CHECK(r.j_unique_minimal_normal);
    CHECK(r.normal_subgroup_orders == std::vector<std::uint64_t>{1, 8, 56, 168});
    CHECK(r.quotient_order == 21);
    CHECK(r.stabilizer_order == 3);
    CHECK(r.character_orbit_size == 7);
    CHECK(r.induced_norm == 3);
    REQUIRE(r.constituents.size() == 3);
    for (const auto& c : r.constituents) {
        CHECK(c.degree == 7);
        CHECK(c.norm == 1);
        CHECK(c.multiplicity == 1);
        CHECK(c.faithful);
    }
    CHECK(r.selfdual_count() == 1);
    CHECK(r.constituents[0].selfdual);
    CHECK(r.all_pass());
}
