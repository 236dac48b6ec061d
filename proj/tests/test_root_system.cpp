#include "ggt/error.hpp"
#include "ggt/root_system.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

using namespace ggt::roots;
using U = std::vector<std::uint64_t>;

namespace {

std::set<std::uint64_t> as_set(const U& v) { return {v.begin(), v.end()}; }

std::vector<std::uint64_t> maximal_of(const std::string& label, Mode mode = Mode::Exact) {
    return weyl_element_orders(RootSystem::parse(label), mode).maximal;
}

} // namespace

TEST_CASE("parse and label") {
    const auto rs = RootSystem::parse("G2+A4");
    CHECK(rs.label() == "A4+G2");
    CHECK(rs.rank() == 6);
    CHECK(rs.weyl_order() == 120 * 12);
    CHECK_FALSE(rs.exceptional());
    CHECK(RootSystem::parse("E6").exceptional());
    CHECK_THROWS_AS(RootSystem::parse("D3"), ggt::DomainError);
    CHECK_THROWS_AS(RootSystem::parse("C2"), ggt::DomainError);
    CHECK_THROWS_AS(RootSystem::parse("E8+A1"), ggt::DomainError);
    CHECK_THROWS_AS(RootSystem::parse("X3"), ggt::DomainError);
}

TEST_CASE("root counts and Weyl orders") {
    for (const auto& rs : all_root_systems(8)) {
        if (!rs.irreducible())
            continue;
        const auto t = rs.components.front();
        const auto& rd = root_data(t);
        const unsigned n = t.rank;
        std::size_t expected = 0;
        switch (t.family) {
        case Family::A: expected = n * (n + 1); break;
        case Family::B:
        case Family::C: expected = 2 * n * n; break;
        case Family::D: expected = 2 * n * (n - 1); break;
        case Family::G: expected = 12; break;
        case Family::F: expected = 48; break;
        case Family::E: expected = n == 6 ? 72 : n == 7 ? 126 : 240; break;
        }
        CHECK_MESSAGE(rd.roots.size() == expected, t.label());
        CHECK(rd.positive_count * 2 == rd.roots.size());
    }
    CHECK(weyl_order_formula({Family::E, 8}) == 696729600);
}

TEST_CASE("exact enumeration counts match formulas") {
    for (const char* label : {"A1", "A3", "A5", "B2", "B4", "C3", "D4", "D5", "G2", "F4", "E6"}) {
        const auto t = CartanType::parse(label);
        CHECK_MESSAGE(enumerate_weyl(t).count == weyl_order_formula(t), label);
    }
    CHECK_THROWS_AS(enumerate_weyl({Family::E, 8}), ggt::BoundExceeded);
    CHECK_THROWS_AS(enumerate_weyl({Family::F, 4}, 1000), ggt::BoundExceeded);
}

TEST_CASE("E7 enumeration") {
    const auto e = enumerate_weyl({Family::E, 7});
    CHECK(e.count == 2903040);
    CHECK(maximal_under_divisibility(e.orders) == U{8, 12, 14, 18, 30});
}

TEST_CASE("exceptional order sets against an independent matrix enumeration") {
    CHECK(enumerate_weyl({Family::G, 2}).orders == std::set<std::uint64_t>{1, 2, 3, 6});
    CHECK(enumerate_weyl({Family::F, 4}).orders == std::set<std::uint64_t>{1, 2, 3, 4, 6, 8, 12});
    CHECK(enumerate_weyl({Family::E, 6}).orders == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 8, 9, 10, 12});
}

TEST_CASE("classical formulas agree with enumeration") {
    for (unsigned n = 2; n <= 5; ++n) {
        CartanType b{Family::B, n};
        CHECK(classical_orders(b) == enumerate_weyl(b).orders);
    }
    for (unsigned n = 3; n <= 5; ++n) {
        CartanType c{Family::C, n};
        CHECK(classical_orders(c) == enumerate_weyl(c).orders);
    }
    for (unsigned n = 1; n <= 6; ++n) {
        CartanType a{Family::A, n};
        CHECK(classical_orders(a) == enumerate_weyl(a).orders);
    }
    for (unsigned n = 4; n <= 6; ++n) {
        CartanType d{Family::D, n};
        CHECK(classical_orders(d) == enumerate_weyl(d).orders);
    }
    CHECK(classical_orders({Family::D, 5}) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 8, 12});
}

TEST_CASE("order set examples") {
    CHECK(maximal_of("A2") == U{2, 3});
    const auto g2 = weyl_element_orders(RootSystem::parse("G2"), Mode::Exact);
    CHECK(g2.orders == std::set<std::uint64_t>{1, 2, 3, 6});
    CHECK(g2.maximal == U{6});
    CHECK(maximal_of("A2+B2") == U{12});
    CHECK(maximal_of("F4") == U{8, 12});
    CHECK(maximal_of("A4+F4") == U{24, 40, 60});
    CHECK_THROWS_AS(weyl_element_orders(RootSystem::parse("E8"), Mode::Exact), ggt::BoundExceeded);
}

TEST_CASE("maximal elements are exactly the divisibility antichain") {
    const std::set<std::uint64_t> s{1, 2, 3, 4, 6, 8, 12, 5};
    CHECK(maximal_under_divisibility(s) == U{5, 8, 12});
    for (const auto& rs : all_root_systems(5)) {
        const auto os = weyl_element_orders(rs, Mode::Exact);
        for (auto o : os.orders) {
            const bool is_max = std::find(os.maximal.begin(), os.maximal.end(), o) != os.maximal.end();
            const bool dominated = std::any_of(os.orders.begin(), os.orders.end(),
                                               [&](std::uint64_t p) { return p != o && p % o == 0; });
            CHECK(is_max != dominated);
        }
        // Order sets of groups are closed under divisors.
        CHECK(divisor_closure(os.maximal) == os.orders);
    }
}

TEST_CASE("lcm combination matches direct product enumeration") {
    // Orders in W(A1) x W(A2): brute force over pairs of elements.
    const auto a1 = enumerate_weyl({Family::A, 1}).orders;
    const auto a2 = enumerate_weyl({Family::A, 2}).orders;
    const auto b2 = enumerate_weyl({Family::B, 2}).orders;
    CHECK(lcm_combine(a1, a2) == std::set<std::uint64_t>{1, 2, 3, 6});
    CHECK(lcm_combine(a2, b2) == std::set<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(weyl_element_orders(RootSystem::parse("A1+A2"), Mode::Exact).orders == lcm_combine(a1, a2));
}

TEST_CASE("sampling is seeded and thread independent") {
    const CartanType e6{Family::E, 6};
    const auto a = sampled_orders(e6, 7, 20000);
    CHECK(a == sampled_orders(e6, 7, 20000));
    const auto exact = enumerate_weyl(e6).orders;
    CHECK(std::includes(exact.begin(), exact.end(), a.begin(), a.end()));
    // Reaches elements of odd length too (e.g. order 2 reflections).
    CHECK(a.count(2) == 1);

    ::setenv("GGT_THREADS", "1", 1);
    const auto one = sampled_orders(e6, 11, 60000, false);
    ::setenv("GGT_THREADS", "3", 1);
    const auto three = sampled_orders(e6, 11, 60000, false);
    ::unsetenv("GGT_THREADS");
    CHECK(one == three);
}

TEST_CASE("sampled E8 order set") {
    const auto os = weyl_element_orders(RootSystem::parse("E8"), Mode::Sampled);
    CHECK(os.samples == kDefaultSamples);
    CHECK(os.maximal == U{14, 18, 20, 24, 30});
    CHECK(os.orders == divisor_closure({14, 18, 20, 24, 30}));
}

TEST_CASE("printed order table") {
    const auto rows = reproduce_order_table(false);
    REQUIRE(rows.size() == 29);
    for (const auto& row : rows)
        CHECK_MESSAGE(row.match, row.label);
    CHECK(rows.back().mode == Mode::Sampled);
    CHECK(rows.back().computed == U{14, 18, 20, 24, 30});
    for (const auto& row : rows) {
        if (row.label == "B4") {
            CHECK_FALSE(row.printed_antichain);
            CHECK(row.computed == U{6, 8});
        } else {
            CHECK(row.printed_antichain);
            CHECK(row.computed == row.printed);
        }
    }
}

TEST_CASE("uniqueness scans") {
    auto labels = [](const std::vector<RootSystem>& v) {
        std::vector<std::string> out;
        for (const auto& rs : v)
            out.push_back(rs.label());
        return out;
    };
    using S = std::vector<std::string>;
    CHECK(labels(uniqueness_scan(2, {6})) == S{"G2"});
    CHECK(labels(uniqueness_scan(4, {8, 12})) == S{"F4"});
    CHECK(labels(uniqueness_scan(6, {9})) == S{"E6"});
    CHECK(labels(uniqueness_scan(7, {18, 30})) == S{"E7"});
    CHECK(labels(uniqueness_scan(8, {18, 20, 30})) == S{"E8"});
    // Without the rank bound the conclusion fails: A8 has elements of order 9.
    CHECK(labels(uniqueness_scan(8, {9})).size() > 1);
}

TEST_CASE("root system enumeration") {
    // Counted independently: multisets of irreducible types by total rank.
    CHECK(all_root_systems(1).size() == 1);
    CHECK(all_root_systems(2).size() == 5);
    CHECK(all_root_systems(4).size() == 30);
    CHECK(all_root_systems(8).size() == 472);
    const auto all = all_root_systems(8);
    for (std::size_t k = 1; k < all.size(); ++k)
        CHECK(std::make_pair(all[k - 1].rank(), all[k - 1].label()) < std::make_pair(all[k].rank(), all[k].label()));
}

TEST_CASE("almost minuscule data") {
    auto data = [](const char* label) { return almost_minuscule_data(RootSystem::parse(label)); };
    CHECK(data("B3").dim == 7);
    CHECK(data("B3").zero_mult == 1);
    CHECK(data("C3").dim == 14);
    CHECK(data("C3").zero_mult == 2);
    CHECK(data("F4").dim == 26);
    CHECK(data("F4").zero_mult == 2);
    CHECK(data("G2").dim == 7);
    CHECK(data("G2").zero_mult == 1);
    for (unsigned n = 2; n <= 8; ++n) {
        const auto b = almost_minuscule_data(RootSystem({CartanType{Family::B, n}}));
        CHECK(b.dim == 2 * n + 1);
        CHECK(b.zero_mult == 1);
    }
    for (unsigned n = 3; n <= 8; ++n) {
        const auto c = almost_minuscule_data(RootSystem({CartanType{Family::C, n}}));
        CHECK(c.dim == 2 * n * n - n - 1);
        CHECK(c.zero_mult == n - 1);
    }
    // Simply laced: every root is short, so this is the adjoint representation.
    CHECK(data("E8").dim == 248);
    CHECK_THROWS_AS(almost_minuscule_data(RootSystem::parse("A1+A2")), ggt::DomainError);
}

TEST_CASE("cyclic weight permutation") {
    const auto b3 = cyclic_weight_permutation_check(RootSystem::parse("B3"), 7);
    CHECK(b3.found);
    CHECK(b3.element_order == 6);
    CHECK(b3.cycle_length == 6);
    const auto g2 = cyclic_weight_permutation_check(RootSystem::parse("G2"), 7);
    CHECK(g2.found);
    CHECK(g2.element_order == 6);
    CHECK(g2.word == std::vector<unsigned>{1, 2});
    for (unsigned n = 2; n <= 8; ++n)
        CHECK(cyclic_weight_permutation_check(RootSystem({CartanType{Family::B, n}}), 2 * n + 1).found);
    CHECK_THROWS_AS(cyclic_weight_permutation_check(RootSystem::parse("B3"), 8), ggt::DomainError);
    CHECK_THROWS_AS(cyclic_weight_permutation_check(RootSystem::parse("D4"), 8), ggt::DomainError);

    std::map<std::string, std::uint64_t> orders;
    for (const auto& c : b3.controls) {
        CHECK_MESSAGE(!c.full_cycle_found, c.name);
        orders[c.name] = c.group_order;
    }
    CHECK(b3.controls_pass());
    CHECK(orders["D4 standard"] == 192);
    CHECK(orders["B3 spin"] == 48);
    CHECK(orders["D2 standard"] == 4);
}

TEST_CASE("omission audit") {
    const auto audit = omission_audit(7);
    std::set<std::string> printed, kept;
    for (const auto& e : audit) {
        if (e.printed)
            printed.insert(e.label);
        if (e.kept_by_policy)
            kept.insert(e.label);
    }
    // Every printed row of rank <= 7 shows up.
    CHECK(printed.size() == 21);
    CHECK(kept.count("B5") == 1);
    CHECK(kept.count("A1+A4") == 0);
    CHECK(kept.count("C3") == 0);
    CHECK(kept == printed);

    std::size_t agree = 0;
    for (const auto& e : omission_audit(8))
        agree += e.printed && e.kept_by_policy ? 1 : 0;
    CHECK(agree == 29);
}
