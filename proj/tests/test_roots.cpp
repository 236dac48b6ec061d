#include <doctest.h>

#include "ggt/error.hpp"
#include "ggt/numth.hpp"
#include "ggt/roots.hpp"

#include <map>
#include <set>

using namespace ggt;

namespace {
std::vector<std::int64_t> nums(const FrobeniusOrbit& o) {
    std::vector<std::int64_t> out;
    for (const auto& r : o.elements)
        out.push_back(r.num());
    return out;
}
} // namespace

TEST_CASE("RootOfUnity normalization and arithmetic") {
    const RootOfUnity a(-1, 3);
    CHECK(a.num() == 2);
    CHECK(a.den() == 3);
    CHECK(RootOfUnity(4, 6) == RootOfUnity(2, 3));
    CHECK(RootOfUnity(5, 5).is_one());
    CHECK((RootOfUnity(1, 3) * RootOfUnity(1, 6)) == RootOfUnity::minus_one());
    CHECK(RootOfUnity(1, 7).pow(7).is_one());
    CHECK(RootOfUnity(3, 7).inverse() == RootOfUnity(4, 7));
    CHECK(RootOfUnity(1, 4).order() == 4);
    CHECK(RootOfUnity(1, 6).exponent_mod(42) == 7);
    CHECK_THROWS_AS(RootOfUnity(1, 6).exponent_mod(21), DomainError);
    CHECK_THROWS_AS(RootOfUnity(1, 0), DomainError);
    CHECK(RootOfUnity::parse("-1/7") == RootOfUnity(6, 7));
    CHECK(RootOfUnity::parse("0/1").is_one());
    CHECK(RootOfUnity::parse("1/2") == RootOfUnity::minus_one());
    CHECK_THROWS_AS(RootOfUnity::parse("x/2"), DomainError);
    CHECK(RootOfUnity(1, 3) < RootOfUnity(1, 2));
}

TEST_CASE("frobenius_orbit examples") {
    const auto o = frobenius_orbit(RootOfUnity(1, 43), 7);
    CHECK(nums(o) == std::vector<std::int64_t>{1, 7, 6, 42, 36, 37});
    CHECK(o.size() == 6);
    CHECK(o.selfdual);

    const auto one = frobenius_orbit(RootOfUnity(0, 1), 5);
    CHECK(one.size() == 1);
    CHECK(one.selfdual);

    const auto o9 = frobenius_orbit(RootOfUnity(1, 9), 5);
    CHECK(nums(o9) == std::vector<std::int64_t>{1, 5, 7, 8, 4, 2});
    CHECK(o9.selfdual);

    // canonical start: the orbit of 7/43 is the same list
    CHECK(frobenius_orbit(RootOfUnity(36, 43), 7) == o);

    CHECK_THROWS_AS(frobenius_orbit(RootOfUnity(1, 14), 7), DomainError);
    CHECK_THROWS_AS(frobenius_orbit(RootOfUnity(1, 5), 4), DomainError);

    // 2 has order 3 mod 7: orbit of 1/7 under 2 is not self-dual
    CHECK_FALSE(frobenius_orbit(RootOfUnity(1, 7), 2).selfdual);
}

TEST_CASE("check_orbit_lemma examples") {
    CHECK(check_orbit_lemma(frobenius_orbit(RootOfUnity(1, 43), 7)));
    CHECK(check_orbit_lemma(frobenius_orbit(RootOfUnity(1, 9), 5)));
    CHECK_THROWS_AS(check_orbit_lemma(frobenius_orbit(RootOfUnity(1, 2), 3)), DomainError);
    CHECK_THROWS_AS(check_orbit_lemma(frobenius_orbit(RootOfUnity(0, 1), 3)), DomainError);
}

TEST_CASE("selfdual_tau") {
    CHECK(selfdual_tau(7, 3, 43) == RootOfUnity(1, 43));
    CHECK(selfdual_tau(5, 1, 3) == RootOfUnity(1, 3));
    CHECK_THROWS_AS(selfdual_tau(5, 3, 9), DomainError);
    CHECK_THROWS_AS(selfdual_tau(7, 2, 43), DomainError);
    CHECK(selfdual_tau(7, 3, std::nullopt) == RootOfUnity(1, 43));
    CHECK(selfdual_tau(5, 3, std::nullopt) == RootOfUnity(1, 7));
    CHECK(selfdual_tau(3, 4, std::nullopt) == RootOfUnity(1, 41));
}

TEST_CASE("orbit invariants: Frobenius step and self-duality flag") {
    for (std::int64_t q : {3, 5, 7, 11, 13}) {
        for (std::int64_t N = 1; N <= 60; ++N) {
            if (N % q == 0)
                continue;
            for (std::int64_t k = 0; k < N; ++k) {
                const RootOfUnity tau(k, N);
                const auto o = frobenius_orbit(tau, q);
                std::set<RootOfUnity> distinct(o.elements.begin(), o.elements.end());
                REQUIRE(distinct.size() == o.size());
                for (std::size_t i = 0; i < o.size(); ++i)
                    REQUIRE(o.elements[i].pow(q) == o.elements[(i + 1) % o.size()]);
                REQUIRE(o.selfdual == o.contains(tau.inverse()));
                REQUIRE(o.contains(tau));
            }
        }
    }
}

TEST_CASE("frobenius orbits partition the roots of each order") {
    for (std::int64_t q : {3, 5, 7}) {
        for (std::int64_t N = 1; N <= 100; ++N) {
            if (N % q == 0)
                continue;
            std::map<RootOfUnity, FrobeniusOrbit> by_root;
            for (std::int64_t k = 0; k < N; ++k) {
                const RootOfUnity tau(k, N);
                by_root.emplace(tau, frobenius_orbit(tau, q));
            }
            for (const auto& [a, oa] : by_root) {
                for (const auto& [b, ob] : by_root) {
                    const bool meet = oa.contains(b);
                    REQUIRE((oa == ob) == meet);
                }
            }
        }
    }
}

TEST_CASE("orbit lemma on a sample of primes and orders") {
    for (std::int64_t q : {3, 5, 7, 11, 13}) {
        for (std::int64_t N = 3; N <= 120; ++N) {
            if (N % q == 0)
                continue;
            for (std::int64_t k = 1; k < N; ++k) {
                const RootOfUnity tau(k, N);
                if (tau.den() <= 2)
                    continue;
                REQUIRE(check_orbit_lemma(frobenius_orbit(tau, q)));
            }
        }
    }
}
