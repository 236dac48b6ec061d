#include <doctest.h>

#include "ggt/error.hpp"
#include "ggt/numth.hpp"
#include "ggt/weil_params.hpp"

#include <algorithm>

using namespace ggt;
using namespace ggt::weil;

namespace {

std::vector<std::int64_t> exps(const std::vector<RootOfUnity>& v, std::int64_t N) {
    std::vector<std::int64_t> out;
    for (const auto& r : v)
        out.push_back(r.exponent_mod(N));
    return out;
}

std::vector<RootOfUnity> roots(std::initializer_list<const char*> spec) {
    std::vector<RootOfUnity> out;
    for (const char* s : spec)
        out.push_back(RootOfUnity::parse(s));
    return out;
}

std::vector<std::optional<std::int64_t>> ints(std::initializer_list<std::int64_t> v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("tame parameter q=5, tau=1/3, n=1") {
    const auto param = build_tame_parameter(5, {RootOfUnity(1, 3)}, 1);
    CHECK(param.dim() == 3);
    CHECK(exps(param.eigenvalues(), 3) == std::vector<std::int64_t>{1, 0, 2});
    CHECK(param.frobenius.perm() == std::vector<std::uint32_t>{2, 1, 0});
    CHECK(param.frobenius.diag()[1] == RootOfUnity::minus_one());
    CHECK(param.frobenius.determinant().is_one());
    CHECK(check_tame_parameter(param).all());
    const auto g = parameter_image(param);
    CHECK(g.order() == 6);
    CHECK_FALSE(g.is_abelian());
}

TEST_CASE("tame parameter q=7, tau=1/43, n=3") {
    const auto param = build_tame_parameter_prime(7, 43, 3);
    CHECK(param.dim() == 7);
    CHECK(exps(param.eigenvalues(), 43) == std::vector<std::int64_t>{1, 7, 6, 0, 37, 36, 42});
    CHECK(check_tame_parameter(param).all());
    const auto g = parameter_image(param);
    CHECK(g.order() == 258);
    const auto inertia_only = FinGroup::from_monomials({param.inertia});
    CHECK(inertia_only.order() == 43);
    const auto verdict = is_g2_parameter(param);
    CHECK(verdict.g2);
    CHECK(g2_admissible_eigenvalues(param.eigenvalues()));
}

TEST_CASE("tame parameter preconditions") {
    CHECK_THROWS_AS(build_tame_parameter(5, {RootOfUnity(1, 2)}, 1), DomainError);
    CHECK_THROWS_AS(build_tame_parameter(5, {RootOfUnity(1, 3)}, 2), DomainError);
    CHECK_THROWS_AS(build_tame_parameter(2, {RootOfUnity(1, 7)}, 3), DomainError); // not self-dual
    CHECK_THROWS_AS(build_tame_parameter(13, {RootOfUnity(1, 7), RootOfUnity(6, 7)}, 2), DomainError);
    CHECK_THROWS_AS(build_tame_parameter(5, {RootOfUnity(1, 5)}, 1), DomainError);
}

TEST_CASE("is_g2_parameter") {
    CHECK_FALSE(is_g2_parameter(build_tame_parameter(5, {RootOfUnity(1, 9)}, 3)).g2);
    // q = 13 = -1 mod 7: orbits {+-1}, {+-2}, {+-4}
    const auto three = build_tame_parameter(13, {RootOfUnity(1, 7), RootOfUnity(2, 7), RootOfUnity(4, 7)}, 3);
    CHECK(three.s() == 3);
    CHECK(three.middle_sign == -1);
    CHECK(check_tame_parameter(three).all());
    CHECK(is_g2_parameter(three).g2);
    // orbits {+-1/5}, {+-2/5}, {+-1/3}: no signed product is 1
    const auto mixed = build_tame_parameter(29, {RootOfUnity(1, 5), RootOfUnity(2, 5), RootOfUnity(1, 3)}, 3);
    CHECK_FALSE(is_g2_parameter(mixed).g2);
    CHECK_FALSE(g2_admissible_eigenvalues(mixed.eigenvalues()));
    CHECK_THROWS_AS(is_g2_parameter(build_tame_parameter(5, {RootOfUnity(1, 3)}, 1)), DomainError);
    // s = 2 never qualifies
    const auto two = build_tame_parameter(5, {RootOfUnity(1, 3), RootOfUnity(1, 13)}, 3);
    CHECK(two.middle_sign == 1);
    CHECK(check_tame_parameter(two).all());
    CHECK_FALSE(is_g2_parameter(two).g2);
}

TEST_CASE("g2_admissible_eigenvalues") {
    CHECK_FALSE(g2_admissible_eigenvalues(roots({"0/1", "0/1", "0/1", "0/1", "0/1", "1/2", "1/2"})));
    CHECK(g2_admissible_eigenvalues(std::vector<RootOfUnity>(7)));
    CHECK(g2_admissible_eigenvalues(roots({"1/7", "-1/7", "2/7", "-2/7", "4/7", "-4/7", "0/1"})));
    CHECK(g2_admissible_eigenvalues(roots({"1/7", "-1/7", "2/7", "-2/7", "3/7", "-3/7", "0/1"})));
    CHECK_FALSE(g2_admissible_eigenvalues(roots({"1/5", "-1/5", "1/5", "-1/5", "1/5", "-1/5", "0/1"})));
    CHECK_FALSE(g2_admissible_eigenvalues(roots({"1/7", "-1/7", "2/7", "-2/7", "4/7", "-4/7"})));
    CHECK_FALSE(g2_admissible_eigenvalues(roots({"1/3", "1/3", "1/3", "1/3", "1/3", "1/3", "1/3"})));
}

TEST_CASE("satake_lift_g2") {
    CHECK(satake_lift_g2({}, {}, {}) == std::vector<RootOfUnity>(7));
    const auto lift = satake_lift_g2(RootOfUnity(1, 7), RootOfUnity(2, 7), RootOfUnity(4, 7));
    CHECK(exps(lift, 7) == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(satake_lift_g2(RootOfUnity(1, 3), RootOfUnity(1, 3), {}), DomainError);
}

TEST_CASE("satake lift is always admissible") {
    for (std::int64_t N = 1; N <= 24; ++N) {
        for (std::int64_t a = 0; a < N; ++a) {
            for (std::int64_t b = 0; b < N; ++b) {
                const RootOfUnity l1(a, N), l2(b, N);
                const auto l3 = (l1 * l2).inverse();
                REQUIRE(g2_admissible_eigenvalues(satake_lift_g2(l1, l2, l3)));
            }
        }
    }
}

TEST_CASE("char_poly_shape") {
    auto s = char_poly_shape(std::vector<RootOfUnity>(7));
    CHECK(s.passes);
    CHECK(s.g_rational == ints({1, -6, 15, -20, 15, -6, 1}));

    s = char_poly_shape(roots({"1/2", "1/2", "0/1", "0/1", "0/1", "0/1", "0/1"}));
    CHECK(s.passes);
    CHECK(s.g_rational == ints({1, -2, -1, 4, -1, -2, 1}));

    s = char_poly_shape(roots({"1/7", "-1/7", "2/7", "-2/7", "4/7", "-4/7", "0/1"}));
    CHECK(s.passes);
    CHECK(s.g_rational == ints({1, 1, 1, 1, 1, 1, 1}));

    s = char_poly_shape(build_tame_parameter(5, {RootOfUnity(1, 9)}, 3).eigenvalues());
    CHECK(s.passes);
    CHECK(s.g_rational == ints({1, 0, 0, 1, 0, 0, 1}));

    // tau = 1/43: coefficients are not all rational but g is still palindromic
    s = char_poly_shape(build_tame_parameter_prime(7, 43, 3).eigenvalues());
    CHECK(s.passes);
    CHECK(s.g_rational.front() == 1);

    CHECK_THROWS_AS(char_poly_shape(roots({"1/3", "2/3", "0/1", "0/1", "0/1", "0/1", "1/5"})), DomainError);
    CHECK_THROWS_AS(char_poly_shape(roots({"1/3", "2/3", "1/2", "1/2", "1/2", "1/2", "1/2"})), DomainError);
    CHECK_THROWS_AS(char_poly_shape(roots({"1/3", "2/3"})), DomainError);
}

TEST_CASE("real parameters") {
    const auto r = real_parameter({5, 2, 3});
    CHECK(r.infinitesimal_character == std::vector<std::int64_t>{5, 2, 3, -5, -2, -3, 0});
    CHECK(is_g2_real(5, 2, 3));
    CHECK_FALSE(is_g2_real(1, 2, 4));
    CHECK_THROWS_AS(is_g2_real(1, 1, 2), DomainError);
    CHECK_THROWS_AS(real_parameter({1, -1}), DomainError);
    CHECK_THROWS_AS(real_parameter({0, 2}), DomainError);
}

TEST_CASE("g2 parameters are admissible for every p < 200") {
    for (auto q : numth::primes_below(50)) {
        if (q == 2)
            continue;
        for (auto p : numth::primes_below(200)) {
            if (p == 2 || p == q || numth::mult_order(static_cast<std::int64_t>(q), p) != 6)
                continue;
            const auto param = build_tame_parameter_prime(static_cast<std::int64_t>(q), static_cast<std::int64_t>(p), 3);
            const auto verdict = is_g2_parameter(param);
            if (verdict.g2)
                REQUIRE(g2_admissible_eigenvalues(param.eigenvalues()));
            REQUIRE(verdict.g2 == ((q * q - q + 1) % p == 0));
        }
    }
}

TEST_CASE("commutator of a single-orbit image is the inertia subgroup") {
    for (auto [q, p, n] : {std::tuple{5, 3, 1}, std::tuple{7, 43, 3}, std::tuple{3, 41, 4}, std::tuple{2, 5, 2}}) {
        const auto param = build_tame_parameter_prime(q, p, static_cast<unsigned>(n));
        const auto g = parameter_image(param);
        const auto comm = groups::commutator_subgroup(g);
        const auto inertia = groups::generate(g, {g.index_of(g.codec().encode(param.inertia))});
        CHECK(comm == inertia);
        CHECK(comm.order() == static_cast<std::size_t>(p));
        CHECK(groups::is_type_np(g, 2 * n, p).has_value());
    }
}
