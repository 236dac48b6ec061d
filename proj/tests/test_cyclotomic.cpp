#include <doctest.h>

#include "ggt/cyclotomic.hpp"
#include "ggt/error.hpp"
#include "ggt/numth.hpp"

using namespace ggt;

TEST_CASE("sums of all N-th roots of unity vanish") {
    for (std::int64_t n = 2; n <= 40; ++n) {
        CyclotomicInt s(n);
        for (std::int64_t k = 0; k < n; ++k)
            s += CyclotomicInt::root(n, k);
        CHECK(s.is_zero());
    }
}

TEST_CASE("basic identities") {
    CHECK(CyclotomicInt::root(4, 2) == CyclotomicInt::from_int(4, -1));
    CHECK(CyclotomicInt::root(4, 2).rational() == -1);
    CHECK_FALSE(CyclotomicInt::root(3, 1).rational().has_value());
    CHECK((CyclotomicInt::root(3, 1) + CyclotomicInt::root(3, 2)).rational() == -1);
    CHECK(CyclotomicInt::from_root(21, RootOfUnity(1, 3)) == CyclotomicInt::root(21, 7));
    auto z = CyclotomicInt::root(21, 5);
    z.mul_root(17);
    CHECK(z == CyclotomicInt::root(21, 1));
    CHECK(CyclotomicInt::root(21, 4).conj() == CyclotomicInt::root(21, 17));
    CHECK_THROWS_AS(CyclotomicInt::root(3, 1) + CyclotomicInt::root(4, 1), DomainError);
    CHECK(CyclotomicInt::from_int(1, 5).rational() == 5);
}

TEST_CASE("quadratic Gauss sums square to +-p") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        CyclotomicInt g(p);
        for (std::int64_t a = 1; a < p; ++a) {
            const bool residue = numth::powmod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>((p - 1) / 2),
                                               static_cast<std::uint64_t>(p)) == 1;
            auto term = CyclotomicInt::root(p, a);
            if (!residue)
                term = -term;
            g += term;
        }
        const std::int64_t expect = p % 4 == 1 ? p : -p;
        CHECK((g * g).rational() == expect);
        CHECK((g * g.conj()).rational() == p);
    }
}

TEST_CASE("to_string uses the reduced form") {
    CHECK(CyclotomicInt::from_int(7, 0).to_string() == "0 (z = zeta_7)");
    CHECK(CyclotomicInt::from_int(2, -3).to_string() == "-3");
    CHECK(CyclotomicInt::root(7, 2).to_string() == "z^2 (z = zeta_7)");
    CHECK(CyclotomicInt::root(3, 2).to_string() == "-1 - z (z = zeta_3)");
}

TEST_CASE("overflow is detected") {
    auto big = CyclotomicInt::from_int(3, INT64_MAX);
    CHECK_THROWS_AS(big += CyclotomicInt::from_int(3, 1), Overflow);
}
