#include "ggt/weil_params.hpp"

#include "ggt/error.hpp"
#include "ggt/numth.hpp"

#include <algorithm>
#include <cstdlib>

namespace ggt::weil {

TameParameter build_tame_parameter(std::int64_t q, const std::vector<RootOfUnity>& taus, unsigned n) {
    if (n == 0)
        throw DomainError("tame parameter: n must be positive");
    if (taus.empty())
        throw DomainError("tame parameter: at least one tau is required");
    TameParameter param;
    param.n = n;
    param.q = q;
    std::vector<RootOfUnity> starts;
    std::size_t total = 0;
    for (const auto& tau : taus) {
        auto orbit = frobenius_orbit(tau, q);
        if (orbit.size() < 2 || orbit.size() % 2 != 0)
            throw DomainError("tame parameter: orbit of " + tau.to_string() + " has size " +
                              std::to_string(orbit.size()) + ", not an even size >= 2");
        if (!orbit.selfdual)
            throw DomainError("tame parameter: orbit of " + tau.to_string() + " is not self-dual");
        for (const auto& other : param.orbits) {
            if (other == orbit)
                throw DomainError("tame parameter: orbit of " + tau.to_string() + " is repeated");
        }
        if (!check_orbit_lemma(orbit))
            throw VerificationFailure("tame parameter: orbit lemma fails for " + tau.to_string());
        total += orbit.size();
        param.orbits.push_back(std::move(orbit));
        starts.push_back(tau);
    }
    if (total != 2ULL * n)
        throw DomainError("tame parameter: orbit sizes add up to " + std::to_string(total) + ", expected " +
                          std::to_string(2 * n));

    const std::size_t dim = param.dim();
    std::vector<RootOfUnity> eig(dim);
    std::vector<std::uint32_t> fperm(dim);
    std::vector<RootOfUnity> fdiag(dim);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < param.orbits.size(); ++i) {
        const auto& orbit = param.orbits[i];
        const std::size_t size = orbit.size();
        const std::size_t half = size / 2;
        const std::size_t first = *orbit.index_of(starts[i]);
        auto pos = [&](std::size_t j) -> std::size_t {
            j %= size;
            return j < half ? offset + j : 2 * n - (offset + j - half);
        };
        for (std::size_t j = 0; j < size; ++j) {
            eig[pos(j)] = orbit.elements[(first + j) % size];
            // Frobenius sends the tau^(q^j) line to the tau^(q^(j-1)) line.
            fperm[pos(j)] = static_cast<std::uint32_t>(pos(j + size - 1));
        }
        offset += half;
    }
    param.middle_sign = param.orbits.size() % 2 == 0 ? 1 : -1;
    fperm[n] = n;
    fdiag[n] = param.middle_sign < 0 ? RootOfUnity::minus_one() : RootOfUnity::one();

    param.inertia = MonomialMatrix::diagonal(std::move(eig));
    param.frobenius = MonomialMatrix(std::move(fperm), std::move(fdiag));
    if (!param.frobenius.determinant().is_one() || !param.inertia.determinant().is_one())
        throw VerificationFailure("tame parameter: determinant is not 1");
    return param;
}

TameParameter build_tame_parameter_prime(std::int64_t q, std::int64_t p, unsigned n) {
    return build_tame_parameter(q, {selfdual_tau(q, n, p)}, n);
}

TameChecks check_tame_parameter(const TameParameter& param) {
    TameChecks c;
    const auto& x = param.inertia;
    const auto& f = param.frobenius;
    c.conj_relation = f * x * f.inverse() == x.pow(param.q);
    c.det_inertia = x.determinant().is_one();
    c.det_frobenius = f.determinant().is_one();
    c.form_inertia = x.preserves_antidiagonal_form();
    c.form_frobenius = f.preserves_antidiagonal_form();

    std::vector<RootOfUnity> expected{RootOfUnity::one()};
    for (const auto& o : param.orbits)
        expected.insert(expected.end(), o.elements.begin(), o.elements.end());
    auto actual = x.diag();
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    c.eigenvalues_match_orbits = x.is_diagonal() && expected == actual;
    return c;
}

FinGroup image_group(const TameParameter& param, std::size_t bound) {
    return FinGroup::from_monomials({param.inertia, param.frobenius}, bound);
}

FinGroup parameter_image(const TameParameter& param, std::size_t bound) {
    if (param.s() != 1)
        throw DomainError("parameter_image: a single orbit is required");
    const auto p = param.orbits.front().representative().den();
    if (!numth::is_prime(static_cast<std::uint64_t>(p)))
        throw DomainError("parameter_image: tau must have prime order");
    FinGroup g = image_group(param, bound);
    if (g.order() != 2ULL * param.n * static_cast<std::uint64_t>(p))
        throw VerificationFailure("parameter_image: order " + std::to_string(g.order()) + " differs from 2np");
    return g;
}

G2Verdict is_g2_parameter(const TameParameter& param) {
    if (param.n != 3)
        throw DomainError("is_g2_parameter: n must be 3");
    const std::int64_t q = param.q;
    if (param.s() == 1) {
        const auto& tau = param.orbits.front().representative();
        const std::int64_t phi6 = q * q - q + 1;
        const bool ok = phi6 % tau.den() == 0;
        return {ok, std::string("s=1: tau^(q^2-q+1) ") + (ok ? "= 1" : "!= 1") + " (q^2-q+1 = " +
                        std::to_string(phi6) + ", order of tau " + std::to_string(tau.den()) + ")"};
    }
    if (param.s() == 3) {
        const auto& o = param.orbits;
        for (int mask = 0; mask < 8; ++mask) {
            RootOfUnity prod;
            std::string signs;
            for (int i = 0; i < 3; ++i) {
                const bool neg = (mask >> i) & 1;
                prod *= neg ? o[i].representative().inverse() : o[i].representative();
                signs += neg ? '-' : '+';
            }
            if (prod.is_one())
                return {true, "s=3: tau1^e1 tau2^e2 tau3^e3 = 1 with signs " + signs};
        }
        return {false, "s=3: no sign choice makes tau1^e1 tau2^e2 tau3^e3 = 1"};
    }
    return {false, "s=" + std::to_string(param.s()) + ": only s=1 or s=3 can give a G2 parameter"};
}

namespace {

bool pairs_multiply_to_one(std::vector<RootOfUnity>& rest, std::vector<RootOfUnity>& lambdas) {
    if (rest.empty()) {
        for (int mask = 0; mask < (1 << lambdas.size()); ++mask) {
            RootOfUnity prod;
            for (std::size_t i = 0; i < lambdas.size(); ++i)
                prod *= (mask >> i) & 1 ? lambdas[i].inverse() : lambdas[i];
            if (prod.is_one())
                return true;
        }
        return false;
    }
    const RootOfUnity x = rest.front();
    for (std::size_t k = 1; k < rest.size(); ++k) {
        if (rest[k] != x.inverse())
            continue;
        std::vector<RootOfUnity> next;
        for (std::size_t i = 1; i < rest.size(); ++i) {
            if (i != k)
                next.push_back(rest[i]);
        }
        lambdas.push_back(x);
        if (pairs_multiply_to_one(next, lambdas))
            return true;
        lambdas.pop_back();
    }
    return false;
}

} // namespace

bool g2_admissible_eigenvalues(const std::vector<RootOfUnity>& eigs) {
    if (eigs.size() != 7)
        return false;
    auto one = std::find(eigs.begin(), eigs.end(), RootOfUnity::one());
    if (one == eigs.end())
        return false;
    std::vector<RootOfUnity> rest;
    for (auto it = eigs.begin(); it != eigs.end(); ++it) {
        if (it != one)
            rest.push_back(*it);
    }
    std::vector<RootOfUnity> lambdas;
    return pairs_multiply_to_one(rest, lambdas);
}

std::vector<RootOfUnity> satake_lift_g2(const RootOfUnity& l1, const RootOfUnity& l2, const RootOfUnity& l3) {
    if (!(l1 * l2 * l3).is_one())
        throw DomainError("satake_lift_g2: l1 l2 l3 must be 1");
    std::vector<RootOfUnity> out{l1, l2, l3, RootOfUnity::one(), l1.inverse(), l2.inverse(), l3.inverse()};
    std::sort(out.begin(), out.end());
    return out;
}

CharPolyShape char_poly_shape(const std::vector<RootOfUnity>& eigs) {
    if (eigs.size() % 2 == 0)
        throw DomainError("char_poly_shape: the multiset must have odd size");
    if (std::find(eigs.begin(), eigs.end(), RootOfUnity::one()) == eigs.end())
        throw DomainError("char_poly_shape: 1 is not an eigenvalue");
    std::vector<RootOfUnity> sorted = eigs;
    std::vector<RootOfUnity> inverted;
    for (const auto& l : eigs)
        inverted.push_back(l.inverse());
    std::sort(sorted.begin(), sorted.end());
    std::sort(inverted.begin(), inverted.end());
    if (sorted != inverted)
        throw DomainError("char_poly_shape: the multiset is not closed under inversion");

    std::uint64_t N = 1;
    for (const auto& l : eigs)
        N = numth::checked_lcm(N, static_cast<std::uint64_t>(l.den()));
    const auto n = static_cast<std::int64_t>(N);

    // f, lowest degree first.
    std::vector<CyclotomicInt> f{CyclotomicInt::from_int(n, 1)};
    for (const auto& l : eigs) {
        std::vector<CyclotomicInt> next(f.size() + 1, CyclotomicInt(n));
        for (std::size_t k = 0; k < f.size(); ++k) {
            next[k + 1] += f[k];
            auto t = f[k];
            t.mul_root(l.exponent_mod(n));
            next[k] -= t;
        }
        f = std::move(next);
    }
    // f = (x - 1) g
    const std::size_t deg = f.size() - 1;
    std::vector<CyclotomicInt> g(deg, CyclotomicInt(n));
    g[deg - 1] = f[deg];
    for (std::size_t k = deg - 1; k >= 1; --k)
        g[k - 1] = f[k] + g[k];
    if (!(f[0] + g[0]).is_zero())
        throw VerificationFailure("char_poly_shape: x - 1 does not divide f");

    CharPolyShape out;
    out.modulus = n;
    out.passes = true;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!(g[k] == g[g.size() - 1 - k]))
            out.passes = false;
    }
    std::reverse(g.begin(), g.end());
    for (const auto& c : g)
        out.g_rational.push_back(c.rational());
    out.g = std::move(g);
    return out;
}

RealParameter real_parameter(const std::vector<std::int64_t>& a) {
    if (a.empty())
        throw DomainError("real_parameter: at least one entry is required");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0 || a[i] == INT64_MIN)
            throw DomainError("real_parameter: entries must be nonzero");
        for (std::size_t j = 0; j < i; ++j) {
            if (std::llabs(a[i]) == std::llabs(a[j]))
                throw DomainError("real_parameter: a_i = +-a_j for i != j");
        }
    }
    RealParameter r;
    r.a = a;
    r.infinitesimal_character = a;
    for (auto v : a)
        r.infinitesimal_character.push_back(-v);
    r.infinitesimal_character.push_back(0);
    return r;
}

bool is_g2_real(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    const auto r = real_parameter({a1, a2, a3});
    for (int mask = 0; mask < 8; ++mask) {
        std::int64_t sum = 0;
        for (int i = 0; i < 3; ++i)
            sum = numth::checked_add(sum, (mask >> i) & 1 ? -r.a[i] : r.a[i]);
        if (sum == 0)
            return true;
    }
    return false;
}

} // namespace ggt::weil
