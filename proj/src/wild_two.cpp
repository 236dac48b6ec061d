#include "ggt/wild_two.hpp"

#include "ggt/error.hpp"
#include "ggt/weil_params.hpp"

#include <algorithm>
#include <set>

namespace ggt::wild {

namespace f8 {

std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }

std::uint32_t mul(std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0;
    for (int i = 0; i < 3; ++i) {
        if ((b >> i) & 1U)
            r ^= a << i;
    }
    // reduce modulo x^3 + x + 1
    for (int i = 4; i >= 3; --i) {
        if ((r >> i) & 1U)
            r ^= 0b1011U << (i - 3);
    }
    return r;
}

std::uint32_t trace(std::uint32_t a) {
    const auto a2 = mul(a, a);
    const auto a4 = mul(a2, a2);
    return a ^ a2 ^ a4;
}

} // namespace f8

std::vector<int> shifted_character(unsigned m, unsigned i) {
    std::vector<int> out(m);
    for (unsigned j = 0; j < m; ++j)
        out[j] = (i + j) % m <= 1 ? -1 : 1;
    return out;
}

WildImageSO build_so_wild(unsigned m, std::size_t bound) {
    if (m % 2 == 0 || m < 3 || m > 15)
        throw DomainError("build_so_wild: m must be odd with 3 <= m <= 15");
    WildImageSO w;
    w.m = m;
    for (unsigned j = 0; j < m; ++j) {
        std::vector<RootOfUnity> diag(m);
        for (unsigned i = 0; i < m; ++i) {
            if (shifted_character(m, i)[j] < 0)
                diag[i] = RootOfUnity::minus_one();
        }
        w.d_gens.push_back(MonomialMatrix::diagonal(std::move(diag)));
    }
    std::vector<std::uint32_t> perm(m);
    for (unsigned i = 0; i < m; ++i)
        perm[i] = (i + m - 1) % m;
    w.p_gen = MonomialMatrix::permutation(std::move(perm));
    std::vector<MonomialMatrix> gens = w.d_gens;
    gens.push_back(w.p_gen);
    w.group = FinGroup::from_monomials(gens, bound);
    return w;
}

bool PropTwoReport::all_pass() const {
    return order == expected_order && abelianization == std::vector<std::uint64_t>{m} &&
           commutator_order * m == expected_order && commutator_elementary && det_trivial && irreducible &&
           selfdual && conjugates_distinct && joint_kernel_is_diagonal && p_det_one && conj_relation &&
           (!g2_checked || g2_obstruction);
}

PropTwoReport verify_prop_two(const WildImageSO& w) {
    const FinGroup& g = w.group;
    const unsigned m = w.m;
    PropTwoReport r;
    r.m = m;
    r.order = g.order();
    r.expected_order = (std::uint64_t{1} << (m - 1)) * m;
    r.abelianization = groups::abelianization(g);

    const auto comm = groups::commutator_subgroup(g);
    r.commutator_order = comm.order();
    r.commutator_elementary =
        std::all_of(comm.members.begin(), comm.members.end(), [&](auto x) { return g.element_order(x) <= 2; });

    r.det_trivial = true;
    std::int64_t norm_sum = 0;
    r.selfdual = true;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        if (!g.codec().decode(g.element(x)).determinant().is_one())
            r.det_trivial = false;
        const auto a = g.codec().trace_profile(g.element(x));
        const auto b = g.codec().trace_profile(g.element(g.inv(x)));
        const std::int64_t ta = a[0] - a[1];
        const std::int64_t tb = b[0] - b[1];
        norm_sum += ta * tb;
        if (ta != tb)
            r.selfdual = false;
    }
    if (norm_sum % static_cast<std::int64_t>(g.order()) != 0)
        throw VerificationFailure("verify_prop_two: character norm is not an integer");
    r.character_norm = norm_sum / static_cast<std::int64_t>(g.order());
    r.irreducible = r.character_norm == 1;

    std::set<std::vector<int>> conj;
    for (unsigned i = 0; i < m; ++i)
        conj.insert(shifted_character(m, i));
    r.conjugates_distinct = conj.size() == m;

    // v in F_2^m with (chi o F^i)(v) = 1 for every i
    std::vector<std::uint32_t> kernel;
    for (std::uint32_t v = 0; v < (1U << m); ++v) {
        bool in = true;
        for (unsigned i = 0; i < m && in; ++i) {
            int s = 1;
            const auto chi = shifted_character(m, i);
            for (unsigned j = 0; j < m; ++j) {
                if ((v >> j) & 1U)
                    s *= chi[j];
            }
            in = s == 1;
        }
        if (in)
            kernel.push_back(v);
    }
    r.joint_kernel_is_diagonal = kernel == std::vector<std::uint32_t>{0, (1U << m) - 1};

    r.p_det_one = w.p_gen.determinant().is_one();
    r.conj_relation = true;
    for (unsigned j = 0; j < m; ++j) {
        if (!(w.p_gen * w.d_gens[j] * w.p_gen.inverse() == w.d_gens[(j + 1) % m]))
            r.conj_relation = false;
    }

    if (m == 7) {
        r.g2_checked = true;
        r.g2_obstruction = true;
        for (const auto& d : w.d_gens) {
            if (weil::g2_admissible_eigenvalues(d.diag()))
                r.g2_obstruction = false;
        }
    }
    return r;
}

// ---- G2 Jordan group ----

namespace {

using Perm = std::vector<std::uint32_t>;

Perm compose(const Perm& a, const Perm& b) {
    Perm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = a[b[i]];
    return out;
}

// Linear part u x^(2^k): the elements of the affine group fixing 0.
std::vector<Perm> linear_part(const FinGroup& affine) {
    std::vector<Perm> out;
    for (const auto& e : affine.elements()) {
        if (e[0] == 0)
            out.push_back(e);
    }
    return out;
}

MonomialMatrix induced_matrix(const Perm& g, const std::vector<Perm>& reps) {
    const std::size_t n = reps.size();
    std::vector<std::uint32_t> perm(n);
    std::vector<RootOfUnity> diag(n);
    for (std::size_t c = 0; c < n; ++c) {
        const Perm gh = compose(g, reps[c]);
        const auto c0 = gh[0];
        Perm h2(8);
        for (std::uint32_t x = 0; x < 8; ++x)
            h2[x] = gh[x] ^ c0;
        const auto it = std::find(reps.begin(), reps.end(), h2);
        if (it == reps.end())
            throw VerificationFailure("induced_matrix: coset representative not found");
        // g h = h2 t_b with h2(b) = c0
        const auto b = static_cast<std::uint32_t>(std::find(h2.begin(), h2.end(), c0) - h2.begin());
        perm[c] = static_cast<std::uint32_t>(it - reps.begin());
        diag[c] = f8::trace(b) ? RootOfUnity::minus_one() : RootOfUnity::one();
    }
    return {std::move(perm), std::move(diag)};
}

} // namespace

G2JordanGroup build_g2_jordan() {
    Perm shift(8), scale(8), frob(8);
    for (std::uint32_t x = 0; x < 8; ++x) {
        shift[x] = x ^ 1U;
        scale[x] = f8::mul(2, x);
        frob[x] = f8::mul(x, x);
    }
    G2JordanGroup out;
    out.affine = FinGroup::from_permutations({shift, scale, frob});
    const auto reps = linear_part(out.affine);

    std::vector<std::uint32_t> trans;
    for (std::uint32_t i = 0; i < out.affine.order(); ++i) {
        const auto& e = out.affine.element(i);
        bool is_translation = true;
        for (std::uint32_t x = 0; x < 8; ++x)
            is_translation = is_translation && e[x] == (x ^ e[0]);
        if (is_translation)
            trans.push_back(i);
    }
    out.translations = groups::generate(out.affine, trans);

    std::vector<MonomialMatrix> gens;
    for (const auto& g : {shift, scale, frob})
        gens.push_back(induced_matrix(g, reps));
    out.group = FinGroup::from_monomials(gens);
    for (std::uint32_t i = 0; i < out.affine.order(); ++i) {
        const auto mat = induced_matrix(out.affine.element(i), reps);
        out.to_induced.push_back(out.group.index_of(out.group.codec().encode(mat)));
        std::int64_t tr = 0;
        for (std::size_t c = 0; c < mat.dim(); ++c) {
            if (mat.perm()[c] == c)
                tr += mat.diag()[c].is_one() ? 1 : -1;
        }
        out.induced_character.push_back(tr);
    }
    return out;
}

namespace {

constexpr std::int64_t kN = 21;

CyclotomicInt inner_product_sum(const std::vector<CyclotomicInt>& a, const std::vector<CyclotomicInt>& b) {
    CyclotomicInt s(kN);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i].conj();
    return s;
}

std::int64_t inner_product(const std::vector<CyclotomicInt>& a, const std::vector<CyclotomicInt>& b) {
    const auto s = inner_product_sum(a, b).rational();
    const auto n = static_cast<std::int64_t>(a.size());
    if (!s || *s % n != 0 || *s < 0)
        throw VerificationFailure("character inner product is not a nonnegative integer");
    return *s / n;
}

} // namespace

std::vector<Constituent> mackey_decompose(const G2JordanGroup& g2j) {
    const FinGroup& g = g2j.affine;
    Perm frob(8);
    for (std::uint32_t x = 0; x < 8; ++x)
        frob[x] = f8::mul(x, x);
    const Perm id{0, 1, 2, 3, 4, 5, 6, 7};
    const std::vector<Perm> gal{id, frob, compose(frob, frob)};

    // coset representatives of T = J x| Gal: multiplications by e^j
    std::vector<std::uint32_t> reps;
    {
        std::uint32_t u = 1;
        for (int j = 0; j < 7; ++j) {
            Perm mult(8);
            for (std::uint32_t x = 0; x < 8; ++x)
                mult[x] = f8::mul(u, x);
            reps.push_back(g.index_of(mult));
            u = f8::mul(u, 2);
        }
    }

    std::vector<CyclotomicInt> induced;
    for (auto v : g2j.induced_character)
        induced.push_back(CyclotomicInt::from_int(kN, v));

    std::vector<Constituent> out;
    for (unsigned k = 0; k < 3; ++k) {
        Constituent c;
        c.k = k;
        c.values.assign(g.order(), CyclotomicInt(kN));
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            for (auto r : reps) {
                const auto y = g.element(g.mul(g.mul(g.inv(r), x), r));
                // y in T iff y(x) = x^(2^i) + a
                const auto a = y[0];
                for (unsigned i = 0; i < 3; ++i) {
                    bool match = true;
                    for (std::uint32_t z = 0; z < 8 && match; ++z)
                        match = y[z] == (gal[i][z] ^ a);
                    if (!match)
                        continue;
                    auto v = CyclotomicInt::root(kN, 7 * ((k * i) % 3));
                    if (f8::trace(a))
                        v = -v;
                    c.values[x] += v;
                }
            }
        }
        c.degree = *c.values[g.identity()].rational();
        c.norm = inner_product(c.values, c.values);
        c.multiplicity = inner_product(induced, c.values);
        c.selfdual = true;
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            if (!(c.values[x] == c.values[g.inv(x)]))
                c.selfdual = false;
        }
        std::size_t kernel = 0;
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            if (c.values[x].rational() == c.degree)
                ++kernel;
        }
        c.faithful = kernel == 1;
        out.push_back(std::move(c));
    }
    return out;
}

std::size_t JordanReport::selfdual_count() const {
    return static_cast<std::size_t>(
        std::count_if(constituents.begin(), constituents.end(), [](const auto& c) { return c.selfdual; }));
}

bool JordanReport::all_pass() const {
    if (order != 168 || induced_degree != 21 || induced_norm != 3 || j_order != 8 || !j_elementary_abelian ||
        !j_unique_minimal_normal || quotient_order != 21 || !quotient_nonabelian || stabilizer_order != 3 ||
        !stabilizer_is_galois || character_orbit_size != 7 || !constituents_sum_to_induced ||
        !constituents_distinct || constituents.size() != 3 || selfdual_count() != 1)
        return false;
    return std::all_of(constituents.begin(), constituents.end(), [](const auto& c) {
        return c.degree == 7 && c.norm == 1 && c.multiplicity == 1 && c.faithful;
    });
}

JordanReport verify_jordan(const G2JordanGroup& g2j) {
    const FinGroup& g = g2j.affine;
    JordanReport r;
    r.order = g2j.group.order();
    if (g.order() != r.order)
        throw VerificationFailure("verify_jordan: affine and induced models differ in order");
    // the induced model is an isomorphic image
    std::set<std::uint32_t> images(g2j.to_induced.begin(), g2j.to_induced.end());
    for (std::uint32_t a = 0; a < g.order(); a += 7) {
        for (std::uint32_t b = 0; b < g.order(); ++b) {
            if (g2j.to_induced[g.mul(a, b)] != g2j.group.mul(g2j.to_induced[a], g2j.to_induced[b]))
                throw VerificationFailure("verify_jordan: induced model is not a homomorphic image");
        }
    }
    if (images.size() != g.order())
        throw VerificationFailure("verify_jordan: induced model is not faithful");

    r.induced_degree = g2j.induced_character[g.identity()];
    std::vector<CyclotomicInt> induced;
    for (auto v : g2j.induced_character)
        induced.push_back(CyclotomicInt::from_int(kN, v));
    r.induced_norm = inner_product(induced, induced);

    const auto& j = g2j.translations;
    r.j_order = j.order();
    r.j_elementary_abelian = std::all_of(j.members.begin(), j.members.end(),
                                         [&](auto x) { return g.element_order(x) <= 2; });
    std::vector<Subgroup> minimal;
    for (const auto& h : groups::normal_subgroups(g)) {
        r.normal_subgroup_orders.push_back(h.order());
        if (h.order() == 1)
            continue;
        bool is_minimal = true;
        for (const auto& other : minimal) {
            if (std::includes(h.members.begin(), h.members.end(), other.members.begin(), other.members.end()))
                is_minimal = false;
        }
        if (is_minimal)
            minimal.push_back(h);
    }
    r.j_unique_minimal_normal = minimal.size() == 1 && minimal.front() == j;
    const auto q = groups::quotient(g, j);
    r.quotient_order = q.group.order();
    r.quotient_nonabelian = !q.group.is_abelian();

    // H = linear part acts on characters a -> psi(Tr(c a)) of J = F_8
    auto character = [](std::uint32_t c) {
        std::uint32_t bits = 0;
        for (std::uint32_t a = 0; a < 8; ++a)
            bits |= f8::trace(f8::mul(c, a)) << a;
        return bits;
    };
    const auto psi = character(1);
    std::set<std::uint32_t> orbit;
    std::uint64_t stab = 0;
    bool galois = true;
    for (const auto& h : linear_part(g)) {
        // (h . theta)(a) = theta(h^-1 a)
        std::uint32_t bits = 0;
        for (std::uint32_t a = 0; a < 8; ++a) {
            const auto pre = static_cast<std::uint32_t>(std::find(h.begin(), h.end(), a) - h.begin());
            bits |= ((psi >> pre) & 1U) << a;
        }
        orbit.insert(bits);
        if (bits == psi) {
            ++stab;
            bool is_frob_power = false;
            std::uint32_t x2 = 2;
            for (int i = 0; i < 3; ++i) {
                is_frob_power = is_frob_power || h[2] == x2;
                x2 = f8::mul(x2, x2);
            }
            galois = galois && is_frob_power && h[1] == 1;
        }
    }
    r.stabilizer_order = stab;
    r.stabilizer_is_galois = galois && stab == 3;
    r.character_orbit_size = orbit.size();

    r.constituents = mackey_decompose(g2j);
    r.constituents_sum_to_induced = true;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        CyclotomicInt s(kN);
        for (const auto& c : r.constituents)
            s += c.values[x];
        if (!(s == induced[x]))
            r.constituents_sum_to_induced = false;
    }
    r.constituents_distinct = true;
    for (std::size_t a = 0; a < r.constituents.size(); ++a) {
        for (std::size_t b = a + 1; b < r.constituents.size(); ++b) {
            if (inner_product(r.constituents[a].values, r.constituents[b].values) != 0)
                r.constituents_distinct = false;
        }
    }
    return r;
}

} // namespace ggt::wild
