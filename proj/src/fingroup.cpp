#include "ggt/fingroup.hpp"

#include "ggt/error.hpp"
#include "ggt/numth.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace ggt {

std::size_t ElementHash::operator()(const Element& e) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : e) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---- ElementCodec ----

ElementCodec ElementCodec::permutations(std::size_t degree) {
    if (degree == 0)
        throw DomainError("permutation degree must be positive");
    ElementCodec c;
    c.kind_ = Kind::Permutation;
    c.degree_ = degree;
    return c;
}

ElementCodec ElementCodec::monomials(std::size_t dim, std::uint32_t modulus) {
    if (dim == 0 || modulus == 0)
        throw DomainError("monomial dimension and modulus must be positive");
    ElementCodec c;
    c.kind_ = Kind::Monomial;
    c.degree_ = dim;
    c.modulus_ = modulus;
    return c;
}

Element ElementCodec::identity() const {
    Element e(kind_ == Kind::Permutation ? degree_ : 2 * degree_, 0);
    for (std::size_t i = 0; i < degree_; ++i)
        e[i] = static_cast<std::uint32_t>(i);
    return e;
}

Element ElementCodec::multiply(const Element& a, const Element& b) const {
    const std::size_t n = degree_;
    if (kind_ == Kind::Permutation) {
        Element out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = a[b[i]];
        return out;
    }
    Element out(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto mid = b[j];
        out[j] = a[mid];
        out[n + j] = (b[n + j] + a[n + mid]) % modulus_;
    }
    return out;
}

Element ElementCodec::inverse(const Element& a) const {
    const std::size_t n = degree_;
    Element out(a.size());
    for (std::size_t j = 0; j < n; ++j) {
        out[a[j]] = static_cast<std::uint32_t>(j);
        if (kind_ == Kind::Monomial)
            out[n + a[j]] = (modulus_ - a[n + j]) % modulus_;
    }
    return out;
}

Element ElementCodec::encode(const MonomialMatrix& m) const {
    if (kind_ != Kind::Monomial || m.dim() != degree_)
        throw DomainError("encode: matrix does not match codec");
    Element out(2 * degree_);
    for (std::size_t j = 0; j < degree_; ++j) {
        out[j] = m.perm()[j];
        if (modulus_ % m.diag()[j].den() != 0)
            throw DomainError("encode: entry order does not divide the codec modulus");
        out[degree_ + j] = static_cast<std::uint32_t>(m.diag()[j].exponent_mod(modulus_));
    }
    return out;
}

MonomialMatrix ElementCodec::decode(const Element& e) const {
    if (kind_ == Kind::Permutation)
        return MonomialMatrix::permutation(e);
    std::vector<std::uint32_t> perm(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(degree_));
    std::vector<RootOfUnity> diag;
    diag.reserve(degree_);
    for (std::size_t j = 0; j < degree_; ++j)
        diag.emplace_back(e[degree_ + j], modulus_);
    return {std::move(perm), std::move(diag)};
}

std::vector<std::int64_t> ElementCodec::trace_profile(const Element& e) const {
    std::vector<std::int64_t> out(modulus_, 0);
    for (std::size_t j = 0; j < degree_; ++j) {
        if (e[j] == j)
            ++out[kind_ == Kind::Monomial ? e[degree_ + j] : 0];
    }
    return out;
}

// ---- FinGroup ----

FinGroup FinGroup::closure(ElementCodec codec, std::vector<Element> generators, std::size_t bound) {
    FinGroup g;
    g.codec_ = codec;
    const Element id = codec.identity();
    for (const auto& s : generators) {
        if (s.size() != id.size())
            throw DomainError("closure: generator has the wrong length");
    }

    std::unordered_map<Element, std::uint32_t, ElementHash> seen;
    std::vector<Element> found{id};
    seen.emplace(id, 0);
    for (std::size_t head = 0; head < found.size(); ++head) {
        for (const auto& s : generators) {
            Element y = codec.multiply(found[head], s);
            if (seen.count(y))
                continue;
            if (found.size() >= bound)
                throw BoundExceeded("group order exceeds the enumeration bound " + std::to_string(bound));
            seen.emplace(y, static_cast<std::uint32_t>(found.size()));
            found.push_back(std::move(y));
        }
    }

    std::sort(found.begin(), found.end());
    g.elements_ = std::move(found);
    g.index_.reserve(g.elements_.size());
    for (std::uint32_t i = 0; i < g.elements_.size(); ++i)
        g.index_.emplace(g.elements_[i], i);
    g.identity_ = g.index_.at(id);

    std::set<std::uint32_t> gens;
    for (const auto& s : generators) {
        const auto i = g.index_.at(s);
        if (i != g.identity_ && gens.insert(i).second)
            g.generators_.push_back(i);
    }

    g.inverses_.resize(g.elements_.size());
    for (std::uint32_t i = 0; i < g.elements_.size(); ++i)
        g.inverses_[i] = g.index_.at(codec.inverse(g.elements_[i]));

    // Orders: walk each cyclic subgroup once and read off the orders of its powers.
    g.orders_.assign(g.elements_.size(), 0);
    for (std::uint32_t i = 0; i < g.elements_.size(); ++i) {
        if (g.orders_[i] != 0)
            continue;
        std::vector<std::uint32_t> powers{g.identity_};
        std::uint32_t x = i;
        while (x != g.identity_) {
            powers.push_back(x);
            x = g.mul(x, i);
        }
        const std::uint64_t ord = powers.size();
        for (std::uint64_t k = 0; k < ord; ++k)
            g.orders_[powers[k]] = ord / std::gcd(k, ord);
    }
    return g;
}

FinGroup FinGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& generators, std::size_t bound) {
    if (generators.empty())
        throw DomainError("from_permutations: at least one generator is required");
    const std::size_t degree = generators.front().size();
    for (const auto& s : generators) {
        if (s.size() != degree)
            throw DomainError("from_permutations: generators act on different point sets");
        std::vector<bool> hit(degree, false);
        for (auto v : s) {
            if (v >= degree || hit[v])
                throw DomainError("from_permutations: not a permutation");
            hit[v] = true;
        }
    }
    return closure(ElementCodec::permutations(degree), generators, bound);
}

FinGroup FinGroup::from_monomials(const std::vector<MonomialMatrix>& generators, std::size_t bound) {
    if (generators.empty())
        throw DomainError("from_monomials: at least one generator is required");
    const std::size_t dim = generators.front().dim();
    std::uint64_t modulus = 1;
    for (const auto& m : generators) {
        if (m.dim() != dim)
            throw DomainError("from_monomials: generators have different dimensions");
        modulus = numth::checked_lcm(modulus, static_cast<std::uint64_t>(m.entry_modulus()));
    }
    if (modulus > 0xFFFFFFFFULL)
        throw Overflow("from_monomials: entry modulus too large");
    const auto codec = ElementCodec::monomials(dim, static_cast<std::uint32_t>(modulus));
    std::vector<Element> gens;
    gens.reserve(generators.size());
    for (const auto& m : generators)
        gens.push_back(codec.encode(m));
    return closure(codec, std::move(gens), bound);
}

std::optional<std::uint32_t> FinGroup::find(const Element& e) const {
    const auto it = index_.find(e);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::uint32_t FinGroup::index_of(const Element& e) const {
    const auto i = find(e);
    if (!i)
        throw DomainError("element is not in the group");
    return *i;
}

std::uint32_t FinGroup::mul(std::uint32_t a, std::uint32_t b) const {
    return index_.at(codec_.multiply(elements_[a], elements_[b]));
}

std::uint32_t FinGroup::power(std::uint32_t a, std::uint64_t k) const {
    k %= orders_[a];
    std::uint32_t result = identity_;
    std::uint32_t base = a;
    while (k > 0) {
        if (k & 1U)
            result = mul(result, base);
        base = mul(base, base);
        k >>= 1U;
    }
    return result;
}

std::uint64_t FinGroup::element_order(std::uint32_t a) const { return orders_[a]; }

bool FinGroup::is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        for (std::size_t j = i + 1; j < generators_.size(); ++j) {
            if (mul(generators_[i], generators_[j]) != mul(generators_[j], generators_[i]))
                return false;
        }
    }
    return true;
}

bool Subgroup::contains(std::uint32_t x) const { return std::binary_search(members.begin(), members.end(), x); }

namespace groups {
namespace {

bool is_prime_power_of(std::uint64_t n, std::uint64_t ell) {
    while (n > 1 && n % ell == 0)
        n /= ell;
    return n == 1;
}

// Extends the subgroup `members` to the closure under `gens`.
void extend(const FinGroup& g, std::vector<char>& in, std::vector<std::uint32_t>& members,
            const std::vector<std::uint32_t>& gens) {
    std::vector<std::uint32_t> queue = members;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto s : gens) {
            const auto y = g.mul(queue[head], s);
            if (!in[y]) {
                in[y] = 1;
                members.push_back(y);
                queue.push_back(y);
            }
        }
    }
}

Subgroup finish(std::vector<std::uint32_t> members, std::vector<std::uint32_t> gens) {
    std::sort(members.begin(), members.end());
    return {std::move(members), std::move(gens)};
}

} // namespace

Subgroup trivial_subgroup(const FinGroup& g) { return {{g.identity()}, {}}; }

Subgroup whole_group(const FinGroup& g) {
    std::vector<std::uint32_t> all(g.order());
    std::iota(all.begin(), all.end(), 0U);
    return {std::move(all), g.generators()};
}

Subgroup generate(const FinGroup& g, const std::vector<std::uint32_t>& cands) {
    std::vector<char> in(g.order(), 0);
    std::vector<std::uint32_t> members{g.identity()};
    in[g.identity()] = 1;
    std::vector<std::uint32_t> gens;
    for (auto s : cands) {
        if (in[s])
            continue;
        gens.push_back(s);
        extend(g, in, members, gens);
    }
    return finish(std::move(members), std::move(gens));
}

Subgroup normal_closure(const FinGroup& g, const std::vector<std::uint32_t>& elems) {
    std::vector<char> in(g.order(), 0);
    std::vector<std::uint32_t> members{g.identity()};
    in[g.identity()] = 1;
    std::vector<std::uint32_t> gens;
    std::deque<std::uint32_t> pending(elems.begin(), elems.end());
    while (!pending.empty()) {
        const auto s = pending.front();
        pending.pop_front();
        if (in[s])
            continue;
        gens.push_back(s);
        extend(g, in, members, gens);
        for (auto t : g.generators())
            pending.push_back(g.conjugate(t, s));
    }
    return finish(std::move(members), std::move(gens));
}

bool is_normal(const FinGroup& g, const Subgroup& h) {
    for (auto s : h.generators) {
        for (auto t : g.generators()) {
            if (!h.contains(g.conjugate(t, s)))
                return false;
        }
    }
    return true;
}

Subgroup intersect(const FinGroup& g, const Subgroup& a, const Subgroup& b) {
    std::vector<std::uint32_t> common;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(common));
    return generate(g, common);
}

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const FinGroup& g) {
    std::vector<char> done(g.order(), 0);
    std::vector<std::vector<std::uint32_t>> classes;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        if (done[x])
            continue;
        std::vector<std::uint32_t> cls{x};
        done[x] = 1;
        for (std::size_t head = 0; head < cls.size(); ++head) {
            for (auto t : g.generators()) {
                const auto y = g.conjugate(t, cls[head]);
                if (!done[y]) {
                    done[y] = 1;
                    cls.push_back(y);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<Subgroup> normal_subgroups(const FinGroup& g, std::optional<std::size_t> max_index) {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Subgroup> all;
    auto add = [&](Subgroup h) {
        if (seen.insert(h.members).second) {
            all.push_back(std::move(h));
            return true;
        }
        return false;
    };

    add(trivial_subgroup(g));
    std::vector<Subgroup> atoms;
    for (const auto& cls : conjugacy_classes(g)) {
        if (cls.size() == 1 && cls.front() == g.identity())
            continue;
        Subgroup h = generate(g, cls);
        if (seen.count(h.members) == 0)
            atoms.push_back(h);
        add(std::move(h));
    }

    // Every normal subgroup is the join of the class closures it contains.
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (const auto& atom : atoms) {
            if (std::includes(all[i].members.begin(), all[i].members.end(), atom.members.begin(), atom.members.end()))
                continue;
            std::vector<std::uint32_t> gens = all[i].generators;
            gens.insert(gens.end(), atom.generators.begin(), atom.generators.end());
            add(generate(g, gens));
        }
    }

    std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order())
            return a.order() < b.order();
        return a.members < b.members;
    });
    if (max_index) {
        std::erase_if(all, [&](const Subgroup& h) { return g.order() / h.order() > *max_index; });
    }
    return all;
}

Subgroup gamma_d(const FinGroup& g, std::size_t d) {
    if (d == 0)
        throw DomainError("gamma_d: d must be positive");
    Subgroup result = whole_group(g);
    for (const auto& h : normal_subgroups(g, d))
        result = intersect(g, result, h);
    return result;
}

Subgroup commutator_subgroup(const FinGroup& g) {
    std::vector<std::uint32_t> comms;
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const auto a = gens[i];
            const auto b = gens[j];
            comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
        }
    }
    return normal_closure(g, comms);
}

std::vector<std::uint64_t> abelian_invariants(const FinGroup& g) {
    if (!g.is_abelian())
        throw DomainError("abelian_invariants: group is not abelian");
    const std::uint64_t n = g.order();
    std::vector<std::vector<std::uint64_t>> factors; // per prime: prime powers, descending
    for (const auto& [p, e] : numth::factorize(n)) {
        std::vector<std::uint64_t> count(e + 1, 0); // count[k] = #{x : x^(p^k) = 1}
        for (std::uint32_t x = 0; x < n; ++x) {
            std::uint64_t o = g.element_order(x);
            unsigned k = 0;
            while (o % p == 0) {
                o /= p;
                ++k;
            }
            if (o == 1) {
                for (unsigned j = k; j <= e; ++j)
                    ++count[j];
            }
        }
        // r[k] = number of cyclic factors of order >= p^k.
        std::vector<unsigned> r(e + 2, 0);
        for (unsigned k = 1; k <= e; ++k) {
            std::uint64_t ratio = count[k] / count[k - 1];
            while (ratio > 1) {
                ratio /= p;
                ++r[k];
            }
        }
        std::vector<std::uint64_t> powers;
        for (unsigned k = e; k >= 1; --k) {
            for (unsigned c = 0; c < r[k] - r[k + 1]; ++c)
                powers.push_back(static_cast<std::uint64_t>(numth::checked_pow(static_cast<std::int64_t>(p), k)));
        }
        factors.push_back(std::move(powers));
    }
    std::size_t width = 0;
    for (const auto& f : factors)
        width = std::max(width, f.size());
    std::vector<std::uint64_t> out(width, 1);
    for (const auto& f : factors) {
        for (std::size_t i = 0; i < f.size(); ++i)
            out[width - 1 - i] *= f[i];
    }
    return out;
}

std::vector<std::uint64_t> abelianization(const FinGroup& g) {
    const auto q = quotient(g, commutator_subgroup(g));
    return abelian_invariants(q.group);
}

QuotientMap quotient(const FinGroup& g, const Subgroup& n) {
    if (!is_normal(g, n))
        throw DomainError("quotient: subgroup is not normal");
    constexpr std::uint32_t kNone = 0xFFFFFFFFU;
    std::vector<std::uint32_t> coset(g.order(), kNone);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        if (coset[x] != kNone)
            continue;
        const auto c = static_cast<std::uint32_t>(reps.size());
        reps.push_back(x);
        for (auto y : n.members)
            coset[g.mul(x, y)] = c;
    }
    const std::size_t k = reps.size();
    auto action = [&](std::uint32_t x) {
        Element perm(k);
        for (std::size_t c = 0; c < k; ++c)
            perm[c] = coset[g.mul(x, reps[c])];
        return perm;
    };

    std::vector<Element> gens;
    for (auto s : g.generators())
        gens.push_back(action(s));
    QuotientMap q{FinGroup::closure(ElementCodec::permutations(k), gens, std::max<std::size_t>(k, 1)), {}};
    std::vector<std::uint32_t> rep_image(k);
    for (std::size_t c = 0; c < k; ++c)
        rep_image[c] = q.group.index_of(action(reps[c]));
    q.image.resize(g.order());
    for (std::uint32_t x = 0; x < g.order(); ++x)
        q.image[x] = rep_image[coset[x]];
    return q;
}

Subgroup image(const QuotientMap& q, const Subgroup& h) {
    std::vector<std::uint32_t> gens;
    for (auto x : h.members)
        gens.push_back(q.image[x]);
    return generate(q.group, gens);
}

std::optional<TypeNPWitness> is_type_np(const FinGroup& g, std::uint64_t n, std::uint64_t p) {
    if (n < 2)
        throw DomainError("is_type_np: n must be at least 2");
    if (!numth::is_prime(p))
        throw DomainError("is_type_np: p must be prime");
    if (g.order() % p != 0)
        return std::nullopt;

    std::vector<char> covered(g.order(), 0);
    std::unordered_map<std::uint32_t, std::uint64_t> log;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        if (covered[x] || g.element_order(x) != p)
            continue;
        log.clear();
        std::uint32_t y = g.identity();
        for (std::uint64_t k = 0; k < p; ++k) {
            log.emplace(y, k);
            covered[y] = 1;
            y = g.mul(y, x);
        }
        TypeNPWitness w;
        w.delta_generator = x;
        w.n_observed = 1;
        bool normal = true;
        for (auto t : g.generators()) {
            const auto it = log.find(g.conjugate(t, x));
            if (it == log.end()) {
                normal = false;
                break;
            }
            w.conjugation_exponents.push_back(it->second);
            w.n_observed = numth::checked_lcm(w.n_observed, numth::mult_order(static_cast<std::int64_t>(it->second), p));
        }
        if (normal && w.n_observed == n)
            return w;
    }
    return std::nullopt;
}

Subgroup ell_core(const FinGroup& g, std::uint64_t ell) {
    if (!numth::is_prime(ell))
        throw DomainError("ell_core: ell must be prime");
    std::vector<std::uint32_t> gens;
    for (const auto& cls : conjugacy_classes(g)) {
        if (!is_prime_power_of(g.element_order(cls.front()), ell) || cls.front() == g.identity())
            continue;
        if (is_prime_power_of(generate(g, cls).order(), ell))
            gens.insert(gens.end(), cls.begin(), cls.end());
    }
    Subgroup core = generate(g, gens);
    if (!is_prime_power_of(core.order(), ell))
        throw VerificationFailure("ell_core: join of normal ell-subgroups is not an ell-group");
    return core;
}

bool is_type_npl(const FinGroup& g, std::uint64_t n, std::uint64_t p, std::uint64_t ell) {
    if (p == ell)
        throw DomainError("is_type_npl: p must differ from ell");
    const Subgroup core = ell_core(g, ell);
    const bool via_core = is_type_np(quotient(g, core).group, n, p).has_value();
    bool any = false;
    for (const auto& h : normal_subgroups(g)) {
        if (!is_prime_power_of(h.order(), ell))
            continue;
        if (!std::includes(core.members.begin(), core.members.end(), h.members.begin(), h.members.end()))
            throw VerificationFailure("is_type_npl: normal ell-subgroup outside the ell-core");
        if (is_type_np(quotient(g, h).group, n, p)) {
            any = true;
            break;
        }
    }
    if (any != via_core)
        throw VerificationFailure("is_type_npl: ell-core verdict disagrees with the normal ell-subgroup scan");
    return via_core;
}

FinGroup metacyclic(std::uint64_t m, std::uint64_t p) {
    if (!numth::is_prime(p) || p < 3)
        throw DomainError("metacyclic: p must be an odd prime");
    if (m < 2 || (p - 1) % m != 0)
        throw DomainError("metacyclic: m must be at least 2 and divide p - 1");
    if (p > 10000)
        throw DomainError("metacyclic: p exceeds the permutation degree bound");
    std::uint64_t a = 2;
    while (numth::mult_order(static_cast<std::int64_t>(a), p) != m)
        ++a;
    std::vector<std::uint32_t> shift(p), scale(p);
    for (std::uint64_t x = 0; x < p; ++x) {
        shift[x] = static_cast<std::uint32_t>((x + 1) % p);
        scale[x] = static_cast<std::uint32_t>(numth::mulmod(a, x, p));
    }
    return FinGroup::from_permutations({shift, scale});
}

FinGroup cyclic(std::uint64_t n) {
    if (n == 0 || n > 10000)
        throw DomainError("cyclic: order must be in 1..10000");
    std::vector<std::uint32_t> cycle(n);
    for (std::uint64_t x = 0; x < n; ++x)
        cycle[x] = static_cast<std::uint32_t>((x + 1) % n);
    return FinGroup::from_permutations({cycle});
}

FinGroup alternating4() { return FinGroup::from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}); }

FinGroup to_permutation_group(const FinGroup& g) {
    const auto& codec = g.codec();
    if (codec.kind() == ElementCodec::Kind::Permutation)
        return g;
    const std::size_t dim = codec.degree();
    const std::uint32_t N = codec.modulus();
    std::vector<std::vector<std::uint32_t>> gens;
    for (auto s : g.generators()) {
        const auto& e = g.element(s);
        std::vector<std::uint32_t> perm(dim * N);
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::uint32_t k = 0; k < N; ++k)
                perm[j * N + k] = static_cast<std::uint32_t>(e[j] * N + (k + e[dim + j]) % N);
        }
        gens.push_back(std::move(perm));
    }
    if (gens.empty())
        return cyclic(1);
    return FinGroup::from_permutations(gens);
}

FinGroup direct_product(const FinGroup& a, const FinGroup& b) {
    const FinGroup pa = to_permutation_group(a);
    const FinGroup pb = to_permutation_group(b);
    const std::size_t da = pa.codec().degree();
    const std::size_t db = pb.codec().degree();
    std::vector<std::vector<std::uint32_t>> gens;
    for (auto s : pa.generators()) {
        std::vector<std::uint32_t> perm(da + db);
        for (std::size_t i = 0; i < da; ++i)
            perm[i] = pa.element(s)[i];
        for (std::size_t i = 0; i < db; ++i)
            perm[da + i] = static_cast<std::uint32_t>(da + i);
        gens.push_back(std::move(perm));
    }
    for (auto s : pb.generators()) {
        std::vector<std::uint32_t> perm(da + db);
        for (std::size_t i = 0; i < da; ++i)
            perm[i] = static_cast<std::uint32_t>(i);
        for (std::size_t i = 0; i < db; ++i)
            perm[da + i] = static_cast<std::uint32_t>(da + pb.element(s)[i]);
        gens.push_back(std::move(perm));
    }
    if (gens.empty())
        gens.emplace_back(std::vector<std::uint32_t>{0});
    return FinGroup::from_permutations(gens);
}

FinGroup affine_extension(std::uint64_t ell, const FinGroup& q, const std::vector<std::uint64_t>& multipliers) {
    if (!numth::is_prime(ell) || ell > 10000)
        throw DomainError("affine_extension: ell must be a prime below 10000");
    const FinGroup pq = to_permutation_group(q);
    if (multipliers.size() != pq.generators().size())
        throw DomainError("affine_extension: one multiplier per generator is required");
    const std::size_t dq = pq.codec().degree();
    auto make = [&](const Element* h, std::uint64_t c, std::uint64_t shift) {
        std::vector<std::uint32_t> perm(ell + dq);
        for (std::uint64_t x = 0; x < ell; ++x)
            perm[x] = static_cast<std::uint32_t>((numth::mulmod(c, x, ell) + shift) % ell);
        for (std::size_t i = 0; i < dq; ++i)
            perm[ell + i] = static_cast<std::uint32_t>(ell + (h ? (*h)[i] : i));
        return perm;
    };
    std::vector<std::vector<std::uint32_t>> gens{make(nullptr, 1, 1)};
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        const auto c = multipliers[i] % ell;
        if (c == 0)
            throw DomainError("affine_extension: multiplier must be a unit");
        gens.push_back(make(&pq.element(pq.generators()[i]), c, 0));
    }
    FinGroup out = FinGroup::from_permutations(gens);
    if (out.order() != ell * pq.order())
        throw DomainError("affine_extension: multipliers do not define an action");
    return out;
}

} // namespace groups
} // namespace ggt
