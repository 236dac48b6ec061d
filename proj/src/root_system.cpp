#include "ggt/root_system.hpp"

#include "ggt/error.hpp"
#include "ggt/numth.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>
#include <tuple>

namespace ggt::roots {

namespace {

std::uint64_t factorial(unsigned n) {
    std::uint64_t f = 1;
    for (unsigned k = 2; k <= n; ++k)
        f *= k;
    return f;
}

std::vector<std::vector<int>> gram_matrix(CartanType t) {
    const unsigned n = t.rank;
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    auto link = [&](unsigned i, unsigned j, int v) {
        b[i][j] = v;
        b[j][i] = v;
    };
    switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
        for (unsigned i = 0; i < n; ++i)
            b[i][i] = 2;
        for (unsigned i = 0; i + 1 < n; ++i)
            link(i, i + 1, -1);
        if (t.family == Family::B)
            b[n - 1][n - 1] = 1;
        if (t.family == Family::C) {
            b[n - 1][n - 1] = 4;
            link(n - 2, n - 1, -2);
        }
        break;
    case Family::D:
        for (unsigned i = 0; i < n; ++i)
            b[i][i] = 2;
        for (unsigned i = 0; i + 2 < n; ++i)
            link(i, i + 1, -1);
        link(n - 3, n - 1, -1);
        break;
    case Family::G:
        b = {{2, -3}, {-3, 6}};
        break;
    case Family::F:
        b = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
        break;
    case Family::E:
        for (unsigned i = 0; i < n; ++i)
            b[i][i] = 2;
        // Chain 1-3-4-5-...-n with 2 attached to 4 (one-based labels).
        link(0, 2, -1);
        for (unsigned i = 2; i + 1 < n; ++i)
            link(i, i + 1, -1);
        link(1, 3, -1);
        break;
    }
    return b;
}

RootData build_root_data(CartanType t) {
    RootData rd;
    rd.type = t;
    rd.rank = t.rank;
    rd.gram = gram_matrix(t);
    const unsigned n = t.rank;
    rd.cartan.assign(n, std::vector<int>(n, 0));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j)
            rd.cartan[i][j] = 2 * rd.gram[i][j] / rd.gram[i][i];
    }

    auto reflect = [&](const std::vector<int>& v, unsigned i) {
        int pairing = 0;
        for (unsigned j = 0; j < n; ++j)
            pairing += v[j] * rd.cartan[i][j];
        std::vector<int> out = v;
        out[i] -= pairing;
        return out;
    };

    // Orbit of the simple roots under the simple reflections.
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        if (found.insert(e).second)
            frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& v : frontier) {
            for (unsigned i = 0; i < n; ++i) {
                auto w = reflect(v, i);
                if (found.insert(w).second)
                    next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::vector<int>> positive;
    for (const auto& v : found) {
        if (std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; }))
            positive.push_back(v);
    }
    auto height = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    std::sort(positive.begin(), positive.end(), [&](const auto& a, const auto& b) {
        const int ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a > b;
    });
    if (positive.size() * 2 != found.size())
        throw VerificationFailure("root system " + t.label() + ": roots are not symmetric");
    if (found.size() > 255)
        throw DomainError("root system " + t.label() + ": too many roots");

    rd.positive_count = positive.size();
    rd.roots = positive;
    for (const auto& v : positive) {
        std::vector<int> neg(v.size());
        std::transform(v.begin(), v.end(), neg.begin(), [](int c) { return -c; });
        rd.roots.push_back(std::move(neg));
    }

    rd.length2.resize(rd.roots.size());
    for (std::size_t k = 0; k < rd.roots.size(); ++k) {
        int l = 0;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j)
                l += rd.roots[k][i] * rd.roots[k][j] * rd.gram[i][j];
        }
        rd.length2[k] = l;
    }
    const int shortest = *std::min_element(rd.length2.begin(), rd.length2.end());
    rd.is_short.resize(rd.roots.size());
    for (std::size_t k = 0; k < rd.roots.size(); ++k)
        rd.is_short[k] = rd.length2[k] == shortest;

    std::map<std::vector<int>, std::uint8_t> index;
    for (std::size_t k = 0; k < rd.roots.size(); ++k)
        index.emplace(rd.roots[k], static_cast<std::uint8_t>(k));
    rd.reflection.assign(n, std::vector<std::uint8_t>(rd.roots.size()));
    for (unsigned i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < rd.roots.size(); ++k)
            rd.reflection[i][k] = index.at(reflect(rd.roots[k], i));
    }
    rd.simple.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        rd.simple[i] = index.at(e);
    }
    return rd;
}

using Perm = std::vector<std::uint8_t>;

struct Node {
    Perm perm;
    unsigned depth = 0;
};

// Children of w in the reduced-word tree: w s_i with l(w s_i) > l(w) whose
// smallest right descent is i.
template <class F>
void for_each_child(const RootData& rd, const Perm& w, F&& emit) {
    const auto npos = rd.positive_count;
    for (unsigned i = 0; i < rd.rank; ++i) {
        if (w[rd.simple[i]] >= npos)
            continue;
        bool minimal = true;
        for (unsigned j = 0; j < i && minimal; ++j) {
            if (w[rd.reflection[i][rd.simple[j]]] >= npos)
                minimal = false;
        }
        if (!minimal)
            continue;
        Perm child(w.size());
        const auto& s = rd.reflection[i];
        for (std::size_t k = 0; k < w.size(); ++k)
            child[k] = w[s[k]];
        emit(std::move(child));
    }
}

Perm identity_perm(const RootData& rd) {
    Perm id(rd.roots.size());
    std::iota(id.begin(), id.end(), std::uint8_t{0});
    return id;
}

struct Partial {
    std::uint64_t count = 0;
    std::set<std::uint64_t> orders;
};

void dfs(const RootData& rd, Perm root, Partial& out) {
    std::vector<Perm> stack;
    stack.push_back(std::move(root));
    while (!stack.empty()) {
        Perm w = std::move(stack.back());
        stack.pop_back();
        ++out.count;
        out.orders.insert(permutation_order(w));
        for_each_child(rd, w, [&](Perm child) { stack.push_back(std::move(child)); });
    }
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

template <class Task>
void run_parallel(std::size_t tasks, Task&& task) {
    const unsigned width = std::max(1U, std::min<unsigned>(thread_count(), static_cast<unsigned>(tasks)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks; t = next++)
            task(t);
    };
    if (width == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < width; ++k)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
}

void signed_cycle_orders(unsigned remaining, unsigned max_part, std::uint64_t acc, unsigned negatives,
                         bool signs, bool even_only, std::set<std::uint64_t>& out) {
    if (remaining == 0) {
        if (!even_only || negatives % 2 == 0)
            out.insert(acc);
        return;
    }
    for (unsigned k = std::min(remaining, max_part); k >= 1; --k) {
        signed_cycle_orders(remaining - k, k, std::lcm(acc, std::uint64_t{k}), negatives, signs, even_only, out);
        if (signs)
            signed_cycle_orders(remaining - k, k, std::lcm(acc, std::uint64_t{2} * k), negatives + 1, signs,
                                even_only, out);
    }
}

std::mutex g_cache_mutex;
std::map<CartanType, std::set<std::uint64_t>> g_exact_cache;
std::map<std::tuple<CartanType, std::uint64_t, std::uint64_t>, std::set<std::uint64_t>> g_sampled_cache;

std::set<std::uint64_t> exact_component(CartanType t) {
    switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
        return classical_orders(t);
    default:
        break;
    }
    if (weyl_order_formula(t) > 10000000)
        throw BoundExceeded("exact enumeration of W(" + t.label() + ") exceeds 10^7 elements; use sampled mode");
    {
        std::lock_guard lock(g_cache_mutex);
        if (auto it = g_exact_cache.find(t); it != g_exact_cache.end())
            return it->second;
    }
    auto e = enumerate_weyl(t);
    std::lock_guard lock(g_cache_mutex);
    return g_exact_cache.emplace(t, std::move(e.orders)).first->second;
}

std::set<std::uint64_t> component_orders(CartanType t, Mode mode, std::uint64_t seed, std::uint64_t samples) {
    if (mode == Mode::Sampled && t == CartanType{Family::E, 8})
        return sampled_orders(t, seed, samples);
    return exact_component(t);
}

} // namespace

unsigned thread_count() {
    if (const char* env = std::getenv("GGT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024)
            return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::string CartanType::label() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

bool CartanType::is_exceptional() const {
    return family == Family::E || family == Family::F || family == Family::G;
}

bool CartanType::simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
}

bool CartanType::valid() const {
    switch (family) {
    case Family::A:
        return rank >= 1 && rank <= 8;
    case Family::B:
        return rank >= 2 && rank <= 8;
    case Family::C:
        return rank >= 3 && rank <= 8;
    case Family::D:
        return rank >= 4 && rank <= 8;
    case Family::E:
        return rank >= 6 && rank <= 8;
    case Family::F:
        return rank == 4;
    case Family::G:
        return rank == 2;
    }
    return false;
}

CartanType CartanType::parse(std::string_view text) {
    if (text.size() != 2 || text[1] < '0' || text[1] > '9')
        throw DomainError("unknown Cartan type '" + std::string(text) + "'");
    CartanType t{static_cast<Family>(text[0]), static_cast<unsigned>(text[1] - '0')};
    if (std::string("ABCDEFG").find(text[0]) == std::string::npos || !t.valid())
        throw DomainError("unknown Cartan type '" + std::string(text) + "'");
    return t;
}

RootSystem::RootSystem(std::vector<CartanType> comps) : components(std::move(comps)) {
    if (components.empty())
        throw DomainError("root system needs at least one component");
    for (const auto& c : components) {
        if (!c.valid())
            throw DomainError("unknown Cartan type " + c.label());
    }
    std::sort(components.begin(), components.end());
    if (rank() > 8)
        throw DomainError("root system " + label() + " has rank > 8");
}

RootSystem RootSystem::parse(std::string_view text) {
    std::vector<CartanType> comps;
    std::size_t start = 0;
    while (true) {
        const auto plus = text.find('+', start);
        auto piece = text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        while (!piece.empty() && piece.front() == ' ')
            piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ')
            piece.remove_suffix(1);
        comps.push_back(CartanType::parse(piece));
        if (plus == std::string_view::npos)
            break;
        start = plus + 1;
    }
    return RootSystem(std::move(comps));
}

unsigned RootSystem::rank() const {
    unsigned r = 0;
    for (const auto& c : components)
        r += c.rank;
    return r;
}

std::string RootSystem::label() const {
    std::string out;
    for (const auto& c : components) {
        if (!out.empty())
            out += '+';
        out += c.label();
    }
    return out;
}

std::uint64_t RootSystem::weyl_order() const {
    std::uint64_t w = 1;
    for (const auto& c : components)
        w = static_cast<std::uint64_t>(numth::checked_mul(static_cast<std::int64_t>(w), static_cast<std::int64_t>(weyl_order_formula(c))));
    return w;
}

std::size_t RootData::short_count() const { return static_cast<std::size_t>(std::count(is_short.begin(), is_short.end(), true)); }

std::size_t RootData::short_simple_count() const {
    std::size_t c = 0;
    for (auto s : simple)
        c += is_short[s] ? 1 : 0;
    return c;
}

std::size_t RootData::index_of(const std::vector<int>& v) const {
    const auto it = std::find(roots.begin(), roots.end(), v);
    if (it == roots.end())
        throw DomainError("not a root of " + type.label());
    return static_cast<std::size_t>(it - roots.begin());
}

const RootData& root_data(CartanType t) {
    static std::mutex mutex;
    static std::map<CartanType, std::unique_ptr<RootData>> cache;
    if (!t.valid())
        throw DomainError("unknown Cartan type " + t.label());
    std::lock_guard lock(mutex);
    auto& slot = cache[t];
    if (!slot)
        slot = std::make_unique<RootData>(build_root_data(t));
    return *slot;
}

std::uint64_t weyl_order_formula(CartanType t) {
    const unsigned n = t.rank;
    switch (t.family) {
    case Family::A:
        return factorial(n + 1);
    case Family::B:
    case Family::C:
        return (std::uint64_t{1} << n) * factorial(n);
    case Family::D:
        return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::G:
        return 12;
    case Family::F:
        return 1152;
    case Family::E:
        return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    }
    return 0;
}

std::uint64_t permutation_order(const std::vector<std::uint8_t>& perm) {
    std::array<bool, 256> seen{};
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

Enumeration enumerate_weyl(CartanType t, std::uint64_t bound) {
    const std::uint64_t expected = weyl_order_formula(t);
    if (expected > bound)
        throw BoundExceeded("|W(" + t.label() + ")| = " + std::to_string(expected) + " exceeds bound " +
                            std::to_string(bound));
    const RootData& rd = root_data(t);

    // Expand the tree breadth-first until the frontier is wide enough to split
    // across threads, then finish each subtree depth-first.
    Partial head;
    std::vector<Perm> frontier{identity_perm(rd)};
    const std::size_t target = std::size_t{64} * thread_count();
    while (!frontier.empty() && frontier.size() < target) {
        std::vector<Perm> next;
        for (const auto& w : frontier) {
            ++head.count;
            head.orders.insert(permutation_order(w));
            for_each_child(rd, w, [&](Perm c) { next.push_back(std::move(c)); });
        }
        frontier = std::move(next);
    }

    std::vector<Partial> parts(frontier.size());
    run_parallel(frontier.size(), [&](std::size_t k) { dfs(rd, frontier[k], parts[k]); });

    Enumeration e;
    e.count = head.count;
    e.orders = std::move(head.orders);
    for (const auto& p : parts) {
        e.count += p.count;
        e.orders.insert(p.orders.begin(), p.orders.end());
    }
    if (e.count != expected)
        throw VerificationFailure("enumeration of W(" + t.label() + ") found " + std::to_string(e.count) +
                                  " elements, expected " + std::to_string(expected));
    return e;
}

std::set<std::uint64_t> classical_orders(CartanType t) {
    std::set<std::uint64_t> out;
    switch (t.family) {
    case Family::A:
        signed_cycle_orders(t.rank + 1, t.rank + 1, 1, 0, false, false, out);
        break;
    case Family::B:
    case Family::C:
        signed_cycle_orders(t.rank, t.rank, 1, 0, true, false, out);
        break;
    case Family::D:
        signed_cycle_orders(t.rank, t.rank, 1, 0, true, true, out);
        break;
    default:
        throw DomainError("classical_orders: " + t.label() + " is exceptional");
    }
    return out;
}

std::set<std::uint64_t> sampled_orders(CartanType t, std::uint64_t seed, std::uint64_t samples, bool use_cache) {
    if (use_cache) {
        std::lock_guard lock(g_cache_mutex);
        if (auto it = g_sampled_cache.find({t, seed, samples}); it != g_sampled_cache.end())
            return it->second;
    }
    const RootData& rd = root_data(t);
    constexpr std::uint64_t kChunk = 16384;
    constexpr unsigned kBurnIn = 256;
    constexpr unsigned kStride = 8;
    const std::size_t chunks = static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
    std::vector<std::set<std::uint64_t>> parts(chunks);

    run_parallel(chunks, [&](std::size_t c) {
        std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (c + 1));
        std::mt19937_64 rng(splitmix64(state));
        const std::uint64_t choices = rd.rank + 1;
        Perm w = identity_perm(rd);
        Perm tmp(w.size());
        // Lazy walk: one choice in rank+1 keeps w, so both parities of length
        // are reached.
        auto step = [&] {
            const auto i = rng() % choices;
            if (i == rd.rank)
                return;
            const auto& s = rd.reflection[i];
            for (std::size_t k = 0; k < w.size(); ++k)
                tmp[k] = w[s[k]];
            w.swap(tmp);
        };
        for (unsigned k = 0; k < kBurnIn; ++k)
            step();
        const std::uint64_t begin = c * kChunk;
        const std::uint64_t end = std::min(samples, begin + kChunk);
        for (std::uint64_t s = begin; s < end; ++s) {
            for (unsigned k = 0; k < kStride; ++k)
                step();
            parts[c].insert(permutation_order(w));
        }
    });

    std::set<std::uint64_t> out{1};
    for (const auto& p : parts)
        out.insert(p.begin(), p.end());
    if (!use_cache)
        return out;
    std::lock_guard lock(g_cache_mutex);
    return g_sampled_cache.emplace(std::make_tuple(t, seed, samples), std::move(out)).first->second;
}

std::vector<std::uint64_t> maximal_under_divisibility(const std::set<std::uint64_t>& orders) {
    std::vector<std::uint64_t> out;
    for (auto o : orders) {
        const bool dominated =
            std::any_of(orders.begin(), orders.end(), [&](std::uint64_t p) { return p != o && p % o == 0; });
        if (!dominated)
            out.push_back(o);
    }
    return out;
}

std::set<std::uint64_t> lcm_combine(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    std::set<std::uint64_t> out;
    for (auto x : a) {
        for (auto y : b)
            out.insert(std::lcm(x, y));
    }
    return out;
}

std::set<std::uint64_t> divisor_closure(const std::vector<std::uint64_t>& values) {
    std::set<std::uint64_t> out;
    for (auto v : values) {
        for (std::uint64_t d = 1; d <= v; ++d) {
            if (v % d == 0)
                out.insert(d);
        }
    }
    return out;
}

OrderSet weyl_element_orders(const RootSystem& rs, Mode mode, std::uint64_t seed, std::uint64_t samples) {
    if (rs.components.empty())
        throw DomainError("empty root system");
    OrderSet os;
    os.mode = mode;
    if (mode == Mode::Sampled) {
        os.seed = seed;
        os.samples = samples;
    }
    os.orders = {1};
    for (const auto& c : rs.components)
        os.orders = lcm_combine(os.orders, component_orders(c, mode, seed, samples));
    os.maximal = maximal_under_divisibility(os.orders);
    return os;
}

const std::vector<std::pair<std::string, std::vector<std::uint64_t>>>& printed_order_table() {
    static const std::vector<std::pair<std::string, std::vector<std::uint64_t>>> rows = {
        {"A1", {2}},
        {"A2", {2, 3}},
        {"B2", {4}},
        {"G2", {6}},
        {"B3", {4, 6}},
        {"A2+B2", {12}},
        {"A4", {4, 5, 6}},
        {"B4", {4, 6, 8}},
        {"F4", {8, 12}},
        {"B5", {8, 10, 12}},
        {"A2+B4", {24}},
        {"A4+B2", {12, 20}},
        {"A4+G2", {12, 30}},
        {"A6", {7, 10, 12}},
        {"E6", {8, 9, 10, 12}},
        {"A1+E6", {8, 10, 12, 18}},
        {"A2+B5", {24, 30}},
        {"A4+B3", {12, 20, 30}},
        {"A7", {7, 8, 10, 12, 15}},
        {"B7", {14, 20, 24}},
        {"E7", {8, 12, 14, 18, 30}},
        {"A2+E6", {18, 24, 30}},
        {"A4+F4", {24, 40, 60}},
        {"A6+B2", {12, 20, 28}},
        {"A6+G2", {12, 30, 42}},
        {"A8", {8, 9, 12, 14, 15, 20}},
        {"B2+E6", {8, 20, 36}},
        {"B8", {14, 16, 20, 24, 30}},
        {"E8", {14, 18, 20, 24, 30}},
    };
    return rows;
}

std::vector<TableRow> reproduce_order_table(bool strict, std::uint64_t seed, std::uint64_t samples) {
    std::vector<TableRow> out;
    for (const auto& [label, printed] : printed_order_table()) {
        const auto rs = RootSystem::parse(label);
        const bool has_e8 =
            std::find(rs.components.begin(), rs.components.end(), CartanType{Family::E, 8}) != rs.components.end();
        const Mode mode = has_e8 ? Mode::Sampled : Mode::Exact;
        const auto os = weyl_element_orders(rs, mode, seed, samples);
        TableRow row;
        row.label = label;
        row.printed = printed;
        row.computed = os.maximal;
        row.mode = mode;
        row.printed_antichain = maximal_under_divisibility({printed.begin(), printed.end()}) == printed;
        row.match = os.orders == divisor_closure(printed) && (!row.printed_antichain || os.maximal == printed);
        if (strict && !row.match)
            throw VerificationFailure("order table row " + label + " does not match");
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<RootSystem> all_root_systems(unsigned rank_bound) {
    rank_bound = std::min(rank_bound, 8U);
    std::vector<CartanType> types;
    for (char f : std::string("ABCDEFG")) {
        for (unsigned r = 1; r <= 8; ++r) {
            CartanType t{static_cast<Family>(f), r};
            if (t.valid() && r <= rank_bound)
                types.push_back(t);
        }
    }
    std::vector<RootSystem> out;
    std::vector<CartanType> current;
    auto recurse = [&](auto& self, std::size_t from, unsigned budget) -> void {
        if (!current.empty())
            out.emplace_back(current);
        for (std::size_t k = from; k < types.size(); ++k) {
            if (types[k].rank > budget)
                continue;
            current.push_back(types[k]);
            self(self, k, budget - types[k].rank);
            current.pop_back();
        }
    };
    recurse(recurse, 0, rank_bound);
    std::sort(out.begin(), out.end(), [](const RootSystem& a, const RootSystem& b) {
        return std::make_pair(a.rank(), a.label()) < std::make_pair(b.rank(), b.label());
    });
    return out;
}

std::vector<RootSystem> uniqueness_scan(unsigned rank_bound, const std::set<std::uint64_t>& required,
                                        std::uint64_t seed, std::uint64_t samples) {
    if (rank_bound > 8)
        throw DomainError("uniqueness_scan: rank bound must be <= 8");
    std::vector<RootSystem> out;
    for (const auto& rs : all_root_systems(rank_bound)) {
        const auto os = weyl_element_orders(rs, Mode::Sampled, seed, samples);
        if (std::includes(os.orders.begin(), os.orders.end(), required.begin(), required.end()))
            out.push_back(rs);
    }
    return out;
}

std::vector<AuditEntry> omission_audit(unsigned rank_bound) {
    if (rank_bound > 8)
        throw DomainError("omission_audit: rank bound must be <= 8");
    const auto systems = all_root_systems(rank_bound);
    std::vector<std::set<std::uint64_t>> sets;
    sets.reserve(systems.size());
    for (const auto& rs : systems)
        sets.push_back(weyl_element_orders(rs, Mode::Sampled).orders);

    std::set<std::string> printed;
    for (const auto& row : printed_order_table())
        printed.insert(row.first);

    std::vector<AuditEntry> out;
    for (std::size_t x = 0; x < systems.size(); ++x) {
        bool kept = true;
        for (std::size_t y = 0; y < systems.size() && kept; ++y) {
            if (y == x || systems[y].rank() > systems[x].rank())
                continue;
            const bool subset = std::includes(sets[y].begin(), sets[y].end(), sets[x].begin(), sets[x].end());
            if (!subset)
                continue;
            if (sets[x] == sets[y]) {
                // Equal sets: only the first system in (rank, label) order stays.
                if (y < x)
                    kept = false;
            } else if (!systems[y].exceptional()) {
                kept = false;
            }
        }
        const bool is_printed = printed.count(systems[x].label()) > 0;
        if (kept || is_printed)
            out.push_back({systems[x].label(), maximal_under_divisibility(sets[x]), is_printed, kept});
    }
    return out;
}

MinusculeData almost_minuscule_data(const RootSystem& rs) {
    if (!rs.irreducible())
        throw DomainError("almost_minuscule_data: " + rs.label() + " is not irreducible");
    const RootData& rd = root_data(rs.components.front());
    MinusculeData m;
    m.short_roots = rd.short_count();
    m.zero_mult = rd.short_simple_count();
    m.dim = m.short_roots + m.zero_mult;
    return m;
}

namespace {

// Weights are integer vectors (spin weights doubled). Signed permutations are
// (perm, sign mask); D-type groups keep only even sign masks.
bool signed_scan_full_cycle(const std::vector<std::vector<int>>& weights, unsigned n, bool even_only,
                            std::uint64_t& group_order) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < weights.size(); ++k)
        index.emplace(weights[k], k);
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    group_order = 0;
    bool found = false;
    do {
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            if (even_only && std::popcount(mask) % 2 != 0)
                continue;
            ++group_order;
            std::vector<std::uint8_t> action(weights.size());
            for (std::size_t k = 0; k < weights.size(); ++k) {
                std::vector<int> img(n);
                for (unsigned i = 0; i < n; ++i) {
                    const int v = weights[k][i];
                    img[perm[i]] = (mask >> perm[i] & 1U) ? -v : v;
                }
                action[k] = static_cast<std::uint8_t>(index.at(img));
            }
            std::size_t len = 0;
            std::size_t j = 0;
            do {
                j = action[j];
                ++len;
            } while (j != 0);
            if (len == weights.size())
                found = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

std::vector<std::vector<int>> standard_weights(unsigned n) {
    std::vector<std::vector<int>> w;
    for (unsigned i = 0; i < n; ++i) {
        for (int s : {1, -1}) {
            std::vector<int> v(n, 0);
            v[i] = s;
            w.push_back(v);
        }
    }
    return w;
}

// All (+-1,...,+-1), optionally restricted to an even number of minus signs.
std::vector<std::vector<int>> spin_weights(unsigned n, int parity) {
    std::vector<std::vector<int>> w;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (parity >= 0 && static_cast<int>(std::popcount(mask) % 2) != parity)
            continue;
        std::vector<int> v(n);
        for (unsigned i = 0; i < n; ++i)
            v[i] = (mask >> i & 1U) ? -1 : 1;
        w.push_back(v);
    }
    return w;
}

} // namespace

std::vector<NegativeControl> even_orthogonal_controls() {
    struct Spec {
        std::string name;
        std::vector<std::vector<int>> weights;
        unsigned n;
        bool even_only;
    };
    const std::vector<Spec> specs = {
        {"D2 standard", standard_weights(2), 2, true},   {"D3 standard", standard_weights(3), 3, true},
        {"D4 standard", standard_weights(4), 4, true},   {"D4 half-spin", spin_weights(4, 0), 4, true},
        {"B3 spin", spin_weights(3, -1), 3, false},      {"B4 spin", spin_weights(4, -1), 4, false},
    };
    std::vector<NegativeControl> out;
    for (const auto& s : specs) {
        NegativeControl c;
        c.name = s.name;
        c.dim = s.weights.size();
        c.full_cycle_found = signed_scan_full_cycle(s.weights, s.n, s.even_only, c.group_order);
        out.push_back(c);
    }
    return out;
}

bool CyclicCheck::controls_pass() const {
    return !controls.empty() &&
           std::none_of(controls.begin(), controls.end(), [](const NegativeControl& c) { return c.full_cycle_found; });
}

CyclicCheck cyclic_weight_permutation_check(const RootSystem& rs, std::size_t dim) {
    if (!rs.irreducible())
        throw DomainError("cyclic_weight_permutation_check: " + rs.label() + " is not irreducible");
    const CartanType t = rs.components.front();
    if (t.family != Family::B && t != CartanType{Family::G, 2})
        throw DomainError("cyclic_weight_permutation_check: expected B_n or G2, got " + t.label());
    const std::size_t n = t.family == Family::B ? t.rank : 3;
    if (dim != 2 * n + 1)
        throw DomainError("cyclic_weight_permutation_check: dimension must be " + std::to_string(2 * n + 1));

    const RootData& rd = root_data(t);
    CyclicCheck out;
    Perm w = identity_perm(rd);
    for (unsigned i = 0; i < rd.rank; ++i) {
        Perm next(w.size());
        for (std::size_t k = 0; k < w.size(); ++k)
            next[k] = w[rd.reflection[i][k]];
        w = std::move(next);
        out.word.push_back(i + 1);
    }
    out.element_order = permutation_order(w);

    std::size_t start = 0;
    while (!rd.is_short[start])
        ++start;
    std::size_t j = start;
    do {
        j = w[j];
        ++out.cycle_length;
    } while (j != start);
    out.found = out.cycle_length == 2 * n && rd.short_count() == 2 * n;
    out.controls = even_orthogonal_controls();
    return out;
}

} // namespace ggt::roots
