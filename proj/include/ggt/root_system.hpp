#pragma once

/// Root systems of rank <= 8 and orders of Weyl group elements.
///
/// Irreducible types use Bourbaki numbering. Roots are integer vectors in the
/// basis of simple roots. Weyl group elements act as permutations of the
/// root list; exact enumeration walks the tree of reduced words in which the
/// parent of w is w s_i for the smallest right descent i.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ggt::roots {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
    Family family = Family::A;
    unsigned rank = 1;

    std::string label() const;
    bool is_exceptional() const;
    bool simply_laced() const;
    /// A1-A8, B2-B8, C3-C8, D4-D8, G2, F4, E6-E8.
    bool valid() const;

    static CartanType parse(std::string_view text);

    friend auto operator<=>(const CartanType& a, const CartanType& b) {
        if (auto c = a.family <=> b.family; c != 0)
            return c;
        return a.rank <=> b.rank;
    }
    friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Formal sum of irreducible types, kept sorted.
struct RootSystem {
    std::vector<CartanType> components;

    RootSystem() = default;
    explicit RootSystem(std::vector<CartanType> comps);
    /// "A4+G2"; throws DomainError for unknown types or total rank > 8.
    static RootSystem parse(std::string_view text);

    unsigned rank() const;
    std::string label() const;
    std::uint64_t weyl_order() const;
    bool irreducible() const { return components.size() == 1; }
    bool exceptional() const { return irreducible() && components.front().is_exceptional(); }

    friend bool operator==(const RootSystem&, const RootSystem&) = default;
};

/// Roots and reflections of an irreducible type.
struct RootData {
    CartanType type;
    unsigned rank = 0;
    /// gram[i][j] = (alpha_i, alpha_j), integer scaled.
    std::vector<std::vector<int>> gram;
    /// cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
    std::vector<std::vector<int>> cartan;
    /// Positive roots first (by height), then their negatives in the same order.
    std::vector<std::vector<int>> roots;
    std::size_t positive_count = 0;
    std::vector<int> length2;
    std::vector<bool> is_short;
    /// reflection[i][k] = index of s_i(root k).
    std::vector<std::vector<std::uint8_t>> reflection;
    /// Index of alpha_i in `roots`.
    std::vector<std::uint8_t> simple;

    std::size_t short_count() const;
    std::size_t short_simple_count() const;
    std::size_t index_of(const std::vector<int>& v) const;
};

/// Cached per type; thread-safe.
const RootData& root_data(CartanType t);

std::uint64_t weyl_order_formula(CartanType t);

/// Order of the permutation of the roots.
std::uint64_t permutation_order(const std::vector<std::uint8_t>& perm);

struct Enumeration {
    std::uint64_t count = 0;
    std::set<std::uint64_t> orders;
};

/// Exact enumeration of W(t); BoundExceeded if |W| > bound.
Enumeration enumerate_weyl(CartanType t, std::uint64_t bound = 10000000);

/// Order sets for A, B, C, D from cycle types.
std::set<std::uint64_t> classical_orders(CartanType t);

inline constexpr std::uint64_t kDefaultSeed = 20240607;
inline constexpr std::uint64_t kDefaultSamples = 1000000;

/// Orders met by a seeded lazy random walk on simple reflections. The result
/// depends only on (t, seed, samples), not on the thread count.
std::set<std::uint64_t> sampled_orders(CartanType t, std::uint64_t seed, std::uint64_t samples, bool use_cache = true);

enum class Mode { Exact, Sampled };

struct OrderSet {
    std::set<std::uint64_t> orders;
    std::vector<std::uint64_t> maximal;
    Mode mode = Mode::Exact;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
};

/// Exact mode: formulas for classical components, enumeration (cached) for
/// G2, F4, E6, E7; E8 raises BoundExceeded. Sampled mode: as exact, except
/// that E8 components are sampled.
OrderSet weyl_element_orders(const RootSystem& rs, Mode mode, std::uint64_t seed = kDefaultSeed,
                             std::uint64_t samples = kDefaultSamples);

std::vector<std::uint64_t> maximal_under_divisibility(const std::set<std::uint64_t>& orders);
std::set<std::uint64_t> lcm_combine(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b);
/// Every divisor of every element.
std::set<std::uint64_t> divisor_closure(const std::vector<std::uint64_t>& values);

struct TableRow {
    std::string label;
    std::vector<std::uint64_t> printed;
    std::vector<std::uint64_t> computed;
    /// Computed order set equals the divisor closure of the printed list, and
    /// the computed maximal set equals the printed list whenever the latter
    /// is an antichain.
    bool match = false;
    /// False when a printed entry divides another one (the B4 row lists 4
    /// next to 8).
    bool printed_antichain = true;
    Mode mode = Mode::Exact;
};

/// The 29 printed rows (label, maximal elements).
const std::vector<std::pair<std::string, std::vector<std::uint64_t>>>& printed_order_table();

/// Computes every printed row; E8 rows are sampled. With `strict`, the first
/// mismatch raises VerificationFailure naming the row.
std::vector<TableRow> reproduce_order_table(bool strict = true, std::uint64_t seed = kDefaultSeed,
                                            std::uint64_t samples = kDefaultSamples);

/// Every root system of rank <= rank_bound, ordered by rank then label.
std::vector<RootSystem> all_root_systems(unsigned rank_bound);

/// Root systems of rank <= rank_bound with elements of every required order.
std::vector<RootSystem> uniqueness_scan(unsigned rank_bound, const std::set<std::uint64_t>& required,
                                        std::uint64_t seed = kDefaultSeed, std::uint64_t samples = kDefaultSamples);

struct AuditEntry {
    std::string label;
    std::vector<std::uint64_t> maximal;
    bool printed = false;
    bool kept_by_policy = false;
};

/// Applies the omission rule (drop a system whose order set is a proper subset
/// of that of a non-exceptional system of equal or lower rank; among equal
/// sets keep the first by rank then label) to all systems of rank <= rank_bound
/// and lists every system either kept or printed.
std::vector<AuditEntry> omission_audit(unsigned rank_bound);

struct MinusculeData {
    std::size_t dim = 0;
    std::size_t zero_mult = 0;
    std::size_t short_roots = 0;
};

/// Nonzero weights are the short roots; zero weight multiplicity is the
/// number of short simple roots. Requires an irreducible system.
MinusculeData almost_minuscule_data(const RootSystem& rs);

struct NegativeControl {
    std::string name;
    std::size_t dim = 0;
    std::uint64_t group_order = 0;
    bool full_cycle_found = false;
};

struct CyclicCheck {
    bool found = false;
    /// Simple reflections whose product is the witness (a Coxeter element).
    std::vector<unsigned> word;
    std::uint64_t element_order = 0;
    std::size_t cycle_length = 0;
    std::vector<NegativeControl> controls;

    bool controls_pass() const;
};

/// For B_n (dim 2n+1) or G2 (dim 7): a Weyl element permuting the 2n nonzero
/// weights in one cycle, plus exhaustive negative controls on even-dimensional
/// orthogonal weight systems of rank <= 4.
CyclicCheck cyclic_weight_permutation_check(const RootSystem& rs, std::size_t dim);

/// Exhaustive scans over signed permutation groups: D2, D3, D4 standard,
/// D4 half-spin, B3 spin, B4 spin.
std::vector<NegativeControl> even_orthogonal_controls();

/// Parallel width from GGT_THREADS (default: hardware concurrency).
unsigned thread_count();

} // namespace ggt::roots
