#include "ggt/serialize.hpp"

#include "ggt/error.hpp"

namespace ggt {

using nlohmann::json;

void to_json(json& j, const RootOfUnity& r) { j = r.to_string(); }

void from_json(const json& j, RootOfUnity& r) { r = RootOfUnity::parse(j.get<std::string>()); }

void to_json(json& j, const FrobeniusOrbit& o) {
    j = json{{"q", o.q}, {"elements", o.elements}, {"size", o.size()}, {"selfdual", o.selfdual}};
}

void from_json(const json& j, FrobeniusOrbit& o) {
    o.q = j.at("q").get<std::int64_t>();
    o.elements = j.at("elements").get<std::vector<RootOfUnity>>();
    o.selfdual = j.at("selfdual").get<bool>();
    if (j.contains("size") && j.at("size").get<std::size_t>() != o.elements.size())
        throw DomainError("orbit JSON: size does not match elements");
}

void to_json(json& j, const MonomialMatrix& m) { j = json{{"perm", m.perm()}, {"diag", m.diag()}}; }

void from_json(const json& j, MonomialMatrix& m) {
    m = MonomialMatrix(j.at("perm").get<std::vector<std::uint32_t>>(), j.at("diag").get<std::vector<RootOfUnity>>());
}

void to_json(json& j, const CyclotomicInt& z) { j = json{{"modulus", z.modulus()}, {"coeffs", z.reduced()}}; }

namespace prime_search {

void to_json(json& j, const ConditionCheck& c) { j = json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}}; }

void from_json(const json& j, ConditionCheck& c) {
    c.name = j.at("name").get<std::string>();
    c.pass = j.at("pass").get<bool>();
    c.witness = j.at("witness").get<std::string>();
}

void to_json(json& j, const SearchCertificate& c) {
    j = json{{"p", c.pair.p},
             {"q", c.pair.q},
             {"m", c.pair.m},
             {"n", c.n},
             {"ell", c.ell},
             {"t", c.t},
             {"d", c.d},
             {"conductor_bound", c.conductor_bound},
             {"k_min", c.k_min},
             {"f", c.f},
             {"condition3_values", c.condition3_values},
             {"surrogate_moduli", c.surrogate_moduli},
             {"order_trace", c.order_trace},
             {"ell_is_two", c.ell_is_two},
             {"checks", c.checks}};
}

void from_json(const json& j, SearchCertificate& c) {
    c.pair.p = j.at("p").get<std::uint64_t>();
    c.pair.q = j.at("q").get<std::uint64_t>();
    c.pair.m = j.at("m").get<std::uint64_t>();
    c.n = j.at("n").get<unsigned>();
    c.ell = j.at("ell").get<std::uint64_t>();
    c.t = j.at("t").get<std::uint64_t>();
    c.d = j.at("d").get<std::uint64_t>();
    c.conductor_bound = j.at("conductor_bound").get<std::uint64_t>();
    c.k_min = j.at("k_min").get<std::uint64_t>();
    c.f = j.at("f").get<std::uint64_t>();
    c.condition3_values = j.at("condition3_values").get<std::vector<std::uint64_t>>();
    c.surrogate_moduli = j.at("surrogate_moduli").get<std::vector<std::uint64_t>>();
    c.order_trace = j.at("order_trace").get<std::vector<std::uint64_t>>();
    c.ell_is_two = j.at("ell_is_two").get<bool>();
    c.checks = j.at("checks").get<std::vector<ConditionCheck>>();
}

} // namespace prime_search

namespace weil {

void to_json(json& j, const TameParameter& p) {
    j = json{{"n", p.n},
             {"q", p.q},
             {"dim", p.dim()},
             {"orbits", p.orbits},
             {"inertia", p.inertia},
             {"frobenius", p.frobenius},
             {"middle_sign", p.middle_sign},
             {"eigenvalues", p.eigenvalues()}};
}

void from_json(const json& j, TameParameter& p) {
    p.n = j.at("n").get<unsigned>();
    p.q = j.at("q").get<std::int64_t>();
    p.orbits = j.at("orbits").get<std::vector<FrobeniusOrbit>>();
    p.inertia = j.at("inertia").get<MonomialMatrix>();
    p.frobenius = j.at("frobenius").get<MonomialMatrix>();
    p.middle_sign = j.at("middle_sign").get<int>();
    if (p.inertia.dim() != p.dim() || p.frobenius.dim() != p.dim())
        throw DomainError("tame parameter JSON: matrix size is not 2n+1");
}

void to_json(json& j, const TameChecks& c) {
    j = json{{"conj_relation", c.conj_relation},   {"det_inertia", c.det_inertia},
             {"det_frobenius", c.det_frobenius},   {"form_inertia", c.form_inertia},
             {"form_frobenius", c.form_frobenius}, {"eigenvalues_match_orbits", c.eigenvalues_match_orbits}};
}

void to_json(json& j, const RealParameter& p) {
    j = json{{"a", p.a}, {"infinitesimal_character", p.infinitesimal_character}};
}

void from_json(const json& j, RealParameter& p) {
    p = real_parameter(j.at("a").get<std::vector<std::int64_t>>());
    if (j.contains("infinitesimal_character") &&
        j.at("infinitesimal_character").get<std::vector<std::int64_t>>() != p.infinitesimal_character)
        throw DomainError("real parameter JSON: infinitesimal character does not match a");
}

void to_json(json& j, const CharPolyShape& s) {
    json g_rational = json::array();
    for (const auto& r : s.g_rational)
        g_rational.push_back(r ? json(*r) : json(nullptr));
    j = json{{"passes", s.passes}, {"modulus", s.modulus}, {"g", s.g}, {"g_rational", g_rational}};
}

} // namespace weil

namespace wild {

void to_json(json& j, const PropTwoReport& r) {
    j = json{{"m", r.m},
             {"order", r.order},
             {"expected_order", r.expected_order},
             {"abelianization", r.abelianization},
             {"commutator_order", r.commutator_order},
             {"commutator_elementary", r.commutator_elementary},
             {"det_trivial", r.det_trivial},
             {"character_norm", r.character_norm},
             {"irreducible", r.irreducible},
             {"selfdual", r.selfdual},
             {"conjugates_distinct", r.conjugates_distinct},
             {"joint_kernel_is_diagonal", r.joint_kernel_is_diagonal},
             {"p_det_one", r.p_det_one},
             {"conj_relation", r.conj_relation},
             {"g2_checked", r.g2_checked},
             {"g2_obstruction", r.g2_obstruction}};
}

void from_json(const json& j, PropTwoReport& r) {
    r.m = j.at("m").get<unsigned>();
    r.order = j.at("order").get<std::uint64_t>();
    r.expected_order = j.at("expected_order").get<std::uint64_t>();
    r.abelianization = j.at("abelianization").get<std::vector<std::uint64_t>>();
    r.commutator_order = j.at("commutator_order").get<std::uint64_t>();
    r.commutator_elementary = j.at("commutator_elementary").get<bool>();
    r.det_trivial = j.at("det_trivial").get<bool>();
    r.character_norm = j.at("character_norm").get<std::int64_t>();
    r.irreducible = j.at("irreducible").get<bool>();
    r.selfdual = j.at("selfdual").get<bool>();
    r.conjugates_distinct = j.at("conjugates_distinct").get<bool>();
    r.joint_kernel_is_diagonal = j.at("joint_kernel_is_diagonal").get<bool>();
    r.p_det_one = j.at("p_det_one").get<bool>();
    r.conj_relation = j.at("conj_relation").get<bool>();
    r.g2_checked = j.at("g2_checked").get<bool>();
    r.g2_obstruction = j.at("g2_obstruction").get<bool>();
}

void to_json(json& j, const JordanReport& r) {
    json constituents = json::array();
    for (const auto& c : r.constituents) {
        constituents.push_back(json{{"k", c.k},
                                    {"degree", c.degree},
                                    {"norm", c.norm},
                                    {"multiplicity", c.multiplicity},
                                    {"selfdual", c.selfdual},
                                    {"faithful", c.faithful}});
    }
    j = json{{"order", r.order},
             {"induced_degree", r.induced_degree},
             {"induced_norm", r.induced_norm},
             {"j_order", r.j_order},
             {"j_elementary_abelian", r.j_elementary_abelian},
             {"j_unique_minimal_normal", r.j_unique_minimal_normal},
             {"normal_subgroup_orders", r.normal_subgroup_orders},
             {"quotient_order", r.quotient_order},
             {"quotient_nonabelian", r.quotient_nonabelian},
             {"stabilizer_order", r.stabilizer_order},
             {"stabilizer_is_galois", r.stabilizer_is_galois},
             {"character_orbit_size", r.character_orbit_size},
             {"constituents_sum_to_induced", r.constituents_sum_to_induced},
             {"constituents_distinct", r.constituents_distinct},
             {"selfdual_count", r.selfdual_count()},
             {"constituents", constituents}};
}

} // namespace wild

namespace roots {

void to_json(json& j, Mode m) { j = m == Mode::Exact ? "exact" : "sampled"; }

void from_json(const json& j, Mode& m) {
    const auto s = j.get<std::string>();
    if (s == "exact")
        m = Mode::Exact;
    else if (s == "sampled")
        m = Mode::Sampled;
    else
        throw DomainError("unknown mode '" + s + "'");
}

void to_json(json& j, const OrderSet& o) {
    j = json{{"orders", o.orders}, {"maximal", o.maximal}, {"mode", o.mode}};
    if (o.mode == Mode::Sampled) {
        j["seed"] = o.seed;
        j["samples"] = o.samples;
    }
}

void from_json(const json& j, OrderSet& o) {
    o.orders = j.at("orders").get<std::set<std::uint64_t>>();
    o.maximal = j.at("maximal").get<std::vector<std::uint64_t>>();
    o.mode = j.at("mode").get<Mode>();
    o.seed = j.value("seed", std::uint64_t{0});
    o.samples = j.value("samples", std::uint64_t{0});
}

void to_json(json& j, const TableRow& r) {
    j = json{{"label", r.label},
             {"printed", r.printed},
             {"computed", r.computed},
             {"match", r.match},
             {"printed_antichain", r.printed_antichain},
             {"mode", r.mode}};
}

void from_json(const json& j, TableRow& r) {
    r.label = j.at("label").get<std::string>();
    r.printed = j.at("printed").get<std::vector<std::uint64_t>>();
    r.computed = j.at("computed").get<std::vector<std::uint64_t>>();
    r.match = j.at("match").get<bool>();
    r.printed_antichain = j.at("printed_antichain").get<bool>();
    r.mode = j.at("mode").get<Mode>();
}

void to_json(json& j, const MinusculeData& m) {
    j = json{{"dim", m.dim}, {"zero_mult", m.zero_mult}, {"short_roots", m.short_roots}};
}

void from_json(const json& j, MinusculeData& m) {
    m.dim = j.at("dim").get<std::size_t>();
    m.zero_mult = j.at("zero_mult").get<std::size_t>();
    m.short_roots = j.at("short_roots").get<std::size_t>();
}

void to_json(json& j, const AuditEntry& e) {
    j = json{{"label", e.label}, {"maximal", e.maximal}, {"printed", e.printed}, {"kept_by_policy", e.kept_by_policy}};
}

void to_json(json& j, const NegativeControl& c) {
    j = json{{"name", c.name}, {"dim", c.dim}, {"group_order", c.group_order}, {"full_cycle_found", c.full_cycle_found}};
}

} // namespace roots

} // namespace ggt
