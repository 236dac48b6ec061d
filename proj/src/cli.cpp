#include "ggt/cli.hpp"

#include "ggt/error.hpp"
#include "ggt/fingroup.hpp"
#include "ggt/numth.hpp"
#include "ggt/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace ggt::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (auto x : v)
        out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, sep)) {
        piece.erase(0, piece.find_first_not_of(' '));
        piece.erase(piece.find_last_not_of(' ') + 1);
        if (!piece.empty())
            out.push_back(piece);
    }
    return out;
}

void add(Report& r, std::string name, bool pass, std::string witness = "") {
    r.checks.push_back({std::move(name), pass, std::move(witness)});
}

// ---- orbit ---------------------------------------------------------------

Report cmd_orbit(const std::string& tau_text, std::int64_t q) {
    Report r;
    r.command = "orbit";
    const auto tau = RootOfUnity::parse(tau_text);
    r.inputs = {{"tau", tau}, {"q", q}};
    const auto orbit = frobenius_orbit(tau, q);
    r.results = {{"orbit", orbit}};
    if (tau.den() <= 2) {
        add(r, "orbit_lemma", true, "tau = +-1 lies outside the lemma");
    } else if (!orbit.selfdual) {
        add(r, "orbit_lemma", true, "orbit is not self-dual; nothing to check");
    } else {
        const bool ok = check_orbit_lemma(orbit);
        add(r, "orbit_lemma", ok,
            "size " + std::to_string(orbit.size()) + ", inverse at position " +
                std::to_string(orbit.index_of(tau.inverse()).value_or(0)));
    }
    return r;
}

// ---- primes --------------------------------------------------------------

Report cmd_primes(const prime_search::SearchRequest& req) {
    Report r;
    r.command = "primes";
    r.inputs = {{"n", req.n},
                {"ell", req.ell},
                {"t", req.t},
                {"d", req.d},
                {"conductor_bound", req.effective_conductor_bound()},
                {"ceiling", req.ceiling}};
    const auto cert = prime_search::find_pq(req);
    r.results = {{"certificate", cert}};
    for (const auto& c : prime_search::validate_certificate(cert))
        add(r, c.name, c.pass, c.witness);
    return r;
}

// ---- param ---------------------------------------------------------------

Report cmd_param_tame(std::int64_t q, std::int64_t p, unsigned n, std::size_t bound) {
    Report r;
    r.command = "param tame";
    r.inputs = {{"q", q}, {"p", p}, {"n", n}};
    const auto param = weil::build_tame_parameter_prime(q, p, n);
    const auto tc = weil::check_tame_parameter(param);
    add(r, "conj_relation", tc.conj_relation, "F x F^-1 = x^q");
    add(r, "det_inertia", tc.det_inertia);
    add(r, "det_frobenius", tc.det_frobenius);
    add(r, "form_inertia", tc.form_inertia);
    add(r, "form_frobenius", tc.form_frobenius);
    add(r, "eigenvalues_match_orbits", tc.eigenvalues_match_orbits);

    const auto img = weil::image_group(param, bound);
    const auto expected = 2 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(p);
    add(r, "image_order", img.order() == expected,
        std::to_string(img.order()) + " (expected 2np = " + std::to_string(expected) + ")");
    const auto np = groups::is_type_np(img, 2 * n, static_cast<std::uint64_t>(p));
    add(r, "image_type_np", np.has_value(), "type (" + std::to_string(2 * n) + ", " + std::to_string(p) + ")");

    const auto shape = weil::char_poly_shape(param.eigenvalues());
    add(r, "char_poly_palindromic", shape.passes, "f(x) = (x - 1) g(x), g palindromic of degree 2n");

    json results = {{"parameter", param},
                    {"checks", tc},
                    {"image", {{"order", img.order()}, {"type_np", np.has_value()}}},
                    {"char_poly", shape}};
    if (n == 3) {
        const auto verdict = weil::is_g2_parameter(param);
        const bool identity = (q * q - q + 1) % p == 0;
        const bool arrangement = weil::g2_admissible_eigenvalues(param.eigenvalues());
        results["g2"] = {{"g2", verdict.g2},
                         {"reason", verdict.reason},
                         {"p_divides_q2_q_1", identity},
                         {"eigenvalue_arrangement", arrangement}};
        add(r, "g2_cross_check", verdict.g2 == identity && identity == arrangement,
            std::string("verdict ") + (verdict.g2 ? "G2" : "not G2"));
    }
    r.results = std::move(results);
    return r;
}

Report cmd_param_real(const std::vector<std::int64_t>& a) {
    Report r;
    r.command = "param real";
    r.inputs = {{"a", a}};
    const auto param = weil::real_parameter(a);
    std::vector<std::int64_t> expected = a;
    for (auto x : a)
        expected.push_back(-x);
    expected.push_back(0);
    add(r, "infinitesimal_character", param.infinitesimal_character == expected, "(a, -a, 0)");
    std::vector<std::int64_t> sorted = param.infinitesimal_character;
    std::sort(sorted.begin(), sorted.end());
    add(r, "regular", std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "entries pairwise distinct");
    json results = {{"parameter", param}};
    if (a.size() == 3)
        results["g2"] = weil::is_g2_real(a[0], a[1], a[2]);
    else
        results["g2"] = nullptr;
    r.results = std::move(results);
    return r;
}

// ---- wild ----------------------------------------------------------------

Report cmd_wild_so(unsigned m) {
    Report r;
    r.command = "wild so";
    r.inputs = {{"m", m}};
    const auto w = wild::build_so_wild(m);
    const auto rep = wild::verify_prop_two(w);
    r.results = {{"report", rep}};
    add(r, "order", rep.order == rep.expected_order,
        std::to_string(rep.order) + " = 2^(m-1) m = " + std::to_string(rep.expected_order));
    add(r, "abelianization", rep.abelianization == std::vector<std::uint64_t>{m}, "[" + join(rep.abelianization) + "]");
    add(r, "commutator", rep.commutator_elementary && rep.commutator_order == (std::uint64_t{1} << (m - 1)),
        "order " + std::to_string(rep.commutator_order));
    add(r, "det_trivial", rep.det_trivial);
    add(r, "irreducible", rep.irreducible && rep.character_norm == 1, "norm " + std::to_string(rep.character_norm));
    add(r, "selfdual", rep.selfdual);
    add(r, "conjugates_distinct", rep.conjugates_distinct);
    add(r, "joint_kernel_is_diagonal", rep.joint_kernel_is_diagonal);
    add(r, "p_det_one", rep.p_det_one);
    add(r, "conj_relation", rep.conj_relation);
    if (rep.g2_checked)
        add(r, "g2_obstruction", rep.g2_obstruction, "{1^5, (-1)^2} is not G2-admissible");
    return r;
}

Report cmd_wild_g2() {
    Report r;
    r.command = "wild g2";
    const auto g = wild::build_g2_jordan();
    const auto rep = wild::verify_jordan(g);
    r.results = {{"report", rep}};
    add(r, "order", rep.order == 168, std::to_string(rep.order));
    add(r, "induced_degree", rep.induced_degree == 21, std::to_string(rep.induced_degree));
    add(r, "j_unique_minimal_normal", rep.j_elementary_abelian && rep.j_unique_minimal_normal && rep.j_order == 8);
    add(r, "quotient_nonabelian", rep.quotient_order == 21 && rep.quotient_nonabelian);
    const bool three_sevens = rep.constituents.size() == 3 &&
                              std::all_of(rep.constituents.begin(), rep.constituents.end(), [](const auto& c) {
                                  return c.degree == 7 && c.norm == 1 && c.multiplicity == 1;
                              });
    add(r, "three_degree_7_irreducibles", three_sevens && rep.constituents_sum_to_induced && rep.constituents_distinct,
        "induced norm " + std::to_string(rep.induced_norm));
    add(r, "faithful", std::all_of(rep.constituents.begin(), rep.constituents.end(),
                                   [](const auto& c) { return c.faithful; }));
    add(r, "one_selfdual", rep.selfdual_count() == 1, std::to_string(rep.selfdual_count()) + " self-dual");
    return r;
}

// ---- weyl ----------------------------------------------------------------

std::optional<std::vector<std::uint64_t>> printed_row(const std::string& label) {
    for (const auto& [l, v] : roots::printed_order_table()) {
        if (l == label)
            return v;
    }
    return std::nullopt;
}

roots::Mode parse_mode(const std::string& s) {
    if (s == "exact")
        return roots::Mode::Exact;
    if (s == "sampled")
        return roots::Mode::Sampled;
    throw DomainError("mode must be exact or sampled");
}

Report cmd_weyl_orders(const std::string& type, const std::string& mode_text, std::uint64_t seed,
                       std::uint64_t samples) {
    Report r;
    r.command = "weyl orders";
    const auto rs = roots::RootSystem::parse(type);
    const auto mode = parse_mode(mode_text);
    r.inputs = {{"type", rs.label()}, {"mode", mode}};
    if (mode == roots::Mode::Sampled) {
        r.inputs["seed"] = seed;
        r.inputs["samples"] = samples;
    }
    const auto os = roots::weyl_element_orders(rs, mode, seed, samples);
    json res = os;
    res["root_system"] = rs.label();
    res["weyl_order"] = rs.weyl_order();
    r.results = std::move(res);
    add(r, "divisor_closed", roots::divisor_closure(os.maximal) == os.orders);
    if (const auto row = printed_row(rs.label())) {
        const bool antichain = roots::maximal_under_divisibility({row->begin(), row->end()}) == *row;
        const bool ok = os.orders == roots::divisor_closure(*row) && (!antichain || os.maximal == *row);
        add(r, "printed_row", ok, "printed {" + join(*row) + "}, computed {" + join(os.maximal) + "}");
    }
    const bool has_e8 = std::find(rs.components.begin(), rs.components.end(),
                                  roots::CartanType{roots::Family::E, 8}) != rs.components.end();
    if (has_e8 && rs.irreducible()) {
        const auto closure = roots::divisor_closure({14, 18, 20, 24, 30});
        add(r, "e8_closure_containment", std::includes(closure.begin(), closure.end(), os.orders.begin(), os.orders.end()),
            "no order outside the divisors of {14,18,20,24,30}");
    }
    return r;
}

Report cmd_weyl_table(std::uint64_t seed, std::uint64_t samples, unsigned audit_rank) {
    Report r;
    r.command = "weyl table";
    r.inputs = {{"seed", seed}, {"samples", samples}, {"audit_rank", audit_rank}};
    const auto rows = roots::reproduce_order_table(false, seed, samples);
    for (const auto& row : rows) {
        std::string w = "printed {" + join(row.printed) + "}, computed {" + join(row.computed) + "}";
        if (!row.printed_antichain)
            w += "; printed list is not a divisibility antichain";
        add(r, "row " + row.label, row.match, w);
    }
    json audit = json::array();
    json discrepancies = json::array();
    for (const auto& e : roots::omission_audit(audit_rank)) {
        audit.push_back(e);
        if (e.printed != e.kept_by_policy)
            discrepancies.push_back(e.label);
    }
    r.results = {{"rows", rows}, {"omission_audit", {{"rank_bound", audit_rank}, {"entries", audit}, {"discrepancies", discrepancies}}}};
    return r;
}

Report cmd_weyl_unique(unsigned rank, const std::vector<std::uint64_t>& orders, std::uint64_t seed,
                       std::uint64_t samples) {
    Report r;
    r.command = "weyl unique";
    const std::set<std::uint64_t> required(orders.begin(), orders.end());
    r.inputs = {{"rank", rank}, {"orders", required}};
    const auto found = roots::uniqueness_scan(rank, required, seed, samples);
    std::vector<std::string> labels;
    for (const auto& rs : found)
        labels.push_back(rs.label());
    const auto scanned = roots::all_root_systems(rank).size();
    r.results = {{"systems", labels}, {"scanned", scanned}};

    static const std::vector<std::tuple<unsigned, std::set<std::uint64_t>, std::string>> clauses = {
        {2, {6}, "G2"}, {4, {8, 12}, "F4"}, {6, {9}, "E6"}, {7, {18, 30}, "E7"}, {8, {18, 20, 30}, "E8"}};
    bool known = false;
    for (const auto& [cr, co, expect] : clauses) {
        if (cr == rank && co == required) {
            known = true;
            add(r, "unique", labels == std::vector<std::string>{expect}, "expected only " + expect);
        }
    }
    if (!known) {
        bool ok = true;
        for (const auto& rs : found) {
            const auto os = roots::weyl_element_orders(rs, roots::Mode::Sampled, seed, samples).orders;
            ok = ok && std::includes(os.begin(), os.end(), required.begin(), required.end());
        }
        add(r, "matches_contain_orders", ok, std::to_string(found.size()) + " of " + std::to_string(scanned));
    }
    return r;
}

Report cmd_minuscule(const std::string& type) {
    Report r;
    r.command = "minuscule";
    const auto rs = roots::RootSystem::parse(type);
    r.inputs = {{"type", rs.label()}};
    if (!rs.irreducible())
        throw DomainError("minuscule: type must be irreducible");
    const auto data = roots::almost_minuscule_data(rs);
    json results = data;
    const auto t = rs.components.front();
    const std::size_t n = t.rank;
    std::optional<std::pair<std::size_t, std::size_t>> table;
    switch (t.family) {
    case roots::Family::B: table = {{2 * n + 1, 1}}; break;
    case roots::Family::C: table = {{2 * n * n - n - 1, n - 1}}; break;
    case roots::Family::G: table = {{7, 1}}; break;
    case roots::Family::F: table = {{26, 2}}; break;
    default: break;
    }
    if (table) {
        add(r, "table", data.dim == table->first && data.zero_mult == table->second,
            "expected (" + std::to_string(table->first) + ", " + std::to_string(table->second) + ")");
    } else {
        const auto& rd = roots::root_data(t);
        add(r, "adjoint", data.dim == rd.roots.size() + rd.rank, "simply laced: every root is short");
    }
    if (t.family == roots::Family::B || t.family == roots::Family::G) {
        const auto cyc = roots::cyclic_weight_permutation_check(rs, data.dim);
        json controls = cyc.controls;
        results["cyclic_weight_permutation"] = {{"found", cyc.found},
                                                {"word", cyc.word},
                                                {"element_order", cyc.element_order},
                                                {"cycle_length", cyc.cycle_length},
                                                {"controls", controls}};
        add(r, "cyclic_weights", cyc.found, "Coxeter element cycles the " + std::to_string(cyc.cycle_length) + " short roots");
        add(r, "even_orthogonal_controls", cyc.controls_pass(), "no full cycle in any control");
    }
    r.results = std::move(results);
    return r;
}

// ---- group ---------------------------------------------------------------

struct GroupOptions {
    std::string preset = "metacyclic";
    std::uint64_t m = 6, p = 7, n = 1, q = 5;
    std::optional<std::size_t> gamma_d;
    std::vector<std::uint64_t> type_np;
    std::optional<std::uint64_t> ell;
    std::size_t bound = kDefaultGroupBound;
    std::size_t check_limit = 5000;
};

FinGroup build_preset(const GroupOptions& o, json& inputs) {
    inputs["preset"] = o.preset;
    if (o.preset == "metacyclic") {
        inputs["m"] = o.m;
        inputs["p"] = o.p;
        return groups::metacyclic(o.m, o.p);
    }
    if (o.preset == "cyclic") {
        inputs["n"] = o.n;
        return groups::cyclic(o.n);
    }
    if (o.preset == "a4")
        return groups::alternating4();
    if (o.preset == "wild-so") {
        inputs["m"] = o.m;
        return wild::build_so_wild(static_cast<unsigned>(o.m), o.bound).group;
    }
    if (o.preset == "g2-jordan")
        return wild::build_g2_jordan().affine;
    if (o.preset == "tame") {
        inputs["q"] = o.q;
        inputs["p"] = o.p;
        inputs["n"] = o.n;
        const auto param = weil::build_tame_parameter_prime(static_cast<std::int64_t>(o.q),
                                                            static_cast<std::int64_t>(o.p), static_cast<unsigned>(o.n));
        return weil::image_group(param, o.bound);
    }
    throw DomainError("unknown preset '" + o.preset + "'");
}

std::vector<std::uint64_t> orders_of(const std::vector<Subgroup>& subs) {
    std::vector<std::uint64_t> out;
    for (const auto& s : subs)
        out.push_back(s.order());
    return out;
}

Report cmd_group_analyze(const GroupOptions& o) {
    Report r;
    r.command = "group analyze";
    const FinGroup g = build_preset(o, r.inputs);
    const auto normals = groups::normal_subgroups(g);
    json results = {{"order", g.order()},
                    {"normal_subgroup_orders", orders_of(normals)},
                    {"abelianization", groups::abelianization(g)}};
    add(r, "lattice_ends", normals.front().order() == 1 && normals.back().order() == g.order(),
        std::to_string(normals.size()) + " normal subgroups");

    if (o.gamma_d) {
        const auto d = *o.gamma_d;
        r.inputs["gamma_d"] = d;
        const auto gd = groups::gamma_d(g, d);
        results["gamma_d"] = {{"d", d}, {"order", gd.order()}};
        add(r, "gamma_d_normal", groups::is_normal(g, gd));
        if (g.order() <= o.check_limit) {
            bool ok = true;
            std::string bad;
            for (const auto& nsub : normals) {
                const auto quo = groups::quotient(g, nsub);
                if (!(groups::image(quo, gd) == groups::gamma_d(quo.group, d))) {
                    ok = false;
                    bad = "fails for |N| = " + std::to_string(nsub.order());
                    break;
                }
            }
            add(r, "d_commutes", ok, ok ? "all " + std::to_string(normals.size()) + " quotients" : bad);
        }
        results["d_commutes_checked"] = g.order() <= o.check_limit;
    }
    if (!o.type_np.empty()) {
        if (o.type_np.size() != 2)
            throw DomainError("--type-np expects n,p");
        const auto n = o.type_np[0], p = o.type_np[1];
        r.inputs["type_np"] = o.type_np;
        const auto w = groups::is_type_np(g, n, p);
        json tnp = {{"n", n}, {"p", p}, {"found", w.has_value()}};
        if (w) {
            tnp["witness_order"] = g.element_order(w->delta_generator);
            tnp["n_observed"] = w->n_observed;
            add(r, "type_np_witness", g.element_order(w->delta_generator) == p && w->n_observed == n,
                "Z/" + std::to_string(p) + " normal, conjugation of order " + std::to_string(w->n_observed));
        }
        results["type_np"] = std::move(tnp);
        if (o.ell) {
            r.inputs["ell"] = *o.ell;
            results["type_npl"] = {{"ell", *o.ell},
                                   {"found", groups::is_type_npl(g, n, p, *o.ell)},
                                   {"ell_core_order", groups::ell_core(g, *o.ell).order()}};
        }
    }
    r.results = std::move(results);
    return r;
}

// ---- eigs ----------------------------------------------------------------

Report cmd_eigs_g2check(const std::string& text) {
    Report r;
    r.command = "eigs g2check";
    std::vector<RootOfUnity> eigs;
    for (const auto& piece : split(text, ','))
        eigs.push_back(RootOfUnity::parse(piece));
    r.inputs = {{"eigs", eigs}};
    json results = {{"admissible", weil::g2_admissible_eigenvalues(eigs)}};
    try {
        const auto shape = weil::char_poly_shape(eigs);
        results["char_poly"] = shape;
        add(r, "char_poly_palindromic", shape.passes, "f(x) = (x - 1) g(x), g palindromic");
    } catch (const DomainError& e) {
        results["char_poly"] = nullptr;
        add(r, "char_poly_palindromic", false, e.what());
    }
    r.results = std::move(results);
    return r;
}

} // namespace

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void to_json(json& j, const Check& c) { j = json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}}; }

void from_json(const json& j, Check& c) {
    c.name = j.at("name").get<std::string>();
    c.pass = j.at("pass").get<bool>();
    c.witness = j.at("witness").get<std::string>();
}

void to_json(json& j, const Report& r) {
    j = json{{"command", r.command}, {"inputs", r.inputs},   {"results", r.results},
             {"checks", r.checks},   {"version", r.version}, {"schema", r.schema}};
}

void from_json(const json& j, Report& r) {
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    r.checks = j.at("checks").get<std::vector<Check>>();
    r.version = j.at("version").get<std::string>();
    r.schema = j.at("schema").get<int>();
}

std::string render_json(const Report& r) { return json(r).dump(2) + "\n"; }

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << r.command << " (" << r.version << ")\n";
    os << "inputs: " << r.inputs.dump() << "\n";
    os << "results:\n" << r.results.dump(2) << "\n";
    std::size_t passed = 0;
    for (const auto& c : r.checks) {
        os << (c.pass ? "  PASS " : "  FAIL ") << c.name;
        if (!c.witness.empty())
            os << ": " << c.witness;
        os << "\n";
        passed += c.pass ? 1 : 0;
    }
    os << passed << "/" << r.checks.size() << " checks passed\n";
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Explicit finite objects behind local Langlands parameters, with verification reports."};
    app.name("ggt");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    std::string format = "json";
    std::string out_file;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_file, "write the report to FILE instead of standard output");

    auto sub = [](CLI::App* parent, const char* name, const char* help) {
        auto* s = parent->add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    std::string tau = "1/3";
    std::int64_t orbit_q = 5;
    auto* orbit = sub(&app, "orbit", "Frobenius orbit of a root of unity");
    orbit->add_option("--tau", tau, "NUM/DEN")->required();
    orbit->add_option("--q", orbit_q, "prime")->required();

    prime_search::SearchRequest req;
    std::uint64_t conductor = 0;
    auto* primes = sub(&app, "primes", "search prime pairs (p, q)");
    primes->add_option("--n", req.n)->required();
    primes->add_option("--ell", req.ell)->required();
    primes->add_option("--t", req.t)->required();
    primes->add_option("--d", req.d)->required();
    primes->add_option("--conductor-bound", conductor, "default 4d");
    primes->add_option("--ceiling", req.ceiling, "exclusive bound on p and q")->capture_default_str();

    auto* param = sub(&app, "param", "local parameters");
    param->require_subcommand(1);
    std::int64_t tq = 5, tp = 3;
    unsigned tn = 1;
    std::size_t bound = kDefaultGroupBound;
    bool json_flag = false;
    auto* tame = sub(param, "tame", "tame parameter through a root of unity of prime order p");
    tame->add_option("--q", tq)->required();
    tame->add_option("--p", tp)->required();
    tame->add_option("--n", tn)->required();
    tame->add_option("--bound", bound, "group enumeration cap")->capture_default_str();
    tame->add_flag("--json", json_flag, "same as --format json");
    std::vector<std::int64_t> real_a;
    auto* real = sub(param, "real", "archimedean parameter");
    real->add_option("--a", real_a, "A1,A2,...")->required()->delimiter(',');

    auto* wild = sub(&app, "wild", "wild 2-adic parameters");
    wild->require_subcommand(1);
    unsigned wm = 3;
    auto* wso = sub(wild, "so", "SO(m) image");
    wso->add_option("--m", wm)->required();
    auto* wg2 = sub(wild, "g2", "G2 Jordan group of order 168");

    auto* weyl = sub(&app, "weyl", "Weyl group element orders");
    weyl->require_subcommand(1);
    std::string wtype, wmode = "exact";
    std::uint64_t seed = roots::kDefaultSeed, samples = roots::kDefaultSamples;
    auto* worders = sub(weyl, "orders", "order set of one root system");
    worders->add_option("--type", wtype)->required();
    worders->add_option("--mode", wmode)->check(CLI::IsMember({"exact", "sampled"}))->capture_default_str();
    unsigned audit_rank = 7;
    auto* wtable = sub(weyl, "table", "reproduce the maximal-order table");
    unsigned urank = 8;
    std::vector<std::uint64_t> uorders;
    auto* wunique = sub(weyl, "unique", "root systems of bounded rank with all required orders");
    wunique->add_option("--rank", urank)->required();
    wunique->add_option("--orders", uorders)->required()->delimiter(',');
    for (auto* s : {worders, wtable, wunique}) {
        s->add_option("--seed", seed, "sampling seed")->capture_default_str();
        s->add_option("--samples", samples, "sample count")->capture_default_str();
    }
    wtable->add_option("--audit-rank", audit_rank, "rank bound of the omission audit")->capture_default_str();

    std::string mtype;
    auto* minus = sub(&app, "minuscule", "almost-minuscule weight data");
    minus->add_option("--type", mtype)->required();

    GroupOptions go;
    std::size_t gamma = 0;
    std::uint64_t ell = 0;
    auto* group = sub(&app, "group", "finite group analysis");
    group->require_subcommand(1);
    auto* analyze = sub(group, "analyze", "normal subgroups, Gamma^d, type (n,p)");
    analyze->add_option("--preset", go.preset, "metacyclic, cyclic, a4, wild-so, g2-jordan, tame")->capture_default_str();
    analyze->add_option("--m", go.m)->capture_default_str();
    analyze->add_option("--p", go.p)->capture_default_str();
    analyze->add_option("--n", go.n)->capture_default_str();
    analyze->add_option("--q", go.q)->capture_default_str();
    analyze->add_option("--gamma-d", gamma);
    analyze->add_option("--type-np", go.type_np, "n,p")->delimiter(',');
    analyze->add_option("--ell", ell);
    analyze->add_option("--bound", go.bound, "group enumeration cap")->capture_default_str();
    analyze->add_option("--check-limit", go.check_limit, "largest group for the quotient checks")->capture_default_str();

    std::string eig_text;
    auto* eigs = sub(&app, "eigs", "eigenvalue multisets");
    eigs->require_subcommand(1);
    auto* g2check = sub(eigs, "g2check", "G2 arrangement and palindromic shape");
    g2check->add_option("--eigs", eig_text, "NUM/DEN,...")->required();

    std::vector<std::string> argv_store{"ggt"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    Report report;
    try {
        if (*orbit) {
            report = cmd_orbit(tau, orbit_q);
        } else if (*primes) {
            if (primes->count("--conductor-bound") > 0)
                req.conductor_bound = conductor;
            report = cmd_primes(req);
        } else if (*tame) {
            report = cmd_param_tame(tq, tp, tn, bound);
        } else if (*real) {
            report = cmd_param_real(real_a);
        } else if (*wso) {
            report = cmd_wild_so(wm);
        } else if (*wg2) {
            report = cmd_wild_g2();
        } else if (*worders) {
            report = cmd_weyl_orders(wtype, wmode, seed, samples);
        } else if (*wtable) {
            report = cmd_weyl_table(seed, samples, audit_rank);
        } else if (*wunique) {
            report = cmd_weyl_unique(urank, uorders, seed, samples);
        } else if (*minus) {
            report = cmd_minuscule(mtype);
        } else if (*analyze) {
            if (analyze->count("--gamma-d") > 0)
                go.gamma_d = gamma;
            if (analyze->count("--ell") > 0)
                go.ell = ell;
            report = cmd_group_analyze(go);
        } else if (*g2check) {
            report = cmd_eigs_g2check(eig_text);
        } else {
            err << app.help();
            return kUsage;
        }
    } catch (const DomainError& e) {
        err << "ggt: domain error: " << e.what() << "\n";
        return kUsage;
    } catch (const BoundExceeded& e) {
        err << "ggt: bound exceeded: " << e.what() << "\n";
        return kBound;
    } catch (const SearchExhausted& e) {
        err << "ggt: search exhausted: " << e.what() << "\n";
        return kBound;
    } catch (const Overflow& e) {
        err << "ggt: overflow: " << e.what() << "\n";
        return kBound;
    } catch (const VerificationFailure& e) {
        err << "ggt: verification failure: " << e.what() << "\n";
        return kCheckFailed;
    }

    const std::string text = format == "text" && !json_flag ? render_text(report) : render_json(report);
    if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) {
            err << "ggt: cannot write " << out_file << "\n";
            return kUsage;
        }
        f << text;
    } else {
        out << text;
    }
    return report.all_pass() ? kOk : kCheckFailed;
}

} // namespace ggt::cli
