#include "ggt/cli.hpp"
#include "ggt/error.hpp"
#include "ggt/numth.hpp"
#include "ggt/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using nlohmann::json;

namespace {

// Structured results cross the boundary as JSON text; the Python package
// decodes them into dicts.
std::string orbit(const std::string& tau, std::int64_t q) {
    return json(ggt::frobenius_orbit(ggt::RootOfUnity::parse(tau), q)).dump();
}

std::string find_pq(unsigned n, std::uint64_t ell, std::uint64_t t, std::uint64_t d,
                    std::optional<std::uint64_t> conductor_bound, std::uint64_t ceiling) {
    ggt::prime_search::SearchRequest req{n, ell, t, d, conductor_bound, ceiling};
    return json(ggt::prime_search::find_pq(req)).dump();
}

std::string validate_certificate(const std::string& text) {
    const auto cert = json::parse(text).get<ggt::prime_search::SearchCertificate>();
    return json(ggt::prime_search::validate_certificate(cert)).dump();
}

std::string tame_parameter(std::int64_t q, std::int64_t p, unsigned n) {
    const auto param = ggt::weil::build_tame_parameter_prime(q, p, n);
    json j = param;
    j["checks"] = ggt::weil::check_tame_parameter(param);
    j["image_order"] = ggt::weil::image_group(param).order();
    return j.dump();
}

std::string weyl_orders(const std::string& type, const std::string& mode, std::uint64_t seed, std::uint64_t samples) {
    const auto rs = ggt::roots::RootSystem::parse(type);
    json m = mode;
    json j = ggt::roots::weyl_element_orders(rs, m.get<ggt::roots::Mode>(), seed, samples);
    j["root_system"] = rs.label();
    j["weyl_order"] = rs.weyl_order();
    return j.dump();
}

std::string order_table(std::uint64_t seed, std::uint64_t samples) {
    return json(ggt::roots::reproduce_order_table(false, seed, samples)).dump();
}

std::vector<std::string> uniqueness_scan(unsigned rank, const std::vector<std::uint64_t>& orders) {
    std::vector<std::string> out;
    for (const auto& rs : ggt::roots::uniqueness_scan(rank, {orders.begin(), orders.end()}))
        out.push_back(rs.label());
    return out;
}

std::string almost_minuscule(const std::string& type) {
    return json(ggt::roots::almost_minuscule_data(ggt::roots::RootSystem::parse(type))).dump();
}

std::vector<ggt::RootOfUnity> parse_eigs(const std::vector<std::string>& eigs) {
    std::vector<ggt::RootOfUnity> out;
    for (const auto& e : eigs)
        out.push_back(ggt::RootOfUnity::parse(e));
    return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = ggt::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_ggt, m) {
    m.doc() = "Core routines of the ggt toolkit.";

    py::register_exception<ggt::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ggt::BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
    py::register_exception<ggt::SearchExhausted>(m, "SearchExhausted", PyExc_RuntimeError);
    py::register_exception<ggt::VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);
    py::register_exception<ggt::Overflow>(m, "Overflow", PyExc_OverflowError);

    m.def("mult_order", &ggt::numth::mult_order, py::arg("a"), py::arg("m"));
    m.def("is_prime", &ggt::numth::is_prime, py::arg("n"));
    m.def("orbit", &orbit, py::arg("tau"), py::arg("q"));
    m.def("find_pq", &find_pq, py::arg("n"), py::arg("ell"), py::arg("t"), py::arg("d"),
          py::arg("conductor_bound") = std::nullopt, py::arg("ceiling") = ggt::prime_search::kDefaultCeiling);
    m.def("validate_certificate", &validate_certificate, py::arg("certificate"));
    m.def("tame_parameter", &tame_parameter, py::arg("q"), py::arg("p"), py::arg("n"));
    m.def("weyl_orders", &weyl_orders, py::arg("type"), py::arg("mode") = "exact",
          py::arg("seed") = ggt::roots::kDefaultSeed, py::arg("samples") = ggt::roots::kDefaultSamples);
    m.def("order_table", &order_table, py::arg("seed") = ggt::roots::kDefaultSeed,
          py::arg("samples") = ggt::roots::kDefaultSamples);
    m.def("uniqueness_scan", &uniqueness_scan, py::arg("rank"), py::arg("orders"));
    m.def("almost_minuscule", &almost_minuscule, py::arg("type"));
    m.def(
        "g2_admissible", [](const std::vector<std::string>& e) { return ggt::weil::g2_admissible_eigenvalues(parse_eigs(e)); },
        py::arg("eigs"));
    m.def(
        "char_poly_shape", [](const std::vector<std::string>& e) { return json(ggt::weil::char_poly_shape(parse_eigs(e))).dump(); },
        py::arg("eigs"));
    m.def("run_cli", &run_cli, py::arg("args"), "Run the command line front end; returns (exit code, stdout, stderr).");
    m.attr("__version__") = ggt::cli::kVersion;
}
