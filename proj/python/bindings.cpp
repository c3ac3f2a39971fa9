// Python bindings. Reports cross the boundary as JSON text; the package wrapper decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypermod/catalog.hpp"
#include "hypermod/odefit.hpp"
#include "hypermod/pi_lab.hpp"
#include "hypermod/qmodular.hpp"
#include "hypermod/suite.hpp"
#include "hypermod/verifier.hpp"

namespace py = pybind11;
using namespace hypermod;

namespace {

const TheoremGroup& group(const std::string& id) {
    const TheoremGroup* g = default_catalog().find_group(id);
    if (!g) throw py::key_error("unknown group " + id);
    return *g;
}

ZagierParams zs_case(const std::string& c) {
    if (c == "5") return kZagierTriples[0];
    if (c == "a") return kZagierTriples[1];
    if (c == "b") return kZagierTriples[2];
    if (c == "c") return kZagierTriples[3];
    throw py::value_error("zs case must be one of 5, a, b, c");
}

std::vector<std::string> as_strings(const PowerSeries& s) {
    std::vector<std::string> out;
    for (const auto& c : s.coeffs()) out.push_back(to_string(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_hypermod, m) {
    m.doc() = "exact certification of hypergeometric, modular and 1/pi identities";

    m.def("catalog_path", &default_catalog_path);
    m.def("catalog_json", [] { return serialize_catalog(default_catalog()).dump(); });

    m.def("series_coeffs", [](const std::string& id, long n) {
        auto sid = parse_series_id(id);
        if (!sid) throw py::value_error("unknown series " + id);
        std::vector<std::string> out;
        for (long k = 0; k < n; ++k) out.push_back(to_string(series_coeff(*sid, k)));
        return out;
    }, py::arg("series"), py::arg("count"));

    m.def("expand_entry", [](const std::string& id, long order) {
        const IdentityEntry* e = default_catalog().find_entry(id);
        if (!e) throw py::key_error("unknown entry " + id);
        std::string var = "p";
        for (const auto& g : default_catalog().groups)
            for (const auto& x : g.entries)
                if (x.id == id) var = g.variable;
        py::gil_scoped_release release;
        return as_strings(expand_entry(*e, var, order));
    }, py::arg("entry"), py::arg("order"));

    m.def("verify_group", [](const std::string& id, long order, int jobs) {
        const TheoremGroup& g = group(id);
        py::gil_scoped_release release;
        return to_json(verify_group(g, order > 0 ? order : g.default_order, jobs)).dump();
    }, py::arg("group"), py::arg("order") = 0, py::arg("jobs") = 0);

    m.def("verify_clausen", [](int level, long order) { return to_json(verify_clausen(level, order)).dump(); },
          py::arg("level"), py::arg("order") = 60);
    m.def("verify_zs", [](const std::string& c, long order) { return to_json(verify_zs(zs_case(c), order)).dump(); },
          py::arg("case"), py::arg("order") = 60);

    m.def("fit_ode", [](const std::string& id, long terms, long max_order, long max_degree) {
        const IdentityEntry* e = default_catalog().find_entry(id);
        if (!e) throw py::key_error("unknown entry " + id);
        auto ode = fit_linear_ode(expand_entry(*e, "p", terms), max_order, max_degree);
        if (!ode) return std::string("null");
        return Json{{"ode", to_json(*ode)}, {"text", to_string(*ode)}, {"recurrence", to_json(ode_to_recurrence(*ode))}}
            .dump();
    }, py::arg("entry"), py::arg("terms") = 50, py::arg("max_order") = 2, py::arg("max_degree") = 6);

    m.def("q_identities", [] {
        std::vector<std::string> ids;
        for (const auto& q : q_identities()) ids.push_back(q.id);
        return ids;
    });
    m.def("verify_q_identity", [](const std::string& id, long order) {
        if (order <= 0)
            for (const auto& q : q_identities())
                if (q.id == id) order = q.default_order;
        return to_json(verify_q_identity(id, order)).dump();
    }, py::arg("id"), py::arg("order") = 0);

    m.def("pi_reference", [](long digits) { return pi_reference(digits).to_string(static_cast<int>(digits)); },
          py::arg("digits"));
    m.def("verify_pi_formula", [](const std::string& id, long digits) {
        const PiSeriesCase* c = default_catalog().find_pi(id);
        if (!c) throw py::key_error("unknown series case " + id);
        return to_json(verify_pi_formula(*c, digits > 0 ? digits : c->digits)).dump();
    }, py::arg("case"), py::arg("digits") = 0);
    m.def("verify_equivalence", [](const std::string& id, long digits) {
        const EquivalenceCase* c = default_catalog().find_equivalence(id);
        if (!c) throw py::key_error("unknown equivalence case " + id);
        return to_json(verify_equivalence_case(*c, digits)).dump();
    }, py::arg("case"), py::arg("digits") = 50);

    m.def("run_criterion", [](int k, int jobs) {
        py::gil_scoped_release release;
        return to_json(run_criterion(k, jobs)).dump();
    }, py::arg("criterion"), py::arg("jobs") = 0);
}
