#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>

#include <sstream>

#include "commands.hpp"
#include "kac/cocycle.hpp"
#include "kac/duality.hpp"
#include "kac/tower.hpp"

namespace py = pybind11;
using namespace kac;

namespace {

py::list entries(const ResidualReport& r) {
    py::list out;
    for (const auto& e : r.entries()) {
        py::dict d;
        d["name"] = e.name;
        d["residual"] = e.residual;
        d["tolerance"] = e.tolerance;
        d["pass"] = e.pass;
        out.append(d);
    }
    return out;
}

Tolerance tol(double t) { return {t, t}; }

using PyHopf = std::shared_ptr<Hopf>;
PyHopf hold(HopfPtr h) { return std::const_pointer_cast<Hopf>(std::move(h)); }

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = io::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_kac, m) {
    m.doc() = "Finite-dimensional C*-Hopf algebras, coactions and crossed products";

    py::register_exception<Error>(m, "KacError");
    py::register_exception<io::ParseError>(m, "ParseError");

    py::class_<Hopf, PyHopf>(m, "Hopf")
        .def_readonly("N", &Hopf::N)
        .def_readonly("label", &Hopf::label)
        .def_readonly("comult", &Hopf::comult)
        .def_readonly("counit", &Hopf::counit)
        .def_readonly("antipode", &Hopf::antipode)
        .def("mul", [](const Hopf& H, const Vec& x, const Vec& y) { return Vec(H.alg->mul(x, y)); })
        .def("star", [](const Hopf& H, const Vec& x) { return Vec(H.alg->star(x)); })
        .def("one", &Hopf::one)
        .def("delta", &Hopf::delta)
        .def("eps", &Hopf::eps)
        .def("S", &Hopf::S)
        .def("__repr__", [](const Hopf& H) { return "<Hopf " + H.label + " N=" + std::to_string(H.N) + ">"; });

    m.def("cyclic_group", &cyclic_group);
    m.def("symmetric_group3", &symmetric_group3);
    m.def("product_group", &product_group);
    m.def("named_group", &io::named_group);
    m.def("function_algebra", [](const CayleyTable& g, const std::string& l) { return hold(build_function_algebra(g, l)); },
          py::arg("group"), py::arg("label") = "C(G)");
    m.def("group_algebra", [](const CayleyTable& g, const std::string& l) { return hold(build_group_algebra(g, l)); },
          py::arg("group"), py::arg("label") = "C[G]");
    m.def("dual", [](const Hopf& H) { return hold(dual(H)); });
    m.def("tensor", [](const Hopf& a, const Hopf& b) { return hold(tensor_hopf(a, b)); });
    m.def("load",
          [](const std::string& path) {
              HopfPtr h = io::load_algebra(path).hopf;
              if (!h) throw io::ParseError(path + " is not a Hopf algebra");
              return hold(h);
          },
          "Hopf algebra from a JSON algebra file");
    m.def("to_json", [](const Hopf& H) { return io::to_json(H).dump(); });

    m.def("validate_hopf", [](const Hopf& H, double t) { return entries(validate_hopf(H, tol(t))); },
          py::arg("hopf"), py::arg("tol") = 1e-9);
    m.def("haar_element", &haar_element);
    m.def("check_comatrix",
          [](const Hopf& H, double t, std::uint64_t seed) {
              return entries(check_comatrix(H, comatrix_units(H, seed), haar_pair(H), tol(t)));
          },
          py::arg("hopf"), py::arg("tol") = 1e-9, py::arg("seed") = 0);
    m.def("span_dimension", &appendix_span_check);
    m.def("crossed_base_blocks", [](PyHopf H) { return build_base(H).wd.blocks; });

    m.def("tower_report",
          [](PyHopf H, int level, double t) {
              TowerBase b = build_base(H);
              TowerLevel l = build_level(b, level);
              ResidualReport r = check_level(b, l, nullptr, tol(t));
              TowerRohlin tr = rohlin_report(b, l, tol(t));
              r.merge(tr.projection);
              r.merge(tr.witness);
              r.merge(witness_from_projection(tr.rohlin, tol(t)).report, "dual ");
              return entries(r);
          },
          py::arg("hopf"), py::arg("level"), py::arg("tol") = 1e-9);
    m.def("L_constants", [](const Hopf& H) {
        LConstants c = compute_L(H);
        return py::make_tuple(c.sum_variant, c.max_variant);
    });

    m.def("run", &run_cli, "Run the command line front end; returns (exit code, stdout, stderr)");
    m.attr("__version__") = io::tool_version;
}
