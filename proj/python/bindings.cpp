#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "charsum/bounds.hpp"
#include "charsum/characters.hpp"
#include "charsum/charsums.hpp"
#include "charsum/cli.hpp"
#include "charsum/geometry.hpp"
#include "charsum/sweep.hpp"
#include "charsum/verify.hpp"

namespace py = pybind11;
using namespace charsum;

namespace {

py::dict bound_dict(const RegimeBound& b) {
  py::dict d;
  d["label"] = b.label();
  d["branch"] = b.branch;
  d["value"] = b.value;
  d["T_low"] = b.T_low;
  d["T_high"] = b.T_high;
  return d;
}

py::dict record_dict(const SweepRecord& r) {
  py::dict d;
  d["q1"] = r.q1;
  d["chi1"] = r.chi1;
  d["q2"] = r.q2;
  d["chi2"] = r.chi2;
  d["T"] = r.T;
  d["abs_S"] = r.abs_S;
  d["bound"] = r.bound;
  d["ratio"] = r.ratio;
  d["regime"] = r.regime;
  d["ms"] = r.ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_charsum, m) {
  m.doc() = "Dirichlet convolution sums over the hyperbola xy <= T";

  py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);
  py::register_exception<BelowRangeError>(m, "BelowRangeError", PyExc_ValueError);

  py::class_<DirichletCharacter>(m, "Character")
      .def(py::init([](std::uint64_t q, std::uint64_t index) { return character_at(q, index); }),
           py::arg("q"), py::arg("index"))
      .def_property_readonly("modulus", &DirichletCharacter::modulus)
      .def_property_readonly("order", &DirichletCharacter::order)
      .def_property_readonly("exponents", &DirichletCharacter::exponents)
      .def_property_readonly("conductor", &DirichletCharacter::conductor)
      .def_property_readonly("is_primitive", &DirichletCharacter::is_primitive)
      .def_property_readonly("is_principal", &DirichletCharacter::is_principal)
      .def("__call__", &DirichletCharacter::value, py::arg("n"))
      .def("__repr__", [](const DirichletCharacter& c) {
        std::ostringstream s;
        s << "<Character mod " << c.modulus() << " of order " << c.order() << ">";
        return s.str();
      });

  m.def("characters", &enumerate_characters, py::arg("q"));
  m.def("primitive_indices", &primitive_indices, py::arg("q"));
  m.def("euler_phi", &euler_phi, py::arg("q"));

  m.def(
      "convolution_sum",
      [](const DirichletCharacter& a, const DirichletCharacter& b, double T, const std::string& algo) {
        if (algo == "naive") return convolution_sum_naive(a, b, T).to_complex();
        if (algo == "hyperbola") return convolution_sum_hyperbola(a, b, T).to_complex();
        throw std::invalid_argument("algo must be 'naive' or 'hyperbola'");
      },
      py::arg("chi1"), py::arg("chi2"), py::arg("T"), py::arg("algo") = "hyperbola");
  m.def(
      "interval_sum",
      [](const DirichletCharacter& c, std::uint64_t M, std::uint64_t N) {
        return interval_sum(c, M, N).to_complex();
      },
      py::arg("chi"), py::arg("M"), py::arg("N"));
  m.def(
      "max_interval_sum",
      [](const DirichletCharacter& c, std::uint64_t n_max) {
        const auto r = max_interval_sum(c, n_max);
        return py::make_tuple(r.magnitude, r.M, r.N);
      },
      py::arg("chi"), py::arg("n_max"));
  m.def(
      "omega1_sum",
      [](const DirichletCharacter& a, const DirichletCharacter& b, double T) {
        return region_sum(a, b, Region::omega1(T)).to_complex();
      },
      py::arg("chi1"), py::arg("chi2"), py::arg("T"));
  m.def(
      "decomposition_sum",
      [](const DirichletCharacter& a, const DirichletCharacter& b, double T, int depth, double t) {
        const auto d = decomposition_sum(a, b, T, depth, t);
        py::dict out;
        out["sum"] = d.sum.to_complex();
        out["points"] = d.points;
        out["rect_points"] = d.rect_points;
        out["strip_points"] = d.strip_points;
        out["rectangles"] = d.rectangles;
        return out;
      },
      py::arg("chi1"), py::arg("chi2"), py::arg("T"), py::arg("depth"), py::arg("t") = 1.0);
  m.def(
      "cover_check",
      [](double T, int k, int depth, double t) {
        const auto r = cover_check(T, k, depth, t);
        py::dict d;
        d["slab_points"] = r.slab_points;
        d["covered"] = r.covered;
        d["multiply_covered"] = r.multiply_covered;
        d["uncovered_in_strip"] = r.uncovered_in_strip;
        d["uncovered"] = r.uncovered;
        d["ok"] = r.ok();
        return d;
      },
      py::arg("T"), py::arg("k"), py::arg("depth"), py::arg("t") = 1.0);
  m.def("minimum_depth", &minimum_depth, py::arg("T"));
  m.def("strip_count", &strip_count, py::arg("T"), py::arg("t"));
  m.def("divisor_sum", &divisor_sum, py::arg("T"));

  m.def(
      "family",
      [](double T, int k, int max_order) {
        py::list out;
        for (const auto& f : generate_family(T, k, max_order)) {
          out.append(py::make_tuple(f.word, f.rect.x0(), f.rect.x1(), f.rect.y0(), f.rect.y1()));
        }
        return out;
      },
      py::arg("T"), py::arg("k"), py::arg("max_order"));

  m.def("burgess_rhs", &burgess_rhs, py::arg("N"), py::arg("q"), py::arg("r"),
        py::arg("prime_modulus"), py::arg("c") = 1.0, py::arg("eps") = 0.0);
  m.def(
      "theorem1_bound",
      [](double T, double q1, double q2, double eps, int variant) {
        return bound_dict(theorem1_bound(T, q1, q2, eps, variant));
      },
      py::arg("T"), py::arg("q1"), py::arg("q2"), py::arg("eps") = 0.0, py::arg("variant") = 1);
  m.def(
      "corollary1_bound",
      [](double T, double q, double eps) { return bound_dict(corollary1_bound(T, q, eps)); },
      py::arg("T"), py::arg("q"), py::arg("eps") = 0.0);
  m.def(
      "theorem2_bound",
      [](double T, std::uint64_t q1, std::uint64_t q2, int r) {
        return bound_dict(theorem2_bound(T, q1, q2, r));
      },
      py::arg("T"), py::arg("q1"), py::arg("q2"), py::arg("r") = 2);

  m.def(
      "sweep",
      [](const std::string& config_path, unsigned jobs) {
        auto cfg = load_sweep_config(config_path);
        if (jobs > 0) cfg.jobs = jobs;
        cfg.validate();
        SweepResult res;
        {
          py::gil_scoped_release release;
          res = sweep(cfg);
        }
        py::list out;
        for (const auto& r : res.records) out.append(record_dict(r));
        return out;
      },
      py::arg("config_path"), py::arg("jobs") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
