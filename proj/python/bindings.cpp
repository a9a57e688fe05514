#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "toriclogk/ehrhart_oracle.hpp"
#include "toriclogk/error.hpp"
#include "toriclogk/invariants.hpp"
#include "toriclogk/io.hpp"
#include "toriclogk/p1conic.hpp"
#include "toriclogk/polytope.hpp"
#include "toriclogk/stability.hpp"

namespace py = pybind11;
using namespace toriclogk;

// Rational <-> fractions.Fraction. Accepts int, Fraction or "p/q" strings;
// floats are rejected so nothing inexact sneaks in.
namespace pybind11::detail {

template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    std::string text;
    if (PyLong_Check(src.ptr())) {
      text = py::str(src).cast<std::string>();
    } else if (PyUnicode_Check(src.ptr())) {
      text = src.cast<std::string>();
    } else if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
      text = py::str(src.attr("numerator")).cast<std::string>() + "/" +
             py::str(src.attr("denominator")).cast<std::string>();
    } else {
      return false;
    }
    value = parse_rational(text);
    return true;
  }

  static handle cast(const Rational& v, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::int_(py::str(v.get_num().get_str()));
    py::object den = py::int_(py::str(v.get_den().get_str()));
    return fraction(num, den).release();
  }
};

template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const Integer& v, return_value_policy, handle) {
    return py::int_(py::str(v.get_str())).release();
  }
};

template <>
struct type_caster<RatVec> {
  PYBIND11_TYPE_CASTER(RatVec, const_name("tuple[fractions.Fraction, ...]"));

  bool load(handle src, bool convert) {
    if (!src || !py::isinstance<py::sequence>(src) || PyUnicode_Check(src.ptr())) return false;
    std::vector<Rational> coords;
    for (auto item : py::reinterpret_borrow<py::sequence>(src)) {
      make_caster<Rational> c;
      if (!c.load(item, convert)) return false;
      coords.push_back(cast_op<Rational&&>(std::move(c)));
    }
    value = RatVec(std::move(coords));
    return true;
  }

  static handle cast(const RatVec& v, return_value_policy policy, handle parent) {
    py::tuple out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[i] = py::reinterpret_steal<py::object>(
          make_caster<Rational>::cast(v[i], policy, parent));
    }
    return out.release();
  }
};

}  // namespace pybind11::detail

namespace {

ConeData cone(const std::vector<Rational>& alphas) { return ConeData(alphas); }

py::dict verdict_dict(const StabilityVerdict& v) {
  py::dict d;
  d["beta"] = v.beta;
  d["r"] = v.r;
  d["verdict"] = to_string(v.verdict);
  d["witness"] = v.witness ? py::cast(*v.witness) : py::none();
  d["q_beta"] = v.q_beta ? py::cast(*v.q_beta) : py::none();
  d["notes"] = v.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact log-K-stability invariants of toric Fano polytopes";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = std::string(error_name(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    } catch (const io::IoError& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    }
  });

  py::class_<LatticePolytope>(m, "Polytope")
      .def(py::init([](const std::vector<RatVec>& points) { return LatticePolytope::build(points); }),
           py::arg("points"))
      .def_static("builtin", [](const std::string& name) { return io::builtin_polytope(name).polytope; })
      .def_static("builtin_names", &io::builtin_names)
      .def_static("load", [](const std::string& path) { return io::load_polytope(path).polytope; })
      .def_property_readonly("dim", &LatticePolytope::dim)
      .def_property_readonly("vertices", &LatticePolytope::vertices)
      .def_property_readonly("facets",
                             [](const LatticePolytope& p) {
                               py::list out;
                               for (const auto& h : p.facets()) out.append(py::make_tuple(h.normal, h.offset));
                               return out;
                             })
      .def_property_readonly("volume", &LatticePolytope::volume)
      .def_property_readonly("barycenter", &LatticePolytope::barycenter)
      .def_property_readonly("is_reflexive", [](const LatticePolytope& p) { return is_reflexive(p); })
      .def("lattice_points", &lattice_points, py::arg("k") = 1)
      .def("support", &support, py::arg("direction"))
      .def("__eq__", [](const LatticePolytope& a, const LatticePolytope& b) { return a == b; })
      .def("__repr__", [](const LatticePolytope& p) {
        return "Polytope(dim=" + std::to_string(p.dim()) + ", vertices=" +
               std::to_string(p.vertices().size()) + ")";
      });

  m.def("r_invariant", &r_invariant, py::arg("polytope"));
  m.def("exit_point", &exit_point, py::arg("polytope"));
  m.def("q_beta", &q_beta, py::arg("polytope"), py::arg("beta"));
  m.def(
      "log_futaki_toric",
      [](const LatticePolytope& p, const RatVec& lambda, const Rational& beta) {
        return log_futaki_toric(p, lambda, beta).value;
      },
      py::arg("polytope"), py::arg("lam"), py::arg("beta"));
  m.def("critical_beta", &critical_beta, py::arg("polytope"), py::arg("lam"));
  m.def(
      "classify", [](const LatticePolytope& p, const Rational& beta) { return verdict_dict(classify(p, beta)); },
      py::arg("polytope"), py::arg("beta"));
  m.def(
      "sweep",
      [](const LatticePolytope& p) {
        const SweepResult s = sweep(p);
        py::list rows;
        for (const auto& e : s.per_facet) {
          py::dict row;
          row["normal"] = e.normal;
          row["critical_beta"] = e.critical_beta ? py::cast(*e.critical_beta) : py::none();
          rows.append(row);
        }
        py::dict d;
        d["r"] = s.r;
        d["per_facet"] = rows;
        return d;
      },
      py::arg("polytope"));

  py::class_<CoeffTuple>(m, "CoeffTuple")
      .def(py::init<>())
      .def_readwrite("n", &CoeffTuple::n)
      .def_readwrite("a0", &CoeffTuple::a0)
      .def_readwrite("a1", &CoeffTuple::a1)
      .def_readwrite("b0", &CoeffTuple::b0)
      .def_readwrite("b1", &CoeffTuple::b1)
      .def_readwrite("a0_tilde", &CoeffTuple::a0_tilde)
      .def_readwrite("b0_tilde", &CoeffTuple::b0_tilde)
      .def("__eq__", [](const CoeffTuple& a, const CoeffTuple& b) { return a == b; });

  m.def(
      "sample_series",
      [](const LatticePolytope& p, const RatVec& lambda, std::optional<long> k_max) {
        const WeightSeries s = sample_series(p, lambda, k_max.value_or(default_k_max(p.dim())));
        py::list rows;
        for (const auto& smp : s.samples) rows.append(py::make_tuple(smp.k, smp.d, smp.w));
        return rows;
      },
      py::arg("polytope"), py::arg("lam"), py::arg("k_max") = py::none(),
      "List of (k, d_k, w_k) tuples.");
  m.def(
      "fit_expansions",
      [](const LatticePolytope& p, const RatVec& lambda, std::optional<long> k_max) {
        return fit_expansions(sample_series(p, lambda, k_max.value_or(default_k_max(p.dim()))), p);
      },
      py::arg("polytope"), py::arg("lam"), py::arg("k_max") = py::none());
  m.def("log_futaki_algebraic", &log_futaki_algebraic, py::arg("coeffs"), py::arg("beta"));

  m.def(
      "log_futaki_p1", [](const std::vector<Rational>& a, std::size_t i) { return log_futaki_p1(cone(a), i); },
      py::arg("alphas"), py::arg("index"));
  m.def(
      "mean_scalar", [](const std::vector<Rational>& a) { return mean_scalar(cone(a)); }, py::arg("alphas"));
  m.def(
      "existence_check",
      [](const std::vector<Rational>& a) {
        const ExistenceResult e = existence_check(cone(a));
        py::dict d;
        d["exists"] = e.exists;
        d["curvature_sign"] = e.curvature_sign;
        d["failed_conditions"] = e.failed_conditions;
        return d;
      },
      py::arg("alphas"));
  m.def(
      "stability_check",
      [](const std::vector<Rational>& a) {
        const P1StabilityResult s = stability_check(cone(a));
        py::dict d;
        d["stable_all"] = s.stable_all;
        d["futaki_values"] = s.futaki_values;
        return d;
      },
      py::arg("alphas"));
}
