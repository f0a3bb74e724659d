// Copyright 2026 The dioph Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dioph/approx.hpp"
#include "dioph/bounds.hpp"
#include "dioph/commands.hpp"
#include "dioph/digits.hpp"
#include "dioph/ncf.hpp"
#include "dioph/oracle.hpp"
#include "dioph/surd.hpp"

namespace py = pybind11;

namespace {

py::dict svalues_dict(const dioph::SValues& s) {
  py::dict d;
  d["k"] = s.k;
  d["s1"] = s.s1.to_double();
  d["s2"] = s.s2.to_double();
  d["s3"] = s.s3.to_double();
  d["s4"] = s.s4.to_double();
  d["dminus"] = s.dminus.to_double();
  d["dplus"] = s.dplus.to_double();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Negative continued fractions, alpha-expansions and inhomogeneous approximation constants";

  static py::exception<dioph::Error> error(m, "DiophError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const dioph::Error& e) {
      error((std::string(dioph::errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<dioph::QuadSurd>(m, "QuadSurd")
      .def(py::init<long>(), py::arg("n") = 0)
      .def_static("parse", &dioph::QuadSurd::parse, py::arg("text"))
      .def_property_readonly("p", [](const dioph::QuadSurd& x) { return x.p().get_str(); })
      .def_property_readonly("q", [](const dioph::QuadSurd& x) { return x.q().get_str(); })
      .def_property_readonly("r", [](const dioph::QuadSurd& x) { return x.r().get_str(); })
      .def_property_readonly("d", [](const dioph::QuadSurd& x) { return x.d().get_str(); })
      .def("is_rational", &dioph::QuadSurd::is_rational)
      .def("floor", [](const dioph::QuadSurd& x) { return x.floor().get_str(); })
      .def("conjugate", &dioph::QuadSurd::conjugate)
      .def("to_decimal", &dioph::QuadSurd::to_decimal, py::arg("significant_digits") = 15)
      .def("__float__", &dioph::QuadSurd::to_double)
      .def("__str__", &dioph::QuadSurd::to_string)
      .def("__repr__", [](const dioph::QuadSurd& x) { return "QuadSurd('" + x.to_string() + "')"; })
      .def("__hash__", &dioph::QuadSurd::hash)
      .def("__eq__", [](const dioph::QuadSurd& a, const dioph::QuadSurd& b) { return a == b; })
      .def("__lt__", [](const dioph::QuadSurd& a, const dioph::QuadSurd& b) { return dioph::compare(a, b) < 0; })
      .def("__le__", [](const dioph::QuadSurd& a, const dioph::QuadSurd& b) { return dioph::compare(a, b) <= 0; })
      .def("__neg__", [](const dioph::QuadSurd& a) { return -a; })
      .def("__add__", [](const dioph::QuadSurd& a, const dioph::QuadSurd& b) { return a + b; })
      .def("__sub__", [](const dioph::QuadSurd& a, const dioph::QuadSurd& b) { return a - b; })
      .def("__mul__", [](const dioph::QuadSurd& a, const dioph::QuadSurd& b) { return a * b; })
      .def("__truediv__", [](const dioph::QuadSurd& a, const dioph::QuadSurd& b) { return a / b; });
  py::implicitly_convertible<long, dioph::QuadSurd>();

  py::class_<dioph::NcfExpansion>(m, "NcfExpansion")
      .def(py::init<std::vector<dioph::Digit>, std::vector<dioph::Digit>>(), py::arg("preperiod"),
           py::arg("period") = std::vector<dioph::Digit>{})
      .def_static("parse", &dioph::NcfExpansion::parse, py::arg("text"))
      .def_property_readonly("preperiod", &dioph::NcfExpansion::preperiod)
      .def_property_readonly("period", &dioph::NcfExpansion::period)
      .def("is_periodic", &dioph::NcfExpansion::is_periodic)
      .def("__getitem__", &dioph::NcfExpansion::operator[])
      .def("__eq__", [](const dioph::NcfExpansion& a, const dioph::NcfExpansion& b) { return a == b; })
      .def("__str__", &dioph::NcfExpansion::to_string)
      .def("__repr__", [](const dioph::NcfExpansion& e) { return "NcfExpansion('" + e.to_string() + "')"; });

  py::class_<dioph::DigitSeq>(m, "DigitSeq")
      .def(py::init<std::vector<dioph::Digit>, std::vector<dioph::Digit>>(), py::arg("preperiod"),
           py::arg("period") = std::vector<dioph::Digit>{})
      .def_static("parse", &dioph::DigitSeq::parse, py::arg("text"))
      .def_property_readonly("preperiod", &dioph::DigitSeq::preperiod)
      .def_property_readonly("period", &dioph::DigitSeq::period)
      .def("is_periodic", &dioph::DigitSeq::is_periodic)
      .def("__getitem__", &dioph::DigitSeq::operator[])
      .def("__eq__", [](const dioph::DigitSeq& a, const dioph::DigitSeq& b) { return a == b; })
      .def("__str__", &dioph::DigitSeq::to_string)
      .def("__repr__", [](const dioph::DigitSeq& t) { return "DigitSeq('" + t.to_string() + "')"; });

  m.def("expand", [](const dioph::QuadSurd& x) { return dioph::expand(x); }, py::arg("x"));
  m.def("evaluate", &dioph::evaluate, py::arg("expansion"));
  m.def(
      "gamma_of", [](const dioph::DigitSeq& t, const dioph::NcfExpansion& e) { return dioph::gamma_of(t, e).value; },
      py::arg("digits"), py::arg("expansion"));
  m.def(
      "digits_of",
      [](const dioph::QuadSurd& gamma, const dioph::NcfExpansion& e, std::size_t n) {
        return dioph::digits_of(gamma, e, n);
      },
      py::arg("gamma"), py::arg("expansion"), py::arg("n_terms") = 40);
  m.def("validate", [](const dioph::DigitSeq& t, const dioph::NcfExpansion& e) { return dioph::validate(t, e).ok(); },
        py::arg("digits"), py::arg("expansion"));

  m.def(
      "m_value",
      [](const dioph::DigitSeq& t, const dioph::NcfExpansion& e, std::size_t k_max) {
        const dioph::MValueReport r = dioph::m_value(t, e, {.k_max = k_max});
        py::dict d;
        d["M"] = r.value;
        d["exact"] = r.exact;
        d["bound_branch"] = std::string(dioph::branch_name(r.branch));
        py::list per_k;
        for (const dioph::SValues& s : r.per_k) per_k.append(svalues_dict(s));
        d["per_k"] = per_k;
        return d;
      },
      py::arg("digits"), py::arg("expansion"), py::arg("k_max") = 200);

  m.def("c_of", [](long R) { return dioph::QuadSurd(dioph::c_of(R)); }, py::arg("R"));
  m.def("even_bound", [](long R) { return dioph::QuadSurd(dioph::even_bound(R)); }, py::arg("R"));
  m.def("rho_lower", &dioph::rho_lower, py::arg("R"));
  m.def(
      "homog_bounds", [](long R, long r) {
        const dioph::HomogBounds b = dioph::homog_bounds(R, r);
        return py::make_tuple(b.lo, b.hi);
      },
      py::arg("R"), py::arg("r"));
  m.def("exceptional_pairs", &dioph::exceptional_pairs, py::arg("R_min") = 3, py::arg("R_max") = 9,
        py::arg("r_max") = 20);

  m.def(
      "scan",
      [](const dioph::QuadSurd& alpha, const dioph::QuadSurd& gamma, std::int64_t n_max, std::int64_t n_min,
         unsigned windows) {
        dioph::ScanResult s;
        {
          py::gil_scoped_release release;
          s = dioph::scan(dioph::TorusPoint::from_surd(alpha), dioph::TorusPoint::from_surd(gamma), n_max, n_min,
                          {.windows = windows});
        }
        py::list records;
        for (const dioph::ScanRecord& r : s.records) records.append(py::make_tuple(r.n, r.value));
        py::dict d;
        d["estimate"] = s.estimate;
        d["records"] = records;
        d["homogeneous"] = s.homogeneous;
        return d;
      },
      py::arg("alpha"), py::arg("gamma"), py::arg("n_max"), py::arg("n_min") = 1000, py::arg("windows") = 0);

  m.def(
      "run",
      [](const std::string& command, const py::kwargs& kwargs) {
        dioph::ExperimentConfig c;
        c.command = command;
        for (const auto& [key, value] : kwargs) {
          const std::string k = py::str(key);
          if (k == "input") c.input = value.cast<std::string>();
          else if (k == "expansion") c.expansion = value.cast<std::string>();
          else if (k == "period") c.period = value.cast<std::string>();
          else if (k == "digits") c.digits = value.cast<std::string>();
          else if (k == "alpha") c.alpha = value.cast<std::string>();
          else if (k == "gamma") c.gamma = value.cast<std::string>();
          else if (k == "gamma_digits") c.gamma_digits = value.cast<std::string>();
          else if (k == "check") c.theorem = value.cast<std::string>();
          else if (k == "R") c.R = value.cast<std::vector<long>>();
          else if (k == "r") c.r = value.cast<std::vector<long>>();
          else if (k == "N") c.N = value.cast<std::vector<long>>();
          else if (k == "n_max") c.n_max = value.cast<std::int64_t>();
          else if (k == "n_min") c.n_min = value.cast<std::int64_t>();
          else if (k == "k_max") c.k_max = value.cast<std::size_t>();
          else if (k == "terms") c.terms = value.cast<std::size_t>();
          else if (k == "count") c.count = value.cast<std::size_t>();
          else if (k == "seed") c.seed = value.cast<std::uint64_t>();
          else if (k == "precision") c.precision = value.cast<int>();
          else if (k == "tolerance") c.tolerance = value.cast<double>();
          else if (k == "format") c.format = dioph::parse_format(value.cast<std::string>());
          else throw py::type_error("unknown option '" + k + "'");
        }
        const dioph::CommandOutput out = dioph::run_command(c);
        return py::make_tuple(out.exit_code, out.text);
      },
      py::arg("command"));
}
