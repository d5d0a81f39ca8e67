#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <sstream>

#include "fibrecheck/fibrecheck.hpp"

namespace py = pybind11;
using namespace fibrecheck;

namespace {

CheckOptions make_options(const std::string& order, std::optional<int> max_power,
                          std::size_t pair_limit, std::optional<double> timeout_seconds,
                          bool allow_char_p_flatness) {
  CheckOptions o;
  if (order == "lex") {
    o.order = WithinBlock::Lex;
  } else if (order != "grevlex") {
    throw InvalidArgument("order must be 'lex' or 'grevlex'");
  }
  o.max_power = max_power;
  o.pair_limit = pair_limit;
  o.allow_char_p_flatness = allow_char_p_flatness;
  if (timeout_seconds) {
    o.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(*timeout_seconds));
  }
  return o;
}

Field field_from(const py::object& field) {
  if (py::isinstance<py::int_>(field)) return Field::prime(field.cast<std::uint64_t>());
  auto s = field.cast<std::string>();
  if (s == "Q") return Field::rationals();
  throw InvalidArgument("field must be 'Q' or a prime");
}

Ideal ideal_from(const std::vector<std::string>& base, const std::vector<std::string>& fibre,
                 const std::vector<std::string>& gens, const std::string& order,
                 const py::object& field) {
  auto kind = order == "lex" ? WithinBlock::Lex : WithinBlock::Grevlex;
  auto ring = make_ring(RingLayout::make(base, fibre), field_from(field), kind);
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(ring, g));
  return Ideal(ring, std::move(ps));
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_fibrecheck, m) {
  m.doc() = "Openness and flatness of morphisms to affine space via fibred powers";
  m.attr("__version__") = version_string();

  auto base_error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base_error.ptr());
  py::register_exception<UnsupportedInput>(m, "UnsupportedInput", base_error.ptr());
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", base_error.ptr());
  py::register_exception<SoundnessError>(m, "SoundnessError", base_error.ptr());
  py::register_exception<LayoutMismatch>(m, "LayoutMismatch", base_error.ptr());

  py::class_<Problem>(m, "Problem")
      .def_property_readonly("field", [](const Problem& p) { return p.field.to_string(); })
      .def_readonly("base_vars", &Problem::base_vars)
      .def_readonly("fibre_vars", &Problem::fibre_vars)
      .def_property_readonly("ideal", [](const Problem& p) { return strings(p.ideal); })
      .def_property_readonly("has_module", [](const Problem& p) { return p.module.has_value(); })
      .def_readonly("check_open", &Problem::check_open)
      .def_readonly("check_flat", &Problem::check_flat)
      .def_readonly("max_power", &Problem::max_power)
      .def("render", &render_problem)
      .def("__eq__", [](const Problem& a, const Problem& b) { return a == b; })
      .def("__repr__", [](const Problem& p) {
        return "<Problem n=" + std::to_string(p.base_vars.size()) +
               " m=" + std::to_string(p.fibre_vars.size()) + ">";
      });

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("kind", [](const Verdict& v) { return to_string(v.kind); })
      .def_property_readonly("outcome", [](const Verdict& v) { return to_string(v.outcome); })
      .def_readonly("target_power", &Verdict::target_power)
      .def_readonly("failing_power", &Verdict::failing_power)
      .def_readonly("power_reached", &Verdict::power_reached)
      .def_readonly("abort_limit", &Verdict::abort_limit)
      .def_property_readonly("witness_g",
                             [](const Verdict& v) -> std::optional<std::string> {
                               if (!v.witness_g) return std::nullopt;
                               return render_normalized(*v.witness_g);
                             })
      .def_property_readonly("witness_r",
                             [](const Verdict& v) -> std::optional<std::string> {
                               if (!v.witness_r) return std::nullopt;
                               return render_normalized(*v.witness_r);
                             })
      .def_property_readonly("certificate_r",
                             [](const Verdict& v) -> std::optional<std::string> {
                               if (!v.certificate) return std::nullopt;
                               return render_normalized(v.certificate->r);
                             })
      .def_property_readonly(
          "certificate_v",
          [](const Verdict& v) -> std::optional<std::vector<std::string>> {
            if (!v.certificate) return std::nullopt;
            return strings(content_normalized(v.certificate->v));
          })
      .def_property_readonly("powers", [](const Verdict& v) {
        py::list out;
        for (const auto& s : v.powers) {
          py::dict d;
          d["k"] = s.k;
          d["basis_size"] = s.basis_size;
          d["pairs"] = s.pairs;
          out.append(d);
        }
        return out;
      });

  m.def("parse_problem", &parse_problem, py::arg("text"));

  m.def(
      "check_openness",
      [](const Problem& p, const std::string& order, std::optional<int> max_power,
         std::size_t pair_limit, std::optional<double> timeout_seconds) {
        auto o = make_options(order, max_power, pair_limit, timeout_seconds, false);
        py::gil_scoped_release release;
        return check_openness(p, o);
      },
      py::arg("problem"), py::arg("order") = "grevlex", py::arg("max_power") = py::none(),
      py::arg("pair_limit") = 100000, py::arg("timeout_seconds") = py::none());

  m.def(
      "check_flatness",
      [](const Problem& p, const std::string& order, std::optional<int> max_power,
         std::size_t pair_limit, std::optional<double> timeout_seconds,
         bool allow_char_p_flatness) {
        auto o = make_options(order, max_power, pair_limit, timeout_seconds, allow_char_p_flatness);
        py::gil_scoped_release release;
        return check_flatness(p, o);
      },
      py::arg("problem"), py::arg("order") = "grevlex", py::arg("max_power") = py::none(),
      py::arg("pair_limit") = 100000, py::arg("timeout_seconds") = py::none(),
      py::arg("allow_char_p_flatness") = false);

  m.def(
      "render_report",
      [](const Problem& p, const std::vector<Verdict>& verdicts, const std::string& format,
         const std::string& order) {
        Report r{p, order == "lex" ? WithinBlock::Lex : WithinBlock::Grevlex, verdicts, false};
        if (format == "json") return render_json(r);
        if (format == "text") return render_text(r);
        throw InvalidArgument("format must be 'text' or 'json'");
      },
      py::arg("problem"), py::arg("verdicts"), py::arg("format") = "text",
      py::arg("order") = "grevlex");

  m.def(
      "groebner_basis",
      [](const std::vector<std::string>& base, const std::vector<std::string>& fibre,
         const std::vector<std::string>& gens, const std::string& order, const py::object& field) {
        return strings(ideal_from(base, fibre, gens, order, field).basis());
      },
      py::arg("base"), py::arg("fibre"), py::arg("generators"), py::arg("order") = "grevlex",
      py::arg("field") = "Q");

  m.def(
      "krull_dim",
      [](const std::vector<std::string>& base, const std::vector<std::string>& fibre,
         const std::vector<std::string>& gens) {
        return krull_dim(ideal_from(base, fibre, gens, "grevlex", py::str("Q"))).dim;
      },
      py::arg("base"), py::arg("fibre"), py::arg("generators"));

  m.def(
      "fibre_dim",
      [](const std::vector<std::string>& base, const std::vector<std::string>& fibre,
         const std::vector<std::string>& gens, const py::list& point) {
        std::vector<mpq_class> pt;
        for (const auto& c : point) {
          mpq_class q(py::str(c).cast<std::string>());
          q.canonicalize();
          pt.push_back(q);
        }
        return fibre_dim(ideal_from(base, fibre, gens, "grevlex", py::str("Q")), pt).dim;
      },
      py::arg("base"), py::arg("fibre"), py::arg("generators"), py::arg("point"));

  m.def(
      "run",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
