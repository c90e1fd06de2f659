#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "polydecomp/collisions.hpp"
#include "polydecomp/decompose.hpp"
#include "polydecomp/density.hpp"
#include "polydecomp/errors.hpp"
#include "polydecomp/serialize.hpp"
#include "polydecomp/text_format.hpp"

namespace py = pybind11;
using namespace polydecomp;

namespace {

template <class Fn>
decltype(auto) with_field(const std::string& name, Fn&& fn) {
  switch (parse_field(name)) {
    case Field::rational:
      return fn(Rational{});
    case Field::real64:
      return fn(Real{});
    case Field::complex64:
      break;
  }
  return fn(Complex{});
}

template <class J>
py::object to_python(const J& j) {
  if (j.is_null()) return py::none();
  if (j.is_boolean()) return py::bool_(j.template get<bool>());
  if (j.is_number_integer()) return py::int_(j.template get<long long>());
  if (j.is_number_float()) return py::float_(j.template get<double>());
  if (j.is_string()) return py::str(j.template get<std::string>());
  if (j.is_array()) {
    py::list out;
    for (const auto& item : j) out.append(to_python(item));
    return out;
  }
  py::dict out;
  for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = to_python(it.value());
  return out;
}

py::dict bounds_dict(const DensityBounds& b) {
  py::dict out;
  out["lower"] = b.lower;
  out["upper"] = b.upper;
  out["raw_upper"] = b.raw_upper;
  out["capped"] = b.capped;
  return out;
}

std::string compose_text(const std::string& g, const std::string& h, const std::string& field) {
  return with_field(field, [&]<class T>(T) {
    return format_polynomial(compose(parse_monic_original<T>(g), parse_monic_original<T>(h)));
  });
}

py::object decompose_text(const std::string& f, std::optional<int> d, const std::string& field, double tau) {
  return with_field(field, [&]<class T>(T) {
    const auto poly = parse_monic_original<T>(f);
    const DecomposeOptions opts{tau};
    std::vector<std::pair<int, Decomposition<T>>> found;
    if (d) {
      if (auto dec = try_decompose(poly, *d, opts)) found.emplace_back(*d, std::move(*dec));
    } else {
      found = is_decomposable(poly, opts);
    }
    return to_python(decompositions_json(found));
  });
}

std::string section_text(const std::vector<std::string>& coords, int n, int d, const std::string& field) {
  return with_field(field, [&]<class T>(T) {
    std::vector<T> values;
    values.reserve(coords.size());
    for (const auto& c : coords) values.push_back(parse_scalar<T>(c));
    return format_polynomial(section<T>(values, n, d));
  });
}

std::string dickson_text(int k, const std::string& z, const std::string& field) {
  return with_field(field, [&]<class T>(T) { return format_polynomial(dickson(k, parse_scalar<T>(z))); });
}

py::dict collide_json(const std::string& params, const std::string& field) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(params);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("collision parameters are not valid JSON: ") + ex.what());
  }
  return with_field(field, [&]<class T>(T) {
    const auto p = collision_params_from_json<T>(j);
    const auto f = build_collision(p);
    const bool at_d = try_decompose(f, p.d).has_value();
    const bool at_e = try_decompose(f, p.e).has_value();
    py::dict out;
    out["f"] = format_polynomial(f);
    out["variant"] = p.variant == CollisionVariant::exponential ? "exp" : "trig";
    out["n"] = p.n;
    out["d"] = p.d;
    out["e"] = p.e;
    out["decomposes_at_d"] = at_d;
    out["decomposes_at_e"] = at_e;
    out["bidecomposable"] = at_d && at_e;
    return out;
  });
}

py::object estimate(int n, std::optional<int> d, double epsilon, double B, const std::string& field,
                    std::uint64_t samples, std::uint64_t seed, const std::string& mode, unsigned threads) {
  TubeSpec spec{n, d, epsilon, B, parse_field(field)};
  validate(spec);
  const Mode m = parse_mode(mode);
  EstimateResult r;
  {
    py::gil_scoped_release release;
    r = estimate_density(spec, samples, seed, m, {threads});
  }
  return to_python(estimate_json(spec, r));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Polynomial decomposition, Ritt collisions and tube densities";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

  m.def("compose", &compose_text, py::arg("g"), py::arg("h"), py::arg("field") = "rational",
        "g(h) for monic original g, h in descending comma-separated text.");
  m.def("decompose", &decompose_text, py::arg("f"), py::arg("d") = py::none(), py::arg("field") = "rational",
        py::arg("tau") = 1e-9, "List of {d, g, h} with f = g(h); one divisor when d is given.");
  m.def("section", &section_text, py::arg("coords"), py::arg("n"), py::arg("d"), py::arg("field") = "rational",
        "The point of C_{n,d} with the given Newton-Taylor coordinates (descending index order).");
  m.def(
      "nt_set",
      [](int n, int d) {
        const auto s = nt_set(n, d);
        py::dict out;
        out["n"] = s.n;
        out["d"] = s.d;
        out["e"] = s.e;
        out["nt"] = s.nt;
        out["complement"] = s.complement;
        out["m_d"] = s.m_d();
        return out;
      },
      py::arg("n"), py::arg("d"));
  m.def(
      "divisor_plan",
      [](int n) {
        const auto p = divisor_plan(n);
        py::dict out;
        out["n"] = p.n;
        out["proper_divisors"] = p.proper_divisors;
        out["least_prime"] = p.least_prime;
        out["delta"] = p.delta;
        return out;
      },
      py::arg("n"));

  m.def("bounds_real", [](int n, int d, double eps, double B) { return bounds_dict(bounds_real(n, d, eps, B)); },
        py::arg("n"), py::arg("d"), py::arg("eps"), py::arg("B") = 1.0);
  m.def("bounds_real_union", [](int n, double eps, double B) { return bounds_dict(bounds_real_union(n, eps, B)); },
        py::arg("n"), py::arg("eps"), py::arg("B") = 1.0);
  m.def("bounds_complex", [](int n, int d, double eps, double B) { return bounds_dict(bounds_complex(n, d, eps, B)); },
        py::arg("n"), py::arg("d"), py::arg("eps"), py::arg("B") = 1.0);
  m.def("bounds_complex_union",
        [](int n, double eps, double B) { return bounds_dict(bounds_complex_union(n, eps, B)); }, py::arg("n"),
        py::arg("eps"), py::arg("B") = 1.0);
  m.def("cheng_bound", &cheng_bound, py::arg("n"), py::arg("eps"), py::arg("B") = 1.0);
  m.def("lens_area", &lens_area, py::arg("distance"), py::arg("r1"), py::arg("r2"));

  m.def("estimate_density", &estimate, py::arg("n"), py::arg("d") = py::none(), py::arg("eps") = 0.1,
        py::arg("B") = 1.0, py::arg("field") = "real64", py::arg("samples") = 100000, py::arg("seed") = 0,
        py::arg("mode") = "conditional", py::arg("threads") = 0,
        "Monte Carlo tube density; d=None estimates the union (plain mode only).");

  m.def("dickson", &dickson_text, py::arg("k"), py::arg("z"), py::arg("field") = "rational");
  m.def("collide_json", &collide_json, py::arg("params"), py::arg("field") = "rational");
}
