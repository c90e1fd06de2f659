#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polydecomp/collisions.hpp"
#include "polydecomp/decompose.hpp"
#include "polydecomp/density.hpp"
#include "polydecomp/errors.hpp"
#include "polydecomp/serialize.hpp"
#include "polydecomp/text_format.hpp"

namespace polydecomp::cli {

namespace {

struct RunConfig {
  std::string g_text;
  std::string h_text;
  std::string f_text;
  std::string params_text;
  int n = 0;
  std::optional<int> d;
  std::vector<int> d_list;
  bool use_union = false;
  bool require = false;
  double epsilon = 0.0;
  std::vector<double> eps_list;
  double B = 1.0;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::string field;
  std::string mode = "conditional";
  std::string format;
  std::string out_path;
};

template <class Fn>
decltype(auto) with_field(Field field, Fn&& fn) {
  switch (field) {
    case Field::rational:
      return fn(Rational{});
    case Field::real64:
      return fn(Real{});
    case Field::complex64:
      break;
  }
  return fn(Complex{});
}

std::string read_params(const std::string& text) {
  if (text.empty() || text.front() != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw ParseError("cannot read parameter file '" + text.substr(1) + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Input that is not monic original is a usage error, not a domain error.
template <class T>
MonicOriginal<T> parse_input(const std::string& text) {
  try {
    return parse_monic_original<T>(text);
  } catch (const DomainError& ex) {
    throw ParseError(ex.what());
  }
}

std::string cmd_compose(const RunConfig& cfg) {
  return with_field(parse_field(cfg.field.empty() ? "rational" : cfg.field), [&]<class T>(T) {
    auto g = parse_input<T>(cfg.g_text);
    auto h = parse_input<T>(cfg.h_text);
    return format_polynomial(compose(g, h)) + "\n";
  });
}

std::string cmd_decompose(const RunConfig& cfg) {
  return with_field(parse_field(cfg.field.empty() ? "rational" : cfg.field), [&]<class T>(T) {
    auto f = parse_input<T>(cfg.f_text);
    std::vector<std::pair<int, Decomposition<T>>> found;
    if (cfg.d) {
      if (auto dec = try_decompose(f, *cfg.d)) found.emplace_back(*cfg.d, std::move(*dec));
    } else {
      if (!is_composite(f.degree()))
        throw DomainError("degree " + std::to_string(f.degree()) +
                          " is not composite, so no proper decomposition exists; pass --d to force a divisor");
      found = is_decomposable(f);
    }
    if (cfg.require && found.empty()) throw DomainError("polynomial is indecomposable");
    return decompositions_json(found).dump() + "\n";
  });
}

TubeSpec tube_spec(const RunConfig& cfg, std::optional<int> d, double eps) {
  TubeSpec spec;
  spec.n = cfg.n;
  spec.d = d;
  spec.epsilon = eps;
  spec.B = cfg.B;
  spec.field = parse_field(cfg.field.empty() ? "real64" : cfg.field);
  validate(spec);
  return spec;
}

std::string cmd_estimate(const RunConfig& cfg) {
  if (cfg.use_union == cfg.d.has_value()) throw ParameterError("estimate: pass exactly one of --d or --union");
  const TubeSpec spec = tube_spec(cfg, cfg.use_union ? std::nullopt : cfg.d, cfg.epsilon);
  const Mode mode = parse_mode(cfg.mode);
  if (mode == Mode::conditional && spec.is_union())
    throw ParameterError("estimate: conditional mode is not supported for --union; use --mode plain");
  const auto result = estimate_density(spec, cfg.samples, cfg.seed, mode, {threads_from_env()});
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "csv") return estimate_csv_header() + "\n" + estimate_csv_row(spec, result) + "\n";
  return estimate_json(spec, result).dump() + "\n";
}

std::string cmd_sweep(const RunConfig& cfg) {
  if (cfg.eps_list.empty()) throw ParameterError("sweep: need at least one --eps value");
  std::vector<std::optional<int>> targets;
  if (!cfg.d_list.empty()) {
    for (int d : cfg.d_list) targets.emplace_back(d);
  } else if (!cfg.use_union) {
    if (!is_composite(cfg.n)) throw ParameterError("sweep: n must be composite");
    for (int d : divisor_plan(cfg.n).proper_divisors) targets.emplace_back(d);
  }
  if (cfg.use_union) targets.emplace_back(std::nullopt);
  const Mode requested = parse_mode(cfg.mode);
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;

  std::string csv = estimate_csv_header() + "\n";
  auto rows = nlohmann::ordered_json::array();
  for (double eps : cfg.eps_list) {
    for (const auto& d : targets) {
      const TubeSpec spec = tube_spec(cfg, d, eps);
      // The union is only estimated by plain sampling.
      const Mode mode = spec.is_union() ? Mode::plain : requested;
      const auto result = estimate_density(spec, cfg.samples, cfg.seed, mode, {threads_from_env()});
      csv += estimate_csv_row(spec, result) + "\n";
      rows.push_back(estimate_json(spec, result));
    }
  }
  return format == "json" ? rows.dump() + "\n" : csv;
}

std::string cmd_bounds(const RunConfig& cfg) {
  if (cfg.use_union == cfg.d.has_value()) throw ParameterError("bounds: pass exactly one of --d or --union");
  const TubeSpec spec = tube_spec(cfg, cfg.use_union ? std::nullopt : cfg.d, cfg.epsilon);
  const DensityBounds b = bounds_for(spec);
  nlohmann::ordered_json j;
  j["n"] = spec.n;
  if (spec.d) {
    j["d"] = *spec.d;
  } else {
    j["d"] = "union";
  }
  j["field"] = std::string(to_string(spec.field));
  j["epsilon"] = spec.epsilon;
  j["B"] = spec.B;
  j["lower_bound"] = b.lower;
  j["upper_bound"] = b.upper;
  j["raw_upper_bound"] = b.raw_upper;
  j["capped"] = b.capped;
  j["cheng_bound"] = cheng_bound(spec.n, spec.epsilon, spec.B);
  return j.dump() + "\n";
}

std::string cmd_collide(const RunConfig& cfg) {
  nlohmann::json params;
  try {
    params = nlohmann::json::parse(read_params(cfg.params_text));
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("collision parameters are not valid JSON: ") + ex.what());
  }
  return with_field(parse_field(cfg.field.empty() ? "rational" : cfg.field), [&]<class T>(T) {
    const auto p = collision_params_from_json<T>(params);
    const auto f = build_collision(p);
    const bool at_d = try_decompose(f, p.d).has_value();
    const bool at_e = try_decompose(f, p.e).has_value();
    if (cfg.format == "text") {
      std::ostringstream os;
      os << format_polynomial(f) << "\n"
         << "d=" << p.d << ": " << (at_d ? "true" : "false") << "\n"
         << "e=" << p.e << ": " << (at_e ? "true" : "false") << "\n"
         << "bidecomposable: " << (at_d && at_e ? "true" : "false") << "\n";
      return os.str();
    }
    nlohmann::ordered_json j;
    j["f"] = format_polynomial(f);
    j["variant"] = p.variant == CollisionVariant::exponential ? "exp" : "trig";
    j["n"] = p.n;
    j["d"] = p.d;
    j["e"] = p.e;
    j["decomposes_at_d"] = at_d;
    j["decomposes_at_e"] = at_e;
    j["bidecomposable"] = at_d && at_e;
    return j.dump() + "\n";
  });
}

}  // namespace

unsigned threads_from_env() {
  const char* value = std::getenv("POLYDECOMP_THREADS");
  if (value == nullptr) return 0;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (end == value || *end != '\0' || parsed <= 0) return 0;
  return static_cast<unsigned>(parsed);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial decomposition, Ritt collisions and tube density experiments", "polydecomp"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::string> fields = {"rational", "real64", "complex64"};
  const std::vector<std::string> modes = {"plain", "conditional"};

  auto add_output = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(std::move(formats)));
    sub->add_option("--out", cfg.out_path, "Write results to this file instead of stdout");
  };
  auto add_tube = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Composite degree")->required();
    sub->add_option("--B", cfg.B, "Coefficient bound B")->capture_default_str();
    sub->add_option("--field", cfg.field, "real64 or complex64")->check(CLI::IsMember(fields));
  };

  auto* compose_cmd = app.add_subcommand("compose", "Print g(h) for monic original g, h");
  compose_cmd->add_option("outer", cfg.g_text, "Left component, descending coefficients")->required();
  compose_cmd->add_option("inner", cfg.h_text, "Right component, descending coefficients")->required();
  compose_cmd->add_option("--field", cfg.field, "Coefficient field")->check(CLI::IsMember(fields));
  add_output(compose_cmd, {"text"});

  auto* decompose_cmd = app.add_subcommand("decompose", "List the decompositions f = g(h) over all proper divisors");
  decompose_cmd->add_option("f", cfg.f_text, "Polynomial, descending coefficients")->required();
  decompose_cmd->add_option("--d", cfg.d, "Only try this left degree");
  decompose_cmd->add_flag("--require", cfg.require, "Exit 3 when no decomposition exists");
  decompose_cmd->add_option("--field", cfg.field, "Coefficient field")->check(CLI::IsMember(fields));
  add_output(decompose_cmd, {"json"});

  auto* estimate_cmd = app.add_subcommand("estimate", "Monte Carlo density of an epsilon-tube");
  add_tube(estimate_cmd);
  estimate_cmd->add_option("--d", cfg.d, "Proper divisor (single component)");
  estimate_cmd->add_flag("--union", cfg.use_union, "Union of the components at l and n/l");
  estimate_cmd->add_option("--eps", cfg.epsilon, "Tube radius epsilon")->required();
  estimate_cmd->add_option("--samples", cfg.samples, "Sample count")->capture_default_str()->check(CLI::PositiveNumber);
  estimate_cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  estimate_cmd->add_option("--mode", cfg.mode, "plain or conditional")->capture_default_str()->check(CLI::IsMember(modes));
  add_output(estimate_cmd, {"json", "csv"});

  auto* sweep_cmd = app.add_subcommand("sweep", "Estimate over a grid of epsilon values and divisors");
  add_tube(sweep_cmd);
  sweep_cmd->add_option("--d", cfg.d_list, "Divisors (default: all proper divisors)");
  sweep_cmd->add_flag("--union", cfg.use_union, "Add union rows (plain mode)");
  sweep_cmd->add_option("--eps", cfg.eps_list, "Epsilon values")->required();
  sweep_cmd->add_option("--samples", cfg.samples, "Samples per grid point")->capture_default_str()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  sweep_cmd->add_option("--mode", cfg.mode, "plain or conditional")->capture_default_str()->check(CLI::IsMember(modes));
  add_output(sweep_cmd, {"json", "csv"});

  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form density bracket and the comparison bound");
  add_tube(bounds_cmd);
  bounds_cmd->add_option("--d", cfg.d, "Proper divisor (single component)");
  bounds_cmd->add_flag("--union", cfg.use_union, "Union of the components at l and n/l");
  bounds_cmd->add_option("--eps", cfg.epsilon, "Tube radius epsilon")->required();
  add_output(bounds_cmd, {"json"});

  auto* collide_cmd = app.add_subcommand("collide", "Build a polynomial in C_{n,d} and C_{n,e} and verify both");
  collide_cmd->add_option("params", cfg.params_text, "JSON parameters, or @file")->required();
  collide_cmd->add_option("--field", cfg.field, "Coefficient field")->check(CLI::IsMember(fields));
  add_output(collide_cmd, {"json", "text"});

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }

  std::string result;
  try {
    if (*compose_cmd) result = cmd_compose(cfg);
    else if (*decompose_cmd) result = cmd_decompose(cfg);
    else if (*estimate_cmd) result = cmd_estimate(cfg);
    else if (*sweep_cmd) result = cmd_sweep(cfg);
    else if (*bounds_cmd) result = cmd_bounds(cfg);
    else if (*collide_cmd) result = cmd_collide(cfg);
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }

  if (cfg.out_path.empty()) {
    out << result;
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      err << "error: cannot open '" << cfg.out_path << "' for writing\n";
      return kExitUsage;
    }
    file << result;
  }
  return kExitOk;
}

}  // namespace polydecomp::cli
