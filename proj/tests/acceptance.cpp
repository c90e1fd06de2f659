// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polydecomp/collisions.hpp"
#include "polydecomp/decompose.hpp"
#include "polydecomp/density.hpp"
#include "test_support.hpp"

using namespace polydecomp;
using namespace polydecomp::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

Verdict golden_example() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20005);
  const auto set = nt_set(20, 5);
  int failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> coords(set.nt.size());
    for (auto& c : coords) c = random_rational(rng);
    const Rational f19 = coords[0], f18 = coords[1], f17 = coords[2], f16 = coords[3];

    std::vector<Rational> f(21);
    f[20] = 1;
    f[19] = f19;
    f[18] = f18;
    f[17] = f17;
    f[16] = f16;
    for (int k = 1; k < 16; ++k) f[static_cast<std::size_t>(k)] = random_rational(rng);
    const auto h = right_component(MonicOriginal<Rational>(Polynomial<Rational>(std::move(f))), 5);

    const Rational h3 = f19 / 5;
    const Rational h2 = (-2 * f19 * f19 + 5 * f18) / 25;
    const Rational h1 = (6 * f19 * f19 * f19 - 20 * f18 * f19 + 25 * f17) / 125;
    const Rational g4 =
        f16 - (21 * f19 * f19 * f19 * f19 - 90 * f18 * f19 * f19 + 50 * f18 * f18 + 100 * f17 * f19) / 125;

    const auto comps = section_components<Rational>(coords, 20, 5);
    const bool ok = h.degree() == 4 && h.coeff(3) == h3 && h.coeff(2) == h2 && h.coeff(1) == h1 &&
                    comps.h == h && comps.g.coeff(4) == g4;
    if (!ok) ++failures;
  }
  const double t = seconds_since(start);
  return {failures == 0 && t < 5.0, std::to_string(50 - failures) + "/50 triples exact, " + fmt(t) + " s (limit 5 s)"};
}

Verdict roundtrip() {
  const auto start = Clock::now();
  std::mt19937_64 rng(30030);
  int pairs = 0, failures = 0;
  for (int n = 4; n <= 30; ++n) {
    if (!is_composite(n)) continue;
    for (int d : divisor_plan(n).proper_divisors) {
      for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_monic_original<Rational>(rng, d);
        const auto h = random_monic_original<Rational>(rng, n / d);
        const auto dec = try_decompose(compose(g, h), d);
        ++pairs;
        if (!dec || !(dec->g == g) || !(dec->h == h)) ++failures;
      }
    }
  }
  const double t = seconds_since(start);
  return {failures == 0 && t < 60.0,
          std::to_string(pairs - failures) + "/" + std::to_string(pairs) + " pairs recovered, " + fmt(t) + " s (limit 60 s)"};
}

Verdict real_sandwich() {
  Verdict v;
  for (auto [n, d] : {std::pair{4, 2}, {6, 2}, {6, 3}}) {
    const auto start = Clock::now();
    const TubeSpec spec{n, d, 0.1, 1.0, Field::real64};
    const auto r = estimate_density(spec, 1000000, 42, Mode::conditional);
    const auto b = bounds_real(n, d, 0.1, 1.0);
    const double t = seconds_since(start);
    const bool ok = r.mean >= b.lower - 3 * r.std_error && r.mean <= b.upper + 3 * r.std_error &&
                    r.std_error < 1e-3 && t < 60.0;
    v.pass = v.pass && ok;
    v.detail += "(" + std::to_string(n) + "," + std::to_string(d) + "): mean " + fmt(r.mean) + " se " + fmt(r.std_error) +
                " in [" + fmt(b.lower) + ", " + fmt(b.upper) + "] " + fmt(t) + " s";
    if (n != 6 || d != 3) v.detail += "; ";
  }
  return v;
}

Verdict union_density() {
  const auto start = Clock::now();
  const TubeSpec spec{6, std::nullopt, 0.1, 1.0, Field::real64};
  const auto r = estimate_density(spec, 10000000, 42, Mode::plain);
  const auto b = bounds_real_union(6, 0.1, 1.0);
  const double t = seconds_since(start);
  const bool ok = r.mean >= b.lower - 3 * r.std_error && r.mean <= b.upper + 3 * r.std_error && t < 300.0;
  return {ok, "mean " + fmt(r.mean) + " se " + fmt(r.std_error) + " in [" + fmt(b.lower) + ", " + fmt(b.upper) + "], " +
                  fmt(t) + " s (limit 300 s)"};
}

Verdict complex_sandwich() {
  const TubeSpec spec{4, 2, 0.1, 1.0, Field::complex64};
  const auto r = estimate_density(spec, 1000000, 42, Mode::conditional);
  const auto b = bounds_complex(4, 2, 0.1, 1.0);
  bool ok = r.mean >= b.lower - 3 * r.std_error && r.mean <= b.upper + 3 * r.std_error;
  std::string detail = "mean " + fmt(r.mean) + " se " + fmt(r.std_error) + " in [" + fmt(b.lower) + ", " + fmt(b.upper) + "]";

  // Lens area against 2-D rejection sampling in the bounding box of the small disk.
  std::mt19937_64 rng(505);
  int lens_failures = 0;
  const int configs = 20;
  for (int config = 0; config < configs; ++config) {
    const double B = random_real(rng, 0.5, 2.0);
    const double eps = random_real(rng, 0.05, 0.9) * B;
    const double dist = random_real(rng, 0.0, B + eps);
    const std::size_t samples = 400000;
    std::size_t hits = 0;
    for (std::size_t k = 0; k < samples; ++k) {
      const double dx = random_real(rng, -eps, eps);
      const double y = random_real(rng, -eps, eps);
      const double x = dist + dx;
      if (dx * dx + y * y < eps * eps && x * x + y * y < B * B) ++hits;
    }
    const double box = 4 * eps * eps;
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    const double se = box * std::sqrt(p * (1 - p) / static_cast<double>(samples));
    if (std::abs(p * box - lens_area(dist, eps, B)) > 3 * se + 1e-12) ++lens_failures;
  }
  ok = ok && lens_failures <= 1;
  detail += "; lens area " + std::to_string(configs - lens_failures) + "/" + std::to_string(configs) + " within 3 SE";
  return {ok, detail};
}

Verdict subspace() {
  const auto r = estimate_subspace_density(5, 2, 0.1, 1.0, Field::real64, 100000, 42);
  const double expected = std::pow(0.1, 3);
  const double err = std::abs(r.mean - expected);
  return {err <= 1e-12, "mean " + fmt(r.mean) + " vs " + fmt(expected) + ", |diff| " + fmt(err)};
}

CollisionParams<Rational> random_params(std::mt19937_64& rng, CollisionVariant variant, int n, int d) {
  CollisionParams<Rational> p;
  p.variant = variant;
  p.n = n;
  p.d = d;
  const int e = n / d;
  const int i = std::gcd(d, e);
  p.u = random_monic_original<Rational>(rng, i);
  p.v = random_monic_original<Rational>(rng, i);
  p.a = random_rational(rng);
  p.z = random_rational(rng);
  p.w.resize(static_cast<std::size_t>(e / d));
  for (auto& c : p.w) c = random_rational(rng);
  return p;
}

Verdict collisions() {
  const auto start = Clock::now();
  std::mt19937_64 rng(60203);
  int total = 0, failures = 0;
  for (auto [n, d] : {std::pair{6, 2}, {12, 3}}) {
    const int e = n / d;
    for (auto variant : {CollisionVariant::exponential, CollisionVariant::trigonometric}) {
      for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_params(rng, variant, n, d);
        ++total;
        const auto f = build_collision(p);
        if (f.degree() != n || !verify_bidecomposable(f, d, e)) ++failures;
      }
    }
  }
  const double t = seconds_since(start);
  return {failures == 0 && t < 30.0,
          std::to_string(total - failures) + "/" + std::to_string(total) + " bidecomposable, " + fmt(t) + " s (limit 30 s)"};
}

Verdict bound_comparison() {
  Verdict v;
  int checked = 0;
  double worst = 0.0;
  for (int n = 4; n <= 20; ++n) {
    if (!is_composite(n)) continue;
    ++checked;
    const double ours = bounds_complex_union(n, 0.1, 1.0).upper;
    const double cheng = cheng_bound(n, 0.1, 1.0);
    if (!(ours <= cheng)) {
      v.pass = false;
      v.detail += "n=" + std::to_string(n) + " fails; ";
    }
    worst = std::max(worst, ours / cheng);
  }
  v.detail += std::to_string(checked) + " composite n, largest ratio upper/cheng " + fmt(worst);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"golden example n=20 d=5", golden_example},
      {"decomposition roundtrip n<=30", roundtrip},
      {"real density sandwich", real_sandwich},
      {"union density n=6", union_density},
      {"complex density sandwich and lens area", complex_sandwich},
      {"subspace calibration", subspace},
      {"collision verification", collisions},
      {"complex union bound vs comparison bound", bound_comparison},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& ex) {
      v = {false, std::string("exception: ") + ex.what()};
    }
    if (!v.pass) ++failed;
    std::printf("%s %zu %s: %s\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
