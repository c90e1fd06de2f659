#include "polydecomp/density.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "polydecomp/errors.hpp"
#include "polydecomp/rng.hpp"

namespace polydecomp {

namespace {

constexpr std::uint64_t kChunkSize = 1U << 14;

DensityBounds make_bounds(double ratio, int codim, int dim, double scale) {
  DensityBounds b;
  b.raw_upper = scale * std::pow(ratio, codim);
  b.upper = std::min(1.0, b.raw_upper);
  b.capped = b.raw_upper > 1.0;
  b.lower = std::min(b.upper, scale * std::pow(ratio, codim) * std::pow(1.0 - ratio, dim));
  return b;
}

double checked_ratio(double eps, double B) {
  if (!(eps > 0.0) || !(B > 0.0) || !(eps < B))
    throw ParameterError("density: need 0 < epsilon < B (got epsilon=" + std::to_string(eps) +
                         ", B=" + std::to_string(B) + ")");
  return eps / B;
}

// Welford accumulator; merge() is Chan's pairwise update.
struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double total = static_cast<double>(count + other.count);
    const double delta = other.mean - mean;
    mean += delta * static_cast<double>(other.count) / total;
    m2 += other.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(other.count) / total;
    count += other.count;
  }
};

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs samples in fixed chunks; make_sampler() builds one per-worker sampler
// whose call operator maps a CounterRng to one sample contribution.
template <class Factory>
EstimateResult run_chunks(std::uint64_t samples, std::uint64_t seed, Mode mode, unsigned threads,
                          Factory make_sampler) {
  if (samples == 0) throw ParameterError("density: samples must be positive");
  const std::uint64_t chunks = (samples + kChunkSize - 1) / kChunkSize;
  std::vector<Moments> partial(chunks);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    auto sampler = make_sampler();
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      CounterRng rng(seed, c);
      const std::uint64_t begin = c * kChunkSize;
      const std::uint64_t end = std::min(samples, begin + kChunkSize);
      Moments m;
      for (std::uint64_t k = begin; k < end; ++k) m.add(sampler(rng));
      partial[c] = m;
    }
  };

  const auto workers = static_cast<std::uint64_t>(resolve_threads(threads));
  if (workers <= 1 || chunks == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t t = 0; t < std::min(workers, chunks); ++t) pool.emplace_back(worker);
  }

  Moments total;
  for (const auto& m : partial) total.merge(m);
  EstimateResult out;
  out.mean = total.mean;
  out.samples = total.count;
  out.seed = seed;
  out.mode = mode;
  const double variance = total.count > 1 ? total.m2 / static_cast<double>(total.count - 1) : 0.0;
  out.std_error = std::sqrt(std::max(0.0, variance) / static_cast<double>(total.count));
  return out;
}

double draw(CounterRng& rng, double B, Real*) { return B * (2.0 * rng.uniform() - 1.0); }

Complex draw(CounterRng& rng, double B, Complex*) {
  // Inverse-CDF radial sampling: uniform on the open disk of radius B.
  const double r = B * std::sqrt(rng.uniform());
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  return std::polar(r, theta);
}

template <class T>
T draw(CounterRng& rng, double B) {
  return draw(rng, B, static_cast<T*>(nullptr));
}

// Measure of ball(center, eps) inside ball(0, B), normalized by the measure
// of ball(0, B).
double fraction_inside(Real center, double eps, double B) { return interval_overlap(center, eps, B) / (2.0 * B); }

double fraction_inside(const Complex& center, double eps, double B) {
  return lens_area(std::abs(center), eps, B) / (std::numbers::pi * B * B);
}

// Ascending coefficients of the variety point sharing a's NT coordinates.
template <class T>
Polynomial<T> nearest_on_chart(std::span<const T> nt_coords, const NtSet& set) {
  return section<T>(nt_coords, set.n, set.d).poly();
}

template <class T>
bool member(const Polynomial<T>& a, const NtSet& set, double eps, std::vector<T>& scratch) {
  scratch.clear();
  for (int i : set.nt) scratch.push_back(a.coeff(static_cast<std::size_t>(i)));
  const Polynomial<T> f = nearest_on_chart<T>(scratch, set);
  for (int i : set.complement) {
    const auto idx = static_cast<std::size_t>(i);
    if (!(std::abs(a.coeff(idx) - f.coeff(idx)) < eps)) return false;
  }
  return true;
}

template <class T>
EstimateResult estimate_typed(const TubeSpec& spec, std::uint64_t samples, std::uint64_t seed, Mode mode,
                              const EstimateOptions& opts) {
  const double eps = spec.epsilon;
  const double B = spec.B;
  const int n = spec.n;

  if (mode == Mode::conditional) {
    if (spec.is_union())
      throw ParameterError("density: conditional mode is not supported for the union target");
    const NtSet set = nt_set(n, *spec.d);
    return run_chunks(samples, seed, mode, opts.threads, [&set, eps, B] {
      return [&set, eps, B, coords = std::vector<T>(set.nt.size())](CounterRng& rng) mutable {
        for (auto& c : coords) c = draw<T>(rng, B);
        const Polynomial<T> f = nearest_on_chart<T>(coords, set);
        double weight = 1.0;
        for (int i : set.complement) weight *= fraction_inside(f.coeff(static_cast<std::size_t>(i)), eps, B);
        return weight;
      };
    });
  }

  std::vector<NtSet> charts;
  if (spec.is_union()) {
    const DivisorPlan plan = divisor_plan(n);
    charts.push_back(nt_set(n, plan.least_prime));
    if (plan.delta == 2) charts.push_back(nt_set(n, n / plan.least_prime));
  } else {
    charts.push_back(nt_set(n, *spec.d));
  }
  return run_chunks(samples, seed, mode, opts.threads, [&charts, n, eps, B] {
    return [&charts, n, eps, B, coeffs = std::vector<T>(static_cast<std::size_t>(n) + 1),
            scratch = std::vector<T>()](CounterRng& rng) mutable {
      // Draw a_{n-1}, ..., a_1 in that order.
      coeffs[static_cast<std::size_t>(n)] = T(1);
      coeffs[0] = T{};
      for (int i = n - 1; i >= 1; --i) coeffs[static_cast<std::size_t>(i)] = draw<T>(rng, B);
      const Polynomial<T> a(coeffs);
      for (const auto& set : charts)
        if (member(a, set, eps, scratch)) return 1.0;
      return 0.0;
    };
  });
}

}  // namespace

DensityBounds bounds_real(int n, int d, double eps, double B) {
  const double ratio = checked_ratio(eps, B);
  return make_bounds(ratio, codimension(n, d), dimension(n, d), 1.0);
}

DensityBounds bounds_real_union(int n, double eps, double B) {
  const double ratio = checked_ratio(eps, B);
  const DivisorPlan plan = divisor_plan(n);
  const int l = plan.least_prime;
  return make_bounds(ratio, codimension(n, l), dimension(n, l), plan.delta);
}

DensityBounds bounds_complex(int n, int d, double eps, double B) {
  const double ratio = checked_ratio(eps, B);
  return make_bounds(ratio, 2 * codimension(n, d), 2 * dimension(n, d), 1.0);
}

DensityBounds bounds_complex_union(int n, double eps, double B) {
  const double ratio = checked_ratio(eps, B);
  const DivisorPlan plan = divisor_plan(n);
  const int l = plan.least_prime;
  return make_bounds(ratio, 2 * codimension(n, l), 2 * dimension(n, l), plan.delta);
}

double cheng_bound(int n, double eps, double B) {
  const double ratio = eps / B;
  return (static_cast<double>(n) * n - 2.0 * n) * ratio * ratio;
}

double lens_area(double distance, double r1, double r2) {
  const double dist = std::abs(distance);
  if (r1 <= 0.0 || r2 <= 0.0) return 0.0;
  if (dist >= r1 + r2) return 0.0;
  const double small = std::min(r1, r2);
  if (dist <= std::abs(r1 - r2)) return std::numbers::pi * small * small;
  const double c1 = std::clamp((dist * dist + r1 * r1 - r2 * r2) / (2.0 * dist * r1), -1.0, 1.0);
  const double c2 = std::clamp((dist * dist + r2 * r2 - r1 * r1) / (2.0 * dist * r2), -1.0, 1.0);
  const double kite = (-dist + r1 + r2) * (dist + r1 - r2) * (dist - r1 + r2) * (dist + r1 + r2);
  return r1 * r1 * std::acos(c1) + r2 * r2 * std::acos(c2) - 0.5 * std::sqrt(std::max(0.0, kite));
}

double interval_overlap(double center, double eps, double B) {
  return std::max(0.0, std::min(center + eps, B) - std::max(center - eps, -B));
}

std::string_view to_string(Mode mode) { return mode == Mode::plain ? "plain" : "conditional"; }

Mode parse_mode(std::string_view text) {
  if (text == "plain") return Mode::plain;
  if (text == "conditional") return Mode::conditional;
  throw ParseError("unknown mode '" + std::string(text) + "' (expected plain or conditional)");
}

void validate(const TubeSpec& spec) {
  checked_ratio(spec.epsilon, spec.B);
  if (spec.field == Field::rational) throw ParameterError("density: field must be real64 or complex64");
  if (!is_composite(spec.n)) throw ParameterError("density: n = " + std::to_string(spec.n) + " is not composite");
  if (spec.d && !is_proper_divisor(spec.n, *spec.d))
    throw ParameterError("density: d = " + std::to_string(*spec.d) + " is not a proper divisor of n");
}

DensityBounds bounds_for(const TubeSpec& spec) {
  const bool complex = spec.field == Field::complex64;
  if (spec.is_union())
    return complex ? bounds_complex_union(spec.n, spec.epsilon, spec.B) : bounds_real_union(spec.n, spec.epsilon, spec.B);
  return complex ? bounds_complex(spec.n, *spec.d, spec.epsilon, spec.B)
                 : bounds_real(spec.n, *spec.d, spec.epsilon, spec.B);
}

template <Scalar T>
bool tube_membership(const MonicOriginal<T>& a, int d, double eps) {
  const NtSet set = nt_set(a.degree(), d);
  std::vector<T> scratch;
  return member(a.poly(), set, eps, scratch);
}

template bool tube_membership<Real>(const MonicOriginal<Real>&, int, double);
template bool tube_membership<Complex>(const MonicOriginal<Complex>&, int, double);

EstimateResult estimate_density(const TubeSpec& spec, std::uint64_t samples, std::uint64_t seed, Mode mode,
                                const EstimateOptions& opts) {
  validate(spec);
  if (spec.field == Field::complex64) return estimate_typed<Complex>(spec, samples, seed, mode, opts);
  return estimate_typed<Real>(spec, samples, seed, mode, opts);
}

EstimateResult estimate_subspace_density(int n, int k, double eps, double B, Field field, std::uint64_t samples,
                                         std::uint64_t seed, const EstimateOptions& opts) {
  checked_ratio(eps, B);
  if (k < 0 || k > n) throw ParameterError("subspace: need 0 <= k <= n");
  auto run = [&]<class T>(T*) {
    return run_chunks(samples, seed, Mode::conditional, opts.threads, [n, k, eps, B] {
      return [n, k, eps, B](CounterRng& rng) {
        // The free coordinates do not move the subspace point's fixed ones.
        for (int i = 0; i < k; ++i) (void)draw<T>(rng, B);
        double weight = 1.0;
        for (int i = k; i < n; ++i) weight *= fraction_inside(T{}, eps, B);
        return weight;
      };
    });
  };
  if (field == Field::complex64) return run(static_cast<Complex*>(nullptr));
  if (field == Field::real64) return run(static_cast<Real*>(nullptr));
  throw ParameterError("subspace: field must be real64 or complex64");
}

}  // namespace polydecomp
