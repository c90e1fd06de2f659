#pragma once

// Density of epsilon-tubes around C_{n,d} inside the coefficient box
// P_{n,B} (hypercube (-B,B)^{n-1} over R, polydisk |f_i| < B over C).
//
// The tube attaches to each f in C_{n,d} the coordinate box (disk product)
// |u_i - f_i| < eps for i outside NT_d, keeping u_i = f_i on NT_d. A point a
// lies in the tube iff it is eps-close, on the complement coordinates, to
// the unique variety point sharing its NT_d coordinates.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "polydecomp/decompose.hpp"
#include "polydecomp/polynomial.hpp"
#include "polydecomp/scalar.hpp"

namespace polydecomp {

struct DensityBounds {
  double lower = 0.0;
  double upper = 0.0;
  double raw_upper = 0.0;  // formula value before capping at 1
  bool capped = false;
};

/// (eps/B)^{m_d} (1 - eps/B)^{d+n/d-2} <= den <= (eps/B)^{m_d}
DensityBounds bounds_real(int n, int d, double eps, double B);
/// Single-component bounds at the least prime l, scaled by delta_n.
DensityBounds bounds_real_union(int n, double eps, double B);
/// Real exponents doubled.
DensityBounds bounds_complex(int n, int d, double eps, double B);
DensityBounds bounds_complex_union(int n, double eps, double B);

/// (n^2 - 2n) (eps/B)^2, the hypersurface-based bound for C_n over C.
double cheng_bound(int n, double eps, double B);

/// Area of the intersection of two disks with radii r1, r2 whose centers
/// are `distance` apart.
double lens_area(double distance, double r1, double r2);

/// Length of (center - eps, center + eps) intersected with (-B, B).
double interval_overlap(double center, double eps, double B);

enum class Mode { plain, conditional };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

struct TubeSpec {
  int n = 0;
  std::optional<int> d;  // empty: union of the components at l and n/l
  double epsilon = 0.0;
  double B = 1.0;
  Field field = Field::real64;

  bool is_union() const { return !d.has_value(); }
};

/// Throws ParameterError for an invalid combination (eps >= B, non-float
/// field, d not a proper divisor, n not composite).
void validate(const TubeSpec& spec);

/// Closed-form bracket matching spec.field and spec.d.
DensityBounds bounds_for(const TubeSpec& spec);

struct EstimateResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Mode mode = Mode::plain;
};

struct EstimateOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Exact membership of a in the eps-tube around C_{n,d} (n = deg a).
/// Instantiated for Real and Complex.
template <Scalar T>
bool tube_membership(const MonicOriginal<T>& a, int d, double eps);

/// Monte Carlo density estimate. Samples are split into fixed-size chunks;
/// chunk c draws from CounterRng(seed, c) and chunk statistics are merged in
/// chunk order, so the result does not depend on the thread count.
EstimateResult estimate_density(const TubeSpec& spec, std::uint64_t samples, std::uint64_t seed, Mode mode,
                                const EstimateOptions& opts = {});

/// Conditional estimator for the linear subspace R^k x {0}^{n-k} of R^n
/// (or C^k x {0}^{n-k} of C^n) with the tube |u_i| < eps on the last n-k
/// coordinates. Every sample contributes (eps/B)^{n-k} (squared over C).
EstimateResult estimate_subspace_density(int n, int k, double eps, double B, Field field, std::uint64_t samples,
                                         std::uint64_t seed, const EstimateOptions& opts = {});

}  // namespace polydecomp
