#pragma once

// Newton-Taylor decomposition of monic original polynomials.
//
// For f of degree n = d*e, the right component h of a decomposition
// f = g(h) is the reversed d-th root of the reversed f modulo x^e; it only
// depends on f_{n-1}, ..., f_{n-e+1}. Then g is read off the generalized
// Taylor expansion of f around h. The Newton-Taylor set NT_d collects the
// coefficient indices that this procedure reads; every other coefficient of
// a point of C_{n,d} is a polynomial function of those.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "polydecomp/errors.hpp"
#include "polydecomp/polynomial.hpp"
#include "polydecomp/series.hpp"

namespace polydecomp {

struct NtSet {
  int n = 0;
  int d = 0;
  int e = 0;
  std::vector<int> nt;          // descending
  std::vector<int> complement;  // descending, {1..n-1} \ nt
  int m_d() const { return static_cast<int>(complement.size()); }
};

struct DivisorPlan {
  int n = 0;
  std::vector<int> proper_divisors;  // ascending
  int least_prime = 0;
  int delta = 0;  // 1 iff n = l^2, else 2
};

template <Scalar T>
struct Decomposition {
  MonicOriginal<T> g;
  MonicOriginal<T> h;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Float tolerance for "G_i is constant": every non-constant coefficient has
/// magnitude < tau * max(1, |f|_inf). Ignored for exact scalars.
struct DecomposeOptions {
  double tau = 1e-9;
};

bool is_proper_divisor(int n, int d);
/// Throws DomainError unless n >= 4 and 1 < d < n divides n.
void require_proper_divisor(int n, int d);

NtSet nt_set(int n, int d);
DivisorPlan divisor_plan(int n);
bool is_composite(int n);

/// d + n/d - 2
int dimension(int n, int d);
/// m_d = n - d - n/d + 1
int codimension(int n, int d);
/// d^(d + n/d - 2)
mpz_class degree_bound(int n, int d);

/// The unique candidate right component h of degree n/d.
template <Scalar T>
MonicOriginal<T> right_component(const MonicOriginal<T>& f, int d) {
  const int n = f.degree();
  require_proper_divisor(n, d);
  const int e = n / d;
  // reversed f mod x^e = 1 + f_{n-1} x + ... + f_{n-e+1} x^{e-1}
  std::vector<T> head(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) head[static_cast<std::size_t>(i)] = f.coeff(static_cast<std::size_t>(n - i));
  Polynomial<T> root = series_dth_root(Polynomial<T>(std::move(head)), static_cast<unsigned>(d), static_cast<std::size_t>(e));
  return MonicOriginal<T>(reverse(root, static_cast<std::size_t>(e)));
}

template <Scalar T>
std::optional<Decomposition<T>> try_decompose(const MonicOriginal<T>& f, int d, const DecomposeOptions& opts = {}) {
  MonicOriginal<T> h = right_component(f, d);
  auto taylor = taylor_coefficients(f.poly(), h, static_cast<unsigned>(d));
  double threshold = 0.0;
  if constexpr (!ScalarTraits<T>::exact) threshold = opts.tau * std::max(1.0, max_norm(f.poly()));
  std::vector<T> g(taylor.size());
  for (std::size_t i = 0; i < taylor.size(); ++i) {
    const auto& gi = taylor[i];
    if constexpr (ScalarTraits<T>::exact) {
      if (gi.degree() > 0) return std::nullopt;
    } else {
      for (std::size_t k = 1; k < gi.size(); ++k)
        if (ScalarTraits<T>::magnitude(gi.coeff(k)) >= threshold) return std::nullopt;
    }
    g[i] = gi.coeff(0);
  }
  g[0] = T{};
  g.back() = T(1);
  return Decomposition<T>{MonicOriginal<T>(Polynomial<T>(std::move(g))), std::move(h)};
}

/// Every proper divisor d (ascending) with f in C_{n,d}. Empty for prime degree.
template <Scalar T>
std::vector<std::pair<int, Decomposition<T>>> is_decomposable(const MonicOriginal<T>& f, const DecomposeOptions& opts = {}) {
  std::vector<std::pair<int, Decomposition<T>>> out;
  const int n = f.degree();
  if (!is_composite(n)) return out;
  for (int d : divisor_plan(n).proper_divisors) {
    if (auto dec = try_decompose(f, d, opts)) out.emplace_back(d, std::move(*dec));
  }
  return out;
}

/// The components (g, h) of the unique point of C_{n,d} whose coefficients
/// at the indices of NT_d (in NtSet::nt order, descending) equal coords.
template <Scalar T>
Decomposition<T> section_components(std::span<const T> coords, int n, int d) {
  const NtSet set = nt_set(n, d);
  if (coords.size() != set.nt.size()) throw DomainError("section: expected one coordinate per Newton-Taylor index");
  const int e = set.e;
  // The top e-1 indices come first in descending order.
  std::vector<T> head(static_cast<std::size_t>(e));
  head[0] = T(1);
  for (int i = 1; i < e; ++i) head[static_cast<std::size_t>(i)] = coords[static_cast<std::size_t>(i - 1)];
  Polynomial<T> root = series_dth_root(Polynomial<T>(std::move(head)), static_cast<unsigned>(d), static_cast<std::size_t>(e));
  MonicOriginal<T> h(reverse(root, static_cast<std::size_t>(e)));

  // Coordinates at multiples of e follow, as x^{e(d-1)}, ..., x^e.
  std::vector<Polynomial<T>> powers(static_cast<std::size_t>(d) + 1);
  powers[0] = Polynomial<T>::constant(T(1));
  for (int j = 1; j <= d; ++j) powers[static_cast<std::size_t>(j)] = powers[static_cast<std::size_t>(j - 1)] * h.poly();

  std::vector<T> g(static_cast<std::size_t>(d) + 1);
  g[static_cast<std::size_t>(d)] = T(1);
  for (int i = d - 1; i >= 1; --i) {
    const std::size_t at = static_cast<std::size_t>(e * i);
    T value = coords[static_cast<std::size_t>(e - 1 + (d - 1 - i))];
    for (int j = i + 1; j <= d; ++j) value -= g[static_cast<std::size_t>(j)] * powers[static_cast<std::size_t>(j)].coeff(at);
    g[static_cast<std::size_t>(i)] = value;
  }
  return {MonicOriginal<T>(Polynomial<T>(std::move(g))), std::move(h)};
}

template <Scalar T>
MonicOriginal<T> section(std::span<const T> coords, int n, int d) {
  auto dec = section_components(coords, n, d);
  return compose(dec.g, dec.h);
}

/// Coordinates of f at the indices of NT_d, in NtSet::nt order.
template <Scalar T>
std::vector<T> nt_coordinates(const Polynomial<T>& f, const NtSet& set) {
  std::vector<T> out;
  out.reserve(set.nt.size());
  for (int i : set.nt) out.push_back(f.coeff(static_cast<std::size_t>(i)));
  return out;
}

}  // namespace polydecomp
