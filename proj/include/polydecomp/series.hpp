#pragma once

#include <cstddef>
#include <vector>

#include "polydecomp/errors.hpp"
#include "polydecomp/polynomial.hpp"

namespace polydecomp {

/// x^n * p(1/x) for a polynomial of degree <= n.
template <Scalar T>
Polynomial<T> reverse(const Polynomial<T>& p, std::size_t n) {
  if (p.degree() > static_cast<int>(n)) throw DomainError("reverse: degree exceeds reversal length");
  std::vector<T> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[n - i] = p.coeff(i);
  return Polynomial<T>(std::move(out));
}

/// Reverse of a monic original f of degree n: constant term 1, degree n-1.
template <Scalar T>
Polynomial<T> reverse(const MonicOriginal<T>& f) {
  return reverse(f.poly(), static_cast<std::size_t>(f.degree()));
}

/// Truncation lengths for Newton iteration: 1, ..., ceil(k/2), k.
std::vector<std::size_t> newton_schedule(std::size_t k);

/// q with p*q = 1 mod x^k, deg q < k.
template <Scalar T>
Polynomial<T> series_inverse(const Polynomial<T>& p, std::size_t k) {
  if (k == 0) throw DomainError("series_inverse: precision must be positive");
  if (is_zero(p.coeff(0))) throw DomainError("series_inverse: constant term is zero, series is not invertible");
  const Polynomial<T> two = Polynomial<T>::constant(T(2));
  Polynomial<T> q = Polynomial<T>::constant(T(1) / p.coeff(0));
  for (std::size_t m : newton_schedule(k)) {
    if (m == 1) continue;
    // q <- q (2 - p q) mod x^m
    Polynomial<T> pq = multiply_truncated(truncate(p, m), q, m);
    q = multiply_truncated(q, two - pq, m);
  }
  return q;
}

/// The unique q with q^d = p mod x^k, q(0) = 1, deg q < k. Requires p(0) = 1.
template <Scalar T>
Polynomial<T> series_dth_root(const Polynomial<T>& p, unsigned d, std::size_t k) {
  if (d == 0) throw DomainError("series_dth_root: root order must be positive");
  if (k == 0) throw DomainError("series_dth_root: precision must be positive");
  if (!(p.coeff(0) == T(1))) throw DomainError("series_dth_root: constant term must be 1");
  Polynomial<T> q = Polynomial<T>::constant(T(1));
  if (d == 1) return truncate(p, k);
  const T inv_d = T(1) / T(static_cast<long>(d));
  for (std::size_t m : newton_schedule(k)) {
    if (m == 1) continue;
    // q <- q - (q^d - p) / (d q^(d-1)) mod x^m
    Polynomial<T> q_pow = Polynomial<T>::constant(T(1));
    for (unsigned j = 1; j < d; ++j) q_pow = multiply_truncated(q_pow, q, m);
    Polynomial<T> residual = multiply_truncated(q_pow, q, m) - truncate(p, m);
    Polynomial<T> step = multiply_truncated(residual, series_inverse(q_pow, m), m);
    q -= step * inv_d;
  }
  return q;
}

/// Generalized Taylor expansion f = sum_{i<=d} G_i h^i with deg G_i < deg h,
/// by repeated division with remainder by h. Requires deg f <= d * deg h.
template <Scalar T>
std::vector<Polynomial<T>> taylor_coefficients(const Polynomial<T>& f, const MonicOriginal<T>& h, unsigned d) {
  if (f.degree() > static_cast<int>(d) * h.degree())
    throw DomainError("taylor_coefficients: deg f exceeds d * deg h");
  std::vector<Polynomial<T>> out;
  out.reserve(d + 1);
  Polynomial<T> rest = f;
  for (unsigned i = 0; i <= d; ++i) {
    auto [quot, rem] = divide_monic(rest, h.poly());
    out.push_back(std::move(rem));
    rest = std::move(quot);
  }
  return out;
}

}  // namespace polydecomp
