#pragma once

// Constructors for polynomials lying in C_{n,d} and C_{n,e} at once
// (e > d >= 2, de = n): the exponential family
//   u o (x^{d(e-sd)/i^2} * w(x^{d/i})^{d/i})^{[a]} o v
// and the trigonometric family
//   u o T_{n/i^2}(x, z)^{[a]} o v
// with i = gcd(d, e), s = floor(e/d), u and v monic original of degree i,
// w monic of degree s, and p^{[a]} the original shift of p.

#include <numeric>
#include <string>
#include <vector>

#include "polydecomp/decompose.hpp"
#include "polydecomp/errors.hpp"
#include "polydecomp/polynomial.hpp"

namespace polydecomp {

/// Dickson polynomial of the first kind: T_0 = 2, T_1 = x,
/// T_k = x T_{k-1} - z T_{k-2}. T_k(x, 0) = x^k for k >= 1.
template <Scalar T>
Polynomial<T> dickson(int k, const T& z) {
  if (k < 0) throw DomainError("dickson: degree must be non-negative");
  Polynomial<T> prev = Polynomial<T>::constant(T(2));
  if (k == 0) return prev;
  Polynomial<T> cur = Polynomial<T>::x();
  const Polynomial<T> x = Polynomial<T>::x();
  for (int j = 2; j <= k; ++j) {
    Polynomial<T> next = x * cur - prev * z;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// (x - p(a)) o p o (x + a). Always original; monic when p is.
template <Scalar T>
Polynomial<T> original_shift(const Polynomial<T>& p, const T& a) {
  std::vector<T> c;
  {
    Polynomial<T> shifted = compose(p, Polynomial<T>{a, T(1)});
    auto sc = shifted.coefficients();
    c.assign(sc.begin(), sc.end());
  }
  if (!c.empty()) c[0] = T{};
  return Polynomial<T>(std::move(c));
}

enum class CollisionVariant { exponential, trigonometric };

template <Scalar T>
struct CollisionParams {
  CollisionVariant variant = CollisionVariant::trigonometric;
  int n = 0;
  int d = 0;
  int e = 0;
  int i = 0;  // gcd(d, e)
  int s = 0;  // floor(e / d)
  MonicOriginal<T> u = MonicOriginal<T>::identity();
  MonicOriginal<T> v = MonicOriginal<T>::identity();
  T a{};
  std::vector<T> w;  // exponential: w_{s-1}, ..., w_0 (w_s = 1 implied)
  T z{};             // trigonometric
};

/// Fills e, i, s and checks the integer constraints and the degrees of u, v
/// (and the length of w for the exponential variant). Throws ParameterError.
template <Scalar T>
void validate(CollisionParams<T>& p) {
  if (p.n <= 0 || p.d <= 0 || p.n % p.d != 0)
    throw ParameterError("collision: d must divide n");
  p.e = p.n / p.d;
  if (!(p.e > p.d && p.d >= 2)) throw ParameterError("collision: need e = n/d > d >= 2");
  p.i = std::gcd(p.d, p.e);
  p.s = p.e / p.d;
  if (p.u.degree() != p.i || p.v.degree() != p.i)
    throw ParameterError("collision: u and v must have degree gcd(d, e) = " + std::to_string(p.i));
  const int ii = p.i * p.i;
  if (p.variant == CollisionVariant::exponential) {
    if (p.e == p.s * p.d) throw ParameterError("collision: exponential family undefined when d divides e (e = sd)");
    if ((p.d * (p.e - p.s * p.d)) % ii != 0 || p.d % p.i != 0)
      throw ParameterError("collision: non-integral exponent in exponential family");
    if (static_cast<int>(p.w.size()) != p.s)
      throw ParameterError("collision: w needs s = floor(e/d) = " + std::to_string(p.s) + " coefficients");
  } else if (p.n % ii != 0) {
    throw ParameterError("collision: n / gcd(d, e)^2 is not integral");
  }
}

template <Scalar T>
MonicOriginal<T> alpha_exp(CollisionParams<T> p) {
  p.variant = CollisionVariant::exponential;
  validate(p);
  const int ratio = p.d / p.i;
  const int lead_exp = p.d * (p.e - p.s * p.d) / (p.i * p.i);
  std::vector<T> wc(static_cast<std::size_t>(p.s) + 1);
  for (int k = 0; k < p.s; ++k) wc[static_cast<std::size_t>(k)] = p.w[static_cast<std::size_t>(p.s - 1 - k)];
  wc.back() = T(1);
  Polynomial<T> w_sub = compose(Polynomial<T>(std::move(wc)), Polynomial<T>::monomial(static_cast<std::size_t>(ratio)));
  Polynomial<T> core = Polynomial<T>::monomial(static_cast<std::size_t>(lead_exp)) * power(w_sub, static_cast<unsigned>(ratio));
  MonicOriginal<T> shifted(original_shift(core, p.a));
  return compose(compose(p.u, shifted), p.v);
}

template <Scalar T>
MonicOriginal<T> alpha_trig(CollisionParams<T> p) {
  p.variant = CollisionVariant::trigonometric;
  validate(p);
  MonicOriginal<T> shifted(original_shift(dickson(p.n / (p.i * p.i), p.z), p.a));
  return compose(compose(p.u, shifted), p.v);
}

template <Scalar T>
MonicOriginal<T> build_collision(const CollisionParams<T>& p) {
  return p.variant == CollisionVariant::exponential ? alpha_exp(p) : alpha_trig(p);
}

/// try_decompose succeeds at both d and e.
template <Scalar T>
bool verify_bidecomposable(const MonicOriginal<T>& f, int d, int e, const DecomposeOptions& opts = {}) {
  return try_decompose(f, d, opts).has_value() && try_decompose(f, e, opts).has_value();
}

}  // namespace polydecomp
