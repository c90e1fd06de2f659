#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polydecomp/errors.hpp"
#include "polydecomp/scalar.hpp"

namespace polydecomp {

/// Dense univariate polynomial; coefficient i multiplies x^i.
///
/// Exact zero coefficients at the top are always stripped, so the zero
/// polynomial is the empty sequence and degree() reports -1 for it. Float
/// coefficients that are merely tiny are kept: the degree of a float
/// product is the sum of the degrees even when the leading term is small.
template <Scalar T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial monomial(std::size_t k, const T& c = T(1)) {
    std::vector<T> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of x^i; zero beyond the degree.
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T{}; }
  const T& leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  std::span<const T> coefficients() const { return coeffs_; }

  T operator()(const T& at) const {
    T acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= at;
      acc += *it;
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const T& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) {
    for (auto& x : p.coeffs_) x = -x;
    return p;
  }
  friend Polynomial operator*(Polynomial p, const T& c) { return p *= c; }
  friend Polynomial operator*(const T& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) { return multiply(p, q); }

  /// Exact coefficientwise equality (also for floats; see approx_equal).
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && polydecomp::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

namespace detail {

inline constexpr std::size_t kKaratsubaThreshold = 32;

template <class T>
void schoolbook(std::span<const T> a, std::span<const T> b, std::span<T> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
}

// out (size 2n-1, zero-initialised) += a*b for |a| = |b| = n.
template <class T>
void karatsuba(std::span<const T> a, std::span<const T> b, std::span<T> out) {
  const std::size_t n = a.size();
  if (n < kKaratsubaThreshold) {
    schoolbook(a, b, out);
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;
  auto a0 = a.first(lo), a1 = a.subspan(lo);
  auto b0 = b.first(lo), b1 = b.subspan(lo);

  std::vector<T> z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
  karatsuba<T>(a0, b0, z0);
  karatsuba<T>(a1, b1, z2);

  std::vector<T> sa(a1.begin(), a1.end()), sb(b1.begin(), b1.end());
  for (std::size_t i = 0; i < lo; ++i) {
    sa[i] += a0[i];
    sb[i] += b0[i];
  }
  karatsuba<T>(sa, sb, z1);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + lo] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * lo] += z2[i];
}

}  // namespace detail

/// Schoolbook product, switching to Karatsuba once both operands reach
/// detail::kKaratsubaThreshold coefficients.
template <Scalar T>
Polynomial<T> multiply(const Polynomial<T>& p, const Polynomial<T>& q) {
  if (p.is_zero() || q.is_zero()) return {};
  auto a = p.coefficients();
  auto b = q.coefficients();
  std::vector<T> out(a.size() + b.size() - 1);
  if (std::min(a.size(), b.size()) < detail::kKaratsubaThreshold) {
    detail::schoolbook<T>(a, b, out);
  } else {
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<T> pa(a.begin(), a.end()), pb(b.begin(), b.end());
    pa.resize(n);
    pb.resize(n);
    std::vector<T> full(2 * n - 1);
    detail::karatsuba<T>(pa, pb, full);
    std::copy_n(full.begin(), out.size(), out.begin());
  }
  return Polynomial<T>(std::move(out));
}

/// Product reference used by tests to cross-check the Karatsuba path.
template <Scalar T>
Polynomial<T> multiply_schoolbook(const Polynomial<T>& p, const Polynomial<T>& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<T> out(p.size() + q.size() - 1);
  detail::schoolbook<T>(p.coefficients(), q.coefficients(), out);
  return Polynomial<T>(std::move(out));
}

/// p mod x^k.
template <Scalar T>
Polynomial<T> truncate(const Polynomial<T>& p, std::size_t k) {
  auto c = p.coefficients();
  return Polynomial<T>(std::vector<T>(c.begin(), c.begin() + std::min(k, c.size())));
}

/// p*q mod x^k without forming the high half.
template <Scalar T>
Polynomial<T> multiply_truncated(const Polynomial<T>& p, const Polynomial<T>& q, std::size_t k) {
  if (p.is_zero() || q.is_zero() || k == 0) return {};
  auto a = p.coefficients();
  auto b = q.coefficients();
  std::vector<T> out(std::min(k, a.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Polynomial<T>(std::move(out));
}

template <Scalar T>
Polynomial<T> power(Polynomial<T> base, unsigned exponent) {
  Polynomial<T> result = Polynomial<T>::constant(T(1));
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// g(h) by Horner's rule; deg = deg g * deg h.
template <Scalar T>
Polynomial<T> compose(const Polynomial<T>& g, const Polynomial<T>& h) {
  Polynomial<T> acc;
  auto c = g.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * h;
    acc += Polynomial<T>::constant(*it);
  }
  return acc;
}

/// Quotient and remainder by a monic divisor.
template <Scalar T>
std::pair<Polynomial<T>, Polynomial<T>> divide_monic(const Polynomial<T>& f, const Polynomial<T>& divisor) {
  const int m = divisor.degree();
  if (m < 0 || !(divisor.leading() == T(1))) throw DomainError("divide_monic: divisor must be monic");
  const int n = f.degree();
  if (n < m) return {Polynomial<T>{}, f};
  auto dc = divisor.coefficients();
  std::vector<T> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<T> quot(static_cast<std::size_t>(n - m + 1));
  for (int k = n - m; k >= 0; --k) {
    T q = rem[static_cast<std::size_t>(k + m)];
    quot[static_cast<std::size_t>(k)] = q;
    if (is_zero(q)) continue;
    for (int j = 0; j <= m; ++j) rem[static_cast<std::size_t>(k + j)] -= q * dc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(m));
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// Coefficientwise |p_i - q_i| <= tol.
template <Scalar T>
bool approx_equal(const Polynomial<T>& p, const Polynomial<T>& q, double tol = 1e-9) {
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    T diff = p.coeff(i) - q.coeff(i);
    if (ScalarTraits<T>::magnitude(diff) > tol) return false;
  }
  return true;
}

template <Scalar T>
double max_norm(const Polynomial<T>& p) {
  double m = 0.0;
  for (const auto& c : p.coefficients()) m = std::max(m, ScalarTraits<T>::magnitude(c));
  return m;
}

/// A polynomial of degree n >= 1 with leading coefficient 1 and constant
/// term 0. Construction validates both.
template <Scalar T>
class MonicOriginal {
 public:
  explicit MonicOriginal(Polynomial<T> p) : poly_(std::move(p)) {
    if (poly_.degree() < 1) throw DomainError("monic original polynomial must have degree >= 1");
    if (!(poly_.leading() == T(1))) throw DomainError("polynomial is not monic");
    if (!is_zero(poly_.coeff(0))) throw DomainError("polynomial is not original (nonzero constant term)");
  }

  static MonicOriginal identity() { return MonicOriginal(Polynomial<T>::x()); }

  int degree() const { return poly_.degree(); }
  const Polynomial<T>& poly() const { return poly_; }
  T coeff(std::size_t i) const { return poly_.coeff(i); }

  friend bool operator==(const MonicOriginal& a, const MonicOriginal& b) { return a.poly_ == b.poly_; }

 private:
  Polynomial<T> poly_;
};

/// Composition of monic originals stays monic original.
template <Scalar T>
MonicOriginal<T> compose(const MonicOriginal<T>& g, const MonicOriginal<T>& h) {
  return MonicOriginal<T>(compose(g.poly(), h.poly()));
}

}  // namespace polydecomp
