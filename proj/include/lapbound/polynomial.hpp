#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace lapbound {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const T& coeff, int power) {
    std::vector<T> c(static_cast<std::size_t>(power) + 1, T(0));
    c.back() = coeff;
    return Polynomial(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  T coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : T(0);
  }
  const T& leading() const { return c_.back(); }

  T evaluate(const T& x) const {
    T acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

/// det(xI - M) of an exact matrix; monic with integer coefficients.
using CharPoly = IntPoly;

template <class T>
int sign(const T& x) {
  return sgn(x);
}

RatPoly to_rational(const IntPoly& p);

/// Exact quotient and remainder over the rationals; b must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic greatest common divisor (zero when both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Positive rational multiple of p with coprime integer coefficients.
RatPoly primitive_part(const RatPoly& p);

/// Multiplicity of t as a root of p by repeated synthetic division by (x - t).
/// p must be nonzero.
int root_multiplicity(const RatPoly& p, const Rational& t);
int root_multiplicity(const IntPoly& p, const Integer& t);

/// Counts real roots of a nonzero polynomial with multiplicity, exactly.
/// The polynomial is split into square-free layers h_k whose roots are the
/// roots of multiplicity at least k; each layer carries a Sturm chain.
class RootCounter {
 public:
  explicit RootCounter(const IntPoly& p);

  /// Roots strictly greater than t.
  int count_above(const Rational& t) const;
  /// Roots greater than or equal to t.
  int count_at_least(const Rational& t) const;
  int multiplicity(const Rational& t) const;
  int degree() const noexcept { return poly_.degree(); }

 private:
  RatPoly poly_;
  std::vector<std::vector<RatPoly>> chains_;
};

/// Human-readable form, highest degree first, e.g. "x^3 - 6x^2 + 9x".
std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& p);

}  // namespace lapbound
