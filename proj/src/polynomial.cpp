#include "lapbound/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lapbound {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a;
  RatPoly y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return Rational(1) / x.leading() * x;
}

RatPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  return Rational(den_lcm, num_gcd) * p;
}

namespace {

template <class T>
int multiplicity_impl(Polynomial<T> p, const T& t) {
  if (p.is_zero()) throw std::domain_error("multiplicity of a root of the zero polynomial");
  int mult = 0;
  while (p.degree() >= 1) {
    // Synthetic division by (x - t).
    const auto& c = p.coeffs();
    std::vector<T> quo(c.size() - 1);
    T carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = carry * t + c[i];
      quo[i - 1] = carry;
    }
    if (carry * t + c[0] != 0) break;
    ++mult;
    p = Polynomial<T>(std::move(quo));
  }
  return mult;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& t) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sgn(q.evaluate(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int sign_variations_at_infinity(const std::vector<RatPoly>& chain) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sgn(q.leading());
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

std::vector<RatPoly> sturm_chain(const RatPoly& squarefree) {
  std::vector<RatPoly> chain{primitive_part(squarefree), primitive_part(squarefree.derivative())};
  while (chain.back().degree() > 0) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(primitive_part(-r));
  }
  return chain;
}

template <class T>
std::string format_poly(const Polynomial<T>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    T c = p.coeff(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (c != 1 || k == 0) os << c;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace

int root_multiplicity(const RatPoly& p, const Rational& t) { return multiplicity_impl(p, t); }

int root_multiplicity(const IntPoly& p, const Integer& t) { return multiplicity_impl(p, t); }

RootCounter::RootCounter(const IntPoly& p) : poly_(to_rational(p)) {
  if (poly_.is_zero()) throw std::domain_error("cannot count roots of the zero polynomial");
  // g_0 = p, g_k = gcd(g_{k-1}, g_{k-1}'), h_k = g_{k-1} / g_k.
  RatPoly previous = poly_;
  while (previous.degree() > 0) {
    RatPoly next = gcd(previous, previous.derivative());
    RatPoly layer = divmod(previous, next).first;
    if (layer.degree() > 0) chains_.push_back(sturm_chain(layer));
    previous = std::move(next);
  }
}

int RootCounter::count_above(const Rational& t) const {
  // For a square-free layer V(t) equals V(t+), so the difference counts the
  // roots in (t, inf) even when t itself is a root.
  int count = 0;
  for (const auto& chain : chains_) count += sign_variations(chain, t) - sign_variations_at_infinity(chain);
  return count;
}

int RootCounter::count_at_least(const Rational& t) const { return count_above(t) + multiplicity(t); }

int RootCounter::multiplicity(const Rational& t) const { return multiplicity_impl(poly_, t); }

std::string to_string(const IntPoly& p) { return format_poly(p); }

std::string to_string(const RatPoly& p) { return format_poly(p); }

}  // namespace lapbound
