#include <doctest.h>

#include "lapbound/polynomial.hpp"

using namespace lapbound;

namespace {

IntPoly from_roots(const std::vector<long>& roots) {
  IntPoly p({Integer(1)});
  for (long r : roots) p = p * IntPoly({Integer(-r), Integer(1)});
  return p;
}

Rational q(long a, long b) {
  Rational x{Integer(a), Integer(b)};
  x.canonicalize();
  return x;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("arithmetic and evaluation") {
    const IntPoly p({Integer(-1), Integer(0), Integer(1)});  // x^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(Integer(3)) == 8);
    CHECK(p.derivative() == IntPoly({Integer(0), Integer(2)}));
    CHECK((p - p).degree() == -1);
    CHECK(p * p == from_roots({1, 1, -1, -1}));
    CHECK(to_string(from_roots({0, 1, 3, 4})) == "x^4 - 8x^3 + 19x^2 - 12x");
    CHECK(to_string(IntPoly()) == "0");
  }

  TEST_CASE("division and gcd") {
    const RatPoly a = to_rational(from_roots({1, 2, 2, 5}));
    const RatPoly b = to_rational(from_roots({2, 5, 7}));
    const auto [quot, rem] = divmod(a, b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
    CHECK(gcd(a, b) == to_rational(from_roots({2, 5})));
    CHECK(primitive_part(RatPoly({q(1, 2), q(3, 4)})) == RatPoly({Rational(2), Rational(3)}));
    CHECK_THROWS(divmod(a, RatPoly()));
  }

  TEST_CASE("root multiplicity") {
    const IntPoly p = from_roots({0, 0, 3, 3, 3, 7});
    CHECK(root_multiplicity(p, Integer(0)) == 2);
    CHECK(root_multiplicity(p, Integer(3)) == 3);
    CHECK(root_multiplicity(p, Integer(7)) == 1);
    CHECK(root_multiplicity(p, Integer(5)) == 0);
  }

  TEST_CASE("Sturm counts with repeated roots, including at roots") {
    const IntPoly p = from_roots({0, 1, 1, 1, 4, 4, 6});
    RootCounter c(p);
    CHECK(c.degree() == 7);
    CHECK(c.count_above(Rational(-1)) == 7);
    CHECK(c.count_above(Rational(0)) == 6);
    CHECK(c.count_at_least(Rational(0)) == 7);
    CHECK(c.count_above(Rational(1)) == 3);
    CHECK(c.count_at_least(Rational(1)) == 6);
    CHECK(c.count_above(q(5, 2)) == 3);
    CHECK(c.count_above(Rational(4)) == 1);
    CHECK(c.count_at_least(Rational(4)) == 3);
    CHECK(c.count_above(Rational(6)) == 0);
    CHECK(c.multiplicity(Rational(4)) == 2);
    CHECK(c.multiplicity(q(1, 3)) == 0);
  }

  TEST_CASE("irrational and rational roots") {
    // (x^2 - 2)(2x - 1)^2: roots -sqrt2, 1/2 (double), sqrt2.
    const IntPoly p = IntPoly({Integer(-2), Integer(0), Integer(1)}) * IntPoly({Integer(-1), Integer(2)}) *
                      IntPoly({Integer(-1), Integer(2)});
    RootCounter c(p);
    CHECK(c.count_above(Rational(-2)) == 4);
    CHECK(c.count_above(q(1, 2)) == 1);
    CHECK(c.count_at_least(q(1, 2)) == 3);
    CHECK(c.count_above(q(141, 100)) == 1);
    CHECK(c.count_above(q(142, 100)) == 0);
    CHECK(c.multiplicity(q(1, 2)) == 2);
  }
}
