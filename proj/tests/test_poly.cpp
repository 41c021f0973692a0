#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abelarr/poly.hpp"
#include "support.hpp"

using namespace abelarr;

TEST_CASE("ring examples") {
  const UniPoly t_minus_1{-1, 1};
  CHECK(t_minus_1 * t_minus_1 == UniPoly{1, -2, 1});
  CHECK((t_minus_1 + (-t_minus_1)).is_zero());
  CHECK((t_minus_1 - t_minus_1).degree() == -1);
  const BiPoly prod = (BiPoly::x() - BiPoly::constant(1)) * (BiPoly::y() - BiPoly::constant(1));
  BiPoly expected;
  expected.add_term(1, 1, 1);
  expected.add_term(1, 0, -1);
  expected.add_term(0, 1, -1);
  expected.add_term(0, 0, 1);
  CHECK(prod == expected);
  CHECK((prod - prod).is_zero());
}

TEST_CASE("canonical form drops trailing zeros") {
  CHECK(UniPoly{1, 0, 0}.coefficients().size() == 1);
  CHECK(UniPoly{0, 0}.is_zero());
  BiPoly b;
  b.add_term(2, 1, 3);
  b.add_term(2, 1, -3);
  CHECK(b.is_zero());
}

TEST_CASE("evaluation") {
  const UniPoly f{1, -2, 1};
  CHECK(f.eval(Integer(5)) == 16);
  CHECK(f.eval(Integer(0)) == 1);
  CHECK(UniPoly{}.eval(Integer(7)) == 0);
  CHECK(f.eval(Rational(1, 2)) == Rational(1, 4));
  CHECK((BiPoly::x() * BiPoly::y()).eval(Integer(3), Integer(-2)) == -6);
}

TEST_CASE("to_string") {
  CHECK(UniPoly{1, -2, 1}.to_string() == "t^2 - 2t + 1");
  CHECK(UniPoly{}.to_string() == "0");
}

TEST_CASE("substitute x = 1 - t, y = 0") {
  CHECK(substitute_xy(BiPoly::constant(1)) == UniPoly{1});
  const BiPoly xm1 = BiPoly::x() - BiPoly::constant(1);
  const BiPoly ym1 = BiPoly::y() - BiPoly::constant(1);
  CHECK(substitute_xy(xm1) == UniPoly{0, -1});
  CHECK(substitute_xy(xm1 * xm1 + xm1 * ym1) == UniPoly{0, 1, 1});
  CHECK(substitute_xy(BiPoly::y()).is_zero());
}

TEST_CASE("scale_variable examples") {
  CHECK(scale_variable(UniPoly{2, -3, 1}, 2, 1) == UniPoly{2, -6, 4});
  CHECK(scale_variable(UniPoly{4, -5, 1}, 4, 1) == UniPoly{4, -20, 16});
  CHECK(scale_variable(UniPoly{4, -5, 1}, 1, 1) == UniPoly{4, -5, 1});
  CHECK(scale_variable(UniPoly{4, -5, 1}, 2, 2) == UniPoly{4, 0, -10, 0, 4});
  CHECK_THROWS_AS(scale_variable(UniPoly{1}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(scale_variable(UniPoly{1}, 1, 0), std::invalid_argument);
}

TEST_CASE("property: ring axioms on random polynomials") {
  testsupport::Gen gen(31);
  for (int trial = 0; trial < 300; ++trial) {
    const UniPoly a = gen.poly(4, 9), b = gen.poly(4, 9), c = gen.poly(4, 9);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    const Integer x = gen.between(-6, 6);
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK(pow(a, 3) == a * a * a);
    const long s = gen.between(1, 4);
    const unsigned g = static_cast<unsigned>(gen.between(1, 3));
    // p(c t^g) at x equals p(c x^g)
    CHECK(scale_variable(a, s, g).eval(x) == a.eval(Integer(Integer(s) * power(x, g))));
  }
}

TEST_CASE("property: bivariate evaluation is a ring map and substitution agrees with it") {
  testsupport::Gen gen(32);
  for (int trial = 0; trial < 200; ++trial) {
    BiPoly a, b;
    for (int i = 0; i < 4; ++i) {
      a.add_term(static_cast<int>(gen.between(0, 3)), static_cast<int>(gen.between(0, 3)), gen.between(-5, 5));
      b.add_term(static_cast<int>(gen.between(0, 3)), static_cast<int>(gen.between(0, 3)), gen.between(-5, 5));
    }
    const Integer x = gen.between(-4, 4), y = gen.between(-4, 4);
    CHECK((a * b).eval(x, y) == a.eval(x, y) * b.eval(x, y));
    CHECK((a + b).eval(x, y) == a.eval(x, y) + b.eval(x, y));
    CHECK(substitute_xy(a).eval(x) == a.eval(Integer(1 - x), Integer(0)));
    for (const auto& [e, coeff] : a.terms()) CHECK(coeff != 0);
  }
}
