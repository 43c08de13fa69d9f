#include <doctest.h>

#include "generators.hpp"
#include "norden/errors.hpp"
#include "norden/poly.hpp"

using namespace norden;
using norden::testing::Gen;
using norden::testing::lambdas;

namespace {

Poly P(const char* text) { return Poly::parse(text, lambdas()); }

} // namespace

TEST_SUITE("rational") {
  TEST_CASE("reduced form with positive denominator") {
    const Rational r(6, -8);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 4);
    CHECK(r.is_canonical());
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(0, 5).denominator() == 1);
  }

  TEST_CASE("parse and print") {
    CHECK(Rational::parse("-2/3") == Rational(-2, 3));
    CHECK(Rational::parse(" 7 ") == Rational(7));
    CHECK(Rational::parse("4/2").to_string() == "2");
    CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
  }

  TEST_CASE("division by zero") { CHECK_THROWS(Rational(1) / Rational(0)); }
}

TEST_SUITE("poly") {
  TEST_CASE("monomial product") { CHECK(P("l1") * P("l1") == P("l1^2")); }

  TEST_CASE("cancellation") { CHECK(P("l2^2 + l3^2") - P("l2^2") == P("l3^2")); }

  TEST_CASE("difference of squares") {
    // (l2 + l3)(l2 - l3) = l2^2 - l2 l3 + l3 l2 - l3^2
    const Poly p = P("l2 + l3") * P("l2 - l3");
    CHECK(p.to_string() == "l2^2 - l3^2");
    CHECK(p.terms().size() == 2);
  }

  TEST_CASE("negation and zero") {
    CHECK((-P("l1 - 2*l2")).to_string() == "-l1 + 2*l2");
    CHECK((P("l1") - P("l1")).is_zero());
    CHECK((P("l1") - P("l1")).to_string() == "0");
  }

  TEST_CASE("evaluation") {
    CHECK(P("1/4*l2^2 + 1/4*l3^2").eval({{"l2", 1}, {"l3", 1}}) == Rational(1, 2));
    CHECK(P("l1*l2").eval({{"l1", 0}, {"l2", 7}}) == Rational(0));
    CHECK(P("l3^2").eval({{"l3", Rational(-2, 3)}}) == Rational(4, 9));
  }

  TEST_CASE("evaluation needs every occurring parameter") {
    CHECK_THROWS_AS(P("l1 + l2").eval({{"l1", 1}}), MissingParameter);
    // l3 does not occur, so it need not be assigned
    CHECK(P("l1 + l2").eval({{"l1", 1}, {"l2", 2}}) == Rational(3));
  }

  TEST_CASE("canonical printing order") {
    CHECK(P("1/4*l3^2 + 1/4*l2^2").to_string() == "1/4*l2^2 + 1/4*l3^2");
    CHECK(P("-l2").to_string() == "-l2");
    CHECK(P("3 + l1*l2 - l1^2").to_string() == "-l1^2 + l1*l2 + 3");
    CHECK(P("2*l1*l1*l3").to_string() == "2*l1^2*l3");
    CHECK(P(" - 1/2 * l1 ").to_string() == "-1/2*l1");
  }

  TEST_CASE("printed text parses back to the same polynomial") {
    Gen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
      const Poly p = gen.poly(lambdas(), 5, 3);
      CHECK(Poly::parse(p.to_string(), lambdas()) == p);
    }
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(P("l4"), ParseError);
    CHECK_THROWS_AS(P("l1 +"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("l1 ** l2"), ParseError);
    CHECK_THROWS_AS(P("1/0*l1"), ParseError);
  }

  TEST_CASE("constants promote, differing parameter lists do not") {
    const ParameterList ab({"a", "b"});
    const Poly a = Poly::variable(ab, "a");
    CHECK((a + Poly(3)).to_string() == "a + 3");
    CHECK((Poly(2) * P("l1")).to_string() == "2*l1");
    CHECK((Poly::constant(5, ab) + P("l1")).to_string() == "l1 + 5");
    CHECK_THROWS_AS(a + P("l1"), ParameterMismatch);
    CHECK_THROWS_AS(a * P("l1"), ParameterMismatch);
    const Poly l1_only = Poly::variable(ParameterList({"l1"}), "l1");
    CHECK_THROWS_AS(l1_only + P("l1"), ParameterMismatch);
    CHECK(Poly(4) == Poly::constant(4, ab));
  }

  TEST_CASE("degree structure") {
    CHECK(P("l1^2 - l2*l3").is_homogeneous(2));
    CHECK_FALSE(P("l1^2 - l2").is_homogeneous(2));
    CHECK(P("l1^2*l2 + 1").total_degree() == 3);
    CHECK(Poly().total_degree() == -1);
  }

  TEST_CASE("ring laws on random triples") {
    Gen gen(2024);
    for (int trial = 0; trial < 150; ++trial) {
      const Poly a = gen.poly(lambdas()), b = gen.poly(lambdas()), c = gen.poly(lambdas());
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Poly());
      CHECK(a * Poly(1) == a);
      for (const Poly* p : {&a, &b, &c}) CHECK(p->is_normalized());
      CHECK((a * b + c).is_normalized());
      CHECK((a - b * c).is_normalized());
    }
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    Gen gen(7);
    for (int trial = 0; trial < 150; ++trial) {
      const Poly a = gen.poly(lambdas()), b = gen.poly(lambdas());
      const Assignment v = gen.assignment(lambdas());
      CHECK((a * b).eval(v) == a.eval(v) * b.eval(v));
      CHECK((a + b).eval(v) == a.eval(v) + b.eval(v));
      CHECK((-a).eval(v) == -a.eval(v));
    }
  }

  TEST_CASE("exact division by a rational") {
    CHECK((P("l1 + 3*l2") / Rational(-3)).to_string() == "-1/3*l1 - l2");
    CHECK_THROWS(P("l1") / Rational(0));
  }
}
