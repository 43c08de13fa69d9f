#include <doctest.h>

#include "generators.hpp"
#include "norden/lie_algebra.hpp"
#include "norden/linalg.hpp"
#include "norden/table1.hpp"

using namespace norden;
using norden::testing::Gen;
using norden::testing::lambdas;

namespace {

Poly P(const char* text) { return Poly::parse(text, lambdas()); }

Vector X(std::size_t one_based, std::size_t dim = 6) { return Vector::basis(dim, one_based - 1); }

LieAlgebra table1() { return build_table1().algebra.algebra(); }

LieAlgebra single_bracket(std::size_t l, std::size_t r, std::vector<std::pair<std::size_t, Poly>> targets,
                          std::size_t dim = 6) {
  BracketEntry e{l - 1, r - 1, {}};
  for (auto& [k, c] : targets) e.targets.emplace(k - 1, c);
  return LieAlgebra::from_brackets(dim, {}, {e});
}

} // namespace

TEST_CASE("brackets of the three-parameter family") {
  const LieAlgebra a = table1();
  CHECK(a.bracket(X(2), X(3)) == P("l1") * X(5) + P("l2") * X(6));
  CHECK(a.bracket(X(3), X(2)) == -(P("l1") * X(5) + P("l2") * X(6)));
  const Vector v = Vector::from_rationals({Rational(1, 2), 0, 3, 0, -1, 0});
  CHECK(a.bracket(v, v).is_zero());
  const Assignment ones{{"l1", 1}, {"l2", 1}, {"l3", 1}};
  CHECK(a.evaluate(ones).bracket(X(1), X(4)) == X(2) - X(3) + X(5) - X(6));
}

TEST_CASE("antisymmetry and bilinearity on random vectors") {
  const LieAlgebra a = table1();
  Gen gen(17);
  auto random_vector = [&] {
    Vector v(6);
    for (std::size_t i = 0; i < 6; ++i) v[i] = gen.poly(lambdas(), 2, 1);
    return v;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x = random_vector(), y = random_vector(), z = random_vector();
    const Poly alpha = gen.poly(lambdas(), 2, 1), beta = gen.poly(lambdas(), 2, 1);
    CHECK(a.bracket(x, y) == -a.bracket(y, x));
    CHECK(a.bracket(alpha * x + beta * y, z) == alpha * a.bracket(x, z) + beta * a.bracket(y, z));
  }
}

TEST_CASE("dimension checks") {
  const LieAlgebra a = table1();
  CHECK_THROWS_AS(a.bracket(X(1, 4), X(1)), DimensionMismatch);
  CHECK_THROWS_AS(a.ad_matrix(X(1, 4)), DimensionMismatch);
  CHECK_THROWS_AS(a.jacobiator(0, 1, 6), IndexOutOfRange);
  CHECK_THROWS_AS(LieAlgebra(3), DimensionMismatch);
}

TEST_CASE("construction rejects inconsistent bracket tables") {
  BracketEntry forward{0, 1, {{2, Poly(1)}}};
  BracketEntry backward_ok{1, 0, {{2, Poly(-1)}}};
  BracketEntry backward_bad{1, 0, {{2, Poly(1)}}};
  CHECK_NOTHROW(LieAlgebra::from_brackets(6, {}, {forward, backward_ok}));
  CHECK_THROWS_AS(LieAlgebra::from_brackets(6, {}, {forward, backward_bad}), InconsistentBrackets);
  CHECK_THROWS_AS(LieAlgebra::from_brackets(6, {}, {forward, forward}), InconsistentBrackets);
  CHECK_THROWS_AS(LieAlgebra::from_brackets(6, {}, {BracketEntry{2, 2, {{0, Poly(1)}}}}), InconsistentBrackets);
  CHECK_THROWS_AS(LieAlgebra::from_brackets(6, {}, {BracketEntry{0, 1, {{6, Poly(1)}}}}), IndexOutOfRange);

  std::vector<Poly> gamma(8);
  gamma[(0 * 2 + 1) * 2 + 0] = Poly(1);  // [X1,X2] = X1 without [X2,X1] = -X1
  CHECK_THROWS_AS(LieAlgebra(2, {}, gamma), InconsistentBrackets);
}

TEST_SUITE("jacobi") {
  TEST_CASE("family satisfies Jacobi on every triple, exactly") {
    const LieAlgebra a = table1();
    CHECK(a.jacobiator(0, 1, 2).is_zero());
    CHECK(check_jacobi(a).ok());
  }

  TEST_CASE("abelian") {
    const LieAlgebra a(6);
    CHECK(a.jacobiator(3, 4, 5).is_zero());
    CHECK(check_jacobi(a).ok());
  }

  TEST_CASE("Heisenberg padded to dimension 6") {
    const LieAlgebra a = single_bracket(1, 2, {{3, Poly(1)}});
    CHECK(a.jacobiator(0, 1, 2).is_zero());
    CHECK(check_jacobi(a).ok());
  }

  TEST_CASE("derivation extension [X1,X2]=X3, [X1,X3]=X2 is a Lie algebra") {
    // [[X1,X2],X3] = [X3,X3] = 0, [[X2,X3],X1] = 0, [[X3,X1],X2] = -[X2,X2] = 0
    const LieAlgebra a = LieAlgebra::from_brackets(6, {}, {{0, 1, {{2, Poly(1)}}}, {0, 2, {{1, Poly(1)}}}});
    CHECK(check_jacobi(a).ok());
  }

  TEST_CASE("violation is reported with its triple") {
    // [X1,X2]=X1, [X1,X3]=X1, [X2,X3]=X2:
    // [[X1,X2],X3] = X1, [[X2,X3],X1] = -X1, [[X3,X1],X2] = -X1  =>  sum = -X1
    const LieAlgebra a = LieAlgebra::from_brackets(
        6, {}, {{0, 1, {{0, Poly(1)}}}, {0, 2, {{0, Poly(1)}}}, {1, 2, {{1, Poly(1)}}}});
    const JacobiCheck c = check_jacobi(a);
    REQUIRE(c.violations.size() == 1);
    CHECK(c.violations[0].i == 0);
    CHECK(c.violations[0].j == 1);
    CHECK(c.violations[0].k == 2);
    CHECK(c.violations[0].value == -X(1));
  }
}

TEST_SUITE("adjoint and Killing form") {
  TEST_CASE("ad matrix columns are brackets") {
    const LieAlgebra a = table1();
    const PolyMatrix ad1 = a.ad_matrix(X(1));
    // [X1, X2] = l2 X4 + l3 X5
    for (std::size_t r = 0; r < 6; ++r) {
      const Poly expected = r == 3 ? P("l2") : r == 4 ? P("l3") : Poly();
      CHECK(ad1(r, 1) == expected);
    }
    const Vector x = Vector::from_rationals({1, -2, 0, Rational(1, 3), 0, 5});
    CHECK(apply(a.ad_matrix(x), x).is_zero());
    CHECK(apply(a.ad_matrix(x), X(4)) == a.bracket(x, X(4)));
  }

  TEST_CASE("abelian ad and Killing form vanish") {
    const LieAlgebra a(6);
    CHECK(a.ad_matrix(X(2)) == PolyMatrix(6, 6));
    CHECK(a.killing_form() == PolyMatrix(6, 6));
  }

  TEST_CASE("family Killing form is 4[[L,-L],[-L,L]] and degenerate") {
    const char* L[3][3] = {{"l3^2", "-l2*l3", "-l1*l3"}, {"-l2*l3", "l2^2", "-l1*l2"}, {"-l1*l3", "-l1*l2", "l1^2"}};
    const PolyMatrix B = table1().killing_form();
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        const Poly block = P(L[i % 3][j % 3]) * Rational((i < 3) == (j < 3) ? 4 : -4);
        CHECK(B(i, j) == block);
      }
    CHECK(determinant(B).is_zero());
  }

  TEST_CASE("Killing form is symmetric and ad-invariant on basis triples") {
    const LieAlgebra a = table1();
    const PolyMatrix B = a.killing_form();
    CHECK(B.is_symmetric());
    auto form = [&](const Vector& x, const Vector& y) {
      Poly s;
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) s += x[i] * B(i, j) * y[j];
      return s;
    };
    for (std::size_t x = 1; x <= 6; ++x)
      for (std::size_t y = 1; y <= 6; ++y)
        for (std::size_t z = 1; z <= 6; ++z)
          CHECK((form(a.bracket(X(x), X(y)), X(z)) + form(X(y), a.bracket(X(x), X(z)))).is_zero());
  }
}
