#include <doctest.h>

#include "generators.hpp"
#include "norden/linalg.hpp"
#include "norden/norden_algebra.hpp"

using namespace norden;
using norden::testing::Gen;

TEST_SUITE("inverse") {
  TEST_CASE("involutive diagonal metric") {
    const RationalMatrix g = RationalMatrix::diagonal({1, 1, 1, -1, -1, -1});
    CHECK(inverse(g) == g);
  }

  TEST_CASE("identity") { CHECK(inverse(RationalMatrix::identity(6)) == RationalMatrix::identity(6)); }

  TEST_CASE("diagonal inversion") {
    const RationalMatrix m{{2, 0}, {0, 4}};
    const RationalMatrix expected{{Rational(1, 2), 0}, {0, Rational(1, 4)}};
    CHECK(inverse(m) == expected);
  }

  TEST_CASE("singular matrix reports the failing row") {
    const RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}};
    try {
      inverse(m);
      FAIL("expected SingularMatrix");
    } catch (const SingularMatrix& e) {
      CHECK(e.row() == 1);
    }
    CHECK_THROWS_AS(inverse(RationalMatrix(2, 3)), DimensionMismatch);
  }

  TEST_CASE("inverse is exact and involutive on random matrices up to 8x8") {
    Gen gen(99);
    for (std::size_t n = 1; n <= 8; ++n)
      for (int trial = 0; trial < 6; ++trial) {
        const RationalMatrix m = gen.nonsingular_matrix(n);
        const RationalMatrix inv = inverse(m);
        CHECK(m * inv == RationalMatrix::identity(n));
        CHECK(inverse(inv) == m);
        for (const auto& x : inv.data()) CHECK(x.is_canonical());
      }
  }
}

TEST_SUITE("signature") {
  TEST_CASE("split metric") { CHECK(signature(default_metric(3)) == Signature{3, 3}); }
  TEST_CASE("identity") { CHECK(signature(RationalMatrix::identity(4)) == Signature{4, 0}); }
  TEST_CASE("hyperbolic plane needs an off-diagonal pivot") {
    const RationalMatrix m{{0, 1}, {1, 0}};
    CHECK(signature(m) == Signature{1, 1});
  }
  TEST_CASE("signature of default metric is (n, n)") {
    for (std::size_t n = 1; n <= 5; ++n) {
      const int k = static_cast<int>(n);
      CHECK(signature(default_metric(n)) == Signature{k, k});
    }
  }
  TEST_CASE("errors") {
    const RationalMatrix asym{{1, 2}, {3, 4}};
    CHECK_THROWS_AS(signature(asym), NotSymmetric);
    const RationalMatrix degenerate{{1, 1}, {1, 1}};
    CHECK_THROWS_AS(signature(degenerate), DegenerateForm);
    CHECK_THROWS_AS(signature(RationalMatrix(2, 2)), DegenerateForm);
  }
  TEST_CASE("Sylvester: congruence preserves inertia") {
    Gen gen(5);
    for (int trial = 0; trial < 40; ++trial) {
      const RationalMatrix p = gen.nonsingular_matrix(5);
      const RationalMatrix d = RationalMatrix::diagonal({1, -2, Rational(1, 3), -1, 5});
      CHECK(signature(p.transpose() * d * p) == Signature{3, 2});
    }
  }
}

TEST_SUITE("determinant") {
  TEST_CASE("rational and polynomial determinants agree") {
    Gen gen(3);
    for (int trial = 0; trial < 20; ++trial) {
      const RationalMatrix m = gen.matrix(5);
      CHECK(determinant(to_poly(m)) == Poly(determinant(m)));
    }
  }
  TEST_CASE("polynomial determinant") {
    const ParameterList p({"a", "b"});
    const Poly a = Poly::variable(p, "a"), b = Poly::variable(p, "b");
    const PolyMatrix m{{a, b}, {b, a}};
    CHECK(determinant(m) == a * a - b * b);
  }
  TEST_CASE("rank") {
    const RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 0}};
    CHECK(rank(m) == 2);
  }
}
