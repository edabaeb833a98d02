#include <doctest.h>

#include <random>

#include "oscul/errors.hpp"
#include "oscul/schubert.hpp"

using namespace oscul;

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Standard Young tableaux of the full m x c rectangle, by the hook length
// formula. The degree of sigma_1^{m c} equals this count.
BigInt syt_rectangle(int m, int c) {
  BigInt hooks = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < c; ++j) hooks *= (c - j - 1) + (m - i - 1) + 1;
  return factorial(m * c) / hooks;
}

BigInt catalan(int k) { return binomial(2 * k, k) / (k + 1); }

CohClass power(const CohClass& x, int k) {
  CohClass r = CohClass::one(x.ctx());
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

}  // namespace

TEST_CASE("GrassCtx validation") {
  CHECK_THROWS_AS(GrassCtx(0, 3), PreconditionError);
  CHECK_THROWS_AS(GrassCtx(3, 3), PreconditionError);
  CHECK(GrassCtx(2, 5).dim() == 6);
}

TEST_CASE("Pieri examples on G(2,4)") {
  const GrassCtx g(2, 4);
  const CohClass s1 = sigma1(g);
  CHECK(s1 * s1 == CohClass::schubert(g, {2}) + CohClass::schubert(g, {1, 1}));
  CHECK(s1 * CohClass::schubert(g, {2, 1}) == CohClass::schubert(g, {2, 2}));
  CHECK(integrate(power(s1, 4)) == 2);
  CHECK(integrate(CohClass::schubert(g, {1, 1}) * CohClass::schubert(g, {2})) == 0);
  CHECK(integrate(CohClass::schubert(g, {2}) * CohClass::schubert(g, {2})) == 1);
}

TEST_CASE("integrate of sigma_1^dim counts rectangular tableaux") {
  for (int m = 1; m <= 4; ++m)
    for (int N = m + 1; N <= m + 4; ++N) {
      const GrassCtx g(m, N);
      CHECK_MESSAGE(integrate(power(sigma1(g), g.dim())) == syt_rectangle(m, N - m), g.str());
    }
}

TEST_CASE("Catalan numbers on G(2, k + 2)") {
  for (int k = 1; k <= 8; ++k) {
    const GrassCtx g(2, k + 2);
    CHECK(integrate(power(sigma1(g), 2 * k)) == catalan(k));
  }
}

TEST_CASE("Poincare duality is exhaustive on G(2,5)") {
  const GrassCtx g(2, 5);
  const auto box = partitions_in_box(g.rows(), g.cols());
  for (const Partition& a : box)
    for (const Partition& b : box) {
      const BigInt expected = (b == poincare_dual(g, a)) ? 1 : 0;
      REQUIRE(integrate(CohClass::schubert(g, a) * CohClass::schubert(g, b)) == expected);
    }
}

TEST_CASE("products are commutative, associative and graded on G(2,6) and G(3,6)") {
  std::mt19937_64 rng(3);
  for (const GrassCtx g : {GrassCtx(2, 6), GrassCtx(3, 6)}) {
    const auto box = partitions_in_box(g.rows(), g.cols());
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    for (int t = 0; t < 200; ++t) {
      const CohClass a = CohClass::schubert(g, box[pick(rng)]);
      const CohClass b = CohClass::schubert(g, box[pick(rng)]);
      const CohClass c = CohClass::schubert(g, box[pick(rng)]);
      REQUIRE(a * b == b * a);
      REQUIRE((a * b) * c == a * (b * c));
      const int deg = a.terms().begin()->first.weight() + b.terms().begin()->first.weight();
      REQUIRE((a * b).is_homogeneous(deg));
    }
  }
}

TEST_CASE("out of box and context errors") {
  CHECK_THROWS_AS(CohClass::schubert(GrassCtx(2, 4), {3}), ShapeOverflow);
  CHECK_THROWS_AS(CohClass::schubert(GrassCtx(2, 4), {1, 1, 1}), ShapeOverflow);
  CHECK_THROWS_AS(sigma1(GrassCtx(2, 4)) * sigma1(GrassCtx(2, 5)), ContextMismatch);
  CHECK_THROWS_AS(sigma1(GrassCtx(2, 4)) + sigma1(GrassCtx(2, 5)), ContextMismatch);
  // Products past the top degree vanish.
  const GrassCtx g(2, 4);
  CHECK((CohClass::schubert(g, {2, 2}) * sigma1(g)).is_zero());
}

TEST_CASE("CohClass string form") {
  const GrassCtx g(2, 5);
  const CohClass x = CohClass::schubert(g, {2, 1}, 2) - CohClass::schubert(g, {3});
  CHECK(x.str() == "2*s(2,1) - s(3)");
  CHECK(CohClass::zero(g).str() == "0");
}
