#include <doctest.h>

#include <random>

#include "oscul/chern.hpp"
#include "oscul/errors.hpp"

using namespace oscul;

TEST_CASE("tautological_sub_dual has c = 1 + s1 + s11") {
  const GrassCtx g(2, 5);
  const auto s = tautological_sub_dual(g);
  CHECK(s.rank == 2);
  CHECK(s.c(1) == sigma1(g));
  CHECK(s.c(2) == CohClass::schubert(g, {1, 1}));
  CHECK_THROWS_AS(tautological_sub_dual(GrassCtx(3, 6)), PreconditionError);
}

TEST_CASE("Sym^d Chern polynomials agree with the splitting principle") {
  for (int d = 1; d <= 8; ++d) CHECK(sym_power_chern_polys(d) == sym_power_chern_polys_by_roots(d));
}

TEST_CASE("Sym^2 universal formula") {
  const auto p = sym_power_chern_polys(2);
  REQUIRE(p.size() == 4);
  CHECK(p[1] == MultiPoly::monomial({1, 0}, 3));
  CHECK(p[2] == MultiPoly::monomial({2, 0}, 2) + MultiPoly::monomial({0, 1}, 4));
  CHECK(p[3] == MultiPoly::monomial({1, 1}, 4));
}

TEST_CASE("Sym^1 is the identity") {
  const GrassCtx g(2, 5);
  CHECK(sym_power_bundle(g, 1) == tautological_sub_dual(g));
}

TEST_CASE("c1 of E_d is d(d+1)/2 sigma_1") {
  for (int d = 1; d <= 10; ++d) {
    const GrassCtx g(2, 6);
    CHECK(sym_power_bundle(g, d).c(1) == sigma1(g) * BigInt(d * (d + 1) / 2));
  }
}

TEST_CASE("dualizing commutes with Sym^d") {
  const GrassCtx g(2, 6);
  const auto s = tautological_sub_dual(g);
  for (int d = 1; d <= 5; ++d) CHECK(sym_power_rank2(dual_bundle(s), d) == dual_bundle(sym_power_rank2(s, d)));
}

TEST_CASE("top Chern class of E_d counts lines") {
  CHECK(integrate(top_chern(sym_power_bundle(GrassCtx(2, 4), 3))) == 27);
  CHECK(integrate(top_chern(sym_power_bundle(GrassCtx(2, 5), 5))) == 2875);
}

TEST_CASE("whitney_quotient inverts whitney_sum") {
  const GrassCtx g(2, 6);
  const auto box = partitions_in_box(2, 4);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_bundle = [&](int rank) {
    FormalBundle<CohClass> b = trivial_bundle(CohClass::one(g), rank);
    for (int i = 1; i <= rank; ++i)
      for (const Partition& p : partitions_in_box(2, 4, i)) b.chern[i].add_term(p, coeff(rng));
    return b;
  };
  for (int t = 0; t < 30; ++t) {
    const auto a = random_bundle(2), b = random_bundle(3);
    CHECK(whitney_quotient(whitney_sum(a, b), b) == a);
    CHECK(whitney_quotient(whitney_sum(a, b), a) == b);
  }
  const auto s = tautological_sub_dual(g);
  CHECK_THROWS_AS(whitney_quotient(s, trivial_bundle(CohClass::one(g), 3)), PreconditionError);
}

TEST_CASE("split_bundle multiplies line bundle factors") {
  const GrassCtx g(2, 5);
  const CohClass s1 = sigma1(g);
  const std::vector<CohClass> roots{s1, s1 * BigInt(2)};
  const auto b = split_bundle(CohClass::one(g), std::span<const CohClass>(roots));
  CHECK(b.rank == 2);
  CHECK(b.c(0) == CohClass::one(g));
  CHECK(b.c(1) == s1 * BigInt(3));
  CHECK(b.c(2) == s1 * s1 * BigInt(2));
}

TEST_CASE("sym_power_rank2 preconditions") {
  const GrassCtx g(2, 5);
  CHECK_THROWS_AS(sym_power_rank2(trivial_bundle(CohClass::one(g), 3), 2), PreconditionError);
  CHECK_THROWS_AS(sym_power_rank2(tautological_sub_dual(g), 0), PreconditionError);
}
