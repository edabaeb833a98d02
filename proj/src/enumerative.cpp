#include "oscul/enumerative.hpp"

#include <random>
#include <set>

#include "oscul/chern.hpp"
#include "oscul/errors.hpp"
#include "oscul/incidence.hpp"

namespace oscul {

NumerologyReport numerology(int n, int k) {
  if (n < 2) throw PreconditionError("numerology needs n >= 2");
  if (k < 0) throw PreconditionError("numerology needs k >= 0");
  NumerologyReport r;
  r.n = n;
  r.k = k;
  r.d = 2 * n - 2 - k;
  if (r.d < 1) throw PreconditionError("d = 2n - 2 - k must be positive");
  r.N = binomial(n + r.d, r.d);
  r.codim = n - k - 1;
  r.canonical_twist = r.d - n - 1;
  r.dim_delta = k + 1;
  r.fano_dim = 2 * n - 3 - r.d;
  r.in_range = k >= 1 && k <= n - 5;
  return r;
}

std::string to_string(FanoRegime r) {
  switch (r) {
    case FanoRegime::Finite:
      return "finite";
    case FanoRegime::PositiveDimensional:
      return "positive-dimensional";
    case FanoRegime::GenericallyEmpty:
      return "generically-empty";
  }
  return "unknown";
}

LineCount count_lines(int n, int d) {
  if (n < 2) throw PreconditionError("count_lines needs n >= 2");
  if (d < 1) throw PreconditionError("count_lines needs d >= 1");
  LineCount lc;
  lc.n = n;
  lc.d = d;
  lc.fano_dim = 2 * n - 3 - d;
  if (lc.fano_dim > 0) {
    lc.regime = FanoRegime::PositiveDimensional;
    return lc;
  }
  if (lc.fano_dim < 0) {
    lc.regime = FanoRegime::GenericallyEmpty;
    return lc;
  }
  const GrassCtx g(2, n + 1);
  lc.count = integrate(top_chern(sym_power_bundle(g, d)));
  return lc;
}

WeightVector make_weights(int n, std::uint64_t seed) {
  WeightVector w;
  w.seed = seed;
  if (seed == 0) {
    for (int candidate = 2; static_cast<int>(w.weights.size()) < n + 1; ++candidate) {
      bool prime = true;
      for (int f = 2; f * f <= candidate; ++f)
        if (candidate % f == 0) prime = false;
      if (prime) w.weights.emplace_back(candidate);
    }
    return w;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-9973, 9973);
  std::set<std::int64_t> seen;
  while (static_cast<int>(w.weights.size()) < n + 1) {
    const std::int64_t v = dist(rng);
    if (seen.insert(v).second) w.weights.emplace_back(v);
  }
  return w;
}

Rational bott_count_lines(int n, int d, const WeightVector& w) {
  if (d + 1 != 2 * (n - 1))
    throw PreconditionError("Bott oracle needs d + 1 = 2(n - 1) (finite line count)");
  if (static_cast<int>(w.weights.size()) != n + 1) throw PreconditionError("weight vector must have n + 1 entries");
  const auto& wt = w.weights;
  Rational total = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      BigInt num = 1;
      for (int m = 0; m <= d; ++m) {
        const BigInt f = wt[i] * m + wt[j] * (d - m);
        if (f == 0) throw DegenerateWeights("zero Sym^d weight at fixed line {" + std::to_string(i) + "," + std::to_string(j) + "}");
        num *= f;
      }
      BigInt den = 1;
      for (int l = 0; l <= n; ++l) {
        if (l == i || l == j) continue;
        const BigInt a = wt[l] - wt[i];
        const BigInt b = wt[l] - wt[j];
        if (a == 0 || b == 0) throw DegenerateWeights("repeated torus weight");
        den *= a * b;
      }
      total += make_rational(num, den);
    }
  if (boost::multiprecision::denominator(total) != 1)
    throw DegenerateWeights("localization sum is not integral: " + to_string(total));
  return total;
}

BottResult bott_count_lines_seeded(int n, int d, std::uint64_t seed, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    try {
      const Rational r = bott_count_lines(n, d, make_weights(n, s));
      return BottResult{boost::multiprecision::numerator(r), s, attempt + 1};
    } catch (const DegenerateWeights&) {
    }
  }
  throw DegenerateWeights("no non-degenerate weights found after " + std::to_string(max_attempts) + " seeds");
}

BigInt swept_locus_degree(int n, int d) {
  if (n < 2) throw PreconditionError("swept_locus_degree needs n >= 2");
  if (d < 1) throw PreconditionError("swept_locus_degree needs d >= 1");
  if (2 * n - 3 - d < 0)
    throw RangeError("lines on a general degree-" + std::to_string(d) + " hypersurface in P^" + std::to_string(n) +
                     " do not exist (negative Fano dimension)");
  const IncidenceCtx ctx(n);
  const CohClass fano = top_chern(sym_power_bundle(ctx.grass(), d));
  return inc_integrate(IncidenceClass::pullback(ctx, fano) * inc_pow(IncidenceClass::H(ctx), 2 * n - 2 - d));
}

}  // namespace oscul
