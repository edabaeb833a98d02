#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oscul/bigint.hpp"

namespace oscul {

/// Counts derived from the degree relation d = 2n - 2 - k.
struct NumerologyReport {
  int n = 0;
  int k = 0;
  int d = 0;
  BigInt N;               ///< dim S^d = C(n + d, d)
  int codim = 0;          ///< n - k - 1
  int canonical_twist = 0;  ///< K_X = O_X(d - n - 1) = O_X(n - 3 - k)
  int dim_delta = 0;      ///< k + 1
  int fano_dim = 0;       ///< 2n - 3 - d = k - 1
  bool in_range = false;  ///< 1 <= k <= n - 5
};

/// Throws PreconditionError unless n >= 2, k >= 0 and d >= 1.
NumerologyReport numerology(int n, int k);

enum class FanoRegime { Finite, PositiveDimensional, GenericallyEmpty };

std::string to_string(FanoRegime r);

/// Line count on a general degree-d hypersurface of P^n. `count` is set only
/// in the finite regime d = 2n - 3; otherwise `regime` and `fano_dim`
/// explain the situation.
struct LineCount {
  int n = 0;
  int d = 0;
  int fano_dim = 0;
  FanoRegime regime = FanoRegime::Finite;
  std::optional<BigInt> count;
};

LineCount count_lines(int n, int d);

/// Pairwise distinct torus weights on C^{n+1}.
struct WeightVector {
  std::vector<BigInt> weights;
  std::uint64_t seed = 0;
};

/// Seed 0 gives the first n + 1 primes; any other seed gives distinct
/// pseudo-random integers derived deterministically from the seed.
WeightVector make_weights(int n, std::uint64_t seed);

/// Bott residue formula for the degree of c_top(Sym^d S^*) on G(2, n + 1):
/// a sum over coordinate lines {i, j} of the Sym^d weights divided by the
/// tangent weights. Requires d + 1 = 2(n - 1). Throws DegenerateWeights if a
/// weight or denominator vanishes, or if the sum is not an integer.
Rational bott_count_lines(int n, int d, const WeightVector& w);

struct BottResult {
  BigInt value;
  std::uint64_t seed = 0;  ///< seed whose weights succeeded
  int attempts = 0;
};

/// Retries bott_count_lines with seeds seed, seed + 1, ... until the
/// weights are non-degenerate.
BottResult bott_count_lines_seeded(int n, int d, std::uint64_t seed, int max_attempts = 64);

/// Degree in P^n of the union of lines on a general degree-d hypersurface:
/// integral over P of q^*c_top(E_d) * H^{2n-2-d}. This is the pushforward
/// cycle, so it counts the swept locus with multiplicity equal to the number
/// of lines through its general point. Throws RangeError when 2n - 3 - d < 0.
BigInt swept_locus_degree(int n, int d);

}  // namespace oscul
