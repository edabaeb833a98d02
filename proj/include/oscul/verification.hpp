#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "oscul/bigint.hpp"
#include "oscul/linalg.hpp"

namespace oscul {

using IntPoint = std::vector<std::int64_t>;

/// Monomial basis of S^d = H^0(P^n, O(d)) in n + 1 variables, ordered
/// graded-lexicographically (X_0 > X_1 > ... > X_n).
class PolySpace {
 public:
  PolySpace(int n, int d);

  int n() const { return n_; }
  int degree() const { return d_; }
  std::size_t dim() const { return monomials_.size(); }
  const std::vector<std::vector<int>>& monomials() const { return monomials_; }
  /// Throws PreconditionError for exponent vectors of the wrong degree.
  std::size_t index_of(const std::vector<int>& exps) const;

 private:
  int n_;
  int d_;
  std::vector<std::vector<int>> monomials_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// splitmix64 mix of (base, index); used for per-sample and per-trial seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Contact conditions "l . X_F >= r . x" on degree-d forms: the first r
/// Taylor coefficients at x of F restricted to l = span(p, q).
struct ContactSystem {
  int n = 2;
  int d = 1;
  int r = 1;
  IntPoint x;
  IntPoint p;
  IntPoint q;
};

struct ContactReport {
  std::size_t rank = 0;
  std::size_t N = 0;
  std::size_t fiber_dim = 0;  ///< N - rank
  bool rechecked_over_rationals = false;
};

/// The r x N condition matrix over the chosen field. Throws GeometricError
/// if x is not on l or p, q do not span a line; RangeError unless
/// 1 <= r <= d + 1.
template <class F>
Matrix<F> contact_matrix(const ContactSystem& cs);

ContactReport contact_rank(const ContactSystem& cs, FieldKind field);

struct ContactSurvey {
  int n = 0;
  int d = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::size_t N = 0;
  /// Indexed by r = 1..d+1 (entry 0 unused).
  std::vector<std::size_t> min_rank;
  std::vector<std::size_t> max_rank;
  std::vector<std::uint64_t> failing_seeds;
  bool pass = false;
};

/// contact_rank at random (x, l) for every r = 1..d+1; passes iff every
/// rank equals r.
ContactSurvey contact_survey(int n, int d, int samples, FieldKind field, std::uint64_t seed);

struct SampleRank {
  std::uint64_t seed = 0;
  std::size_t rank = 0;
  bool rechecked_over_rationals = false;
};

/// Evaluation rank of global sections in the fibres of a bundle at sampled
/// points.
struct GenerationReport {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  FieldKind field = FieldKind::Prime;
  std::size_t sections = 0;       ///< sections available
  std::size_t sections_used = 0;  ///< sections evaluated
  std::size_t fiber_dim = 0;
  std::size_t min_rank = 0;
  bool values_in_fiber = true;  ///< every value satisfied the fibre equations
  bool pass = false;
  std::vector<SampleRank> samples;
};

/// Global generation of M^d(1) on P^n. Sections are the kernel of the
/// multiplication map S^d (x) S^1 -> S^{d+1}; a kernel element
/// sum_j F_j (x) X_j has value sum_j x_j F_j in S^d_x at the point x.
/// `max_sections` = 0 uses the whole kernel.
GenerationReport check_gg_Mpn(int n, int d, int samples, FieldKind field, std::uint64_t seed,
                              std::size_t max_sections = 0);

/// Global generation of M^1_G(1) on G(1, n). The base section sends l to
/// p12 X0 - p02 X1 + p01 X2 (the linear form through l in <X0, X1, X2>
/// obtained by Cramer's rule, with the pole along p12 = 0 cleared); the
/// remaining sections are its translates s_g(l) = g^T s(g l) under random
/// g in GL(n + 1). `group_elements` counts the base section.
GenerationReport check_gg_MG(int n, int lines, int group_elements, FieldKind field, std::uint64_t seed);

struct Wedge2Report {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  FieldKind field = FieldKind::Prime;
  IntPoint x;
  std::size_t kernel_dim = 0;
  std::size_t image_rank = 0;
  std::size_t fiber_dim = 0;  ///< C(N - 1, 2)
  bool values_in_fiber = true;
  std::size_t witnesses_checked = 0;
  bool witnesses_in_image = false;
  bool rechecked_over_rationals = false;
};

/// Image of H^0(wedge^2 M^d(1)) = ker(wedge^2 S^d (x) S^1 -> S^d (x) S^{d+1})
/// in the fibre wedge^2 S^d_x, plus a check that P A1 ^ P A2 (P in S^{d-1},
/// A_i in S^1_x) lies in that image. Exploratory: nothing about the rank is
/// asserted. An empty `x` draws the point from the seed. Throws
/// BudgetExceeded when the Koszul matrix has more than `budget` entries.
Wedge2Report wedge2_image_report(int n, int d, const IntPoint& x, FieldKind field, std::uint64_t seed,
                                 std::size_t budget = 4'000'000);

/// One random instance of the alternating-contraction image check:
/// returns codim_W of span{<A, phi(B)> - <B, phi(A)>} over basis pairs of a
/// random hyperplane Hbar of W (x) K^*, or nullopt when phi cannot be
/// nonzero (Hbar = 0). Reproducible from `trial_seed`.
std::optional<int> lemma_linalg_trial(int dim_w, int dim_k, std::uint64_t trial_seed, FieldKind field);

struct LinAlgReport {
  int dim_w = 0;
  int dim_k = 0;
  int trials = 0;
  int vacuous_trials = 0;
  std::uint64_t seed = 0;
  FieldKind field = FieldKind::Prime;
  int worst_codim = 0;
  std::vector<std::uint64_t> violating_seeds;  ///< trials with codim > 2
  bool pass = false;
};

LinAlgReport lemma_linalg_check(int dim_w, int dim_k, int trials, FieldKind field, std::uint64_t seed);

}  // namespace oscul
