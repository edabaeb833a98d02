#pragma once

#include <map>
#include <string>

#include "oscul/bigint.hpp"
#include "oscul/partition.hpp"

namespace oscul {

/// Grassmannian G(m, N) of m-dimensional subspaces of an N-dimensional
/// space. Schubert classes are indexed by partitions in the m x (N - m) box.
/// The Grassmannian of lines in P^n is GrassCtx{2, n + 1}.
struct GrassCtx {
  int m = 2;
  int N = 4;

  GrassCtx() = default;
  GrassCtx(int m_, int N_);

  int rows() const { return m; }
  int cols() const { return N - m; }
  int dim() const { return m * (N - m); }
  Partition full_box() const;
  std::string str() const;

  bool operator==(const GrassCtx&) const = default;
};

/// Integer combination of Schubert classes sigma_lambda of G(m, N), where
/// sigma_lambda has codimension |lambda|. Mixed degrees are allowed.
class CohClass {
 public:
  explicit CohClass(GrassCtx ctx) : ctx_(ctx) {}

  static CohClass zero(GrassCtx ctx) { return CohClass(ctx); }
  static CohClass one(GrassCtx ctx) { return schubert(ctx, {}); }
  /// sigma_p; throws ShapeOverflow when p does not fit the box.
  static CohClass schubert(GrassCtx ctx, const Partition& p, const BigInt& coeff = 1);

  const GrassCtx& ctx() const { return ctx_; }
  const std::map<Partition, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Partition& p) const;
  /// Terms of codimension exactly k.
  CohClass degree_part(int k) const;
  bool is_homogeneous(int k) const;

  void add_term(const Partition& p, const BigInt& c);

  CohClass& operator+=(const CohClass& o);
  CohClass& operator-=(const CohClass& o);
  CohClass& operator*=(const BigInt& c);

  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator-(CohClass a) { return a *= BigInt(-1); }
  friend CohClass operator*(CohClass a, const BigInt& c) { return a *= c; }
  friend CohClass operator*(const BigInt& c, CohClass a) { return a *= c; }
  friend CohClass operator*(const CohClass& a, const CohClass& b);

  bool operator==(const CohClass&) const = default;

  /// Partition-coefficient listing, e.g. "2*s(2,1) - s(3)".
  std::string str() const;

 private:
  GrassCtx ctx_;
  std::map<Partition, BigInt> terms_;
};

/// Product in H*(G(m, N)); products not fitting the box are discarded.
/// Throws ContextMismatch for classes of different Grassmannians.
CohClass schubert_mul(const CohClass& a, const CohClass& b);

/// Degree against the fundamental class: the coefficient of the full box.
BigInt integrate(const CohClass& a);

/// Partition of the Schubert class dual to sigma_p.
Partition poincare_dual(const GrassCtx& ctx, const Partition& p);

/// sigma_1 = c_1 of the Pluecker line bundle.
inline CohClass sigma1(GrassCtx ctx) { return CohClass::schubert(ctx, {1}); }

}  // namespace oscul
