#pragma once

#include <string>
#include <utility>

#include "oscul/chern.hpp"
#include "oscul/schubert.hpp"

namespace oscul {

/// The incidence variety P = {(x, [l]) : x in l} inside P^n x G(1, n).
/// It is the projectivization of the tautological rank-2 bundle S over
/// G = G(2, n + 1), of dimension 2n - 1.
struct IncidenceCtx {
  int n = 2;

  IncidenceCtx() = default;
  explicit IncidenceCtx(int n_);

  GrassCtx grass() const { return GrassCtx(2, n + 1); }
  int dim() const { return 2 * n - 1; }
  bool operator==(const IncidenceCtx&) const = default;
};

/// Element A + B*H of H*(P), where A, B come from the Grassmannian and H is
/// the hyperplane class pulled back from P^n. L (the Pluecker class pulled
/// back from G) acts as sigma_1 on both components. The normal form uses
/// H^2 = sigma_1*H - sigma_{1,1}.
class IncidenceClass {
 public:
  explicit IncidenceClass(IncidenceCtx ctx);
  IncidenceClass(IncidenceCtx ctx, CohClass a, CohClass b);

  static IncidenceClass zero(IncidenceCtx ctx) { return IncidenceClass(ctx); }
  static IncidenceClass one(IncidenceCtx ctx);
  static IncidenceClass H(IncidenceCtx ctx);
  static IncidenceClass L(IncidenceCtx ctx);
  /// q^* of a Grassmannian class.
  static IncidenceClass pullback(IncidenceCtx ctx, const CohClass& a);

  const IncidenceCtx& ctx() const { return ctx_; }
  const CohClass& a() const { return a_; }
  const CohClass& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  IncidenceClass& operator+=(const IncidenceClass& o);
  IncidenceClass& operator-=(const IncidenceClass& o);
  IncidenceClass& operator*=(const BigInt& c);

  friend IncidenceClass operator+(IncidenceClass x, const IncidenceClass& y) { return x += y; }
  friend IncidenceClass operator-(IncidenceClass x, const IncidenceClass& y) { return x -= y; }
  friend IncidenceClass operator-(IncidenceClass x) { return x *= BigInt(-1); }
  friend IncidenceClass operator*(IncidenceClass x, const BigInt& c) { return x *= c; }
  friend IncidenceClass operator*(const BigInt& c, IncidenceClass x) { return x *= c; }
  friend IncidenceClass operator*(const IncidenceClass& x, const IncidenceClass& y);

  bool operator==(const IncidenceClass&) const = default;

  /// Coefficients (h, l) of a divisor class h*H + l*L. Throws
  /// PreconditionError when the class is not of degree one.
  std::pair<BigInt, BigInt> divisor_coefficients() const;

  std::string str() const;

 private:
  void check(const IncidenceClass& o) const;

  IncidenceCtx ctx_;
  CohClass a_;
  CohClass b_;
};

IncidenceClass inc_mul(const IncidenceClass& u, const IncidenceClass& v);
IncidenceClass inc_pow(const IncidenceClass& u, int k);

/// Pushforward to a point: the fibre integral of H over a line is 1, so
/// A + B*H integrates to the Grassmannian degree of B.
BigInt inc_integrate(const IncidenceClass& u);

/// Closed-form canonical class -2H - nL.
IncidenceClass canonical_P(const IncidenceCtx& ctx);

/// Canonical class from bundle data: K_P = q^*K_G - c_1(T_{P/G}), where
/// K_G = -c_1(S^* (x) Q) with Q = O^{n+1}/S, and the relative Euler sequence
/// 0 -> O -> q^*S (x) O(H) -> T_{P/G} -> 0 gives c_1(T_{P/G}) = c_1(S) + 2H.
IncidenceClass canonical_P_relative(const IncidenceCtx& ctx);

/// Subbundle of q^*E_d whose fibre at (x, l) is the degree-d forms on l
/// vanishing to order >= r at x. It is filtered by the line bundles
/// (d - 2j)H + jL for j = r..d (forms on l with a zero of order exactly j
/// at x). For r = d this is L_d with c_1 = dL - dH.
FormalBundle<IncidenceClass> vanishing_subbundle(const IncidenceCtx& ctx, int d, int r);

/// Contact bundle q^*E_d / vanishing_subbundle(d, r), of rank r. Its fibre is
/// the first r Taylor coefficients at x of a form restricted to l; the
/// section induced by F vanishes exactly where l meets X_F with order >= r.
FormalBundle<IncidenceClass> contact_bundle(const IncidenceCtx& ctx, int d, int r);

/// F_d = q^*E_d / L_d, of rank d.
FormalBundle<IncidenceClass> bundle_Fd(const IncidenceCtx& ctx, int d);

/// Closed form det F_d = d(d-1)/2 L + d H.
IncidenceClass det_Fd(const IncidenceCtx& ctx, int d);

struct CanonicalReport {
  IncidenceClass canonical;
  BigInt h_coeff;
  BigInt l_coeff;
  bool very_ample = false;
};

/// Adjunction on the zero locus of the section of F_d: K = K_P + c_1(F_d).
/// aH + bL counts as very ample when a >= 1 and b >= 1 (H + L embeds P).
CanonicalReport canonical_osculating(const IncidenceCtx& ctx, int d);

struct OsculatingClass {
  IncidenceClass cls;
  int dim = 0;
  int contact_order = 0;
};

/// Largest contact order with a nonempty locus for a generic form of degree
/// d: min(d, 2n - 1).
int default_contact_order(const IncidenceCtx& ctx, int d);

/// Class of the locus of pairs (x, l) where l has contact >= r with a
/// generic degree-d hypersurface at x: top Chern class of the contact
/// bundle. Throws RangeError unless 1 <= r <= d and r <= 2n - 1.
OsculatingClass osculating_class(const IncidenceCtx& ctx, int d, int r);
OsculatingClass osculating_class(const IncidenceCtx& ctx, int d);

/// Degree of the osculating locus under H.
BigInt osculating_degree(const IncidenceCtx& ctx, int d, int r);
BigInt osculating_degree(const IncidenceCtx& ctx, int d);

}  // namespace oscul
