#pragma once

#include <span>
#include <vector>

#include "oscul/bigint.hpp"
#include "oscul/errors.hpp"
#include "oscul/multipoly.hpp"
#include "oscul/schubert.hpp"

namespace oscul {

/// A vector bundle known only through its rank and total Chern class.
/// `chern[i]` is c_i, homogeneous of degree i; `chern[0]` is the unit.
/// Classes above the ring dimension are stored as zero.
///
/// C is a cohomology class type (CohClass or IncidenceClass) providing
/// +, -, *, scaling by BigInt and is_zero().
template <class C>
struct FormalBundle {
  int rank = 0;
  std::vector<C> chern;

  const C& one() const { return chern.front(); }
  C c(int i) const { return i <= rank ? chern[i] : one() * BigInt(0); }
  C total() const {
    C t = chern.front();
    for (int i = 1; i <= rank; ++i) t = t + chern[i];
    return t;
  }
  bool operator==(const FormalBundle&) const = default;
};

template <class C>
FormalBundle<C> trivial_bundle(const C& one, int rank) {
  FormalBundle<C> b{rank, std::vector<C>(rank + 1, one * BigInt(0))};
  b.chern[0] = one;
  return b;
}

/// Sum of line bundles with the given first Chern classes.
template <class C>
FormalBundle<C> split_bundle(const C& one, std::span<const C> roots) {
  FormalBundle<C> b = trivial_bundle(one, 0);
  for (const C& r : roots) {
    FormalBundle<C> next{b.rank + 1, std::vector<C>(b.rank + 2, one * BigInt(0))};
    for (int i = 0; i <= b.rank; ++i) {
      next.chern[i] = next.chern[i] + b.chern[i];
      next.chern[i + 1] = next.chern[i + 1] + b.chern[i] * r;
    }
    b = std::move(next);
  }
  return b;
}

/// c_i -> (-1)^i c_i.
template <class C>
FormalBundle<C> dual_bundle(const FormalBundle<C>& b) {
  FormalBundle<C> out = b;
  for (int i = 1; i <= b.rank; i += 2) out.chern[i] = -out.chern[i];
  return out;
}

/// Whitney sum: c(a + b) = c(a) c(b).
template <class C>
FormalBundle<C> whitney_sum(const FormalBundle<C>& a, const FormalBundle<C>& b) {
  FormalBundle<C> out = trivial_bundle(a.one(), a.rank + b.rank);
  out.chern[0] = out.chern[0] * BigInt(0);
  for (int i = 0; i <= a.rank; ++i)
    for (int j = 0; j <= b.rank; ++j) out.chern[i + j] = out.chern[i + j] + a.chern[i] * b.chern[j];
  return out;
}

/// Quotient Q in 0 -> sub -> total -> Q -> 0, with c(Q) = c(total) / c(sub)
/// expanded as a power series and truncated at rank(total) - rank(sub).
template <class C>
FormalBundle<C> whitney_quotient(const FormalBundle<C>& total, const FormalBundle<C>& sub) {
  if (sub.rank > total.rank) throw PreconditionError("whitney_quotient: subbundle rank exceeds total rank");
  const int rank = total.rank - sub.rank;
  FormalBundle<C> out = trivial_bundle(total.one(), rank);
  for (int k = 1; k <= rank; ++k) {
    C ck = total.c(k);
    for (int j = 1; j <= std::min(k, sub.rank); ++j) ck = ck - sub.chern[j] * out.chern[k - j];
    out.chern[k] = std::move(ck);
  }
  return out;
}

/// The c_rank class.
template <class C>
C top_chern(const FormalBundle<C>& b) {
  return b.chern[b.rank];
}

/// Universal Chern classes of Sym^d of a rank-2 bundle as polynomials in
/// (c1, c2). Entry k is c_k(Sym^d E), for k = 0..d+1.
///
/// The roots i*a + (d-i)*b pair up as i <-> d-i; each pair contributes the
/// quadratic factor 1 + d*c1 + (i(d-i) c1^2 + (d-2i)^2 c2), and the middle
/// root (d even) contributes 1 + (d/2) c1.
std::vector<MultiPoly> sym_power_chern_polys(int d);

/// The same polynomials via the splitting principle: expand
/// prod_i (1 + i*a + (d-i)*b) in (a, b) and rewrite each graded piece in the
/// elementary symmetric functions. Independent check of sym_power_chern_polys.
std::vector<MultiPoly> sym_power_chern_polys_by_roots(int d);

/// Sym^d of a rank-2 bundle. Throws PreconditionError for other ranks or d < 1.
template <class C>
FormalBundle<C> sym_power_rank2(const FormalBundle<C>& b, int d) {
  if (b.rank != 2) throw PreconditionError("sym_power_rank2 needs a rank-2 bundle (general plethysm is not supported)");
  if (d < 1) throw PreconditionError("sym_power_rank2 needs d >= 1");
  const std::vector<MultiPoly> polys = sym_power_chern_polys(d);
  const std::vector<C> gens{b.chern[1], b.chern[2]};
  FormalBundle<C> out = trivial_bundle(b.one(), d + 1);
  for (int k = 1; k <= d + 1; ++k) out.chern[k] = evaluate_in<C>(polys[k], gens, b.one());
  return out;
}

/// Dual of the tautological subbundle on G(2, N): rank 2, c = 1 + s1 + s11.
/// Throws PreconditionError when m != 2.
FormalBundle<CohClass> tautological_sub_dual(const GrassCtx& ctx);

/// E_d = Sym^d S* on the Grassmannian of lines.
FormalBundle<CohClass> sym_power_bundle(const GrassCtx& ctx, int d);

}  // namespace oscul
