#include "oscul/chern.hpp"

namespace oscul {

std::vector<MultiPoly> sym_power_chern_polys(int d) {
  if (d < 1) throw PreconditionError("sym_power_chern_polys needs d >= 1");
  // Variables: x0 = c1, x1 = c2. Track the graded total class as a single
  // polynomial; c1 has degree 1 and c2 degree 2.
  const MultiPoly one = MultiPoly::constant(2, 1);
  const MultiPoly c1 = MultiPoly::variable(2, 0);
  const MultiPoly c2 = MultiPoly::variable(2, 1);
  MultiPoly total = one;
  for (int i = 0; 2 * i < d; ++i) {
    const BigInt pair_prod_c1sq = BigInt(i) * (d - i);
    const BigInt pair_prod_c2 = BigInt(d - 2 * i) * (d - 2 * i);
    total = total * (one + c1 * BigInt(d) + c1 * c1 * pair_prod_c1sq + c2 * pair_prod_c2);
  }
  if (d % 2 == 0) total = total * (one + c1 * BigInt(d / 2));

  std::vector<MultiPoly> out(d + 2, MultiPoly(2));
  for (const auto& [e, c] : total.terms()) {
    const int weighted = e[0] + 2 * e[1];
    out.at(weighted).add_term(e, c);
  }
  return out;
}

std::vector<MultiPoly> sym_power_chern_polys_by_roots(int d) {
  if (d < 1) throw PreconditionError("sym_power_chern_polys_by_roots needs d >= 1");
  const MultiPoly a = MultiPoly::variable(2, 0);
  const MultiPoly b = MultiPoly::variable(2, 1);
  MultiPoly total = MultiPoly::constant(2, 1);
  for (int i = 0; i <= d; ++i) total = total * (MultiPoly::constant(2, 1) + a * BigInt(i) + b * BigInt(d - i));
  std::vector<MultiPoly> out;
  for (int k = 0; k <= d + 1; ++k) out.push_back(symmetric_to_elementary2(total.homogeneous_part(k)));
  return out;
}

FormalBundle<CohClass> tautological_sub_dual(const GrassCtx& ctx) {
  if (ctx.m != 2) throw PreconditionError("tautological_sub_dual is implemented for rank-2 subbundles only, got " + ctx.str());
  FormalBundle<CohClass> b = trivial_bundle(CohClass::one(ctx), 2);
  if (ctx.cols() >= 1) b.chern[1] = CohClass::schubert(ctx, {1});
  b.chern[2] = CohClass::schubert(ctx, {1, 1});
  return b;
}

FormalBundle<CohClass> sym_power_bundle(const GrassCtx& ctx, int d) {
  return sym_power_rank2(tautological_sub_dual(ctx), d);
}

}  // namespace oscul
