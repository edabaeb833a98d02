#include "oscul/incidence.hpp"

#include "oscul/errors.hpp"

namespace oscul {

IncidenceCtx::IncidenceCtx(int n_) : n(n_) {
  if (n < 2) throw PreconditionError("incidence variety needs n >= 2, got " + std::to_string(n));
}

IncidenceClass::IncidenceClass(IncidenceCtx ctx)
    : ctx_(ctx), a_(CohClass::zero(ctx.grass())), b_(CohClass::zero(ctx.grass())) {}

IncidenceClass::IncidenceClass(IncidenceCtx ctx, CohClass a, CohClass b)
    : ctx_(ctx), a_(std::move(a)), b_(std::move(b)) {
  if (!(a_.ctx() == ctx.grass()) || !(b_.ctx() == ctx.grass()))
    throw ContextMismatch("incidence class components must live on " + ctx.grass().str());
}

IncidenceClass IncidenceClass::one(IncidenceCtx ctx) {
  return IncidenceClass(ctx, CohClass::one(ctx.grass()), CohClass::zero(ctx.grass()));
}

IncidenceClass IncidenceClass::H(IncidenceCtx ctx) {
  return IncidenceClass(ctx, CohClass::zero(ctx.grass()), CohClass::one(ctx.grass()));
}

IncidenceClass IncidenceClass::L(IncidenceCtx ctx) { return pullback(ctx, sigma1(ctx.grass())); }

IncidenceClass IncidenceClass::pullback(IncidenceCtx ctx, const CohClass& a) {
  return IncidenceClass(ctx, a, CohClass::zero(ctx.grass()));
}

void IncidenceClass::check(const IncidenceClass& o) const {
  if (!(o.ctx_ == ctx_))
    throw ContextMismatch("incidence classes for n=" + std::to_string(ctx_.n) + " and n=" + std::to_string(o.ctx_.n));
}

IncidenceClass& IncidenceClass::operator+=(const IncidenceClass& o) {
  check(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

IncidenceClass& IncidenceClass::operator-=(const IncidenceClass& o) {
  check(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

IncidenceClass& IncidenceClass::operator*=(const BigInt& c) {
  a_ *= c;
  b_ *= c;
  return *this;
}

IncidenceClass operator*(const IncidenceClass& x, const IncidenceClass& y) { return inc_mul(x, y); }

IncidenceClass inc_mul(const IncidenceClass& u, const IncidenceClass& v) {
  if (!(u.ctx() == v.ctx()))
    throw ContextMismatch("incidence classes for n=" + std::to_string(u.ctx().n) + " and n=" +
                          std::to_string(v.ctx().n));
  const GrassCtx g = u.ctx().grass();
  // (A1 + B1 H)(A2 + B2 H) with H^2 = s1 H - s11.
  const CohClass bb = u.b() * v.b();
  CohClass a = u.a() * v.a() - bb * CohClass::schubert(g, {1, 1});
  CohClass b = u.a() * v.b() + u.b() * v.a() + bb * sigma1(g);
  return IncidenceClass(u.ctx(), std::move(a), std::move(b));
}

IncidenceClass inc_pow(const IncidenceClass& u, int k) {
  if (k < 0) throw PreconditionError("negative power of an incidence class");
  IncidenceClass r = IncidenceClass::one(u.ctx());
  for (int i = 0; i < k; ++i) r = r * u;
  return r;
}

BigInt inc_integrate(const IncidenceClass& u) { return integrate(u.b()); }

std::pair<BigInt, BigInt> IncidenceClass::divisor_coefficients() const {
  const BigInt h = b_.coefficient({});
  const BigInt l = a_.coefficient({1});
  if (!(*this == IncidenceClass::H(ctx_) * h + IncidenceClass::L(ctx_) * l))
    throw PreconditionError("class " + str() + " is not a divisor class hH + lL");
  return {h, l};
}

std::string IncidenceClass::str() const {
  if (is_zero()) return "0";
  if (b_.is_zero()) return a_.str();
  const std::string bpart = "(" + b_.str() + ")*H";
  if (a_.is_zero()) return bpart;
  return a_.str() + " + " + bpart;
}

IncidenceClass canonical_P(const IncidenceCtx& ctx) {
  return IncidenceClass::H(ctx) * BigInt(-2) - IncidenceClass::L(ctx) * BigInt(ctx.n);
}

IncidenceClass canonical_P_relative(const IncidenceCtx& ctx) {
  const GrassCtx g = ctx.grass();
  const FormalBundle<CohClass> sub_dual = tautological_sub_dual(g);
  const FormalBundle<CohClass> sub = dual_bundle(sub_dual);
  const FormalBundle<CohClass> quotient = whitney_quotient(trivial_bundle(CohClass::one(g), ctx.n + 1), sub);
  // c_1(A (x) B) = rank(B) c_1(A) + rank(A) c_1(B).
  const CohClass c1_tangent_g = sub_dual.c(1) * BigInt(quotient.rank) + quotient.c(1) * BigInt(sub_dual.rank);
  const IncidenceClass c1_relative = IncidenceClass::pullback(ctx, sub.c(1)) + IncidenceClass::H(ctx) * BigInt(2);
  return -IncidenceClass::pullback(ctx, c1_tangent_g) - c1_relative;
}

namespace {

void check_degree(int d) {
  if (d < 1) throw RangeError("degree d must be >= 1, got " + std::to_string(d));
}

IncidenceClass filtration_piece(const IncidenceCtx& ctx, int d, int j) {
  return IncidenceClass::H(ctx) * BigInt(d - 2 * j) + IncidenceClass::L(ctx) * BigInt(j);
}

}  // namespace

FormalBundle<IncidenceClass> vanishing_subbundle(const IncidenceCtx& ctx, int d, int r) {
  check_degree(d);
  if (r < 0 || r > d + 1) throw RangeError("vanishing order must lie in 0..d+1");
  std::vector<IncidenceClass> roots;
  for (int j = r; j <= d; ++j) roots.push_back(filtration_piece(ctx, d, j));
  return split_bundle<IncidenceClass>(IncidenceClass::one(ctx), roots);
}

FormalBundle<IncidenceClass> contact_bundle(const IncidenceCtx& ctx, int d, int r) {
  check_degree(d);
  if (r < 0 || r > d + 1) throw RangeError("contact order must lie in 0..d+1");
  const FormalBundle<CohClass> e = sym_power_bundle(ctx.grass(), d);
  FormalBundle<IncidenceClass> pulled = trivial_bundle(IncidenceClass::one(ctx), e.rank);
  for (int i = 1; i <= e.rank; ++i) pulled.chern[i] = IncidenceClass::pullback(ctx, e.chern[i]);
  return whitney_quotient(pulled, vanishing_subbundle(ctx, d, r));
}

FormalBundle<IncidenceClass> bundle_Fd(const IncidenceCtx& ctx, int d) { return contact_bundle(ctx, d, d); }

IncidenceClass det_Fd(const IncidenceCtx& ctx, int d) {
  return IncidenceClass::L(ctx) * BigInt(d * (d - 1) / 2) + IncidenceClass::H(ctx) * BigInt(d);
}

CanonicalReport canonical_osculating(const IncidenceCtx& ctx, int d) {
  check_degree(d);
  IncidenceClass k = canonical_P(ctx) + bundle_Fd(ctx, d).c(1);
  auto [h, l] = k.divisor_coefficients();
  const bool very_ample = h >= 1 && l >= 1;
  return CanonicalReport{std::move(k), h, l, very_ample};
}

int default_contact_order(const IncidenceCtx& ctx, int d) { return std::min(d, 2 * ctx.n - 1); }

OsculatingClass osculating_class(const IncidenceCtx& ctx, int d, int r) {
  check_degree(d);
  if (r < 1 || r > d)
    throw RangeError("contact order r=" + std::to_string(r) + " must satisfy 1 <= r <= d=" + std::to_string(d));
  if (r > ctx.dim())
    throw RangeError("contact order r=" + std::to_string(r) + " exceeds dim P = " + std::to_string(ctx.dim()) +
                     "; the locus is empty for generic F");
  return OsculatingClass{top_chern(contact_bundle(ctx, d, r)), ctx.dim() - r, r};
}

OsculatingClass osculating_class(const IncidenceCtx& ctx, int d) {
  check_degree(d);
  return osculating_class(ctx, d, default_contact_order(ctx, d));
}

BigInt osculating_degree(const IncidenceCtx& ctx, int d, int r) {
  const OsculatingClass oc = osculating_class(ctx, d, r);
  return inc_integrate(oc.cls * inc_pow(IncidenceClass::H(ctx), oc.dim));
}

BigInt osculating_degree(const IncidenceCtx& ctx, int d) {
  check_degree(d);
  return osculating_degree(ctx, d, default_contact_order(ctx, d));
}

}  // namespace oscul
