#include "oscul/schubert.hpp"

#include <sstream>

#include "oscul/errors.hpp"
#include "oscul/littlewood_richardson.hpp"

namespace oscul {

GrassCtx::GrassCtx(int m_, int N_) : m(m_), N(N_) {
  if (m < 1 || m >= N) throw PreconditionError("Grassmannian requires 1 <= m < N, got " + str());
}

Partition GrassCtx::full_box() const { return Partition(std::vector<int>(rows(), cols())); }

std::string GrassCtx::str() const {
  return "G(" + std::to_string(m) + "," + std::to_string(N) + ")";
}

CohClass CohClass::schubert(GrassCtx ctx, const Partition& p, const BigInt& coeff) {
  if (!p.fits(ctx.rows(), ctx.cols()))
    throw ShapeOverflow("partition " + p.str() + " does not fit the box of " + ctx.str());
  CohClass c(ctx);
  c.add_term(p, coeff);
  return c;
}

BigInt CohClass::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? BigInt(0) : it->second;
}

CohClass CohClass::degree_part(int k) const {
  CohClass out(ctx_);
  for (const auto& [p, c] : terms_)
    if (p.weight() == k) out.terms_.emplace(p, c);
  return out;
}

bool CohClass::is_homogeneous(int k) const {
  for (const auto& [p, c] : terms_)
    if (p.weight() != k) return false;
  return true;
}

void CohClass::add_term(const Partition& p, const BigInt& c) {
  if (!p.fits(ctx_.rows(), ctx_.cols()))
    throw ShapeOverflow("partition " + p.str() + " does not fit the box of " + ctx_.str());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CohClass& CohClass::operator+=(const CohClass& o) {
  if (!(o.ctx_ == ctx_)) throw ContextMismatch("adding classes of " + ctx_.str() + " and " + o.ctx_.str());
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
  if (!(o.ctx_ == ctx_)) throw ContextMismatch("subtracting classes of " + ctx_.str() + " and " + o.ctx_.str());
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

CohClass& CohClass::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) { return schubert_mul(a, b); }

std::string CohClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const BigInt mag = abs(c);
    if (mag != 1) os << mag << '*';
    os << 's' << p.str();
  }
  return os.str();
}

CohClass schubert_mul(const CohClass& a, const CohClass& b) {
  if (!(a.ctx() == b.ctx()))
    throw ContextMismatch("multiplying classes of " + a.ctx().str() + " and " + b.ctx().str());
  const GrassCtx& ctx = a.ctx();
  CohClass out(ctx);
  for (const auto& [lam, ca] : a.terms())
    for (const auto& [mu, cb] : b.terms()) {
      const int w = lam.weight() + mu.weight();
      if (w > ctx.dim()) continue;
      for (const Partition& nu : partitions_in_box(ctx.rows(), ctx.cols(), w)) {
        if (!nu.contains(lam) || !nu.contains(mu)) continue;
        const BigInt c = lr_coefficient(lam, mu, nu);
        if (c != 0) out.add_term(nu, ca * cb * c);
      }
    }
  return out;
}

BigInt integrate(const CohClass& a) { return a.coefficient(a.ctx().full_box()); }

Partition poincare_dual(const GrassCtx& ctx, const Partition& p) {
  return box_complement(p, ctx.rows(), ctx.cols());
}

}  // namespace oscul
