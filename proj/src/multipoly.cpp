#include "oscul/multipoly.hpp"

#include <numeric>
#include <sstream>

#include "oscul/errors.hpp"

namespace oscul {

MultiPoly MultiPoly::constant(int num_vars, const BigInt& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int num_vars, int index) {
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  return monomial(std::move(e));
}

MultiPoly MultiPoly::monomial(Exponents exps, const BigInt& c) {
  MultiPoly p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

BigInt MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

MultiPoly MultiPoly::homogeneous_part(int k) const {
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == k) out.terms_.emplace(e, c);
  return out;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != num_vars_)
    throw ContextMismatch("exponent vector length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.num_vars_ != num_vars_) throw ContextMismatch("polynomials over different variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.num_vars_);
  MultiPoly::Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int v = 0; v < a.num_vars_; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw PreconditionError("negative polynomial power");
  MultiPoly result = constant(num_vars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

BigInt MultiPoly::evaluate(std::span<const BigInt> point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw ContextMismatch("evaluation point has the wrong dimension");
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (int v = 0; v < num_vars_; ++v) term *= boost::multiprecision::pow(point[v], e[v]);
    total += term;
  }
  return total;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const BigInt mag = abs(c);
    bool any = false;
    for (int v = 0; v < num_vars_; ++v)
      if (e[v]) any = true;
    if (mag != 1 || !any) os << mag;
    for (int v = 0; v < num_vars_; ++v) {
      if (!e[v]) continue;
      os << "x" << v;
      if (e[v] > 1) os << '^' << e[v];
    }
  }
  return os.str();
}

namespace {

// Enumerates semistandard fillings cell by cell in row-major order.
void ssyt(const Partition& lam, int m, std::vector<std::vector<int>>& grid, int r, int c,
          MultiPoly::Exponents& content, MultiPoly& out) {
  if (r == lam.length()) {
    out.add_term(content, 1);
    return;
  }
  const int next_r = c + 1 < lam[r] ? r : r + 1;
  const int next_c = c + 1 < lam[r] ? c + 1 : 0;
  int lo = 1;
  if (c > 0) lo = std::max(lo, grid[r][c - 1]);
  if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
  for (int v = lo; v <= m; ++v) {
    grid[r][c] = v;
    ++content[v - 1];
    ssyt(lam, m, grid, next_r, next_c, content, out);
    --content[v - 1];
  }
}

}  // namespace

MultiPoly schur_polynomial(const Partition& lam, int m) {
  MultiPoly out(m);
  if (lam.length() > m) return out;
  std::vector<std::vector<int>> grid(lam.length());
  for (int r = 0; r < lam.length(); ++r) grid[r].assign(lam[r], 0);
  MultiPoly::Exponents content(m, 0);
  ssyt(lam, m, grid, 0, 0, content, out);
  return out;
}

MultiPoly symmetric_to_elementary2(const MultiPoly& p) {
  if (p.num_vars() != 2) throw PreconditionError("expected a polynomial in two variables");
  const MultiPoly e1 = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
  const MultiPoly e2 = MultiPoly::monomial({1, 1});
  MultiPoly rest = p;
  MultiPoly out(2);
  while (!rest.is_zero()) {
    // Largest exponent of a comes last in the ordered map.
    const auto& [lead, coeff] = *rest.terms().rbegin();
    const int i = lead[0];
    const int j = lead[1];
    if (i < j) throw PreconditionError("polynomial is not symmetric in (a, b)");
    const BigInt c = coeff;
    out.add_term({i - j, j}, c);
    rest -= e1.pow(i - j) * e2.pow(j) * c;
  }
  return out;
}

}  // namespace oscul
