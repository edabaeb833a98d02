#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "oscul/bigint.hpp"
#include "oscul/partition.hpp"

namespace oscul {

/// Sparse polynomial with BigInt coefficients over a fixed number of
/// variables. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int num_vars = 0) : num_vars_(num_vars) {}

  static MultiPoly constant(int num_vars, const BigInt& c);
  static MultiPoly variable(int num_vars, int index);
  static MultiPoly monomial(Exponents exps, const BigInt& c = 1);

  int num_vars() const { return num_vars_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Exponents& e) const;
  /// Total degree of the leading term; -1 for the zero polynomial.
  int degree() const;
  /// Sum of the terms of total degree k.
  MultiPoly homogeneous_part(int k) const;

  void add_term(const Exponents& e, const BigInt& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const BigInt& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= BigInt(-1); }
  friend MultiPoly operator*(MultiPoly a, const BigInt& c) { return a *= c; }
  friend MultiPoly operator*(const BigInt& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly&) const = default;

  MultiPoly pow(int k) const;
  BigInt evaluate(std::span<const BigInt> point) const;
  std::string str() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  int num_vars_;
  std::map<Exponents, BigInt> terms_;
};

/// Schur polynomial s_lam(x_1..x_m), built as the generating function of
/// semistandard Young tableaux with entries <= m.
MultiPoly schur_polynomial(const Partition& lam, int m);

/// Rewrites a symmetric polynomial in two variables (a, b) as a polynomial
/// in the elementary symmetric functions (e1 = a + b, e2 = ab). Throws
/// PreconditionError if the input is not symmetric.
MultiPoly symmetric_to_elementary2(const MultiPoly& p);

/// Evaluates a polynomial at ring elements, using `one` as the unit.
/// The element type needs +, *, and BigInt scaling.
template <class C>
C evaluate_in(const MultiPoly& p, std::span<const C> values, const C& one) {
  C result = one * BigInt(0);
  for (const auto& [exps, coeff] : p.terms()) {
    C term = one * coeff;
    for (std::size_t v = 0; v < exps.size(); ++v)
      for (int e = 0; e < exps[v]; ++e) term = term * values[v];
    result = result + term;
  }
  return result;
}

}  // namespace oscul
