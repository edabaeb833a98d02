#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oscul/bigint.hpp"
#include "oscul/errors.hpp"

namespace oscul {

/// Integers modulo the prime 10007.
class Fp {
 public:
  static constexpr std::uint32_t modulus = 10007;

  Fp() = default;
  Fp(std::int64_t v) : v_(static_cast<std::uint32_t>(((v % modulus) + modulus) % modulus)) {}

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return raw((a.v_ + b.v_) % modulus); }
  friend Fp operator-(Fp a, Fp b) { return raw((a.v_ + modulus - b.v_) % modulus); }
  friend Fp operator-(Fp a) { return raw((modulus - a.v_) % modulus); }
  friend Fp operator*(Fp a, Fp b) {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % modulus));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  bool operator==(const Fp&) const = default;

  Fp inverse() const {
    if (v_ == 0) throw PreconditionError("division by zero in F_p");
    Fp result = raw(1), base = *this;
    for (std::uint32_t e = modulus - 2; e; e >>= 1) {
      if (e & 1) result *= base;
      base *= base;
    }
    return result;
  }

 private:
  static Fp raw(std::uint32_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint32_t v_ = 0;
};

/// Scalar field selector for the verification lab.
enum class FieldKind { Prime, Rational };

inline std::string to_string(FieldKind f) { return f == FieldKind::Prime ? "prime-10007" : "rational"; }

template <class F>
inline bool is_zero(const F& x) {
  if constexpr (std::is_same_v<F, Fp>) return x.is_zero();
  else return x == 0;
}

/// Dense row-major matrix.
template <class F>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<F>& row) {
    if (row.size() != cols_) throw PreconditionError("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }
  std::vector<F> row(std::size_t r) const {
    return std::vector<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<F> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const F inv = F(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const F f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Basis of {v : m v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> m) {
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank of a list of equal-length vectors.
template <class F>
std::size_t rank_of_vectors(const std::vector<std::vector<F>>& vs, std::size_t dim) {
  Matrix<F> m(0, dim);
  for (const auto& v : vs) m.append_row(v);
  return rank(std::move(m));
}

}  // namespace oscul
