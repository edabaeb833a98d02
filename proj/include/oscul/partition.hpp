#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace oscul {

/// Weakly decreasing sequence of positive integers indexing a Schubert
/// class. Trailing zeros are stripped on construction, so two partitions
/// compare equal exactly when their Young diagrams coincide.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  /// Part i, or 0 past the end.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  bool fits(int rows, int cols) const;
  bool contains(const Partition& other) const;

  std::string str() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

/// Reversed complement of p inside a rows x cols box. Throws ShapeOverflow
/// when p does not fit.
Partition box_complement(const Partition& p, int rows, int cols);

/// Every partition inside the rows x cols box, optionally of fixed weight
/// (weight < 0 means all weights). Ordered by weight, then lexicographically.
std::vector<Partition> partitions_in_box(int rows, int cols, int weight = -1);

/// Every partition of the given weight (no box constraint).
std::vector<Partition> partitions_of(int weight);

}  // namespace oscul
