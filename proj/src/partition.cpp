#include "oscul/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "oscul/errors.hpp"

namespace oscul {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw PreconditionError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw PreconditionError("partition parts must be weakly decreasing: " + str());
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits(int rows, int cols) const {
  return length() <= rows && (empty() || parts_.front() <= cols);
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> out(p.parts().front(), 0);
  for (int part : p.parts())
    for (int c = 0; c < part; ++c) ++out[c];
  return Partition(std::move(out));
}

Partition box_complement(const Partition& p, int rows, int cols) {
  if (!p.fits(rows, cols))
    throw ShapeOverflow("partition " + p.str() + " does not fit a " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " box");
  std::vector<int> out(rows);
  for (int i = 0; i < rows; ++i) out[i] = cols - p[rows - 1 - i];
  return Partition(std::move(out));
}

namespace {

void extend(std::vector<int>& cur, int rows_left, int max_part, int remaining,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int part = std::min(max_part, remaining); part >= 1; --part) {
    cur.push_back(part);
    extend(cur, rows_left - 1, part, remaining - part, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols, int weight) {
  std::vector<Partition> out;
  const int lo = weight < 0 ? 0 : weight;
  const int hi = weight < 0 ? rows * cols : weight;
  for (int w = lo; w <= hi; ++w) {
    std::vector<Partition> level;
    std::vector<int> cur;
    extend(cur, rows, cols, w, level);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> partitions_of(int weight) { return partitions_in_box(weight, weight, weight); }

}  // namespace oscul
