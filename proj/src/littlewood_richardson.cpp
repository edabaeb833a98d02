#include "oscul/littlewood_richardson.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace oscul {

namespace {

struct Cell {
  int row;
  int col;
};

class TableauCounter {
 public:
  TableauCounter(const Partition& lam, const Partition& mu, const Partition& nu)
      : lam_(lam), mu_(mu), nu_(nu), used_(mu.length() + 1, 0) {
    // Reading order: rows top to bottom, each row right to left.
    for (int r = 0; r < nu.length(); ++r)
      for (int c = nu[r] - 1; c >= lam[r]; --c) cells_.push_back({r, c});
    grid_.resize(nu.length());
    for (int r = 0; r < nu.length(); ++r) grid_[r].assign(nu[r], 0);
  }

  BigInt count() { return fill(0); }

 private:
  BigInt fill(std::size_t k) {
    if (k == cells_.size()) return 1;
    const auto [r, c] = cells_[k];
    int hi = mu_.length();
    // Row weakly increasing: the cell to the right was filled first.
    if (c + 1 < nu_[r]) hi = std::min(hi, grid_[r][c + 1]);
    int lo = 1;
    // Column strictly increasing below a skew cell.
    if (r > 0 && c >= lam_[r - 1]) lo = grid_[r - 1][c] + 1;
    BigInt total = 0;
    for (int v = lo; v <= hi; ++v) {
      if (used_[v] >= mu_[v - 1]) continue;
      if (v > 1 && used_[v] + 1 > used_[v - 1]) continue;
      ++used_[v];
      grid_[r][c] = v;
      total += fill(k + 1);
      grid_[r][c] = 0;
      --used_[v];
    }
    return total;
  }

  const Partition& lam_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> used_;
};

using Key = std::tuple<Partition, Partition, Partition>;

std::shared_mutex cache_mutex;
std::map<Key, BigInt>& cache() {
  static std::map<Key, BigInt> table;
  return table;
}

}  // namespace

BigInt lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.weight() + mu.weight() != nu.weight()) return 0;
  if (!nu.contains(lam) || !nu.contains(mu)) return 0;
  if (mu.empty()) return 1;
  if (lam.empty()) return 1;

  Key key{lam, mu, nu};
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  BigInt value = TableauCounter(lam, mu, nu).count();
  std::unique_lock lock(cache_mutex);
  return cache().try_emplace(std::move(key), value).first->second;
}

}  // namespace oscul
