#include "qcat/sparse_rank.hpp"

#include <numeric>
#include <unordered_map>

namespace qcat {

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

// row -= factor * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Scalar& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Scalar v = row[i].second - factor * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t block_rank(std::vector<SparseRow>& rows) {
  std::unordered_map<std::uint32_t, SparseRow> pivots;
  for (auto& row : rows) {
    SparseRow cur = std::move(row);
    while (!cur.empty()) {
      auto it = pivots.find(cur.front().first);
      if (it == pivots.end()) break;
      Scalar factor = cur.front().second;
      cur = axpy(cur, factor, it->second);
    }
    if (cur.empty()) continue;
    Scalar inv = 1 / cur.front().second;
    for (auto& [c, v] : cur) v *= inv;
    std::uint32_t lead = cur.front().first;
    pivots.emplace(lead, std::move(cur));
  }
  return pivots.size();
}

}  // namespace

std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t cols) {
  DisjointSets sets(cols);
  for (const auto& row : rows)
    for (std::size_t k = 1; k < row.size(); ++k) sets.unite(row[0].first, row[k].first);

  std::unordered_map<std::uint32_t, std::vector<SparseRow>> blocks;
  for (auto& row : rows) {
    if (row.empty()) continue;
    auto root = sets.find(row[0].first);
    blocks[root].push_back(std::move(row));
  }

  std::size_t total = 0;
  for (auto& [root, block] : blocks) total += block_rank(block);
  return total;
}

}  // namespace qcat
