#include "tamegraph/power_counts.hpp"

#include <stdexcept>

namespace tamegraph {

std::vector<std::map<ArcId, BigInt>> power_column(const CountableMatrix& m, ArcId j, int n) {
  if (n < 0) throw std::invalid_argument("power length must be non-negative");
  std::vector<std::map<ArcId, BigInt>> levels(static_cast<std::size_t>(n) + 1);
  levels[0][j] = 1;
  for (int k = 1; k <= n; ++k) {
    const auto& prev = levels[static_cast<std::size_t>(k - 1)];
    auto& cur = levels[static_cast<std::size_t>(k)];
    for (const auto& [arc, cnt] : prev) {
      for (ArcId p : m.predecessors(arc)) {
        cur[p] += cnt;
      }
    }
  }
  return levels;
}

BigInt power_entry(const CountableMatrix& m, ArcId i, ArcId j, int n) {
  auto levels = power_column(m, j, n);
  auto it = levels.back().find(i);
  return it == levels.back().end() ? BigInt(0) : it->second;
}

std::vector<BigInt> diagonal_counts(const CountableMatrix& m, ArcId j, int n) {
  auto levels = power_column(m, j, n);
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    auto it = levels[static_cast<std::size_t>(k)].find(j);
    out[static_cast<std::size_t>(k)] = it == levels[static_cast<std::size_t>(k)].end() ? BigInt(0) : it->second;
  }
  return out;
}

FirstReturnCounts first_return_counts_status(const CountableMatrix& m, ArcId j, int n) {
  if (n < 0) throw std::invalid_argument("first-return horizon must be non-negative");
  FirstReturnCounts out;
  out.counts.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
  // state[a] = number of paths a -> j of the current length whose interior
  // avoids j; extending backward through predecessors keeps that property as
  // long as j itself only ever appears as the path head.
  std::map<ArcId, BigInt> state;
  state[j] = 1;
  for (int k = 1; k <= n; ++k) {
    std::map<ArcId, BigInt> next;
    for (const auto& [arc, cnt] : state) {
      for (ArcId p : m.predecessors(arc)) {
        next[p] += cnt;
      }
    }
    auto it = next.find(j);
    if (it != next.end()) {
      out.counts[static_cast<std::size_t>(k)] = it->second;
      next.erase(it);
    }
    state.swap(next);
    if (state.empty()) {
      out.exhausted = true;
      break;
    }
  }
  return out;
}

std::vector<BigInt> first_return_counts(const CountableMatrix& m, ArcId j, int n) {
  return first_return_counts_status(m, j, n).counts;
}

}  // namespace tamegraph
