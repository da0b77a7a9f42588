#include "tamegraph/refinement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tamegraph/spectral.hpp"

namespace tamegraph {

bool is_admissible(const CountableMatrix& m, const std::vector<ArcId>& word) {
  if (word.empty()) return false;
  for (std::size_t k = 0; k + 1 < word.size(); ++k)
    if (!m.entry(word[k], word[k + 1])) return false;
  return true;
}

RefinementResult refinement(const FiniteMatrix& m, int n, std::size_t budget) {
  if (n < 0) throw std::invalid_argument("refinement level must be non-negative");
  RefinementResult out;
  std::vector<int> stack;
  // Iterative DFS; next[k] is the row position to try when the word has k+1
  // letters and is being extended.
  std::vector<std::size_t> next;
  for (std::size_t start = 0; start < m.size() && !out.truncated; ++start) {
    stack.assign(1, static_cast<int>(start));
    next.assign(1, 0);
    while (!stack.empty()) {
      if (stack.size() == static_cast<std::size_t>(n) + 1) {
        if (out.words.size() == budget) {
          out.truncated = true;
          break;
        }
        CylinderWord w;
        w.word.reserve(stack.size());
        for (int local : stack) w.word.push_back(m.index[static_cast<std::size_t>(local)]);
        out.words.push_back(std::move(w));
        stack.pop_back();
        next.pop_back();
        continue;
      }
      const auto& row = m.rows[static_cast<std::size_t>(stack.back())];
      if (next.back() == row.size()) {
        stack.pop_back();
        next.pop_back();
        continue;
      }
      int child = row[next.back()++];
      stack.push_back(child);
      next.push_back(0);
    }
  }
  return out;
}

MixingCertificate mixing_check(const FiniteMatrix& m, int horizon) {
  if (horizon < 1) throw std::invalid_argument("mixing horizon must be at least 1");
  MixingCertificate cert;
  std::size_t n = m.size();
  if (n == 0) {
    cert.note = "empty truncation";
    return cert;
  }
  auto comps = strongly_connected_components(m.rows);
  cert.irreducible = comps.size() == 1;

  // Cycle-length gcd via BFS layering: every edge u -> v contributes
  // |level(u) + 1 - level(v)| inside its component.
  int period = 0;
  std::vector<int> level(n, -1);
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      int u = comp[0];
      const auto& row = m.rows[static_cast<std::size_t>(u)];
      if (std::find(row.begin(), row.end(), u) != row.end()) period = std::gcd(period, 1);
      continue;
    }
    std::vector<char> in_comp(n, 0);
    for (int u : comp) in_comp[static_cast<std::size_t>(u)] = 1;
    std::vector<int> queue = {comp[0]};
    level[static_cast<std::size_t>(comp[0])] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : m.rows[static_cast<std::size_t>(u)]) {
        if (!in_comp[static_cast<std::size_t>(v)]) continue;
        if (level[static_cast<std::size_t>(v)] < 0) {
          level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
        int d = level[static_cast<std::size_t>(u)] + 1 - level[static_cast<std::size_t>(v)];
        period = std::gcd(period, d < 0 ? -d : d);
      }
    }
  }
  cert.period = period;
  cert.aperiodic = period == 1;

  // Boolean power walk: bitset rows, C[i] = OR of B[j] over j in row(i).
  std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> cur(n * words, 0), nxt;
  for (std::size_t i = 0; i < n; ++i) {
    for (int j : m.rows[i]) {
      std::size_t jj = static_cast<std::size_t>(j);
      cur[i * words + jj / 64] |= 1ull << (jj % 64);
    }
  }
  std::uint64_t tail_mask = n % 64 ? (~0ull >> (64 - n % 64)) : ~0ull;
  auto all_positive = [&](const std::vector<std::uint64_t>& b) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t w = 0; w + 1 < words; ++w)
        if (b[i * words + w] != ~0ull) return false;
      if ((b[i * words + words - 1] & tail_mask) != tail_mask) return false;
    }
    return true;
  };
  for (int p = 1; p <= horizon; ++p) {
    if (all_positive(cur)) {
      cert.leo_witness = p;
      break;
    }
    nxt.assign(n * words, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (int j : m.rows[i])
        for (std::size_t w = 0; w < words; ++w)
          nxt[i * words + w] |= cur[static_cast<std::size_t>(j) * words + w];
    cur.swap(nxt);
  }

  if (!cert.irreducible)
    cert.note = "not irreducible";
  else if (cert.leo_witness < 0)
    cert.note = "no all-positive power up to the horizon";
  return cert;
}

}  // namespace tamegraph
