#include "tamegraph/horseshoe.hpp"

#include <cmath>
#include <stdexcept>

namespace tamegraph {

HorseshoeSequence horseshoe_sequence(const CountableMatrix& m, ArcId j, int n) {
  if (n < 1) throw std::invalid_argument("horseshoe order must be at least 1");
  HorseshoeSequence seq;
  seq.base = j;
  seq.counts = diagonal_counts(m, j, n);
  seq.bounds.assign(seq.counts.size(), -HUGE_VAL);
  for (int k = 1; k <= n; ++k) {
    const BigInt& s = seq.counts[static_cast<std::size_t>(k)];
    if (s > 0) seq.bounds[static_cast<std::size_t>(k)] = log_bigint(s) / k;
  }
  return seq;
}

std::vector<double> horseshoe_envelope(const HorseshoeSequence& seq) {
  std::vector<double> env(seq.bounds.size(), -HUGE_VAL);
  double best = -HUGE_VAL;
  for (std::size_t k = 1; k < seq.bounds.size(); ++k) {
    if (seq.bounds[k] > best) best = seq.bounds[k];
    env[k] = best;
  }
  return env;
}

RefinementResult horseshoe_witness(const CountableMatrix& m, ArcId j, int n, std::size_t budget) {
  if (n < 1) throw std::invalid_argument("horseshoe order must be at least 1");
  RefinementResult out;
  // reach[k]: arcs with at least one length-k path into j; walking only
  // inside these levels makes every DFS branch end in a witness.
  auto reach = power_column(m, j, n);
  if (!reach[static_cast<std::size_t>(n)].count(j)) return out;

  std::vector<ArcId> word = {j};
  std::vector<std::size_t> cursor = {0};
  std::vector<std::vector<ArcId>> options = {{}};
  auto viable = [&](ArcId a, int steps_left) {
    return reach[static_cast<std::size_t>(steps_left)].count(a) != 0;
  };
  options[0] = m.successors(j);
  while (!word.empty()) {
    int steps_done = static_cast<int>(word.size()) - 1;
    if (steps_done == n) {
      if (out.words.size() == budget) {
        out.truncated = true;
        return out;
      }
      out.words.push_back({word});
      word.pop_back();
      cursor.pop_back();
      options.pop_back();
      continue;
    }
    auto& opts = options.back();
    bool advanced = false;
    while (cursor.back() < opts.size()) {
      ArcId next = opts[cursor.back()++];
      int left = n - steps_done - 1;
      if (left == 0 ? next == j : viable(next, left)) {
        word.push_back(next);
        cursor.push_back(0);
        options.push_back(left == 0 ? std::vector<ArcId>{} : m.successors(next));
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      word.pop_back();
      cursor.pop_back();
      options.pop_back();
    }
  }
  return out;
}

std::vector<PeriodicGrowthRow> periodic_growth_report(const CountableMatrix& m,
                                                      const std::vector<ArcId>& arcs, int n_max) {
  if (n_max < 1) throw std::invalid_argument("growth horizon must be at least 1");
  std::vector<PeriodicGrowthRow> rows;
  std::vector<std::vector<BigInt>> diags;
  diags.reserve(arcs.size());
  for (ArcId a : arcs) diags.push_back(diagonal_counts(m, a, n_max));
  for (int n = 1; n <= n_max; ++n) {
    PeriodicGrowthRow row;
    row.n = n;
    row.trace = 0;
    for (const auto& d : diags) row.trace += d[static_cast<std::size_t>(n)];
    row.bound = row.trace > 0 ? log_bigint(row.trace) / n : -HUGE_VAL;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tamegraph
