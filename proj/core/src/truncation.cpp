#include "tamegraph/truncation.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamegraph {

std::size_t FiniteMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& row : rows) total += row.size();
  return total;
}

int FiniteMatrix::local(ArcId a) const {
  auto it = pos.find(a);
  if (it == pos.end()) throw std::invalid_argument("arc not in submatrix");
  return it->second;
}

FiniteMatrix submatrix(const CountableMatrix& m, const std::vector<ArcId>& subset) {
  FiniteMatrix out;
  out.index = subset;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (!out.pos.emplace(subset[k], static_cast<int>(k)).second)
      throw std::invalid_argument("duplicate arc in submatrix subset");
  }
  out.rows.resize(subset.size());
  for (std::size_t k = 0; k < subset.size(); ++k) {
    for (ArcId s : m.successors(subset[k])) {
      auto it = out.pos.find(s);
      if (it != out.pos.end()) out.rows[k].push_back(it->second);
    }
  }
  return out;
}

TruncationSweep::TruncationSweep(const CountableMatrix& m, ArcId base, int horizon)
    : m_(m), horizon_(horizon) {
  if (horizon_ < 0) throw std::invalid_argument("sweep horizon must be non-negative");
  admit(base);
  frontier_ = {base};
  last_added_ = {base};
}

void TruncationSweep::admit(ArcId a) {
  int id = static_cast<int>(order_.size());
  local_.emplace(a, id);
  order_.push_back(a);
  rows_.emplace_back();
  // Register every edge between a and the already admitted set.  An edge
  // whose target precedes its source in admission order is the only way a
  // new cycle can close; that sets the recheck flag.
  for (ArcId p : m_.predecessors(a)) {
    auto it = local_.find(p);
    if (it == local_.end()) continue;
    rows_[static_cast<std::size_t>(it->second)].push_back(id);
    if (id <= it->second) cycle_flag_ = true;
  }
  for (ArcId s : m_.successors_within(a, horizon_)) {
    if (s == a) continue;  // self-loop already added via predecessors
    auto it = local_.find(s);
    if (it == local_.end()) continue;
    rows_[static_cast<std::size_t>(id)].push_back(it->second);
    if (it->second <= id) cycle_flag_ = true;
  }
}

const std::vector<ArcId>& TruncationSweep::step() {
  ++depth_;
  std::vector<ArcId> candidates;
  candidates.swap(pending_);
  for (ArcId f : last_added_) {
    for (ArcId s : m_.successors_within(f, horizon_)) candidates.push_back(s);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  last_added_.clear();
  for (ArcId c : candidates) {
    if (local_.count(c)) continue;
    if (m_.in_prefix(c, depth_)) {
      admit(c);
      last_added_.push_back(c);
    } else {
      pending_.push_back(c);
    }
  }
  return last_added_;
}

bool TruncationSweep::cycle_possible_since_last_check() {
  bool f = cycle_flag_;
  cycle_flag_ = false;
  return f;
}

FiniteMatrix TruncationSweep::snapshot() const {
  FiniteMatrix out;
  out.index = order_;
  out.pos = local_;
  out.rows = rows_;
  return out;
}

FiniteMatrix truncation(const CountableMatrix& m, ArcId base, int depth) {
  if (depth < 0) throw std::invalid_argument("truncation depth must be non-negative");
  TruncationSweep sweep(m, base, depth);
  for (int t = 1; t <= depth; ++t) {
    sweep.step();
    if (sweep.saturated()) break;
  }
  return sweep.snapshot();
}

}  // namespace tamegraph
