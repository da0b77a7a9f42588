#include "tamegraph/countable_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamegraph {

bool CountableMatrix::entry(ArcId i, ArcId j) const {
  auto row = successors(i);
  return std::find(row.begin(), row.end(), j) != row.end();
}

std::vector<ArcId> CountableMatrix::successors_within(ArcId i, int depth_cap) const {
  auto row = successors(i);
  std::vector<ArcId> out;
  out.reserve(row.size());
  for (ArcId s : row)
    if (in_prefix(s, depth_cap)) out.push_back(s);
  return out;
}

std::vector<ArcId> CountableMatrix::prefix_at(int depth) const {
  std::vector<ArcId> out;
  for (int d = 0; d <= depth; ++d) {
    auto added = prefix_added(d);
    out.insert(out.end(), added.begin(), added.end());
  }
  return out;
}

ExplicitMatrix::ExplicitMatrix(std::shared_ptr<Interner> arcs, std::vector<std::vector<ArcId>> rows)
    : CountableMatrix(std::move(arcs)), rows_(std::move(rows)) {
  if (rows_.size() != arcs_->size())
    throw std::invalid_argument("row count does not match arc table");
  cols_.resize(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (ArcId j : rows_[i]) {
      if (j < 0 || static_cast<std::size_t>(j) >= rows_.size())
        throw std::invalid_argument("successor id out of range");
      cols_[static_cast<std::size_t>(j)].push_back(static_cast<ArcId>(i));
    }
  }
}

std::unique_ptr<ExplicitMatrix> ExplicitMatrix::from_dense(
    const std::vector<std::vector<int>>& dense, std::vector<std::string> labels) {
  auto arcs = std::make_shared<Interner>();
  std::size_t n = dense.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = i < labels.size() ? labels[i] : std::to_string(i);
    arcs->intern(label);
  }
  std::vector<std::vector<ArcId>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dense[i].size() != n) throw std::invalid_argument("dense matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (dense[i][j] != 0 && dense[i][j] != 1)
        throw std::invalid_argument("transition entries must be 0 or 1");
      if (dense[i][j] == 1) rows[i].push_back(static_cast<ArcId>(j));
    }
  }
  return std::make_unique<ExplicitMatrix>(std::move(arcs), std::move(rows));
}

std::vector<ArcId> ExplicitMatrix::successors(ArcId i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= rows_.size())
    throw std::invalid_argument("arc id out of range: " + std::to_string(i));
  return rows_[static_cast<std::size_t>(i)];
}

std::vector<ArcId> ExplicitMatrix::predecessors(ArcId j) const {
  if (j < 0 || static_cast<std::size_t>(j) >= cols_.size())
    throw std::invalid_argument("arc id out of range: " + std::to_string(j));
  return cols_[static_cast<std::size_t>(j)];
}

bool ExplicitMatrix::in_prefix(ArcId a, int) const {
  return a >= 0 && static_cast<std::size_t>(a) < rows_.size();
}

std::vector<ArcId> ExplicitMatrix::prefix_added(int depth) const {
  std::vector<ArcId> out;
  if (depth == 0) {
    out.resize(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = static_cast<ArcId>(i);
  }
  return out;
}

}  // namespace tamegraph
