#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tamegraph/countable_matrix.hpp"

namespace tamegraph {

// Principal finite submatrix on an explicit arc subset.  index holds global
// arc ids in admission order; rows hold local positions.
struct FiniteMatrix {
  std::vector<ArcId> index;
  std::unordered_map<ArcId, int> pos;
  std::vector<std::vector<int>> rows;

  std::size_t size() const { return index.size(); }
  std::size_t nnz() const;
  bool contains(ArcId a) const { return pos.count(a) != 0; }
  int local(ArcId a) const;
};

FiniteMatrix submatrix(const CountableMatrix& m, const std::vector<ArcId>& subset);

// Monotone truncation schedule: S_0 = {base}, and
//   S_t = S_{t-1} together with every successor of S_{t-1} the enumeration
//         prefix admits at depth t.
// A successor blocked by the prefix stays pending and enters as soon as the
// prefix reaches it, so S_t is nested and exhausts the reachable set.
class TruncationSweep {
 public:
  // horizon caps the enumeration depth used when proposing successors, so
  // rule families never materialize arcs the sweep cannot admit anyway.
  TruncationSweep(const CountableMatrix& m, ArcId base, int horizon = kNoHorizon);

  static constexpr int kNoHorizon = 1 << 30;

  // Advances to the next depth.  Returns the arcs admitted this step.
  const std::vector<ArcId>& step();

  int depth() const { return depth_; }
  // No frontier and nothing pending: further steps cannot grow the set.
  bool saturated() const { return last_added_.empty() && pending_.empty(); }
  const std::vector<ArcId>& admitted() const { return order_; }
  bool contains(ArcId a) const { return local_.count(a) != 0; }
  // Local adjacency among admitted arcs, indexed in admission order.
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  // True when the last step registered an edge into a previously admitted
  // arc, the only way a new cycle can appear.
  bool cycle_possible_since_last_check();
  FiniteMatrix snapshot() const;

 private:
  void admit(ArcId a);

  const CountableMatrix& m_;
  int horizon_;
  int depth_ = 0;
  std::vector<ArcId> order_;
  std::unordered_map<ArcId, int> local_;
  std::vector<std::vector<int>> rows_;
  std::vector<ArcId> frontier_;
  std::vector<ArcId> pending_;
  std::vector<ArcId> last_added_;
  bool cycle_flag_ = true;
};

// One-shot truncation: the sweep run to the given depth.
FiniteMatrix truncation(const CountableMatrix& m, ArcId base, int depth);

}  // namespace tamegraph
