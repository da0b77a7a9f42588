#pragma once

#include <map>
#include <vector>

#include "tamegraph/countable_matrix.hpp"
#include "tamegraph/numeric.hpp"

namespace tamegraph {

// Exact number of admissible words i = w_0, ..., w_n = j (paths of length n).
// Computed backward from column j through predecessor lists, so only the
// finitely many arcs that reach j in at most n steps are ever touched.
BigInt power_entry(const CountableMatrix& m, ArcId i, ArcId j, int n);

// Column DP state after n backward steps: arc -> number of length-n paths
// into j.  Deterministic iteration order (std::map).
std::vector<std::map<ArcId, BigInt>> power_column(const CountableMatrix& m, ArcId j, int n);

// Diagonal sequence m_jj(0..n).
std::vector<BigInt> diagonal_counts(const CountableMatrix& m, ArcId j, int n);

// First-return counts f(1..n): paths j -> j of length k whose interior never
// hits j.  Index 0 of the result is unused (always 0).
std::vector<BigInt> first_return_counts(const CountableMatrix& m, ArcId j, int n);

// True when the first-return state space has emptied by step n, i.e. the
// series sum_k f(k) z^k is exactly the computed polynomial.
struct FirstReturnCounts {
  std::vector<BigInt> counts;  // counts[k] = f(k), counts[0] = 0
  bool exhausted = false;
};

FirstReturnCounts first_return_counts_status(const CountableMatrix& m, ArcId j, int n);

}  // namespace tamegraph
