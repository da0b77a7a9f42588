#pragma once

#include <vector>

#include "tamegraph/power_counts.hpp"
#include "tamegraph/refinement.hpp"

namespace tamegraph {

// Loop counts through a base arc: s_n subarcs of j mapping across j under
// the n-th iterate, so (1/n) log s_n certifies an entropy lower bound.
struct HorseshoeSequence {
  ArcId base = -1;
  std::vector<BigInt> counts;  // counts[k] = s_k = m_jj(k), counts[0] = 1
  std::vector<double> bounds;  // bounds[k] = log(s_k)/k; -inf marks no loop
};

HorseshoeSequence horseshoe_sequence(const CountableMatrix& m, ArcId j, int n);

// Largest (1/k) log s_k over k <= each n: the monotone certified envelope.
std::vector<double> horseshoe_envelope(const HorseshoeSequence& seq);

// The s_n witness words [j, i_1, ..., i_{n-1}, j] themselves, depth-first in
// row order, pruned by reach-back counts so dead branches never start.
RefinementResult horseshoe_witness(const CountableMatrix& m, ArcId j, int n,
                                   std::size_t budget = 1u << 20);

struct PeriodicGrowthRow {
  int n = 0;
  BigInt trace;        // sum of diagonal power entries over the truncation
  double bound = 0.0;  // log(trace)/n; -inf when the trace vanishes
};

// Trace lower bounds on periodic-point counts over a finite truncation.
std::vector<PeriodicGrowthRow> periodic_growth_report(const CountableMatrix& m,
                                                      const std::vector<ArcId>& arcs, int n_max);

}  // namespace tamegraph
