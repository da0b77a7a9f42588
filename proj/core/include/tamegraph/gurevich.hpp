#pragma once

#include <string>
#include <vector>

#include "tamegraph/countable_matrix.hpp"
#include "tamegraph/spectral.hpp"

namespace tamegraph {

enum class EntropyStatus { saturated, converged, budget_exhausted };

struct EntropyRow {
  int depth = 0;
  std::size_t arcs = 0;
  double value = 0.0;  // log of the best certified lower bound so far
  bool event = false;  // a spectral recomputation happened at this depth
  bool irreducible = false;
};

// Entropy as the supremum over nested finite truncations of log spectral
// radius.  value is always a certified lower bound for the full matrix
// (principal submatrices only lose mass) and the per-depth sequence is
// non-decreasing by construction.
//
// tol = 0 disables early stopping.  With tol > 0 the sweep stops when two
// consecutive recomputation events move the bound by less than tol; on rule
// families whose truncations grow in bursts this detects a plateau, not
// convergence to the supremum, so the status never upgrades the value's
// meaning: it stays a lower bound.
struct EntropyEstimate {
  double value = 0.0;
  EntropyStatus status = EntropyStatus::budget_exhausted;
  std::vector<EntropyRow> rows;
  std::int64_t events = 0;
  std::string method;
};

EntropyEstimate gurevich_entropy(const CountableMatrix& m, ArcId base, int max_depth,
                                 double tol = 0.0, const SpectralOptions& opt = {});

std::string to_string(EntropyStatus s);

}  // namespace tamegraph
