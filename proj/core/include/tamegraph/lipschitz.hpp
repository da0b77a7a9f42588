#pragma once

#include <string>

#include "tamegraph/gurevich.hpp"

namespace tamegraph {

// Entropy-vs-smoothness certificate: with the length metric of a countably
// affine model the Hausdorff dimension is 1, so the dimension-times-Lipschitz
// upper bound on entropy reads log(max slope).  The report records how far
// that bound sits above the certified entropy value.
struct LipschitzReport {
  double hausdorff_dim = 1.0;
  double lip = 0.0;      // max slope of the model
  double product = 0.0;  // hausdorff_dim * log(lip)
  double entropy = 0.0;  // certified lower bound used for the gap
  double epsilon = 0.0;
  double gap = 0.0;  // product - entropy, in [0, epsilon] when admissible
  bool within_epsilon = false;
};

// Throws std::domain_error when the slope sits below the certified entropy
// bound (no such model can exist) or overshoots entropy + epsilon (the
// construction aimed tighter than it built).
LipschitzReport lipschitz_report(double max_slope, double entropy_value, double epsilon);

}  // namespace tamegraph
