#include "tamegraph/lipschitz.hpp"

#include <cmath>
#include <stdexcept>

#include "tamegraph/numeric.hpp"

namespace tamegraph {

LipschitzReport lipschitz_report(double max_slope, double entropy_value, double epsilon) {
  if (!(max_slope > 1.0)) throw std::invalid_argument("max slope must exceed 1");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be non-negative");
  LipschitzReport rep;
  rep.lip = max_slope;
  rep.entropy = entropy_value;
  rep.epsilon = epsilon;
  rep.product = rep.hausdorff_dim * std::log(max_slope);
  rep.gap = rep.product - entropy_value;
  if (rep.gap < -1e-12)
    throw std::domain_error("slope log " + format_double(rep.product) +
                            " is below the certified entropy bound " +
                            format_double(entropy_value));
  if (rep.gap > epsilon + 1e-12)
    throw std::domain_error("slope log " + format_double(rep.product) + " overshoots entropy + " +
                            format_double(epsilon));
  rep.within_epsilon = rep.gap <= epsilon;
  return rep;
}

}  // namespace tamegraph
