#include "tamegraph/rho_metric.hpp"

namespace tamegraph {

// The shortest-path machinery is templated on the scalar; the two supported
// backends are compiled here once.
template RhoResult<double> rho_distance<double>(const ConstantSlopeModel<double>&,
                                                const PointCoord<double>&,
                                                const PointCoord<double>&, int);
template RhoResult<Rational> rho_distance<Rational>(const ConstantSlopeModel<Rational>&,
                                                    const PointCoord<Rational>&,
                                                    const PointCoord<Rational>&, int);

}  // namespace tamegraph
