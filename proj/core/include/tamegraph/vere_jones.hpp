#pragma once

#include <string>

#include "tamegraph/countable_matrix.hpp"
#include "tamegraph/series.hpp"

namespace tamegraph {

enum class VjClass { recurrent, transient, inconclusive };

// Certified bracket for the first-return series F(1/lambda) at arc j and the
// classification it supports.  F <= 1 whenever lambda is at least the
// spectral radius; F = 1 means recurrent, F < 1 transient.  When the bracket
// straddles 1 with width above tol, or the tail cannot be certified, the
// result is inconclusive rather than guessed.
struct VereJonesReport {
  double lambda = 0.0;
  int horizon = 0;
  double f_lower = 0.0;
  double f_upper = 0.0;
  TailBound tail;
  VjClass classification = VjClass::inconclusive;
  std::string detail;
};

VereJonesReport vere_jones_classify(const CountableMatrix& m, ArcId j, double lambda,
                                    int horizon, double tol = 1e-9);

std::string to_string(VjClass c);

}  // namespace tamegraph
