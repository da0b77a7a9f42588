#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamegraph/truncation.hpp"

namespace tamegraph {

// Certified bracket for the spectral radius of a finite 0/1 matrix.
// lower is always a true lower bound (Collatz-Wielandt min ratio or a
// first-return root bracket); certified reports whether upper - lower met
// the requested tolerance before the iteration budget ran out.
struct SpectralBounds {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool irreducible = false;
  bool certified = true;
  std::int64_t iterations = 0;
  std::string method = "trivial";
};

struct SpectralOptions {
  double tol = 1e-10;
  std::int64_t max_iterations = 500000;
  // Below this size every strongly connected block uses plain power
  // iteration; larger blocks try the single-gate first-return root first.
  std::size_t gate_threshold = 48;
};

// Strongly connected components of a local adjacency list, each component
// sorted, components in topological order of the condensation.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& rows);

// Spectral radius of the whole matrix: max over strongly connected blocks.
// Zero matrix gives 0.  irreducible is set when the matrix is one strongly
// connected block (with at least one edge).
SpectralBounds spectral_radius(const FiniteMatrix& a, const SpectralOptions& opt = {});

// Same computation on a raw adjacency list.
SpectralBounds spectral_radius_local(const std::vector<std::vector<int>>& rows,
                                     const SpectralOptions& opt = {});

struct PerronPair {
  double lambda = 0.0;
  std::vector<double> vec;  // positive, sums to 1, indexed like a.index
  double residual = 0.0;
  std::int64_t iterations = 0;
};

// Perron eigenpair of an irreducible matrix.  Throws std::domain_error when
// the matrix is reducible or the root is not strictly above 1.
PerronPair perron_vector(const FiniteMatrix& a, double tol = 1e-13);

}  // namespace tamegraph
