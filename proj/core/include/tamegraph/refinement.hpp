#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamegraph/countable_matrix.hpp"
#include "tamegraph/truncation.hpp"

namespace tamegraph {

// Admissible letter sequence: consecutive arcs chained by the transition
// matrix.  A word of length n+1 names one arc of the n-fold refined
// partition.
struct CylinderWord {
  std::vector<ArcId> word;

  bool operator==(const CylinderWord& other) const { return word == other.word; }
};

struct RefinementResult {
  std::vector<CylinderWord> words;
  bool truncated = false;  // budget ran out; words is a prefix of the full list
};

bool is_admissible(const CountableMatrix& m, const std::vector<ArcId>& word);

// All admissible words of length n+1 with every letter inside the
// truncation, depth-first: start arcs in index order, extensions in the row
// order of the matrix (image-path order for map systems).
RefinementResult refinement(const FiniteMatrix& m, int n, std::size_t budget = 1u << 20);

struct MixingCertificate {
  bool irreducible = false;
  // gcd of cycle lengths over the truncation; 0 when the graph is acyclic.
  int period = 0;
  bool aperiodic = false;
  // Smallest n <= horizon with every entry of M^n positive, else -1.
  int leo_witness = -1;
  // Empty when both certificates landed.  A truncation of an infinite object
  // only ever gives truncation evidence; that caveat is the caller's.
  std::string note;
};

MixingCertificate mixing_check(const FiniteMatrix& m, int horizon);

}  // namespace tamegraph
