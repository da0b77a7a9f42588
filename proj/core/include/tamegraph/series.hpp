#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "tamegraph/countable_matrix.hpp"
#include "tamegraph/numeric.hpp"
#include "tamegraph/power_counts.hpp"

namespace tamegraph {

// Empirical geometric tail bound for a series with non-negative terms given
// as logs (dropped zero terms carry no entry).  The per-step ratio between
// consecutive non-zero terms is measured over a trailing window; if every
// ratio stays below a safety threshold the tail is bounded by a geometric
// series from the last term.  This is a heuristic certificate: it assumes
// the observed decay persists, and refuses to certify otherwise.
struct TailBound {
  bool exact_zero = false;   // series terminated: tail is exactly 0
  bool certified = false;
  bool diverging = false;    // terms grow over the window
  double bound = 0.0;        // upper bound for the dropped tail
  double max_step_ratio = 0.0;
};

TailBound tail_bound_from_logs(const std::vector<std::pair<int, double>>& log_terms,
                               bool exhausted, int horizon);

template <typename S>
struct SeriesValue {
  S value{};             // partial sum through the horizon
  int horizon = 0;
  int nonzero_terms = 0;
  TailBound tail;
};

// Partial sum of the generating function M_ij(z) = sum_n m_ij(n) z^n.
// z must be positive; exact in rational mode.
template <typename S>
SeriesValue<S> generating_fn(const CountableMatrix& m, ArcId i, ArcId j, const S& z,
                             int horizon) {
  if (horizon < 0) throw std::invalid_argument("series horizon must be non-negative");
  if (!(z > S(0))) throw std::invalid_argument("series argument must be positive");
  auto levels = power_column(m, j, horizon);
  SeriesValue<S> out;
  out.horizon = horizon;
  S zpow = scalar_traits<S>::from_int(1);
  std::vector<std::pair<int, double>> log_terms;
  bool exhausted = false;
  double logz = std::log(scalar_traits<S>::to_double(z));
  for (int n = 0; n <= horizon; ++n) {
    const auto& level = levels[static_cast<std::size_t>(n)];
    if (level.empty()) {
      exhausted = true;
      break;
    }
    auto it = level.find(i);
    if (it != level.end() && it->second != 0) {
      out.value += scalar_traits<S>::from_bigint(it->second) * zpow;
      ++out.nonzero_terms;
      log_terms.emplace_back(n, log_bigint(it->second) + static_cast<double>(n) * logz);
    }
    zpow *= z;
  }
  out.tail = tail_bound_from_logs(log_terms, exhausted, horizon);
  return out;
}

}  // namespace tamegraph
