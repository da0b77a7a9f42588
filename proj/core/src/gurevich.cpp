#include "tamegraph/gurevich.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tamegraph/truncation.hpp"

namespace tamegraph {

std::string to_string(EntropyStatus s) {
  switch (s) {
    case EntropyStatus::saturated: return "saturated";
    case EntropyStatus::converged: return "converged";
    default: return "budget-exhausted";
  }
}

EntropyEstimate gurevich_entropy(const CountableMatrix& m, ArcId base, int max_depth,
                                 double tol, const SpectralOptions& opt) {
  if (max_depth < 1) throw std::invalid_argument("entropy depth budget must be at least 1");

  EntropyEstimate out;
  TruncationSweep sweep(m, base, max_depth);
  double best_r = 0.0;
  double prev_event_value = -std::numeric_limits<double>::infinity();
  bool renewal_seen = false, cw_seen = false, irreducible = false;

  for (int t = 1; t <= max_depth; ++t) {
    const auto& added = sweep.step();
    bool stagnant = added.empty() && sweep.saturated();
    if (!stagnant || out.rows.empty()) {
      bool event = sweep.cycle_possible_since_last_check();
      if (event) {
        SpectralBounds b = spectral_radius_local(sweep.rows(), opt);
        ++out.events;
        irreducible = b.irreducible;
        if (b.lower > best_r) best_r = b.lower;
        if (b.method == "first-return-root" || b.method == "mixed") renewal_seen = true;
        if (b.method == "collatz-wielandt" || b.method == "mixed") cw_seen = true;
      }
      double value = best_r > 0.0 ? std::log(best_r) : -std::numeric_limits<double>::infinity();
      out.rows.push_back({t, sweep.admitted().size(), value, event, irreducible});
      if (!stagnant && event && tol > 0.0 && std::isfinite(value) &&
          std::isfinite(prev_event_value) && std::abs(value - prev_event_value) < tol) {
        out.status = EntropyStatus::converged;
        break;
      }
      if (event) prev_event_value = value;
    }
    if (stagnant) {
      out.status = EntropyStatus::saturated;
      break;
    }
  }
  out.value = out.rows.empty() ? -std::numeric_limits<double>::infinity() : out.rows.back().value;
  if (renewal_seen && cw_seen)
    out.method = "mixed";
  else if (renewal_seen)
    out.method = "first-return-root";
  else if (cw_seen)
    out.method = "collatz-wielandt";
  else
    out.method = "none";
  return out;
}

}  // namespace tamegraph
