#include "tamegraph/vere_jones.hpp"

#include <cmath>
#include <stdexcept>

#include "tamegraph/power_counts.hpp"

namespace tamegraph {

std::string to_string(VjClass c) {
  switch (c) {
    case VjClass::recurrent: return "recurrent";
    case VjClass::transient: return "transient";
    default: return "inconclusive";
  }
}

VereJonesReport vere_jones_classify(const CountableMatrix& m, ArcId j, double lambda,
                                    int horizon, double tol) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");

  VereJonesReport out;
  out.lambda = lambda;
  out.horizon = horizon;

  auto fr = first_return_counts_status(m, j, horizon);
  double loglam = std::log(lambda);
  double sum = 0.0;
  std::vector<std::pair<int, double>> log_terms;
  for (int k = 1; k <= horizon; ++k) {
    const BigInt& f = fr.counts[static_cast<std::size_t>(k)];
    if (f == 0) continue;
    double lt = log_bigint(f) - static_cast<double>(k) * loglam;
    if (lt > 700.0) {
      out.detail = "first-return terms overflow at this lambda";
      return out;
    }
    log_terms.emplace_back(k, lt);
    sum += std::exp(lt);
  }
  out.tail = tail_bound_from_logs(log_terms, fr.exhausted, horizon);

  // Floating point slack on the partial sum itself.
  double fp_slack = sum * 1e-12 + 1e-300;
  out.f_lower = sum - fp_slack;
  out.f_upper = sum + fp_slack + out.tail.bound;

  if (out.tail.diverging) {
    out.detail = "first-return series diverging: lambda is below the spectral radius";
    return out;
  }
  if (!out.tail.certified) {
    out.detail = "tail not certified by the ratio window";
    return out;
  }
  if (out.f_upper < 1.0 - tol) {
    out.classification = VjClass::transient;
    out.detail = fr.exhausted ? "series is a polynomial; total return mass below 1"
                              : "certified bracket stays below 1";
    return out;
  }
  if (out.f_lower > 1.0 + tol) {
    out.detail = "series exceeds 1: lambda is below the spectral radius";
    return out;
  }
  if (out.f_upper - out.f_lower <= tol) {
    out.classification = VjClass::recurrent;
    out.detail = fr.exhausted ? "series is a polynomial summing to 1"
                              : "certified bracket pins the series to 1";
    return out;
  }
  out.detail = "bracket straddles 1 but is wider than tol";
  return out;
}

}  // namespace tamegraph
