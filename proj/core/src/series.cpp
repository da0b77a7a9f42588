#include "tamegraph/series.hpp"

#include <algorithm>

namespace tamegraph {

TailBound tail_bound_from_logs(const std::vector<std::pair<int, double>>& log_terms,
                               bool exhausted, int horizon) {
  TailBound out;
  if (exhausted) {
    out.exact_zero = true;
    out.certified = true;
    return out;
  }
  if (log_terms.size() < 3) return out;

  // Trailing window: the last third of the non-zero terms, at least three.
  std::size_t window = std::max<std::size_t>(3, log_terms.size() / 3);
  std::size_t begin = log_terms.size() - window;
  double max_q = 0.0, min_q = std::numeric_limits<double>::infinity();
  for (std::size_t k = begin + 1; k < log_terms.size(); ++k) {
    const auto& [na, la] = log_terms[k - 1];
    const auto& [nb, lb] = log_terms[k];
    double q = std::exp((lb - la) / static_cast<double>(nb - na));
    max_q = std::max(max_q, q);
    min_q = std::min(min_q, q);
  }
  out.max_step_ratio = max_q;
  if (min_q > 1.0) {
    out.diverging = true;
    return out;
  }
  // Safety margin below 1; the geometric bound explodes as max_q -> 1 and
  // an empirical ratio that close to 1 is no evidence of decay.
  if (max_q >= 0.995) return out;
  double last = std::exp(log_terms.back().second);
  out.bound = last * max_q / (1.0 - max_q);
  out.certified = true;
  (void)horizon;
  return out;
}

}  // namespace tamegraph
