#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamegraph/countable_matrix.hpp"
#include "tamegraph/gurevich.hpp"
#include "tamegraph/numeric.hpp"
#include "tamegraph/series.hpp"
#include "tamegraph/spectral.hpp"

namespace tamegraph {

// Positive vector v with M v <= lambda v.  Rows listed in deficiency are the
// ones where strict inequality is expected; everywhere else the intended
// relation is equality.  entry is total on the arcs a given analysis needs
// and throws for arcs it does not cover.
template <typename S>
struct SubEigenvector {
  S lambda{};
  std::function<S(ArcId)> entry;
  std::vector<ArcId> deficiency;
  std::optional<S> total;  // sum over the full arc set, when it is finite
  std::string origin;
};

template <typename S>
SubEigenvector<S> subeigenvector_from_map(S lambda, std::map<ArcId, S> entries,
                                          std::vector<ArcId> deficiency, std::optional<S> total,
                                          std::string origin) {
  auto store = std::make_shared<std::map<ArcId, S>>(std::move(entries));
  SubEigenvector<S> v;
  v.lambda = std::move(lambda);
  v.entry = [store](ArcId a) -> S {
    auto it = store->find(a);
    if (it == store->end())
      throw std::invalid_argument("eigenvector has no entry for arc id " + std::to_string(a));
    return it->second;
  };
  v.deficiency = std::move(deficiency);
  v.total = std::move(total);
  v.origin = std::move(origin);
  return v;
}

// Row ratio (M v)_i / v_i: the slope the row forces on arc i.
template <typename S>
S row_ratio(const CountableMatrix& m, const SubEigenvector<S>& v, ArcId i) {
  S num{};
  for (ArcId j : m.successors(i)) num += v.entry(j);
  return num / v.entry(i);
}

template <typename S>
struct EigenCheckRow {
  ArcId arc;
  S lhs;  // (M v)_i
  S rhs;  // lambda v_i
  std::string relation;  // "equal" | "strict" | "violation"
};

template <typename S>
struct EigenCheckReport {
  bool ok = true;          // no row exceeds lambda v
  bool equality = true;    // every non-deficiency row is an exact equality
  double max_violation = 0.0;
  std::vector<EigenCheckRow<S>> rows;
};

// Verifies M v <= lambda v row by row.  In rational mode comparisons are
// exact and tol is ignored.
template <typename S>
EigenCheckReport<S> check_subeigenvector(const CountableMatrix& m, const SubEigenvector<S>& v,
                                         const std::vector<ArcId>& arcs, double tol = 1e-9) {
  EigenCheckReport<S> rep;
  for (ArcId i : arcs) {
    EigenCheckRow<S> row;
    row.arc = i;
    row.lhs = S{};
    for (ArcId j : m.successors(i)) row.lhs += v.entry(j);
    row.rhs = v.lambda * v.entry(i);
    bool deficient = std::find(v.deficiency.begin(), v.deficiency.end(), i) != v.deficiency.end();
    double gap = scalar_traits<S>::to_double(row.lhs) - scalar_traits<S>::to_double(row.rhs);
    bool equal, above;
    if constexpr (scalar_traits<S>::exact) {
      equal = row.lhs == row.rhs;
      above = row.lhs > row.rhs;
    } else {
      double scale = std::max(1.0, std::abs(scalar_traits<S>::to_double(row.rhs)));
      equal = std::abs(gap) <= tol * scale;
      above = gap > tol * scale;
    }
    if (above) {
      row.relation = "violation";
      rep.ok = false;
      rep.max_violation = std::max(rep.max_violation, gap);
    } else if (equal) {
      row.relation = "equal";
    } else {
      row.relation = "strict";
      if (!deficient) rep.equality = false;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

template <typename S>
struct VjResult {
  SubEigenvector<S> v;
  std::vector<ArcId> support;  // arcs with computed entries, enumeration order
  int horizon = 0;
  bool tail_certified = true;
  bool tail_exact = false;
  double max_tail_ratio = 0.0;
};

namespace detail {

// Solves (lambda I - M) v = lambda e_j over the scalar field: the closed
// form of the full generating series, so no horizon error at all.  A
// negative entry certifies lambda below the spectral radius (the Neumann
// series of a nonnegative matrix cannot produce one).
template <typename S>
std::vector<S> resolvent_column(const FiniteMatrix& a, const S& lambda, int j) {
  std::size_t n = a.size();
  std::vector<std::vector<S>> aug(n, std::vector<S>(n + 1, S{}));
  for (std::size_t i = 0; i < n; ++i) {
    for (int k : a.rows[i]) aug[i][static_cast<std::size_t>(k)] -= scalar_traits<S>::from_int(1);
    aug[i][i] += lambda;
  }
  aug[static_cast<std::size_t>(j)][n] = lambda;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == S{}) ++piv;
    if (piv == n)
      throw std::domain_error("resolvent is singular: lambda is an eigenvalue of the truncation");
    std::swap(aug[col], aug[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == S{}) continue;
      S f = S(aug[r][col] / aug[col][col]);
      for (std::size_t c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  std::vector<S> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = S(aug[i][n] / aug[i][i]);
  return v;
}

}  // namespace detail

// v_i = sum_{n <= horizon} m_ij(n) lambda^{-n}: the partial generating
// function column at z = 1/lambda.  Solves M v = lambda v on every row except
// j, where the slack is exactly lambda.  Requires lambda strictly above a
// certified entropy lower bound of the matrix; the series then converges and
// the truncation error is controlled by the tail certificate.
template <typename S>
VjResult<S> vj_subeigenvector(const CountableMatrix& m, const S& lambda, ArcId j, int horizon,
                              int depth) {
  double lam = scalar_traits<S>::to_double(lambda);
  if (lam <= 1.0) throw std::domain_error("lambda must be above 1");

  int probe_depth = m.finite() ? 64 : std::max(4, std::min(depth, 12));
  EntropyEstimate lb = gurevich_entropy(m, j, probe_depth, 0.0);
  if (std::isfinite(lb.value) && lam <= std::exp(lb.value) * (1.0 + 1e-12))
    throw std::domain_error("lambda " + format_double(lam) +
                            " is not above the certified entropy lower bound " +
                            format_double(std::exp(lb.value)));

  // A horizon-truncated series exceeds lambda v on every row that still
  // reaches j at level horizon + 1, so it can never pass an exact check.
  // Finite matrices get the closed form instead; countable ones have none.
  if constexpr (scalar_traits<S>::exact) {
    if (!m.finite())
      throw std::domain_error(
          "exact series mode needs a finite matrix: a horizon truncation is not an exact "
          "subeigenvector");
    FiniteMatrix a = submatrix(m, m.prefix_at(0));
    std::vector<S> col = detail::resolvent_column<S>(a, lambda, a.local(j));
    std::map<ArcId, S> entries;
    S total{};
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (col[k] < S{})
        throw std::domain_error("lambda is below the spectral radius: series value turns negative");
      total += col[k];
      entries.emplace(a.index[k], std::move(col[k]));
    }
    VjResult<S> res;
    res.support = a.index;
    res.horizon = horizon;
    res.tail_certified = true;
    res.tail_exact = true;
    res.v = subeigenvector_from_map<S>(lambda, std::move(entries), {j}, std::move(total),
                                       "resolvent");
    return res;
  }

  std::vector<ArcId> support = m.prefix_at(depth);
  if (std::find(support.begin(), support.end(), j) == support.end()) support.push_back(j);
  {
    std::vector<char> seen;
    auto mark = [&](ArcId a) {
      if (static_cast<std::size_t>(a) >= seen.size()) seen.resize(static_cast<std::size_t>(a) + 1, 0);
      return std::exchange(seen[static_cast<std::size_t>(a)], 1);
    };
    for (ArcId a : support) mark(a);
    std::vector<ArcId> closure = support;
    for (ArcId a : support)
      for (ArcId s : m.successors(a))
        if (!mark(s)) closure.push_back(s);
    support = std::move(closure);
  }

  auto levels = power_column(m, j, horizon);
  S z = scalar_traits<S>::from_int(1) / lambda;
  double logz = -std::log(lam);

  VjResult<S> res;
  res.horizon = horizon;
  res.tail_exact = true;
  std::map<ArcId, S> entries;
  for (ArcId i : support) {
    S acc{};
    S zpow = scalar_traits<S>::from_int(1);
    std::vector<std::pair<int, double>> log_terms;
    bool exhausted = false;
    for (int n = 0; n <= horizon; ++n) {
      const auto& level = levels[static_cast<std::size_t>(n)];
      if (level.empty()) {
        exhausted = true;
        break;
      }
      auto it = level.find(i);
      if (it != level.end()) {
        acc += scalar_traits<S>::from_bigint(it->second) * zpow;
        log_terms.emplace_back(n, log_bigint(it->second) + n * logz);
      }
      zpow *= z;
    }
    TailBound tb = tail_bound_from_logs(log_terms, exhausted, horizon);
    if (tb.diverging)
      throw std::domain_error("generating series diverges at arc " + m.arcs().label(i) +
                              ": lambda is below the spectral radius");
    if (!tb.certified) res.tail_certified = false;
    if (!tb.exact_zero) res.tail_exact = false;
    res.max_tail_ratio = std::max(res.max_tail_ratio, tb.max_step_ratio);
    // Zero entries stay: an arc that never reaches j has series value 0.
    entries.emplace(i, std::move(acc));
  }
  if (entries.at(j) == S{})
    throw std::domain_error("target arc has no return mass at this horizon");

  res.support = std::move(support);
  res.v = subeigenvector_from_map<S>(lambda, std::move(entries), {j}, std::nullopt,
                                     "first-return-series");
  return res;
}

// Perron eigenpair of a finite irreducible matrix as a SubEigenvector with
// empty deficiency and unit total.
inline SubEigenvector<double> perron_subeigenvector(const FiniteMatrix& a, double tol = 1e-13) {
  PerronPair p = perron_vector(a, tol);
  std::map<ArcId, double> entries;
  for (std::size_t k = 0; k < a.index.size(); ++k) entries.emplace(a.index[k], p.vec[k]);
  return subeigenvector_from_map<double>(p.lambda, std::move(entries), {}, 1.0, "perron");
}

}  // namespace tamegraph
