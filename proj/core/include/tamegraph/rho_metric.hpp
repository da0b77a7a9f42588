#pragma once

#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tamegraph/slope_model.hpp"

namespace tamegraph {

// Certified bracket for the arc-length distance.  On finite systems (and on
// rule families whose unexplored part hangs off at most one boundary vertex,
// where a detour can never shorten a path) the bracket collapses and exact
// is set.
template <typename S>
struct RhoResult {
  S lower{};
  S upper{};
  bool exact = true;
};

namespace detail {

// Dijkstra over the truncation's vertex graph with arc lengths as weights.
// merge maps each vertex to its representative (boundary contraction).
template <typename S>
std::map<VertexId, S> rho_sssp(const ConstantSlopeModel<S>& model,
                               const std::map<VertexId, VertexId>& merge, VertexId source,
                               const S& source_offset) {
  auto rep = [&](VertexId v) {
    auto it = merge.find(v);
    return it == merge.end() ? v : it->second;
  };
  std::map<VertexId, std::vector<std::pair<VertexId, S>>> adj;
  for (ArcId a : model.arcs) {
    ArcEnds e = model.sys->endpoints(a);
    VertexId u = rep(e.from), w = rep(e.to);
    S len = model.length(a);
    adj[u].emplace_back(w, len);
    adj[w].emplace_back(u, len);
  }
  std::map<VertexId, S> dist;
  using Item = std::pair<S, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  VertexId s = rep(source);
  dist.emplace(s, source_offset);
  heap.emplace(source_offset, s);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    auto du = dist.find(u);
    if (du != dist.end() && du->second < d) continue;
    for (const auto& [w, len] : adj[u]) {
      S nd = d + len;
      auto it = dist.find(w);
      if (it == dist.end() || nd < it->second) {
        dist.insert_or_assign(w, nd);
        heap.emplace(nd, w);
      }
    }
  }
  return dist;
}

template <typename S>
S rho_best(const ConstantSlopeModel<S>& model, const std::map<VertexId, VertexId>& merge,
           const PointCoord<S>& x, const PointCoord<S>& y) {
  auto rep = [&](VertexId v) {
    auto it = merge.find(v);
    return it == merge.end() ? v : it->second;
  };
  ArcEnds ex = model.sys->endpoints(x.arc);
  ArcEnds ey = model.sys->endpoints(y.arc);
  S len_x = model.length(x.arc), len_y = model.length(y.arc);

  bool have = false;
  S best{};
  auto offer = [&](const S& cand) {
    if (!have || cand < best) best = cand;
    have = true;
  };
  if (x.arc == y.arc)
    offer(x.offset < y.offset ? S(y.offset - x.offset) : S(x.offset - y.offset));

  auto from_x = rho_sssp(model, merge, ex.from, x.offset);
  auto to_x = rho_sssp(model, merge, ex.to, S(len_x - x.offset));
  auto tail = [&](const std::map<VertexId, S>& dist, VertexId q, const S& extra) {
    auto it = dist.find(rep(q));
    if (it != dist.end()) offer(S(it->second + extra));
  };
  tail(from_x, ey.from, y.offset);
  tail(from_x, ey.to, S(len_y - y.offset));
  tail(to_x, ey.from, y.offset);
  tail(to_x, ey.to, S(len_y - y.offset));
  if (!have) throw std::invalid_argument("points are not connected on this truncation");
  return best;
}

}  // namespace detail

// Distance as the minimal total arc length over connecting paths.  The
// truncation path is an upper bound for the full object; contracting all
// boundary vertices to one point underestimates every excursion through the
// unexplored part, giving the certified lower bound.
template <typename S>
RhoResult<S> rho_distance(const ConstantSlopeModel<S>& model, const PointCoord<S>& x,
                          const PointCoord<S>& y, int boundary_depth = 0) {
  if (!model.sys) throw std::invalid_argument("model has no system");
  RhoResult<S> res;
  res.upper = detail::rho_best(model, {}, x, y);
  std::vector<VertexId> boundary =
      model.sys->finite() ? std::vector<VertexId>{} : model.sys->boundary_vertices(boundary_depth);
  if (boundary.size() <= 1) {
    res.lower = res.upper;
    res.exact = true;
    return res;
  }
  std::map<VertexId, VertexId> merge;
  for (VertexId b : boundary) merge[b] = boundary.front();
  res.lower = detail::rho_best(model, merge, x, y);
  res.exact = !(res.lower < res.upper);
  return res;
}

}  // namespace tamegraph
