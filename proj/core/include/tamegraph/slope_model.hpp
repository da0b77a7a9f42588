#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tamegraph/delta.hpp"
#include "tamegraph/graph_model.hpp"
#include "tamegraph/subeigenvector.hpp"

namespace tamegraph {

// Arc-local coordinate measured from the arc's endpoint-A, in the same units
// as the model lengths.  offset 0 and offset length(arc) are the endpoints.
template <typename S>
struct PointCoord {
  ArcId arc;
  S offset{};
};

// Piecewise-affine realization: arc i carries length v_i and the map sends
// it across its image path at slope lambda_i = image length / v_i.  With an
// eigenvector every slope equals lambda (constant mode); with a
// subeigenvector deficient rows run slower (bounded mode).
template <typename S>
struct ConstantSlopeModel {
  std::shared_ptr<const MapSystem> sys;
  std::shared_ptr<const CountableMatrix> matrix;
  SubEigenvector<S> v;
  std::vector<ArcId> arcs;  // truncation universe the model was built on
  std::map<ArcId, S> slopes;
  bool constant_slope = true;
  std::vector<std::string> warnings;

  S length(ArcId a) const { return v.entry(a); }
  const S& slope(ArcId a) const {
    auto it = slopes.find(a);
    if (it == slopes.end()) throw std::invalid_argument("arc not in the model truncation");
    return it->second;
  }
};

// Flags a non-vanishing cylinder: if the largest level-n cylinder is still at
// least as long as the shortest arc after `levels` refinements, some nested
// cylinder sequence has length bounded away from zero and the model cannot
// be mixing.  Summable models shrink geometrically and pass well before that.
// On a depth-d truncation of a rule family the probe must not look past
// level d: the witness chain leaves the truncation there and the visible
// maximum decays for the wrong reason.
template <typename S>
std::optional<std::string> limit_cylinder_warning(const CountableMatrix& m,
                                                  const std::vector<ArcId>& arcs,
                                                  const SubEigenvector<S>& v, int levels = 30) {
  if (arcs.empty()) return std::nullopt;
  auto profile = max_delta_profile(m, arcs, v, levels);
  S min_len = v.entry(arcs.front());
  for (ArcId a : arcs) {
    S len = v.entry(a);
    if (len < min_len) min_len = len;
  }
  if (profile.back() >= min_len)
    return "positive-length limit cylinder: max level-" + std::to_string(levels) +
           " cylinder length " + format_scalar(profile.back()) +
           " has not fallen below the shortest arc " + format_scalar(min_len);
  return std::nullopt;
}

template <typename S>
ConstantSlopeModel<S> build_constant_slope_model(std::shared_ptr<const MapSystem> sys,
                                                 SubEigenvector<S> v, int depth = 0,
                                                 int probe_levels = 30, double tol = 1e-9) {
  if (!sys) throw std::invalid_argument("null system");
  ConstantSlopeModel<S> model;
  model.arcs = sys->arcs_at_depth(depth);
  if (model.arcs.empty()) throw std::invalid_argument("empty truncation");

  for (ArcId a : model.arcs)
    if (!(v.entry(a) > S{}))
      throw std::domain_error("eigenvector entry not positive at arc " + sys->arcs().label(a));

  // Summability gate: a constant-slope realization on the whole graph needs
  // a summable eigenvector.  Rule families must either carry a certified
  // total or show stabilizing partial sums across the deeper half prefix.
  if (!sys->finite() && !v.total) {
    if (depth < 4)
      throw std::invalid_argument("depth too shallow to certify summability of the eigenvector");
    auto sum_to = [&](int d) {
      S acc{};
      for (ArcId a : sys->arcs_at_depth(d)) acc += v.entry(a);
      return acc;
    };
    S half = sum_to(depth / 2);
    S full = sum_to(depth);
    if (full - half >= half)
      throw std::domain_error(
          "eigenvector is not summable at this truncation (partial sums still growing); "
          "a constant-slope realization needs the summable-eigenvector hypothesis");
  }

  S lambda = v.lambda;
  bool all_equal = true;
  for (ArcId i : model.arcs) {
    S image_len{};
    for (const Step& st : sys->image_path(i)) {
      S seg = v.entry(st.arc);
      if (!(seg > S{}))
        throw std::domain_error("eigenvector entry not positive at arc " +
                                sys->arcs().label(st.arc));
      image_len += seg;
    }
    S slope = image_len / v.entry(i);
    bool above, equal;
    if constexpr (scalar_traits<S>::exact) {
      above = slope > lambda;
      equal = slope == lambda;
    } else {
      double gap = scalar_traits<S>::to_double(slope) - scalar_traits<S>::to_double(lambda);
      double scale = std::max(1.0, std::abs(scalar_traits<S>::to_double(lambda)));
      above = gap > tol * scale;
      equal = std::abs(gap) <= tol * scale;
    }
    if (above)
      throw std::domain_error("row " + sys->arcs().label(i) +
                              " exceeds lambda: not a subeigenvector");
    if (!equal) all_equal = false;
    model.slopes.emplace(i, std::move(slope));
  }
  model.constant_slope = all_equal && v.deficiency.empty();

  model.sys = sys;
  model.matrix = transition_matrix(sys);
  int window = sys->finite() ? probe_levels : std::min(probe_levels, std::max(1, depth));
  if (auto warn = limit_cylinder_warning(*model.matrix, model.arcs, v, window))
    model.warnings.push_back(*warn);
  model.v = std::move(v);
  return model;
}

// Image of an arc-local point: position lambda_i * t along the image path,
// resolved into the arc the walk is crossing.  A position landing exactly on
// a junction stays with the earlier step, whose far endpoint already is the
// junction vertex, so endpoints always agree with the vertex map.
template <typename S>
PointCoord<S> evaluate_model(const ConstantSlopeModel<S>& model, const PointCoord<S>& x) {
  S len = model.length(x.arc);
  if (x.offset < S{} || x.offset > len)
    throw std::invalid_argument("offset outside the arc");
  auto path = model.sys->image_path(x.arc);
  S target = model.slope(x.arc) * x.offset;
  S cum{};
  for (std::size_t k = 0; k < path.size(); ++k) {
    S seg = model.length(path[k].arc);
    if (target <= cum + seg || k + 1 == path.size()) {
      S u = target - cum;
      if (u < S{}) u = S{};
      if (u > seg) u = seg;  // float drift at the far end clamps to the vertex
      return {path[k].arc, path[k].reversed ? seg - u : u};
    }
    cum += seg;
  }
  throw std::logic_error("empty image path");
}

template <typename S>
struct ItineraryResult {
  std::vector<ArcId> word;
  bool ambiguous = false;
  int ambiguous_step = -1;
  // Arcs incident to the vertex the orbit landed on, when ambiguous.
  std::vector<ArcId> candidates;
};

// Letters i_k with f^k(x) inside arc i_k.  Hitting a vertex makes the letter
// ambiguous; the march stops there and reports the incident arcs.
template <typename S>
ItineraryResult<S> itinerary(const ConstantSlopeModel<S>& model, PointCoord<S> x, int n) {
  ItineraryResult<S> res;
  for (int k = 0; k <= n; ++k) {
    S len = model.length(x.arc);
    if (x.offset == S{} || x.offset == len) {
      res.ambiguous = true;
      res.ambiguous_step = k;
      ArcEnds e = model.sys->endpoints(x.arc);
      VertexId hit = x.offset == S{} ? e.from : e.to;
      for (ArcId a : model.arcs) {
        ArcEnds ea = model.sys->endpoints(a);
        if (ea.from == hit || ea.to == hit) res.candidates.push_back(a);
      }
      return res;
    }
    res.word.push_back(x.arc);
    if (k < n) x = evaluate_model(model, x);
  }
  return res;
}

// Endpoints of the cylinder [i0...in] in arc-i0 coordinates, found by pulling
// the final arc back through each image path.  The interval length is exactly
// delta(word).
template <typename S>
std::pair<PointCoord<S>, PointCoord<S>> psi_cylinder(const ConstantSlopeModel<S>& model,
                                                     const std::vector<ArcId>& word) {
  if (word.empty()) throw std::invalid_argument("empty word");
  S lo{};
  S hi = model.length(word.back());
  for (std::size_t k = word.size() - 1; k-- > 0;) {
    auto path = model.sys->image_path(word[k]);
    S cum{};
    bool found = false;
    for (const Step& st : path) {
      S seg = model.length(st.arc);
      if (st.arc == word[k + 1]) {
        S a = st.reversed ? seg - hi : lo;
        S b = st.reversed ? seg - lo : hi;
        lo = (cum + a) / model.slope(word[k]);
        hi = (cum + b) / model.slope(word[k]);
        found = true;
        break;
      }
      cum += seg;
    }
    if (!found) throw std::invalid_argument("word is not admissible in the model");
  }
  return {{word.front(), lo}, {word.front(), hi}};
}

template <typename S>
double max_slope(const ConstantSlopeModel<S>& model) {
  double best = 0.0;
  for (const auto& [arc, s] : model.slopes) best = std::max(best, scalar_traits<S>::to_double(s));
  return best;
}

}  // namespace tamegraph
