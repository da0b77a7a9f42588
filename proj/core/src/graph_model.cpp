#include "tamegraph/graph_model.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace tamegraph {

std::vector<ArcId> MapSystem::arcs_at_depth(int depth) const {
  std::vector<ArcId> out;
  for (int d = 0; d <= depth; ++d) {
    auto added = arcs_added(d);
    out.insert(out.end(), added.begin(), added.end());
    if (finite() && d == 0) break;  // finite systems enumerate everything at depth 0
  }
  return out;
}

VertexId MapSystem::path_start(const Step& s) const {
  ArcEnds e = endpoints(s.arc);
  return s.reversed ? e.to : e.from;
}

VertexId MapSystem::path_end(const Step& s) const {
  ArcEnds e = endpoints(s.arc);
  return s.reversed ? e.from : e.to;
}

std::optional<std::vector<ArcId>> MapSystem::preimage_arcs(ArcId) const { return std::nullopt; }

std::vector<ArcId> MapSystem::image_arcs_within(ArcId a, int depth_cap) const {
  std::vector<ArcId> out;
  for (const Step& s : image_path(a)) {
    if (!in_enumeration(s.arc, depth_cap)) continue;
    if (std::find(out.begin(), out.end(), s.arc) == out.end()) out.push_back(s.arc);
  }
  return out;
}

std::vector<VertexId> MapSystem::boundary_vertices(int) const { return {}; }

ExplicitSystem::ExplicitSystem(
    const std::vector<std::string>& vertex_labels, const std::vector<ArcSpec>& arc_specs,
    const std::vector<std::pair<std::string, std::vector<StepSpec>>>& paths, std::string family)
    : family_(std::move(family)) {
  for (const auto& v : vertex_labels) vertices_->intern(v);
  if (vertices_->size() != vertex_labels.size())
    throw std::invalid_argument("duplicate vertex label");
  for (const auto& a : arc_specs) {
    arcs_->intern(a.id);
    ends_.push_back({vertices_->require(a.from), vertices_->require(a.to)});
  }
  if (arcs_->size() != arc_specs.size()) throw std::invalid_argument("duplicate arc label");

  paths_.resize(ends_.size());
  std::vector<bool> seen(ends_.size(), false);
  for (const auto& [arc_label, steps] : paths) {
    ArcId a = arcs_->require(arc_label);
    if (seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument("duplicate image path for arc " + arc_label);
    seen[static_cast<std::size_t>(a)] = true;
    std::vector<Step> path;
    for (const auto& s : steps) path.push_back({arcs_->require(s.arc), s.reversed});
    if (path.empty()) throw std::invalid_argument("empty image path for arc " + arc_label);
    paths_[static_cast<std::size_t>(a)] = std::move(path);
  }
  for (std::size_t a = 0; a < ends_.size(); ++a)
    if (!seen[a])
      throw std::invalid_argument("missing image path for arc " + arcs_->label(static_cast<ArcId>(a)));

  // Vertex images follow from the paths: the image of an arc's start vertex
  // is its path's start vertex.  Every incidence must agree.
  vertex_images_.assign(vertices_->size(), -1);
  auto assign = [&](VertexId v, VertexId w, ArcId witness) {
    auto& slot = vertex_images_[static_cast<std::size_t>(v)];
    if (slot == -1) {
      slot = w;
    } else if (slot != w) {
      throw std::invalid_argument("inconsistent vertex image at " + vertices_->label(v) +
                                  " forced by arc " + arcs_->label(witness));
    }
  };
  for (std::size_t a = 0; a < ends_.size(); ++a) {
    const auto& path = paths_[a];
    assign(ends_[a].from, path_start(path.front()), static_cast<ArcId>(a));
    assign(ends_[a].to, path_end(path.back()), static_cast<ArcId>(a));
  }
  for (std::size_t v = 0; v < vertex_images_.size(); ++v)
    if (vertex_images_[v] == -1)
      throw std::invalid_argument("isolated vertex " + vertices_->label(static_cast<VertexId>(v)) +
                                  " has no image");
}

ArcEnds ExplicitSystem::endpoints(ArcId a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= ends_.size())
    throw std::invalid_argument("arc id out of range");
  return ends_[static_cast<std::size_t>(a)];
}

std::vector<Step> ExplicitSystem::image_path(ArcId a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= paths_.size())
    throw std::invalid_argument("arc id out of range");
  return paths_[static_cast<std::size_t>(a)];
}

VertexId ExplicitSystem::vertex_image(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= vertex_images_.size())
    throw std::invalid_argument("vertex id out of range");
  return vertex_images_[static_cast<std::size_t>(v)];
}

std::vector<ArcId> ExplicitSystem::arcs_added(int depth) const {
  std::vector<ArcId> out;
  if (depth == 0) {
    out.resize(ends_.size());
    for (std::size_t a = 0; a < ends_.size(); ++a) out[a] = static_cast<ArcId>(a);
  }
  return out;
}

ValidationReport validate(const MapSystem& sys, int depth) {
  ValidationReport rep;
  auto arcs = sys.arcs_at_depth(depth);
  for (ArcId a : arcs) {
    ++rep.arcs_checked;
    ArcEnds e = sys.endpoints(a);
    auto path = sys.image_path(a);
    const std::string& label = sys.arcs().label(a);
    if (path.empty()) {
      rep.issues.push_back({"error", "empty-path", "arc " + label + " has an empty image path"});
      rep.ok = false;
      continue;
    }
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      if (sys.path_end(path[k]) != sys.path_start(path[k + 1])) {
        rep.issues.push_back({"error", "path-discontinuous",
                              "image path of arc " + label + " breaks between steps " +
                                  std::to_string(k) + " and " + std::to_string(k + 1)});
        rep.ok = false;
      }
    }
    if (sys.path_start(path.front()) != sys.vertex_image(e.from) ||
        sys.path_end(path.back()) != sys.vertex_image(e.to)) {
      rep.issues.push_back({"error", "endpoint-image",
                            "image path of arc " + label + " does not join the vertex images"});
      rep.ok = false;
    }
    std::set<ArcId> dedup;
    for (const Step& s : path) dedup.insert(s.arc);
    if (dedup.size() != path.size())
      rep.issues.push_back({"info", "path-repeats-arc",
                            "image of arc " + label + " covers some arc more than once"});
  }
  return rep;
}

namespace {

// Matrix view over a map system.  Successor lists keep the traversal order
// of the image path (first occurrence), which downstream word enumeration
// uses as the canonical letter order.
class SystemMatrix final : public CountableMatrix {
 public:
  explicit SystemMatrix(std::shared_ptr<const MapSystem> sys)
      : CountableMatrix(sys->arcs_ptr()), sys_(std::move(sys)) {}

  std::vector<ArcId> successors(ArcId i) const override {
    std::vector<ArcId> out;
    for (const Step& s : sys_->image_path(i))
      if (std::find(out.begin(), out.end(), s.arc) == out.end()) out.push_back(s.arc);
    return out;
  }

  std::vector<ArcId> predecessors(ArcId j) const override {
    if (auto rule = sys_->preimage_arcs(j)) return *rule;
    if (!sys_->finite())
      throw std::logic_error("rule-backed system lacks a preimage rule");
    std::call_once(inverted_once_, [this] {
      auto arcs = sys_->arcs_at_depth(0);
      cols_.resize(arcs.size());
      for (ArcId i : arcs)
        for (ArcId j2 : successors(i)) cols_[static_cast<std::size_t>(j2)].push_back(i);
    });
    if (j < 0 || static_cast<std::size_t>(j) >= cols_.size())
      throw std::invalid_argument("arc id out of range");
    return cols_[static_cast<std::size_t>(j)];
  }

  bool in_prefix(ArcId a, int depth) const override { return sys_->in_enumeration(a, depth); }
  std::vector<ArcId> prefix_added(int depth) const override { return sys_->arcs_added(depth); }
  bool finite() const override { return sys_->finite(); }
  std::vector<ArcId> successors_within(ArcId i, int depth_cap) const override {
    return sys_->image_arcs_within(i, depth_cap);
  }

 private:
  std::shared_ptr<const MapSystem> sys_;
  mutable std::once_flag inverted_once_;
  mutable std::vector<std::vector<ArcId>> cols_;
};

}  // namespace

std::unique_ptr<CountableMatrix> transition_matrix(std::shared_ptr<const MapSystem> sys) {
  if (!sys) throw std::invalid_argument("null system");
  return std::make_unique<SystemMatrix>(std::move(sys));
}

}  // namespace tamegraph
