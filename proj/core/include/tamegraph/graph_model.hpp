#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tamegraph/countable_matrix.hpp"
#include "tamegraph/interner.hpp"

namespace tamegraph {

// One step of an image path: an arc traversed forward or reversed.
struct Step {
  ArcId arc;
  bool reversed = false;
};

struct ArcEnds {
  VertexId from;
  VertexId to;
};

// A graph carrying a continuous Markov map: each arc's image is a vertex-to
// vertex walk through whole arcs.  Finite systems hold explicit tables; rule
// families answer every query from closed-form rules and are enumerated
// through monotone depth prefixes, never materialized in full.
class MapSystem {
 public:
  virtual ~MapSystem() = default;

  Interner& arcs() const { return *arcs_; }
  Interner& vertices() const { return *vertices_; }
  std::shared_ptr<Interner> arcs_ptr() const { return arcs_; }

  virtual ArcEnds endpoints(ArcId a) const = 0;
  virtual std::vector<Step> image_path(ArcId a) const = 0;
  virtual VertexId vertex_image(VertexId v) const = 0;
  virtual std::vector<ArcId> arcs_added(int depth) const = 0;
  virtual bool in_enumeration(ArcId a, int depth) const = 0;
  virtual bool finite() const = 0;
  virtual std::string family() const = 0;
  // Arcs whose image path contains a.  Finite systems may return nullopt and
  // let the matrix view invert the paths; rule families must supply the rule.
  virtual std::optional<std::vector<ArcId>> preimage_arcs(ArcId a) const;
  // Distinct arcs on the image path that the enumeration admits at or below
  // depth_cap.  Rule families override to avoid materializing labels beyond
  // the cap; the default walks the path and filters.
  virtual std::vector<ArcId> image_arcs_within(ArcId a, int depth_cap) const;
  // Vertices incident to arcs beyond the enumeration at this depth.
  virtual std::vector<VertexId> boundary_vertices(int depth) const;

  std::vector<ArcId> arcs_at_depth(int depth) const;
  VertexId path_start(const Step& s) const;
  VertexId path_end(const Step& s) const;

 protected:
  MapSystem() : arcs_(std::make_shared<Interner>()), vertices_(std::make_shared<Interner>()) {}
  std::shared_ptr<Interner> arcs_;
  std::shared_ptr<Interner> vertices_;
};

// Finite system from explicit tables.  Vertex images are derived from the
// paths; contradictory derivations throw std::invalid_argument.
class ExplicitSystem final : public MapSystem {
 public:
  struct ArcSpec {
    std::string id;
    std::string from;
    std::string to;
  };
  struct StepSpec {
    std::string arc;
    bool reversed = false;
  };

  ExplicitSystem(const std::vector<std::string>& vertex_labels,
                 const std::vector<ArcSpec>& arc_specs,
                 const std::vector<std::pair<std::string, std::vector<StepSpec>>>& paths,
                 std::string family = "explicit");

  ArcEnds endpoints(ArcId a) const override;
  std::vector<Step> image_path(ArcId a) const override;
  VertexId vertex_image(VertexId v) const override;
  std::vector<ArcId> arcs_added(int depth) const override;
  bool in_enumeration(ArcId, int) const override { return true; }
  bool finite() const override { return true; }
  std::string family() const override { return family_; }

  std::size_t arc_count() const { return ends_.size(); }

 private:
  std::string family_;
  std::vector<ArcEnds> ends_;
  std::vector<std::vector<Step>> paths_;
  std::vector<VertexId> vertex_images_;
};

struct ValidationIssue {
  std::string severity;  // "error" | "warning" | "info"
  std::string code;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  int arcs_checked = 0;
  std::vector<ValidationIssue> issues;
};

// Continuity and incidence checks over the arcs enumerated at this depth.
// Paths may reference arcs beyond the enumeration (rule families); endpoint
// consistency is still checked through the rules.
ValidationReport validate(const MapSystem& sys, int depth);

// 0/1 matrix derived from the image paths: m(i, j) = 1 iff j lies on the
// path of i.  Shares the system's arc interner.
std::unique_ptr<CountableMatrix> transition_matrix(std::shared_ptr<const MapSystem> sys);

}  // namespace tamegraph
