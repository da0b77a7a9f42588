#pragma once

#include <memory>
#include <vector>

#include "tamegraph/interner.hpp"

namespace tamegraph {

// 0/1 transition structure over a countable arc set.  Rows may be infinite in
// total but each row and each column is a finite list; rule-backed subclasses
// compute both on demand.  Arc ids come from a shared interner so labels stay
// stable across derived objects (truncations, eigenvectors, reports).
//
// prefix_at(d) enumerates the arcs the index scheme admits at depth d; the
// prefixes are monotone (prefix_at(d) is a superset of prefix_at(d-1)) and for
// finite matrices saturate at depth 0.
class CountableMatrix {
 public:
  virtual ~CountableMatrix() = default;

  Interner& arcs() const { return *arcs_; }
  std::shared_ptr<Interner> arcs_ptr() const { return arcs_; }

  virtual std::vector<ArcId> successors(ArcId i) const = 0;
  virtual std::vector<ArcId> predecessors(ArcId j) const = 0;
  virtual bool in_prefix(ArcId a, int depth) const = 0;
  // Arcs entering the enumeration at exactly this depth, in canonical order.
  virtual std::vector<ArcId> prefix_added(int depth) const = 0;
  virtual bool finite() const = 0;
  // Successors the enumeration admits at or below depth_cap.  Rule families
  // override this so sweeps never materialize labels beyond their horizon.
  virtual std::vector<ArcId> successors_within(ArcId i, int depth_cap) const;

  bool entry(ArcId i, ArcId j) const;
  std::vector<ArcId> prefix_at(int depth) const;

 protected:
  explicit CountableMatrix(std::shared_ptr<Interner> arcs) : arcs_(std::move(arcs)) {}
  std::shared_ptr<Interner> arcs_;
};

// Finite matrix given by explicit successor lists.
class ExplicitMatrix final : public CountableMatrix {
 public:
  ExplicitMatrix(std::shared_ptr<Interner> arcs, std::vector<std::vector<ArcId>> rows);

  // Rows of a dense 0/1 matrix; arc labels default to "0", "1", ...
  static std::unique_ptr<ExplicitMatrix> from_dense(const std::vector<std::vector<int>>& dense,
                                                    std::vector<std::string> labels = {});

  std::vector<ArcId> successors(ArcId i) const override;
  std::vector<ArcId> predecessors(ArcId j) const override;
  bool in_prefix(ArcId a, int depth) const override;
  std::vector<ArcId> prefix_added(int depth) const override;
  bool finite() const override { return true; }

  std::size_t dimension() const { return rows_.size(); }

 private:
  std::vector<std::vector<ArcId>> rows_;
  std::vector<std::vector<ArcId>> cols_;
};

}  // namespace tamegraph
