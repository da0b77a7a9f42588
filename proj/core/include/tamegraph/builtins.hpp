#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tamegraph/graph_model.hpp"
#include "tamegraph/numeric.hpp"
#include "tamegraph/subeigenvector.hpp"

namespace tamegraph {

// Finite Markov interval map: arcs laid end to end on vertices p0..pN, arc k
// covering the contiguous block of arcs its matrix row selects, traversed
// increasing ('+') or decreasing ('-').  Vertex-image consistency of the
// chosen orientations is enforced by the ExplicitSystem constructor.
std::shared_ptr<ExplicitSystem> make_interval_markov(
    const std::vector<std::vector<int>>& dense, const std::string& orientations,
    std::vector<std::string> arc_labels = {}, std::string family = "interval-markov");

// n branches, each mapping onto the whole interval with alternating
// orientation; the n-fold tent map.
std::shared_ptr<ExplicitSystem> make_full_shift(int n);

// Two arcs, first over both (decreasing), second over the first (increasing).
std::shared_ptr<ExplicitSystem> make_golden_mean();

// The fan dendrite family: blades A_n (n >= 0), B, C_m (m >= 1) meeting at a
// fixed branchpoint o.  C_1 maps onto B, B onto A_0; C_{m+1} folds 2:1 over
// C_m; A_n folds 2:1 over C_{2^n} and then stretches onto A_{n+1}.  The
// partition refines each blade into monotone laps:
//   b            the single lap of B
//   c1           the single lap of C_1
//   a{n}.1/2/3   the three laps of A_n, ordered from the branchpoint
//   c{m}.1/2     the two laps of C_m, m >= 2
// The enumeration prefix at depth d admits A_n for n <= d and C_m for
// m <= 4d+4, so the fold targets C_{2^n} become admissible while the sweep
// is still well below the loop-closing depth.
class Example1System final : public MapSystem {
 public:
  // blade: 'b' (B), '1' (C_1), 'a' (A_index), 'c' (C_index, index >= 2).
  struct BladeRef {
    char blade;
    long long index = 0;
    int lap = 1;
  };

  Example1System();

  ArcEnds endpoints(ArcId a) const override;
  std::vector<Step> image_path(ArcId a) const override;
  VertexId vertex_image(VertexId v) const override;
  std::vector<ArcId> arcs_added(int depth) const override;
  bool in_enumeration(ArcId a, int depth) const override;
  bool finite() const override { return false; }
  std::string family() const override { return "example1"; }
  std::optional<std::vector<ArcId>> preimage_arcs(ArcId a) const override;
  std::vector<ArcId> image_arcs_within(ArcId a, int depth_cap) const override;
  std::vector<VertexId> boundary_vertices(int depth) const override;

  BladeRef blade_ref(ArcId a) const;
  // Parses and interns a lap label; nullopt when the label matches no rule.
  std::optional<ArcId> resolve_arc(const std::string& label) const;

  ArcId arc_b() const;
  ArcId arc_c1() const;
  ArcId arc_a(long long n, int lap) const;
  ArcId arc_c(long long m, int lap) const;

 private:
  ArcId intern_arc(const BladeRef& ref) const;
  VertexId vertex_row(const BladeRef& ref, const std::string& label) const;
  VertexId origin() const;
  BladeRef vertex_ref(VertexId v) const;

  mutable std::mutex mu_;
  mutable std::vector<BladeRef> arc_meta_;
  mutable std::vector<BladeRef> vertex_meta_;  // lap 0 marks a blade tip row
};

std::shared_ptr<Example1System> make_example1();

// Builds a MapSystem from a family name, for config files and tests.
// Families: "full-shift" (param n), "tent" (= full-shift 2), "golden-mean",
// "example1".
std::shared_ptr<MapSystem> make_builtin(const std::string& family, int param = 0);

// Resolves an arc label against a system, consulting rule families so labels
// beyond the already-interned set still work.
std::optional<ArcId> resolve_arc_label(const MapSystem& sys, const std::string& label);

// The documented lambda-eigenvector of a built-in family.  Rule families get
// a rule-backed entry function that covers every arc the family can name.
//   full-shift-n: lambda = n, v_i = 1/n
//   golden-mean:  lambda = (1+sqrt 5)/2, v = (lambda-1, 2-lambda); the values
//                 are irrational, so the exact mode refuses
//   example1:     lambda = 2; v(b)=1, v(c1)=1/2, v(c{m}.*)=v(a{n}.1/2)=1/4,
//                 v(a{n}.3)=(2^{n+1}+1)/2; not summable, total stays unset
template <typename S>
SubEigenvector<S> canonical_eigenvector(std::shared_ptr<const MapSystem> sys);

namespace detail {
Rational example1_value(const Example1System::BladeRef& ref);
double golden_lambda();
}  // namespace detail

template <typename S>
SubEigenvector<S> canonical_eigenvector(std::shared_ptr<const MapSystem> sys) {
  if (!sys) throw std::invalid_argument("null system");
  const std::string fam = sys->family();
  if (fam == "full-shift") {
    auto arcs = sys->arcs_at_depth(0);
    long n = static_cast<long>(arcs.size());
    std::map<ArcId, S> entries;
    for (ArcId a : arcs) entries.emplace(a, scalar_traits<S>::from_rational(Rational(1, n)));
    return subeigenvector_from_map<S>(scalar_traits<S>::from_int(n), std::move(entries), {},
                                      scalar_traits<S>::from_int(1), "canonical");
  }
  if (fam == "golden-mean") {
    if constexpr (scalar_traits<S>::exact) {
      throw std::domain_error("golden-mean eigendata is irrational; no exact rational form");
    } else {
      double phi = detail::golden_lambda();
      auto arcs = sys->arcs_at_depth(0);
      if (arcs.size() != 2) throw std::invalid_argument("golden-mean system must have two arcs");
      std::map<ArcId, double> entries = {{arcs[0], phi - 1.0}, {arcs[1], 2.0 - phi}};
      return subeigenvector_from_map<double>(phi, std::move(entries), {}, 1.0, "canonical");
    }
  }
  if (fam == "example1") {
    auto e1 = std::dynamic_pointer_cast<const Example1System>(sys);
    if (!e1) throw std::invalid_argument("example1 family with unexpected system type");
    SubEigenvector<S> v;
    v.lambda = scalar_traits<S>::from_int(2);
    v.entry = [e1](ArcId a) {
      return scalar_traits<S>::from_rational(detail::example1_value(e1->blade_ref(a)));
    };
    v.origin = "canonical";
    return v;
  }
  throw std::invalid_argument("no canonical eigenvector for family " + fam);
}

}  // namespace tamegraph
