#include "tamegraph/builtins.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace tamegraph {

namespace {

// Indices appear inside labels like c{2^n}.1; past this the labels are
// thousands of digits and nothing downstream can use them anyway.
constexpr long long kMaxFamilyIndex = 61;

std::string e1_arc_label(const Example1System::BladeRef& r) {
  switch (r.blade) {
    case 'b': return "b";
    case '1': return "c1";
    case 'a': return "a" + std::to_string(r.index) + "." + std::to_string(r.lap);
    case 'c': return "c" + std::to_string(r.index) + "." + std::to_string(r.lap);
  }
  throw std::logic_error("bad blade tag");
}

bool parse_indexed(const std::string& s, std::size_t pos, long long& index, int& lap) {
  std::size_t dot = s.find('.', pos);
  if (dot == std::string::npos || dot == pos || dot + 1 >= s.size()) return false;
  for (std::size_t k = pos; k < dot; ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  if (s[pos] == '0' && dot - pos > 1) return false;
  if (dot - pos > 18) return false;  // keeps the index within long long
  for (std::size_t k = dot + 1; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  if (s.size() - dot - 1 > 1) return false;
  index = std::stoll(s.substr(pos, dot - pos));
  lap = s[dot + 1] - '0';
  return true;
}

}  // namespace

std::shared_ptr<ExplicitSystem> make_interval_markov(const std::vector<std::vector<int>>& dense,
                                                     const std::string& orientations,
                                                     std::vector<std::string> arc_labels,
                                                     std::string family) {
  std::size_t n = dense.size();
  if (n == 0) throw std::invalid_argument("interval map needs at least one arc");
  if (orientations.size() != n)
    throw std::invalid_argument("need one orientation (+ or -) per arc");
  std::vector<std::string> vertex_labels;
  for (std::size_t k = 0; k <= n; ++k) vertex_labels.push_back("p" + std::to_string(k));
  std::vector<ExplicitSystem::ArcSpec> arcs;
  for (std::size_t k = 0; k < n; ++k) {
    std::string id = k < arc_labels.size() ? arc_labels[k] : "i" + std::to_string(k);
    arcs.push_back({id, vertex_labels[k], vertex_labels[k + 1]});
  }
  std::vector<std::pair<std::string, std::vector<ExplicitSystem::StepSpec>>> paths;
  for (std::size_t k = 0; k < n; ++k) {
    if (dense[k].size() != n) throw std::invalid_argument("transition matrix is not square");
    long lo = -1, hi = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (dense[k][j] == 0) continue;
      if (dense[k][j] != 1) throw std::invalid_argument("transition entries must be 0 or 1");
      if (lo < 0) lo = static_cast<long>(j);
      hi = static_cast<long>(j);
    }
    if (lo < 0) throw std::invalid_argument("row " + std::to_string(k) + " has an empty image");
    for (long j = lo; j <= hi; ++j)
      if (dense[k][static_cast<std::size_t>(j)] != 1)
        throw std::invalid_argument("row " + std::to_string(k) +
                                    " is not contiguous; no interval realization");
    std::vector<ExplicitSystem::StepSpec> steps;
    if (orientations[k] == '+') {
      for (long j = lo; j <= hi; ++j) steps.push_back({arcs[static_cast<std::size_t>(j)].id, false});
    } else if (orientations[k] == '-') {
      for (long j = hi; j >= lo; --j) steps.push_back({arcs[static_cast<std::size_t>(j)].id, true});
    } else {
      throw std::invalid_argument("orientation must be + or -");
    }
    paths.emplace_back(arcs[k].id, std::move(steps));
  }
  return std::make_shared<ExplicitSystem>(vertex_labels, arcs, paths, std::move(family));
}

std::shared_ptr<ExplicitSystem> make_full_shift(int n) {
  if (n < 1) throw std::invalid_argument("full shift needs at least one branch");
  std::vector<std::vector<int>> dense(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n), 1));
  std::string orient;
  for (int k = 0; k < n; ++k) orient.push_back(k % 2 == 0 ? '+' : '-');
  return make_interval_markov(dense, orient, {}, "full-shift");
}

std::shared_ptr<ExplicitSystem> make_golden_mean() {
  return make_interval_markov({{1, 1}, {1, 0}}, "-+", {}, "golden-mean");
}

Example1System::Example1System() {
  (void)origin();
  // Depth-0 arcs get stable low ids in canonical order.
  (void)arcs_added(0);
}

ArcId Example1System::intern_arc(const BladeRef& ref) const {
  std::lock_guard<std::mutex> lk(mu_);
  ArcId id = arcs_->intern(e1_arc_label(ref));
  if (static_cast<std::size_t>(id) == arc_meta_.size()) arc_meta_.push_back(ref);
  return id;
}

// Interning and metadata recording stay under one lock so ids and rows
// cannot interleave across threads.
VertexId Example1System::vertex_row(const BladeRef& ref, const std::string& label) const {
  std::lock_guard<std::mutex> lk(mu_);
  VertexId v = vertices_->intern(label);
  if (static_cast<std::size_t>(v) == vertex_meta_.size()) vertex_meta_.push_back(ref);
  return v;
}

VertexId Example1System::origin() const { return vertex_row({'o', 0, 0}, "o"); }

Example1System::BladeRef Example1System::blade_ref(ArcId a) const {
  std::lock_guard<std::mutex> lk(mu_);
  if (a < 0 || static_cast<std::size_t>(a) >= arc_meta_.size())
    throw std::invalid_argument("arc id out of range");
  return arc_meta_[static_cast<std::size_t>(a)];
}

ArcId Example1System::arc_b() const { return intern_arc({'b', 0, 1}); }
ArcId Example1System::arc_c1() const { return intern_arc({'1', 0, 1}); }

ArcId Example1System::arc_a(long long n, int lap) const {
  if (n < 0 || lap < 1 || lap > 3) throw std::invalid_argument("bad A-blade lap");
  return intern_arc({'a', n, lap});
}

ArcId Example1System::arc_c(long long m, int lap) const {
  if (m < 2 || lap < 1 || lap > 2) throw std::invalid_argument("bad C-blade lap");
  return intern_arc({'c', m, lap});
}

std::optional<ArcId> Example1System::resolve_arc(const std::string& label) const {
  if (label == "b") return arc_b();
  if (label == "c1") return arc_c1();
  long long index;
  int lap;
  if (label.size() > 1 && parse_indexed(label, 1, index, lap)) {
    if (label[0] == 'a' && lap >= 1 && lap <= 3) return arc_a(index, lap);
    if (label[0] == 'c' && index >= 2 && lap >= 1 && lap <= 2) return arc_c(index, lap);
  }
  return std::nullopt;
}

// Vertex rows reuse BladeRef: blade tag + index, lap = which division point
// counted from the branchpoint ('o' is the branchpoint itself).
Example1System::BladeRef Example1System::vertex_ref(VertexId v) const {
  std::lock_guard<std::mutex> lk(mu_);
  if (v < 0 || static_cast<std::size_t>(v) >= vertex_meta_.size())
    throw std::invalid_argument("vertex id out of range");
  return vertex_meta_[static_cast<std::size_t>(v)];
}

ArcEnds Example1System::endpoints(ArcId a) const {
  BladeRef r = blade_ref(a);
  auto vertex = [&](const BladeRef& ref, const std::string& label) {
    return vertex_row(ref, label);
  };
  VertexId o = origin();
  switch (r.blade) {
    case 'b': return {o, vertex({'b', 0, 1}, "B.1")};
    case '1': return {o, vertex({'1', 0, 1}, "C1.1")};
    case 'a': {
      std::string blade = "A" + std::to_string(r.index);
      VertexId lo = r.lap == 1 ? o : vertex({'a', r.index, r.lap - 1},
                                            blade + "." + std::to_string(r.lap - 1));
      VertexId hi = vertex({'a', r.index, r.lap}, blade + "." + std::to_string(r.lap));
      return {lo, hi};
    }
    case 'c': {
      std::string blade = "C" + std::to_string(r.index);
      VertexId lo = r.lap == 1 ? o : vertex({'c', r.index, 1}, blade + ".1");
      VertexId hi = vertex({'c', r.index, r.lap}, blade + "." + std::to_string(r.lap));
      return {lo, hi};
    }
  }
  throw std::logic_error("bad blade tag");
}

std::vector<Step> Example1System::image_path(ArcId a) const {
  BladeRef r = blade_ref(a);
  switch (r.blade) {
    case 'b':
      return {{arc_a(0, 1), false}, {arc_a(0, 2), false}, {arc_a(0, 3), false}};
    case '1':
      return {{arc_b(), false}};
    case 'c': {
      if (r.index == 2) return {{arc_c1(), r.lap == 2}};
      ArcId lo = arc_c(r.index - 1, 1), hi = arc_c(r.index - 1, 2);
      if (r.lap == 1) return {{lo, false}, {hi, false}};
      return {{hi, true}, {lo, true}};
    }
    case 'a': {
      if (r.lap == 3)
        return {{arc_a(r.index + 1, 1), false},
                {arc_a(r.index + 1, 2), false},
                {arc_a(r.index + 1, 3), false}};
      if (r.index == 0) return {{arc_c1(), r.lap == 2}};
      if (r.index > kMaxFamilyIndex)
        throw std::domain_error("fold target C_{2^" + std::to_string(r.index) +
                                "} is beyond the materializable range");
      long long m = 1LL << r.index;
      ArcId lo = arc_c(m, 1), hi = arc_c(m, 2);
      if (r.lap == 1) return {{lo, false}, {hi, false}};
      return {{hi, true}, {lo, true}};
    }
  }
  throw std::logic_error("bad blade tag");
}

VertexId Example1System::vertex_image(VertexId v) const {
  BladeRef r = vertex_ref(v);
  auto tip = [&](ArcId arc) { return endpoints(arc).to; };
  switch (r.blade) {
    case 'o': return v;
    case 'b': return tip(arc_a(0, 3));
    case '1': return tip(arc_b());
    case 'a':
      if (r.lap == 3) return tip(arc_a(r.index + 1, 3));
      if (r.lap == 2) return origin();
      if (r.index == 0) return tip(arc_c1());
      if (r.index > kMaxFamilyIndex)
        throw std::domain_error("fold target C_{2^" + std::to_string(r.index) +
                                "} is beyond the materializable range");
      return tip(arc_c(1LL << r.index, 2));
    case 'c':
      if (r.lap == 2) return origin();
      if (r.index == 2) return tip(arc_c1());
      return tip(arc_c(r.index - 1, 2));
  }
  throw std::logic_error("bad blade tag");
}

std::vector<ArcId> Example1System::arcs_added(int depth) const {
  std::vector<ArcId> out;
  if (depth < 0) return out;
  if (depth == 0) {
    out.push_back(arc_b());
    out.push_back(arc_c1());
    for (int lap = 1; lap <= 3; ++lap) out.push_back(arc_a(0, lap));
    for (long long m = 2; m <= 4; ++m)
      for (int lap = 1; lap <= 2; ++lap) out.push_back(arc_c(m, lap));
    return out;
  }
  for (int lap = 1; lap <= 3; ++lap) out.push_back(arc_a(depth, lap));
  for (long long m = 4LL * depth + 1; m <= 4LL * depth + 4; ++m)
    for (int lap = 1; lap <= 2; ++lap) out.push_back(arc_c(m, lap));
  return out;
}

bool Example1System::in_enumeration(ArcId a, int depth) const {
  if (depth < 0) return false;
  BladeRef r = blade_ref(a);
  switch (r.blade) {
    case 'b':
    case '1': return true;
    case 'a': return r.index <= depth;
    case 'c': return r.index <= 4LL * depth + 4;
  }
  return false;
}

std::optional<std::vector<ArcId>> Example1System::preimage_arcs(ArcId a) const {
  BladeRef r = blade_ref(a);
  std::vector<ArcId> out;
  switch (r.blade) {
    case 'b':
      out = {arc_c1()};
      break;
    case '1':
      out = {arc_a(0, 1), arc_a(0, 2), arc_c(2, 1), arc_c(2, 2)};
      break;
    case 'a':
      out = r.index == 0 ? std::vector<ArcId>{arc_b()} : std::vector<ArcId>{arc_a(r.index - 1, 3)};
      break;
    case 'c': {
      long long m = r.index;
      if ((m & (m - 1)) == 0) {  // m = 2^n: the A_n fold lands here
        int n = 0;
        while ((1LL << n) < m) ++n;
        out.push_back(arc_a(n, 1));
        out.push_back(arc_a(n, 2));
      }
      out.push_back(arc_c(m + 1, 1));
      out.push_back(arc_c(m + 1, 2));
      break;
    }
  }
  return out;
}

std::vector<ArcId> Example1System::image_arcs_within(ArcId a, int depth_cap) const {
  BladeRef r = blade_ref(a);
  long long cap_c = 4LL * depth_cap + 4;
  switch (r.blade) {
    case 'b':
      return {arc_a(0, 1), arc_a(0, 2), arc_a(0, 3)};
    case '1':
      return {arc_b()};
    case 'c': {
      if (r.index == 2) return {arc_c1()};
      if (r.index - 1 > cap_c) return {};
      if (r.lap == 1) return {arc_c(r.index - 1, 1), arc_c(r.index - 1, 2)};
      return {arc_c(r.index - 1, 2), arc_c(r.index - 1, 1)};
    }
    case 'a': {
      if (r.lap == 3) {
        if (r.index + 1 > depth_cap) return {};
        return {arc_a(r.index + 1, 1), arc_a(r.index + 1, 2), arc_a(r.index + 1, 3)};
      }
      if (r.index == 0) return {arc_c1()};
      // The fold target C_{2^n} stays a pure index comparison so no label of
      // size 2^n is ever built for blocked arcs.
      if (r.index > kMaxFamilyIndex || (1LL << r.index) > cap_c) return {};
      long long m = 1LL << r.index;
      if (r.lap == 1) return {arc_c(m, 1), arc_c(m, 2)};
      return {arc_c(m, 2), arc_c(m, 1)};
    }
  }
  throw std::logic_error("bad blade tag");
}

std::vector<VertexId> Example1System::boundary_vertices(int) const { return {origin()}; }

std::shared_ptr<Example1System> make_example1() { return std::make_shared<Example1System>(); }

std::shared_ptr<MapSystem> make_builtin(const std::string& family, int param) {
  if (family == "full-shift") return make_full_shift(param == 0 ? 2 : param);
  if (family == "tent") return make_full_shift(2);
  if (family == "golden-mean") return make_golden_mean();
  if (family == "example1") return make_example1();
  throw std::invalid_argument("unknown builtin family: " + family);
}

std::optional<ArcId> resolve_arc_label(const MapSystem& sys, const std::string& label) {
  if (const auto* e1 = dynamic_cast<const Example1System*>(&sys)) return e1->resolve_arc(label);
  return sys.arcs().find(label);
}

namespace detail {

Rational example1_value(const Example1System::BladeRef& ref) {
  switch (ref.blade) {
    case 'b': return Rational(1);
    case '1': return Rational(1, 2);
    case 'c': return Rational(1, 4);
    case 'a': {
      if (ref.lap <= 2) return Rational(1, 4);
      BigInt num = (BigInt(1) << static_cast<unsigned>(ref.index + 1)) + 1;
      return Rational(num, BigInt(2));
    }
  }
  throw std::logic_error("bad blade tag");
}

double golden_lambda() { return (1.0 + std::sqrt(5.0)) / 2.0; }

}  // namespace detail

}  // namespace tamegraph
