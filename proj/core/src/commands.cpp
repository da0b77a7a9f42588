#include "tamegraph/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>

#include "tamegraph/builtins.hpp"
#include "tamegraph/gurevich.hpp"
#include "tamegraph/horseshoe.hpp"
#include "tamegraph/refinement.hpp"
#include "tamegraph/slope_model.hpp"
#include "tamegraph/subeigenvector.hpp"
#include "tamegraph/truncation.hpp"

namespace tamegraph {
namespace {

const char* yn(bool b) { return b ? "true" : "false"; }

std::string bound_cell(double v) { return std::isfinite(v) ? format_double(v) : "-inf"; }

ArcId pick_base(const MapSystem& sys, const JobConfig& cfg) {
  if (!cfg.base_arc.empty()) {
    auto id = resolve_arc_label(sys, cfg.base_arc);
    if (!id) throw std::invalid_argument("unknown arc \"" + cfg.base_arc + "\"");
    return *id;
  }
  auto first = sys.arcs_added(0);
  if (first.empty()) throw std::invalid_argument("system has no arcs at depth 0");
  return first.front();
}

// Eigenvector selection shared by eigen and slope-model: an explicit lambda
// requests the first-return series at the base arc; otherwise the family
// value, falling back to the numeric Perron pair for plain finite systems.
template <typename S>
struct ChosenVector {
  SubEigenvector<S> v;
  std::vector<ArcId> check_arcs;
  ArcId series_base = -1;
  bool tail_certified = true;
  bool tail_exact = false;
};

template <typename S>
ChosenVector<S> pick_eigenvector(const JobConfig& cfg, std::shared_ptr<MapSystem> sys,
                                 const CountableMatrix& m) {
  ChosenVector<S> out;
  if (!cfg.lambda.empty()) {
    S lambda = scalar_traits<S>::from_rational(parse_rational(cfg.lambda));
    ArcId j = pick_base(*sys, cfg);
    VjResult<S> vj = vj_subeigenvector<S>(m, lambda, j, cfg.horizon, cfg.depth);
    out.v = std::move(vj.v);
    out.series_base = j;
    out.tail_certified = vj.tail_certified;
    out.tail_exact = vj.tail_exact;
    out.check_arcs = m.prefix_at(cfg.depth);
    if (std::find(out.check_arcs.begin(), out.check_arcs.end(), j) == out.check_arcs.end())
      out.check_arcs.push_back(j);
    return out;
  }
  const std::string fam = sys->family();
  if (fam == "full-shift" || fam == "golden-mean" || fam == "example1") {
    out.v = canonical_eigenvector<S>(sys);
  } else if constexpr (!scalar_traits<S>::exact) {
    out.v = perron_subeigenvector(submatrix(m, m.prefix_at(0)));
  } else {
    throw std::domain_error("no exact eigendata for family " + fam +
                            "; pass lambda to build a series subeigenvector");
  }
  out.check_arcs = m.prefix_at(sys->finite() ? 0 : cfg.depth);
  return out;
}

template <typename S>
void add_blade_sums(Report& rep, const Example1System& e1, const SubEigenvector<S>& v,
                    const std::vector<ArcId>& arcs) {
  std::vector<std::string> order;
  std::map<std::string, S> sums;
  for (ArcId a : arcs) {
    auto r = e1.blade_ref(a);
    std::string key = r.blade == 'b'   ? "B"
                      : r.blade == '1' ? "C1"
                      : (r.blade == 'a' ? "A" : "C") + std::to_string(r.index);
    if (!sums.count(key)) order.push_back(key);
    sums[key] += v.entry(a);
  }
  Table& t = rep.table("blade-sums", {"blade", "sum"});
  for (const auto& key : order) t.rows.push_back({key, format_scalar(sums[key])});
}

template <typename S>
CommandResult eigen_body(const JobConfig& cfg, std::shared_ptr<MapSystem> sys) {
  CommandResult res;
  auto m = transition_matrix(sys);
  ChosenVector<S> chosen = pick_eigenvector<S>(cfg, sys, *m);

  res.report.add("family", sys->family());
  res.report.add("mode", scalar_traits<S>::exact ? "exact" : "float");
  res.report.add("lambda", format_scalar(chosen.v.lambda));
  res.report.add("origin", chosen.v.origin);
  if (chosen.series_base >= 0) {
    res.report.add("series_base", sys->arcs().label(chosen.series_base));
    res.report.add("horizon", std::to_string(cfg.horizon));
    res.report.add("tail_certified", yn(chosen.tail_certified));
    res.report.add("tail_exact", yn(chosen.tail_exact));
  }

  auto check = check_subeigenvector<S>(*m, chosen.v, chosen.check_arcs, cfg.tol);
  res.report.add("rows_checked", std::to_string(check.rows.size()));
  res.report.add("subeigenvector", yn(check.ok));
  res.report.add("equality_outside_deficiency", yn(check.equality));
  if (!check.ok) res.report.add("max_violation", format_double(check.max_violation));

  Table& rows = res.report.table("rows", {"arc", "lhs", "rhs", "relation"});
  for (const auto& row : check.rows)
    rows.rows.push_back({sys->arcs().label(row.arc), format_scalar(row.lhs),
                         format_scalar(row.rhs), row.relation});

  if (auto e1 = std::dynamic_pointer_cast<const Example1System>(sys))
    add_blade_sums<S>(res.report, *e1, chosen.v, chosen.check_arcs);

  res.exit_code = check.ok ? 0 : 1;
  return res;
}

template <typename S>
CommandResult slope_body(const JobConfig& cfg, std::shared_ptr<MapSystem> sys) {
  CommandResult res;
  auto m = transition_matrix(sys);
  ChosenVector<S> chosen = pick_eigenvector<S>(cfg, sys, *m);

  res.report.add("family", sys->family());
  res.report.add("mode", scalar_traits<S>::exact ? "exact" : "float");
  res.report.add("lambda", format_scalar(chosen.v.lambda));
  res.report.add("origin", chosen.v.origin);

  try {
    auto model =
        build_constant_slope_model<S>(sys, chosen.v, cfg.depth, cfg.probe_levels, cfg.tol);
    res.report.add("arcs", std::to_string(model.arcs.size()));
    res.report.add("constant_slope", yn(model.constant_slope));
    res.report.add("max_slope", format_double(max_slope(model)));
    if (!model.warnings.empty()) {
      Table& w = res.report.table("warnings", {"message"});
      for (const auto& msg : model.warnings) w.rows.push_back({msg});
    }
    Table& t = res.report.table("arcs", {"arc", "length", "slope"});
    for (ArcId a : model.arcs)
      t.rows.push_back(
          {sys->arcs().label(a), format_scalar(model.length(a)), format_scalar(model.slope(a))});
  } catch (const std::domain_error& e) {
    // The obstruction itself is the result; the cylinder probe explains it
    // when refinement lengths fail to vanish.
    res.report.add("error", e.what());
    auto arcs = sys->arcs_at_depth(cfg.depth);
    int window = sys->finite() ? cfg.probe_levels
                               : std::min(cfg.probe_levels, std::max(1, cfg.depth));
    if (auto warn = limit_cylinder_warning<S>(*m, arcs, chosen.v, window))
      res.report.add("warning", *warn);
    res.exit_code = 1;
  }
  return res;
}

}  // namespace

CommandResult cmd_analyze(const JobConfig& cfg) {
  CommandResult res;
  auto sys = build_system(cfg);
  ValidationReport val = validate(*sys, cfg.depth);
  res.report.add("family", sys->family());
  res.report.add("scope", sys->finite() ? "full" : "truncation");
  res.report.add("arcs_checked", std::to_string(val.arcs_checked));
  res.report.add("valid", yn(val.ok));
  if (!val.issues.empty()) {
    Table& t = res.report.table("issues", {"severity", "code", "message"});
    for (const auto& i : val.issues) t.rows.push_back({i.severity, i.code, i.message});
  }
  if (!val.ok) {
    res.exit_code = 1;
    return res;
  }

  auto m = transition_matrix(sys);
  FiniteMatrix sub;
  if (sys->finite()) {
    sub = submatrix(*m, m->prefix_at(0));
  } else {
    // Mixing evidence lives on the strongly connected core around the base
    // arc; the sweep fringe always has rows that exit the truncation.
    FiniteMatrix reach = truncation(*m, pick_base(*sys, cfg), cfg.depth);
    int base_local = reach.local(pick_base(*sys, cfg));
    std::vector<ArcId> core;
    for (const auto& comp : strongly_connected_components(reach.rows)) {
      if (std::find(comp.begin(), comp.end(), base_local) == comp.end()) continue;
      for (int k : comp) core.push_back(reach.index[static_cast<std::size_t>(k)]);
      break;
    }
    std::sort(core.begin(), core.end());
    sub = submatrix(*m, core);
  }
  res.report.add("arcs", std::to_string(sub.size()));
  res.report.add("edges", std::to_string(sub.nnz()));

  MixingCertificate mc = mixing_check(sub, cfg.horizon);
  res.report.add("irreducible", yn(mc.irreducible));
  res.report.add("period", std::to_string(mc.period));
  res.report.add("aperiodic", yn(mc.aperiodic));
  res.report.add("leo_witness", std::to_string(mc.leo_witness));
  if (!mc.note.empty()) res.report.add("note", mc.note);
  if (!sys->finite())
    res.report.add("caveat", "truncation evidence only; the full object is not decidable here");
  return res;
}

CommandResult cmd_entropy(const JobConfig& cfg) {
  CommandResult res;
  auto sys = build_system(cfg);
  auto m = transition_matrix(sys);
  ArcId base = pick_base(*sys, cfg);
  EntropyEstimate est = gurevich_entropy(*m, base, cfg.depth, 0.0);

  res.report.add("family", sys->family());
  res.report.add("base", sys->arcs().label(base));
  res.report.add("lower_bound", format_double(est.value));
  res.report.add("status", to_string(est.status));
  res.report.add("method", est.method);
  res.report.add("events", std::to_string(est.events));

  Table& t = res.report.table("schedule", {"depth", "arcs", "lower_bound", "event", "irreducible"});
  for (const EntropyRow& row : est.rows)
    t.rows.push_back({std::to_string(row.depth), std::to_string(row.arcs),
                      format_double(row.value), yn(row.event), yn(row.irreducible)});
  return res;
}

CommandResult cmd_eigen(const JobConfig& cfg) {
  auto sys = build_system(cfg);
  return cfg.exact ? eigen_body<Rational>(cfg, sys) : eigen_body<double>(cfg, sys);
}

CommandResult cmd_slope_model(const JobConfig& cfg) {
  auto sys = build_system(cfg);
  return cfg.exact ? slope_body<Rational>(cfg, sys) : slope_body<double>(cfg, sys);
}

CommandResult cmd_horseshoe(const JobConfig& cfg) {
  CommandResult res;
  auto sys = build_system(cfg);
  auto m = transition_matrix(sys);
  ArcId j = pick_base(*sys, cfg);

  HorseshoeSequence seq = horseshoe_sequence(*m, j, cfg.count);
  std::vector<double> env = horseshoe_envelope(seq);

  res.report.add("family", sys->family());
  res.report.add("base", sys->arcs().label(j));
  res.report.add("n", std::to_string(cfg.count));
  res.report.add("best_bound", bound_cell(env.back()));

  Table& t = res.report.table("loops", {"n", "count", "bound", "envelope"});
  for (int k = 1; k <= cfg.count; ++k) {
    std::size_t kk = static_cast<std::size_t>(k);
    t.rows.push_back({std::to_string(k), seq.counts[kk].str(), bound_cell(seq.bounds[kk]),
                      bound_cell(env[kk])});
  }
  return res;
}

int run_command(const std::string& name, const JobConfig& cfg) {
  CommandResult res;
  try {
    if (name == "analyze")
      res = cmd_analyze(cfg);
    else if (name == "entropy")
      res = cmd_entropy(cfg);
    else if (name == "eigen")
      res = cmd_eigen(cfg);
    else if (name == "slope-model")
      res = cmd_slope_model(cfg);
    else if (name == "horseshoe")
      res = cmd_horseshoe(cfg);
    else
      throw std::invalid_argument("unknown command: " + name);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  write_report(res.report, cfg.format, cfg.out);
  return res.exit_code;
}

}  // namespace tamegraph
