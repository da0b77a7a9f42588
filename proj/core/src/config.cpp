#include "tamegraph/config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tamegraph/builtins.hpp"

namespace tamegraph {
namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument("config: " + msg); }

void check_keys(const YAML::Node& node, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& kv : node) {
    std::string key = kv.first.as<std::string>();
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) bad("unknown key \"" + key + "\" in " + where);
  }
}

BuiltinSpec parse_builtin(const YAML::Node& b) {
  BuiltinSpec spec;
  if (b.IsScalar()) {
    spec.family = b.as<std::string>();
    return spec;
  }
  if (!b.IsMap()) bad("builtin must be a family name or a mapping");
  check_keys(b, {"family", "param"}, "system.builtin");
  if (!b["family"]) bad("builtin needs a family");
  spec.family = b["family"].as<std::string>();
  if (b["param"]) spec.param = b["param"].as<int>();
  return spec;
}

ExplicitGraphSpec parse_graph(const YAML::Node& sys) {
  ExplicitGraphSpec g;
  if (!sys["vertices"] || !sys["arcs"] || !sys["map"])
    bad("explicit system needs vertices, arcs and map");
  for (const auto& v : sys["vertices"]) g.vertices.push_back(v.as<std::string>());
  for (const auto& a : sys["arcs"]) {
    if (!a.IsMap() || !a["id"] || !a["from"] || !a["to"])
      bad("each arc needs id, from and to");
    check_keys(a, {"id", "from", "to"}, "system.arcs entry");
    g.arcs.push_back({a["id"].as<std::string>(), a["from"].as<std::string>(),
                      a["to"].as<std::string>()});
  }
  const YAML::Node& paths = sys["map"];
  if (!paths.IsMap()) bad("map must be a mapping from arc id to a step list");
  for (const auto& kv : paths) {
    std::string arc = kv.first.as<std::string>();
    std::vector<ExplicitSystem::StepSpec> steps;
    for (const auto& st : kv.second) {
      ExplicitSystem::StepSpec step;
      if (st.IsScalar()) {
        step.arc = st.as<std::string>();
      } else if (st.IsMap()) {
        check_keys(st, {"arc", "dir"}, "map step of arc " + arc);
        if (!st["arc"]) bad("map step of arc " + arc + " needs an arc");
        step.arc = st["arc"].as<std::string>();
        if (st["dir"]) {
          std::string dir = st["dir"].as<std::string>();
          if (dir == "rev")
            step.reversed = true;
          else if (dir != "fwd")
            bad("dir must be fwd or rev, got \"" + dir + "\"");
        }
      } else {
        bad("map step of arc " + arc + " must be an arc id or {arc, dir}");
      }
      steps.push_back(std::move(step));
    }
    g.map.emplace_back(std::move(arc), std::move(steps));
  }
  return g;
}

void parse_job(const YAML::Node& job, JobConfig& cfg) {
  if (!job.IsMap()) bad("job must be a mapping");
  check_keys(job,
             {"exact", "tol", "depth", "horizon", "budget", "epsilon", "count", "probe_levels",
              "lambda", "base_arc", "format", "out"},
             "job");
  if (job["exact"]) cfg.exact = job["exact"].as<bool>();
  if (job["tol"]) cfg.tol = job["tol"].as<double>();
  if (job["depth"]) cfg.depth = job["depth"].as<int>();
  if (job["horizon"]) cfg.horizon = job["horizon"].as<int>();
  if (job["budget"]) cfg.budget = job["budget"].as<long>();
  if (job["epsilon"]) cfg.epsilon = job["epsilon"].as<double>();
  if (job["count"]) cfg.count = job["count"].as<int>();
  if (job["probe_levels"]) cfg.probe_levels = job["probe_levels"].as<int>();
  if (job["lambda"]) cfg.lambda = job["lambda"].as<std::string>();
  if (job["base_arc"]) cfg.base_arc = job["base_arc"].as<std::string>();
  if (job["format"]) cfg.format = job["format"].as<std::string>();
  if (job["out"]) cfg.out = job["out"].as<std::string>();
}

void validate_config(const JobConfig& cfg) {
  if (cfg.builtin && cfg.graph) bad("exactly one map source; got builtin and explicit tables");
  if (!cfg.builtin && !cfg.graph) bad("system needs a builtin or explicit tables");
  if (!(cfg.tol > 0)) bad("tol must be positive");
  if (!(cfg.epsilon > 0)) bad("epsilon must be positive");
  if (cfg.depth < 0) bad("depth must be non-negative");
  if (cfg.horizon < 0) bad("horizon must be non-negative");
  if (cfg.budget <= 0) bad("budget must be positive");
  if (cfg.count < 1) bad("count must be at least 1");
  if (cfg.probe_levels < 1) bad("probe_levels must be at least 1");
  if (cfg.format != "csv" && cfg.format != "tree")
    bad("format must be csv or tree, got \"" + cfg.format + "\"");
}

}  // namespace

JobConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    bad(std::string("parse error: ") + e.what());
  }
  if (!root.IsMap()) bad("top level must be a mapping with a system entry");
  try {
    check_keys(root, {"system", "job"}, "top level");
    if (!root["system"]) bad("missing system entry");

    JobConfig cfg;
    const YAML::Node& sys = root["system"];
    if (!sys.IsMap()) bad("system must be a mapping");
    check_keys(sys, {"builtin", "vertices", "arcs", "map"}, "system");
    if (sys["builtin"]) cfg.builtin = parse_builtin(sys["builtin"]);
    if (sys["vertices"] || sys["arcs"] || sys["map"]) cfg.graph = parse_graph(sys);
    if (root["job"]) parse_job(root["job"], cfg);
    validate_config(cfg);
    return cfg;
  } catch (const YAML::Exception& e) {
    // wrong value type for a known key, null keys and the like
    bad(std::string("schema violation: ") + e.what());
  }
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::shared_ptr<MapSystem> build_system(const JobConfig& cfg) {
  if (cfg.builtin) return make_builtin(cfg.builtin->family, cfg.builtin->param);
  if (cfg.graph)
    return std::make_shared<ExplicitSystem>(cfg.graph->vertices, cfg.graph->arcs, cfg.graph->map);
  throw std::invalid_argument("config: no map source");
}

}  // namespace tamegraph
