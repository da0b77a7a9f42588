#include "tamegraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tamegraph {
namespace {

// Iterative Tarjan; recursion depth would overflow on long chains.
struct TarjanState {
  const std::vector<std::vector<int>>& rows;
  std::vector<int> index, low, on_stack;
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  explicit TarjanState(const std::vector<std::vector<int>>& r)
      : rows(r), index(r.size(), -1), low(r.size(), 0), on_stack(r.size(), 0) {}

  void run(int root) {
    struct Frame {
      int node;
      std::size_t child;
    };
    std::vector<Frame> frames;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < rows[f.node].size()) {
        int next = rows[f.node][f.child++];
        if (index[next] == -1) {
          index[next] = low[next] = counter++;
          stack.push_back(next);
          on_stack[next] = 1;
          frames.push_back({next, 0});
        } else if (on_stack[next]) {
          low[f.node] = std::min(low[f.node], index[next]);
        }
      } else {
        int node = f.node;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().node] = std::min(low[frames.back().node], low[node]);
        if (low[node] == index[node]) {
          std::vector<int> comp;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
            if (w == node) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
      }
    }
  }
};

struct Block {
  std::vector<int> nodes;              // positions in the parent matrix
  std::vector<std::vector<int>> adj;   // block-local successor lists
  std::size_t edges = 0;
};

Block extract_block(const std::vector<std::vector<int>>& rows, const std::vector<int>& comp) {
  Block b;
  b.nodes = comp;
  std::unordered_map<int, int> loc;
  loc.reserve(comp.size() * 2);
  for (std::size_t k = 0; k < comp.size(); ++k) loc.emplace(comp[k], static_cast<int>(k));
  b.adj.resize(comp.size());
  for (std::size_t k = 0; k < comp.size(); ++k) {
    for (int t : rows[static_cast<std::size_t>(comp[k])]) {
      auto it = loc.find(t);
      if (it != loc.end()) {
        b.adj[k].push_back(it->second);
        ++b.edges;
      }
    }
  }
  return b;
}

bool has_self_loop(const Block& b) {
  for (std::size_t k = 0; k < b.adj.size(); ++k)
    for (int t : b.adj[k])
      if (t == static_cast<int>(k)) return true;
  return false;
}

struct CwResult {
  double lower = 0.0, upper = 0.0;
  std::int64_t iterations = 0;
  bool converged = false;
};

// Collatz-Wielandt bracket via power iteration on A+I (primitive whenever the
// block is strongly connected, so the bracket closes).
CwResult cw_solve(const std::vector<std::vector<int>>& adj, double tol, std::int64_t budget) {
  std::size_t n = adj.size();
  std::vector<double> v(n, 1.0), w(n, 0.0);
  CwResult res;
  while (res.iterations < budget) {
    ++res.iterations;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (int t : adj[i]) s += v[static_cast<std::size_t>(t)];
      w[i] = s;
      double ratio = s / v[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    res.lower = lo;
    res.upper = hi;
    if (hi - lo < tol) {
      res.converged = true;
      break;
    }
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] += v[i];
      vmax = std::max(vmax, w[i]);
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / vmax;
  }
  return res;
}

// True when removing gate makes the block acyclic, i.e. every cycle passes
// through gate.
bool is_gate(const Block& b, int gate) {
  std::size_t n = b.adj.size();
  std::vector<int> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(i) == gate) continue;
    for (int t : b.adj[i])
      if (t != gate) ++indeg[static_cast<std::size_t>(t)];
  }
  std::vector<int> queue;
  queue.reserve(n);
  std::size_t seen = 1;  // the gate counts as removed
  for (std::size_t i = 0; i < n; ++i)
    if (static_cast<int>(i) != gate && indeg[i] == 0) queue.push_back(static_cast<int>(i));
  for (std::size_t q = 0; q < queue.size(); ++q) {
    ++seen;
    for (int t : b.adj[static_cast<std::size_t>(queue[q])]) {
      if (t == gate) continue;
      if (--indeg[static_cast<std::size_t>(t)] == 0) queue.push_back(t);
    }
  }
  return seen == n;
}

struct RenewalResult {
  double lower = 0.0, upper = 0.0;
  std::int64_t iterations = 0;
  bool ok = false;
};

// Every cycle passes the gate, so the block minus the gate is acyclic, the
// first-return series F(z) = sum_n f(n) z^n is a polynomial, and the spectral
// radius is the unique r > 0 with F(1/r) = 1 (F is strictly decreasing in r).
// Counts are tracked as normalized doubles plus a running log scale; only
// magnitudes matter for the root.
RenewalResult renewal_solve(const Block& b, int gate) {
  std::size_t n = b.adj.size();
  std::vector<double> val(n, 0.0), nextval(n, 0.0);
  std::vector<int> active, next_active;
  std::vector<int> touched(n, 0);
  std::vector<std::pair<std::int64_t, double>> logf;  // (length, log f(length))

  val[static_cast<std::size_t>(gate)] = 1.0;
  active.push_back(gate);
  double logscale = 0.0;
  std::int64_t steps = 0;
  while (!active.empty()) {
    ++steps;
    double freturn = 0.0;
    next_active.clear();
    for (int x : active) {
      double vx = val[static_cast<std::size_t>(x)];
      for (int t : b.adj[static_cast<std::size_t>(x)]) {
        if (t == gate) {
          freturn += vx;
          continue;
        }
        if (!touched[static_cast<std::size_t>(t)]) {
          touched[static_cast<std::size_t>(t)] = 1;
          next_active.push_back(t);
          nextval[static_cast<std::size_t>(t)] = 0.0;
        }
        nextval[static_cast<std::size_t>(t)] += vx;
      }
    }
    if (freturn > 0.0) logf.emplace_back(steps, std::log(freturn) + logscale);
    for (int x : active) val[static_cast<std::size_t>(x)] = 0.0;
    active.swap(next_active);
    double sum = 0.0;
    for (int x : active) {
      val[static_cast<std::size_t>(x)] = nextval[static_cast<std::size_t>(x)];
      touched[static_cast<std::size_t>(x)] = 0;
      sum += val[static_cast<std::size_t>(x)];
    }
    if (sum > 0.0) {
      for (int x : active) val[static_cast<std::size_t>(x)] /= sum;
      logscale += std::log(sum);
    }
  }
  RenewalResult res;
  res.iterations = steps;
  if (logf.empty()) return res;  // gate not on any cycle; caller falls back

  auto series = [&](double r) {
    double lr = std::log(r);
    double s = 0.0;
    for (const auto& [len, lf] : logf) s += std::exp(lf - static_cast<double>(len) * lr);
    return s;
  };
  double lo = 1e-3;
  while (series(lo) < 1.0) {
    lo *= 0.5;
    if (lo < 1e-300) return res;
  }
  double hi = 2.0;
  while (series(hi) >= 1.0) {
    hi *= 2.0;
    if (hi > 1e300) return res;
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    if (series(mid) >= 1.0)
      lo = mid;
    else
      hi = mid;
  }
  // Pad for floating point noise in the series evaluation.
  res.lower = lo * (1.0 - 1e-12);
  res.upper = hi * (1.0 + 1e-12);
  res.ok = true;
  return res;
}

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& rows) {
  TarjanState st(rows);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (st.index[i] == -1) st.run(static_cast<int>(i));
  std::reverse(st.comps.begin(), st.comps.end());
  return st.comps;
}

SpectralBounds spectral_radius_local(const std::vector<std::vector<int>>& rows,
                                     const SpectralOptions& opt) {
  SpectralBounds out;
  if (rows.empty()) return out;
  auto comps = strongly_connected_components(rows);
  out.irreducible = comps.size() == 1;
  bool used_renewal = false, used_cw = false;
  for (const auto& comp : comps) {
    Block b = extract_block(rows, comp);
    if (b.edges == 0) continue;
    if (comp.size() == 1 && !has_self_loop(b)) continue;
    double lo = 0.0, hi = 0.0;
    bool certified = false;
    if (comp.size() > opt.gate_threshold) {
      // Candidate gates: high fan-in or fan-out nodes first.
      std::vector<int> indeg(b.adj.size(), 0), outdeg(b.adj.size(), 0);
      for (std::size_t i = 0; i < b.adj.size(); ++i) {
        outdeg[i] = static_cast<int>(b.adj[i].size());
        for (int t : b.adj[i]) ++indeg[static_cast<std::size_t>(t)];
      }
      auto best = [&](auto score) {
        int bi = 0;
        long bs = -1;
        for (std::size_t i = 0; i < b.adj.size(); ++i) {
          long s = score(i);
          if (s > bs) {
            bs = s;
            bi = static_cast<int>(i);
          }
        }
        return bi;
      };
      std::vector<int> candidates = {
          best([&](std::size_t i) { return static_cast<long>(indeg[i]) * outdeg[i]; }),
          best([&](std::size_t i) { return static_cast<long>(indeg[i]); }),
          best([&](std::size_t i) { return static_cast<long>(outdeg[i]); }),
          0};
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (int g : candidates) {
        if (!is_gate(b, g)) continue;
        RenewalResult r = renewal_solve(b, g);
        out.iterations += r.iterations;
        if (r.ok) {
          lo = r.lower;
          hi = r.upper;
          certified = true;
          used_renewal = true;
        }
        break;
      }
    }
    if (!certified) {
      CwResult r = cw_solve(b.adj, opt.tol, opt.max_iterations);
      out.iterations += r.iterations;
      lo = r.lower;
      hi = r.upper;
      certified = r.converged;
      used_cw = true;
    }
    if (lo > out.lower) {
      out.lower = lo;
      out.upper = hi;
      out.certified = certified;
    }
  }
  out.value = 0.5 * (out.lower + out.upper);
  if (used_renewal && used_cw)
    out.method = "mixed";
  else if (used_renewal)
    out.method = "first-return-root";
  else if (used_cw)
    out.method = "collatz-wielandt";
  return out;
}

SpectralBounds spectral_radius(const FiniteMatrix& a, const SpectralOptions& opt) {
  return spectral_radius_local(a.rows, opt);
}

PerronPair perron_vector(const FiniteMatrix& a, double tol) {
  auto comps = strongly_connected_components(a.rows);
  if (comps.size() != 1)
    throw std::domain_error("perron_vector requires an irreducible matrix");
  if (a.nnz() == 0) throw std::domain_error("perron_vector requires at least one edge");

  std::size_t n = a.size();
  std::vector<double> v(n, 1.0 / static_cast<double>(n)), w(n, 0.0);
  PerronPair out;
  const std::int64_t budget = 5000000;
  double lo = 0.0, hi = 0.0;
  while (out.iterations < budget) {
    ++out.iterations;
    lo = std::numeric_limits<double>::infinity();
    hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (int t : a.rows[i]) s += v[static_cast<std::size_t>(t)];
      w[i] = s;
      double ratio = s / v[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (hi - lo < tol) break;
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] += v[i];
      vmax = std::max(vmax, w[i]);
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / vmax;
  }
  if (hi - lo >= tol * 16)
    throw std::runtime_error("perron_vector did not converge within the iteration budget");
  out.lambda = 0.5 * (lo + hi);
  if (out.lambda <= 1.0 + tol)
    throw std::domain_error("Perron root is not strictly above 1");
  double sum = 0.0;
  for (double x : v) sum += x;
  out.vec.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.vec[i] = v[i] / sum;
  out.residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (int t : a.rows[i]) s += out.vec[static_cast<std::size_t>(t)];
    out.residual = std::max(out.residual, std::abs(s - out.lambda * out.vec[i]));
  }
  return out;
}

}  // namespace tamegraph
