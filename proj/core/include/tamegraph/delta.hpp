#pragma once

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tamegraph/refinement.hpp"
#include "tamegraph/subeigenvector.hpp"

namespace tamegraph {

// Cylinder length functional: Delta([i0...in]) = v_{in} / prod_{l<n} lambda_{il}
// with the per-arc ratios lambda_i = (Mv)_i / v_i.  The empty product is 1,
// so a one-letter word evaluates to its eigenvector entry.
template <typename S>
S delta(const CountableMatrix& m, const SubEigenvector<S>& v, const std::vector<ArcId>& word) {
  if (word.empty()) throw std::invalid_argument("delta of an empty word");
  if (!is_admissible(m, word)) throw std::invalid_argument("delta of an inadmissible word");
  S value = v.entry(word.back());
  for (std::size_t k = 0; k + 1 < word.size(); ++k) value = value / row_ratio(m, v, word[k]);
  return value;
}

template <typename S>
struct WeightedWord {
  CylinderWord word;
  S delta_value{};
};

namespace detail {

// g(i, k) = sum of Delta over all admissible k-step extensions of [i];
// g(i, 0) = v_i and g(i, k) = sum_j g(j, k-1) / lambda_i.  The refinement
// identity says g(i, k) = v_i for every k; computing it honestly is the test.
template <typename S>
S delta_level_sum(const CountableMatrix& m, const SubEigenvector<S>& v, ArcId i, int k,
                  std::map<std::pair<ArcId, int>, S>& memo) {
  if (k == 0) return v.entry(i);
  auto key = std::make_pair(i, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  S acc{};
  for (ArcId j : m.successors(i)) acc += delta_level_sum(m, v, j, k - 1, memo);
  acc = acc / row_ratio(m, v, i);
  memo.emplace(key, acc);
  return acc;
}

}  // namespace detail

// Sum of Delta over every level-n word starting at arc i.
template <typename S>
S delta_start_sum(const CountableMatrix& m, const SubEigenvector<S>& v, ArcId i, int n) {
  if (n < 0) throw std::invalid_argument("level must be non-negative");
  std::map<std::pair<ArcId, int>, S> memo;
  return detail::delta_level_sum(m, v, i, n, memo);
}

// Measure of a union of cylinders at refinement level n: the sum of Delta
// over all level-n words extending the given words.  Every word must have
// length <= n+1; a cylinder of level m contributes through its n-m step
// extensions.
template <typename S>
S arc_measure_n(const CountableMatrix& m, const SubEigenvector<S>& v,
                const std::vector<CylinderWord>& gamma, int n) {
  S acc{};
  std::map<std::pair<ArcId, int>, S> memo;
  for (const CylinderWord& w : gamma) {
    if (w.word.empty() || static_cast<int>(w.word.size()) > n + 1)
      throw std::invalid_argument("cylinder level exceeds the measure level; not cylinder-aligned");
    int steps = n + 1 - static_cast<int>(w.word.size());
    S tail = detail::delta_level_sum(m, v, w.word.back(), steps, memo);
    // Delta(w . extension) telescopes to Delta-prefix times the tail sum
    // normalized by the last entry.
    S prefix = delta(m, v, w.word);
    acc += prefix * tail / v.entry(w.word.back());
  }
  return acc;
}

template <typename S>
struct DeltaIdentityReport {
  bool refinement_ok = false;  // children sum back to the parent
  bool shift_ok = false;       // dropping the head multiplies by lambda_{i0}
  S word_delta{};
  S children_sum{};
  S shifted_delta{};
};

// Checks the two cylinder identities on one word: the sum of Delta over all
// one-letter extensions equals Delta of the word, and Delta of the shifted
// word equals lambda_{i0} times Delta of the word.
template <typename S>
DeltaIdentityReport<S> delta_identities_check(const CountableMatrix& m, const SubEigenvector<S>& v,
                                              const std::vector<ArcId>& word, double tol = 1e-12) {
  DeltaIdentityReport<S> rep;
  rep.word_delta = delta(m, v, word);
  S children{};
  for (ArcId j : m.successors(word.back())) {
    std::vector<ArcId> child = word;
    child.push_back(j);
    children += delta(m, v, child);
  }
  rep.children_sum = children;
  auto close = [&](const S& a, const S& b) {
    if constexpr (scalar_traits<S>::exact) {
      return a == b;
    } else {
      double da = scalar_traits<S>::to_double(a), db = scalar_traits<S>::to_double(b);
      double scale = std::abs(da) > 1.0 ? std::abs(da) : 1.0;
      return std::abs(da - db) <= tol * scale;
    }
  };
  rep.refinement_ok = close(children, rep.word_delta);
  if (word.size() >= 2) {
    std::vector<ArcId> shifted(word.begin() + 1, word.end());
    rep.shifted_delta = delta(m, v, shifted);
    rep.shift_ok = close(rep.shifted_delta, row_ratio(m, v, word.front()) * rep.word_delta);
  } else {
    rep.shifted_delta = rep.word_delta;
    rep.shift_ok = true;  // nothing to shift
  }
  return rep;
}

// max over level-n words (letters restricted to the given arc set) of Delta,
// for n = 0..levels.  DP over last letters: extending by j divides by
// lambda_i v_i and multiplies by v_j.
template <typename S>
std::vector<S> max_delta_profile(const CountableMatrix& m, const std::vector<ArcId>& arcs,
                                 const SubEigenvector<S>& v, int levels) {
  if (levels < 0) throw std::invalid_argument("levels must be non-negative");
  std::set<ArcId> universe(arcs.begin(), arcs.end());
  std::map<ArcId, S> best;  // max Delta over words ending at the key arc
  S overall{};
  bool first = true;
  for (ArcId a : arcs) {
    best.emplace(a, v.entry(a));
    if (first || v.entry(a) > overall) overall = v.entry(a);
    first = false;
  }
  std::vector<S> profile = {overall};
  for (int n = 1; n <= levels; ++n) {
    std::map<ArcId, S> next;
    for (const auto& [i, d] : best) {
      S scaled = d / (row_ratio(m, v, i) * v.entry(i));
      for (ArcId j : m.successors(i)) {
        if (!universe.count(j)) continue;
        S cand = scaled * v.entry(j);
        auto it = next.find(j);
        if (it == next.end())
          next.emplace(j, cand);
        else if (cand > it->second)
          it->second = cand;
      }
    }
    if (next.empty()) {
      profile.push_back(S{});
      best.clear();
      continue;
    }
    bool f2 = true;
    S top{};
    for (const auto& [j, d] : next) {
      if (f2 || d > top) top = d;
      f2 = false;
    }
    profile.push_back(top);
    best = std::move(next);
  }
  return profile;
}

}  // namespace tamegraph
