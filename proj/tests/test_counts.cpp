#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tamegraph/builtins.hpp"
#include "tamegraph/power_counts.hpp"
#include "tamegraph/truncation.hpp"

using namespace tamegraph;

TEST_CASE("interner round trips labels and keeps ids dense") {
  Interner in;
  CHECK(in.size() == 0);
  auto a = in.intern("alpha");
  auto b = in.intern("beta");
  CHECK(a == 0);
  CHECK(b == 1);
  CHECK(in.intern("alpha") == a);
  CHECK(in.size() == 2);
  CHECK(in.label(a) == "alpha");
  CHECK(in.find("beta") == b);
  CHECK(!in.find("gamma").has_value());
  CHECK(in.require("beta") == b);
  CHECK_THROWS_AS(in.require("gamma"), std::invalid_argument);
}

TEST_CASE("explicit matrix successors, predecessors, entries agree") {
  auto m = ExplicitMatrix::from_dense({{1, 1, 0}, {1, 0, 1}, {0, 0, 0}});
  CHECK(m->dimension() == 3);
  CHECK(m->successors(0) == std::vector<ArcId>{0, 1});
  CHECK(m->successors(2).empty());
  CHECK(m->predecessors(0) == std::vector<ArcId>{0, 1});
  CHECK(m->predecessors(2) == std::vector<ArcId>{1});
  CHECK(m->entry(1, 2));
  CHECK(!m->entry(2, 1));
  CHECK(m->finite());
  CHECK(m->prefix_at(0).size() == 3);
  CHECK(m->prefix_at(7).size() == 3);

  // every (i, j) pair: entry iff j in successors(i) iff i in predecessors(j)
  for (ArcId i = 0; i < 3; ++i)
    for (ArcId j = 0; j < 3; ++j) {
      auto s = m->successors(i);
      auto p = m->predecessors(j);
      bool via_s = std::find(s.begin(), s.end(), j) != s.end();
      bool via_p = std::find(p.begin(), p.end(), i) != p.end();
      CHECK(via_s == via_p);
      CHECK(via_s == m->entry(i, j));
    }
}

TEST_CASE("submatrix keeps only internal edges") {
  auto m = ExplicitMatrix::from_dense({{1, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  FiniteMatrix sub = submatrix(*m, {0, 2});
  REQUIRE(sub.size() == 2);
  CHECK(sub.rows[0] == std::vector<int>{0});  // 0 -> 1 dropped
  CHECK(sub.rows[1].empty());                 // 2 -> 1 dropped
  CHECK(sub.local(2) == 1);
  CHECK_THROWS_AS(sub.local(1), std::invalid_argument);
  CHECK_THROWS_AS(submatrix(*m, {0, 0}), std::invalid_argument);
}

TEST_CASE("power counts match dense matrix powers and DFS enumeration") {
  auto golden = transition_matrix(make_golden_mean());
  auto full3 = transition_matrix(make_full_shift(3));
  auto reducible = ExplicitMatrix::from_dense(
      {{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});

  const CountableMatrix* cases[] = {golden.get(), full3.get(), reducible.get()};
  for (const CountableMatrix* m : cases) {
    auto arcs = m->prefix_at(0);
    auto powers = oracle::dense_powers(oracle::dense_adjacency(*m, arcs), 12);
    for (int n = 0; n <= 12; ++n)
      for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = 0; j < arcs.size(); ++j)
          CHECK(power_entry(*m, arcs[i], arcs[j], n) == powers[n][i][j]);
    // DFS recount for a smaller window
    for (int n = 0; n <= 7; ++n)
      for (ArcId i : arcs)
        for (ArcId j : arcs)
          CHECK(power_entry(*m, i, j, n) == oracle::dfs_path_count(*m, i, j, n));
  }
}

TEST_CASE("golden-mean diagonal counts are the Fibonacci numbers") {
  auto m = transition_matrix(make_golden_mean());
  ArcId i0 = m->prefix_at(0)[0];
  auto diag = diagonal_counts(*m, i0, 40);
  // m00(n) = F(n+1) with F(1) = F(2) = 1
  BigInt f1 = 1, f2 = 1;
  CHECK(diag[0] == 1);
  for (int n = 1; n <= 40; ++n) {
    CHECK(diag[n] == f2);
    BigInt next = f1 + f2;
    f1 = f2;
    f2 = next;
  }
  CHECK(diag[40] == 165580141);
}

TEST_CASE("power_column levels agree with power_entry") {
  auto m = transition_matrix(make_golden_mean());
  auto arcs = m->prefix_at(0);
  ArcId j = arcs[0];
  auto levels = power_column(*m, j, 10);
  REQUIRE(levels.size() == 11);
  for (int n = 0; n <= 10; ++n) {
    for (ArcId i : arcs) {
      auto it = levels[n].find(i);
      BigInt got = it == levels[n].end() ? BigInt(0) : it->second;
      CHECK(got == power_entry(*m, i, j, n));
    }
  }
}

TEST_CASE("first returns satisfy the renewal recursion") {
  auto m = transition_matrix(make_golden_mean());
  ArcId i0 = m->prefix_at(0)[0];
  auto f = first_return_counts(*m, i0, 12);
  CHECK(f[0] == 0);
  CHECK(f[1] == 1);  // 0 -> 0
  CHECK(f[2] == 1);  // 0 -> 1 -> 0
  for (int n = 3; n <= 12; ++n) CHECK(f[n] == 0);

  auto diag = diagonal_counts(*m, i0, 12);
  for (int n = 1; n <= 12; ++n) {
    BigInt total = 0;
    for (int k = 1; k <= n; ++k) total += f[k] * diag[n - k];
    CHECK(total == diag[n]);
  }

  auto status = first_return_counts_status(*m, i0, 12);
  CHECK(status.counts == f);
  CHECK(status.exhausted);  // no interior state survives past length 2
}

TEST_CASE("truncation of a finite matrix saturates to the whole thing") {
  auto m = transition_matrix(make_full_shift(2));
  FiniteMatrix t = truncation(*m, m->prefix_at(0)[0], 5);
  CHECK(t.size() == 2);
  CHECK(t.nnz() == 4);

  TruncationSweep sweep(*m, m->prefix_at(0)[0], 5);
  sweep.step();  // admits the second arc
  CHECK(!sweep.saturated());
  sweep.step();  // nothing left
  CHECK(sweep.saturated());
  CHECK(sweep.cycle_possible_since_last_check());
  CHECK(!sweep.cycle_possible_since_last_check());  // flag resets
}

TEST_CASE("rule-family truncation matches an independent reachability walk") {
  auto sys = make_example1();
  auto m = transition_matrix(sys);
  ArcId base = *resolve_arc_label(*sys, "b");

  for (int depth : {0, 2, 4, 6}) {
    FiniteMatrix t = truncation(*m, base, depth);

    // independent: BFS over full successor rule, arcs filtered by prefix
    // membership, capped at `depth` expansion rounds
    std::set<ArcId> seen = {base};
    std::vector<ArcId> frontier = {base};
    for (int round = 1; round <= depth; ++round) {
      std::vector<ArcId> next;
      for (ArcId a : frontier)
        for (ArcId s : m->successors(a)) {
          if (!m->in_prefix(s, round)) continue;
          if (seen.insert(s).second) next.push_back(s);
        }
      frontier = std::move(next);
    }
    CHECK(t.index.size() == seen.size());
    for (ArcId a : t.index) CHECK(seen.count(a) == 1);

    // rows only reference admitted arcs, and match the rule matrix
    for (std::size_t k = 0; k < t.index.size(); ++k) {
      auto full = m->successors(t.index[k]);
      std::set<int> expect;
      for (ArcId s : full)
        if (seen.count(s)) expect.insert(t.local(s));
      std::set<int> got(t.rows[k].begin(), t.rows[k].end());
      CHECK(got == expect);
    }
  }
}

TEST_CASE("sweep frontier admits arcs only once and respects the prefix") {
  auto sys = make_example1();
  auto m = transition_matrix(sys);
  ArcId base = *resolve_arc_label(*sys, "b");
  TruncationSweep sweep(*m, base, 6);
  std::set<ArcId> all = {base};
  for (int t = 1; t <= 6; ++t) {
    const auto& added = sweep.step();
    for (ArcId a : added) {
      CHECK(m->in_prefix(a, t));
      CHECK(all.insert(a).second);  // never re-admitted
    }
  }
  CHECK(sweep.snapshot().index.size() == all.size());
  CHECK(!sweep.saturated());
}
