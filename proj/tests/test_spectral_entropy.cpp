#include <cmath>
#include <limits>

#include "doctest.h"
#include "oracles.hpp"
#include "tamegraph/builtins.hpp"
#include "tamegraph/gurevich.hpp"
#include "tamegraph/horseshoe.hpp"
#include "tamegraph/refinement.hpp"
#include "tamegraph/spectral.hpp"

using namespace tamegraph;

namespace {
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

FiniteMatrix whole(const CountableMatrix& m) { return submatrix(m, m.prefix_at(0)); }
}  // namespace

TEST_CASE("strongly connected components come out sorted and in topological order") {
  // chain 0 -> 1 -> 2
  auto chain = strongly_connected_components({{1}, {2}, {}});
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == std::vector<int>{0});
  CHECK(chain[1] == std::vector<int>{1});
  CHECK(chain[2] == std::vector<int>{2});

  // 2-cycle plus a sink hanging off it
  auto mixed = strongly_connected_components({{1}, {0, 2}, {}});
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0] == std::vector<int>{0, 1});
  CHECK(mixed[1] == std::vector<int>{2});
}

TEST_CASE("spectral radius of the golden-mean matrix") {
  auto m = transition_matrix(make_golden_mean());
  SpectralBounds b = spectral_radius(whole(*m));
  CHECK(b.irreducible);
  CHECK(b.certified);
  CHECK(std::abs(b.value - 1.6180339887498949) <= 1e-9);
  CHECK(b.lower <= b.value);
  CHECK(b.value <= b.upper + 1e-15);
  // the bracket is certified: truth lies inside it
  CHECK(b.lower <= kPhi + 1e-12);
  CHECK(b.upper >= kPhi - 1e-12);
}

TEST_CASE("spectral radius of full shifts, permutations, nilpotents") {
  for (int n : {2, 3, 5}) {
    auto m = transition_matrix(make_full_shift(n));
    SpectralBounds b = spectral_radius(whole(*m));
    CHECK(b.irreducible);
    CHECK(std::abs(b.value - n) <= 1e-9);
  }
  auto perm = ExplicitMatrix::from_dense({{0, 1}, {1, 0}});
  SpectralBounds pb = spectral_radius(whole(*perm));
  CHECK(pb.irreducible);
  CHECK(std::abs(pb.value - 1.0) <= 1e-9);

  auto nil = ExplicitMatrix::from_dense({{0, 1}, {0, 0}});
  CHECK(spectral_radius(whole(*nil)).value == 0.0);

  auto blocks = ExplicitMatrix::from_dense({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  SpectralBounds bb = spectral_radius(whole(*blocks));
  CHECK(!bb.irreducible);
  CHECK(std::abs(bb.value - 2.0) <= 1e-9);
}

TEST_CASE("perron vector on the golden mean, refusals elsewhere") {
  auto m = transition_matrix(make_golden_mean());
  PerronPair p = perron_vector(whole(*m));
  CHECK(std::abs(p.lambda - kPhi) <= 1e-9);
  REQUIRE(p.vec.size() == 2);
  CHECK(p.vec[0] > 0.0);
  CHECK(p.vec[1] > 0.0);
  CHECK(std::abs(p.vec[0] + p.vec[1] - 1.0) <= 1e-12);
  CHECK(std::abs(p.vec[0] / p.vec[1] - kPhi) <= 1e-8);

  auto blocks = ExplicitMatrix::from_dense({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(perron_vector(whole(*blocks)), std::domain_error);
  auto perm = ExplicitMatrix::from_dense({{0, 1}, {1, 0}});
  CHECK_THROWS_AS(perron_vector(whole(*perm)), std::domain_error);  // root is 1
}

TEST_CASE("periodic point traces on the golden mean are the Lucas numbers") {
  auto m = transition_matrix(make_golden_mean());
  auto report = periodic_growth_report(*m, m->prefix_at(0), 8);
  REQUIRE(report.size() == 8);
  const long lucas[] = {1, 3, 4, 7, 11, 18, 29, 47};
  for (int k = 0; k < 8; ++k) {
    CHECK(report[k].n == k + 1);
    CHECK(report[k].trace == lucas[k]);
    CHECK(report[k].bound == doctest::Approx(std::log(static_cast<double>(lucas[k])) / (k + 1)));
  }
  CHECK(std::abs(report.back().bound - std::log(kPhi)) <= 1e-3);
}

TEST_CASE("mixing certificates") {
  auto tent = transition_matrix(make_full_shift(2));
  MixingCertificate c = mixing_check(whole(*tent), 16);
  CHECK(c.irreducible);
  CHECK(c.period == 1);
  CHECK(c.aperiodic);
  CHECK(c.leo_witness == 1);
  CHECK(c.note.empty());

  auto golden = transition_matrix(make_golden_mean());
  MixingCertificate g = mixing_check(whole(*golden), 16);
  CHECK(g.irreducible);
  CHECK(g.period == 1);
  CHECK(g.leo_witness == 2);
  CHECK(g.note.empty());

  auto perm = ExplicitMatrix::from_dense({{0, 1}, {1, 0}});
  MixingCertificate p = mixing_check(whole(*perm), 16);
  CHECK(p.irreducible);
  CHECK(p.period == 2);
  CHECK(!p.aperiodic);
  CHECK(p.leo_witness == -1);
  CHECK(p.note == "no all-positive power up to the horizon");

  auto nil = ExplicitMatrix::from_dense({{0, 1}, {0, 0}});
  MixingCertificate q = mixing_check(whole(*nil), 16);
  CHECK(!q.irreducible);
  CHECK(q.period == 0);  // acyclic
  CHECK(q.note == "not irreducible");
}

TEST_CASE("entropy saturates on finite systems at the log spectral radius") {
  auto golden = transition_matrix(make_golden_mean());
  EntropyEstimate g = gurevich_entropy(*golden, golden->prefix_at(0)[0], 32);
  CHECK(g.status == EntropyStatus::saturated);
  CHECK(std::abs(g.value - std::log(kPhi)) <= 1e-9);
  CHECK(to_string(g.status) == "saturated");

  auto full = transition_matrix(make_full_shift(2));
  EntropyEstimate f = gurevich_entropy(*full, full->prefix_at(0)[0], 32);
  CHECK(f.status == EntropyStatus::saturated);
  CHECK(std::abs(f.value - std::log(2.0)) <= 1e-9);
}

TEST_CASE("rule-family entropy bounds are nondecreasing certified lower bounds") {
  auto sys = make_example1();
  auto m = transition_matrix(sys);
  ArcId base = *resolve_arc_label(*sys, "b");

  EntropyEstimate est = gurevich_entropy(*m, base, 12, 0.0);
  CHECK(est.status == EntropyStatus::budget_exhausted);
  CHECK(est.events >= 3);
  REQUIRE(!est.rows.empty());
  double prev = -std::numeric_limits<double>::infinity();
  for (const auto& row : est.rows) {
    CHECK(row.value >= prev);  // certified bounds never regress
    prev = row.value;
    CHECK(row.value <= std::log(2.0) + 1e-6);
  }
  CHECK(est.value >= 0.5);

  // deeper budgets never lower the certified bound
  double last = 0.0;
  for (int depth : {4, 6, 8, 10, 12}) {
    double v = gurevich_entropy(*m, base, depth, 0.0).value;
    CHECK(v >= last - 1e-15);
    last = v;
  }
}

TEST_CASE("a coarse tolerance stops the sweep at a plateau without upgrading the value") {
  auto sys = make_example1();
  auto m = transition_matrix(sys);
  ArcId base = *resolve_arc_label(*sys, "b");
  EntropyEstimate est = gurevich_entropy(*m, base, 200, 0.5);
  CHECK(est.status == EntropyStatus::converged);
  CHECK(est.rows.size() < 200);
  CHECK(est.value <= std::log(2.0) + 1e-6);  // still just a lower bound
}

TEST_CASE("horseshoe counts on the golden mean grow like Fibonacci") {
  auto m = transition_matrix(make_golden_mean());
  ArcId i0 = m->prefix_at(0)[0];
  HorseshoeSequence seq = horseshoe_sequence(*m, i0, 12);
  REQUIRE(seq.counts.size() == 13);
  auto diag = diagonal_counts(*m, i0, 12);
  for (int k = 0; k <= 12; ++k) CHECK(seq.counts[k] == diag[k]);
  CHECK(seq.counts[12] == 233);  // F(13)

  auto env = horseshoe_envelope(seq);
  REQUIRE(env.size() == seq.bounds.size());
  for (std::size_t k = 2; k < env.size(); ++k) CHECK(env[k] >= env[k - 1] - 1e-15);
  CHECK(env.back() <= std::log(kPhi) + 1e-12);
  CHECK(env.back() >= 0.45);
}

TEST_CASE("horseshoe witnesses are exactly the counted loops") {
  auto m = transition_matrix(make_golden_mean());
  ArcId i0 = m->prefix_at(0)[0];
  for (int n : {1, 2, 5, 8}) {
    RefinementResult wit = horseshoe_witness(*m, i0, n);
    CHECK(!wit.truncated);
    CHECK(wit.words.size() ==
          static_cast<std::size_t>(power_entry(*m, i0, i0, n).convert_to<long>()));
    for (const auto& w : wit.words) {
      REQUIRE(w.word.size() == static_cast<std::size_t>(n) + 1);
      CHECK(w.word.front() == i0);
      CHECK(w.word.back() == i0);
      CHECK(is_admissible(*m, w.word));
    }
  }
}

TEST_CASE("alternating matrix has loops only at even lengths") {
  auto perm = ExplicitMatrix::from_dense({{0, 1}, {1, 0}});
  HorseshoeSequence seq = horseshoe_sequence(*perm, 0, 6);
  for (int k = 1; k <= 6; k += 2) {
    CHECK(seq.counts[k] == 0);
    CHECK(std::isinf(seq.bounds[k]));
  }
  for (int k = 2; k <= 6; k += 2) {
    CHECK(seq.counts[k] == 1);
    CHECK(seq.bounds[k] == 0.0);
  }
  auto env = horseshoe_envelope(seq);
  CHECK(env.back() == 0.0);
}
