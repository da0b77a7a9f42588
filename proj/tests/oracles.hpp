#pragma once

// Test-side oracles, written independently of the library code under test:
// dense matrix powers and explicit DFS for path counts, direct interval-map
// formulas for the built-in realizations, and a Q(sqrt 5) scalar so the
// golden-mean eigendata can be checked exactly.

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tamegraph/countable_matrix.hpp"
#include "tamegraph/numeric.hpp"
#include "tamegraph/slope_model.hpp"

namespace oracle {

using tamegraph::ArcId;
using tamegraph::BigInt;
using tamegraph::Rational;

using DenseMat = std::vector<std::vector<BigInt>>;

inline DenseMat dense_adjacency(const tamegraph::CountableMatrix& m,
                                const std::vector<ArcId>& arcs) {
  std::size_t n = arcs.size();
  DenseMat a(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.entry(arcs[i], arcs[j])) a[i][j] = 1;
  return a;
}

inline DenseMat dense_mul(const DenseMat& x, const DenseMat& y) {
  std::size_t n = x.size();
  DenseMat z(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    }
  return z;
}

// powers[p] = a^p, p = 0..n
inline std::vector<DenseMat> dense_powers(const DenseMat& a, int n) {
  std::size_t dim = a.size();
  DenseMat id(dim, std::vector<BigInt>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) id[i][i] = 1;
  std::vector<DenseMat> out = {id};
  for (int p = 1; p <= n; ++p) out.push_back(dense_mul(out.back(), a));
  return out;
}

// Path count by explicit depth-first enumeration; only for small n.
inline BigInt dfs_path_count(const tamegraph::CountableMatrix& m, ArcId i, ArcId j, int n) {
  if (n == 0) return i == j ? 1 : 0;
  BigInt total = 0;
  for (ArcId s : m.successors(i)) total += dfs_path_count(m, s, j, n - 1);
  return total;
}

// Interval realization on [0,1]: vertex cuts and the closed-form map.
struct IntervalOracle {
  std::vector<double> cuts;  // increasing, cuts.front() = 0, cuts.back() = 1
  std::function<double(double)> f;

  // Arc index whose open interval contains x; -1 when x sits on a cut.
  int letter(double x, double margin = 0.0) const {
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      if (x > cuts[k] + margin && x < cuts[k + 1] - margin) return static_cast<int>(k);
    }
    return -1;
  }
};

inline IntervalOracle tent_oracle() {
  return {{0.0, 0.5, 1.0}, [](double x) { return x <= 0.5 ? 2.0 * x : 2.0 - 2.0 * x; }};
}

inline IntervalOracle full_shift3_oracle() {
  return {{0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0}, [](double x) {
            if (x <= 1.0 / 3.0) return 3.0 * x;
            if (x <= 2.0 / 3.0) return 2.0 - 3.0 * x;
            return 3.0 * x - 2.0;
          }};
}

// Golden-mean map: cut at a = phi - 1, decreasing onto [0,1] on the left arc,
// increasing onto [0,a] on the right arc, both at slope phi.
inline IntervalOracle golden_oracle() {
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  double a = phi - 1.0;
  return {{0.0, a, 1.0},
          [phi, a](double x) { return x <= a ? phi * (a - x) : phi * (x - a); }};
}

inline Rational tent_exact(const Rational& x) {
  return x <= Rational(1, 2) ? Rational(2 * x) : Rational(2 - 2 * x);
}

}  // namespace oracle

namespace tamegraph {

// Element a + b*sqrt(5) of Q(sqrt 5): the field the golden-mean eigendata
// lives in, so "exact mode" checks work where plain rationals cannot.
struct QuadRational {
  Rational a{};
  Rational b{};

  QuadRational() = default;
  QuadRational(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
  explicit QuadRational(long v) : a(v) {}

  int sgn() const {
    if (b == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
    if (a == 0) return b > 0 ? 1 : -1;
    if (a > 0 && b > 0) return 1;
    if (a < 0 && b < 0) return -1;
    Rational lhs = a * a, rhs = 5 * b * b;
    if (lhs == rhs) return 0;
    return (lhs > rhs) == (a > 0) ? 1 : -1;
  }

  friend QuadRational operator+(const QuadRational& x, const QuadRational& y) {
    return {Rational(x.a + y.a), Rational(x.b + y.b)};
  }
  friend QuadRational operator-(const QuadRational& x, const QuadRational& y) {
    return {Rational(x.a - y.a), Rational(x.b - y.b)};
  }
  QuadRational operator-() const { return {Rational(-a), Rational(-b)}; }
  friend QuadRational operator*(const QuadRational& x, const QuadRational& y) {
    return {Rational(x.a * y.a + 5 * x.b * y.b), Rational(x.a * y.b + x.b * y.a)};
  }
  friend QuadRational operator/(const QuadRational& x, const QuadRational& y) {
    Rational norm = y.a * y.a - 5 * y.b * y.b;
    if (norm == 0) throw std::domain_error("division by zero in Q(sqrt 5)");
    return {Rational((x.a * y.a - 5 * x.b * y.b) / norm), Rational((x.b * y.a - x.a * y.b) / norm)};
  }
  QuadRational& operator+=(const QuadRational& y) { return *this = *this + y; }
  QuadRational& operator-=(const QuadRational& y) { return *this = *this - y; }
  QuadRational& operator*=(const QuadRational& y) { return *this = *this * y; }

  friend bool operator==(const QuadRational& x, const QuadRational& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const QuadRational& x, const QuadRational& y) { return !(x == y); }
  friend bool operator<(const QuadRational& x, const QuadRational& y) {
    return (x - y).sgn() < 0;
  }
  friend bool operator>(const QuadRational& x, const QuadRational& y) { return y < x; }
  friend bool operator<=(const QuadRational& x, const QuadRational& y) { return !(y < x); }
  friend bool operator>=(const QuadRational& x, const QuadRational& y) { return !(x < y); }
};

inline QuadRational quad_phi() { return {Rational(1, 2), Rational(1, 2)}; }

inline std::string format_scalar(const QuadRational& v) {
  return format_scalar(v.a) + " + " + format_scalar(v.b) + "*sqrt5";
}

template <>
struct scalar_traits<QuadRational> {
  static constexpr bool exact = true;
  static QuadRational from_rational(const Rational& r) { return {r, Rational(0)}; }
  static QuadRational from_int(long v) { return QuadRational(v); }
  static QuadRational from_bigint(const BigInt& v) { return {Rational(v), Rational(0)}; }
  static double to_double(const QuadRational& v) {
    return scalar_traits<Rational>::to_double(v.a) +
           scalar_traits<Rational>::to_double(v.b) * std::sqrt(5.0);
  }
};

}  // namespace tamegraph

namespace oracle {

// Golden-mean eigenvector over Q(sqrt 5): v = (phi - 1, 2 - phi), lambda = phi.
inline tamegraph::SubEigenvector<tamegraph::QuadRational> golden_quad_eigenvector(
    const std::shared_ptr<const tamegraph::MapSystem>& sys) {
  using tamegraph::QuadRational;
  using tamegraph::Rational;
  auto arcs = sys->arcs_at_depth(0);
  QuadRational one(1);
  QuadRational phi = tamegraph::quad_phi();
  std::map<ArcId, QuadRational> entries = {{arcs[0], phi - one},
                                           {arcs[1], QuadRational(2) - phi}};
  return tamegraph::subeigenvector_from_map<QuadRational>(phi, std::move(entries), {}, one,
                                                          "test-quad");
}

// Position of an arc-local point in the end-to-end interval layout.
template <typename S>
double global_coord(const tamegraph::ConstantSlopeModel<S>& model,
                    const tamegraph::PointCoord<S>& x) {
  double pos = 0.0;
  for (ArcId a : model.arcs) {
    if (a == x.arc) return pos + tamegraph::scalar_traits<S>::to_double(x.offset);
    pos += tamegraph::scalar_traits<S>::to_double(model.length(a));
  }
  throw std::invalid_argument("point arc not in model");
}

inline tamegraph::PointCoord<double> random_point(
    const tamegraph::ConstantSlopeModel<double>& model, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, model.arcs.size() - 1);
  ArcId a = model.arcs[pick(rng)];
  std::uniform_real_distribution<double> off(0.0, 1.0);
  return {a, off(rng) * model.length(a)};
}

}  // namespace oracle
