#pragma once

// Test-side oracles. They use textbook formulas (determinantal divisors,
// rational elimination, direct subset sums) and never the normal-form code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "abelarr/arrangement.hpp"
#include "abelarr/poly.hpp"

namespace testsupport {

using abelarr::Integer;
using abelarr::IntegerMatrix;
using abelarr::IntegerVector;
using abelarr::Rational;

inline IntegerVector vec(std::initializer_list<long> xs) {
  IntegerVector v(static_cast<abelarr::Index>(xs.size()));
  abelarr::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

inline IntegerMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<abelarr::Index>(rows.size());
  const auto c = r == 0 ? 0 : static_cast<abelarr::Index>(rows.begin()->size());
  IntegerMatrix m(r, c);
  abelarr::Index i = 0;
  for (const auto& row : rows) {
    abelarr::Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline abelarr::Arrangement example() {
  return abelarr::Arrangement(abelarr::make_group(2, {}), {vec({-1, 1}), vec({0, 2}), vec({0, 4})}, "example");
}

// Determinant by cofactor expansion.
inline Integer det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const Integer term = m[0][j] * det(minor);
    if (j % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k×k minors.
inline Integer determinantal_divisor(const IntegerMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::size_t>> cols;
  std::vector<std::size_t> cur;
  combinations(static_cast<std::size_t>(m.rows()), k, 0, cur, rows);
  combinations(static_cast<std::size_t>(m.cols()), k, 0, cur, cols);
  Integer g = 0;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(static_cast<abelarr::Index>(r[i]), static_cast<abelarr::Index>(c[j]));
      g = gcd(g, det(sub));
    }
  return g;
}

// Nonzero invariant factors (units included) d_k = D_k / D_{k-1}.
inline std::vector<Integer> invariant_factors(const IntegerMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  const auto n = static_cast<std::size_t>(std::min(m.rows(), m.cols()));
  for (std::size_t k = 1; k <= n; ++k) {
    const Integer dk = determinantal_divisor(m, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

// Rank over Q by fraction-free elimination.
inline int rational_rank(const IntegerMatrix& m) {
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m.rows()), std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (abelarr::Index i = 0; i < m.rows(); ++i)
    for (abelarr::Index j = 0; j < m.cols(); ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  int rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[static_cast<std::size_t>(rank)]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(rank) || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[static_cast<std::size_t>(rank)][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[static_cast<std::size_t>(rank)][j];
    }
    ++rank;
  }
  return rank;
}

// Rows of the subset on top of the ambient torsion relations.
inline IntegerMatrix relations(const abelarr::Arrangement& arr, abelarr::SubsetMask mask) {
  const auto& gamma = arr.gamma();
  const auto n = static_cast<abelarr::Index>(gamma.generator_count());
  std::vector<IntegerVector> rows;
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (mask & (abelarr::SubsetMask{1} << i)) rows.push_back(arr.element(i));
  for (std::size_t t = 0; t < gamma.torsion.size(); ++t) {
    IntegerVector r = IntegerVector::Zero(n);
    r(gamma.free_rank + static_cast<abelarr::Index>(t)) = gamma.torsion[t];
    rows.push_back(r);
  }
  IntegerMatrix m(static_cast<abelarr::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<abelarr::Index>(i)) = rows[i];
  return m;
}

struct Quotient {
  int rank_s = 0;                // r_S
  std::vector<Integer> torsion;  // factors > 1
};

inline Quotient quotient(const abelarr::Arrangement& arr, abelarr::SubsetMask mask) {
  const IntegerMatrix rel = relations(arr, mask);
  Quotient q;
  const auto factors = invariant_factors(rel);
  q.rank_s = static_cast<int>(factors.size()) - static_cast<int>(arr.gamma().torsion.size());
  for (const auto& d : factors)
    if (d > 1) q.torsion.push_back(d);
  return q;
}

inline Integer multiplicity_formula(const std::vector<Integer>& d, const std::vector<Integer>& f, int p) {
  Integer m = 1;
  for (const auto& di : d) {
    for (int i = 0; i < p; ++i) m *= di;
    for (const auto& fj : f) m *= gcd(di, fj);
  }
  return m;
}

// Σ_S (-1)^{#S} m(S; G) t^{r_Γ - r_S}.
inline abelarr::UniPoly chi_direct(const abelarr::Arrangement& arr, const abelarr::GroupSpec& spec) {
  abelarr::UniPoly out;
  for (std::uint64_t s = 0; s < arr.subset_count(); ++s) {
    const auto mask = static_cast<abelarr::SubsetMask>(s);
    const Quotient q = quotient(arr, mask);
    Integer m = multiplicity_formula(q.torsion, spec.f_torsion, spec.p);
    if (abelarr::subset_size(mask) % 2) m = -m;
    out += abelarr::UniPoly::monomial(m, static_cast<std::size_t>(arr.ambient_rank() - q.rank_s));
  }
  return out;
}

// Hand-rolled generators.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  long between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  IntegerMatrix matrix(long rows, long cols, long bound) {
    IntegerMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) m(i, j) = between(-bound, bound);
    return m;
  }
  abelarr::UniPoly poly(int max_degree, long bound) {
    std::vector<Integer> c;
    const long d = between(-1, max_degree);
    for (long i = 0; i <= d; ++i) c.emplace_back(between(-bound, bound));
    return abelarr::UniPoly(c);
  }
};

}  // namespace testsupport
