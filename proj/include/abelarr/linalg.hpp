#pragma once

// Exact integer matrix algebra: Smith and Hermite normal forms, cokernels of
// finitely generated abelian groups, saturation of subgroups and homomorphisms
// into finite abelian groups.
//
// The normal forms are templated on the scalar; everything above them works
// over arbitrary-precision Integer.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "abelarr/integer.hpp"

namespace abelarr {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntegerMatrix = Matrix<Integer>;
using IntegerVector = RowVector<Integer>;
using Index = Eigen::Index;

/// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... , zeros last.
/// V_inverse is tracked alongside V so callers never invert over Z themselves.
template <class Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U;
  Matrix<Scalar> V;
  Matrix<Scalar> V_inverse;
  Matrix<Scalar> D;

  /// The min(rows, cols) diagonal entries, nonnegative.
  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    const Index k = std::min(D.rows(), D.cols());
    d.reserve(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) d.push_back(D(i, i));
    return d;
  }

  Index rank() const {
    Index r = 0;
    const Index k = std::min(D.rows(), D.cols());
    while (r < k && D(r, r) != 0) ++r;
    return r;
  }
};

template <class Scalar>
bool same_matrix(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class Scalar>
bool lex_less(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

template <class Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Matrix<Scalar>& M) {
  const Index m = M.rows();
  const Index n = M.cols();
  SmithDecomposition<Scalar> s;
  s.D = M;
  s.U = Matrix<Scalar>::Identity(m, m);
  s.V = Matrix<Scalar>::Identity(n, n);
  s.V_inverse = Matrix<Scalar>::Identity(n, n);
  auto& D = s.D;

  auto swap_rows = [&](Index i, Index j) {
    if (i == j) return;
    D.row(i).swap(D.row(j));
    s.U.row(i).swap(s.U.row(j));
  };
  auto swap_cols = [&](Index i, Index j) {
    if (i == j) return;
    D.col(i).swap(D.col(j));
    s.V.col(i).swap(s.V.col(j));
    s.V_inverse.row(i).swap(s.V_inverse.row(j));
  };
  // row(dst) += c * row(src)
  auto add_row = [&](Index dst, Index src, const Scalar& c) {
    for (Index k = 0; k < n; ++k) D(dst, k) += c * D(src, k);
    for (Index k = 0; k < m; ++k) s.U(dst, k) += c * s.U(src, k);
  };
  // col(dst) += c * col(src); the inverse picks up row(src) -= c * row(dst)
  auto add_col = [&](Index dst, Index src, const Scalar& c) {
    for (Index k = 0; k < m; ++k) D(k, dst) += c * D(k, src);
    for (Index k = 0; k < n; ++k) s.V(k, dst) += c * s.V(k, src);
    for (Index k = 0; k < n; ++k) s.V_inverse(src, k) -= c * s.V_inverse(dst, k);
  };

  const Index steps = std::min(m, n);
  for (Index t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      Index pi = -1, pj = -1;
      for (Index i = t; i < m; ++i)
        for (Index j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi < 0 || abs_value(D(i, j)) < abs_value(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return s;  // trailing block is zero
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool reduced = true;
      for (Index i = t + 1; i < m && reduced; ++i) {
        if (D(i, t) == 0) continue;
        Scalar q = floor_div(D(i, t), D(t, t));
        add_row(i, t, Scalar(-q));
        if (D(i, t) != 0) reduced = false;
      }
      for (Index j = t + 1; j < n && reduced; ++j) {
        if (D(t, j) == 0) continue;
        Scalar q = floor_div(D(t, j), D(t, t));
        add_col(j, t, Scalar(-q));
        if (D(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // divisibility of the remaining block by the pivot
      bool divides = true;
      for (Index i = t + 1; i < m && divides; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (floor_mod(D(i, j), abs_value(D(t, t))) != 0) {
            add_row(t, i, Scalar(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      for (Index k = 0; k < n; ++k) D(t, k) = -D(t, k);
      for (Index k = 0; k < m; ++k) s.U(t, k) = -s.U(t, k);
    }
  }
  return s;
}

/// Row-style Hermite normal form: zero rows dropped, positive pivots, entries
/// above each pivot reduced into [0, pivot). Unique for a given row lattice.
template <class Scalar>
Matrix<Scalar> hermite_normal_form(const Matrix<Scalar>& M) {
  Matrix<Scalar> H = M;
  const Index m = H.rows();
  const Index n = H.cols();
  Index row = 0;
  for (Index col = 0; col < n && row < m; ++col) {
    for (;;) {
      Index piv = -1;
      for (Index i = row; i < m; ++i)
        if (H(i, col) != 0 && (piv < 0 || abs_value(H(i, col)) < abs_value(H(piv, col)))) piv = i;
      if (piv < 0) break;
      if (piv != row) H.row(piv).swap(H.row(row));
      bool clean = true;
      for (Index i = row + 1; i < m; ++i) {
        if (H(i, col) == 0) continue;
        Scalar q = floor_div(H(i, col), H(row, col));
        for (Index k = col; k < n; ++k) H(i, k) -= q * H(row, k);
        if (H(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0)
      for (Index k = col; k < n; ++k) H(row, k) = -H(row, k);
    for (Index i = 0; i < row; ++i) {
      Scalar q = floor_div(H(i, col), H(row, col));
      if (q == 0) continue;
      for (Index k = col; k < n; ++k) H(i, k) -= q * H(row, k);
    }
    ++row;
  }
  return H.topRows(row);
}

/// Coordinates of v in the basis given by the rows of a Hermite normal form,
/// or nullopt when v is not in the row lattice.
template <class Scalar>
std::optional<RowVector<Scalar>> hermite_coordinates(const Matrix<Scalar>& hnf,
                                                     const RowVector<Scalar>& v) {
  RowVector<Scalar> rest = v;
  RowVector<Scalar> coords(hnf.rows());
  for (Index i = 0; i < hnf.rows(); ++i) {
    Index p = 0;
    while (hnf(i, p) == 0) ++p;
    if (floor_mod(rest(p), hnf(i, p)) != 0) return std::nullopt;
    coords(i) = rest(p) / hnf(i, p);
    for (Index k = p; k < hnf.cols(); ++k) rest(k) -= coords(i) * hnf(i, k);
  }
  for (Index k = 0; k < rest.cols(); ++k)
    if (rest(k) != 0) return std::nullopt;
  return coords;
}

/// Z^free_rank ⊕ Z/e_1 ⊕ ... ⊕ Z/e_s with e_1 | e_2 | ... and every e_i > 1.
struct FGAbelianGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;

  int generator_count() const { return free_rank + static_cast<int>(torsion.size()); }
  bool is_finite() const { return free_rank == 0; }
  bool is_free() const { return torsion.empty(); }
  /// Order of the torsion subgroup.
  Integer torsion_order() const {
    Integer o = 1;
    for (const auto& e : torsion) o *= e;
    return o;
  }
  /// Largest invariant factor, 1 when torsion-free.
  Integer exponent() const { return torsion.empty() ? Integer(1) : torsion.back(); }
  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

FGAbelianGroup make_group(int free_rank, std::vector<Integer> torsion);
FGAbelianGroup cyclic_group(const Integer& order);

/// Generator rows stacked on top of the ambient torsion relations.
IntegerMatrix relation_matrix(const IntegerMatrix& generators, const FGAbelianGroup& ambient);

/// ambient / <rows of generators>, as an invariant-factor presentation.
FGAbelianGroup cokernel(const IntegerMatrix& generators, const FGAbelianGroup& ambient);

/// Hermite-form generators of the smallest subgroup containing the generators
/// and the torsion of ambient whose quotient is free.
IntegerMatrix saturation(const IntegerMatrix& generators, const FGAbelianGroup& ambient);

/// #Hom(source, ⊕ Z/f_j) for finite source.
Integer hom_count(const FGAbelianGroup& source, const std::vector<Integer>& target_torsion);

/// Images of each ambient generator in each cyclic factor of the target.
struct FiniteHom {
  IntegerMatrix images;  // generator_count x target factor count, residues in [0, f_j)

  /// Value of the hom on an element, as a residue tuple.
  std::vector<Integer> evaluate(const IntegerVector& element, const FGAbelianGroup& target) const;
  bool is_zero_on(const IntegerVector& element, const FGAbelianGroup& target) const;
};

/// Maximum number of homomorphisms hom_enumerate will materialise.
inline constexpr std::size_t kHomEnumerationCap = 1u << 20;

/// Every homomorphism (ambient / <generators>) -> target, target finite.
std::vector<FiniteHom> hom_enumerate(const IntegerMatrix& generators, const FGAbelianGroup& ambient,
                                     const FGAbelianGroup& target);

/// Stacks row vectors into a matrix with the given column count.
IntegerMatrix stack_rows(const std::vector<IntegerVector>& rows, Index cols);

}  // namespace abelarr
