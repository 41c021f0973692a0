#include "abelarr/linalg.hpp"

#include <sstream>

namespace abelarr {

std::string FGAbelianGroup::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const auto& e : torsion) {
    if (!first) out << " + ";
    out << "Z/" << e.get_str();
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

FGAbelianGroup make_group(int free_rank, std::vector<Integer> torsion) {
  if (free_rank < 0) throw std::invalid_argument("free rank must be nonnegative");
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] <= 1) throw std::invalid_argument("invariant factors must exceed 1, got " + torsion[i].get_str());
    if (i > 0 && floor_mod(torsion[i], torsion[i - 1]) != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
  return FGAbelianGroup{free_rank, std::move(torsion)};
}

FGAbelianGroup cyclic_group(const Integer& order) {
  if (order < 1) throw std::invalid_argument("cyclic group order must be positive");
  if (order == 1) return FGAbelianGroup{};
  return FGAbelianGroup{0, {order}};
}

IntegerMatrix stack_rows(const std::vector<IntegerVector>& rows, Index cols) {
  IntegerMatrix out(static_cast<Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].cols() != cols) throw std::invalid_argument("row length mismatch");
    out.row(static_cast<Index>(i)) = rows[i];
  }
  return out;
}

namespace {

void check_dimensions(const IntegerMatrix& generators, const FGAbelianGroup& ambient) {
  if (generators.rows() > 0 && generators.cols() != ambient.generator_count())
    throw std::invalid_argument("generator length " + std::to_string(generators.cols()) +
                                " does not match ambient presentation " + ambient.to_string());
}

}  // namespace

IntegerMatrix relation_matrix(const IntegerMatrix& generators, const FGAbelianGroup& ambient) {
  check_dimensions(generators, ambient);
  const Index n = ambient.generator_count();
  const Index k = generators.rows();
  const Index s = static_cast<Index>(ambient.torsion.size());
  IntegerMatrix R = IntegerMatrix::Zero(k + s, n);
  if (k > 0) R.topRows(k) = generators;
  for (Index i = 0; i < s; ++i) R(k + i, ambient.free_rank + i) = ambient.torsion[static_cast<std::size_t>(i)];
  return R;
}

FGAbelianGroup cokernel(const IntegerMatrix& generators, const FGAbelianGroup& ambient) {
  const IntegerMatrix R = relation_matrix(generators, ambient);
  const auto snf = smith_normal_form(R);
  FGAbelianGroup out;
  const Index rank = snf.rank();
  out.free_rank = static_cast<int>(R.cols() - rank);
  for (Index i = 0; i < rank; ++i)
    if (snf.D(i, i) > 1) out.torsion.push_back(snf.D(i, i));
  return out;
}

IntegerMatrix saturation(const IntegerMatrix& generators, const FGAbelianGroup& ambient) {
  check_dimensions(generators, ambient);
  const Index r = ambient.free_rank;
  const Index n = ambient.generator_count();
  const Index s = n - r;

  // Only the free projection matters: the subgroup contains all of the torsion.
  IntegerMatrix free_basis(0, r);
  if (generators.rows() > 0 && r > 0) {
    const auto snf = smith_normal_form<Integer>(generators.leftCols(r));
    const Index rank = snf.rank();
    free_basis = hermite_normal_form<Integer>(snf.V_inverse.topRows(rank));
  }
  IntegerMatrix out = IntegerMatrix::Zero(free_basis.rows() + s, n);
  if (free_basis.rows() > 0) out.topLeftCorner(free_basis.rows(), r) = free_basis;
  for (Index i = 0; i < s; ++i) out(free_basis.rows() + i, r + i) = 1;
  return out;
}

Integer hom_count(const FGAbelianGroup& source, const std::vector<Integer>& target_torsion) {
  if (!source.is_finite()) throw std::invalid_argument("hom_count: source " + source.to_string() + " is not finite");
  Integer count = 1;
  for (const auto& d : source.torsion)
    for (const auto& f : target_torsion) count *= gcd_of(d, f);
  return count;
}

std::vector<Integer> FiniteHom::evaluate(const IntegerVector& element, const FGAbelianGroup& target) const {
  std::vector<Integer> value(target.torsion.size());
  for (std::size_t j = 0; j < target.torsion.size(); ++j) {
    Integer acc = 0;
    for (Index g = 0; g < images.rows(); ++g) acc += element(g) * images(g, static_cast<Index>(j));
    value[j] = floor_mod(acc, target.torsion[j]);
  }
  return value;
}

bool FiniteHom::is_zero_on(const IntegerVector& element, const FGAbelianGroup& target) const {
  for (const auto& v : evaluate(element, target))
    if (v != 0) return false;
  return true;
}

std::vector<FiniteHom> hom_enumerate(const IntegerMatrix& generators, const FGAbelianGroup& ambient,
                                     const FGAbelianGroup& target) {
  if (!target.is_finite()) throw std::invalid_argument("hom_enumerate: target " + target.to_string() + " is not finite");
  const IntegerMatrix R = relation_matrix(generators, ambient);
  const auto snf = smith_normal_form(R);
  const Index n = ambient.generator_count();
  const Index diag = std::min(R.rows(), n);
  const std::size_t factors = target.torsion.size();

  // In the coordinates w = V^{-1} v the relations decouple into d_i * w_i == 0 (mod f).
  // Digit (j, i) ranges over gcd(d_i, f_j) multiples of f_j / gcd(d_i, f_j).
  std::vector<Integer> radix;
  std::vector<Integer> step;
  Integer total = 1;
  for (std::size_t j = 0; j < factors; ++j) {
    const Integer& f = target.torsion[j];
    for (Index i = 0; i < n; ++i) {
      const Integer d = i < diag ? Integer(snf.D(i, i)) : Integer(0);
      const Integer g = gcd_of(d, f);
      radix.push_back(g);
      step.push_back(f / g);
      total *= g;
    }
  }
  if (total > Integer(static_cast<unsigned long>(kHomEnumerationCap)))
    throw CapacityError("hom_enumerate: " + total.get_str() + " homomorphisms exceed the enumeration cap");

  std::vector<FiniteHom> homs;
  homs.reserve(total.get_ui());
  std::vector<Integer> digit(radix.size(), 0);
  for (;;) {
    FiniteHom h;
    h.images = IntegerMatrix::Zero(n, static_cast<Index>(factors));
    for (std::size_t j = 0; j < factors; ++j) {
      const Integer& f = target.torsion[j];
      for (Index row = 0; row < n; ++row) {
        Integer acc = 0;
        for (Index i = 0; i < n; ++i) {
          const std::size_t pos = j * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
          if (digit[pos] != 0) acc += snf.V(row, i) * digit[pos] * step[pos];
        }
        h.images(row, static_cast<Index>(j)) = floor_mod(acc, f);
      }
    }
    homs.push_back(std::move(h));

    std::size_t pos = digit.size();
    bool carry = true;
    while (carry && pos > 0) {
      --pos;
      if (++digit[pos] < radix[pos])
        carry = false;
      else
        digit[pos] = 0;
    }
    if (carry) return homs;
  }
}

}  // namespace abelarr
