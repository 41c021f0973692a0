#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "abelarr/linalg.hpp"

namespace abelarr {

/// Bit i selects the i-th element of the arrangement.
using SubsetMask = std::uint32_t;

/// Subset sweeps are 2^#A; beyond this the model refuses.
inline constexpr std::size_t kMaxElements = 24;

inline int subset_size(SubsetMask mask) { return std::popcount(mask); }

/// Quotient data of Γ/<S>: rank of <S> and the invariant factors of the torsion.
struct SubsetData {
  SubsetMask mask = 0;
  int rank = 0;
  std::vector<Integer> torsion_factors;

  Integer torsion_order() const;
  /// Largest invariant factor, 1 when Γ/<S> is torsion-free.
  Integer largest_factor() const;
};

/// G = F × (S^1)^p × R^q.
struct GroupSpec {
  std::vector<Integer> f_torsion;
  int p = 0;
  int q = 0;

  int dimension() const { return p + q; }
  Integer finite_order() const;
  std::string to_string() const;

  static GroupSpec reals(int q = 1) { return GroupSpec{{}, 0, q}; }
  static GroupSpec circle(int p = 1) { return GroupSpec{{}, p, 0}; }
  /// Z/kZ, or the trivial group when k == 1.
  static GroupSpec cyclic(const Integer& k);
  /// R^g × F.
  static GroupSpec lie(int g, std::vector<Integer> f_torsion);
  /// Validating constructor; torsion entries equal to 1 are dropped.
  static GroupSpec make(std::vector<Integer> f_torsion, int p, int q);
};

/// A finite list of elements of a finitely generated abelian group Γ.
/// Elements are coordinate vectors in the presentation of Γ, with torsion
/// coordinates reduced into [0, e_i). Duplicates are kept as distinct members.
class Arrangement {
public:
  Arrangement() : Arrangement(FGAbelianGroup{}, {}) {}
  Arrangement(FGAbelianGroup gamma, std::vector<IntegerVector> elements, std::string name = {});

  const FGAbelianGroup& gamma() const { return gamma_; }
  const std::vector<IntegerVector>& elements() const { return elements_; }
  const IntegerVector& element(std::size_t i) const { return elements_.at(i); }
  std::size_t size() const { return elements_.size(); }
  const std::string& name() const { return name_; }

  SubsetMask full_mask() const { return elements_.empty() ? 0u : static_cast<SubsetMask>((std::uint64_t{1} << elements_.size()) - 1); }
  std::uint64_t subset_count() const { return std::uint64_t{1} << elements_.size(); }

  /// r_Γ.
  int ambient_rank() const { return gamma_.free_rank; }
  /// r_A.
  int rank() const { return subset_data(full_mask()).rank; }

  /// Rows are the selected elements, in list order.
  IntegerMatrix subset_matrix(SubsetMask mask) const;

  /// Memoized per mask; safe to call concurrently.
  const SubsetData& subset_data(SubsetMask mask) const;

  bool is_torsion(std::size_t i) const;
  bool contains_zero() const;

  /// Keeps the masked elements in order.
  Arrangement restricted(SubsetMask keep) const;
  /// Appends a copy of element i.
  Arrangement with_duplicate(std::size_t i) const;

private:
  struct Memo;

  FGAbelianGroup gamma_;
  std::vector<IntegerVector> elements_;
  std::string name_;
  std::shared_ptr<Memo> memo_;
};

/// Reduces the torsion coordinates of v into [0, e_i); returns how many changed.
int reduce_torsion_coordinates(IntegerVector& v, const FGAbelianGroup& gamma);

SubsetData subset_data(const Arrangement& arr, SubsetMask mask);

/// m(S; G) = #Hom((Γ/<S>)_tor, G) = prod_i d_i^p prod_j gcd(d_i, f_j).
Integer multiplicity(const SubsetData& data, const GroupSpec& spec);

/// Mask of the elements lying in Γ_tor.
SubsetMask torsion_sublist(const Arrangement& arr);

/// ρ_A: lcm of the largest invariant factor of Γ/<S> over all subsets S.
Integer lcm_period(const Arrangement& arr);

}  // namespace abelarr
