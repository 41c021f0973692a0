#pragma once

// Layers of the generalized toric arrangement A(S^1) in T = Hom(Γ, S^1).
//
// A layer C is a connected component of some H_S. It is keyed by the
// saturated subgroup Λ_C ⊇ <S> + Γ_tor (with Γ/Λ_C free) and the common
// value χ: Λ_C -> Q/Z of every φ ∈ C restricted to Λ_C. Then
//   D ⊇ C  iff  Λ_D ⊆ Λ_C and χ_C|Λ_D = χ_D,
// C contains a k-torsion point iff k·χ_C = 0, and T^C is χ_C|Γ_tor.

#include <string>
#include <vector>

#include "abelarr/poset.hpp"

namespace abelarr {

/// Values in Q/Z, reduced into [0, 1), one per generator of Λ_C.
struct Character {
  std::vector<Rational> values;

  /// lcm of the denominators: the order of χ.
  Integer order() const;
  bool killed_by(const Integer& k) const;
  std::string to_string() const;
};

struct ToricLayer {
  std::size_t lattice = 0;  // index into ToricPoset::lattices
  Character chi;            // first on the free basis rows of Λ_C, then on Γ's torsion generators
  Integer order;            // chi.order()
};

struct ToricPoset : IntersectionPoset {
  Arrangement arrangement;
  std::vector<ToricLayer> layers;
  /// Hermite basis (rank × r_Γ) of the free part of each distinct Λ.
  std::vector<IntegerMatrix> lattices;
  /// Λ_C as generators of Γ: free basis rows then the torsion generators.
  IntegerMatrix lambda(LayerId c) const;
  /// χ_C(v) for v ∈ Λ_C; throws std::invalid_argument otherwise.
  Rational character_value(LayerId c, const IntegerVector& v) const;
};

/// Whole poset with order, covers and Möbius values filled in.
ToricPoset enumerate_toric_layers(const Arrangement& arr);

/// Pairwise containment test D ⊇ C straight from the keys (independent of the
/// R(C)-based construction of the order).
bool toric_contains(const ToricPoset& poset, LayerId outer, LayerId inner);

/// L[k] = {C : 1 ∈ E_k(C)}, k >= 1.
LayerSet k_total_subposet(const ToricPoset& poset, const Integer& k);
/// L^par = {C : T^C ∈ scc(T)}.
LayerSet partial_subposet(const ToricPoset& poset);
/// L^par[k].
LayerSet k_partial_subposet(const ToricPoset& poset, const Integer& k);
/// scc(T): components of T on which no element of A^tor vanishes.
LayerSet scc(const ToricPoset& poset);

UniPoly k_partial_characteristic(const ToricPoset& poset, const Integer& k);
UniPoly k_partial_characteristic(const Arrangement& arr, const Integer& k);
UniPoly k_total_characteristic(const ToricPoset& poset, const Integer& k);
UniPoly k_total_characteristic(const Arrangement& arr, const Integer& k);

}  // namespace abelarr
