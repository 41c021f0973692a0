#pragma once

// Layers of A(G) for G = R^g × F, F finite.
//
// H_{S,G} = Hom(Γ/<S>, R^g) × Hom(Γ/<S>, F). The real factor is a connected
// vector space of dimension g(r_Γ - r_S) depending only on sat(<S>), so a
// layer is keyed by the saturation and a homomorphism ψ: Γ -> F vanishing on S.
// D ⊇ C iff sat_D ⊆ sat_C and ψ_D = ψ_C; T^C is the layer (sat(0), ψ_C).

#include <vector>

#include "abelarr/poset.hpp"

namespace abelarr {

struct LieLayer {
  std::size_t lattice = 0;  // index into LiePoset::lattices
  IntegerMatrix hom;        // generators of Γ × factors of F, residues
};

struct LiePoset : IntersectionPoset {
  Arrangement arrangement;
  int g = 1;
  GroupSpec group;  // R^g × F
  std::vector<LieLayer> layers;
  std::vector<IntegerMatrix> lattices;

  /// ψ_C(v) ∈ F as a residue tuple.
  std::vector<Integer> hom_value(LayerId c, const IntegerVector& v) const;
};

/// Throws std::invalid_argument for g < 1, CapacityError past the caps and
/// std::logic_error if some cc(H_S) has the wrong size.
LiePoset enumerate_lie_layers(const Arrangement& arr, int g, const std::vector<Integer>& f_torsion);

/// Components of T on which no torsion element of A vanishes.
LayerSet scc(const LiePoset& poset);
LayerSet partial_subposet(const LiePoset& poset);

UniPoly partial_characteristic(const LiePoset& poset);
UniPoly partial_characteristic(const Arrangement& arr, int g, const std::vector<Integer>& f_torsion);
UniPoly total_characteristic(const LiePoset& poset);
UniPoly total_characteristic(const Arrangement& arr, int g, const std::vector<Integer>& f_torsion);

/// χ_A^G(#F t^g) with G = R^g × F, computed from the G-Tutte polynomial.
UniPoly expected_partial_characteristic(const Arrangement& arr, int g, const std::vector<Integer>& f_torsion);
/// The same for A ∖ A^tor.
UniPoly expected_total_characteristic(const Arrangement& arr, int g, const std::vector<Integer>& f_torsion);

/// A without its torsion elements.
Arrangement strip_torsion(const Arrangement& arr);

struct ConstituentSplit {
  Integer k;
  int g = 1;
  UniPoly partial;                  // χ^par for F = Z/k
  UniPoly rescaled;                 // f^k(k t^g)
  LayerSet components;              // scc(T)
  std::vector<UniPoly> per_component;  // χ^tot of each T_i in scc(T)
  bool matches() const;
};

/// F = Z/kZ; k >= 1, g >= 1.
ConstituentSplit constituent_via_lie(const Arrangement& arr, const Integer& k, int g);

}  // namespace abelarr
