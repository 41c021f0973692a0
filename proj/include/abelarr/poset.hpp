#pragma once

// Intersection posets of layers, shared by the toric and the Lie-group
// enumerations. Layers are ordered by reverse inclusion: D < C means D ⊋ C.

#include <optional>
#include <string>
#include <vector>

#include "abelarr/arrangement.hpp"
#include "abelarr/poly.hpp"

namespace abelarr {

using LayerId = std::size_t;
/// Sorted, duplicate-free list of layer ids.
using LayerSet = std::vector<LayerId>;

struct PosetNode {
  std::string key;    // canonical, also the DOT node id
  std::string label;  // layer-type specific description
  int dim = 0;
  int rank = 0;        // r_{A_C}
  LayerId bottom = 0;  // T^C, the component of the total group containing C
  Integer mobius = 0;  // μ(T^C, C)
  SubsetMask localization = 0;       // A_C
  std::vector<SubsetMask> defining;  // R(C), ascending
};

struct IntersectionPoset {
  std::vector<PosetNode> nodes;
  std::vector<LayerSet> below;         // below[c]: every d with d < c
  std::vector<LayerSet> lower_covers;  // lower_covers[c]: every d covered by c
  std::vector<LayerSet> subset_components;  // cc(H_S), indexed by mask

  std::size_t size() const { return nodes.size(); }
  bool less(LayerId d, LayerId c) const;
  bool less_equal(LayerId d, LayerId c) const { return d == c || less(d, c); }
  LayerSet all() const;
  /// cc(T): the layers that are their own bottom.
  LayerSet minimal() const;
  std::size_t cover_count(const LayerSet& set) const;
};

/// Desk-scale limits for the layer enumerations.
inline constexpr std::size_t kMaxLayerElements = 12;
inline constexpr std::size_t kMaxLayers = 20000;

/// Canonical text of a Hermite basis, "[a,b;c,d]".
std::string lattice_key(const IntegerMatrix& basis);

/// Coordinates of each row of inner in the Hermite basis outer; nullopt if
/// some row lies outside.
std::optional<IntegerMatrix> basis_coordinates(const IntegerMatrix& inner, const IntegerMatrix& outer);

/// Fills lower_covers from below.
void compute_covers(IntersectionPoset& poset);

/// μ(T^C, C) for every layer from the recursion over [T^C, C].
void mobius_all(IntersectionPoset& poset);

/// Layers violating (-1)^{rank} μ(T^C, C) > 0.
LayerSet sign_alternation_violations(const IntersectionPoset& poset);

/// Σ_{C ∈ set} μ(T^C, C) t^{dim C}.
UniPoly characteristic(const IntersectionPoset& poset, const LayerSet& set);

/// Downward closed (with every C, everything below C).
bool is_order_ideal(const IntersectionPoset& poset, const LayerSet& set);
/// Upward closed.
bool is_dual_order_ideal(const IntersectionPoset& poset, const LayerSet& set);

bool is_subset(const LayerSet& a, const LayerSet& b);

/// Graph description of the cover relation restricted to set. Only "dot" is known.
std::string export_hasse(const IntersectionPoset& poset, const LayerSet& set, const std::string& format = "dot");

struct KeyLieEntry {
  LayerId layer = 0;
  Integer alternating_sum;  // Σ_{S ∈ R(C)} (-1)^{#S}
  Integer expected;         // μ(T^C, C) on the partial poset, 0 off it
  bool in_partial = false;
  bool matches() const { return alternating_sum == expected; }
};

std::vector<KeyLieEntry> key_lie_sums(const IntersectionPoset& poset, const LayerSet& partial);

/// Isomorphism class of the layers sitting on one component of the total group.
struct ComponentClass {
  std::vector<LayerId> bottoms;  // components in this class, ascending
  std::size_t layer_count = 0;
  std::size_t cover_count = 0;
  UniPoly characteristic;  // of one representative subposet
  std::size_t multiplicity() const { return bottoms.size(); }
};

/// Groups the subposets {C ∈ set : T^C = T_i} by poset isomorphism.
std::vector<ComponentClass> component_classes(const IntersectionPoset& poset, const LayerSet& set);

/// Σ_{C ∈ set, T^C = bottom} μ t^{dim}, one entry per bottom in order.
std::vector<UniPoly> per_component_characteristics(const IntersectionPoset& poset, const LayerSet& set,
                                                   const LayerSet& bottoms);

}  // namespace abelarr
