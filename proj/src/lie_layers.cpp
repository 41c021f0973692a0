#include "abelarr/lie_layers.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "abelarr/invariants.hpp"

namespace abelarr {

namespace {

std::string hom_key(const IntegerMatrix& hom) {
  std::ostringstream out;
  out << "<";
  for (Index i = 0; i < hom.rows(); ++i) {
    if (i) out << ";";
    for (Index j = 0; j < hom.cols(); ++j) out << (j ? "," : "") << hom(i, j).get_str();
  }
  out << ">";
  return out.str();
}

FGAbelianGroup target_of(const std::vector<Integer>& f_torsion) { return FGAbelianGroup{0, f_torsion}; }

}  // namespace

std::vector<Integer> LiePoset::hom_value(LayerId c, const IntegerVector& v) const {
  FiniteHom h{layers.at(c).hom};
  return h.evaluate(v, target_of(group.f_torsion));
}

LiePoset enumerate_lie_layers(const Arrangement& arr, int g, const std::vector<Integer>& f_torsion) {
  if (g < 1) throw std::invalid_argument("lie layers need g >= 1; use leading_part for g = 0");
  if (arr.size() > kMaxLayerElements)
    throw CapacityError("lie layer enumeration supports at most " + std::to_string(kMaxLayerElements) +
                        " elements, got " + std::to_string(arr.size()));
  LiePoset P;
  P.arrangement = arr;
  P.g = g;
  P.group = GroupSpec::lie(g, f_torsion);
  const FGAbelianGroup target = target_of(P.group.f_torsion);
  const auto& gamma = arr.gamma();
  const int r = gamma.free_rank;
  const std::size_t s = gamma.torsion.size();
  const Integer order = P.group.finite_order();
  const std::uint64_t subsets = arr.subset_count();

  const Integer cells = power(order, static_cast<unsigned long>(r)) * hom_count(make_group(0, gamma.torsion), P.group.f_torsion);
  if (cells > Integer(static_cast<unsigned long>(kMaxLayers)))
    throw CapacityError("Hom(Γ, F) has " + cells.get_str() + " elements, beyond the layer cap");

  std::map<std::string, std::size_t> lattice_index;
  std::vector<std::size_t> lattice_of_mask(subsets);
  std::map<std::string, LayerId> layer_index;
  P.subset_components.assign(subsets, {});

  for (std::uint64_t m = 0; m < subsets; ++m) {
    const auto mask = static_cast<SubsetMask>(m);
    const IntegerMatrix S = arr.subset_matrix(mask);
    const IntegerMatrix sat = saturation(S, gamma);
    const Index rank = sat.rows() - static_cast<Index>(s);
    const IntegerMatrix B = sat.topLeftCorner(rank, r);
    const std::string lkey = lattice_key(B);
    auto [lit, fresh] = lattice_index.try_emplace(lkey, P.lattices.size());
    if (fresh) P.lattices.push_back(B);
    lattice_of_mask[m] = lit->second;

    for (auto& h : hom_enumerate(S, gamma, target)) {
      const std::string key = lkey + hom_key(h.images);
      auto [it, inserted] = layer_index.try_emplace(key, P.nodes.size());
      if (inserted) {
        PosetNode node;
        node.key = key;
        node.rank = static_cast<int>(rank);
        node.dim = g * (r - static_cast<int>(rank));
        node.label = "span " + lkey + " psi " + hom_key(h.images);
        P.nodes.push_back(std::move(node));
        P.layers.push_back(LieLayer{lit->second, std::move(h.images)});
        if (P.nodes.size() > kMaxLayers)
          throw CapacityError("lie layer enumeration exceeded " + std::to_string(kMaxLayers) + " layers");
      }
      P.nodes[it->second].defining.push_back(mask);
      P.subset_components[m].push_back(it->second);
    }

    const auto& data = arr.subset_data(mask);
    const Integer expected =
        multiplicity(data, GroupSpec{P.group.f_torsion, 0, 0}) * power(order, static_cast<unsigned long>(r - data.rank));
    if (Integer(static_cast<unsigned long>(P.subset_components[m].size())) != expected)
      throw std::logic_error("cc(H_S) for mask " + std::to_string(m) + " has " +
                             std::to_string(P.subset_components[m].size()) + " components, expected " +
                             expected.get_str());
  }
  for (auto& comps : P.subset_components) std::sort(comps.begin(), comps.end());
  for (auto& node : P.nodes)
    for (SubsetMask d : node.defining) node.localization |= d;

  // Layers sharing ψ, ordered by their saturations.
  std::map<std::string, std::vector<LayerId>> by_hom;
  for (LayerId c = 0; c < P.size(); ++c) by_hom[hom_key(P.layers[c].hom)].push_back(c);
  std::map<std::pair<std::size_t, std::size_t>, bool> contained;
  auto lattice_in = [&](std::size_t inner, std::size_t outer) {
    auto key = std::make_pair(inner, outer);
    auto it = contained.find(key);
    if (it == contained.end())
      it = contained.emplace(key, basis_coordinates(P.lattices[inner], P.lattices[outer]).has_value()).first;
    return it->second;
  };
  const std::size_t bottom_lattice = lattice_of_mask[0];
  P.below.assign(P.size(), {});
  for (const auto& [key, group] : by_hom) {
    LayerId bottom = P.size();
    for (LayerId c : group)
      if (P.layers[c].lattice == bottom_lattice) bottom = c;
    if (bottom == P.size()) throw std::logic_error("no component of T carries " + key);
    for (LayerId c : group) {
      P.nodes[c].bottom = bottom;
      for (LayerId d : group)
        if (d != c && P.layers[d].lattice != P.layers[c].lattice && lattice_in(P.layers[d].lattice, P.layers[c].lattice))
          P.below[c].push_back(d);
      std::sort(P.below[c].begin(), P.below[c].end());
    }
  }

  compute_covers(P);
  mobius_all(P);
  return P;
}

LayerSet scc(const LiePoset& poset) {
  const auto& arr = poset.arrangement;
  const SubsetMask tor = torsion_sublist(arr);
  LayerSet out;
  for (LayerId b : poset.minimal()) {
    bool survives = true;
    for (std::size_t i = 0; i < arr.size() && survives; ++i) {
      if (!(tor & (SubsetMask{1} << i))) continue;
      const auto value = poset.hom_value(b, arr.element(i));
      survives = std::any_of(value.begin(), value.end(), [](const Integer& x) { return x != 0; });
    }
    if (survives) out.push_back(b);
  }
  return out;
}

LayerSet partial_subposet(const LiePoset& poset) {
  const LayerSet good = scc(poset);
  LayerSet out;
  for (LayerId c = 0; c < poset.size(); ++c)
    if (std::binary_search(good.begin(), good.end(), poset.nodes[c].bottom)) out.push_back(c);
  return out;
}

UniPoly partial_characteristic(const LiePoset& poset) { return characteristic(poset, partial_subposet(poset)); }

UniPoly partial_characteristic(const Arrangement& arr, int g, const std::vector<Integer>& f_torsion) {
  return partial_characteristic(enumerate_lie_layers(arr, g, f_torsion));
}

UniPoly total_characteristic(const LiePoset& poset) { return characteristic(poset, poset.all()); }

UniPoly total_characteristic(const Arrangement& arr, int g, const std::vector<Integer>& f_torsion) {
  return total_characteristic(enumerate_lie_layers(arr, g, f_torsion));
}

UniPoly expected_partial_characteristic(const Arrangement& arr, int g, const std::vector<Integer>& f_torsion) {
  const GroupSpec spec = GroupSpec::lie(g, f_torsion);
  return scale_variable(g_characteristic(arr, spec), spec.finite_order(), static_cast<unsigned>(g));
}

UniPoly expected_total_characteristic(const Arrangement& arr, int g, const std::vector<Integer>& f_torsion) {
  return expected_partial_characteristic(strip_torsion(arr), g, f_torsion);
}

Arrangement strip_torsion(const Arrangement& arr) {
  return arr.restricted(arr.full_mask() & ~torsion_sublist(arr));
}

bool ConstituentSplit::matches() const {
  UniPoly sum;
  for (const auto& p : per_component) sum += p;
  return partial == rescaled && sum == partial;
}

ConstituentSplit constituent_via_lie(const Arrangement& arr, const Integer& k, int g) {
  if (k < 1) throw std::invalid_argument("constituent_via_lie: k must be >= 1");
  const std::vector<Integer> f = k == 1 ? std::vector<Integer>{} : std::vector<Integer>{k};
  const LiePoset poset = enumerate_lie_layers(arr, g, f);
  ConstituentSplit out;
  out.k = k;
  out.g = g;
  out.partial = partial_characteristic(poset);
  out.rescaled = scale_variable(chromatic_quasi(arr).constituent(k), k, static_cast<unsigned>(g));
  out.components = scc(poset);
  out.per_component = per_component_characteristics(poset, partial_subposet(poset), out.components);
  return out;
}

}  // namespace abelarr
