#include "abelarr/toric_layers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace abelarr {

Integer Character::order() const {
  Integer o = 1;
  for (const auto& v : values) o = lcm_of(o, v.get_den());
  return o;
}

bool Character::killed_by(const Integer& k) const { return floor_mod(k, order()) == 0; }

std::string Character::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i].get_str();
  out << "}";
  return out.str();
}

namespace {

IntegerVector free_part(const IntegerVector& v, int r) { return v.leftCols(r); }

Rational dot_mod_one(const IntegerVector& coords, const std::vector<Rational>& values, std::size_t offset) {
  Rational acc = 0;
  for (Index j = 0; j < coords.cols(); ++j) acc += Rational(coords(j)) * values[offset + static_cast<std::size_t>(j)];
  return mod_one(acc);
}

// χ restricted from the lattice with free basis `outer` to the one whose free
// basis has coordinates `coords` in it; torsion values carry over.
Character restrict_character(const Character& chi, const IntegerMatrix& coords, std::size_t outer_rank,
                             std::size_t torsion_count) {
  Character out;
  for (Index i = 0; i < coords.rows(); ++i) out.values.push_back(dot_mod_one(coords.row(i), chi.values, 0));
  for (std::size_t t = 0; t < torsion_count; ++t) out.values.push_back(chi.values[outer_rank + t]);
  return out;
}

}  // namespace

IntegerMatrix ToricPoset::lambda(LayerId c) const {
  const auto& gamma = arrangement.gamma();
  const IntegerMatrix& B = lattices.at(layers.at(c).lattice);
  const Index r = gamma.free_rank;
  const Index s = static_cast<Index>(gamma.torsion.size());
  IntegerMatrix out = IntegerMatrix::Zero(B.rows() + s, r + s);
  if (B.rows() > 0) out.topLeftCorner(B.rows(), r) = B;
  for (Index i = 0; i < s; ++i) out(B.rows() + i, r + i) = 1;
  return out;
}

Rational ToricPoset::character_value(LayerId c, const IntegerVector& v) const {
  const auto& gamma = arrangement.gamma();
  const IntegerMatrix& B = lattices.at(layers.at(c).lattice);
  auto coords = hermite_coordinates<Integer>(B, free_part(v, gamma.free_rank));
  if (!coords) throw std::invalid_argument("element is not in the layer's subgroup");
  const auto& values = layers[c].chi.values;
  Rational acc = dot_mod_one(*coords, values, 0);
  for (std::size_t t = 0; t < gamma.torsion.size(); ++t)
    acc += Rational(v(gamma.free_rank + static_cast<Index>(t))) * values[static_cast<std::size_t>(B.rows()) + t];
  return mod_one(acc);
}

ToricPoset enumerate_toric_layers(const Arrangement& arr) {
  if (arr.size() > kMaxLayerElements)
    throw CapacityError("toric layer enumeration supports at most " + std::to_string(kMaxLayerElements) +
                        " elements, got " + std::to_string(arr.size()));
  ToricPoset P;
  P.arrangement = arr;
  const auto& gamma = arr.gamma();
  const int r = gamma.free_rank;
  const std::size_t s = gamma.torsion.size();
  const std::uint64_t subsets = arr.subset_count();

  std::map<std::string, std::size_t> lattice_index;
  std::vector<std::string> lattice_keys;
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
    if (fresh) {
      P.lattices.push_back(B);
      lattice_keys.push_back(lkey);
    }
    const std::size_t lid = lit->second;
    lattice_of_mask[m] = lid;

    // <S> in the coordinates of Λ = Z^rank ⊕ Γ_tor
    IntegerMatrix rel(S.rows(), rank + static_cast<Index>(s));
    for (Index i = 0; i < S.rows(); ++i) {
      auto c = hermite_coordinates<Integer>(B, free_part(S.row(i), r));
      if (!c) throw std::logic_error("element outside its own saturation");
      rel.row(i) << *c, S.row(i).rightCols(static_cast<Index>(s));
    }
    const FGAbelianGroup lam{static_cast<int>(rank), gamma.torsion};
    const FGAbelianGroup quotient = cokernel(rel, lam);
    if (!quotient.is_finite()) throw std::logic_error("Λ/<S> is not finite");
    const Integer N = quotient.exponent();

    for (const auto& h : hom_enumerate(rel, lam, cyclic_group(N))) {
      Character chi;
      for (Index g = 0; g < lam.generator_count(); ++g) {
        Rational v = N == 1 ? Rational(0) : Rational(h.images(g, 0), N);
        v.canonicalize();
        chi.values.push_back(v);
      }
      const std::string key = lkey + chi.to_string();
      auto [it, inserted] = layer_index.try_emplace(key, P.nodes.size());
      if (inserted) {
        PosetNode node;
        node.key = key;
        node.rank = static_cast<int>(rank);
        node.dim = r - static_cast<int>(rank);
        ToricLayer layer{lid, chi, chi.order()};
        node.label = "span " + lkey + " chi " + chi.to_string() + " ord " + layer.order.get_str();
        P.nodes.push_back(std::move(node));
        P.layers.push_back(std::move(layer));
        if (P.nodes.size() > kMaxLayers)
          throw CapacityError("toric layer enumeration exceeded " + std::to_string(kMaxLayers) + " layers");
      }
      P.nodes[it->second].defining.push_back(mask);
      P.subset_components[m].push_back(it->second);
    }
  }
  for (auto& comps : P.subset_components) std::sort(comps.begin(), comps.end());

  // A_C is the largest member of R(C)
  for (auto& node : P.nodes)
    for (SubsetMask d : node.defining) node.localization |= d;

  const std::string bottom_lattice = lattice_keys[lattice_of_mask[0]];
  for (LayerId c = 0; c < P.size(); ++c) {
    Character tail;
    const auto& values = P.layers[c].chi.values;
    tail.values.assign(values.end() - static_cast<std::ptrdiff_t>(s), values.end());
    P.nodes[c].bottom = layer_index.at(bottom_lattice + tail.to_string());
  }

  // Everything containing C is the component of some H_S, S ⊆ A_C, through C.
  std::map<std::pair<std::size_t, std::size_t>, IntegerMatrix> coordinate_cache;
  P.below.assign(P.size(), {});
  for (LayerId c = 0; c < P.size(); ++c) {
    const SubsetMask loc = P.nodes[c].localization;
    const std::size_t own = P.layers[c].lattice;
    std::set<std::size_t> lids;
    for (SubsetMask sub = loc;; sub = (sub - 1) & loc) {
      lids.insert(lattice_of_mask[sub]);
      if (sub == 0) break;
    }
    for (std::size_t lid : lids) {
      if (lid == own) continue;
      auto key = std::make_pair(lid, own);
      auto it = coordinate_cache.find(key);
      if (it == coordinate_cache.end()) {
        auto coords = basis_coordinates(P.lattices[lid], P.lattices[own]);
        if (!coords) throw std::logic_error("sub-localization lattice not contained in the layer's lattice");
        it = coordinate_cache.emplace(key, *coords).first;
      }
      const Character chi = restrict_character(P.layers[c].chi, it->second,
                                               static_cast<std::size_t>(P.lattices[own].rows()), s);
      auto d = layer_index.find(lattice_keys[lid] + chi.to_string());
      if (d == layer_index.end()) throw std::logic_error("restricted character names no layer");
      P.below[c].push_back(d->second);
    }
    std::sort(P.below[c].begin(), P.below[c].end());
  }

  compute_covers(P);
  mobius_all(P);
  return P;
}

bool toric_contains(const ToricPoset& poset, LayerId outer, LayerId inner) {
  const auto& lo = poset.layers.at(outer);
  const auto& li = poset.layers.at(inner);
  auto coords = basis_coordinates(poset.lattices[lo.lattice], poset.lattices[li.lattice]);
  if (!coords) return false;
  const Character r = restrict_character(li.chi, *coords, static_cast<std::size_t>(poset.lattices[li.lattice].rows()),
                                         poset.arrangement.gamma().torsion.size());
  return r.values == lo.chi.values;
}

LayerSet k_total_subposet(const ToricPoset& poset, const Integer& k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  LayerSet out;
  for (LayerId c = 0; c < poset.size(); ++c)
    if (floor_mod(k, poset.layers[c].order) == 0) out.push_back(c);
  return out;
}

LayerSet scc(const ToricPoset& poset) {
  const auto& arr = poset.arrangement;
  const SubsetMask tor = torsion_sublist(arr);
  LayerSet out;
  for (LayerId b : poset.minimal()) {
    bool survives = true;
    for (std::size_t i = 0; i < arr.size() && survives; ++i)
      if (tor & (SubsetMask{1} << i)) survives = poset.character_value(b, arr.element(i)) != 0;
    if (survives) out.push_back(b);
  }
  return out;
}

LayerSet partial_subposet(const ToricPoset& poset) {
  const LayerSet good = scc(poset);
  LayerSet out;
  for (LayerId c = 0; c < poset.size(); ++c)
    if (std::binary_search(good.begin(), good.end(), poset.nodes[c].bottom)) out.push_back(c);
  return out;
}

LayerSet k_partial_subposet(const ToricPoset& poset, const Integer& k) {
  const LayerSet par = partial_subposet(poset);
  const LayerSet tot = k_total_subposet(poset, k);
  LayerSet out;
  std::set_intersection(par.begin(), par.end(), tot.begin(), tot.end(), std::back_inserter(out));
  return out;
}

UniPoly k_partial_characteristic(const ToricPoset& poset, const Integer& k) {
  return characteristic(poset, k_partial_subposet(poset, k));
}

UniPoly k_partial_characteristic(const Arrangement& arr, const Integer& k) {
  return k_partial_characteristic(enumerate_toric_layers(arr), k);
}

UniPoly k_total_characteristic(const ToricPoset& poset, const Integer& k) {
  return characteristic(poset, k_total_subposet(poset, k));
}

UniPoly k_total_characteristic(const Arrangement& arr, const Integer& k) {
  return k_total_characteristic(enumerate_toric_layers(arr), k);
}

}  // namespace abelarr
