#include "abelarr/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace abelarr {

bool IntersectionPoset::less(LayerId d, LayerId c) const {
  const auto& b = below.at(c);
  return std::binary_search(b.begin(), b.end(), d);
}

LayerSet IntersectionPoset::all() const {
  LayerSet s(nodes.size());
  std::iota(s.begin(), s.end(), LayerId{0});
  return s;
}

LayerSet IntersectionPoset::minimal() const {
  LayerSet s;
  for (LayerId i = 0; i < nodes.size(); ++i)
    if (nodes[i].bottom == i) s.push_back(i);
  return s;
}

std::string lattice_key(const IntegerMatrix& basis) {
  std::ostringstream out;
  out << "[";
  for (Index i = 0; i < basis.rows(); ++i) {
    if (i) out << ";";
    for (Index j = 0; j < basis.cols(); ++j) out << (j ? "," : "") << basis(i, j).get_str();
  }
  out << "]";
  return out.str();
}

std::optional<IntegerMatrix> basis_coordinates(const IntegerMatrix& inner, const IntegerMatrix& outer) {
  IntegerMatrix coords(inner.rows(), outer.rows());
  for (Index i = 0; i < inner.rows(); ++i) {
    auto c = hermite_coordinates<Integer>(outer, inner.row(i));
    if (!c) return std::nullopt;
    coords.row(i) = *c;
  }
  return coords;
}

bool is_subset(const LayerSet& a, const LayerSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

namespace {

bool contains(const LayerSet& set, LayerId id) { return std::binary_search(set.begin(), set.end(), id); }

}  // namespace

std::size_t IntersectionPoset::cover_count(const LayerSet& set) const {
  std::size_t n = 0;
  for (LayerId c : set)
    for (LayerId d : lower_covers.at(c))
      if (contains(set, d)) ++n;
  return n;
}

void compute_covers(IntersectionPoset& poset) {
  poset.lower_covers.assign(poset.size(), {});
  for (LayerId c = 0; c < poset.size(); ++c) {
    const auto& down = poset.below[c];
    for (LayerId d : down) {
      bool cover = true;
      for (LayerId e : down)
        if (e != d && poset.less(d, e)) {
          cover = false;
          break;
        }
      if (cover) poset.lower_covers[c].push_back(d);
    }
  }
}

void mobius_all(IntersectionPoset& poset) {
  std::vector<LayerId> order = poset.all();
  std::stable_sort(order.begin(), order.end(),
                   [&](LayerId a, LayerId b) { return poset.nodes[a].rank < poset.nodes[b].rank; });
  for (LayerId c : order) {
    auto& node = poset.nodes[c];
    if (poset.below[c].empty()) {
      node.mobius = 1;
      continue;
    }
    Integer sum = 0;
    for (LayerId d : poset.below[c]) {
      if (poset.nodes[d].rank >= node.rank) throw std::logic_error("layer poset is not ranked by r_{A_C}");
      sum += poset.nodes[d].mobius;
    }
    node.mobius = -sum;
  }
}

LayerSet sign_alternation_violations(const IntersectionPoset& poset) {
  LayerSet bad;
  for (LayerId c = 0; c < poset.size(); ++c) {
    const auto& n = poset.nodes[c];
    const Integer signed_mu = (n.rank % 2 == 0) ? n.mobius : Integer(-n.mobius);
    if (signed_mu <= 0) bad.push_back(c);
  }
  return bad;
}

UniPoly characteristic(const IntersectionPoset& poset, const LayerSet& set) {
  UniPoly chi;
  for (LayerId c : set) chi += UniPoly::monomial(poset.nodes[c].mobius, static_cast<std::size_t>(poset.nodes[c].dim));
  return chi;
}

bool is_order_ideal(const IntersectionPoset& poset, const LayerSet& set) {
  for (LayerId c : set)
    for (LayerId d : poset.below[c])
      if (!contains(set, d)) return false;
  return true;
}

bool is_dual_order_ideal(const IntersectionPoset& poset, const LayerSet& set) {
  for (LayerId c = 0; c < poset.size(); ++c) {
    if (contains(set, c)) continue;
    for (LayerId d : poset.below[c])
      if (contains(set, d)) return false;
  }
  return true;
}

std::string export_hasse(const IntersectionPoset& poset, const LayerSet& set, const std::string& format) {
  if (format != "dot") throw std::invalid_argument("unknown Hasse export format: " + format);
  std::ostringstream out;
  out << "graph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (LayerId c : set) {
    const auto& n = poset.nodes[c];
    out << "  \"" << n.key << "\" [label=\"" << n.label << "\\ndim=" << n.dim << " mu=" << n.mobius.get_str()
        << "\"];\n";
  }
  for (LayerId c : set)
    for (LayerId d : poset.lower_covers[c])
      if (contains(set, d)) out << "  \"" << poset.nodes[d].key << "\" -- \"" << poset.nodes[c].key << "\";\n";
  out << "}\n";
  return out.str();
}

std::vector<KeyLieEntry> key_lie_sums(const IntersectionPoset& poset, const LayerSet& partial) {
  std::vector<KeyLieEntry> out;
  out.reserve(poset.size());
  for (LayerId c = 0; c < poset.size(); ++c) {
    KeyLieEntry e;
    e.layer = c;
    e.alternating_sum = 0;
    for (SubsetMask s : poset.nodes[c].defining) e.alternating_sum += (subset_size(s) % 2 == 0) ? 1 : -1;
    e.in_partial = contains(partial, c);
    e.expected = e.in_partial ? poset.nodes[c].mobius : Integer(0);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

// One component's layers with their induced order, for isomorphism testing.
struct SmallPoset {
  std::vector<LayerId> ids;
  std::vector<int> rank;
  std::vector<std::vector<bool>> less;  // less[i][j]: ids[i] < ids[j]
  std::vector<std::pair<int, int>> degree;  // (#below, #above) inside the component
};

SmallPoset extract(const IntersectionPoset& poset, const LayerSet& set, LayerId bottom) {
  SmallPoset p;
  for (LayerId c : set)
    if (poset.nodes[c].bottom == bottom) p.ids.push_back(c);
  const std::size_t n = p.ids.size();
  p.less.assign(n, std::vector<bool>(n, false));
  p.degree.assign(n, {0, 0});
  for (std::size_t i = 0; i < n; ++i) {
    p.rank.push_back(poset.nodes[p.ids[i]].rank);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && poset.less(p.ids[i], p.ids[j])) {
        p.less[i][j] = true;
        ++p.degree[i].second;
        ++p.degree[j].first;
      }
  }
  return p;
}

bool extend(const SmallPoset& a, const SmallPoset& b, std::vector<int>& map, std::vector<bool>& used, std::size_t i) {
  if (i == a.ids.size()) return true;
  for (std::size_t j = 0; j < b.ids.size(); ++j) {
    if (used[j] || a.rank[i] != b.rank[j] || a.degree[i] != b.degree[j]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < i && ok; ++k) {
      const auto mk = static_cast<std::size_t>(map[k]);
      ok = a.less[i][k] == b.less[j][mk] && a.less[k][i] == b.less[mk][j];
    }
    if (!ok) continue;
    map[i] = static_cast<int>(j);
    used[j] = true;
    if (extend(a, b, map, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

bool isomorphic(const SmallPoset& a, const SmallPoset& b) {
  if (a.ids.size() != b.ids.size()) return false;
  std::vector<int> map(a.ids.size(), -1);
  std::vector<bool> used(b.ids.size(), false);
  return extend(a, b, map, used, 0);
}

}  // namespace

std::vector<ComponentClass> component_classes(const IntersectionPoset& poset, const LayerSet& set) {
  std::vector<ComponentClass> classes;
  std::vector<SmallPoset> representatives;
  for (LayerId b : poset.minimal()) {
    if (!contains(set, b)) continue;
    SmallPoset p = extract(poset, set, b);
    bool placed = false;
    for (std::size_t k = 0; k < classes.size() && !placed; ++k)
      if (isomorphic(p, representatives[k])) {
        classes[k].bottoms.push_back(b);
        placed = true;
      }
    if (placed) continue;
    ComponentClass cls;
    cls.bottoms.push_back(b);
    LayerSet members(p.ids.begin(), p.ids.end());
    cls.layer_count = members.size();
    cls.cover_count = poset.cover_count(members);
    cls.characteristic = characteristic(poset, members);
    classes.push_back(std::move(cls));
    representatives.push_back(std::move(p));
  }
  return classes;
}

std::vector<UniPoly> per_component_characteristics(const IntersectionPoset& poset, const LayerSet& set,
                                                   const LayerSet& bottoms) {
  std::map<LayerId, UniPoly> by_bottom;
  for (LayerId b : bottoms) by_bottom[b];
  for (LayerId c : set) {
    auto it = by_bottom.find(poset.nodes[c].bottom);
    if (it != by_bottom.end())
      it->second += UniPoly::monomial(poset.nodes[c].mobius, static_cast<std::size_t>(poset.nodes[c].dim));
  }
  std::vector<UniPoly> out;
  for (LayerId b : bottoms) out.push_back(by_bottom[b]);
  return out;
}

}  // namespace abelarr
