#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "abelarr/invariants.hpp"
#include "abelarr/lie_layers.hpp"
#include "abelarr/oracle.hpp"
#include "abelarr/toric_layers.hpp"
#include "support.hpp"

using namespace abelarr;
using testsupport::example;
using testsupport::vec;

namespace {

const Arrangement kTorsionPair(make_group(1, {2}), {vec({1, 0}), vec({0, 1})});

std::vector<Arrangement> sample() {
  std::vector<Arrangement> out = standard_battery();
  for (std::uint64_t s = 100; s < 130; ++s) out.push_back(random_arrangement(s));
  return out;
}

std::size_t count_in(const LayerSet& layers, const LayerSet& set) {
  return static_cast<std::size_t>(std::count_if(layers.begin(), layers.end(),
                                                [&](LayerId c) { return std::binary_search(set.begin(), set.end(), c); }));
}

}  // namespace

TEST_CASE("a single point on the circle") {
  const ToricPoset poset = enumerate_toric_layers(Arrangement(make_group(1, {}), {vec({1})}));
  REQUIRE(poset.size() == 2);
  const auto top = poset.minimal();
  REQUIRE(top.size() == 1);
  const LayerId point = top[0] == 0 ? 1 : 0;
  CHECK(poset.nodes[top[0]].dim == 1);
  CHECK(poset.nodes[top[0]].mobius == 1);
  CHECK(poset.nodes[point].dim == 0);
  CHECK(poset.nodes[point].mobius == -1);
}

TEST_CASE("the empty arrangement has the torus as its only layer") {
  const ToricPoset poset = enumerate_toric_layers(Arrangement(make_group(2, {}), {}));
  REQUIRE(poset.size() == 1);
  CHECK(poset.nodes[0].dim == 2);
  CHECK(k_partial_characteristic(poset, 3) == UniPoly::monomial(1, 2));
}

TEST_CASE("components of the example hypersurfaces") {
  const ToricPoset poset = enumerate_toric_layers(example());
  CHECK(poset.subset_components[2].size() == 2);
  CHECK(poset.subset_components[4].size() == 4);
  CHECK(poset.subset_components[6].size() == 2);
  for (SubsetMask s = 0; s < 8; ++s)
    CHECK(poset.subset_components[s].size() == multiplicity(example().subset_data(s), GroupSpec::circle()));
}

TEST_CASE("k-total subposets of the example") {
  const ToricPoset poset = enumerate_toric_layers(example());
  const LayerSet l1 = k_total_subposet(poset, 1);
  for (LayerId c : l1) CHECK(poset.layers[c].order == 1);
  const LayerSet l2 = k_total_subposet(poset, 2);
  const auto& gamma_components = poset.subset_components[4];
  CHECK(count_in(gamma_components, l2) == 2);
  for (LayerId c : gamma_components)
    if (std::binary_search(l2.begin(), l2.end(), c)) CHECK(poset.layers[c].order <= 2);
  CHECK(is_order_ideal(poset, l2));
  CHECK(is_subset(l1, l2));
  CHECK(k_total_subposet(poset, 4) == poset.all());
  CHECK_THROWS_AS(k_total_subposet(poset, 0), std::invalid_argument);
}

TEST_CASE("k-partial characteristics of the example") {
  const ToricPoset poset = enumerate_toric_layers(example());
  CHECK(k_partial_characteristic(poset, 1) == UniPoly{1, -2, 1});
  CHECK(k_partial_characteristic(poset, 2) == UniPoly{2, -3, 1});
  CHECK(k_partial_characteristic(poset, 4) == UniPoly{4, -5, 1});
  CHECK(k_partial_characteristic(poset, 3) == UniPoly{1, -2, 1});
  CHECK(k_total_characteristic(poset, 4) == UniPoly{4, -5, 1});
  const LayerSet l1 = k_partial_subposet(poset, 1);
  std::vector<Integer> mu;
  for (LayerId c : l1) mu.push_back(poset.nodes[c].mobius);
  std::sort(mu.begin(), mu.end());
  CHECK(mu == std::vector<Integer>{-1, -1, 1, 1});
}

TEST_CASE("hasse diagrams of the example") {
  const ToricPoset poset = enumerate_toric_layers(example());
  const std::size_t layers[] = {4, 6, 10};
  const std::size_t edges[] = {4, 7, 13};
  const long ks[] = {1, 2, 4};
  for (int i = 0; i < 3; ++i) {
    const LayerSet set = k_partial_subposet(poset, ks[i]);
    CHECK(set.size() == layers[i]);
    CHECK(poset.cover_count(set) == edges[i]);
  }
  const std::string dot = export_hasse(poset, k_partial_subposet(poset, 2));
  CHECK(std::count(dot.begin(), dot.end(), '\n') > 0);
  std::size_t arrows = 0, pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) ++arrows, pos += 2;
  CHECK(arrows == 7);
  std::size_t nodes = 0;
  pos = 0;
  while ((pos = dot.find("label=", pos)) != std::string::npos) ++nodes, pos += 6;
  CHECK(nodes == 6);
  const std::string empty = export_hasse(poset, {});
  CHECK(empty.find(" -- ") == std::string::npos);
  CHECK(empty.find("label=") == std::string::npos);
  CHECK_THROWS_AS(export_hasse(poset, poset.all(), "graphml"), std::invalid_argument);
}

TEST_CASE("hasse export is deterministic") {
  const ToricPoset a = enumerate_toric_layers(example());
  const ToricPoset b = enumerate_toric_layers(example());
  CHECK(export_hasse(a, a.all()) == export_hasse(b, b.all()));
}

TEST_CASE("partial subposets") {
  const ToricPoset ex = enumerate_toric_layers(example());
  CHECK(partial_subposet(ex) == ex.all());

  const ToricPoset one(enumerate_toric_layers(Arrangement(make_group(1, {2}), {vec({0, 1})})));
  const LayerSet comps = one.minimal();
  CHECK(comps.size() == 2);
  const LayerSet par = partial_subposet(one);
  REQUIRE(par.size() == 1);
  CHECK(one.layers[par[0]].chi.killed_by(1) == false);
  CHECK(k_partial_characteristic(one, 2) == UniPoly{0, 1});

  // the only torsion element is zero, so it vanishes everywhere
  const ToricPoset killed = enumerate_toric_layers(Arrangement(make_group(1, {2}), {vec({0, 0})}));
  CHECK(partial_subposet(killed).empty());
  CHECK(k_partial_characteristic(killed, 2).is_zero());
}

TEST_CASE("k-total characteristic equals the constituent of the stripped arrangement") {
  const ToricPoset poset = enumerate_toric_layers(kTorsionPair);
  const Arrangement stripped(make_group(1, {2}), {vec({1, 0})});
  const QuasiPolynomial qp = chromatic_quasi(stripped);
  for (long k = 1; k <= 6; ++k) CHECK(k_total_characteristic(poset, k) == qp.constituent(k));
}

TEST_CASE("key lie sums on a point layer") {
  const ToricPoset poset = enumerate_toric_layers(example());
  const auto entries = key_lie_sums(poset, partial_subposet(poset));
  for (const auto& e : entries) CHECK(e.matches());
  for (LayerId c = 0; c < poset.size(); ++c) {
    const auto& n = poset.nodes[c];
    if (n.dim != 0) continue;
    for (SubsetMask s : n.defining) CHECK(poset.arrangement.subset_data(s).rank == 2);
  }
}

TEST_CASE("property: k-partial characteristic equals the constituent") {
  for (const auto& arr : sample()) {
    if (arr.size() > kMaxLayerElements) continue;
    CAPTURE(arr.name());
    const ToricPoset poset = enumerate_toric_layers(arr);
    const QuasiPolynomial qp = chromatic_quasi(arr);
    const QuasiPolynomial stripped = chromatic_quasi(strip_torsion(arr));
    const long rho = qp.period.get_si();
    for (long k = 1; k <= std::min(rho, 60L); ++k) {
      CHECK(k_partial_characteristic(poset, k) == qp.constituent(k));
      CHECK(k_total_characteristic(poset, k) == stripped.constituent(k));
    }
    for (const Integer& d : divisors(qp.period)) CHECK(k_partial_characteristic(poset, d) == qp.constituent(d));
  }
}

TEST_CASE("property: component counts of k-torsion layers") {
  for (const auto& arr : sample()) {
    const ToricPoset poset = enumerate_toric_layers(arr);
    for (long k = 1; k <= 12; ++k) {
      const LayerSet lk = k_total_subposet(poset, k);
      for (std::uint64_t s = 0; s < arr.subset_count(); ++s)
        CHECK(count_in(poset.subset_components[s], lk) ==
              multiplicity(arr.subset_data(static_cast<SubsetMask>(s)), GroupSpec::cyclic(k)));
    }
  }
}

TEST_CASE("property: L[a] is an order ideal inside L[b] when a divides b") {
  for (const auto& arr : sample()) {
    const ToricPoset poset = enumerate_toric_layers(arr);
    for (long a = 1; a <= 6; ++a) {
      const LayerSet la = k_total_subposet(poset, a);
      CHECK(is_order_ideal(poset, la));
      for (long m = 1; m <= 3; ++m) CHECK(is_subset(la, k_total_subposet(poset, a * m)));
    }
    CHECK(is_dual_order_ideal(poset, partial_subposet(poset)));
  }
}

TEST_CASE("property: mobius values match the brute recursion and alternate in sign") {
  for (const auto& arr : sample()) {
    const ToricPoset poset = enumerate_toric_layers(arr);
    CHECK(sign_alternation_violations(poset).empty());
    if (poset.size() > 200) continue;
    const auto bottoms = [&] {
      std::vector<std::size_t> b;
      for (const auto& n : poset.nodes) b.push_back(n.bottom);
      return b;
    }();
    const auto brute = brute_mobius(poset.size(), [&](std::size_t d, std::size_t c) {
      return d == c || toric_contains(poset, d, c);
    }, bottoms);
    for (LayerId c = 0; c < poset.size(); ++c) CHECK(brute[c] == poset.nodes[c].mobius);
  }
}

TEST_CASE("property: key lie sums and the count of the partial components") {
  for (const auto& arr : sample()) {
    const ToricPoset poset = enumerate_toric_layers(arr);
    const LayerSet par = partial_subposet(poset);
    for (const auto& e : key_lie_sums(poset, par)) CHECK(e.matches());
    std::vector<std::int64_t> target;
    if (!arr.gamma().torsion.empty()) target.push_back(arr.gamma().exponent().get_si());
    CHECK(static_cast<std::int64_t>(scc(poset).size()) == brute_torsion_complement(arr, target));
  }
}

TEST_CASE("whole-poset characteristic identities") {
  for (const auto& arr : sample()) {
    const ToricPoset poset = enumerate_toric_layers(arr);
    CHECK(characteristic(poset, partial_subposet(poset)) == g_characteristic(arr, GroupSpec::circle()));
    CHECK(characteristic(poset, poset.all()) == g_characteristic(strip_torsion(arr), GroupSpec::circle()));
  }
}

TEST_CASE("capacity is enforced") {
  std::vector<IntegerVector> many(kMaxLayerElements + 1, vec({1}));
  CHECK_THROWS_AS(enumerate_toric_layers(Arrangement(make_group(1, {}), many)), CapacityError);
}
