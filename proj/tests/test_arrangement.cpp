#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abelarr/arrangement.hpp"
#include "support.hpp"

using namespace abelarr;
using testsupport::example;
using testsupport::vec;

namespace {

constexpr SubsetMask kAlpha = 1, kBeta = 2, kGamma = 4;

Arrangement random_arrangement(testsupport::Gen& gen) {
  const int r = static_cast<int>(gen.between(0, 3));
  std::vector<Integer> torsion;
  const long t = gen.between(0, 2);
  Integer e = 1;
  for (long i = 0; i < t; ++i) {
    e *= gen.between(2, 3);
    torsion.push_back(e);
  }
  const FGAbelianGroup gamma = make_group(r, torsion);
  std::vector<IntegerVector> elems;
  const long n = gen.between(0, 5);
  for (long i = 0; i < n; ++i) {
    IntegerVector v(gamma.generator_count());
    for (Index j = 0; j < v.cols(); ++j) v(j) = gen.between(-4, 4);
    reduce_torsion_coordinates(v, gamma);
    elems.push_back(v);
  }
  return Arrangement(gamma, elems);
}

}  // namespace

TEST_CASE("subset data of the example") {
  const Arrangement arr = example();
  const auto& empty = arr.subset_data(0);
  CHECK(empty.rank == 0);
  CHECK(empty.torsion_factors.empty());
  const auto& g = arr.subset_data(kGamma);
  CHECK(g.rank == 1);
  CHECK(g.torsion_factors == std::vector<Integer>{4});
  const auto& all = arr.subset_data(kAlpha | kBeta | kGamma);
  CHECK(all.rank == 2);
  CHECK(all.torsion_factors == std::vector<Integer>{2});
  CHECK(arr.rank() == 2);
  CHECK(arr.ambient_rank() == 2);
}

TEST_CASE("subset data of the empty subset is the torsion of the ambient group") {
  const Arrangement arr(make_group(1, {2, 4}), {vec({1, 0, 0})});
  CHECK(arr.subset_data(0).torsion_factors == std::vector<Integer>{2, 4});
}

TEST_CASE("multiplicity examples") {
  const Arrangement arr = example();
  const auto& g = arr.subset_data(kGamma);
  for (SubsetMask s = 0; s < 8; ++s) CHECK(multiplicity(arr.subset_data(s), GroupSpec::reals()) == 1);
  CHECK(multiplicity(g, GroupSpec::cyclic(4)) == 4);
  CHECK(multiplicity(g, GroupSpec::circle()) == 4);
  CHECK(multiplicity(g, GroupSpec::cyclic(6)) == 2);
  CHECK(multiplicity(g, GroupSpec::lie(2, {2, 4})) == 8);
}

TEST_CASE("group spec validation") {
  CHECK(GroupSpec::cyclic(1).f_torsion.empty());
  CHECK(GroupSpec::make({1, 3}, 0, 1).f_torsion == std::vector<Integer>{3});
  CHECK_THROWS_AS(GroupSpec::make({2, 3}, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::make({}, -1, 0), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::cyclic(0), std::invalid_argument);
  CHECK(GroupSpec::lie(2, {3}).dimension() == 2);
  CHECK(GroupSpec::lie(2, {3}).finite_order() == 3);
}

TEST_CASE("torsion sublist examples") {
  CHECK(torsion_sublist(example()) == 0);
  const Arrangement pair(make_group(1, {2}), {vec({1, 0}), vec({0, 1})});
  CHECK(torsion_sublist(pair) == 2);
  const Arrangement finite(make_group(0, {6}), {vec({2}), vec({3})});
  CHECK(torsion_sublist(finite) == 3);
  CHECK(finite.is_torsion(0));
  CHECK_FALSE(pair.is_torsion(0));
}

TEST_CASE("lcm period examples") {
  CHECK(lcm_period(Arrangement(make_group(2, {}), {})) == 1);
  CHECK(lcm_period(example()) == 4);
  CHECK(lcm_period(Arrangement(make_group(2, {}), {vec({2, 0}), vec({0, 3})})) == 6);
}

TEST_CASE("construction rejects malformed elements") {
  CHECK_THROWS_AS(Arrangement(make_group(2, {}), {vec({1})}), std::invalid_argument);
  std::vector<IntegerVector> many(kMaxElements + 1, vec({1}));
  CHECK_THROWS_AS(Arrangement(make_group(1, {}), many), CapacityError);
}

TEST_CASE("torsion coordinates are reduced on construction") {
  const Arrangement arr(make_group(1, {2}), {vec({0, 3}), vec({1, -1})});
  CHECK(arr.element(0)(1) == 1);
  CHECK(arr.element(1)(1) == 1);
}

TEST_CASE("duplicates and restriction keep order") {
  const Arrangement arr = example().with_duplicate(1);
  REQUIRE(arr.size() == 4);
  CHECK(arr.element(3) == arr.element(1));
  const Arrangement r = arr.restricted(0b1010);
  REQUIRE(r.size() == 2);
  CHECK(r.element(0) == vec({0, 2}));
  CHECK(r.element(1) == vec({0, 2}));
  CHECK(Arrangement(make_group(2, {}), {vec({0, 0})}).contains_zero());
  CHECK_FALSE(example().contains_zero());
}

TEST_CASE("property: subset data matches determinantal divisors") {
  testsupport::Gen gen(21);
  for (int trial = 0; trial < 80; ++trial) {
    const Arrangement arr = random_arrangement(gen);
    CAPTURE(trial);
    for (std::uint64_t s = 0; s < arr.subset_count(); ++s) {
      const auto mask = static_cast<SubsetMask>(s);
      const auto expected = testsupport::quotient(arr, mask);
      const auto& data = arr.subset_data(mask);
      CHECK(data.rank == expected.rank_s);
      CHECK(data.torsion_factors == expected.torsion);
      CHECK(data.rank <= std::min(subset_size(mask), arr.ambient_rank()));
      CHECK(multiplicity(data, GroupSpec::circle()) == data.torsion_order());
    }
  }
}

TEST_CASE("property: rank is monotone and the largest factor divides the period") {
  testsupport::Gen gen(22);
  for (int trial = 0; trial < 80; ++trial) {
    const Arrangement arr = random_arrangement(gen);
    const Integer rho = lcm_period(arr);
    for (std::uint64_t s = 0; s < arr.subset_count(); ++s) {
      const auto mask = static_cast<SubsetMask>(s);
      CHECK(floor_mod(rho, arr.subset_data(mask).largest_factor()) == 0);
      for (std::size_t i = 0; i < arr.size(); ++i)
        CHECK(arr.subset_data(mask).rank <= arr.subset_data(mask | (SubsetMask{1} << i)).rank);
    }
  }
}

TEST_CASE("property: cyclic multiplicity depends on k modulo the period") {
  testsupport::Gen gen(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Arrangement arr = random_arrangement(gen);
    const Integer rho = lcm_period(arr);
    for (long k = 1; k <= 12; ++k) {
      const Integer k2 = k + rho * gen.between(1, 3);
      for (std::uint64_t s = 0; s < arr.subset_count(); ++s) {
        const auto& data = arr.subset_data(static_cast<SubsetMask>(s));
        const Integer a = multiplicity(data, GroupSpec::cyclic(k));
        CHECK(a == multiplicity(data, GroupSpec::cyclic(k2)));
        CHECK(a == testsupport::multiplicity_formula(data.torsion_factors, {Integer(k)}, 0));
      }
    }
  }
}
