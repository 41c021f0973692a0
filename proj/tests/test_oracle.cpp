#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abelarr/invariants.hpp"
#include "abelarr/oracle.hpp"
#include "support.hpp"

using namespace abelarr;
using testsupport::example;
using testsupport::vec;

namespace {

std::vector<Arrangement> sample() {
  std::vector<Arrangement> out = standard_battery();
  for (std::uint64_t s = 300; s < 340; ++s) out.push_back(random_arrangement(s));
  return out;
}

}  // namespace

TEST_CASE("complement counts") {
  CHECK(brute_complement_count(example(), 5) == 16);
  CHECK(brute_complement_count(example(), 2) == 0);
  CHECK(brute_complement_count(example(), 1) == 0);
  CHECK(brute_complement_count(Arrangement(make_group(2, {}), {}), 1) == 1);
  CHECK(brute_complement_count(Arrangement(make_group(2, {}), {}), 3) == 9);
  CHECK_THROWS_AS(brute_complement_count(Arrangement(make_group(3, {}), {}), 1000), CapacityError);
}

TEST_CASE("brute hom counts") {
  CHECK(brute_hom_count(make_group(0, {4}), {6}) == 2);
  CHECK(brute_hom_count(make_group(0, {}), {5}) == 1);
  CHECK(brute_hom_count(make_group(0, {2, 2}), {2}) == 4);
}

TEST_CASE("property: brute hom count agrees with the gcd formula up to order 64") {
  for (long a = 1; a <= 8; ++a)
    for (long b = 1; b <= 8; ++b)
      for (long f = 1; f <= 64; f *= 2) {
        if (a * b > 64 || b % a != 0) continue;
        std::vector<Integer> src;
        if (a > 1) src.emplace_back(a);
        if (b > 1) src.emplace_back(b);
        const FGAbelianGroup source = make_group(0, src);
        CHECK(Integer(static_cast<long>(brute_hom_count(source, {f}))) == hom_count(source, {Integer(f)}));
      }
}

TEST_CASE("brute mobius on classical posets") {
  // chain 0 < 1
  auto chain = brute_mobius(2, [](std::size_t a, std::size_t b) { return a <= b; }, {0, 0});
  CHECK(chain == std::vector<Integer>{1, -1});
  // diamond: 0 < 1, 2 < 3
  auto diamond = brute_mobius(4, [](std::size_t a, std::size_t b) {
    return a == b || a == 0 || b == 3;
  }, {0, 0, 0, 0});
  CHECK(diamond == std::vector<Integer>{1, -1, -1, 1});
  // boolean lattice B3 on bitmasks
  std::vector<std::size_t> bottoms(8, 0);
  auto boolean = brute_mobius(8, [](std::size_t a, std::size_t b) { return (a & b) == a; }, bottoms);
  for (std::size_t s = 0; s < 8; ++s) CHECK(boolean[s] == (std::popcount(s) % 2 ? -1 : 1));
}

TEST_CASE("property: brute complement count equals the quasi-polynomial") {
  for (const auto& arr : sample()) {
    const QuasiPolynomial qp = chromatic_quasi(arr);
    for (long q = 1; q <= 12; ++q) CHECK(Integer(static_cast<long>(brute_complement_count(arr, q))) == qp.eval(q));
  }
}

TEST_CASE("property: torsion complement is the constant part of the leading count") {
  for (const auto& arr : sample()) {
    std::vector<std::int64_t> target{6};
    const Integer top = g_characteristic(arr, GroupSpec::cyclic(6)).coeff(static_cast<std::size_t>(arr.ambient_rank()));
    CHECK(Integer(static_cast<long>(brute_torsion_complement(arr, target))) == top);
  }
}

TEST_CASE("random arrangements are deterministic and within bounds") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Arrangement a = random_arrangement(s);
    const Arrangement b = random_arrangement(s);
    CHECK(a.elements() == b.elements());
    CHECK(a.gamma() == b.gamma());
    CHECK(a.ambient_rank() <= 3);
    CHECK(a.gamma().torsion.size() <= 2);
    for (const auto& e : a.gamma().torsion) CHECK(e <= 6);
    CHECK(a.size() <= 5);
    for (const auto& v : a.elements())
      for (Index j = 0; j < a.ambient_rank(); ++j) CHECK(abs(v(j)) <= 4);
  }
}

TEST_CASE("battery with no instances") {
  const OracleReport report = randomized_battery(0, 0);
  CHECK(report.entries.empty());
  CHECK(report.passed());
  CHECK(report.first_failure() == nullptr);
}

TEST_CASE("battery on a few seeds passes every check") {
  const OracleReport report = randomized_battery(7, 6);
  CHECK(report.entries.size() == 6 * battery_checks().size());
  CHECK(report.passed());
  CHECK(report.table().find("FAIL") == std::string::npos);
  const OracleReport again = randomized_battery(7, 6);
  CHECK(again.table() == report.table());
}

TEST_CASE("standard battery passes every check") {
  for (const auto& arr : standard_battery())
    for (const auto& check : battery_checks()) {
      CAPTURE(arr.name());
      CAPTURE(check);
      const auto failure = run_check(check, arr, {});
      CHECK_MESSAGE(!failure.has_value(), failure.value_or(""));
    }
}

TEST_CASE("unknown checks are rejected") {
  CHECK_THROWS_AS(run_check("no-such-check", example(), {}), std::invalid_argument);
}

TEST_CASE("a corrupted multiplicity fails the component count first") {
  OracleOptions options;
  options.multiplicity_override = [](const SubsetData& data, const GroupSpec& spec) -> Integer {
    return multiplicity(data, spec) + 1;
  };
  const OracleReport report = randomized_battery(0, 3, options);
  REQUIRE_FALSE(report.passed());
  const OracleEntry* first = report.first_failure();
  REQUIRE(first != nullptr);
  CHECK(first->check == "lemma-k-components");
  CHECK(report.shrunk.has_value());
  for (const auto& e : report.entries)
    if (e.check != "lemma-k-components") CHECK(e.passed);
}
