#pragma once

// Brute-force ground truth. Everything here counts by plain enumeration with
// machine integers and does not call the normal-form code.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abelarr/arrangement.hpp"
#include "abelarr/poset.hpp"

namespace abelarr {

/// Largest enumeration the brute-force counters accept.
inline constexpr std::int64_t kBruteCap = 10'000'000;

/// #{φ ∈ Hom(Γ, Z/q) : φ(α) != 0 for all α ∈ A}.
std::int64_t brute_complement_count(const Arrangement& arr, std::int64_t q);

/// #Hom(source, ⊕ Z/f_j) by trying every tuple of images.
std::int64_t brute_hom_count(const FGAbelianGroup& source, const std::vector<std::int64_t>& target);

/// #M(A^tor; Γ_tor, ⊕ Z/f_j): homs on the torsion part avoiding every torsion element of A.
std::int64_t brute_torsion_complement(const Arrangement& arr, const std::vector<std::int64_t>& target);

/// μ(bottom[c], c) for every c from the textbook recursion, given only the order.
std::vector<Integer> brute_mobius(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less_equal,
                                  const std::vector<std::size_t>& bottom);
std::vector<Integer> brute_mobius(const IntersectionPoset& poset);

struct OracleOptions {
  std::int64_t qmax = 12;
  std::vector<int> lie_g{1};
  std::vector<std::vector<Integer>> lie_f{{2}, {3}};
  std::vector<std::pair<int, int>> chen_wang{{1, 2}, {2, 4}, {1, 3}, {3, 6}};
  /// Replaces m(S; Z/k) on the expected side of the k-component count check.
  std::function<Integer(const SubsetData&, const GroupSpec&)> multiplicity_override;
  bool shrink = true;
};

struct OracleEntry {
  std::size_t instance = 0;
  std::string check;
  std::string arrangement;
  bool passed = true;
  std::string detail;
};

struct OracleReport {
  std::uint64_t seed = 0;
  std::vector<OracleEntry> entries;
  /// Smallest arrangement found failing the first failed check.
  std::optional<std::string> shrunk;

  bool passed() const;
  std::size_t failure_count() const;
  const OracleEntry* first_failure() const;
  /// One line per entry: instance, check, PASS/FAIL, detail.
  std::string table() const;
};

/// Random arrangement with r_Γ <= 3, at most two torsion factors <= 6, #A <= 5,
/// entries in [-4, 4]. Deterministic in the seed.
Arrangement random_arrangement(std::uint64_t seed);

/// Names of the checks in the order they run on each instance.
std::vector<std::string> battery_checks();

/// Runs one named check; nullopt on success, otherwise the first disagreement.
std::optional<std::string> run_check(const std::string& check, const Arrangement& arr, const OracleOptions& options);

/// Every check on each of count random instances.
OracleReport randomized_battery(std::uint64_t seed, std::size_t count, const OracleOptions& options = {});

/// The fixed arrangements used throughout the tests.
std::vector<Arrangement> standard_battery();

}  // namespace abelarr
