#pragma once

// Subset-sum invariants of an arrangement: G-Tutte and arithmetic Tutte
// polynomials, G-characteristic polynomials and the chromatic quasi-polynomial.

#include <map>
#include <vector>

#include "abelarr/arrangement.hpp"
#include "abelarr/poly.hpp"

namespace abelarr {

/// Periods beyond this are refused.
inline constexpr unsigned long kMaxPeriod = 1ul << 40;
/// Largest period for which all constituents are listed one per residue.
inline constexpr unsigned long kMaxListedPeriod = 100000;

/// f^k depends on k only through gcd(k, period), so one polynomial is kept
/// per divisor of the period.
struct QuasiPolynomial {
  Integer period = 1;
  std::map<Integer, UniPoly> by_divisor;  // d | period -> f^d

  /// f^k for any k >= 1.
  const UniPoly& constituent(const Integer& k) const;
  Integer eval(const Integer& q) const;
  /// f^1 .. f^period; CapacityError past kMaxListedPeriod.
  std::vector<UniPoly> constituents() const;
};

/// Positive divisors in increasing order.
std::vector<Integer> divisors(const Integer& n);

/// T_A^G(x, y) = sum_S m(S;G) (x-1)^{r_A - r_S} (y-1)^{#S - r_S}.
BiPoly g_tutte(const Arrangement& arr, const GroupSpec& spec);

/// G = S^1: weights #(Γ/<S>)_tor.
BiPoly arithmetic_tutte(const Arrangement& arr);

/// (-1)^{r_A} t^{r_Γ - r_A} T_A^G(1 - t, 0).
UniPoly g_characteristic(const Arrangement& arr, const GroupSpec& spec);

/// Period ρ_A with f^k = χ^{Z/kZ}(t) for k = 1 .. ρ_A.
QuasiPolynomial chromatic_quasi(const Arrangement& arr);

/// f^1.
UniPoly first_constituent_check(const Arrangement& arr);

/// Arithmetic Tutte specialization; throws HypothesisError unless Γ is free and 0 ∉ A.
UniPoly toric_characteristic(const Arrangement& arr);

/// β_j(q) = (-1)^{r_Γ - j} [t^j] f^q, j = 0 .. r_Γ. Throws std::logic_error on a negative value.
std::vector<Integer> beta_coefficients(const Arrangement& arr, const Integer& q);
std::vector<Integer> beta_coefficients(const QuasiPolynomial& qp, int ambient_rank, const Integer& q);

struct ChenWangReport {
  Integer a;
  Integer b;
  std::vector<Integer> beta_a;
  std::vector<Integer> beta_b;
  std::vector<bool> holds;  // holds[j]: 0 <= β_j(a) <= β_j(b)
  bool all_hold() const;
};

/// Requires a | b; std::invalid_argument otherwise.
ChenWangReport chen_wang_compare(const Arrangement& arr, const Integer& a, const Integer& b);
ChenWangReport chen_wang_compare(const QuasiPolynomial& qp, int ambient_rank, const Integer& a, const Integer& b);

/// (-1)^{r_Γ} f^k(-q).
Integer reciprocity_eval(const Arrangement& arr, const Integer& k, const Integer& q);
Integer reciprocity_eval(const QuasiPolynomial& qp, int ambient_rank, const Integer& k, const Integer& q);

/// [t^{r_Γ}] χ_A^G(t) * (#F)^{r_Γ}; the g = 0 stand-in for the layer posets.
Integer leading_part(const Arrangement& arr, const GroupSpec& spec);

/// Smallest divisor of the period under which the constituents repeat.
Integer minimal_period(const QuasiPolynomial& qp);

}  // namespace abelarr
