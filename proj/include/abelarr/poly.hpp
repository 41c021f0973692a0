#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abelarr/integer.hpp"

namespace abelarr {

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coefficients);
  UniPoly(std::initializer_list<long> coefficients);

  static UniPoly constant(const Integer& c);
  /// c * t^degree
  static UniPoly monomial(const Integer& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^j, zero past the degree.
  Integer coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Integer(0); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Integer& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Human-readable form in the variable t, highest degree first.
  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Integer> coeffs_;
};

UniPoly pow(const UniPoly& p, unsigned n);

/// Sparse bivariate polynomial in x, y with nonzero coefficients only.
class BiPoly {
public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Integer>;

  BiPoly() = default;
  static BiPoly constant(const Integer& c);
  static BiPoly x();
  static BiPoly y();

  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int i, int j) const;
  const Terms& terms() const { return terms_; }
  void add_term(int i, int j, const Integer& c);

  Integer eval(const Integer& x, const Integer& y) const;

  BiPoly& operator+=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(const BiPoly& a);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Integer& c, const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  std::string to_string() const;

private:
  Terms terms_;
};

BiPoly pow(const BiPoly& p, unsigned n);

/// T(1 - t, 0).
UniPoly substitute_xy(const BiPoly& T);

/// p(c * t^g), c >= 1, g >= 1.
UniPoly scale_variable(const UniPoly& p, const Integer& c, unsigned g);

}  // namespace abelarr
