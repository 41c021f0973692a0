#include "abelarr/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace abelarr {

UniPoly::UniPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Integer& c) { return UniPoly(std::vector<Integer>{c}); }

UniPoly UniPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer UniPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  acc.canonicalize();
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly operator*(const Integer& c, const UniPoly& a) {
  std::vector<Integer> out = a.coeffs_;
  for (auto& v : out) v *= c;
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int j = degree(); j >= 0; --j) {
    const Integer& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    if (mag != 1 || j == 0) out << mag.get_str();
    if (j >= 1) out << var;
    if (j >= 2) out << "^" << j;
    first = false;
  }
  return out.str();
}

UniPoly pow(const UniPoly& p, unsigned n) {
  UniPoly r = UniPoly::constant(1);
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

BiPoly BiPoly::constant(const Integer& c) {
  BiPoly p;
  p.add_term(0, 0, c);
  return p;
}

BiPoly BiPoly::x() {
  BiPoly p;
  p.add_term(1, 0, 1);
  return p;
}

BiPoly BiPoly::y() {
  BiPoly p;
  p.add_term(0, 1, 1);
  return p;
}

Integer BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Integer& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer BiPoly::eval(const Integer& x, const Integer& y) const {
  Integer acc = 0;
  for (const auto& [e, c] : terms_)
    acc += c * power(x, static_cast<unsigned long>(e.first)) * power(y, static_cast<unsigned long>(e.second));
  return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly operator-(const BiPoly& a) {
  BiPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

BiPoly operator*(const Integer& c, const BiPoly& a) {
  BiPoly r;
  for (const auto& [e, v] : a.terms_) r.add_term(e.first, e.second, c * v);
  return r;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    const bool bare = e.first == 0 && e.second == 0;
    if (mag != 1 || bare) out << mag.get_str();
    if (e.first >= 1) out << "x" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second >= 1) out << "y" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
    first = false;
  }
  return out.str();
}

BiPoly pow(const BiPoly& p, unsigned n) {
  BiPoly r = BiPoly::constant(1);
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

UniPoly substitute_xy(const BiPoly& T) {
  const UniPoly one_minus_t{1, -1};
  UniPoly out;
  for (const auto& [e, c] : T.terms())
    if (e.second == 0) out += c * pow(one_minus_t, static_cast<unsigned>(e.first));
  return out;
}

UniPoly scale_variable(const UniPoly& p, const Integer& c, unsigned g) {
  if (c < 1) throw std::invalid_argument("scale_variable: c must be >= 1");
  if (g < 1) throw std::invalid_argument("scale_variable: g must be >= 1");
  if (p.is_zero()) return {};
  std::vector<Integer> out(static_cast<std::size_t>(p.degree()) * g + 1, 0);
  Integer scale = 1;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
    out[i * g] = p.coeff(i) * scale;
    scale *= c;
  }
  return UniPoly(std::move(out));
}

}  // namespace abelarr
