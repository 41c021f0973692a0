#include "abelarr/invariants.hpp"

#include <map>
#include <stdexcept>

namespace abelarr {

namespace {

Integer sign_power(int e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

}  // namespace

const UniPoly& QuasiPolynomial::constituent(const Integer& k) const {
  if (k < 1) throw std::invalid_argument("constituent index must be >= 1");
  return by_divisor.at(gcd_of(k, period));
}

Integer QuasiPolynomial::eval(const Integer& q) const { return constituent(q).eval(q); }

std::vector<UniPoly> QuasiPolynomial::constituents() const {
  if (period > kMaxListedPeriod)
    throw CapacityError("period " + period.get_str() + " is too long to list every constituent");
  std::vector<UniPoly> out;
  for (unsigned long k = 1; k <= period.get_ui(); ++k) out.push_back(constituent(Integer(k)));
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<Integer> low;
  std::vector<Integer> high;
  for (Integer d = 1; d * d <= n; ++d)
    if (floor_mod(n, d) == 0) {
      low.push_back(d);
      if (d * d != n) high.push_back(n / d);
    }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

BiPoly g_tutte(const Arrangement& arr, const GroupSpec& spec) {
  const int rA = arr.rank();
  // weight per exponent pair (r_A - r_S, #S - r_S), expanded once at the end
  std::map<std::pair<int, int>, Integer> weights;
  for (std::uint64_t s = 0; s < arr.subset_count(); ++s) {
    const auto& data = arr.subset_data(static_cast<SubsetMask>(s));
    const int i = rA - data.rank;
    const int j = subset_size(static_cast<SubsetMask>(s)) - data.rank;
    weights[{i, j}] += multiplicity(data, spec);
  }
  const BiPoly xm1 = BiPoly::x() - BiPoly::constant(1);
  const BiPoly ym1 = BiPoly::y() - BiPoly::constant(1);
  BiPoly T;
  for (const auto& [e, w] : weights)
    T += w * (pow(xm1, static_cast<unsigned>(e.first)) * pow(ym1, static_cast<unsigned>(e.second)));
  return T;
}

BiPoly arithmetic_tutte(const Arrangement& arr) { return g_tutte(arr, GroupSpec::circle()); }

UniPoly g_characteristic(const Arrangement& arr, const GroupSpec& spec) {
  const int rA = arr.rank();
  const UniPoly sub = substitute_xy(g_tutte(arr, spec));
  return UniPoly::monomial(sign_power(rA), static_cast<std::size_t>(arr.ambient_rank() - rA)) * sub;
}

QuasiPolynomial chromatic_quasi(const Arrangement& arr) {
  QuasiPolynomial qp;
  qp.period = lcm_period(arr);
  if (qp.period > kMaxPeriod) throw CapacityError("period " + qp.period.get_str() + " exceeds the cap");
  for (const auto& d : divisors(qp.period)) qp.by_divisor.emplace(d, g_characteristic(arr, GroupSpec::cyclic(d)));
  return qp;
}

UniPoly first_constituent_check(const Arrangement& arr) {
  return g_characteristic(arr, GroupSpec::cyclic(1));
}

UniPoly toric_characteristic(const Arrangement& arr) {
  if (!arr.gamma().is_free())
    throw HypothesisError("toric characteristic requires a free group, got " + arr.gamma().to_string());
  if (arr.contains_zero()) throw HypothesisError("toric characteristic requires 0 not in A");
  return g_characteristic(arr, GroupSpec::circle());
}

std::vector<Integer> beta_coefficients(const QuasiPolynomial& qp, int ambient_rank, const Integer& q) {
  if (q < 1) throw std::invalid_argument("beta_coefficients: q must be >= 1");
  const UniPoly& f = qp.constituent(q);
  std::vector<Integer> beta(static_cast<std::size_t>(ambient_rank) + 1);
  for (int j = 0; j <= ambient_rank; ++j) {
    beta[static_cast<std::size_t>(j)] = sign_power(ambient_rank - j) * f.coeff(static_cast<std::size_t>(j));
    if (beta[static_cast<std::size_t>(j)] < 0)
      throw std::logic_error("beta_" + std::to_string(j) + "(" + q.get_str() + ") is negative");
  }
  return beta;
}

std::vector<Integer> beta_coefficients(const Arrangement& arr, const Integer& q) {
  return beta_coefficients(chromatic_quasi(arr), arr.ambient_rank(), q);
}

bool ChenWangReport::all_hold() const {
  for (bool h : holds)
    if (!h) return false;
  return true;
}

ChenWangReport chen_wang_compare(const QuasiPolynomial& qp, int ambient_rank, const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) throw std::invalid_argument("chen_wang_compare: a and b must be positive");
  if (floor_mod(b, a) != 0)
    throw std::invalid_argument("chen_wang_compare: " + a.get_str() + " does not divide " + b.get_str());
  ChenWangReport r{a, b, beta_coefficients(qp, ambient_rank, a), beta_coefficients(qp, ambient_rank, b), {}};
  for (std::size_t j = 0; j < r.beta_a.size(); ++j) r.holds.push_back(r.beta_a[j] >= 0 && r.beta_a[j] <= r.beta_b[j]);
  return r;
}

ChenWangReport chen_wang_compare(const Arrangement& arr, const Integer& a, const Integer& b) {
  return chen_wang_compare(chromatic_quasi(arr), arr.ambient_rank(), a, b);
}

Integer reciprocity_eval(const QuasiPolynomial& qp, int ambient_rank, const Integer& k, const Integer& q) {
  if (q < 1) throw std::invalid_argument("reciprocity_eval: q must be >= 1");
  return sign_power(ambient_rank) * qp.constituent(k).eval(Integer(-q));
}

Integer reciprocity_eval(const Arrangement& arr, const Integer& k, const Integer& q) {
  return reciprocity_eval(chromatic_quasi(arr), arr.ambient_rank(), k, q);
}

Integer leading_part(const Arrangement& arr, const GroupSpec& spec) {
  const auto r = arr.ambient_rank();
  const UniPoly chi = g_characteristic(arr, spec);
  return chi.coeff(static_cast<std::size_t>(r)) * power(spec.finite_order(), static_cast<unsigned long>(r));
}

Integer minimal_period(const QuasiPolynomial& qp) {
  // k -> f^k is d-periodic iff it factors through gcd(k, d)
  const auto divs = divisors(qp.period);
  for (const auto& d : divs) {
    bool repeats = true;
    for (const auto& e : divs)
      if (!(repeats = qp.by_divisor.at(e) == qp.by_divisor.at(gcd_of(e, d)))) break;
    if (repeats) return d;
  }
  return qp.period;
}

}  // namespace abelarr
