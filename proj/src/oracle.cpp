#include "abelarr/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "abelarr/invariants.hpp"
#include "abelarr/lie_layers.hpp"
#include "abelarr/toric_layers.hpp"

namespace abelarr {

namespace {

using Row = std::vector<std::int64_t>;

struct Plain {
  int free_rank = 0;
  Row orders;  // torsion generator orders
  std::vector<Row> elements;
};

Plain plain_copy(const Arrangement& arr) {
  Plain p;
  p.free_rank = arr.gamma().free_rank;
  for (const auto& e : arr.gamma().torsion) p.orders.push_back(to_int64(e));
  for (const auto& v : arr.elements()) {
    Row row;
    for (Index i = 0; i < v.cols(); ++i) row.push_back(to_int64(v(i)));
    p.elements.push_back(std::move(row));
  }
  return p;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t checked_product(const Row& radix) {
  std::int64_t total = 1;
  for (auto r : radix) {
    if (r != 0 && total > kBruteCap / r) throw CapacityError("brute-force enumeration beyond " + std::to_string(kBruteCap));
    total *= r;
  }
  if (total > kBruteCap) throw CapacityError("brute-force enumeration beyond " + std::to_string(kBruteCap));
  return total;
}

// Visits every digit tuple with digit[i] in [0, radix[i]).
template <class F>
void odometer(const Row& radix, F&& visit) {
  Row digit(radix.size(), 0);
  for (auto r : radix)
    if (r == 0) return;
  for (;;) {
    visit(digit);
    std::size_t pos = digit.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < radix[pos]) break;
      digit[pos] = 0;
      if (pos == 0) return;
    }
    if (digit.empty()) return;
  }
}

// Elements of ⊕ Z/f_j enumerated as flat indices.
Row decode(std::int64_t index, const Row& target) {
  Row out(target.size());
  for (std::size_t j = target.size(); j-- > 0;) {
    out[j] = index % target[j];
    index /= target[j];
  }
  return out;
}

std::int64_t target_order(const Row& target) {
  std::int64_t o = 1;
  for (auto f : target) o *= f;
  return o;
}

}  // namespace

std::int64_t brute_complement_count(const Arrangement& arr, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("brute_complement_count: q must be >= 1");
  const Plain p = plain_copy(arr);
  Row radix;
  Row step;
  for (int i = 0; i < p.free_rank; ++i) {
    radix.push_back(q);
    step.push_back(1);
  }
  for (auto e : p.orders) {
    const std::int64_t g = std::gcd(e, q);
    radix.push_back(g);
    step.push_back(q / g);
  }
  checked_product(radix);
  std::int64_t count = 0;
  odometer(radix, [&](const Row& digit) {
    for (const auto& a : p.elements) {
      std::int64_t value = 0;
      for (std::size_t i = 0; i < digit.size(); ++i) value = mod(value + mod(a[i], q) * (digit[i] * step[i] % q), q);
      if (value == 0) return;
    }
    ++count;
  });
  return count;
}

std::int64_t brute_hom_count(const FGAbelianGroup& source, const std::vector<std::int64_t>& target) {
  const std::int64_t size = target_order(target);
  Row orders(static_cast<std::size_t>(source.free_rank), 0);
  for (const auto& e : source.torsion) orders.push_back(to_int64(e));
  Row radix(orders.size(), size);
  checked_product(radix);
  std::int64_t count = 0;
  odometer(radix, [&](const Row& digit) {
    for (std::size_t i = 0; i < digit.size(); ++i) {
      if (orders[i] == 0) continue;
      const Row x = decode(digit[i], target);
      for (std::size_t j = 0; j < target.size(); ++j)
        if (mod(orders[i] * x[j], target[j]) != 0) return;
    }
    ++count;
  });
  return count;
}

std::int64_t brute_torsion_complement(const Arrangement& arr, const std::vector<std::int64_t>& target) {
  const Plain p = plain_copy(arr);
  const std::int64_t size = target_order(target);
  std::vector<Row> torsion_elements;
  for (const auto& a : p.elements)
    if (std::all_of(a.begin(), a.begin() + p.free_rank, [](std::int64_t x) { return x == 0; }))
      torsion_elements.emplace_back(a.begin() + p.free_rank, a.end());
  Row radix(p.orders.size(), size);
  checked_product(radix);
  std::int64_t count = 0;
  odometer(radix, [&](const Row& digit) {
    std::vector<Row> images;
    for (std::size_t i = 0; i < digit.size(); ++i) {
      images.push_back(decode(digit[i], target));
      for (std::size_t j = 0; j < target.size(); ++j)
        if (mod(p.orders[i] * images[i][j], target[j]) != 0) return;
    }
    for (const auto& a : torsion_elements) {
      bool zero = true;
      for (std::size_t j = 0; j < target.size() && zero; ++j) {
        std::int64_t v = 0;
        for (std::size_t i = 0; i < a.size(); ++i) v = mod(v + a[i] * images[i][j], target[j]);
        zero = v == 0;
      }
      if (zero) return;
    }
    ++count;
  });
  return count;
}

std::vector<Integer> brute_mobius(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less_equal,
                                  const std::vector<std::size_t>& bottom) {
  std::vector<Integer> out(n);
  std::map<std::size_t, std::map<std::size_t, Integer>> mu;
  for (std::size_t b : bottom) {
    if (mu.count(b)) continue;
    std::vector<std::size_t> up;
    for (std::size_t z = 0; z < n; ++z)
      if (less_equal(b, z)) up.push_back(z);
    std::vector<std::size_t> height(n, 0);
    for (std::size_t z : up)
      for (std::size_t y : up)
        if (y != z && less_equal(y, z)) ++height[z];
    std::stable_sort(up.begin(), up.end(), [&](std::size_t x, std::size_t y) { return height[x] < height[y]; });
    auto& row = mu[b];
    for (std::size_t z : up) {
      if (z == b) {
        row[z] = 1;
        continue;
      }
      Integer sum = 0;
      for (std::size_t y : up)
        if (y != z && less_equal(y, z)) sum += row.at(y);
      row[z] = -sum;
    }
  }
  for (std::size_t c = 0; c < n; ++c) out[c] = mu.at(bottom[c]).at(c);
  return out;
}

std::vector<Integer> brute_mobius(const IntersectionPoset& poset) {
  std::vector<std::size_t> bottom;
  for (const auto& node : poset.nodes) bottom.push_back(node.bottom);
  return brute_mobius(
      poset.size(), [&](std::size_t a, std::size_t b) { return poset.less_equal(a, b); }, bottom);
}

bool OracleReport::passed() const { return first_failure() == nullptr; }

std::size_t OracleReport::failure_count() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.passed; }));
}

const OracleEntry* OracleReport::first_failure() const {
  for (const auto& e : entries)
    if (!e.passed) return &e;
  return nullptr;
}

std::string OracleReport::table() const {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << e.instance << "\t" << e.check << "\t" << (e.passed ? "PASS" : "FAIL") << "\t" << e.arrangement;
    if (!e.detail.empty()) out << "\t" << e.detail;
    out << "\n";
  }
  if (shrunk) out << "shrunk\t" << *shrunk << "\n";
  return out.str();
}

namespace {

std::string describe(const Arrangement& arr) {
  std::ostringstream out;
  out << (arr.gamma().generator_count() == 0 ? "0" : arr.gamma().to_string()) << " [";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out << (i ? " " : "") << "(";
    const auto& v = arr.element(i);
    for (Index j = 0; j < v.cols(); ++j) out << (j ? "," : "") << v(j).get_str();
    out << ")";
  }
  out << "]";
  return out.str();
}

std::string f_name(const std::vector<Integer>& f) { return f.empty() ? "trivial" : GroupSpec{f, 0, 0}.to_string(); }

// Lazily computed data shared by the checks of one instance.
struct Context {
  const Arrangement& arr;
  std::optional<QuasiPolynomial> qp;
  std::optional<ToricPoset> toric;
  std::map<std::pair<int, std::string>, LiePoset> lie;

  const QuasiPolynomial& quasi() {
    if (!qp) qp = chromatic_quasi(arr);
    return *qp;
  }
  const ToricPoset& toric_poset() {
    if (!toric) toric = enumerate_toric_layers(arr);
    return *toric;
  }
  const LiePoset& lie_poset(int g, const std::vector<Integer>& f) {
    auto key = std::make_pair(g, f_name(f));
    auto it = lie.find(key);
    if (it == lie.end()) it = lie.emplace(key, enumerate_lie_layers(arr, g, f)).first;
    return it->second;
  }
  /// Every k in 1 .. blocks·ρ when ρ is small, otherwise one k per class of
  /// gcd(k, ρ) in each block.
  std::vector<Integer> sweep(unsigned long blocks = 1) {
    const Integer& rho = quasi().period;
    std::vector<Integer> ks;
    if (rho <= kFullSweep) {
      for (unsigned long k = 1; k <= blocks * rho.get_ui(); ++k) ks.emplace_back(k);
      return ks;
    }
    for (unsigned long b = 0; b < blocks; ++b)
      for (const auto& d : divisors(rho)) ks.push_back(d + Integer(b) * rho);
    return ks;
  }

  static constexpr unsigned long kFullSweep = 720;
};

using Result = std::optional<std::string>;

// Layer orders dividing ρ make L[k] depend on k only through gcd(k, ρ).
Result orders_divide_period(Context& ctx) {
  const auto& P = ctx.toric_poset();
  for (LayerId c = 0; c < P.size(); ++c)
    if (floor_mod(ctx.quasi().period, P.layers[c].order) != 0)
      return "layer " + P.nodes[c].key + " has order " + P.layers[c].order.get_str() + " not dividing rho";
  return std::nullopt;
}

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
  return what + ": got " + got + ", expected " + want;
}

Result check_quasi_vs_brute(Context& ctx, const OracleOptions& opt) {
  for (std::int64_t q = 1; q <= opt.qmax; ++q) {
    const Integer symbolic = ctx.quasi().eval(Integer(static_cast<long>(q)));
    const std::int64_t brute = brute_complement_count(ctx.arr, q);
    if (symbolic != Integer(static_cast<long>(brute)))
      return mismatch("q=" + std::to_string(q), symbolic.get_str(), std::to_string(brute));
  }
  return std::nullopt;
}

Result check_k_partial(Context& ctx, const OracleOptions&) {
  const auto& P = ctx.toric_poset();
  if (auto r = orders_divide_period(ctx)) return r;
  const UniPoly par = characteristic(P, partial_subposet(P));
  const UniPoly circle = g_characteristic(ctx.arr, GroupSpec::circle());
  if (par != circle) return mismatch("L^par", par.to_string(), circle.to_string());
  const UniPoly tot = characteristic(P, P.all());
  const UniPoly stripped = g_characteristic(strip_torsion(ctx.arr), GroupSpec::circle());
  if (tot != stripped) return mismatch("L", tot.to_string(), stripped.to_string());
  for (const auto& k : ctx.sweep()) {
    const UniPoly got = k_partial_characteristic(P, k);
    const UniPoly& want = ctx.quasi().constituent(k);
    if (got != want) return mismatch("k=" + k.get_str(), got.to_string(), want.to_string());
  }
  return std::nullopt;
}

Result check_k_total(Context& ctx, const OracleOptions&) {
  const auto& P = ctx.toric_poset();
  if (auto r = orders_divide_period(ctx)) return r;
  const QuasiPolynomial stripped = chromatic_quasi(strip_torsion(ctx.arr));
  for (const auto& k : ctx.sweep()) {
    const UniPoly got = k_total_characteristic(P, k);
    const UniPoly& want = stripped.constituent(k);
    if (got != want) return mismatch("k=" + k.get_str(), got.to_string(), want.to_string());
  }
  return std::nullopt;
}

Result check_lie(Context& ctx, const OracleOptions& opt) {
  for (int g : opt.lie_g)
    for (const auto& f : opt.lie_f) {
      const auto& P = ctx.lie_poset(g, f);
      const std::string where = "g=" + std::to_string(g) + " F=" + f_name(f);
      UniPoly got = partial_characteristic(P);
      UniPoly want = expected_partial_characteristic(ctx.arr, g, f);
      if (got != want) return mismatch(where + " partial", got.to_string(), want.to_string());
      got = total_characteristic(P);
      want = expected_total_characteristic(ctx.arr, g, f);
      if (got != want) return mismatch(where + " total", got.to_string(), want.to_string());
    }
  return std::nullopt;
}

Result check_lie_chromatic(Context& ctx, const OracleOptions& opt) {
  const Integer rho = ctx.quasi().period;
  for (int g : opt.lie_g)
    for (long q = 1; q <= 6; ++q) {
      const Integer qg = power(Integer(q), static_cast<unsigned long>(g + 1));
      if (gcd_of(qg, rho) != gcd_of(Integer(q), rho)) continue;
      const auto f = q == 1 ? std::vector<Integer>{} : std::vector<Integer>{Integer(q)};
      const Integer got = partial_characteristic(ctx.lie_poset(g, f)).eval(Integer(q));
      const std::int64_t want = brute_complement_count(ctx.arr, to_int64(qg));
      if (got != Integer(static_cast<long>(want)))
        return mismatch("g=" + std::to_string(g) + " q=" + std::to_string(q), got.get_str(), std::to_string(want));
    }
  return std::nullopt;
}

Result check_k_components(Context& ctx, const OracleOptions& opt) {
  const auto& P = ctx.toric_poset();
  if (auto r = orders_divide_period(ctx)) return r;
  const auto ks = ctx.sweep(2);
  for (std::uint64_t m = 0; m < ctx.arr.subset_count(); ++m) {
    std::map<Integer, long> by_order;
    for (LayerId c : P.subset_components[m]) ++by_order[P.layers[c].order];
    const auto& data = ctx.arr.subset_data(static_cast<SubsetMask>(m));
    for (const auto& k : ks) {
      long count = 0;
      for (const auto& [o, n] : by_order)
        if (floor_mod(k, o) == 0) count += n;
      const GroupSpec spec = GroupSpec::cyclic(k);
      const Integer want = opt.multiplicity_override ? opt.multiplicity_override(data, spec) : multiplicity(data, spec);
      if (Integer(count) != want)
        return mismatch("S=" + std::to_string(m) + " k=" + k.get_str(), std::to_string(count), want.get_str());
    }
  }
  return std::nullopt;
}

Result key_lie_on(const IntersectionPoset& P, const LayerSet& partial, const std::string& where) {
  for (const auto& e : key_lie_sums(P, partial))
    if (!e.matches())
      return mismatch(where + " layer " + P.nodes[e.layer].key, e.alternating_sum.get_str(), e.expected.get_str());
  return std::nullopt;
}

Result check_key_lie(Context& ctx, const OracleOptions& opt) {
  const auto& T = ctx.toric_poset();
  if (auto r = key_lie_on(T, partial_subposet(T), "toric")) return r;
  for (int g : opt.lie_g)
    for (const auto& f : opt.lie_f) {
      const auto& P = ctx.lie_poset(g, f);
      if (auto r = key_lie_on(P, partial_subposet(P), "g=" + std::to_string(g) + " F=" + f_name(f))) return r;
    }
  return std::nullopt;
}

std::vector<std::int64_t> plain_torsion(const std::vector<Integer>& f) {
  std::vector<std::int64_t> out;
  for (const auto& x : f) out.push_back(to_int64(x));
  return out;
}

Result check_card_scc(Context& ctx, const OracleOptions& opt) {
  const auto& T = ctx.toric_poset();
  const auto& gamma = ctx.arr.gamma();
  // Hom(Γ_tor, S^1) = Hom(Γ_tor, Z/e) for the exponent e of Γ_tor
  const std::vector<std::int64_t> circle =
      gamma.torsion.empty() ? std::vector<std::int64_t>{} : std::vector<std::int64_t>{to_int64(gamma.exponent())};
  std::int64_t want = brute_torsion_complement(ctx.arr, circle);
  if (static_cast<std::int64_t>(scc(T).size()) != want)
    return mismatch("toric", std::to_string(scc(T).size()), std::to_string(want));
  for (int g : opt.lie_g)
    for (const auto& f : opt.lie_f) {
      const auto& P = ctx.lie_poset(g, f);
      const auto target = plain_torsion(f);
      std::int64_t free_part = 1;
      for (int i = 0; i < gamma.free_rank; ++i) free_part *= target_order(target);
      want = brute_torsion_complement(ctx.arr, target) * free_part;
      if (static_cast<std::int64_t>(scc(P).size()) != want)
        return mismatch("F=" + f_name(f), std::to_string(scc(P).size()), std::to_string(want));
    }
  return std::nullopt;
}

Result check_sign(Context& ctx, const OracleOptions& opt) {
  const auto& T = ctx.toric_poset();
  auto bad = sign_alternation_violations(T);
  if (!bad.empty()) return "toric layer " + T.nodes[bad.front()].key + " mu=" + T.nodes[bad.front()].mobius.get_str();
  for (int g : opt.lie_g)
    for (const auto& f : opt.lie_f) {
      const auto& P = ctx.lie_poset(g, f);
      bad = sign_alternation_violations(P);
      if (!bad.empty()) return "F=" + f_name(f) + " layer " + P.nodes[bad.front()].key;
    }
  return std::nullopt;
}

constexpr std::size_t kBruteMobiusLimit = 200;

Result check_mobius(Context& ctx, const OracleOptions& opt) {
  const auto& T = ctx.toric_poset();
  if (T.size() <= kBruteMobiusLimit) {
    std::vector<std::size_t> bottom;
    for (const auto& node : T.nodes) bottom.push_back(node.bottom);
    const auto mu = brute_mobius(
        T.size(), [&](std::size_t d, std::size_t c) { return toric_contains(T, d, c); }, bottom);
    for (LayerId c = 0; c < T.size(); ++c)
      if (mu[c] != T.nodes[c].mobius) return mismatch("toric " + T.nodes[c].key, T.nodes[c].mobius.get_str(), mu[c].get_str());
  }
  for (int g : opt.lie_g)
    for (const auto& f : opt.lie_f) {
      const auto& P = ctx.lie_poset(g, f);
      if (P.size() > kBruteMobiusLimit) continue;
      const auto mu = brute_mobius(P);
      for (LayerId c = 0; c < P.size(); ++c)
        if (mu[c] != P.nodes[c].mobius) return mismatch("F=" + f_name(f) + " " + P.nodes[c].key, P.nodes[c].mobius.get_str(), mu[c].get_str());
    }
  return std::nullopt;
}

Result check_order_ideals(Context& ctx, const OracleOptions&) {
  const auto& T = ctx.toric_poset();
  const LayerSet par = partial_subposet(T);
  if (!is_dual_order_ideal(T, par)) return std::string("L^par is not upward closed");
  if (auto r = orders_divide_period(ctx)) return r;
  for (const auto& a : ctx.sweep()) {
    const LayerSet La = k_total_subposet(T, a);
    if (!is_order_ideal(T, La)) return "L[" + a.get_str() + "] is not downward closed";
    for (long m : {2l, 3l}) {
      const Integer b = a * m;
      if (!is_subset(La, k_total_subposet(T, b))) return "L[" + a.get_str() + "] not in L[" + b.get_str() + "]";
      if (!is_subset(k_partial_subposet(T, a), k_partial_subposet(T, b)))
        return "L^par[" + a.get_str() + "] not in L^par[" + b.get_str() + "]";
    }
  }
  return std::nullopt;
}

Result check_chen_wang(Context& ctx, const OracleOptions& opt) {
  const int r = ctx.arr.ambient_rank();
  for (auto [a, b] : opt.chen_wang) {
    const auto rep = chen_wang_compare(ctx.quasi(), r, Integer(a), Integer(b));
    for (std::size_t j = 0; j < rep.holds.size(); ++j)
      if (!rep.holds[j])
        return "(" + std::to_string(a) + "," + std::to_string(b) + ") j=" + std::to_string(j) + ": " +
               rep.beta_a[j].get_str() + " > " + rep.beta_b[j].get_str();
  }
  return std::nullopt;
}

Result check_reciprocity(Context& ctx, const OracleOptions& opt) {
  const int r = ctx.arr.ambient_rank();
  for (const auto& k : ctx.sweep())
    for (long q = 1; q <= opt.qmax; ++q) {
      const Integer v = reciprocity_eval(ctx.quasi(), r, k, Integer(q));
      if (v < 0) return "k=" + k.get_str() + " q=" + std::to_string(q) + ": " + v.get_str();
    }
  return std::nullopt;
}

Result check_duplicates(Context& ctx, const OracleOptions&) {
  const auto& base = ctx.quasi();
  for (std::size_t i = 0; i < ctx.arr.size(); ++i) {
    const QuasiPolynomial dup = chromatic_quasi(ctx.arr.with_duplicate(i));
    if (dup.period != base.period)
      return mismatch("duplicate " + std::to_string(i) + " period", dup.period.get_str(), base.period.get_str());
    for (const auto& k : ctx.sweep())
      if (dup.constituent(k) != base.constituent(k))
        return mismatch("duplicate " + std::to_string(i) + " k=" + k.get_str(), dup.constituent(k).to_string(),
                        base.constituent(k).to_string());
  }
  return std::nullopt;
}

Result check_toric_specialization(Context& ctx, const OracleOptions&) {
  if (!ctx.arr.gamma().is_free() || ctx.arr.contains_zero()) return std::nullopt;
  const UniPoly got = toric_characteristic(ctx.arr);
  const UniPoly& want = ctx.quasi().constituent(ctx.quasi().period);
  if (got != want) return mismatch("constituent rho", got.to_string(), want.to_string());
  return std::nullopt;
}

using CheckFn = Result (*)(Context&, const OracleOptions&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks{
      {"quasi-vs-brute", check_quasi_vs_brute},
      {"k-partial-constituent", check_k_partial},
      {"k-total-constituent", check_k_total},
      {"lie-partial-total", check_lie},
      {"lie-chromatic", check_lie_chromatic},
      {"lemma-k-components", check_k_components},
      {"key-lie", check_key_lie},
      {"card-scc", check_card_scc},
      {"sign-alternation", check_sign},
      {"mobius-brute", check_mobius},
      {"order-ideals", check_order_ideals},
      {"chen-wang", check_chen_wang},
      {"reciprocity", check_reciprocity},
      {"duplicate-invariance", check_duplicates},
      {"toric-specialization", check_toric_specialization},
  };
  return checks;
}

Result run_in(const std::string& name, Context& ctx, const OracleOptions& opt) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      try {
        return fn(ctx, opt);
      } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
      }
    }
  throw std::invalid_argument("unknown oracle check: " + name);
}

bool fails(const std::string& check, const Arrangement& arr, const OracleOptions& opt) {
  return run_check(check, arr, opt).has_value();
}

// Drops elements, then moves entries toward zero, while the check keeps failing.
Arrangement shrink(const std::string& check, Arrangement arr, const OracleOptions& opt) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < arr.size() && !progress; ++i) {
      Arrangement smaller = arr.restricted(arr.full_mask() & ~(SubsetMask{1} << i));
      if (fails(check, smaller, opt)) {
        arr = smaller;
        progress = true;
      }
    }
    for (std::size_t i = 0; i < arr.size() && !progress; ++i)
      for (Index j = 0; j < arr.element(i).cols() && !progress; ++j) {
        const Integer x = arr.element(i)(j);
        if (x == 0) continue;
        for (const Integer& y : {Integer(0), Integer(x / 2), Integer(x - sign_of(x))}) {
          if (abs_value(y) >= abs_value(x)) continue;
          auto elems = arr.elements();
          elems[i](j) = y;
          Arrangement candidate(arr.gamma(), elems, arr.name());
          if (fails(check, candidate, opt)) {
            arr = candidate;
            progress = true;
            break;
          }
        }
      }
  }
  return arr;
}

}  // namespace

std::vector<std::string> battery_checks() {
  std::vector<std::string> names;
  for (const auto& c : registry()) names.push_back(c.first);
  return names;
}

Result run_check(const std::string& check, const Arrangement& arr, const OracleOptions& options) {
  Context ctx{arr, {}, {}, {}};
  return run_in(check, ctx, options);
}

Arrangement random_arrangement(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int r = pick(0, 3);
  std::vector<Integer> torsion;
  const int factors = r == 0 ? pick(1, 2) : pick(0, 2);
  if (factors >= 1) torsion.push_back(Integer(pick(2, 6)));
  if (factors == 2) {
    std::vector<int> multiples;
    for (int m = torsion[0].get_si(); m <= 6; m += static_cast<int>(torsion[0].get_si())) multiples.push_back(m);
    torsion.push_back(Integer(multiples[static_cast<std::size_t>(pick(0, static_cast<int>(multiples.size()) - 1))]));
  }
  const FGAbelianGroup gamma = make_group(r, torsion);
  const int n = pick(0, 5);
  std::vector<IntegerVector> elements;
  for (int i = 0; i < n; ++i) {
    IntegerVector v(gamma.generator_count());
    for (Index j = 0; j < v.cols(); ++j) v(j) = pick(-4, 4);
    reduce_torsion_coordinates(v, gamma);
    elements.push_back(v);
  }
  return Arrangement(gamma, std::move(elements), "random-" + std::to_string(seed));
}

OracleReport randomized_battery(std::uint64_t seed, std::size_t count, const OracleOptions& options) {
  OracleReport report;
  report.seed = seed;
  for (std::size_t i = 0; i < count; ++i) {
    const Arrangement arr = random_arrangement(seed * 1000003ull + i);
    const std::string text = describe(arr);
    Context ctx{arr, {}, {}, {}};
    for (const auto& name : battery_checks()) {
      OracleEntry e{i, name, text, true, {}};
      if (auto failure = run_in(name, ctx, options)) {
        e.passed = false;
        e.detail = *failure;
        if (options.shrink && !report.shrunk) report.shrunk = describe(shrink(name, arr, options));
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

std::vector<Arrangement> standard_battery() {
  auto vec = [](std::initializer_list<long> xs) {
    IntegerVector v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (long x : xs) v(i++) = x;
    return v;
  };
  std::vector<Arrangement> out;
  out.emplace_back(make_group(2, {}), std::vector<IntegerVector>{vec({-1, 1}), vec({0, 2}), vec({0, 4})}, "example");
  out.emplace_back(make_group(1, {2}), std::vector<IntegerVector>{vec({1, 0}), vec({0, 1})}, "torsion-pair");
  out.emplace_back(make_group(1, {2}), std::vector<IntegerVector>{vec({0, 1})}, "torsion-only");
  out.emplace_back(make_group(2, {}), std::vector<IntegerVector>{vec({1, 0}), vec({0, 1}), vec({1, 1})}, "braid-a2");
  out.emplace_back(make_group(2, {}), std::vector<IntegerVector>{vec({2, 0}), vec({0, 3}), vec({1, 1})}, "mixed-index");
  out.emplace_back(make_group(1, {2, 4}), std::vector<IntegerVector>{vec({1, 1, 0}), vec({2, 0, 2}), vec({0, 1, 3})},
                   "two-factor");
  out.emplace_back(make_group(3, {}), std::vector<IntegerVector>{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 1, 1})},
                   "rank-three");
  out.emplace_back(make_group(1, {}), std::vector<IntegerVector>{vec({2}), vec({3})}, "line");
  out.emplace_back(make_group(2, {}), std::vector<IntegerVector>{}, "empty");
  return out;
}

}  // namespace abelarr
