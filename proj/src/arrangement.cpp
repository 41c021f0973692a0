#include "abelarr/arrangement.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

namespace abelarr {

struct Arrangement::Memo {
  std::mutex mutex;
  std::unordered_map<SubsetMask, SubsetData> table;
};

Integer SubsetData::torsion_order() const {
  Integer o = 1;
  for (const auto& d : torsion_factors) o *= d;
  return o;
}

Integer SubsetData::largest_factor() const {
  return torsion_factors.empty() ? Integer(1) : torsion_factors.back();
}

Integer GroupSpec::finite_order() const {
  Integer o = 1;
  for (const auto& f : f_torsion) o *= f;
  return o;
}

std::string GroupSpec::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& f : f_torsion) {
    out << (first ? "" : " x ") << "Z/" << f.get_str();
    first = false;
  }
  if (p > 0) {
    out << (first ? "" : " x ") << "S^1";
    if (p > 1) out << "^" << p;
    first = false;
  }
  if (q > 0) {
    out << (first ? "" : " x ") << "R";
    if (q > 1) out << "^" << q;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

GroupSpec GroupSpec::cyclic(const Integer& k) {
  if (k < 1) throw std::invalid_argument("cyclic group order must be positive");
  if (k == 1) return GroupSpec{};
  return GroupSpec{{k}, 0, 0};
}

GroupSpec GroupSpec::lie(int g, std::vector<Integer> f_torsion) { return make(std::move(f_torsion), 0, g); }

GroupSpec GroupSpec::make(std::vector<Integer> f_torsion, int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("group spec: p and q must be nonnegative");
  std::vector<Integer> kept;
  for (auto& f : f_torsion) {
    if (f < 1) throw std::invalid_argument("group spec: torsion factors must be positive");
    if (f > 1) kept.push_back(std::move(f));
  }
  // validates the divisibility chain
  make_group(0, kept);
  return GroupSpec{std::move(kept), p, q};
}

int reduce_torsion_coordinates(IntegerVector& v, const FGAbelianGroup& gamma) {
  int changed = 0;
  for (std::size_t i = 0; i < gamma.torsion.size(); ++i) {
    const Index c = gamma.free_rank + static_cast<Index>(i);
    Integer r = floor_mod(v(c), gamma.torsion[i]);
    if (r != v(c)) {
      v(c) = r;
      ++changed;
    }
  }
  return changed;
}

Arrangement::Arrangement(FGAbelianGroup gamma, std::vector<IntegerVector> elements, std::string name)
    : gamma_(make_group(gamma.free_rank, std::move(gamma.torsion))),
      elements_(std::move(elements)),
      name_(std::move(name)),
      memo_(std::make_shared<Memo>()) {
  if (elements_.size() > kMaxElements)
    throw CapacityError("arrangement has " + std::to_string(elements_.size()) + " elements; at most " +
                        std::to_string(kMaxElements) + " are supported (subset sweeps cost 2^#A)");
  for (auto& v : elements_) {
    if (v.cols() != gamma_.generator_count())
      throw std::invalid_argument("element of length " + std::to_string(v.cols()) + " in group " +
                                  gamma_.to_string() + " (expected " + std::to_string(gamma_.generator_count()) + ")");
    reduce_torsion_coordinates(v, gamma_);
  }
}

IntegerMatrix Arrangement::subset_matrix(SubsetMask mask) const {
  std::vector<IntegerVector> rows;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (mask & (SubsetMask{1} << i)) rows.push_back(elements_[i]);
  return stack_rows(rows, gamma_.generator_count());
}

const SubsetData& Arrangement::subset_data(SubsetMask mask) const {
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->table.find(mask);
    if (it != memo_->table.end()) return it->second;
  }
  SubsetData data = abelarr::subset_data(*this, mask);
  std::lock_guard lock(memo_->mutex);
  // a concurrent fill may have won; both values are identical
  return memo_->table.try_emplace(mask, std::move(data)).first->second;
}

bool Arrangement::is_torsion(std::size_t i) const {
  const auto& v = elements_.at(i);
  for (int c = 0; c < gamma_.free_rank; ++c)
    if (v(c) != 0) return false;
  return true;
}

bool Arrangement::contains_zero() const {
  for (const auto& v : elements_) {
    bool zero = true;
    for (Index c = 0; c < v.cols(); ++c) zero = zero && v(c) == 0;
    if (zero) return true;
  }
  return false;
}

Arrangement Arrangement::restricted(SubsetMask keep) const {
  std::vector<IntegerVector> kept;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (keep & (SubsetMask{1} << i)) kept.push_back(elements_[i]);
  return Arrangement(gamma_, std::move(kept), name_);
}

Arrangement Arrangement::with_duplicate(std::size_t i) const {
  auto elems = elements_;
  elems.push_back(elements_.at(i));
  return Arrangement(gamma_, std::move(elems), name_);
}

SubsetData subset_data(const Arrangement& arr, SubsetMask mask) {
  const FGAbelianGroup quotient = cokernel(arr.subset_matrix(mask), arr.gamma());
  SubsetData data;
  data.mask = mask;
  data.rank = arr.ambient_rank() - quotient.free_rank;
  data.torsion_factors = quotient.torsion;
  return data;
}

Integer multiplicity(const SubsetData& data, const GroupSpec& spec) {
  Integer m = 1;
  for (const auto& d : data.torsion_factors) {
    m *= power(d, static_cast<unsigned long>(spec.p));
    for (const auto& f : spec.f_torsion) m *= gcd_of(d, f);
  }
  return m;
}

SubsetMask torsion_sublist(const Arrangement& arr) {
  SubsetMask mask = 0;
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (arr.is_torsion(i)) mask |= SubsetMask{1} << i;
  return mask;
}

Integer lcm_period(const Arrangement& arr) {
  Integer rho = 1;
  for (std::uint64_t s = 0; s < arr.subset_count(); ++s)
    rho = lcm_of(rho, arr.subset_data(static_cast<SubsetMask>(s)).largest_factor());
  return rho;
}

}  // namespace abelarr
