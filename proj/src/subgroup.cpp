#include "quillen/subgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace quillen {

SubgroupNode SubgroupNode::generated(const std::vector<GroupElement> &gens,
                                     unsigned p) {
  if (gens.empty())
    throw std::invalid_argument(
        "SubgroupNode::generated: empty generator list needs an identity");
  return generated(gens, p, gens.front().identity());
}

SubgroupNode SubgroupNode::generated(const std::vector<GroupElement> &gens,
                                     unsigned p, const GroupElement &identity) {
  auto d = std::make_shared<Data>();
  d->p = p;
  std::vector<GroupElement> elems{identity};
  std::unordered_set<GroupElement, ElementHash> seen{identity};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto &g = gens[i];
    require_compatible(g, identity);
    for (std::size_t j = 0; j < i; ++j)
      if (!commutes(g, gens[j]))
        throw std::invalid_argument("generators of an elementary abelian "
                                    "subgroup must commute");
    if (g.is_identity())
      continue;
    if (!power(g, p).is_identity())
      throw std::invalid_argument("generator " + g.to_string() +
                                  " does not have order p");
    if (seen.count(g))
      continue;
    d->basis.push_back(g);
    const std::size_t base = elems.size();
    GroupElement gk = g;
    for (unsigned k = 1; k < p; ++k) {
      for (std::size_t t = 0; t < base; ++t) {
        GroupElement y = elems[t] * gk;
        seen.insert(y);
        elems.push_back(std::move(y));
      }
      gk = gk * g;
    }
  }
  std::sort(elems.begin(), elems.end());
  std::size_t h = elems.size();
  for (const auto &e : elems)
    h = h * 1000003u ^ e.hash();
  d->hash = h;
  d->elems = std::move(elems);
  SubgroupNode s;
  s.d_ = std::move(d);
  return s;
}

bool SubgroupNode::contains(const GroupElement &g) const {
  return std::binary_search(d_->elems.begin(), d_->elems.end(), g);
}

bool SubgroupNode::is_subgroup_of(const SubgroupNode &other) const {
  if (size() > other.size() || other.size() % size() != 0)
    return false;
  for (const auto &b : basis())
    if (!other.contains(b))
      return false;
  return true;
}

SubgroupNode SubgroupNode::conjugated_by(const GroupElement &x) const {
  std::vector<GroupElement> gens;
  gens.reserve(basis().size());
  for (const auto &b : basis())
    gens.push_back(conjugate(x, b));
  return generated(gens, prime(), elements().front().identity());
}

bool SubgroupNode::validate() const {
  if (!d_ || d_->elems.empty())
    return false;
  std::size_t expect = 1;
  for (unsigned i = 0; i < rank(); ++i)
    expect *= prime();
  if (size() != expect)
    return false;
  if (!std::is_sorted(d_->elems.begin(), d_->elems.end()) ||
      std::adjacent_find(d_->elems.begin(), d_->elems.end()) !=
          d_->elems.end())
    return false;
  for (const auto &a : d_->elems) {
    if (!a.is_identity() && element_order(a) != prime())
      return false;
    if (!contains(a.inverse()))
      return false;
    for (const auto &b : d_->elems)
      if (!contains(a * b) || !commutes(a, b))
        return false;
  }
  return true;
}

bool operator==(const SubgroupNode &a, const SubgroupNode &b) {
  if (a.d_ == b.d_)
    return true;
  if (!a.d_ || !b.d_)
    return false;
  return a.d_->hash == b.d_->hash && a.d_->elems == b.d_->elems;
}

std::strong_ordering operator<=>(const SubgroupNode &a,
                                 const SubgroupNode &b) {
  if (a.d_ == b.d_)
    return std::strong_ordering::equal;
  if (!a.d_ || !b.d_)
    return !a.d_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.size() <=> b.size(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(
      a.d_->elems.begin(), a.d_->elems.end(), b.d_->elems.begin(),
      b.d_->elems.end());
}

} // namespace quillen
