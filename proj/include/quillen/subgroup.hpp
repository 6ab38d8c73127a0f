#pragma once

#include "quillen/element.hpp"

#include <memory>
#include <vector>

namespace quillen {

/// An elementary abelian p-subgroup, identified by its sorted element list.
/// Copies share the element storage.
class SubgroupNode {
public:
  SubgroupNode() = default;

  /// Closure of pairwise commuting elements of order p (identity allowed).
  /// Throws std::invalid_argument if the generators do not commute or an
  /// element has order other than 1 or p. An empty generator list needs
  /// `identity` to fix the ambient kind.
  static SubgroupNode generated(const std::vector<GroupElement> &gens,
                                unsigned p, const GroupElement &identity);
  static SubgroupNode generated(const std::vector<GroupElement> &gens,
                                unsigned p);

  const std::vector<GroupElement> &elements() const { return d_->elems; }
  /// A basis, in the order the generators were accepted.
  const std::vector<GroupElement> &basis() const { return d_->basis; }
  unsigned prime() const { return d_->p; }
  unsigned rank() const { return static_cast<unsigned>(d_->basis.size()); }
  std::size_t size() const { return d_->elems.size(); }
  bool empty() const { return !d_; }

  bool contains(const GroupElement &g) const;
  bool is_subgroup_of(const SubgroupNode &other) const;
  /// x N x^{-1}
  SubgroupNode conjugated_by(const GroupElement &x) const;
  /// Size p^rank, closure, exponent p and commutativity, by brute force.
  bool validate() const;
  std::size_t hash() const { return d_ ? d_->hash : 0; }

  friend bool operator==(const SubgroupNode &a, const SubgroupNode &b);
  /// Orders by size, then by element list.
  friend std::strong_ordering operator<=>(const SubgroupNode &a,
                                          const SubgroupNode &b);

private:
  struct Data {
    unsigned p = 0;
    std::vector<GroupElement> elems;
    std::vector<GroupElement> basis;
    std::size_t hash = 0;
  };
  std::shared_ptr<const Data> d_;
};

struct SubgroupHash {
  std::size_t operator()(const SubgroupNode &s) const { return s.hash(); }
};

} // namespace quillen
