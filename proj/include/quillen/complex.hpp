#pragma once

#include "quillen/group.hpp"
#include "quillen/snf.hpp"
#include "quillen/subgroup.hpp"

#include <map>
#include <unordered_map>
#include <vector>

namespace quillen {

/// The poset A_p(G): nodes sorted by (rank, elements), with the strict
/// inclusion relation stored as "above" lists.
struct Poset {
  unsigned p = 0;
  std::vector<SubgroupNode> nodes;
  std::vector<std::vector<std::uint32_t>> above; // indices of strict supersets
  std::unordered_map<SubgroupNode, std::uint32_t, SubgroupHash> index;

  std::size_t inclusion_count() const;
  unsigned max_rank() const;
  std::optional<std::uint32_t> find(const SubgroupNode &s) const;
  /// Nodes with nothing above them.
  std::vector<std::uint32_t> maximal() const;
};

/// All nontrivial elementary abelian p-subgroups of G. Throws CapExceeded.
Poset ap_poset(const GroupSpec &G, unsigned p);
/// Same, from an explicit element list (the whole group, in any order).
Poset ap_poset(const std::vector<GroupElement> &elements, unsigned p);

using IndexFlag = std::vector<std::uint32_t>;

/// Order complex: simplices_by_dim[k] lists the flags of k+1 nodes, sorted.
struct OrderComplex {
  std::vector<std::vector<IndexFlag>> simplices_by_dim;

  int dimension() const {
    return static_cast<int>(simplices_by_dim.size()) - 1;
  }
  std::size_t count(int k) const;
  std::optional<std::size_t> index_of(const IndexFlag &f) const;
  /// Augmented boundary C_k -> C_{k-1}, transposed: row s holds the
  /// boundary of the k-simplex s. For k = 0 the single column is the empty
  /// simplex.
  SparseIntMatrix boundary_matrix(int k) const;

  std::vector<std::map<IndexFlag, std::size_t>> lookup;
};

OrderComplex order_complex(const Poset &P);
/// Order complex of an abstract poset given by "above" lists over n nodes.
OrderComplex order_complex(std::size_t n,
                           const std::vector<std::vector<std::uint32_t>> &above);

/// Reduced integral homology, degrees -1..dim.
struct HomologyResult {
  std::map<int, std::uint64_t> betti;
  std::map<int, std::vector<BigInt>> torsion; // factors > 1
  std::map<int, std::size_t> simplex_count;   // includes the empty simplex

  std::uint64_t betti_at(int k) const;
  bool has_torsion(int k) const;
  /// Alternating sum of Betti numbers minus that of simplex counts; always 0.
  long long euler_defect() const;
};

HomologyResult homology(const OrderComplex &K);

struct QdpResult {
  unsigned rank = 0;
  HomologyResult homology;
  bool qdp = false;
};

unsigned p_rank(const GroupSpec &G, unsigned p);
QdpResult qdp_check(const GroupSpec &G, unsigned p);
QdpResult qdp_check(const Poset &P);

} // namespace quillen
