#pragma once

#include "quillen/group.hpp"
#include "quillen/subgroup.hpp"

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace quillen {

/// Ordered distinct indices from 1..r.
struct IndexTuple {
  unsigned r = 0;
  std::vector<unsigned> entries;

  IndexTuple() = default;
  /// Throws std::invalid_argument on repetition or out-of-range entries.
  IndexTuple(unsigned r, std::vector<unsigned> entries);

  std::size_t size() const { return entries.size(); }
  unsigned operator[](std::size_t k) const { return entries[k]; }
  /// Bitmask of the entries (bit i-1 for index i).
  std::uint32_t mask() const;
  /// First t entries.
  IndexTuple prefix(std::size_t t) const;
  std::string to_string() const;

  friend bool operator==(const IndexTuple &, const IndexTuple &) = default;
  friend auto operator<=>(const IndexTuple &, const IndexTuple &) = default;
};

/// All l-tuples for r, in lexicographic order; there are r!/(r-l)!.
std::vector<IndexTuple> index_tuples(unsigned r, unsigned l);
/// (-1)^{n+m}: n transpositions to sort the tuple, m positions where the
/// sorted tuple differs from [1..l].
int signature(const IndexTuple &t);

/// Ordered basis (e_1..e_r) of an elementary abelian p-subgroup.
class ElemAbelianBasis {
public:
  ElemAbelianBasis() = default;
  /// Throws std::invalid_argument unless each e_i has order p, they commute
  /// pairwise, and |<e_1..e_r>| = p^r. Requires r <= 12.
  ElemAbelianBasis(unsigned p, std::vector<GroupElement> basis);

  unsigned prime() const { return p_; }
  unsigned rank() const { return static_cast<unsigned>(basis_.size()); }
  const std::vector<GroupElement> &basis() const { return basis_; }
  /// 1-based.
  const GroupElement &e(unsigned i) const { return basis_.at(i - 1); }
  const SubgroupNode &group() const { return E_; }
  bool contains(const GroupElement &g) const { return E_.contains(g); }

  /// E_S: generated by the e_i with i-1 not in the mask.
  SubgroupNode subspace_mask(std::uint32_t removed) const;
  SubgroupNode subspace(const IndexTuple &t) const;
  SubgroupNode hyperplane(unsigned i) const; // E_i
  SubgroupNode line(unsigned i) const;       // <e_i>
  /// Bitmask of the basis indices with nonzero coordinate, or nullopt when
  /// g is not in E.
  std::optional<std::uint32_t> support(const GroupElement &g) const;

private:
  unsigned p_ = 0;
  std::vector<GroupElement> basis_;
  SubgroupNode E_;
  std::shared_ptr<const std::unordered_map<GroupElement, std::uint32_t,
                                           ElementHash>>
      support_;
  struct Cache {
    std::mutex mu;
    std::unordered_map<std::uint32_t, SubgroupNode> by_mask;
  };
  std::shared_ptr<Cache> cache_;
};

struct Collection {
  GroupSpec group;
  ElemAbelianBasis E;
  std::vector<GroupElement> c;
  MaximalityMode maximality = MaximalityMode::Enumerate;

  unsigned rank() const { return E.rank(); }
  unsigned prime() const { return E.prime(); }
};

/// Checks that c has one entry per basis element and every element is
/// compatible with the group's kind.
void validate_shape(const Collection &C);

/// c_1^{eps_1} ... c_r^{eps_r}
GroupElement c_power(const std::vector<GroupElement> &c,
                     const std::vector<int> &eps);

struct FaithfulViolation {
  std::vector<int> epsilon;
  std::vector<unsigned> removed; // indices defining E_S (1-based, sorted)
  std::string level;             // "generator" or "subspace"
};

struct FaithfulReport {
  bool faithful = false;
  bool generator_level = false; // via single lines <e_i>
  bool full_subspace = false;   // via every E_S, 0 < |S| < r
  std::size_t sign_vectors = 0;
  std::vector<FaithfulViolation> violations;
};

/// Both formulations are evaluated; `faithful` is their conjunction and a
/// disagreement is reported by the two flags differing.
FaithfulReport is_faithful(const Collection &C);

enum class Membership { Enumerated, Structural, Unchecked };
const char *to_string(Membership m);

struct ConditionFailure {
  std::string condition; // "a".."d" or "membership"
  std::string detail;
};

struct AdmissibleReport {
  bool admissible = false;
  Maximality maximality = Maximality::Asserted;
  Membership membership = Membership::Unchecked;
  bool members_ok = true;
  bool centralizes_hyperplanes = false; // (b)
  bool avoids_line_normalizers = false; // (c)
  bool pairwise_commute = false;        // (d)
  FaithfulReport faithful;
  std::vector<ConditionFailure> failures;
};

/// (a) maximality per mode, (b) c_i in C_G(E_i), (c) c_i not in N_G(<e_i>),
/// (d) [c_i, c_j] = 1. Throws InternalError if (b)-(d) hold and the
/// faithfulness check disagrees; throws CapExceeded for enumerate mode
/// beyond the cap.
AdmissibleReport is_admissible(const Collection &C, const GroupSpec &G);
AdmissibleReport is_admissible(const Collection &C);

/// Local conditions (b), (c), (d) only.
bool local_conditions_hold(const Collection &C);

std::optional<ObstructionCertificate> pstable_obstruction(const GroupSpec &G,
                                                          unsigned p);

} // namespace quillen
