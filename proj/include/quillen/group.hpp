#pragma once

#include "quillen/element.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace quillen {

enum class GroupKind { Permutation, Matrix };

/// Default enumeration cap: 500000 elements, overridable through the
/// QUILLEN_ENUM_CAP environment variable.
std::uint64_t default_enumeration_cap();

/// A group given by generators, with the ambient constraints needed to decide
/// membership locally when the group is one of the built-in families.
struct GroupSpec {
  std::string name;
  GroupKind kind = GroupKind::Permutation;
  unsigned n = 0;          // degree, or matrix dimension
  std::uint64_t q = 0;     // field order for matrix kinds
  bool det1 = false;       // matrices restricted to determinant 1
  bool quotient_center = false; // elements are cosets modulo the scalar center
  bool even_only = false;  // permutations restricted to even ones
  /// Membership is exactly the kind constraints above (full Sym/Alt/GL/SL and
  /// their central quotients). False for groups given only by generators.
  bool structural = false;
  std::vector<GroupElement> generators;
  std::uint64_t cap = default_enumeration_cap();
  std::optional<std::uint64_t> known_order;

  FieldPtr field() const;
  /// Order of the central scalar subgroup factored out (1 when not a quotient).
  unsigned center_order() const;
  GroupElement identity() const;
  /// Wraps a matrix as an element of this group's kind (coset when quotient).
  GroupElement from_matrix(const Matrix &m) const;
  /// Shape and determinant/parity constraints of the ambient kind.
  bool admits(const GroupElement &g) const;
  bool enumerable() const { return !known_order || *known_order <= cap; }
};

GroupSpec symmetric_group(unsigned n);
GroupSpec alternating_group(unsigned n);
GroupSpec general_linear_group(unsigned n, std::uint64_t q);
GroupSpec special_linear_group(unsigned n, std::uint64_t q);
GroupSpec projective_general_linear_group(unsigned n, std::uint64_t q);
GroupSpec projective_special_linear_group(unsigned n, std::uint64_t q);
/// C_p^r as the permutation group on p*r points generated by disjoint p-cycles.
GroupSpec elementary_abelian_perm_group(unsigned p, unsigned r);
/// "Sym(n)", "Alt(n)", "GL(n,q)", "SL(n,q)", "PGL(n,q)", "PSL(n,q)",
/// "ElemAb(p,r)".
GroupSpec named_group(std::string_view name);

/// Complete, duplicate-free, canonically sorted element list with lookup.
class EnumeratedGroup {
public:
  explicit EnumeratedGroup(std::vector<GroupElement> sorted);

  const std::vector<GroupElement> &elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const GroupElement &g) const { return index_.count(g) != 0; }
  std::optional<std::size_t> index_of(const GroupElement &g) const;
  /// Elements of order exactly p, in canonical order.
  std::vector<std::size_t> elements_of_order(unsigned p) const;

private:
  std::vector<GroupElement> elems_;
  std::unordered_map<GroupElement, std::size_t, ElementHash> index_;
};

/// Closure from the generators. Throws CapExceeded past G.cap elements.
std::shared_ptr<const EnumeratedGroup> enumerate_group(const GroupSpec &G);
std::vector<GroupElement> enumerate(const GroupSpec &G);
/// nullptr instead of throwing when the cap is exceeded.
std::shared_ptr<const EnumeratedGroup> try_enumerate(const GroupSpec &G);

bool centralizes(const GroupElement &g, const std::vector<GroupElement> &S);
/// True iff g e g^{-1} = e^k for some 1 <= k <= p-1. Throws unless e has
/// order p.
bool normalizes_cyclic(const GroupElement &g, const GroupElement &e, unsigned p);
/// Same predicate with the powers e^1..e^{p-1} precomputed.
bool normalizes_cyclic_powers(const GroupElement &g, const GroupElement &e,
                              const std::vector<GroupElement> &powers);

/// Order-p elements commuting with every generator. Enumerates when possible;
/// otherwise scalar matrices for the structural linear families. Throws
/// std::invalid_argument when neither applies.
std::vector<GroupElement> central_p_elements(const GroupSpec &G, unsigned p);

/// Witness that a central element of order p exists, so no collection with
/// c_i in C_G(E_i) \ C_G(e_i) exists on any maximal E.
struct ObstructionCertificate {
  GroupSpec group;
  unsigned p = 0;
  GroupElement witness;
  std::string source; // "enumeration" or "structural"
};

enum class MaximalityMode { Enumerate, Asserted };
enum class Maximality { Maximal, NotMaximal, Asserted };

const char *to_string(MaximalityMode m);
const char *to_string(Maximality m);
MaximalityMode parse_maximality_mode(std::string_view s);

/// In enumerate mode: true iff no order-p element outside E centralizes E.
/// The caller supplies E's elements; only its generators are used for the
/// centralizer test.
Maximality is_maximal_elem_abelian(const GroupSpec &G,
                                   const std::vector<GroupElement> &E_elements,
                                   const std::vector<GroupElement> &E_generators,
                                   unsigned p, MaximalityMode mode);

} // namespace quillen
