#pragma once

#include "quillen/collection.hpp"
#include "quillen/subgroup.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quillen {

/// Strictly increasing chain of subgroups; k+1 terms span a k-simplex and the
/// empty flag is the augmentation simplex.
using Flag = std::vector<SubgroupNode>;
/// Finite integer combination of flags; zero coefficients are never stored.
using IntChain = std::map<Flag, std::int64_t>;

void add_term(IntChain &z, const Flag &f, std::int64_t coefficient);
IntChain scale(const IntChain &z, std::int64_t a);
IntChain add(const IntChain &a, const IntChain &b);
/// Augmented simplicial boundary: sum_j (-1)^j d_j, d_j dropping term j.
IntChain chain_boundary(const IntChain &z);
Flag translate(const Flag &f, const GroupElement &x);
IntChain translate(const IntChain &z, const GroupElement &x);
bool is_strict_flag(const Flag &f);

/// (E_{[i_1..i_{r-1}]} < ... < E_{i_1} < E) for a tuple of length r-1.
Flag sigma_flag(const ElemAbelianBasis &E, const IndexTuple &i);
/// sigma_flag without its top term E.
Flag tau_flag(const ElemAbelianBasis &E, const IndexTuple &i);
/// a * sum over (r-1)-tuples of sgn(i) sigma_i.
IntChain build_ZE(const ElemAbelianBasis &E, std::int64_t a);
/// (-1)^{r-1} a sum sgn(i) tau_i.
IntChain dz_formula(const ElemAbelianBasis &E, std::int64_t a);
/// chain_boundary(build_ZE(E, a)) == dz_formula(E, a).
bool prop_dz_check(const ElemAbelianBasis &E, std::int64_t a);

using DeltaVector = std::vector<int>; // entries in {0, 1}

struct Translate {
  GroupElement x;
  std::int64_t a = 0;
  DeltaVector delta; // label when built from a collection; may be empty
};

struct CycleSpec {
  ElemAbelianBasis E;
  std::vector<Translate> translates;
};

/// sum_j x_j Z_{E, a_j}
IntChain build_ZG(const CycleSpec &spec);

/// (-1)^{|delta|} for every delta in {0,1}^r, in lexicographic order.
std::map<DeltaVector, std::int64_t> standard_weights(unsigned r);
/// Translates c^delta with standard weights, delta in lexicographic order.
CycleSpec collection_cycle_spec(const Collection &C);

struct CoefficientEntry {
  std::size_t j = 0; // translate index
  IndexTuple i;
  std::int64_t C_direct = 0, C_formula = 0;
  std::int64_t D_direct = 0, D_formula = 0;
  std::vector<std::pair<std::size_t, IndexTuple>> C_set, D_set;
};

struct CoefficientReport {
  unsigned r = 0;
  std::vector<CoefficientEntry> entries; // ordered by (j, i)
  bool direct_matches_formula = false;
  bool C_subset_of_D = false;

  const CoefficientEntry &at(std::size_t j, const IndexTuple &i) const;
};

/// C and D both as accumulated coefficients of the translated flags in Z
/// and d(Z), and through the index sets.
CoefficientReport coefficient_tables(const CycleSpec &spec);

/// Agreement of the closed forms of the coefficient theorem with the
/// computed tables, for the standard spec of a collection with commuting c's.
struct CoefficientTheoremReport {
  bool part1 = false; // C via N_G(E)
  bool part2 = false; // D via N_G(E_{i_1})
  bool part3_applicable = false, part3 = false;
  bool part4_applicable = false, part4 = false;
  bool all() const {
    return part1 && part2 && (!part3_applicable || part3) &&
           (!part4_applicable || part4);
  }
};
CoefficientTheoremReport coefficient_theorem_check(const Collection &C,
                                                   const CycleSpec &spec,
                                                   const CoefficientReport &rep);

/// Does g normalize the subgroup S (g S g^{-1} = S)?
bool normalizes(const GroupElement &g, const SubgroupNode &S);

struct NonzeroClassCertificate {
  std::string group;
  unsigned p = 0;
  unsigned r = 0;
  bool granted = false;
  std::vector<std::pair<DeltaVector, IndexTuple>> C_nonzero_at;
  bool D_all_zero = false;
  std::size_t chain_terms = 0;
  Maximality maximality = Maximality::Asserted;
  std::string coefficient_ring = "Z";
  // passed, failed, skipped(cap), skipped(size) or
  // skipped(failed-precondition)
  std::string independent_homology_check;
  std::optional<std::uint64_t> betti_top;  // reduced betti_{r-1} when computed
  std::string detail;
};

class CertificationFailed : public std::runtime_error {
public:
  CertificationFailed(const std::string &what, NonzeroClassCertificate cert)
      : std::runtime_error(what), cert_(std::move(cert)) {}
  const NonzeroClassCertificate &certificate() const { return cert_; }

private:
  NonzeroClassCertificate cert_;
};

/// Builds the standard cycle of the collection and checks some C != 0 and
/// all D == 0; when G is enumerable also checks in the full order complex
/// that the chain is a cycle and not a boundary. Throws CertificationFailed
/// when the coefficient conditions fail or E is shown not maximal.
NonzeroClassCertificate certify_nonzero_class(const Collection &C,
                                              const GroupSpec &G);
NonzeroClassCertificate certify_nonzero_class(const Collection &C);

} // namespace quillen
