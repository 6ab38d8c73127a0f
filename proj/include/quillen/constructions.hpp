#pragma once

#include "quillen/collection.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace quillen {

enum class Family {
  SymAlt,
  A8p3,
  LinearDgt1,
  SL42,
  SL62,
  LinearDeq1,
  ProjectiveLinear,
  SL32Search,
  BlockSum,
  QuotientImage
};
const char *to_string(Family f);

enum class LinearKind { GL, SL, PGL, PSL, GU, SU };
const char *to_string(LinearKind k);
LinearKind parse_linear_kind(std::string_view s);

/// Parameters and derived quantities of a construction.
struct ConstructionRecipe {
  Family family = Family::SymAlt;
  unsigned n = 0;
  std::uint64_t q = 0;
  unsigned p = 0;
  std::optional<LinearKind> kind;
  unsigned d = 0; // multiplicative order of q mod p
  unsigned r = 0;
  unsigned b = 0; // n = r p + b
  unsigned f = 0; // n = r d + f
  std::string u;  // order-p element used, as text
  std::string z;  // scalar of order (n)_p (PSL case)
  std::string note;
};

struct Construction {
  Collection collection;
  ConstructionRecipe recipe;
};

/// MaximalityMode::Enumerate when the group is within the enumeration cap,
/// otherwise Asserted.
MaximalityMode default_maximality(const GroupSpec &G);

/// p > 3, n >= p; e_i = ((i-1)p+1 .. ip), c_i = ((i-1)p+1, (i-1)p+2,
/// (i-1)p+3) in Sym(n), or Alt(n) when `alternating`.
Construction symmetric_alternating(unsigned n, unsigned p,
                                   bool alternating = false);
/// e1=(1,2,3), e2=(4,5,6), c1=(1,7)(2,3), c2=(4,8)(5,6) in Alt(8) or Sym(8).
Construction a8_p3(bool symmetric = false);

/// GL or SL over GF(q) with d > 1; p odd, p not dividing q.
Construction linear_d_gt_1(unsigned n, std::uint64_t q, unsigned p,
                           LinearKind kind = LinearKind::SL);
/// Fixed SL(4,2) and SL(6,2) collections at p = 3.
Construction sl42();
Construction sl62();
/// SL(n,q) with p odd, p | q-1, gcd(p,n) = 1.
Construction linear_d_eq_1(unsigned n, std::uint64_t q, unsigned p);
/// PGL(n,q) or PSL(n,q) over central-coset elements. When p does not divide
/// the relevant center order the collection is the coset image of the
/// matching GL/SL collection.
Construction projective_linear(unsigned n, std::uint64_t q, unsigned p,
                               LinearKind kind);
/// Image of a matrix collection in the central quotient Q (PSL/PGL of the
/// same n, q). Also used to perturb-and-compare across the quotient.
Collection quotient_image(const Collection &C, const GroupSpec &Q);

/// GL/SL/GU/SU with p | q - eps (and p | gcd(n, q - eps) for S-types):
/// the central scalar of order p. Cross-checked against the enumerated
/// center for enumerable GL/SL instances.
ObstructionCertificate obstruction_family(LinearKind kind, unsigned n,
                                          std::uint64_t q, unsigned p);

/// The 2x2 matrices X and Y over GF(2) used by the fixed collections.
Matrix fixture_X();
Matrix fixture_Y();

} // namespace quillen
