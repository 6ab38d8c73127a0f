#pragma once

#include "quillen/collection.hpp"
#include "quillen/constructions.hpp"

namespace fixture {

inline quillen::GroupElement cyc(const char *s, unsigned n) {
  return quillen::Permutation::from_cycles(s, n);
}

inline quillen::Collection make(const quillen::GroupSpec &G, unsigned p,
                                std::vector<quillen::GroupElement> basis,
                                std::vector<quillen::GroupElement> c) {
  quillen::Collection C;
  C.group = G;
  C.E = quillen::ElemAbelianBasis(p, std::move(basis));
  C.c = std::move(c);
  C.maximality = quillen::default_maximality(G);
  return C;
}

// Rank-2 collection in Sym(6) at p = 3 whose first element swaps the two
// 3-cycles: it carries <e_2> into E but not onto itself.
inline quillen::Collection block_swap() {
  return make(quillen::symmetric_group(6), 3,
              {cyc("(1,2,3)", 6), cyc("(4,5,6)", 6)},
              {cyc("(1,4)(2,5)(3,6)", 6), cyc("()", 6)});
}

} // namespace fixture
