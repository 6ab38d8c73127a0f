#include "doctest.h"

#include "quillen/error.hpp"
#include "quillen/group.hpp"
#include "quillen/subgroup.hpp"

#include <cstdlib>
#include <set>

using namespace quillen;

namespace {

GroupElement cyc(const char *s, unsigned n = 8) {
  return Permutation::from_cycles(s, n);
}

GroupSpec generated_by(std::vector<GroupElement> gens, unsigned n) {
  GroupSpec G;
  G.name = "custom";
  G.kind = GroupKind::Permutation;
  G.n = n;
  G.generators = std::move(gens);
  return G;
}

bool closed(const EnumeratedGroup &G) {
  for (const auto &a : G.elements()) {
    if (!G.contains(a.inverse()))
      return false;
    for (const auto &b : G.elements())
      if (!G.contains(a * b))
        return false;
  }
  return true;
}

} // namespace

TEST_CASE("enumeration sizes") {
  auto S3 = enumerate_group(generated_by({cyc("(1,2)", 3), cyc("(1,2,3)", 3)}, 3));
  CHECK(S3->size() == 6);
  CHECK(closed(*S3));

  auto F3 = Field::create(3, 1);
  GroupSpec sl23;
  sl23.name = "SL(2,3) by transvections";
  sl23.kind = GroupKind::Matrix;
  sl23.n = 2;
  sl23.q = 3;
  sl23.generators = {transvection(1, 2, 2, F3), transvection(2, 1, 2, F3)};
  auto S = enumerate_group(sl23);
  CHECK(S->size() == 24);
  CHECK(S->size() == (9 - 1) * 3);
  CHECK(closed(*S));
  for (const auto &g : S->elements())
    CHECK(g.matrix().det() == 1);

  // (1..8) is odd, so adjust it by a transposition to make it even
  auto eight = cyc("(1,2,3,4,5,6,7,8)");
  auto adjusted = eight * cyc("(1,2)");
  REQUIRE(adjusted.permutation().is_even());
  auto A8 = enumerate_group(generated_by({cyc("(1,2,3)"), adjusted}, 8));
  CHECK(A8->size() == 20160);
  CHECK(enumerate_group(alternating_group(8))->size() == 20160);
}

TEST_CASE("built-in groups have the expected orders") {
  CHECK(enumerate_group(symmetric_group(5))->size() == 120);
  CHECK(enumerate_group(general_linear_group(2, 4))->size() == 180);
  CHECK(enumerate_group(special_linear_group(3, 4))->size() == 60480);
  CHECK(enumerate_group(projective_general_linear_group(2, 7))->size() == 336);
  CHECK(enumerate_group(projective_special_linear_group(2, 7))->size() == 168);
  CHECK(enumerate_group(named_group("SL(2,7)"))->size() == 336);
  CHECK(enumerate_group(named_group("ElemAb(3,2)"))->size() == 9);
  CHECK_THROWS(named_group("Foo(3)"));
}

TEST_CASE("element list is sorted and elements_of_order agrees with orders") {
  auto G = enumerate_group(symmetric_group(5));
  CHECK(std::is_sorted(G->elements().begin(), G->elements().end()));
  std::size_t count = 0;
  for (const auto &g : G->elements())
    if (element_order(g) == 3)
      ++count;
  CHECK(G->elements_of_order(3).size() == count);
  CHECK(count == 20);
}

TEST_CASE("enumeration cap") {
  GroupSpec G = symmetric_group(7);
  G.cap = 100;
  CHECK_THROWS_AS(enumerate_group(G), CapExceeded);
  CHECK(try_enumerate(G) == nullptr);
  CHECK(default_enumeration_cap() > 0);
}

TEST_CASE("centralizes") {
  auto id = GroupElement(Permutation::identity(8));
  CHECK(centralizes(id, {cyc("(1,2,3)"), cyc("(1,4)")}));
  auto c1 = cyc("(1,7)(2,3)");
  CHECK(centralizes(c1, {cyc("(4,5,6)")}));
  CHECK_FALSE(centralizes(c1, {cyc("(1,2,3)")}));

  // centralizing S is the same as centralizing generators of <S>
  auto E = SubgroupNode::generated({cyc("(1,2,3)"), cyc("(4,5,6)")}, 3);
  for (const auto &g : enumerate(alternating_group(8)))
    CHECK(centralizes(g, E.elements()) == centralizes(g, E.basis()));
}

TEST_CASE("normalizes_cyclic") {
  auto e1 = cyc("(1,2,3)");
  CHECK(normalizes_cyclic(e1, e1, 3));
  CHECK_FALSE(normalizes_cyclic(cyc("(1,7)(2,3)"), e1, 3));
  CHECK(normalizes_cyclic(cyc("(4,5,6)"), e1, 3));
  CHECK(normalizes_cyclic(cyc("(2,3)"), e1, 3));
  CHECK_THROWS(normalizes_cyclic(cyc("(1,2)"), cyc("(1,2)"), 3));
  auto f1 = cyc("(1,2,3)", 6);
  for (const auto &g : enumerate(symmetric_group(6)))
    CHECK(normalizes_cyclic(g, f1, 3) == normalizes_cyclic(g.inverse(), f1, 3));
}

TEST_CASE("central p-elements") {
  CHECK(central_p_elements(symmetric_group(5), 3).empty());
  auto gl = central_p_elements(general_linear_group(2, 4), 3);
  CHECK(gl.size() == 2);
  for (const auto &w : gl) {
    CHECK(w.matrix().is_scalar());
    CHECK(element_order(w) == 3);
  }
  CHECK(central_p_elements(special_linear_group(3, 4), 3).size() == 2);
  CHECK(central_p_elements(special_linear_group(2, 7), 3).empty());

  // <w> is normal
  auto G = enumerate(general_linear_group(2, 4));
  for (const auto &w : gl)
    for (const auto &g : G)
      CHECK(normalizes_cyclic(g, w, 3));
}

TEST_CASE("maximality of elementary abelian subgroups") {
  auto A8 = alternating_group(8);
  auto E = SubgroupNode::generated({cyc("(1,2,3)"), cyc("(4,5,6)")}, 3);
  CHECK(is_maximal_elem_abelian(A8, E.elements(), E.basis(), 3,
                                MaximalityMode::Enumerate) ==
        Maximality::Maximal);
  auto L = SubgroupNode::generated({cyc("(1,2,3)")}, 3);
  CHECK(is_maximal_elem_abelian(A8, L.elements(), L.basis(), 3,
                                MaximalityMode::Enumerate) ==
        Maximality::NotMaximal);
  CHECK(is_maximal_elem_abelian(A8, E.elements(), E.basis(), 3,
                                MaximalityMode::Asserted) ==
        Maximality::Asserted);
}

TEST_CASE("subgroup closure and validation") {
  auto E = SubgroupNode::generated({cyc("(1,2,3)"), cyc("(4,5,6)")}, 3);
  CHECK(E.size() == 9);
  CHECK(E.rank() == 2);
  CHECK(E.validate());
  auto L = SubgroupNode::generated({cyc("(4,6,5)")}, 3);
  CHECK(L.is_subgroup_of(E));
  CHECK_FALSE(E.is_subgroup_of(L));
  CHECK_THROWS(SubgroupNode::generated({cyc("(1,2,3)"), cyc("(3,4,5)")}, 3));
  CHECK_THROWS(SubgroupNode::generated({cyc("(1,2)")}, 3));
  auto x = cyc("(1,4)(2,5)(3,6)");
  CHECK(E.conjugated_by(x) == E);
  CHECK(L.conjugated_by(x) == SubgroupNode::generated({cyc("(1,3,2)")}, 3));

  // the identity of a matrix subgroup need not sort first
  auto F4 = Field::of_order(4);
  GroupElement w = Matrix::diagonal(F4, {2, 2});
  auto W = SubgroupNode::generated({w}, 3);
  auto y = GroupElement(transvection(1, 2, 2, F4));
  auto Wy = W.conjugated_by(y);
  CHECK(Wy == W);
  CHECK(Wy.contains(Matrix::identity(F4, 2)));
}
