#include "doctest.h"

#include "fixtures.hpp"

#include "quillen/cycles.hpp"

#include <random>

using namespace quillen;
using fixture::cyc;

namespace {

Matrix blocks2(const Matrix &a, const Matrix &b, const Matrix &c,
               const Matrix &d) {
  // [[a, b], [c, d]] from 2x2 blocks
  auto F = a.field();
  std::vector<Field::Elt> e(16);
  const Matrix *blk[2][2] = {{&a, &b}, {&c, &d}};
  for (unsigned R = 0; R < 2; ++R)
    for (unsigned C = 0; C < 2; ++C)
      for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j)
          e[(2 * R + i) * 4 + 2 * C + j] = blk[R][C]->at(i, j);
  return Matrix(F, 4, e);
}

bool full_check(const Collection &C) {
  auto rep = is_admissible(C);
  return rep.admissible && rep.maximality == Maximality::Maximal &&
         rep.membership == Membership::Enumerated;
}

} // namespace

TEST_CASE("symmetric and alternating family") {
  auto c = symmetric_alternating(10, 5);
  const auto &C = c.collection;
  REQUIRE(C.rank() == 2);
  CHECK(C.E.e(1) == cyc("(1,2,3,4,5)", 10));
  CHECK(C.E.e(2) == cyc("(6,7,8,9,10)", 10));
  CHECK(C.c[0] == cyc("(1,2,3)", 10));
  CHECK(C.c[1] == cyc("(6,7,8)", 10));
  CHECK(c.recipe.family == Family::SymAlt);
  CHECK(c.recipe.r == 2);
  CHECK(c.recipe.b == 0);

  auto s7 = symmetric_alternating(7, 7).collection;
  CHECK(s7.rank() == 1);
  CHECK(s7.E.e(1) == cyc("(1,2,3,4,5,6,7)", 7));
  CHECK(s7.c[0] == cyc("(1,2,3)", 7));

  CHECK_THROWS_AS(symmetric_alternating(5, 3), std::invalid_argument);
  CHECK_THROWS(symmetric_alternating(4, 5));

  CHECK(full_check(symmetric_alternating(5, 5).collection));
  CHECK(full_check(symmetric_alternating(5, 5, true).collection));
  CHECK(local_conditions_hold(C));
}

TEST_CASE("A_8 and Sym_8 at p = 3") {
  auto A = a8_p3();
  CHECK(A.collection.group.name == "Alt(8)");
  CHECK(A.collection.c[0] == cyc("(1,7)(2,3)", 8));
  CHECK(A.collection.c[0].permutation().is_even());
  CHECK(A.collection.c[1] == cyc("(4,8)(5,6)", 8));
  CHECK(full_check(A.collection));
  auto S = a8_p3(true);
  CHECK(S.collection.group.name == "Sym(8)");
  CHECK(full_check(S.collection));
}

TEST_CASE("SL_4(2) fixture matrices") {
  auto X = fixture_X(), Y = fixture_Y();
  auto F = Field::create(2, 1);
  CHECK(X == Matrix(F, 2, {0, 1, 1, 1}));
  CHECK(Y == Matrix(F, 2, {0, 1, 1, 0}));
  auto X2 = X * X;
  auto Z = Matrix(F, 2, {0, 0, 0, 0});
  auto C = sl42().collection;
  CHECK(C.E.e(1) == GroupElement(blocks2(X2, Z, Z, X2)));
  CHECK(C.E.e(2) == GroupElement(blocks2(X2, Z, Z, X)));
  CHECK(C.c[0] == GroupElement(blocks2(X, Z, Y, X)));
  CHECK(C.c[1] == GroupElement(blocks2(X, Z, X, X2)));
  CHECK(is_faithful(C).faithful);
  CHECK(full_check(C));
}

TEST_CASE("SL_6(2) fixture") {
  auto X = fixture_X();
  auto F = X.field();
  auto I = Matrix::identity(F, 2);
  auto C = sl62().collection;
  REQUIRE(C.rank() == 3);
  CHECK(C.E.e(1) == GroupElement(Matrix::block_diagonal({X * X, I, I})));
  CHECK(C.E.e(2) == GroupElement(Matrix::block_diagonal({X, X, X})));
  CHECK(C.E.e(3) == GroupElement(Matrix::block_diagonal({X * X, X * X, X})));
  CHECK(C.maximality == MaximalityMode::Asserted);
  CHECK(local_conditions_hold(C));
  CHECK(is_faithful(C).faithful);
  CHECK(is_admissible(C).admissible);
}

TEST_CASE("linear groups with d > 1") {
  CHECK_THROWS(linear_d_gt_1(2, 2, 3));
  auto c = linear_d_gt_1(4, 2, 3);
  CHECK(c.recipe.d == 2);
  CHECK(full_check(c.collection));
  for (auto [n, q, p] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
           {3, 2, 3}, {5, 2, 3}, {8, 2, 5}, {6, 2, 7}, {4, 3, 5}}) {
    CAPTURE(n);
    CAPTURE(q);
    CAPTURE(p);
    auto C = linear_d_gt_1(n, q, p).collection;
    CHECK(local_conditions_hold(C));
    CHECK(is_faithful(C).faithful);
    for (std::size_t i = 0; i < C.c.size(); ++i)
      for (std::size_t j = 0; j < C.c.size(); ++j)
        CHECK(commutes(C.c[i], C.c[j]));
    for (const auto &g : C.c)
      CHECK(g.matrix().det() == 1);
  }
  auto gl = linear_d_gt_1(4, 2, 3, LinearKind::GL).collection;
  CHECK(gl.group.name == "GL(4,2)");
}

TEST_CASE("linear groups with d = 1") {
  auto c = linear_d_eq_1(2, 7, 3);
  const auto &C = c.collection;
  auto F = Field::create(7, 1);
  REQUIRE(C.rank() == 1);
  CHECK(C.E.e(1) == GroupElement(Matrix::diagonal(F, {4, 2})));
  CHECK(C.c[0] == GroupElement(transvection(1, 2, 2, F)));
  CHECK(full_check(C));

  auto c4 = linear_d_eq_1(4, 4, 3).collection;
  CHECK(c4.rank() == 3);
  CHECK(local_conditions_hold(c4));
  CHECK(is_admissible(c4).admissible);

  CHECK_THROWS(linear_d_eq_1(3, 4, 3));

  for (std::uint64_t q : {4, 7, 11, 16})
    for (unsigned p : {3u, 5u}) {
      if ((q - 1) % p != 0)
        continue;
      for (unsigned n = 2; n <= 6; ++n) {
        if (n % p == 0)
          continue;
        CAPTURE(q);
        CAPTURE(p);
        CAPTURE(n);
        auto L = linear_d_eq_1(n, q, p).collection;
        CHECK(L.rank() == n - 1);
        for (const auto &e : L.E.basis())
          CHECK(e.matrix().det() == 1);
        CHECK(local_conditions_hold(L));
      }
    }
}

TEST_CASE("projective groups") {
  auto pgl = projective_linear(2, 7, 3, LinearKind::PGL).collection;
  REQUIRE(pgl.rank() == 1);
  CHECK(pgl.c[0].is_coset());
  CHECK_FALSE(normalizes(pgl.c[0], pgl.E.line(1)));
  CHECK(full_check(pgl));
  CHECK(full_check(projective_linear(2, 7, 3, LinearKind::PSL).collection));
  CHECK_THROWS(projective_linear(3, 7, 3, LinearKind::PSL));
  CHECK_THROWS(projective_linear(4, 5, 2, LinearKind::PSL));
}

TEST_CASE("admissibility transfers across a central p'-quotient") {
  // rank 1: faithfulness is vacuous, admissibility is not
  auto sl = linear_d_eq_1(2, 7, 3).collection;
  auto Q = projective_special_linear_group(2, 7);
  auto G = enumerate(special_linear_group(2, 7));
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
  int yes = 0, no = 0;
  for (int t = 0; t < 40; ++t) {
    auto C = sl;
    C.c[0] = G[pick(rng)];
    auto image = quotient_image(C, Q);
    CHECK(is_faithful(C).faithful);
    CHECK(is_faithful(image).faithful);
    bool a = is_admissible(C).admissible;
    CHECK(a == is_admissible(image).admissible);
    (a ? yes : no)++;
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("faithfulness transfers across a central p'-quotient in rank 3") {
  auto base = linear_d_eq_1(4, 7, 3).collection;
  auto Q = projective_special_linear_group(4, 7);
  auto F = Field::create(7, 1);
  // c_1 replaced by the permutation matrix of (1,2)(3,4), det 1: it swaps
  // diagonal entries, so carries lines of E to other lines of E
  std::vector<Field::Elt> swap{0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
  auto C = base;
  C.c[0] = Matrix(F, 4, swap);
  auto image = quotient_image(C, Q);
  CHECK_FALSE(is_faithful(C).faithful);
  CHECK_FALSE(is_faithful(image).faithful);
  auto good = quotient_image(base, Q);
  CHECK(is_faithful(base).faithful);
  CHECK(is_faithful(good).faithful);
  CHECK(local_conditions_hold(good));
}

TEST_CASE("obstruction families") {
  auto gl = obstruction_family(LinearKind::GL, 2, 4, 3);
  CHECK(gl.witness.matrix().is_scalar());
  CHECK(element_order(gl.witness) == 3);
  auto sl = obstruction_family(LinearKind::SL, 3, 4, 3);
  CHECK(sl.witness.matrix().det() == 1);
  CHECK_THROWS(obstruction_family(LinearKind::SL, 2, 7, 3));
  auto gu = obstruction_family(LinearKind::GU, 3, 2, 3);
  CHECK(element_order(gu.witness) == 3);
}
