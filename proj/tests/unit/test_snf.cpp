#include "doctest.h"

#include "oracles.hpp"

#include "quillen/snf.hpp"

#include <random>

using namespace quillen;

namespace {

IntMatrix from(std::size_t r, std::size_t c, std::vector<long long> v) {
  IntMatrix M(r, c);
  for (std::size_t i = 0; i < v.size(); ++i)
    M.a[i] = v[i];
  return M;
}

IntMatrix random_matrix(std::mt19937 &rng, std::size_t r, std::size_t c,
                        int range, double density) {
  IntMatrix M(r, c);
  std::uniform_int_distribution<int> val(-range, range);
  std::bernoulli_distribution keep(density);
  for (auto &x : M.a)
    if (keep(rng))
      x = val(rng);
  return M;
}

bool diagonal_divisibility(const SmithResult &S) {
  for (std::size_t i = 0; i < S.D.rows; ++i)
    for (std::size_t j = 0; j < S.D.cols; ++j)
      if (i != j && S.D(i, j) != 0)
        return false;
  for (std::size_t k = 0; k < S.invariants.size(); ++k) {
    if (S.invariants[k] <= 0 || S.D(k, k) != S.invariants[k])
      return false;
    if (k > 0 && S.invariants[k] % S.invariants[k - 1] != 0)
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("small Smith forms") {
  auto Z = smith_normal_form(IntMatrix(3, 2));
  CHECK(Z.invariants.empty());
  CHECK(Z.rank() == 0);

  auto S = smith_normal_form(from(2, 2, {2, 0, 0, 3}));
  CHECK(S.invariants == std::vector<BigInt>{1, 6});
  CHECK(S.U * from(2, 2, {2, 0, 0, 3}) * S.V == S.D);

  auto I = smith_normal_form(IntMatrix::identity(4));
  CHECK(I.invariants == std::vector<BigInt>(4, 1));

  CHECK(invariant_factors(from(2, 3, {2, 4, 4, -6, 6, 12})) ==
        std::vector<BigInt>{2, 6});
}

TEST_CASE("certificate U M V = D on random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 18);
    auto M = random_matrix(rng, dim(rng), dim(rng), 9, 0.5);
    auto S = smith_normal_form(M);
    CHECK(S.U * M * S.V == S.D);
    CHECK(is_unimodular(S.U));
    CHECK(is_unimodular(S.V));
    CHECK(diagonal_divisibility(S));
    CHECK(S.rank() == oracle::rational_rank(M));
    CHECK(S.rank() == rank_over_q(M));
    CHECK(invariant_factors(M) == S.invariants);
  }
}

TEST_CASE("determinant is the product of invariants up to sign") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto M = random_matrix(rng, 6, 6, 5, 0.8);
    auto S = smith_normal_form(M);
    BigInt det = determinant(M);
    if (S.rank() < 6) {
      CHECK(det == 0);
    } else {
      BigInt prod = 1;
      for (const auto &d : S.invariants)
        prod *= d;
      CHECK(abs(det) == prod);
    }
  }
}

TEST_CASE("sparse invariants agree with dense") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 25);
    std::size_t r = dim(rng), c = dim(rng);
    SparseIntMatrix M(r, c);
    std::uniform_int_distribution<int> val(-3, 3);
    std::bernoulli_distribution keep(0.2);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (keep(rng))
          M.add(i, j, val(rng));
    auto dense = invariant_factors(M.dense());
    auto sp = sparse_invariants(M);
    CHECK(sp.rank == dense.size());
    std::vector<BigInt> torsion;
    for (const auto &d : dense)
      if (d > 1)
        torsion.push_back(d);
    CHECK(sp.torsion == torsion);
  }
}

TEST_CASE("integer and rational solvability") {
  auto M = from(2, 2, {2, 0, 0, 2});
  CHECK(solvable_over_q(M, {1, 1}));
  CHECK_FALSE(solve_integer(M, {1, 1}).has_value());
  auto x = solve_integer(M, {4, -6});
  REQUIRE(x.has_value());
  CHECK(*x == std::vector<BigInt>{2, -3});
  auto N = from(2, 1, {1, 1});
  CHECK_FALSE(solvable_over_q(N, {1, 2}));
}
