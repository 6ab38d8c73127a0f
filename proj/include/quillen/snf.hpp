#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace quillen {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  static IntMatrix identity(std::size_t n);

  BigInt &operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const BigInt &operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }
  friend IntMatrix operator*(const IntMatrix &x, const IntMatrix &y);
  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;
};

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SmithResult {
  std::vector<BigInt> invariants; // nonzero diagonal entries, in order
  IntMatrix U, V, D;
  std::size_t rank() const { return invariants.size(); }
};

SmithResult smith_normal_form(const IntMatrix &M);
/// Nonzero invariant factors only; no transforms are kept.
std::vector<BigInt> invariant_factors(IntMatrix M);
bool is_unimodular(const IntMatrix &U);
BigInt determinant(const IntMatrix &M);

/// Sparse integer matrix given by rows of (column, value) pairs.
struct SparseIntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::map<std::size_t, std::int64_t>> row;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), row(r) {}
  void add(std::size_t i, std::size_t j, std::int64_t v);
  IntMatrix dense() const;
};

/// Invariant factors of a sparse matrix: eliminates unit pivots sparsely and
/// hands the remainder to the dense Smith form. Summarized as the count of
/// unit factors plus the list of factors greater than one.
struct SparseInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> torsion; // factors > 1
};
SparseInvariants sparse_invariants(const SparseIntMatrix &M);

/// Rank over Q by fraction-free elimination.
std::size_t rank_over_q(IntMatrix M);

/// Integer solution x of M x = b, if one exists.
std::optional<std::vector<BigInt>> solve_integer(const IntMatrix &M,
                                                 const std::vector<BigInt> &b);
/// True iff M x = b has a rational solution.
bool solvable_over_q(const IntMatrix &M, const std::vector<BigInt> &b);

} // namespace quillen
