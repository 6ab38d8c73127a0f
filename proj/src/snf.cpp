#include "quillen/snf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quillen {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i)
    I(i, i) = 1;
  return I;
}

IntMatrix operator*(const IntMatrix &x, const IntMatrix &y) {
  if (x.cols != y.rows)
    throw std::invalid_argument("matrix dimensions do not match");
  IntMatrix r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const BigInt &v = x(i, k);
      if (v == 0)
        continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        r(i, j) += v * y(k, j);
    }
  return r;
}

namespace {

void swap_rows(IntMatrix &M, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < M.cols; ++j)
    std::swap(M(a, j), M(b, j));
}
void swap_cols(IntMatrix &M, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < M.rows; ++i)
    std::swap(M(i, a), M(i, b));
}
// row_dst += f * row_src
void add_row(IntMatrix &M, std::size_t dst, std::size_t src, const BigInt &f) {
  for (std::size_t j = 0; j < M.cols; ++j)
    if (M(src, j) != 0)
      M(dst, j) += f * M(src, j);
}
void add_col(IntMatrix &M, std::size_t dst, std::size_t src, const BigInt &f) {
  for (std::size_t i = 0; i < M.rows; ++i)
    if (M(i, src) != 0)
      M(i, dst) += f * M(i, src);
}

// Reduces D in place; U and V (when non-null) accumulate the row and column
// operations so that U * M * V = D.
void smith_in_place(IntMatrix &D, IntMatrix *U, IntMatrix *V) {
  const std::size_t m = D.rows, n = D.cols;
  auto rswap = [&](std::size_t a, std::size_t b) {
    swap_rows(D, a, b);
    if (U)
      swap_rows(*U, a, b);
  };
  auto cswap = [&](std::size_t a, std::size_t b) {
    swap_cols(D, a, b);
    if (V)
      swap_cols(*V, a, b);
  };
  auto radd = [&](std::size_t dst, std::size_t src, const BigInt &f) {
    add_row(D, dst, src, f);
    if (U)
      add_row(*U, dst, src, f);
  };
  auto cadd = [&](std::size_t dst, std::size_t src, const BigInt &f) {
    add_col(D, dst, src, f);
    if (V)
      add_col(*V, dst, src, f);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // least nonzero magnitude in the trailing block
    std::size_t pi = m, pj = n;
    BigInt best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const BigInt &v = D(i, j);
        if (v == 0)
          continue;
        BigInt a = abs(v);
        if (pi == m || a < best) {
          best = a;
          pi = i;
          pj = j;
          if (best == 1)
            goto found;
        }
      }
  found:
    if (pi == m)
      break;
    rswap(t, pi);
    cswap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0)
          continue;
        BigInt q = D(i, t) / D(t, t);
        if (q != 0)
          radd(i, t, -q);
        if (D(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0)
          continue;
        BigInt q = D(t, j) / D(t, t);
        if (q != 0)
          cadd(j, t, -q);
        if (D(t, j) != 0)
          clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survives; promote it
        std::size_t bi = t, bj = t;
        BigInt b = abs(D(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < b) {
            b = abs(D(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < b) {
            b = abs(D(t, j));
            bi = t;
            bj = j;
          }
        rswap(t, bi);
        cswap(t, bj);
        continue;
      }
      // divisibility of the trailing block by the pivot
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m)
        break;
      radd(t, bad, BigInt(1));
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j)
        D(t, j) = -D(t, j);
      if (U)
        for (std::size_t j = 0; j < U->cols; ++j)
          (*U)(t, j) = -(*U)(t, j);
    }
  }
}

std::vector<BigInt> diagonal_invariants(const IntMatrix &D) {
  std::vector<BigInt> out;
  for (std::size_t t = 0; t < std::min(D.rows, D.cols); ++t)
    if (D(t, t) != 0)
      out.push_back(D(t, t));
  return out;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix &M) {
  SmithResult r;
  r.D = M;
  r.U = IntMatrix::identity(M.rows);
  r.V = IntMatrix::identity(M.cols);
  smith_in_place(r.D, &r.U, &r.V);
  r.invariants = diagonal_invariants(r.D);
  return r;
}

std::vector<BigInt> invariant_factors(IntMatrix M) {
  smith_in_place(M, nullptr, nullptr);
  return diagonal_invariants(M);
}

BigInt determinant(const IntMatrix &M) {
  if (M.rows != M.cols)
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = M.rows;
  if (n == 0)
    return 1;
  IntMatrix A = M;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && A(s, k) == 0)
        ++s;
      if (s == n)
        return 0;
      swap_rows(A, k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix &U) {
  if (U.rows != U.cols)
    return false;
  BigInt d = determinant(U);
  return d == 1 || d == -1;
}

void SparseIntMatrix::add(std::size_t i, std::size_t j, std::int64_t v) {
  if (i >= rows || j >= cols)
    throw std::out_of_range("sparse matrix index");
  if (v == 0)
    return;
  auto &r = row[i];
  auto [it, inserted] = r.emplace(j, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0)
      r.erase(it);
  }
}

IntMatrix SparseIntMatrix::dense() const {
  IntMatrix M(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (auto [j, v] : row[i])
      M(i, j) = v;
  return M;
}

namespace {

struct Overflow {};

std::int64_t checked_mul_sub(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t prod, res;
  if (__builtin_mul_overflow(f, b, &prod) ||
      __builtin_sub_overflow(a, prod, &res))
    throw Overflow{};
  return res;
}

SparseInvariants eliminate(const SparseIntMatrix &M) {
  std::vector<std::map<std::size_t, std::int64_t>> R = M.row;
  std::vector<std::set<std::size_t>> colrows(M.cols);
  for (std::size_t i = 0; i < M.rows; ++i)
    for (auto [j, v] : R[i])
      colrows[j].insert(i);
  std::vector<bool> alive(M.rows, true);
  SparseInvariants out;

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t r = 0; r < M.rows; ++r) {
      if (!alive[r])
        continue;
      if (R[r].empty()) {
        alive[r] = false;
        continue;
      }
      std::size_t pc = M.cols;
      for (auto [j, v] : R[r])
        if ((v == 1 || v == -1) &&
            (pc == M.cols || colrows[j].size() < colrows[pc].size()))
          pc = j;
      if (pc == M.cols)
        continue;
      const std::int64_t pv = R[r].at(pc);
      std::vector<std::size_t> targets(colrows[pc].begin(),
                                       colrows[pc].end());
      for (std::size_t s : targets) {
        if (s == r)
          continue;
        const std::int64_t f = R[s].at(pc) * pv; // pv^{-1} == pv
        for (auto [j, v] : R[r]) {
          auto it = R[s].find(j);
          std::int64_t cur = it == R[s].end() ? 0 : it->second;
          std::int64_t nv = checked_mul_sub(cur, f, v);
          if (nv == 0) {
            if (it != R[s].end()) {
              R[s].erase(it);
              colrows[j].erase(s);
            }
          } else if (it == R[s].end()) {
            R[s].emplace(j, nv);
            colrows[j].insert(s);
          } else {
            it->second = nv;
          }
        }
      }
      for (auto [j, v] : R[r])
        colrows[j].erase(r);
      R[r].clear();
      alive[r] = false;
      ++out.rank;
      progress = true;
    }
  }

  std::vector<std::size_t> rows_left, cols_left;
  for (std::size_t i = 0; i < M.rows; ++i)
    if (!R[i].empty())
      rows_left.push_back(i);
  for (std::size_t j = 0; j < M.cols; ++j)
    if (!colrows[j].empty())
      cols_left.push_back(j);
  if (!rows_left.empty()) {
    IntMatrix D(rows_left.size(), cols_left.size());
    for (std::size_t a = 0; a < rows_left.size(); ++a)
      for (auto [j, v] : R[rows_left[a]]) {
        auto b = std::lower_bound(cols_left.begin(), cols_left.end(), j) -
                 cols_left.begin();
        D(a, b) = v;
      }
    for (auto &d : invariant_factors(std::move(D))) {
      ++out.rank;
      if (d > 1)
        out.torsion.push_back(d);
    }
  }
  return out;
}

} // namespace

SparseInvariants sparse_invariants(const SparseIntMatrix &M) {
  try {
    return eliminate(M);
  } catch (const Overflow &) {
    SparseInvariants out;
    for (auto &d : invariant_factors(M.dense())) {
      ++out.rank;
      if (d > 1)
        out.torsion.push_back(d);
    }
    return out;
  }
}

std::size_t rank_over_q(IntMatrix A) {
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < A.cols && rank < A.rows; ++c) {
    std::size_t s = rank;
    while (s < A.rows && A(s, c) == 0)
      ++s;
    if (s == A.rows)
      continue;
    swap_rows(A, rank, s);
    for (std::size_t i = rank + 1; i < A.rows; ++i) {
      for (std::size_t j = c + 1; j < A.cols; ++j)
        A(i, j) = (A(i, j) * A(rank, c) - A(i, c) * A(rank, j)) / prev;
      A(i, c) = 0;
    }
    prev = A(rank, c);
    ++rank;
  }
  return rank;
}

bool solvable_over_q(const IntMatrix &M, const std::vector<BigInt> &b) {
  if (b.size() != M.rows)
    throw std::invalid_argument("right-hand side has the wrong length");
  IntMatrix Aug(M.rows, M.cols + 1);
  for (std::size_t i = 0; i < M.rows; ++i) {
    for (std::size_t j = 0; j < M.cols; ++j)
      Aug(i, j) = M(i, j);
    Aug(i, M.cols) = b[i];
  }
  return rank_over_q(M) == rank_over_q(std::move(Aug));
}

std::optional<std::vector<BigInt>>
solve_integer(const IntMatrix &M, const std::vector<BigInt> &b) {
  if (b.size() != M.rows)
    throw std::invalid_argument("right-hand side has the wrong length");
  SmithResult s = smith_normal_form(M);
  std::vector<BigInt> c(M.rows);
  for (std::size_t i = 0; i < M.rows; ++i)
    for (std::size_t k = 0; k < M.rows; ++k)
      c[i] += s.U(i, k) * b[k];
  std::vector<BigInt> y(M.cols);
  const std::size_t r = s.rank();
  for (std::size_t i = 0; i < M.rows; ++i) {
    if (i < r) {
      if (c[i] % s.D(i, i) != 0)
        return std::nullopt;
      y[i] = c[i] / s.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<BigInt> x(M.cols);
  for (std::size_t i = 0; i < M.cols; ++i)
    for (std::size_t k = 0; k < M.cols; ++k)
      x[i] += s.V(i, k) * y[k];
  return x;
}

} // namespace quillen
