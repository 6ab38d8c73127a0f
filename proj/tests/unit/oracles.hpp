#pragma once
// Independent reference computations used to cross-check the library.

#include "quillen/snf.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

// Rank over Q by Gaussian elimination on exact fractions.
inline std::size_t rational_rank(const quillen::IntMatrix &M) {
  std::vector<std::vector<Rational>> a(M.rows, std::vector<Rational>(M.cols));
  for (std::size_t i = 0; i < M.rows; ++i)
    for (std::size_t j = 0; j < M.cols; ++j)
      a[i][j] = Rational(M(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < M.cols && rank < M.rows; ++col) {
    std::size_t piv = rank;
    while (piv < M.rows && a[piv][col] == 0)
      ++piv;
    if (piv == M.rows)
      continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == rank || a[i][col] == 0)
        continue;
      Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < M.cols; ++j)
        a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Sign of the tuple: parity of the sorting permutation from its cycle count,
// times (-1)^m for the m positions where the sorted tuple leaves 1..l.
inline int parity_signature(const std::vector<unsigned> &t) {
  const std::size_t l = t.size();
  std::vector<std::size_t> pos(l);
  std::iota(pos.begin(), pos.end(), 0);
  std::sort(pos.begin(), pos.end(),
            [&](std::size_t a, std::size_t b) { return t[a] < t[b]; });
  std::vector<bool> seen(l, false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < l; ++i) {
    if (seen[i])
      continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = pos[j])
      seen[j] = true;
  }
  std::vector<unsigned> sorted = t;
  std::sort(sorted.begin(), sorted.end());
  std::size_t m = 0;
  for (std::size_t i = 0; i < l; ++i)
    if (sorted[i] != i + 1)
      ++m;
  return ((l - cycles) + m) % 2 == 0 ? 1 : -1;
}

// First Betti number of a graph: |E| - |V| + components.
inline long long graph_betti1(std::size_t vertices,
                              const std::vector<std::pair<std::size_t,
                                                          std::size_t>> &edges,
                              std::size_t *components = nullptr) {
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = vertices;
  for (auto [a, b] : edges) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  if (components)
    *components = comps;
  return static_cast<long long>(edges.size()) -
         static_cast<long long>(vertices) + static_cast<long long>(comps);
}

} // namespace oracle
