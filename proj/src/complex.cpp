#include "quillen/complex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace quillen {

std::size_t Poset::inclusion_count() const {
  std::size_t n = 0;
  for (const auto &a : above)
    n += a.size();
  return n;
}

unsigned Poset::max_rank() const {
  unsigned r = 0;
  for (const auto &s : nodes)
    r = std::max(r, s.rank());
  return r;
}

std::optional<std::uint32_t> Poset::find(const SubgroupNode &s) const {
  auto it = index.find(s);
  if (it == index.end())
    return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> Poset::maximal() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < nodes.size(); ++i)
    if (above[i].empty())
      out.push_back(i);
  return out;
}

Poset ap_poset(const GroupSpec &G, unsigned p) {
  auto E = enumerate_group(G);
  return ap_poset(E->elements(), p);
}

Poset ap_poset(const std::vector<GroupElement> &elements, unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("p must be prime");
  std::vector<GroupElement> X;
  for (const auto &g : elements)
    if (!g.is_identity() && power(g, p).is_identity())
      X.push_back(g);
  std::sort(X.begin(), X.end());

  std::vector<SubgroupNode> all;
  std::unordered_map<GroupElement, std::size_t, ElementHash> line_of;
  // rank 1
  std::vector<SubgroupNode> level;
  for (const auto &x : X) {
    if (line_of.count(x))
      continue;
    SubgroupNode L = SubgroupNode::generated({x}, p);
    for (const auto &y : L.elements())
      if (!y.is_identity())
        line_of.emplace(y, level.size());
    level.push_back(L);
  }
  // higher ranks
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    std::unordered_set<SubgroupNode, SubgroupHash> next;
    for (const auto &N : level) {
      std::unordered_set<GroupElement, ElementHash> covered(
          N.elements().begin(), N.elements().end());
      for (const auto &x : X) {
        if (covered.count(x))
          continue;
        bool ok = true;
        for (const auto &b : N.basis())
          if (!commutes(x, b)) {
            ok = false;
            break;
          }
        if (!ok)
          continue;
        std::vector<GroupElement> gens = N.basis();
        gens.push_back(x);
        SubgroupNode S = SubgroupNode::generated(gens, p);
        covered.insert(S.elements().begin(), S.elements().end());
        next.insert(std::move(S));
      }
    }
    level.assign(next.begin(), next.end());
  }

  Poset P;
  P.p = p;
  std::sort(all.begin(), all.end());
  P.nodes = std::move(all);
  P.above.resize(P.nodes.size());
  for (std::uint32_t i = 0; i < P.nodes.size(); ++i)
    P.index.emplace(P.nodes[i], i);

  // Rank-1 nodes come first in sorted order; map each order-p element to the
  // sorted index of its line, and group nodes by the line of their first
  // basis element.
  std::unordered_map<GroupElement, std::uint32_t, ElementHash> line_index;
  for (std::uint32_t i = 0; i < P.nodes.size() && P.nodes[i].rank() == 1; ++i)
    for (const auto &y : P.nodes[i].elements())
      if (!y.is_identity())
        line_index.emplace(y, i);
  std::vector<std::vector<std::uint32_t>> by_first_line(P.nodes.size());
  for (std::uint32_t i = 0; i < P.nodes.size(); ++i)
    by_first_line[line_index.at(P.nodes[i].basis().front())].push_back(i);

  for (std::uint32_t b = 0; b < P.nodes.size(); ++b) {
    const auto &B = P.nodes[b];
    if (B.rank() < 2)
      continue;
    std::vector<std::uint32_t> lines;
    for (const auto &y : B.elements())
      if (!y.is_identity())
        lines.push_back(line_index.at(y));
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    for (auto L : lines)
      for (auto a : by_first_line[L])
        if (P.nodes[a].rank() < B.rank() && P.nodes[a].is_subgroup_of(B))
          P.above[a].push_back(b);
  }
  for (auto &v : P.above)
    std::sort(v.begin(), v.end());
  return P;
}

std::size_t OrderComplex::count(int k) const {
  if (k == -1)
    return 1;
  if (k < -1 || k > dimension())
    return 0;
  return simplices_by_dim[k].size();
}

std::optional<std::size_t> OrderComplex::index_of(const IndexFlag &f) const {
  if (f.empty() || f.size() > lookup.size())
    return std::nullopt;
  auto &m = lookup[f.size() - 1];
  auto it = m.find(f);
  if (it == m.end())
    return std::nullopt;
  return it->second;
}

SparseIntMatrix OrderComplex::boundary_matrix(int k) const {
  if (k < 0 || k > dimension())
    throw std::out_of_range("boundary degree out of range");
  const auto &S = simplices_by_dim[k];
  SparseIntMatrix M(S.size(), count(k - 1));
  for (std::size_t s = 0; s < S.size(); ++s) {
    if (k == 0) {
      M.add(s, 0, 1);
      continue;
    }
    for (std::size_t j = 0; j < S[s].size(); ++j) {
      IndexFlag face = S[s];
      face.erase(face.begin() + j);
      M.add(s, lookup[k - 1].at(face), (j % 2 == 0) ? 1 : -1);
    }
  }
  return M;
}

OrderComplex
order_complex(std::size_t n,
              const std::vector<std::vector<std::uint32_t>> &above) {
  OrderComplex K;
  IndexFlag chain;
  std::function<void(std::uint32_t)> dfs = [&](std::uint32_t v) {
    chain.push_back(v);
    std::size_t k = chain.size() - 1;
    if (K.simplices_by_dim.size() <= k)
      K.simplices_by_dim.resize(k + 1);
    K.simplices_by_dim[k].push_back(chain);
    for (auto w : above[v])
      dfs(w);
    chain.pop_back();
  };
  for (std::uint32_t v = 0; v < n; ++v)
    dfs(v);
  K.lookup.resize(K.simplices_by_dim.size());
  for (std::size_t k = 0; k < K.simplices_by_dim.size(); ++k) {
    auto &S = K.simplices_by_dim[k];
    std::sort(S.begin(), S.end());
    for (std::size_t i = 0; i < S.size(); ++i)
      K.lookup[k].emplace(S[i], i);
  }
  return K;
}

OrderComplex order_complex(const Poset &P) {
  return order_complex(P.nodes.size(), P.above);
}

std::uint64_t HomologyResult::betti_at(int k) const {
  auto it = betti.find(k);
  return it == betti.end() ? 0 : it->second;
}

bool HomologyResult::has_torsion(int k) const {
  auto it = torsion.find(k);
  return it != torsion.end() && !it->second.empty();
}

long long HomologyResult::euler_defect() const {
  long long chi_b = 0, chi_c = 0;
  for (auto [k, b] : betti)
    chi_b += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(b);
  for (auto [k, c] : simplex_count)
    chi_c += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(c);
  return chi_b - chi_c;
}

HomologyResult homology(const OrderComplex &K) {
  HomologyResult H;
  const int dim = K.dimension();
  // rank_d[k] = rank of the boundary C_k -> C_{k-1}, k = 0..dim
  std::vector<std::size_t> rank_d(dim + 2, 0);
  std::vector<std::vector<BigInt>> tors(dim + 2);
  for (int k = 0; k <= dim; ++k) {
    SparseInvariants inv = sparse_invariants(K.boundary_matrix(k));
    rank_d[k] = inv.rank;
    tors[k] = std::move(inv.torsion);
  }
  for (int k = -1; k <= dim; ++k) {
    std::size_t c = K.count(k);
    std::size_t out = k >= 0 ? rank_d[k] : 0;
    std::size_t in = k + 1 <= dim ? rank_d[k + 1] : 0;
    H.simplex_count[k] = c;
    H.betti[k] = c - out - in;
    std::vector<BigInt> t = k + 1 <= dim ? tors[k + 1] : std::vector<BigInt>{};
    H.torsion[k] = std::move(t);
  }
  return H;
}

unsigned p_rank(const GroupSpec &G, unsigned p) {
  return ap_poset(G, p).max_rank();
}

QdpResult qdp_check(const Poset &P) {
  QdpResult r;
  r.rank = P.max_rank();
  r.homology = homology(order_complex(P));
  if (r.rank >= 1) {
    int top = static_cast<int>(r.rank) - 1;
    r.qdp = r.homology.betti_at(top) > 0 || r.homology.has_torsion(top);
  }
  return r;
}

QdpResult qdp_check(const GroupSpec &G, unsigned p) {
  return qdp_check(ap_poset(G, p));
}

} // namespace quillen
