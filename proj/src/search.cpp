#include "quillen/search.hpp"
#include "quillen/complex.hpp"
#include "quillen/error.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <unordered_set>

namespace quillen {

const char *to_string(SearchOutcome o) {
  switch (o) {
  case SearchOutcome::Found:
    return "found";
  case SearchOutcome::ExhaustivelyNone:
    return "exhaustively-none";
  case SearchOutcome::Obstructed:
    return "obstructed";
  case SearchOutcome::Capped:
    return "capped";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct TimeUp {};

// Lines of E as canonical generators (least non-identity element).
std::vector<GroupElement> line_generators(const SubgroupNode &E) {
  std::vector<GroupElement> out;
  std::unordered_set<GroupElement, ElementHash> seen;
  for (const auto &x : E.elements()) {
    if (x.is_identity() || seen.count(x))
      continue;
    out.push_back(x); // elements are sorted, so x is least on its line
    GroupElement y = x;
    while (!y.is_identity()) {
      seen.insert(y);
      y = y * x;
    }
  }
  return out;
}

// Ordered r-tuples of lines spanning E.
void frames_of(const std::vector<GroupElement> &lines, unsigned r, unsigned p,
               std::vector<GroupElement> &cur,
               std::vector<std::vector<GroupElement>> &out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  std::optional<SubgroupNode> span;
  if (!cur.empty())
    span = SubgroupNode::generated(cur, p);
  for (const auto &l : lines) {
    if (span && span->contains(l))
      continue;
    cur.push_back(l);
    frames_of(lines, r, p, cur, out);
    cur.pop_back();
  }
}

// Conjugation orbits of the poset nodes: node v = x[v] N x[v]^{-1} with
// N = nodes[rep[v]].
struct Transport {
  std::vector<std::uint32_t> rep;
  std::vector<GroupElement> x;
};

Transport conjugation_orbits(const Poset &P,
                             const std::vector<GroupElement> &gens) {
  const std::uint32_t none = ~std::uint32_t(0);
  Transport T;
  T.rep.assign(P.nodes.size(), none);
  T.x.resize(P.nodes.size());
  for (std::uint32_t v = 0; v < P.nodes.size(); ++v) {
    if (T.rep[v] != none)
      continue;
    T.rep[v] = v;
    T.x[v] = P.nodes[v].elements().front().identity();
    std::vector<std::uint32_t> queue{v};
    while (!queue.empty()) {
      auto u = queue.back();
      queue.pop_back();
      for (const auto &g : gens) {
        auto w = P.find(P.nodes[u].conjugated_by(g));
        if (!w)
          throw InternalError("conjugate subgroup missing from the poset");
        if (T.rep[*w] == none) {
          T.rep[*w] = v;
          T.x[*w] = g * T.x[u];
          queue.push_back(*w);
        }
      }
    }
  }
  return T;
}

class Searcher {
public:
  Searcher(const GroupSpec &G, unsigned p, const SearchLimits &lim,
           const EnumeratedGroup &elems, const Poset &P, SearchResult &res)
      : G_(G), p_(p), lim_(lim), group_(elems), elems_(elems.elements()),
        poset_(P), orbits_(conjugation_orbits(P, G.generators)), res_(res),
        start_(Clock::now()) {}

  // Returns true when the result limit is reached.
  bool search_subgroup(const SubgroupNode &E) {
    const unsigned r = E.rank();
    auto lines = line_generators(E);
    std::vector<std::vector<GroupElement>> frames;
    std::vector<GroupElement> cur;
    frames_of(lines, r, p_, cur, frames);
    for (const auto &frame : frames) {
      if (lim_.frame_reduction) {
        ++res_.stats.frames;
        if (search_basis(frame))
          return true;
        continue;
      }
      // every generator of every line
      std::vector<GroupElement> basis(r);
      std::vector<unsigned> k(r, 1);
      for (;;) {
        for (unsigned i = 0; i < r; ++i)
          basis[i] = power(frame[i], k[i]);
        ++res_.stats.frames;
        if (search_basis(basis))
          return true;
        unsigned i = 0;
        while (i < r && ++k[i] == p_)
          k[i++] = 1;
        if (i == r)
          break;
      }
    }
    return false;
  }

private:
  // C_G(H), as sorted element indices. Conjugates of an already computed
  // subgroup are handled by transporting its centralizer.
  const std::vector<std::uint32_t> &centralizer(const SubgroupNode &H) {
    auto it = cent_.find(H);
    if (it != cent_.end())
      return it->second;
    if (auto v = poset_.find(H); v && orbits_.rep[*v] != *v) {
      const auto &base = centralizer(poset_.nodes[orbits_.rep[*v]]);
      const GroupElement &x = orbits_.x[*v];
      const GroupElement xi = x.inverse();
      std::vector<std::uint32_t> out;
      out.reserve(base.size());
      for (auto c : base) {
        auto k = group_.index_of(x * elems_[c] * xi);
        if (!k)
          throw InternalError("conjugate element missing from the group");
        out.push_back(static_cast<std::uint32_t>(*k));
      }
      std::sort(out.begin(), out.end());
      return cent_.emplace(H, std::move(out)).first->second;
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t g = 0; g < elems_.size(); ++g) {
      bool ok = true;
      for (const auto &b : H.basis())
        if (!commutes(elems_[g], b)) {
          ok = false;
          break;
        }
      if (ok)
        out.push_back(g);
    }
    return cent_.emplace(H, std::move(out)).first->second;
  }

  const std::vector<std::uint32_t> &candidates(const SubgroupNode &H,
                                               const GroupElement &e) {
    SubgroupNode L = SubgroupNode::generated({e}, p_);
    auto key = std::make_pair(H, L);
    auto it = cand_.find(key);
    if (it != cand_.end())
      return it->second;
    ++res_.stats.candidate_sets;
    std::vector<GroupElement> powers;
    GroupElement acc = e;
    for (unsigned k = 1; k < p_; ++k) {
      powers.push_back(acc);
      acc = acc * e;
    }
    std::vector<std::uint32_t> out;
    for (auto g : centralizer(H))
      if (!normalizes_cyclic_powers(elems_[g], e, powers))
        out.push_back(g);
    return cand_.emplace(std::move(key), std::move(out)).first->second;
  }

  bool search_basis(const std::vector<GroupElement> &basis) {
    const unsigned r = static_cast<unsigned>(basis.size());
    const GroupElement id = G_.identity();
    std::vector<const std::vector<std::uint32_t> *> cand(r);
    std::vector<SubgroupNode> H;
    std::vector<unsigned> order(r);
    for (unsigned i = 0; i < r; ++i) {
      std::vector<GroupElement> others;
      for (unsigned j = 0; j < r; ++j)
        if (j != i)
          others.push_back(basis[j]);
      H.push_back(SubgroupNode::generated(others, p_, id));
      order[i] = i;
    }
    // smallest centralizers first, so an empty candidate set is found cheaply
    std::stable_sort(order.begin(), order.end(), [&](unsigned a, unsigned b) {
      return centralizer(H[a]).size() < centralizer(H[b]).size();
    });
    for (unsigned i : order) {
      cand[i] = &candidates(H[i], basis[i]);
      if (cand[i]->empty())
        return false;
    }
    std::vector<std::uint32_t> chosen;
    return backtrack(basis, cand, chosen);
  }

  bool backtrack(const std::vector<GroupElement> &basis,
                 const std::vector<const std::vector<std::uint32_t> *> &cand,
                 std::vector<std::uint32_t> &chosen) {
    if ((++res_.stats.nodes_visited & 0xfff) == 0)
      check_time();
    const std::size_t i = chosen.size();
    if (i == basis.size()) {
      ++res_.stats.tuples_tested;
      record(basis, chosen);
      return lim_.max_results != 0 && res_.found.size() >= lim_.max_results;
    }
    for (auto g : *cand[i]) {
      bool ok = true;
      for (auto h : chosen)
        if (!commutes(elems_[g], elems_[h])) {
          ok = false;
          break;
        }
      if (!ok)
        continue;
      chosen.push_back(g);
      if (backtrack(basis, cand, chosen))
        return true;
      chosen.pop_back();
    }
    return false;
  }

  void record(const std::vector<GroupElement> &basis,
              const std::vector<std::uint32_t> &chosen) {
    Collection C;
    C.group = G_;
    C.E = ElemAbelianBasis(p_, basis);
    for (auto g : chosen)
      C.c.push_back(elems_[g]);
    C.maximality = MaximalityMode::Enumerate;
    if (lim_.verify_hits) {
      auto rep = is_admissible(C, G_);
      if (!rep.admissible)
        throw InternalError("search produced a collection that is not "
                            "admissible");
    }
    res_.found.push_back(std::move(C));
  }

  void check_time() {
    if (lim_.time_budget > 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() >
            lim_.time_budget)
      throw TimeUp{};
  }

  const GroupSpec &G_;
  unsigned p_;
  const SearchLimits &lim_;
  const EnumeratedGroup &group_;
  const std::vector<GroupElement> &elems_;
  const Poset &poset_;
  Transport orbits_;
  SearchResult &res_;
  Clock::time_point start_;
  std::map<SubgroupNode, std::vector<std::uint32_t>> cent_;
  std::map<std::pair<SubgroupNode, SubgroupNode>, std::vector<std::uint32_t>>
      cand_;
};

// One representative index per orbit of the maximal nodes under conjugation.
std::vector<std::uint32_t> orbit_representatives(
    const Poset &P, const std::vector<std::uint32_t> &maximal,
    const std::vector<GroupElement> &gens) {
  std::vector<std::uint32_t> reps;
  std::unordered_set<std::uint32_t> seen;
  for (auto m : maximal) {
    if (seen.count(m))
      continue;
    reps.push_back(m);
    std::vector<std::uint32_t> queue{m};
    seen.insert(m);
    while (!queue.empty()) {
      auto v = queue.back();
      queue.pop_back();
      for (const auto &g : gens) {
        auto w = P.find(P.nodes[v].conjugated_by(g));
        if (!w)
          throw InternalError("conjugate of a maximal subgroup missing from "
                              "the poset");
        if (seen.insert(*w).second)
          queue.push_back(*w);
      }
    }
  }
  return reps;
}

} // namespace

SearchResult search_admissible(const GroupSpec &G, unsigned p,
                               const SearchLimits &limits) {
  const auto t0 = Clock::now();
  SearchResult res;
  res.group = G.name;
  res.p = p;
  auto finish = [&]() -> SearchResult {
    res.stats.seconds =
        std::chrono::duration<double>(Clock::now() - t0).count();
    return std::move(res);
  };
  if (!is_prime(p))
    throw std::invalid_argument("p must be prime");

  GroupSpec Gc = G;
  Gc.cap = limits.cap;
  auto E = Gc.enumerable() ? try_enumerate(Gc) : nullptr;
  if (!E) {
    res.outcome = SearchOutcome::Capped;
    res.detail = "group exceeds the enumeration cap of " +
                 std::to_string(limits.cap);
    return finish();
  }
  res.stats.group_order = E->size();

  if (!limits.force) {
    if (auto cert = pstable_obstruction(Gc, p)) {
      res.outcome = SearchOutcome::Obstructed;
      res.obstruction = std::move(cert);
      res.detail = "central element of order p";
      return finish();
    }
  }

  Poset P = ap_poset(E->elements(), p);
  res.stats.p_rank = P.max_rank();
  auto maximal = P.maximal();
  res.stats.maximal_subgroups = maximal.size();
  if (limits.conjugacy_reduction)
    maximal = orbit_representatives(P, maximal, Gc.generators);

  Searcher S(Gc, p, limits, *E, P, res);
  try {
    for (auto m : maximal) {
      const auto &node = P.nodes[m];
      if (node.rank() > limits.max_rank) {
        ++res.stats.skipped_by_rank;
        continue;
      }
      ++res.stats.subgroups_searched;
      if (S.search_subgroup(node))
        break;
    }
  } catch (const TimeUp &) {
    res.outcome = res.found.empty() ? SearchOutcome::Capped
                                    : SearchOutcome::Found;
    res.detail = "time budget exhausted";
    return finish();
  }

  if (!res.found.empty())
    res.outcome = SearchOutcome::Found;
  else if (res.stats.skipped_by_rank > 0) {
    res.outcome = SearchOutcome::Capped;
    res.detail = std::to_string(res.stats.skipped_by_rank) +
                 " maximal subgroups above the rank limit";
  } else
    res.outcome = SearchOutcome::ExhaustivelyNone;
  return finish();
}

} // namespace quillen
