#include "quillen/collection.hpp"
#include "quillen/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quillen {

IndexTuple::IndexTuple(unsigned r_, std::vector<unsigned> e)
    : r(r_), entries(std::move(e)) {
  if (entries.size() > r)
    throw std::invalid_argument("index tuple longer than r");
  std::uint64_t seen = 0;
  for (auto i : entries) {
    if (i < 1 || i > r)
      throw std::invalid_argument("index " + std::to_string(i) +
                                  " out of range 1.." + std::to_string(r));
    if (seen & (std::uint64_t{1} << (i - 1)))
      throw std::invalid_argument("repeated index " + std::to_string(i));
    seen |= std::uint64_t{1} << (i - 1);
  }
}

std::uint32_t IndexTuple::mask() const {
  std::uint32_t m = 0;
  for (auto i : entries)
    m |= 1u << (i - 1);
  return m;
}

IndexTuple IndexTuple::prefix(std::size_t t) const {
  return IndexTuple(r, std::vector<unsigned>(entries.begin(),
                                             entries.begin() + t));
}

std::string IndexTuple::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < entries.size(); ++k)
    os << (k ? "," : "") << entries[k];
  os << ']';
  return os.str();
}

std::vector<IndexTuple> index_tuples(unsigned r, unsigned l) {
  if (l > r)
    throw std::invalid_argument("index_tuples: need 0 <= l <= r");
  if (r > 12)
    throw std::invalid_argument("index_tuples: r > 12");
  std::vector<IndexTuple> out;
  std::vector<unsigned> cur;
  std::vector<bool> used(r + 1, false);
  auto rec = [&](auto &&self) -> void {
    if (cur.size() == l) {
      out.emplace_back(r, cur);
      return;
    }
    for (unsigned i = 1; i <= r; ++i) {
      if (used[i])
        continue;
      used[i] = true;
      cur.push_back(i);
      self(self);
      cur.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  return out;
}

int signature(const IndexTuple &t) {
  const auto &v = t.entries;
  unsigned inversions = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[a] > v[b])
        ++inversions;
  std::vector<unsigned> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  unsigned m = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != k + 1)
      ++m;
  return (inversions + m) % 2 == 0 ? 1 : -1;
}

// ------------------------------------------------------------------ basis

ElemAbelianBasis::ElemAbelianBasis(unsigned p, std::vector<GroupElement> basis)
    : p_(p), basis_(std::move(basis)), cache_(std::make_shared<Cache>()) {
  if (!is_prime(p))
    throw std::invalid_argument("p must be prime");
  if (basis_.empty())
    throw std::invalid_argument("basis must be non-empty");
  if (basis_.size() > 12)
    throw std::invalid_argument("rank above 12 is not supported");
  for (const auto &e : basis_) {
    require_compatible(e, basis_.front());
    if (e.is_identity() || element_order(e) != p)
      throw std::invalid_argument("basis element " + e.to_string() +
                                  " does not have order p");
  }
  E_ = SubgroupNode::generated(basis_, p); // checks commutation
  if (E_.rank() != basis_.size())
    throw std::invalid_argument("basis elements are not independent");

  auto table = std::make_shared<
      std::unordered_map<GroupElement, std::uint32_t, ElementHash>>();
  const unsigned r = rank();
  std::vector<unsigned> coord(r, 0);
  for (;;) {
    GroupElement g = basis_.front().identity();
    std::uint32_t supp = 0;
    for (unsigned j = 0; j < r; ++j)
      if (coord[j]) {
        supp |= 1u << j;
        g = g * power(basis_[j], coord[j]);
      }
    table->emplace(std::move(g), supp);
    unsigned k = 0;
    while (k < r && ++coord[k] == p)
      coord[k++] = 0;
    if (k == r)
      break;
  }
  support_ = std::move(table);
}

std::optional<std::uint32_t>
ElemAbelianBasis::support(const GroupElement &g) const {
  auto it = support_->find(g);
  if (it == support_->end())
    return std::nullopt;
  return it->second;
}

SubgroupNode ElemAbelianBasis::subspace_mask(std::uint32_t removed) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->by_mask.find(removed);
  if (it != cache_->by_mask.end())
    return it->second;
  std::vector<GroupElement> gens;
  for (unsigned j = 0; j < rank(); ++j)
    if (!(removed & (1u << j)))
      gens.push_back(basis_[j]);
  SubgroupNode S =
      SubgroupNode::generated(gens, p_, basis_.front().identity());
  cache_->by_mask.emplace(removed, S);
  return S;
}

SubgroupNode ElemAbelianBasis::subspace(const IndexTuple &t) const {
  if (t.r != rank())
    throw std::invalid_argument("index tuple rank does not match the basis");
  return subspace_mask(t.mask());
}

SubgroupNode ElemAbelianBasis::hyperplane(unsigned i) const {
  return subspace_mask(1u << (i - 1));
}

SubgroupNode ElemAbelianBasis::line(unsigned i) const {
  std::uint32_t all = (rank() == 32) ? ~0u : ((1u << rank()) - 1);
  return subspace_mask(all & ~(1u << (i - 1)));
}

// ------------------------------------------------------------ collections

void validate_shape(const Collection &C) {
  if (C.c.size() != C.E.rank())
    throw std::invalid_argument("collection needs exactly one c_i per e_i");
  const GroupElement id = C.group.identity();
  for (const auto &e : C.E.basis())
    require_compatible(e, id);
  for (const auto &x : C.c)
    require_compatible(x, id);
}

GroupElement c_power(const std::vector<GroupElement> &c,
                     const std::vector<int> &eps) {
  if (c.empty())
    throw std::invalid_argument("empty collection");
  GroupElement g = c.front().identity();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (eps[i] == 1)
      g = g * c[i];
    else if (eps[i] == -1)
      g = g * c[i].inverse();
    else if (eps[i] != 0)
      throw std::invalid_argument("sign vector entries must be -1, 0 or 1");
  }
  return g;
}

FaithfulReport is_faithful(const Collection &C) {
  validate_shape(C);
  const unsigned r = C.rank();
  const ElemAbelianBasis &E = C.E;
  const std::uint32_t all = (1u << r) - 1;
  constexpr std::size_t max_recorded = 64;

  std::vector<GroupElement> cinv;
  for (const auto &x : C.c)
    cinv.push_back(x.inverse());

  FaithfulReport rep;
  rep.generator_level = true;
  rep.full_subspace = true;
  std::vector<int> eps(r, -1);
  std::vector<std::optional<std::uint32_t>> supp(r);
  for (;;) {
    ++rep.sign_vectors;
    GroupElement g = C.c.front().identity();
    for (unsigned i = 0; i < r; ++i)
      if (eps[i] == 1)
        g = g * C.c[i];
      else if (eps[i] == -1)
        g = g * cinv[i];
    for (unsigned j = 0; j < r; ++j)
      supp[j] = E.support(conjugate(g, E.basis()[j]));

    // generator level: conj(<e_j>) <= E implies it equals <e_j>
    for (unsigned j = 0; j < r; ++j)
      if (supp[j] && *supp[j] != (1u << j)) {
        rep.generator_level = false;
        if (rep.violations.size() < max_recorded) {
          std::vector<unsigned> removed;
          for (unsigned k = 0; k < r; ++k)
            if (k != j)
              removed.push_back(k + 1);
          rep.violations.push_back({eps, removed, "generator"});
        }
      }
    // every E_S with S the removed set, 0 < |S| < r; K is the kept set
    std::uint32_t good = 0;
    for (unsigned j = 0; j < r; ++j)
      if (supp[j])
        good |= 1u << j;
    for (std::uint32_t K = good; K; K = (K - 1) & good) {
      if (K == all)
        continue;
      bool ok = true;
      for (unsigned j = 0; j < r && ok; ++j)
        if ((K >> j & 1) && (*supp[j] & ~K))
          ok = false;
      if (!ok) {
        rep.full_subspace = false;
        if (rep.violations.size() < max_recorded) {
          std::vector<unsigned> removed;
          for (unsigned k = 0; k < r; ++k)
            if (!(K >> k & 1))
              removed.push_back(k + 1);
          rep.violations.push_back({eps, removed, "subspace"});
        }
      }
    }

    unsigned k = 0;
    while (k < r && ++eps[k] == 2)
      eps[k++] = -1;
    if (k == r)
      break;
  }
  rep.faithful = rep.generator_level && rep.full_subspace;
  return rep;
}

const char *to_string(Membership m) {
  switch (m) {
  case Membership::Enumerated:
    return "enumerated";
  case Membership::Structural:
    return "structural";
  default:
    return "unchecked";
  }
}

namespace {

struct LocalChecks {
  bool b = true, c = true, d = true;
  std::vector<ConditionFailure> failures;
};

LocalChecks run_local(const Collection &C) {
  validate_shape(C);
  LocalChecks out;
  const unsigned r = C.rank();
  const unsigned p = C.prime();
  for (unsigned i = 1; i <= r; ++i) {
    const auto &ci = C.c[i - 1];
    for (unsigned j = 1; j <= r; ++j)
      if (j != i && !commutes(ci, C.E.e(j))) {
        out.b = false;
        out.failures.push_back(
            {"b", "c_" + std::to_string(i) + " does not commute with e_" +
                      std::to_string(j)});
      }
    if (normalizes_cyclic(ci, C.E.e(i), p)) {
      out.c = false;
      out.failures.push_back({"c", "c_" + std::to_string(i) +
                                       " normalizes <e_" + std::to_string(i) +
                                       ">"});
    }
    for (unsigned j = i + 1; j <= r; ++j)
      if (!commutes(ci, C.c[j - 1])) {
        out.d = false;
        out.failures.push_back({"d", "c_" + std::to_string(i) + " and c_" +
                                         std::to_string(j) +
                                         " do not commute"});
      }
  }
  return out;
}

} // namespace

bool local_conditions_hold(const Collection &C) {
  auto l = run_local(C);
  return l.b && l.c && l.d;
}

AdmissibleReport is_admissible(const Collection &C) {
  return is_admissible(C, C.group);
}

AdmissibleReport is_admissible(const Collection &C, const GroupSpec &G) {
  AdmissibleReport rep;
  LocalChecks l = run_local(C);
  rep.centralizes_hyperplanes = l.b;
  rep.avoids_line_normalizers = l.c;
  rep.pairwise_commute = l.d;
  rep.failures = std::move(l.failures);

  // membership of every e_i and c_i in G
  std::vector<std::pair<std::string, const GroupElement *>> members;
  for (unsigned i = 1; i <= C.rank(); ++i) {
    members.emplace_back("e_" + std::to_string(i), &C.E.e(i));
    members.emplace_back("c_" + std::to_string(i), &C.c[i - 1]);
  }
  std::shared_ptr<const EnumeratedGroup> enumerated;
  if (G.enumerable())
    enumerated = try_enumerate(G);
  if (enumerated) {
    rep.membership = Membership::Enumerated;
    for (auto &[name, g] : members)
      if (!enumerated->contains(*g)) {
        rep.members_ok = false;
        rep.failures.push_back({"membership", name + " is not in " + G.name});
      }
  } else if (G.structural) {
    rep.membership = Membership::Structural;
    for (auto &[name, g] : members)
      if (!G.admits(*g)) {
        rep.members_ok = false;
        rep.failures.push_back({"membership", name + " is not in " + G.name});
      }
  }

  rep.maximality = is_maximal_elem_abelian(G, C.E.group().elements(),
                                           C.E.basis(), C.prime(),
                                           C.maximality);
  if (rep.maximality == Maximality::NotMaximal)
    rep.failures.push_back({"a", "E is not a maximal elementary abelian "
                                 "p-subgroup of " +
                                     G.name});

  rep.faithful = is_faithful(C);
  if (rep.faithful.generator_level != rep.faithful.full_subspace)
    throw InternalError("faithfulness: generator-level and full-subspace "
                        "checks disagree");
  if (l.b && l.d && !rep.faithful.faithful) {
    // (b) and (d) with c_i outside C_G(e_i) force faithfulness
    bool outside_centralizers = true;
    for (unsigned i = 1; i <= C.rank(); ++i)
      if (commutes(C.c[i - 1], C.E.e(i)))
        outside_centralizers = false;
    if (outside_centralizers)
      throw InternalError("collection satisfies (b), (d) and c_i outside "
                          "C_G(e_i) but is not faithful");
  }
  rep.admissible = l.b && l.c && l.d && rep.members_ok &&
                   rep.maximality != Maximality::NotMaximal;
  return rep;
}

std::optional<ObstructionCertificate> pstable_obstruction(const GroupSpec &G,
                                                          unsigned p) {
  if (!is_prime(p) || p == 2)
    return std::nullopt;
  auto central = central_p_elements(G, p);
  if (central.empty())
    return std::nullopt;
  ObstructionCertificate cert;
  cert.group = G;
  cert.p = p;
  cert.witness = central.front();
  cert.source = try_enumerate(G) ? "enumeration" : "structural";
  return cert;
}

} // namespace quillen
