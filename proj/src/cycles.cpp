#include "quillen/cycles.hpp"
#include "quillen/complex.hpp"
#include "quillen/error.hpp"

#include <algorithm>
#include <set>

namespace quillen {

void add_term(IntChain &z, const Flag &f, std::int64_t coefficient) {
  if (coefficient == 0)
    return;
  auto [it, inserted] = z.emplace(f, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0)
      z.erase(it);
  }
}

IntChain scale(const IntChain &z, std::int64_t a) {
  IntChain out;
  if (a == 0)
    return out;
  for (const auto &[f, v] : z)
    out.emplace(f, v * a);
  return out;
}

IntChain add(const IntChain &a, const IntChain &b) {
  IntChain out = a;
  for (const auto &[f, v] : b)
    add_term(out, f, v);
  return out;
}

IntChain chain_boundary(const IntChain &z) {
  IntChain out;
  for (const auto &[f, v] : z) {
    if (f.empty())
      continue;
    for (std::size_t j = 0; j < f.size(); ++j) {
      Flag face;
      face.reserve(f.size() - 1);
      for (std::size_t k = 0; k < f.size(); ++k)
        if (k != j)
          face.push_back(f[k]);
      add_term(out, face, (j % 2 == 0) ? v : -v);
    }
  }
  return out;
}

Flag translate(const Flag &f, const GroupElement &x) {
  Flag out;
  out.reserve(f.size());
  for (const auto &s : f)
    out.push_back(s.conjugated_by(x));
  return out;
}

IntChain translate(const IntChain &z, const GroupElement &x) {
  IntChain out;
  for (const auto &[f, v] : z)
    add_term(out, translate(f, x), v);
  return out;
}

bool is_strict_flag(const Flag &f) {
  for (std::size_t k = 1; k < f.size(); ++k)
    if (f[k - 1].size() >= f[k].size() || !f[k - 1].is_subgroup_of(f[k]))
      return false;
  return true;
}

namespace {

std::vector<std::uint32_t> prefix_masks(const IndexTuple &i) {
  // masks of prefixes of length |i|, |i|-1, ..., 0 (increasing subgroups)
  std::vector<std::uint32_t> out;
  for (std::size_t t = i.size() + 1; t-- > 0;) {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < t; ++k)
      m |= 1u << (i[k] - 1);
    out.push_back(m);
  }
  return out;
}

void require_sigma_tuple(const ElemAbelianBasis &E, const IndexTuple &i) {
  if (i.r != E.rank() || i.size() + 1 != E.rank())
    throw std::invalid_argument("sigma/tau need an (r-1)-tuple for r = " +
                                std::to_string(E.rank()));
}

// Conjugates x E_S x^{-1}, cached per subspace mask.
class TranslatedSubspaces {
public:
  TranslatedSubspaces(const ElemAbelianBasis &E, GroupElement x)
      : E_(E), x_(std::move(x)) {}
  const SubgroupNode &get(std::uint32_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end())
      return it->second;
    SubgroupNode s = E_.subspace_mask(mask);
    if (!x_.is_identity())
      s = s.conjugated_by(x_);
    return cache_.emplace(mask, std::move(s)).first->second;
  }
  Flag sigma(const IndexTuple &i) {
    Flag f;
    for (auto m : prefix_masks(i))
      f.push_back(get(m));
    return f;
  }

private:
  const ElemAbelianBasis &E_;
  GroupElement x_;
  std::map<std::uint32_t, SubgroupNode> cache_;
};

} // namespace

Flag sigma_flag(const ElemAbelianBasis &E, const IndexTuple &i) {
  require_sigma_tuple(E, i);
  Flag f;
  for (auto m : prefix_masks(i))
    f.push_back(E.subspace_mask(m));
  return f;
}

Flag tau_flag(const ElemAbelianBasis &E, const IndexTuple &i) {
  Flag f = sigma_flag(E, i);
  f.pop_back();
  return f;
}

IntChain build_ZE(const ElemAbelianBasis &E, std::int64_t a) {
  IntChain z;
  if (a == 0)
    return z;
  for (const auto &i : index_tuples(E.rank(), E.rank() - 1))
    add_term(z, sigma_flag(E, i), a * signature(i));
  return z;
}

IntChain dz_formula(const ElemAbelianBasis &E, std::int64_t a) {
  IntChain z;
  const std::int64_t s = (E.rank() % 2 == 1) ? 1 : -1; // (-1)^{r-1}
  for (const auto &i : index_tuples(E.rank(), E.rank() - 1))
    add_term(z, tau_flag(E, i), s * a * signature(i));
  return z;
}

bool prop_dz_check(const ElemAbelianBasis &E, std::int64_t a) {
  return chain_boundary(build_ZE(E, a)) == dz_formula(E, a);
}

IntChain build_ZG(const CycleSpec &spec) {
  IntChain z;
  const unsigned r = spec.E.rank();
  auto tuples = index_tuples(r, r - 1);
  for (const auto &t : spec.translates) {
    TranslatedSubspaces T(spec.E, t.x);
    for (const auto &i : tuples)
      add_term(z, T.sigma(i), t.a * signature(i));
  }
  return z;
}

std::map<DeltaVector, std::int64_t> standard_weights(unsigned r) {
  if (r < 1 || r > 20)
    throw std::invalid_argument("standard_weights: need 1 <= r <= 20");
  std::map<DeltaVector, std::int64_t> w;
  for (std::uint32_t m = 0; m < (1u << r); ++m) {
    DeltaVector d(r);
    int ones = 0;
    for (unsigned k = 0; k < r; ++k) {
      d[k] = (m >> (r - 1 - k)) & 1;
      ones += d[k];
    }
    w.emplace(d, ones % 2 == 0 ? 1 : -1);
  }
  return w;
}

CycleSpec collection_cycle_spec(const Collection &C) {
  validate_shape(C);
  CycleSpec spec;
  spec.E = C.E;
  for (const auto &[delta, a] : standard_weights(C.rank())) {
    std::vector<int> eps(delta.begin(), delta.end());
    spec.translates.push_back({c_power(C.c, eps), a, delta});
  }
  return spec;
}

const CoefficientEntry &CoefficientReport::at(std::size_t j,
                                              const IndexTuple &i) const {
  for (const auto &e : entries)
    if (e.j == j && e.i == i)
      return e;
  throw std::out_of_range("no coefficient entry for the given (j, i)");
}

CoefficientReport coefficient_tables(const CycleSpec &spec) {
  const unsigned r = spec.E.rank();
  const std::int64_t sr = (r % 2 == 1) ? 1 : -1;
  auto tuples = index_tuples(r, r - 1);

  CoefficientReport rep;
  rep.r = r;
  IntChain z = build_ZG(spec);
  IntChain dz = chain_boundary(z);

  // translated sigma flags for every (j, i)
  std::vector<std::vector<Flag>> sig(spec.translates.size());
  std::map<Flag, std::vector<std::pair<std::size_t, std::size_t>>> by_sigma,
      by_tau;
  for (std::size_t j = 0; j < spec.translates.size(); ++j) {
    TranslatedSubspaces T(spec.E, spec.translates[j].x);
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      Flag f = T.sigma(tuples[k]);
      by_sigma[f].emplace_back(j, k);
      Flag tau(f.begin(), f.end() - 1);
      by_tau[tau].emplace_back(j, k);
      sig[j].push_back(std::move(f));
    }
  }

  rep.direct_matches_formula = true;
  rep.C_subset_of_D = true;
  for (std::size_t j = 0; j < spec.translates.size(); ++j)
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      CoefficientEntry e;
      e.j = j;
      e.i = tuples[k];
      const Flag &f = sig[j][k];
      Flag tau(f.begin(), f.end() - 1);
      auto zc = z.find(f);
      e.C_direct = zc == z.end() ? 0 : zc->second;
      auto dc = dz.find(tau);
      e.D_direct = dc == dz.end() ? 0 : dc->second;
      for (auto [l, kk] : by_sigma[f]) {
        e.C_set.emplace_back(l, tuples[kk]);
        e.C_formula += spec.translates[l].a * signature(tuples[kk]);
      }
      std::int64_t dsum = 0;
      for (auto [l, kk] : by_tau[tau]) {
        e.D_set.emplace_back(l, tuples[kk]);
        dsum += spec.translates[l].a * signature(tuples[kk]);
      }
      e.D_formula = sr * dsum;
      if (e.C_direct != e.C_formula || e.D_direct != e.D_formula)
        rep.direct_matches_formula = false;
      for (const auto &c : e.C_set)
        if (std::find(e.D_set.begin(), e.D_set.end(), c) == e.D_set.end())
          rep.C_subset_of_D = false;
      rep.entries.push_back(std::move(e));
    }
  return rep;
}

bool normalizes(const GroupElement &g, const SubgroupNode &S) {
  for (const auto &b : S.basis())
    if (!S.contains(conjugate(g, b)))
      return false;
  return true;
}

CoefficientTheoremReport coefficient_theorem_check(const Collection &C,
                                                   const CycleSpec &spec,
                                                   const CoefficientReport &rep) {
  const unsigned r = C.rank();
  const std::int64_t sr = (r % 2 == 1) ? 1 : -1;
  CoefficientTheoremReport out;
  out.part1 = out.part2 = true;

  std::map<DeltaVector, std::size_t> index_of;
  for (std::size_t j = 0; j < spec.translates.size(); ++j)
    index_of[spec.translates[j].delta] = j;
  if (index_of.size() != (std::size_t{1} << r))
    throw std::invalid_argument(
        "coefficient theorem check needs the standard translates c^delta");

  out.part3_applicable = true;
  out.part4_applicable = true;
  for (unsigned i = 1; i <= r; ++i) {
    const auto &ci = C.c[i - 1];
    bool cent = true;
    for (unsigned j = 1; j <= r; ++j)
      if (j != i && !commutes(ci, C.E.e(j)))
        cent = false;
    if (!cent || normalizes_cyclic(ci, C.E.e(i), C.prime()))
      out.part3_applicable = false;
    if (!normalizes(ci, C.E.hyperplane(i)))
      out.part4_applicable = false;
  }
  out.part3 = out.part3_applicable;
  out.part4 = out.part4_applicable;

  const SubgroupNode &Egrp = C.E.group();
  auto diff = [&](const DeltaVector &a, const DeltaVector &b) {
    std::vector<int> eps(r);
    for (unsigned k = 0; k < r; ++k)
      eps[k] = a[k] - b[k];
    return c_power(C.c, eps);
  };

  for (const auto &e : rep.entries) {
    const DeltaVector &delta = spec.translates[e.j].delta;
    const int sg = signature(e.i);
    // (1)
    std::int64_t sum1 = 0;
    std::vector<std::pair<std::size_t, IndexTuple>> expect_C;
    for (const auto &t : spec.translates)
      if (normalizes(diff(delta, t.delta), Egrp)) {
        sum1 += t.a;
        expect_C.emplace_back(index_of[t.delta], e.i);
      }
    std::sort(expect_C.begin(), expect_C.end());
    auto got_C = e.C_set;
    std::sort(got_C.begin(), got_C.end());
    if (e.C_formula != sg * sum1 || got_C != expect_C)
      out.part1 = false;
    // (2)
    const unsigned i1 = r >= 2 ? e.i[0] : 1;
    std::optional<SubgroupNode> Ei1;
    if (r >= 2)
      Ei1 = C.E.hyperplane(i1);
    std::set<DeltaVector> S2;
    std::int64_t sum2 = 0;
    for (const auto &t : spec.translates)
      if (!Ei1 || normalizes(diff(delta, t.delta), *Ei1)) {
        S2.insert(t.delta);
        sum2 += t.a;
      }
    if (e.D_formula != sr * sg * sum2)
      out.part2 = false;
    // (3)
    if (out.part3_applicable) {
      if (e.C_set.size() != 1 || e.C_set[0].first != e.j ||
          e.C_set[0].second != e.i ||
          e.C_formula != sg * spec.translates[e.j].a)
        out.part3 = false;
    }
    // (4)
    if (out.part4_applicable) {
      std::int64_t pairs = 0;
      for (const auto &d1 : S2) {
        if (d1[i1 - 1] != 0)
          continue;
        DeltaVector d2 = d1;
        d2[i1 - 1] = 1;
        if (!S2.count(d2)) {
          out.part4 = false;
          continue;
        }
        pairs += spec.translates[index_of[d1]].a +
                 spec.translates[index_of[d2]].a;
      }
      for (const auto &d2 : S2) {
        DeltaVector d1 = d2;
        d1[i1 - 1] = 0;
        if (!S2.count(d1))
          out.part4 = false;
      }
      if (e.D_formula != sr * sg * pairs)
        out.part4 = false;
    }
  }
  return out;
}

namespace {

constexpr std::size_t dense_limit = 25'000'000;

// Checks z in the full order complex of A_p(G): a nonzero cycle that is not
// a boundary. Returns "passed", "failed" or "skipped(...)".
std::string independent_check(const IntChain &z, unsigned r,
                              const EnumeratedGroup &G, unsigned p,
                              NonzeroClassCertificate &cert) {
  Poset P = ap_poset(G.elements(), p);
  OrderComplex K = order_complex(P);
  HomologyResult H = homology(K);
  cert.betti_top = H.betti_at(static_cast<int>(r) - 1);

  const int k = static_cast<int>(r) - 1;
  std::vector<std::int64_t> vec(K.count(k), 0);
  for (const auto &[f, v] : z) {
    IndexFlag idx;
    for (const auto &s : f) {
      auto n = P.find(s);
      if (!n) {
        cert.detail = "a translated subgroup is not in A_p(G)";
        return "failed";
      }
      idx.push_back(*n);
    }
    auto pos = K.index_of(idx);
    if (!pos) {
      cert.detail = "a translated flag is not a simplex of the order complex";
      return "failed";
    }
    vec[*pos] += v;
  }
  if (std::all_of(vec.begin(), vec.end(), [](auto v) { return v == 0; })) {
    cert.detail = "the chain vanishes in the order complex";
    return "failed";
  }
  // cycle condition
  SparseIntMatrix Bk = K.boundary_matrix(k);
  std::vector<std::int64_t> image(Bk.cols, 0);
  for (std::size_t s = 0; s < Bk.rows; ++s)
    if (vec[s])
      for (auto [c, v] : Bk.row[s])
        image[c] += vec[s] * v;
  if (std::any_of(image.begin(), image.end(), [](auto v) { return v != 0; })) {
    cert.detail = "the chain is not a cycle in the order complex";
    return "failed";
  }
  if (K.dimension() < static_cast<int>(r))
    return "passed"; // no r-simplices, so no nonzero boundaries
  SparseIntMatrix Br = K.boundary_matrix(k + 1);
  if (Br.rows * Br.cols > dense_limit)
    return "skipped(size)";
  IntMatrix M(Br.cols, Br.rows);
  for (std::size_t s = 0; s < Br.rows; ++s)
    for (auto [c, v] : Br.row[s])
      M(c, s) = v;
  std::vector<BigInt> b(vec.begin(), vec.end());
  if (!solvable_over_q(M, b))
    return "passed";
  if (solve_integer(M, b)) {
    cert.detail = "the chain is a boundary";
    return "failed";
  }
  return "passed";
}

} // namespace

NonzeroClassCertificate certify_nonzero_class(const Collection &C) {
  return certify_nonzero_class(C, C.group);
}

NonzeroClassCertificate certify_nonzero_class(const Collection &C,
                                              const GroupSpec &G) {
  NonzeroClassCertificate cert;
  cert.group = G.name;
  cert.p = C.prime();
  cert.r = C.rank();

  CycleSpec spec = collection_cycle_spec(C);
  CoefficientReport rep = coefficient_tables(spec);
  if (!rep.direct_matches_formula)
    throw InternalError("coefficient tables: direct and set-formula values "
                        "disagree");
  cert.D_all_zero = true;
  for (const auto &e : rep.entries) {
    if (e.C_direct != 0)
      cert.C_nonzero_at.emplace_back(spec.translates[e.j].delta, e.i);
    if (e.D_direct != 0)
      cert.D_all_zero = false;
  }
  IntChain z = build_ZG(spec);
  cert.chain_terms = z.size();

  if (cert.C_nonzero_at.empty() || !cert.D_all_zero) {
    cert.detail = cert.C_nonzero_at.empty() ? "all coefficients C vanish"
                                            : "some coefficient D is nonzero";
    cert.independent_homology_check = "skipped(failed-precondition)";
    throw CertificationFailed("certification failed: " + cert.detail, cert);
  }

  cert.maximality = is_maximal_elem_abelian(G, C.E.group().elements(),
                                            C.E.basis(), C.prime(),
                                            C.maximality);
  if (cert.maximality == Maximality::NotMaximal) {
    cert.detail = "E is not maximal";
    cert.independent_homology_check = "skipped(not-maximal)";
    throw CertificationFailed("certification failed: E is not maximal", cert);
  }

  std::shared_ptr<const EnumeratedGroup> enumerated;
  if (G.enumerable())
    enumerated = try_enumerate(G);
  if (!enumerated) {
    cert.independent_homology_check = "skipped(cap)";
  } else {
    cert.independent_homology_check =
        independent_check(z, C.rank(), *enumerated, C.prime(), cert);
  }
  if (cert.independent_homology_check == "failed")
    throw CertificationFailed("independent homology check failed: " +
                                  cert.detail,
                              cert);
  cert.granted = true;
  return cert;
}

} // namespace quillen
