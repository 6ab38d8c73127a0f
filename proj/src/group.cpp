#include "quillen/group.hpp"
#include "quillen/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>
#include <sstream>
#include <unordered_set>

namespace quillen {

std::uint64_t default_enumeration_cap() {
  if (const char *env = std::getenv("QUILLEN_ENUM_CAP")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return v;
  }
  return 500'000;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r > std::numeric_limits<std::uint64_t>::max())
    return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(r);
}

std::uint64_t gl_order(unsigned n, std::uint64_t q) {
  std::uint64_t qn = 1;
  for (unsigned i = 0; i < n; ++i)
    qn = saturating_mul(qn, q);
  std::uint64_t order = 1, qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    order = saturating_mul(order, qn - qi);
    qi = saturating_mul(qi, q);
  }
  return order;
}

// Transvections x_{i,i+1}(l), x_{i+1,i}(l) with l running over an F_p-basis
// of GF(q) generate SL(n,q).
std::vector<Matrix> sl_generators(unsigned n, const FieldPtr &F) {
  std::vector<Matrix> gens;
  std::vector<Field::Elt> basis;
  Field::Elt x = 1;
  for (unsigned i = 0; i < F->degree(); ++i) {
    basis.push_back(x);
    x = F->mul(x, F->primitive_element());
  }
  for (unsigned i = 1; i < n; ++i)
    for (auto lambda : basis) {
      for (auto [a, b] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
        std::vector<Field::Elt> e = Matrix::identity(F, n).entries();
        e[std::size_t(a - 1) * n + (b - 1)] = lambda;
        gens.emplace_back(F, n, std::move(e));
      }
    }
  return gens;
}

GroupSpec matrix_family(std::string name, unsigned n, std::uint64_t q, bool det1,
                        bool quotient) {
  if (n < 1)
    throw std::invalid_argument("matrix group dimension must be >= 1");
  FieldPtr F = Field::of_order(q);
  GroupSpec G;
  G.name = std::move(name);
  G.kind = GroupKind::Matrix;
  G.n = n;
  G.q = q;
  G.det1 = det1;
  G.quotient_center = quotient;
  G.structural = true;
  std::vector<Matrix> gens = sl_generators(n, F);
  if (!det1 && q > 2) {
    std::vector<Field::Elt> d(n, 1);
    d[0] = F->primitive_element();
    gens.push_back(Matrix::diagonal(F, d));
  }
  for (const auto &m : gens)
    G.generators.push_back(G.from_matrix(m));
  std::uint64_t order = gl_order(n, q);
  if (det1)
    order /= (q - 1);
  if (quotient)
    order /= G.center_order();
  G.known_order = order;
  return G;
}

} // namespace

FieldPtr GroupSpec::field() const {
  if (kind != GroupKind::Matrix)
    throw std::invalid_argument("permutation group has no field");
  return Field::of_order(q);
}

unsigned GroupSpec::center_order() const {
  if (!quotient_center)
    return 1;
  std::uint64_t m = det1 ? std::gcd<std::uint64_t>(n, q - 1) : q - 1;
  return static_cast<unsigned>(m);
}

GroupElement GroupSpec::identity() const {
  if (kind == GroupKind::Permutation)
    return Permutation::identity(n);
  return from_matrix(Matrix::identity(field(), n));
}

GroupElement GroupSpec::from_matrix(const Matrix &m) const {
  if (quotient_center)
    return CentralCoset(m, center_order());
  return m;
}

bool GroupSpec::admits(const GroupElement &g) const {
  if (kind == GroupKind::Permutation) {
    if (!g.is_permutation() || g.permutation().degree() != n)
      return false;
    return !even_only || g.permutation().is_even();
  }
  const Matrix *m = nullptr;
  if (quotient_center) {
    if (!g.is_coset() || g.coset().center_order() != center_order())
      return false;
    m = &g.coset().representative();
  } else {
    if (!g.is_matrix())
      return false;
    m = &g.matrix();
  }
  if (m->dim() != n || m->field()->order() != q)
    return false;
  Field::Elt d = m->det();
  if (d == 0)
    return false;
  return !det1 || d == 1;
}

GroupSpec symmetric_group(unsigned n) {
  GroupSpec G;
  G.name = "Sym(" + std::to_string(n) + ")";
  G.kind = GroupKind::Permutation;
  G.n = n;
  G.structural = true;
  if (n >= 2) {
    G.generators.push_back(Permutation::from_cycles("(1,2)", n));
    std::vector<std::uint16_t> cyc(n);
    for (unsigned i = 0; i < n; ++i)
      cyc[i] = static_cast<std::uint16_t>((i + 1) % n);
    G.generators.push_back(Permutation(cyc));
  }
  std::uint64_t order = 1;
  for (unsigned i = 2; i <= n; ++i)
    order = saturating_mul(order, i);
  G.known_order = order;
  return G;
}

GroupSpec alternating_group(unsigned n) {
  GroupSpec G;
  G.name = "Alt(" + std::to_string(n) + ")";
  G.kind = GroupKind::Permutation;
  G.n = n;
  G.even_only = true;
  G.structural = true;
  for (unsigned k = 3; k <= n; ++k)
    G.generators.push_back(
        Permutation::from_cycles("(1,2," + std::to_string(k) + ")", n));
  std::uint64_t order = 1;
  for (unsigned i = 3; i <= n; ++i)
    order = saturating_mul(order, i);
  G.known_order = order;
  return G;
}

GroupSpec general_linear_group(unsigned n, std::uint64_t q) {
  return matrix_family("GL(" + std::to_string(n) + "," + std::to_string(q) + ")",
                       n, q, false, false);
}
GroupSpec special_linear_group(unsigned n, std::uint64_t q) {
  return matrix_family("SL(" + std::to_string(n) + "," + std::to_string(q) + ")",
                       n, q, true, false);
}
GroupSpec projective_general_linear_group(unsigned n, std::uint64_t q) {
  return matrix_family("PGL(" + std::to_string(n) + "," + std::to_string(q) +
                           ")",
                       n, q, false, true);
}
GroupSpec projective_special_linear_group(unsigned n, std::uint64_t q) {
  return matrix_family("PSL(" + std::to_string(n) + "," + std::to_string(q) +
                           ")",
                       n, q, true, true);
}

GroupSpec elementary_abelian_perm_group(unsigned p, unsigned r) {
  if (!is_prime(p) || r < 1)
    throw std::invalid_argument("ElemAb(p,r) needs p prime and r >= 1");
  GroupSpec G;
  G.name = "ElemAb(" + std::to_string(p) + "," + std::to_string(r) + ")";
  G.kind = GroupKind::Permutation;
  G.n = p * r;
  for (unsigned b = 0; b < r; ++b) {
    std::vector<std::uint16_t> img(G.n);
    std::iota(img.begin(), img.end(), std::uint16_t{0});
    for (unsigned i = 0; i < p; ++i)
      img[b * p + i] = static_cast<std::uint16_t>(b * p + (i + 1) % p);
    G.generators.push_back(Permutation(img));
  }
  std::uint64_t order = 1;
  for (unsigned i = 0; i < r; ++i)
    order = saturating_mul(order, p);
  G.known_order = order;
  return G;
}

GroupSpec named_group(std::string_view name) {
  static const std::regex one(R"(^\s*(Sym|Alt)\s*\(\s*(\d+)\s*\)\s*$)");
  static const std::regex two(
      R"(^\s*(GL|SL|PGL|PSL|ElemAb)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
  std::string s(name);
  std::smatch m;
  if (std::regex_match(s, m, one)) {
    unsigned n = static_cast<unsigned>(std::stoul(m[2]));
    if (n > 1000)
      throw std::invalid_argument("degree too large");
    return m[1] == "Sym" ? symmetric_group(n) : alternating_group(n);
  }
  if (std::regex_match(s, m, two)) {
    unsigned a = static_cast<unsigned>(std::stoul(m[2]));
    std::uint64_t b = std::stoull(m[3]);
    if (a > 64)
      throw std::invalid_argument("dimension too large");
    if (m[1] == "GL")
      return general_linear_group(a, b);
    if (m[1] == "SL")
      return special_linear_group(a, b);
    if (m[1] == "PGL")
      return projective_general_linear_group(a, b);
    if (m[1] == "PSL")
      return projective_special_linear_group(a, b);
    return elementary_abelian_perm_group(a, static_cast<unsigned>(b));
  }
  throw ParseError("unknown group name \"" + s + "\"");
}

// ------------------------------------------------------------ enumeration

EnumeratedGroup::EnumeratedGroup(std::vector<GroupElement> sorted)
    : elems_(std::move(sorted)) {
  index_.reserve(elems_.size() * 2);
  for (std::size_t i = 0; i < elems_.size(); ++i)
    index_.emplace(elems_[i], i);
}

std::optional<std::size_t>
EnumeratedGroup::index_of(const GroupElement &g) const {
  auto it = index_.find(g);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::vector<std::size_t> EnumeratedGroup::elements_of_order(unsigned p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const auto &g = elems_[i];
    if (g.is_identity())
      continue;
    if (p == 2 ? (g * g).is_identity() : power(g, p).is_identity())
      if (is_prime(p) || element_order(g) == p)
        out.push_back(i);
  }
  return out;
}

namespace {

std::string cache_key(const GroupSpec &G) {
  std::ostringstream os;
  os << G.name << '|' << int(G.kind) << '|' << G.n << '|' << G.q << '|'
     << G.det1 << G.quotient_center << G.even_only << '|';
  for (const auto &g : G.generators)
    os << g.to_string() << ';';
  return os.str();
}

std::shared_ptr<const EnumeratedGroup> closure(const GroupSpec &G) {
  if (G.known_order && *G.known_order > G.cap)
    throw CapExceeded(G.name + " has order " + std::to_string(*G.known_order) +
                          ", above the enumeration cap " +
                          std::to_string(G.cap),
                      G.cap);
  GroupElement id = G.identity();
  std::unordered_set<GroupElement, ElementHash> seen;
  std::vector<GroupElement> order{id};
  seen.insert(id);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto &s : G.generators) {
      GroupElement y = order[head] * s;
      if (seen.insert(y).second) {
        order.push_back(std::move(y));
        if (order.size() > G.cap)
          throw CapExceeded(G.name + " exceeds the enumeration cap " +
                                std::to_string(G.cap),
                            G.cap);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return std::make_shared<const EnumeratedGroup>(std::move(order));
}

} // namespace

std::shared_ptr<const EnumeratedGroup> enumerate_group(const GroupSpec &G) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const EnumeratedGroup>> cache;
  std::string key = cache_key(G);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      if (it->second->size() > G.cap)
        throw CapExceeded(G.name + " exceeds the enumeration cap " +
                              std::to_string(G.cap),
                          G.cap);
      return it->second;
    }
  }
  auto result = closure(G);
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() >= 16)
    cache.clear();
  cache.emplace(key, result);
  return result;
}

std::vector<GroupElement> enumerate(const GroupSpec &G) {
  return enumerate_group(G)->elements();
}

std::shared_ptr<const EnumeratedGroup> try_enumerate(const GroupSpec &G) {
  try {
    return enumerate_group(G);
  } catch (const CapExceeded &) {
    return nullptr;
  }
}

// ------------------------------------------------------------- predicates

bool centralizes(const GroupElement &g, const std::vector<GroupElement> &S) {
  for (const auto &s : S)
    if (!commutes(g, s))
      return false;
  return true;
}

bool normalizes_cyclic_powers(const GroupElement &g, const GroupElement &e,
                              const std::vector<GroupElement> &powers) {
  // g e g^-1 = e^k  <=>  g e = e^k g
  GroupElement ge = g * e;
  for (const auto &ek : powers)
    if (ge == ek * g)
      return true;
  return false;
}

bool normalizes_cyclic(const GroupElement &g, const GroupElement &e,
                       unsigned p) {
  require_compatible(g, e);
  if (element_order(e) != p)
    throw std::invalid_argument("normalizes_cyclic: e does not have order p");
  std::vector<GroupElement> powers;
  GroupElement x = e;
  for (unsigned k = 1; k < p; ++k) {
    powers.push_back(x);
    x = x * e;
  }
  return normalizes_cyclic_powers(g, e, powers);
}

std::vector<GroupElement> central_p_elements(const GroupSpec &G, unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("p must be prime");
  if (auto E = try_enumerate(G)) {
    std::vector<GroupElement> out;
    for (auto i : E->elements_of_order(p))
      if (centralizes(E->elements()[i], G.generators))
        out.push_back(E->elements()[i]);
    return out;
  }
  if (G.kind == GroupKind::Matrix && G.structural && !G.quotient_center) {
    FieldPtr F = G.field();
    std::vector<GroupElement> out;
    if ((F->order() - 1) % p != 0)
      return out;
    for (auto lambda : scalar_subgroup(*F, p)) {
      if (lambda == 1)
        continue;
      if (G.det1 && F->pow(lambda, G.n) != 1)
        continue;
      out.push_back(G.from_matrix(
          Matrix::diagonal(F, std::vector<Field::Elt>(G.n, lambda))));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  throw std::invalid_argument(
      "central p-elements: group exceeds the enumeration cap and has no "
      "structural center description");
}

const char *to_string(MaximalityMode m) {
  return m == MaximalityMode::Enumerate ? "enumerate" : "asserted";
}

const char *to_string(Maximality m) {
  switch (m) {
  case Maximality::Maximal:
    return "maximal";
  case Maximality::NotMaximal:
    return "not-maximal";
  default:
    return "asserted";
  }
}

MaximalityMode parse_maximality_mode(std::string_view s) {
  if (s == "enumerate")
    return MaximalityMode::Enumerate;
  if (s == "asserted")
    return MaximalityMode::Asserted;
  throw ParseError("maximality mode must be \"enumerate\" or \"asserted\"");
}

Maximality is_maximal_elem_abelian(const GroupSpec &G,
                                   const std::vector<GroupElement> &E_elements,
                                   const std::vector<GroupElement> &E_generators,
                                   unsigned p, MaximalityMode mode) {
  if (mode == MaximalityMode::Asserted)
    return Maximality::Asserted;
  auto enumerated = enumerate_group(G); // throws CapExceeded
  std::unordered_set<GroupElement, ElementHash> inE(E_elements.begin(),
                                                    E_elements.end());
  for (auto i : enumerated->elements_of_order(p)) {
    const auto &x = enumerated->elements()[i];
    if (inE.count(x))
      continue;
    if (centralizes(x, E_generators))
      return Maximality::NotMaximal;
  }
  return Maximality::Maximal;
}

} // namespace quillen
