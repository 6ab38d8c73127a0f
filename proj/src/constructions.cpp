#include "quillen/constructions.hpp"
#include "quillen/error.hpp"
#include "quillen/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quillen {

const char *to_string(Family f) {
  switch (f) {
  case Family::SymAlt:
    return "SymAlt";
  case Family::A8p3:
    return "A8p3";
  case Family::LinearDgt1:
    return "LinearDgt1";
  case Family::SL42:
    return "SL42";
  case Family::SL62:
    return "SL62";
  case Family::LinearDeq1:
    return "LinearDeq1";
  case Family::ProjectiveLinear:
    return "ProjectiveLinear";
  case Family::SL32Search:
    return "SL32Search";
  case Family::BlockSum:
    return "BlockSum";
  case Family::QuotientImage:
    return "QuotientImage";
  }
  return "?";
}

const char *to_string(LinearKind k) {
  switch (k) {
  case LinearKind::GL:
    return "GL";
  case LinearKind::SL:
    return "SL";
  case LinearKind::PGL:
    return "PGL";
  case LinearKind::PSL:
    return "PSL";
  case LinearKind::GU:
    return "GU";
  case LinearKind::SU:
    return "SU";
  }
  return "?";
}

LinearKind parse_linear_kind(std::string_view s) {
  for (auto k : {LinearKind::GL, LinearKind::SL, LinearKind::PGL,
                 LinearKind::PSL, LinearKind::GU, LinearKind::SU})
    if (s == to_string(k))
      return k;
  throw ParseError("unknown linear group kind \"" + std::string(s) + "\"");
}

MaximalityMode default_maximality(const GroupSpec &G) {
  return G.enumerable() ? MaximalityMode::Enumerate : MaximalityMode::Asserted;
}

namespace {

Collection make_collection(GroupSpec G, unsigned p,
                           std::vector<GroupElement> basis,
                           std::vector<GroupElement> c) {
  Collection C;
  C.maximality = default_maximality(G);
  C.group = std::move(G);
  C.E = ElemAbelianBasis(p, std::move(basis));
  C.c = std::move(c);
  validate_shape(C);
  return C;
}

void require_odd_prime(unsigned p) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("p must be an odd prime");
}

std::uint64_t checked_q(std::uint64_t q) {
  if (prime_power(q).first == 0)
    throw std::invalid_argument("q must be a prime power");
  return q;
}

Matrix from_rows(const FieldPtr &F,
                 const std::vector<std::vector<Field::Elt>> &rows) {
  const unsigned n = static_cast<unsigned>(rows.size());
  std::vector<Field::Elt> e;
  for (const auto &row : rows) {
    if (row.size() != n)
      throw std::invalid_argument("matrix rows must be square");
    e.insert(e.end(), row.begin(), row.end());
  }
  return Matrix(F, n, std::move(e));
}

// n x n identity with B placed at (off, off).
Matrix embed_block(const Matrix &B, unsigned off, unsigned n) {
  std::vector<Field::Elt> e = Matrix::identity(B.field(), n).entries();
  for (unsigned r = 0; r < B.dim(); ++r)
    for (unsigned c = 0; c < B.dim(); ++c)
      e[std::size_t(off + r) * n + off + c] = B.at(r, c);
  return Matrix(B.field(), n, std::move(e));
}

// Square block matrix from a grid of k x k blocks (nullptr for zero).
Matrix from_blocks(const FieldPtr &F, unsigned k,
                   const std::vector<std::vector<const Matrix *>> &grid) {
  const unsigned m = static_cast<unsigned>(grid.size());
  const unsigned n = m * k;
  std::vector<Field::Elt> e(std::size_t(n) * n, 0);
  for (unsigned bi = 0; bi < m; ++bi)
    for (unsigned bj = 0; bj < m; ++bj)
      if (const Matrix *B = grid[bi][bj])
        for (unsigned r = 0; r < k; ++r)
          for (unsigned c = 0; c < k; ++c)
            e[std::size_t(bi * k + r) * n + bj * k + c] = B->at(r, c);
  return Matrix(F, n, std::move(e));
}

GroupSpec linear_group(LinearKind kind, unsigned n, std::uint64_t q) {
  switch (kind) {
  case LinearKind::GL:
    return general_linear_group(n, q);
  case LinearKind::SL:
    return special_linear_group(n, q);
  case LinearKind::PGL:
    return projective_general_linear_group(n, q);
  case LinearKind::PSL:
    return projective_special_linear_group(n, q);
  default:
    throw std::invalid_argument("unitary groups are not built in");
  }
}

std::string elt_text(Field::Elt x) { return std::to_string(x); }

// Collection of matrices in dimension n, embedded at the top-left of
// dimension m with identity elsewhere.
Collection embed_collection(const Collection &C, unsigned m, GroupSpec G) {
  std::vector<GroupElement> basis, c;
  for (const auto &e : C.E.basis())
    basis.push_back(embed_block(e.matrix(), 0, m));
  for (const auto &x : C.c)
    c.push_back(embed_block(x.matrix(), 0, m));
  return make_collection(std::move(G), C.prime(), std::move(basis),
                         std::move(c));
}

// Block-diagonal sum of matrix collections, ordered as given.
Collection block_sum(const std::vector<Collection> &parts, GroupSpec G) {
  unsigned n = 0;
  for (const auto &P : parts)
    n += P.E.e(1).matrix().dim();
  std::vector<GroupElement> basis, c;
  unsigned off = 0;
  for (const auto &P : parts) {
    for (const auto &e : P.E.basis())
      basis.push_back(embed_block(e.matrix(), off, n));
    for (const auto &x : P.c)
      c.push_back(embed_block(x.matrix(), off, n));
    off += P.E.e(1).matrix().dim();
  }
  return make_collection(std::move(G), parts.front().prime(), std::move(basis),
                         std::move(c));
}

// Order-p multiplication matrix on GF(q^d) = GF(q)[y]/(g), power basis.
struct ExtensionData {
  poly::Poly modulus;
  std::uint64_t u_code = 0;
  Matrix X;
};

ExtensionData extension_generator(const FieldPtr &F, unsigned d, unsigned p) {
  ExtensionData out;
  out.modulus = poly::least_irreducible(*F, d);
  const std::uint64_t q = F->order();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i)
    total *= q;
  auto decode = [&](std::uint64_t t) {
    poly::Poly a(d, 0);
    for (unsigned i = 0; i < d; ++i) {
      a[i] = static_cast<Field::Elt>(t % q);
      t /= q;
    }
    poly::trim(a);
    return a;
  };
  const poly::Poly one{1};
  for (std::uint64_t t = 2; t < total; ++t) {
    poly::Poly a = decode(t);
    if (poly::powmod(*F, a, p, out.modulus) == one) {
      out.u_code = t;
      std::vector<Field::Elt> e(std::size_t(d) * d, 0);
      poly::Poly yk{1};
      for (unsigned col = 0; col < d; ++col) {
        poly::Poly img = poly::mulmod(*F, a, yk, out.modulus);
        for (unsigned row = 0; row < img.size(); ++row)
          e[std::size_t(row) * d + col] = img[row];
        yk = poly::mulmod(*F, yk, poly::Poly{0, 1}, out.modulus);
      }
      out.X = Matrix(F, d, std::move(e));
      return out;
    }
  }
  throw std::logic_error("no element of order p in the extension field");
}

// First d x d block (entries in lexicographic order) that is invertible,
// has determinant 1 when requested, and does not normalize <X>.
std::optional<Matrix> search_block(const Matrix &X, unsigned p, bool det1) {
  const FieldPtr &F = X.field();
  const unsigned d = X.dim();
  const std::uint64_t q = F->order();
  const std::size_t cells = std::size_t(d) * d;
  std::vector<GroupElement> powers;
  GroupElement Xg = X;
  GroupElement acc = X;
  for (unsigned k = 1; k < p; ++k) {
    powers.push_back(acc);
    acc = acc * Xg;
  }
  std::vector<Field::Elt> e(cells, 0);
  for (;;) {
    Matrix B(F, d, e);
    Field::Elt det = B.det();
    if (det != 0 && (!det1 || det == 1) &&
        !normalizes_cyclic_powers(B, Xg, powers))
      return B;
    std::size_t k = cells;
    while (k > 0) {
      --k;
      if (++e[k] < q)
        break;
      e[k] = 0;
      if (k == 0)
        return std::nullopt;
    }
    if (cells == 0)
      return std::nullopt;
  }
}

Collection sl42_collection(GroupSpec G) {
  FieldPtr F = Field::of_order(2);
  Matrix X = fixture_X(), Y = fixture_Y();
  Matrix X2 = X * X;
  std::vector<GroupElement> basis{
      Matrix::block_diagonal({X2, X2}), Matrix::block_diagonal({X2, X})};
  std::vector<GroupElement> c{from_blocks(F, 2, {{&X, nullptr}, {&Y, &X}}),
                              from_blocks(F, 2, {{&X, nullptr}, {&X, &X2}})};
  return make_collection(std::move(G), 3, std::move(basis), std::move(c));
}

Collection sl62_collection(GroupSpec G) {
  FieldPtr F = Field::of_order(2);
  Matrix X = fixture_X(), Y = fixture_Y();
  Matrix X2 = X * X;
  Matrix I = Matrix::identity(F, 2);
  std::vector<GroupElement> basis{Matrix::block_diagonal({X2, I, I}),
                                  Matrix::block_diagonal({X, X, X}),
                                  Matrix::block_diagonal({X2, X2, X})};
  std::vector<GroupElement> c{
      from_blocks(F, 2, {{&X, nullptr, nullptr}, {&X, &I, nullptr},
                         {nullptr, nullptr, &I}}),
      from_blocks(F, 2, {{&X, nullptr, nullptr}, {nullptr, &X, &Y},
                         {nullptr, nullptr, &X}}),
      from_blocks(F, 2, {{&X, nullptr, nullptr}, {nullptr, &X, &X},
                         {nullptr, nullptr, &X2}})};
  return make_collection(std::move(G), 3, std::move(basis), std::move(c));
}

// (p, q) = (3, 2): fixed pieces, block sums and one-dimensional padding.
Collection linear_32(unsigned n, LinearKind kind, ConstructionRecipe &rec) {
  GroupSpec G = linear_group(kind, n, 2);
  if (n == 3) {
    rec.family = Family::SL32Search;
    FieldPtr F = Field::of_order(2);
    Matrix e1 = embed_block(fixture_X(), 0, 3);
    auto enumerated = enumerate_group(G);
    for (const auto &g : enumerated->elements())
      if (!normalizes_cyclic(g, e1, 3))
        return make_collection(G, 3, {e1}, {g});
    throw std::logic_error("SL(3,2) has no element outside N(<e_1>)");
  }
  if (n == 4) {
    rec.family = Family::SL42;
    return sl42_collection(G);
  }
  if (n == 6) {
    rec.family = Family::SL62;
    return sl62_collection(G);
  }
  if (n % 2 == 1) {
    ConstructionRecipe inner;
    Collection C = linear_32(n - 1, kind, inner);
    rec.family = inner.family == Family::BlockSum ? Family::BlockSum
                                                  : inner.family;
    rec.note = "padded from dimension " + std::to_string(n - 1);
    return embed_collection(C, n, G);
  }
  rec.family = Family::BlockSum;
  std::vector<Collection> parts;
  unsigned rest = n;
  if (n % 4 == 2) {
    parts.push_back(sl62_collection(special_linear_group(6, 2)));
    rest -= 6;
  }
  while (rest > 0) {
    parts.push_back(sl42_collection(special_linear_group(4, 2)));
    rest -= 4;
  }
  std::rotate(parts.begin(), parts.begin() + (n % 4 == 2 ? 1 : 0),
              parts.end()); // blocks of 4 first, then the 6
  rec.note = "block sum of " + std::to_string(parts.size()) + " pieces";
  return block_sum(parts, G);
}

} // namespace

Matrix fixture_X() { return from_rows(Field::of_order(2), {{0, 1}, {1, 1}}); }
Matrix fixture_Y() { return from_rows(Field::of_order(2), {{0, 1}, {1, 0}}); }

Construction symmetric_alternating(unsigned n, unsigned p, bool alternating) {
  if (!is_prime(p) || p <= 3)
    throw std::invalid_argument("symmetric_alternating needs a prime p > 3");
  if (n < p)
    throw std::invalid_argument("symmetric_alternating needs n >= p");
  Construction out;
  auto &rec = out.recipe;
  rec.family = Family::SymAlt;
  rec.n = n;
  rec.p = p;
  rec.r = n / p;
  rec.b = n % p;
  std::vector<GroupElement> basis, c;
  for (unsigned i = 1; i <= rec.r; ++i) {
    std::string cyc = "(";
    for (unsigned k = (i - 1) * p + 1; k <= i * p; ++k)
      cyc += (k == (i - 1) * p + 1 ? "" : ",") + std::to_string(k);
    cyc += ")";
    basis.push_back(Permutation::from_cycles(cyc, n));
    unsigned s = (i - 1) * p;
    c.push_back(Permutation::from_cycles("(" + std::to_string(s + 1) + "," +
                                             std::to_string(s + 2) + "," +
                                             std::to_string(s + 3) + ")",
                                         n));
  }
  out.collection =
      make_collection(alternating ? alternating_group(n) : symmetric_group(n),
                      p, std::move(basis), std::move(c));
  return out;
}

Construction a8_p3(bool symmetric) {
  Construction out;
  out.recipe.family = Family::A8p3;
  out.recipe.n = 8;
  out.recipe.p = 3;
  out.recipe.r = 2;
  out.recipe.b = 2;
  auto P = [](const char *s) { return Permutation::from_cycles(s, 8); };
  out.collection = make_collection(
      symmetric ? symmetric_group(8) : alternating_group(8), 3,
      {P("(1,2,3)"), P("(4,5,6)")}, {P("(1,7)(2,3)"), P("(4,8)(5,6)")});
  return out;
}

Construction sl42() {
  Construction out;
  out.recipe.family = Family::SL42;
  out.recipe.n = 4;
  out.recipe.q = 2;
  out.recipe.p = 3;
  out.recipe.kind = LinearKind::SL;
  out.recipe.d = 2;
  out.recipe.r = 2;
  out.collection = sl42_collection(special_linear_group(4, 2));
  return out;
}

Construction sl62() {
  Construction out;
  out.recipe.family = Family::SL62;
  out.recipe.n = 6;
  out.recipe.q = 2;
  out.recipe.p = 3;
  out.recipe.kind = LinearKind::SL;
  out.recipe.d = 2;
  out.recipe.r = 3;
  out.collection = sl62_collection(special_linear_group(6, 2));
  return out;
}

Construction linear_d_gt_1(unsigned n, std::uint64_t q, unsigned p,
                           LinearKind kind) {
  require_odd_prime(p);
  checked_q(q);
  if (kind != LinearKind::GL && kind != LinearKind::SL)
    throw std::invalid_argument("linear_d_gt_1 builds GL or SL collections");
  if (q % p == 0)
    throw std::invalid_argument("p must not divide q");
  Construction out;
  auto &rec = out.recipe;
  rec.family = Family::LinearDgt1;
  rec.n = n;
  rec.q = q;
  rec.p = p;
  rec.kind = kind;
  rec.d = multiplicative_order_mod(q, p);
  if (rec.d <= 1)
    throw std::invalid_argument("linear_d_gt_1 needs d > 1 (p must not "
                                "divide q-1)");
  if (n < rec.d)
    throw std::invalid_argument("n must be at least d for a nontrivial "
                                "p-subgroup");
  rec.r = n / rec.d;
  rec.f = n % rec.d;
  if (p == 3 && q == 2) {
    if (n == 2)
      throw std::invalid_argument(
          "SL(2,2) at p = 3 has a normal Sylow 3-subgroup; excluded");
    rec.u = "y";
    out.collection = linear_32(n, kind, rec);
    return out;
  }
  FieldPtr F = Field::of_order(q);
  ExtensionData ext = extension_generator(F, rec.d, p);
  rec.u = std::to_string(ext.u_code);
  auto B = search_block(ext.X, p, kind == LinearKind::SL);
  if (!B)
    throw std::logic_error("no block outside the normalizer of <X>");
  std::vector<GroupElement> basis, c;
  for (unsigned i = 0; i < rec.r; ++i) {
    basis.push_back(embed_block(ext.X, i * rec.d, n));
    c.push_back(embed_block(*B, i * rec.d, n));
  }
  out.collection = make_collection(linear_group(kind, n, q), p,
                                   std::move(basis), std::move(c));
  return out;
}

namespace {

// diag(u I_{i-1}, v, u I_{n-i}) for i = 1..n-1
std::vector<GroupElement> diagonal_basis(const FieldPtr &F, unsigned n,
                                         Field::Elt u, Field::Elt v,
                                         const GroupSpec &G) {
  std::vector<GroupElement> out;
  for (unsigned i = 1; i + 1 <= n; ++i) {
    std::vector<Field::Elt> d(n, u);
    d[i - 1] = v;
    out.push_back(G.from_matrix(Matrix::diagonal(F, d)));
  }
  return out;
}

std::vector<GroupElement> transvections_to_last(const FieldPtr &F, unsigned n,
                                                unsigned count,
                                                const GroupSpec &G) {
  std::vector<GroupElement> out;
  for (unsigned j = 1; j <= count; ++j)
    out.push_back(G.from_matrix(transvection(j, n, n, F)));
  return out;
}

} // namespace

Construction linear_d_eq_1(unsigned n, std::uint64_t q, unsigned p) {
  require_odd_prime(p);
  checked_q(q);
  if ((q - 1) % p != 0)
    throw std::invalid_argument("linear_d_eq_1 needs p | q-1");
  if (n % p == 0)
    throw std::invalid_argument("linear_d_eq_1 needs gcd(p, n) = 1");
  if (n < 2)
    throw std::invalid_argument("linear_d_eq_1 needs n >= 2");
  FieldPtr F = Field::of_order(q);
  Construction out;
  auto &rec = out.recipe;
  rec.family = Family::LinearDeq1;
  rec.n = n;
  rec.q = q;
  rec.p = p;
  rec.kind = LinearKind::SL;
  rec.d = 1;
  rec.r = n - 1;
  Field::Elt u = F->least_of_order(p);
  rec.u = elt_text(u);
  GroupSpec G = special_linear_group(n, q);
  Field::Elt v = F->pow(u, 1 - static_cast<long long>(n));
  out.collection = make_collection(G, p, diagonal_basis(F, n, u, v, G),
                                   transvections_to_last(F, n, n - 1, G));
  return out;
}

Collection quotient_image(const Collection &C, const GroupSpec &Q) {
  if (!Q.quotient_center)
    throw std::invalid_argument("quotient_image needs a central quotient");
  auto image = [&](const GroupElement &g) -> GroupElement {
    if (!g.is_matrix())
      throw std::invalid_argument("quotient_image needs matrix elements");
    return Q.from_matrix(g.matrix());
  };
  std::vector<GroupElement> basis, c;
  for (const auto &e : C.E.basis())
    basis.push_back(image(e));
  for (const auto &x : C.c)
    c.push_back(image(x));
  return make_collection(Q, C.prime(), std::move(basis), std::move(c));
}

Construction projective_linear(unsigned n, std::uint64_t q, unsigned p,
                               LinearKind kind) {
  require_odd_prime(p);
  checked_q(q);
  if (kind != LinearKind::PGL && kind != LinearKind::PSL)
    throw std::invalid_argument("projective_linear builds PGL or PSL");
  if (q % p == 0)
    throw std::invalid_argument("p must not divide q");
  if (n < 2)
    throw std::invalid_argument("projective_linear needs n >= 2");
  FieldPtr F = Field::of_order(q);
  GroupSpec G = linear_group(kind, n, q);
  Construction out;
  auto &rec = out.recipe;
  rec.family = Family::ProjectiveLinear;
  rec.n = n;
  rec.q = q;
  rec.p = p;
  rec.kind = kind;
  rec.d = multiplicative_order_mod(q, p);

  const bool p_divides_center =
      kind == LinearKind::PGL ? (q - 1) % p == 0
                              : (n % p == 0 && (q - 1) % p == 0);
  if (!p_divides_center) {
    // The center is a p'-group: image of the GL/SL collection.
    LinearKind base = kind == LinearKind::PGL ? LinearKind::GL : LinearKind::SL;
    Construction inner = rec.d == 1 ? linear_d_eq_1(n, q, p)
                                    : linear_d_gt_1(n, q, p, base);
    if (rec.d == 1 && base == LinearKind::GL)
      throw std::logic_error("unreachable: PGL with p | q-1 handled below");
    rec.r = inner.recipe.r;
    rec.f = inner.recipe.f;
    rec.u = inner.recipe.u;
    rec.family = Family::QuotientImage;
    rec.note = std::string("image of the ") + to_string(base) +
               " collection (" + to_string(inner.recipe.family) + ")";
    out.collection = quotient_image(inner.collection, G);
    return out;
  }

  if (kind == LinearKind::PGL) {
    Field::Elt u = F->least_of_order(p);
    rec.u = elt_text(u);
    rec.r = n - 1;
    out.collection = make_collection(G, p, diagonal_basis(F, n, u, 1, G),
                                     transvections_to_last(F, n, n - 1, G));
    return out;
  }

  if (n == 3 && p == 3)
    throw std::invalid_argument(
        "PSL(3,q) at p = 3 is excluded from the construction");
  const std::uint64_t np = p_part(n, p), qp = p_part(q - 1, p);
  if (np >= qp) {
    Construction inner = linear_d_eq_1(n - 1, q, p);
    std::vector<GroupElement> basis, c;
    for (const auto &e : inner.collection.E.basis())
      basis.push_back(G.from_matrix(embed_block(e.matrix(), 0, n)));
    for (const auto &x : inner.collection.c)
      c.push_back(G.from_matrix(embed_block(x.matrix(), 0, n)));
    rec.r = n - 2;
    rec.u = inner.recipe.u;
    rec.note = "SL(" + std::to_string(n - 1) + "," + std::to_string(q) +
               ") collection in the top-left corner";
    out.collection = make_collection(G, p, std::move(basis), std::move(c));
    return out;
  }
  Field::Elt z = F->least_of_order(static_cast<std::uint32_t>(np));
  Field::Elt u = 0;
  for (Field::Elt a = 1; a < F->order(); ++a)
    if (F->pow(a, p) == z) {
      u = a;
      break;
    }
  if (u == 0)
    throw std::logic_error("no p-th root of z");
  rec.z = elt_text(z);
  rec.u = elt_text(u);
  rec.r = n - 1;
  Field::Elt v = F->pow(u, 1 - static_cast<long long>(n));
  out.collection = make_collection(G, p, diagonal_basis(F, n, u, v, G),
                                   transvections_to_last(F, n, n - 1, G));
  return out;
}

namespace {

std::uint64_t unitary_order(unsigned n, std::uint64_t q) {
  unsigned __int128 order = 1;
  const unsigned __int128 cap = std::numeric_limits<std::uint64_t>::max();
  for (unsigned i = 0; i < n * (n - 1) / 2 && order <= cap; ++i)
    order *= q;
  unsigned __int128 qi = 1;
  for (unsigned i = 1; i <= n && order <= cap; ++i) {
    qi *= q;
    order *= (i % 2 == 0) ? qi - 1 : qi + 1;
  }
  return order > cap ? std::numeric_limits<std::uint64_t>::max()
                     : static_cast<std::uint64_t>(order);
}

} // namespace

ObstructionCertificate obstruction_family(LinearKind kind, unsigned n,
                                          std::uint64_t q, unsigned p) {
  require_odd_prime(p);
  checked_q(q);
  if (n < 1)
    throw std::invalid_argument("n must be >= 1");
  if (q % p == 0)
    throw std::invalid_argument("p must not divide q");
  const bool unitary = kind == LinearKind::GU || kind == LinearKind::SU;
  const bool special = kind == LinearKind::SL || kind == LinearKind::SU;
  if (kind == LinearKind::PGL || kind == LinearKind::PSL)
    throw std::invalid_argument("obstruction_family takes GL, SL, GU or SU");
  const std::uint64_t q_eps = unitary ? q + 1 : q - 1;
  if (q_eps % p != 0)
    throw std::invalid_argument(std::string("no obstruction: p does not "
                                            "divide q") +
                                (unitary ? "+1" : "-1"));
  if (special && n % p != 0)
    throw std::invalid_argument(
        "no obstruction: p does not divide gcd(n, q-eps)");

  ObstructionCertificate cert;
  cert.p = p;
  cert.source = "structural";
  if (!unitary) {
    cert.group = linear_group(kind, n, q);
    FieldPtr F = Field::of_order(q);
    Field::Elt zeta = F->least_of_order(p);
    cert.witness = Matrix::diagonal(F, std::vector<Field::Elt>(n, zeta));
    if (cert.group.enumerable()) {
      if (auto E = try_enumerate(cert.group)) {
        auto central = central_p_elements(cert.group, p);
        if (std::find(central.begin(), central.end(), cert.witness) ==
            central.end())
          throw InternalError("structural central scalar not found among the "
                              "enumerated central p-elements");
        cert.source = "structural+enumeration";
      }
    }
    return cert;
  }
  FieldPtr F = Field::of_order(q * q);
  Field::Elt zeta = F->least_of_order(p);
  GroupSpec G;
  G.name = std::string(to_string(kind)) + "(" + std::to_string(n) + "," +
           std::to_string(q) + ")";
  G.kind = GroupKind::Matrix;
  G.n = n;
  G.q = q * q;
  G.det1 = special;
  std::uint64_t order = unitary_order(n, q);
  if (special && order != std::numeric_limits<std::uint64_t>::max())
    order /= (q + 1);
  G.known_order = order;
  cert.group = std::move(G);
  cert.witness = Matrix::diagonal(F, std::vector<Field::Elt>(n, zeta));
  return cert;
}

} // namespace quillen
