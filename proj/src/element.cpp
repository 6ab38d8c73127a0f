#include "quillen/element.hpp"
#include "quillen/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quillen {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::uint16_t> images)
    : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto x : img_) {
    if (x >= img_.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<std::uint16_t> img(n);
  std::iota(img.begin(), img.end(), std::uint16_t{0});
  return Permutation(std::move(img));
}

Permutation Permutation::from_images1(const std::vector<long long> &images) {
  if (images.size() > 65535)
    throw std::invalid_argument("permutation degree too large");
  std::vector<std::uint16_t> img(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 1 || images[i] > static_cast<long long>(images.size()))
      throw std::invalid_argument("permutation image out of range");
    img[i] = static_cast<std::uint16_t>(images[i] - 1);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::string_view text, unsigned n) {
  std::vector<std::uint16_t> img(n);
  std::iota(img.begin(), img.end(), std::uint16_t{0});
  std::vector<bool> used(n, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("cycle notation: expected '(' in \"" +
                       std::string(text) + "\"");
    ++i;
    std::vector<unsigned> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        ++i;
      if (start == i)
        throw ParseError("cycle notation: expected a point in \"" +
                         std::string(text) + "\"");
      unsigned long pt = std::stoul(std::string(text.substr(start, i - start)));
      if (pt < 1 || pt > n)
        throw ParseError("cycle notation: point " + std::to_string(pt) +
                         " outside 1.." + std::to_string(n));
      if (used[pt - 1])
        throw ParseError("cycle notation: point " + std::to_string(pt) +
                         " repeated");
      used[pt - 1] = true;
      cycle.push_back(static_cast<unsigned>(pt - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',')
        ++i;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return Permutation(std::move(img));
}

std::vector<long long> Permutation::images1() const {
  std::vector<long long> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    out[i] = img_[i] + 1;
  return out;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (unsigned i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i)
      continue;
    any = true;
    os << '(';
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first)
        os << ',';
      os << j + 1;
      first = false;
      j = img_[j];
    }
    os << ')';
  }
  if (!any)
    return "()";
  return os.str();
}

bool Permutation::is_even() const {
  std::vector<bool> seen(img_.size(), false);
  std::size_t transpositions = 0;
  for (unsigned i = 0; i < img_.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (unsigned j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < img_.size(); ++i)
    if (img_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (unsigned i = 0; i < img_.size(); ++i)
    r.img_[img_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(img_.size(), false);
  std::uint64_t ord = 1;
  for (unsigned i = 0; i < img_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (unsigned j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  Permutation r;
  r.img_.resize(b.img_.size());
  for (std::size_t i = 0; i < b.img_.size(); ++i)
    r.img_[i] = a.img_[b.img_[i]];
  return r;
}

// --------------------------------------------------------------------- Matrix

Matrix::Matrix(FieldPtr field, unsigned n, std::vector<Elt> entries)
    : f_(std::move(field)), n_(n), a_(std::move(entries)) {
  if (!f_)
    throw std::invalid_argument("matrix needs a field");
  if (a_.size() != std::size_t(n) * n)
    throw std::invalid_argument("matrix entry count does not match dimension");
  for (auto x : a_)
    if (x >= f_->order())
      throw std::invalid_argument("matrix entry outside the field");
}

Matrix Matrix::identity(FieldPtr field, unsigned n) {
  std::vector<Elt> a(std::size_t(n) * n, 0);
  for (unsigned i = 0; i < n; ++i)
    a[std::size_t(i) * n + i] = 1;
  return Matrix(std::move(field), n, std::move(a));
}

Matrix Matrix::diagonal(FieldPtr field, const std::vector<Elt> &diag) {
  unsigned n = static_cast<unsigned>(diag.size());
  std::vector<Elt> a(std::size_t(n) * n, 0);
  for (unsigned i = 0; i < n; ++i)
    a[std::size_t(i) * n + i] = diag[i];
  return Matrix(std::move(field), n, std::move(a));
}

Matrix Matrix::block_diagonal(const std::vector<Matrix> &blocks) {
  if (blocks.empty())
    throw std::invalid_argument("block_diagonal needs at least one block");
  unsigned n = 0;
  for (const auto &b : blocks) {
    if (!(*b.field() == *blocks.front().field()))
      throw std::invalid_argument("block_diagonal over different fields");
    n += b.dim();
  }
  std::vector<Elt> a(std::size_t(n) * n, 0);
  unsigned off = 0;
  for (const auto &b : blocks) {
    for (unsigned r = 0; r < b.dim(); ++r)
      for (unsigned c = 0; c < b.dim(); ++c)
        a[std::size_t(off + r) * n + off + c] = b.at(r, c);
    off += b.dim();
  }
  return Matrix(blocks.front().field(), n, std::move(a));
}

Matrix::Elt Matrix::det() const {
  const Field &F = *f_;
  std::vector<Elt> m = a_;
  Elt d = 1;
  for (unsigned c = 0; c < n_; ++c) {
    unsigned piv = n_;
    for (unsigned r = c; r < n_; ++r)
      if (m[std::size_t(r) * n_ + c] != 0) {
        piv = r;
        break;
      }
    if (piv == n_)
      return 0;
    if (piv != c) {
      for (unsigned k = 0; k < n_; ++k)
        std::swap(m[std::size_t(piv) * n_ + k], m[std::size_t(c) * n_ + k]);
      d = F.neg(d);
    }
    Elt pv = m[std::size_t(c) * n_ + c];
    d = F.mul(d, pv);
    Elt pinv = F.inv(pv);
    for (unsigned r = c + 1; r < n_; ++r) {
      Elt f = F.mul(m[std::size_t(r) * n_ + c], pinv);
      if (f == 0)
        continue;
      for (unsigned k = c; k < n_; ++k)
        m[std::size_t(r) * n_ + k] =
            F.sub(m[std::size_t(r) * n_ + k], F.mul(f, m[std::size_t(c) * n_ + k]));
    }
  }
  return d;
}

bool Matrix::is_identity() const {
  for (unsigned r = 0; r < n_; ++r)
    for (unsigned c = 0; c < n_; ++c)
      if (at(r, c) != (r == c ? 1u : 0u))
        return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (unsigned r = 0; r < n_; ++r)
    for (unsigned c = 0; c < n_; ++c)
      if (r != c && at(r, c) != 0)
        return false;
  return true;
}

bool Matrix::is_scalar() const {
  if (!is_diagonal())
    return false;
  for (unsigned r = 1; r < n_; ++r)
    if (at(r, r) != at(0, 0))
      return false;
  return true;
}

Matrix Matrix::inverse() const {
  const Field &F = *f_;
  std::vector<Elt> m = a_;
  Matrix inv = identity(f_, n_);
  std::vector<Elt> &b = inv.a_;
  for (unsigned c = 0; c < n_; ++c) {
    unsigned piv = n_;
    for (unsigned r = c; r < n_; ++r)
      if (m[std::size_t(r) * n_ + c] != 0) {
        piv = r;
        break;
      }
    if (piv == n_)
      throw std::domain_error("matrix is singular");
    if (piv != c)
      for (unsigned k = 0; k < n_; ++k) {
        std::swap(m[std::size_t(piv) * n_ + k], m[std::size_t(c) * n_ + k]);
        std::swap(b[std::size_t(piv) * n_ + k], b[std::size_t(c) * n_ + k]);
      }
    Elt pinv = F.inv(m[std::size_t(c) * n_ + c]);
    for (unsigned k = 0; k < n_; ++k) {
      m[std::size_t(c) * n_ + k] = F.mul(m[std::size_t(c) * n_ + k], pinv);
      b[std::size_t(c) * n_ + k] = F.mul(b[std::size_t(c) * n_ + k], pinv);
    }
    for (unsigned r = 0; r < n_; ++r) {
      if (r == c)
        continue;
      Elt f = m[std::size_t(r) * n_ + c];
      if (f == 0)
        continue;
      for (unsigned k = 0; k < n_; ++k) {
        m[std::size_t(r) * n_ + k] =
            F.sub(m[std::size_t(r) * n_ + k], F.mul(f, m[std::size_t(c) * n_ + k]));
        b[std::size_t(r) * n_ + k] =
            F.sub(b[std::size_t(r) * n_ + k], F.mul(f, b[std::size_t(c) * n_ + k]));
      }
    }
  }
  return inv;
}

Matrix Matrix::scaled(Elt lambda) const {
  Matrix r = *this;
  for (auto &x : r.a_)
    x = f_->mul(x, lambda);
  return r;
}

Matrix Matrix::block(unsigned r0, unsigned c0, unsigned k) const {
  if (r0 + k > n_ || c0 + k > n_)
    throw std::out_of_range("matrix block out of range");
  std::vector<Elt> a(std::size_t(k) * k);
  for (unsigned r = 0; r < k; ++r)
    for (unsigned c = 0; c < k; ++c)
      a[std::size_t(r) * k + c] = at(r0 + r, c0 + c);
  return Matrix(f_, k, std::move(a));
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  const Field &F = *a.f_;
  const unsigned n = a.n_;
  Matrix r;
  r.f_ = a.f_;
  r.n_ = n;
  r.a_.assign(std::size_t(n) * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      Field::Elt x = a.a_[std::size_t(i) * n + k];
      if (x == 0)
        continue;
      for (unsigned j = 0; j < n; ++j)
        r.a_[std::size_t(i) * n + j] =
            F.add(r.a_[std::size_t(i) * n + j], F.mul(x, b.a_[std::size_t(k) * n + j]));
    }
  return r;
}

std::strong_ordering operator<=>(const Matrix &a, const Matrix &b) {
  if (auto c = a.order_key() <=> b.order_key(); c != 0)
    return c;
  if (auto c = a.n_ <=> b.n_; c != 0)
    return c;
  return a.a_ <=> b.a_;
}

Matrix beta_matrix(unsigned a, unsigned b, unsigned n, FieldPtr field) {
  if (a < 1 || b < 1 || a > n || b > n)
    throw std::out_of_range("beta matrix index out of range");
  std::vector<Field::Elt> e(std::size_t(n) * n, 0);
  e[std::size_t(a - 1) * n + (b - 1)] = 1;
  return Matrix(std::move(field), n, std::move(e));
}

Matrix transvection(unsigned a, unsigned b, unsigned n, FieldPtr field) {
  if (a == b)
    throw std::invalid_argument("transvection needs distinct indices");
  Matrix m = beta_matrix(a, b, n, field);
  std::vector<Field::Elt> e = m.entries();
  for (unsigned i = 0; i < n; ++i)
    e[std::size_t(i) * n + i] = 1;
  return Matrix(std::move(field), n, std::move(e));
}

// --------------------------------------------------------------- CentralCoset

std::vector<Field::Elt> scalar_subgroup(const Field &F, unsigned m) {
  if (m == 0 || (F.order() - 1) % m != 0)
    throw std::invalid_argument("central subgroup order must divide q-1");
  std::vector<Field::Elt> out;
  Field::Elt gen = F.pow(F.primitive_element(), (F.order() - 1) / m);
  Field::Elt x = 1;
  for (unsigned t = 0; t < m; ++t) {
    out.push_back(x);
    x = F.mul(x, gen);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CentralCoset::CentralCoset(const Matrix &rep, unsigned center_order)
    : center_order_(center_order) {
  const Field &F = *rep.field();
  auto scalars = scalar_subgroup(F, center_order);
  Field::Elt lead = 0;
  for (auto x : rep.entries())
    if (x != 0) {
      lead = x;
      break;
    }
  if (lead == 0)
    throw std::invalid_argument("coset representative is the zero matrix");
  Field::Elt best = scalars.front(), best_val = F.mul(scalars.front(), lead);
  for (auto s : scalars) {
    Field::Elt v = F.mul(s, lead);
    if (v < best_val) {
      best_val = v;
      best = s;
    }
  }
  rep_ = best == 1 ? rep : rep.scaled(best);
}

std::vector<Field::Elt> CentralCoset::center_scalars() const {
  return scalar_subgroup(*rep_.field(), center_order_);
}

std::strong_ordering operator<=>(const CentralCoset &a, const CentralCoset &b) {
  if (auto c = a.center_order_ <=> b.center_order_; c != 0)
    return c;
  return a.rep_ <=> b.rep_;
}

// --------------------------------------------------------------- GroupElement

void require_compatible(const GroupElement &a, const GroupElement &b) {
  if (a.variant().index() != b.variant().index())
    throw std::invalid_argument("incompatible group element kinds");
  if (a.is_permutation()) {
    if (a.permutation().degree() != b.permutation().degree())
      throw std::invalid_argument("permutations of different degrees");
    return;
  }
  const Matrix &ma = a.is_matrix() ? a.matrix() : a.coset().representative();
  const Matrix &mb = b.is_matrix() ? b.matrix() : b.coset().representative();
  if (ma.dim() != mb.dim() || !(*ma.field() == *mb.field()))
    throw std::invalid_argument("matrices of different dimension or field");
  if (a.is_coset() && a.coset().center_order() != b.coset().center_order())
    throw std::invalid_argument("cosets modulo different central subgroups");
}

GroupElement operator*(const GroupElement &a, const GroupElement &b) {
  require_compatible(a, b);
  switch (a.v_.index()) {
  case 0:
    return a.permutation() * b.permutation();
  case 1:
    return a.matrix() * b.matrix();
  default:
    return CentralCoset(a.coset().representative() * b.coset().representative(),
                        a.coset().center_order());
  }
}

bool GroupElement::is_identity() const {
  switch (v_.index()) {
  case 0:
    return permutation().is_identity();
  case 1:
    return matrix().is_identity();
  default:
    return coset().representative().is_identity();
  }
}

GroupElement GroupElement::identity() const {
  switch (v_.index()) {
  case 0:
    return Permutation::identity(permutation().degree());
  case 1:
    return Matrix::identity(matrix().field(), matrix().dim());
  default: {
    const Matrix &m = coset().representative();
    return CentralCoset(Matrix::identity(m.field(), m.dim()),
                        coset().center_order());
  }
  }
}

GroupElement GroupElement::inverse() const {
  switch (v_.index()) {
  case 0:
    return permutation().inverse();
  case 1:
    return matrix().inverse();
  default:
    return CentralCoset(coset().representative().inverse(),
                        coset().center_order());
  }
}

std::size_t GroupElement::hash() const {
  std::size_t h = 1469598103934665603ull ^ v_.index();
  auto mix = [&](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  switch (v_.index()) {
  case 0:
    for (auto x : permutation().images())
      mix(x);
    break;
  case 1:
    for (auto x : matrix().entries())
      mix(x);
    break;
  default:
    for (auto x : coset().representative().entries())
      mix(x);
    mix(coset().center_order());
  }
  return h;
}

std::string GroupElement::to_string() const {
  auto mat = [](const Matrix &m) {
    std::ostringstream os;
    os << '[';
    for (unsigned r = 0; r < m.dim(); ++r) {
      os << (r ? ",[" : "[");
      for (unsigned c = 0; c < m.dim(); ++c)
        os << (c ? "," : "") << m.at(r, c);
      os << ']';
    }
    os << ']';
    return os.str();
  };
  switch (v_.index()) {
  case 0:
    return permutation().cycle_string();
  case 1:
    return mat(matrix());
  default:
    return "Z" + std::to_string(coset().center_order()) + "*" +
           mat(coset().representative());
  }
}

std::strong_ordering operator<=>(const GroupElement &a, const GroupElement &b) {
  if (auto c = a.v_.index() <=> b.v_.index(); c != 0)
    return c;
  switch (a.v_.index()) {
  case 0:
    return a.permutation() <=> b.permutation();
  case 1:
    return a.matrix() <=> b.matrix();
  default:
    return a.coset() <=> b.coset();
  }
}

GroupElement conjugate(const GroupElement &x, const GroupElement &g) {
  require_compatible(x, g);
  return x * g * x.inverse();
}

GroupElement power(const GroupElement &g, long long k) {
  GroupElement base = k < 0 ? g.inverse() : g;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  GroupElement r = g.identity();
  while (e) {
    if (e & 1)
      r = r * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return r;
}

std::uint64_t element_order(const GroupElement &g) {
  if (g.is_permutation())
    return g.permutation().order();
  constexpr std::uint64_t limit = 50'000'000;
  GroupElement x = g;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (x.is_identity())
      return k;
    x = x * g;
  }
  throw InternalError("element order exceeds search limit");
}

bool commutes(const GroupElement &a, const GroupElement &b) {
  require_compatible(a, b);
  if (a.is_permutation()) {
    const auto &x = a.permutation().images();
    const auto &y = b.permutation().images();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[y[i]] != y[x[i]])
        return false;
    return true;
  }
  if (a.is_matrix()) {
    const Matrix &x = a.matrix();
    const Matrix &y = b.matrix();
    const Field &F = *x.field();
    const unsigned n = x.dim();
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        Field::Elt s = 0, t = 0;
        for (unsigned k = 0; k < n; ++k) {
          s = F.add(s, F.mul(x.at(i, k), y.at(k, j)));
          t = F.add(t, F.mul(y.at(i, k), x.at(k, j)));
        }
        if (s != t)
          return false;
      }
    return true;
  }
  return a * b == b * a;
}

GroupElement commutator(const GroupElement &a, const GroupElement &b) {
  return a.inverse() * b.inverse() * a * b;
}

} // namespace quillen
