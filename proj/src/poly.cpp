#include "quillen/poly.hpp"

#include <stdexcept>

namespace quillen::poly {

void trim(Poly &f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

int degree(const Poly &f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0)
      return i;
  return -1;
}

Poly add(const Field &F, const Poly &a, const Poly &b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Poly sub(const Field &F, const Poly &a, const Poly &b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Poly mul(const Field &F, const Poly &a, const Poly &b) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly mod(const Field &F, Poly a, const Poly &m) {
  trim(a);
  int dm = degree(m);
  if (dm < 0)
    throw std::domain_error("polynomial division by zero");
  Field::Elt lead_inv = F.inv(m[dm]);
  while (degree(a) >= dm) {
    int da = degree(a);
    Field::Elt c = F.mul(a[da], lead_inv);
    for (int i = 0; i <= dm; ++i)
      a[da - dm + i] = F.sub(a[da - dm + i], F.mul(c, m[i]));
    trim(a);
  }
  return a;
}

Poly mulmod(const Field &F, const Poly &a, const Poly &b, const Poly &m) {
  return mod(F, mul(F, a, b), m);
}

Poly powmod(const Field &F, Poly base, std::uint64_t e, const Poly &m) {
  Poly r{1};
  r = mod(F, r, m);
  base = mod(F, base, m);
  while (e) {
    if (e & 1)
      r = mulmod(F, r, base, m);
    e >>= 1;
    if (e)
      base = mulmod(F, base, base, m);
  }
  return r;
}

Poly gcd(const Field &F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Field::Elt li = F.inv(a.back());
    for (auto &c : a)
      c = F.mul(c, li);
  }
  return a;
}

bool is_irreducible(const Field &F, const Poly &f) {
  int d = degree(f);
  if (d < 1)
    return false;
  if (d == 1)
    return true;
  const std::uint64_t Q = F.order();
  const Poly x{0, 1};
  // x^{Q^i} mod f for i = 0..d
  std::vector<Poly> frob(d + 1);
  frob[0] = mod(F, x, f);
  for (int i = 1; i <= d; ++i)
    frob[i] = powmod(F, frob[i - 1], Q, f);
  if (sub(F, frob[d], frob[0]).size() != 0)
    return false;
  for (auto s : prime_factors(static_cast<std::uint64_t>(d))) {
    Poly g = gcd(F, sub(F, frob[d / s], frob[0]), f);
    if (degree(g) != 0)
      return false;
  }
  return true;
}

Poly least_irreducible(const Field &F, unsigned deg) {
  if (deg < 1)
    throw std::invalid_argument("irreducible polynomial degree must be >= 1");
  const std::uint64_t Q = F.order();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < deg; ++i)
    count *= Q;
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly f(deg + 1, 0);
    std::uint64_t x = t;
    for (unsigned i = 0; i < deg; ++i) {
      f[i] = static_cast<Field::Elt>(x % Q);
      x /= Q;
    }
    f[deg] = 1;
    if (is_irreducible(F, f))
      return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

} // namespace quillen::poly
