#include "quillen/field.hpp"
#include "quillen/poly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace quillen {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::pair<unsigned, unsigned> prime_power(std::uint64_t q) {
  if (q < 2)
    return {0, 0};
  std::uint64_t p = 2;
  while (q % p != 0)
    ++p;
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1)
    return {0, 0};
  return {static_cast<unsigned>(p), k};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

unsigned multiplicative_order_mod(std::uint64_t q, std::uint64_t p) {
  if (p < 2 || std::gcd(q, p) != 1)
    throw std::invalid_argument("multiplicative order needs gcd(q, p) = 1");
  std::uint64_t x = q % p;
  unsigned d = 1;
  while (x != 1 % p) {
    x = (x * q) % p;
    ++d;
  }
  return d;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

Field::Field(unsigned p, unsigned k, std::vector<Elt> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < k; ++i)
    q_ *= p;
  build_tables();
}

void Field::build_tables() {
  if (q_ <= 256) {
    add_table_.assign(std::size_t(q_) * q_, 0);
    for (Elt a = 0; a < q_; ++a)
      for (Elt b = 0; b < q_; ++b) {
        Elt r = 0, pw = 1, x = a, y = b;
        for (unsigned i = 0; i < k_; ++i) {
          r += ((x % p_ + y % p_) % p_) * pw;
          x /= p_;
          y /= p_;
          pw *= p_;
        }
        add_table_[std::size_t(a) * q_ + b] = r;
      }
  }

  // Multiplication through the polynomial representation, used only while
  // building the log tables.
  std::shared_ptr<const Field> prime = k_ == 1 ? nullptr : Field::create(p_, 1);
  auto slow_mul = [&](Elt a, Elt b) -> Elt {
    if (k_ == 1)
      return Elt((std::uint64_t(a) * b) % p_);
    poly::Poly fa(k_), fb(k_);
    for (unsigned i = 0; i < k_; ++i) {
      fa[i] = a % p_;
      a /= p_;
      fb[i] = b % p_;
      b /= p_;
    }
    poly::Poly r = poly::mulmod(*prime, fa, fb, modulus_);
    Elt out = 0, pw = 1;
    for (unsigned i = 0; i < r.size(); ++i) {
      out += r[i] * pw;
      pw *= p_;
    }
    return out;
  };

  auto factors = prime_factors(q_ - 1);
  auto slow_pow = [&](Elt a, std::uint64_t e) {
    Elt r = 1;
    while (e) {
      if (e & 1)
        r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  primitive_ = 1;
  if (q_ > 2) {
    for (Elt g = 2; g < q_; ++g) {
      bool prim = true;
      for (auto s : factors)
        if (slow_pow(g, (q_ - 1) / s) == 1) {
          prim = false;
          break;
        }
      if (prim) {
        primitive_ = g;
        break;
      }
    }
  }
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  Elt x = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, primitive_);
  }
}

std::shared_ptr<const Field> Field::create(unsigned characteristic,
                                           unsigned degree) {
  if (!is_prime(characteristic))
    throw std::invalid_argument("field characteristic " +
                                std::to_string(characteristic) +
                                " is not prime");
  if (degree < 1)
    throw std::invalid_argument("field degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < degree; ++i) {
    q *= characteristic;
    if (q > max_order)
      throw std::invalid_argument("field order exceeds supported size 2^20");
  }

  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Field>>
      registry;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find({characteristic, degree});
    if (it != registry.end())
      return it->second;
  }

  std::vector<Elt> modulus;
  if (degree == 1) {
    modulus = {0, 1};
  } else {
    auto prime = create(characteristic, 1);
    modulus = poly::least_irreducible(*prime, degree);
  }
  std::shared_ptr<const Field> f(
      new Field(characteristic, degree, std::move(modulus)));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = registry.emplace(std::pair{characteristic, degree}, f);
  return it->second;
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q) {
  auto [p, k] = prime_power(q);
  if (p == 0)
    throw std::invalid_argument("field order " + std::to_string(q) +
                                " is not a prime power");
  return create(p, k);
}

Field::Elt Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0)
    r += p_;
  return static_cast<Elt>(r);
}

Field::Elt Field::add(Elt a, Elt b) const {
  if (!add_table_.empty())
    return add_table_[std::size_t(a) * q_ + b];
  if (p_ == 2)
    return a ^ b;
  Elt r = 0, pw = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

Field::Elt Field::neg(Elt a) const {
  if (p_ == 2)
    return a;
  Elt r = 0, pw = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * pw;
    a /= p_;
    pw *= p_;
  }
  return r;
}

Field::Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Field::Elt Field::inv(Elt a) const {
  if (a == 0)
    throw std::domain_error("inverse of zero field element");
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

Field::Elt Field::pow(Elt a, long long e) const {
  if (a == 0) {
    if (e < 0)
      throw std::domain_error("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  long long m = q_ - 1;
  long long l = (static_cast<long long>(log_[a]) * (e % m)) % m;
  if (l < 0)
    l += m;
  return exp_[static_cast<std::size_t>(l)];
}

std::uint32_t Field::mult_order(Elt a) const {
  if (a == 0)
    throw std::domain_error("zero has no multiplicative order");
  std::uint32_t m = q_ - 1;
  return m / std::gcd(m, log_[a] == 0 ? m : log_[a]);
}

Field::Elt Field::least_of_order(std::uint32_t order) const {
  for (Elt a = 1; a < q_; ++a)
    if (mult_order(a) == order)
      return a;
  return 0;
}

std::uint32_t Field::log(Elt a) const {
  if (a == 0)
    throw std::domain_error("log of zero");
  return log_[a];
}

} // namespace quillen
