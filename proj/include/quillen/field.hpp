#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace quillen {

/// Finite field GF(p^k), elements encoded as integers sum c_i p^i where c_i is
/// the coefficient of x^i in the polynomial representative modulo the field's
/// defining polynomial.
///
/// The modulus is the least monic irreducible polynomial of degree k, where
/// polynomials are compared by their encoded tail sum_{i<k} c_i p^i (so the
/// order is lexicographic on (c_{k-1}, ..., c_0)). Prime fields use modulus x.
/// Instances are interned: create(p, k) always returns the same object.
class Field {
public:
  using Elt = std::uint32_t;

  static constexpr std::uint32_t max_order = 1u << 20;

  static std::shared_ptr<const Field> create(unsigned characteristic,
                                             unsigned degree);
  static std::shared_ptr<const Field> of_order(std::uint64_t q);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  /// Monic modulus coefficients c_0..c_k over GF(p).
  const std::vector<Elt> &modulus() const { return modulus_; }
  Elt primitive_element() const { return primitive_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  /// Image of an integer in the prime subfield.
  Elt from_int(long long v) const;

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0)
      return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1)
      s -= q_ - 1;
    return exp_[s];
  }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, long long e) const;
  /// Multiplicative order of a nonzero element.
  std::uint32_t mult_order(Elt a) const;
  /// Least element (in encoded order) of the given multiplicative order, or
  /// nullopt-like 0 when no such element exists.
  Elt least_of_order(std::uint32_t order) const;
  /// Discrete log base primitive_element().
  std::uint32_t log(Elt a) const;

  bool operator==(const Field &o) const { return p_ == o.p_ && k_ == o.k_; }

private:
  Field(unsigned p, unsigned k, std::vector<Elt> modulus);
  void build_tables();

  unsigned p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<Elt> modulus_;
  std::vector<Elt> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elt> add_table_; // q*q when q is small, else empty
  Elt primitive_ = 1;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);
/// Prime power decomposition q = p^k, or {0,0} when q is not a prime power.
std::pair<unsigned, unsigned> prime_power(std::uint64_t q);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Least d >= 1 with q^d = 1 mod p.
unsigned multiplicative_order_mod(std::uint64_t q, std::uint64_t p);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

} // namespace quillen
