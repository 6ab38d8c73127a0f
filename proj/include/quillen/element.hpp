#pragma once

#include "quillen/field.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace quillen {

/// Permutation of {1..n}; stored 0-based. Products compose as functions:
/// (a*b)(i) = a(b(i)).
class Permutation {
public:
  Permutation() = default;
  /// 0-based images; throws std::invalid_argument unless a bijection.
  explicit Permutation(std::vector<std::uint16_t> images);

  static Permutation identity(unsigned n);
  /// 1-based image array, as used in the JSON encoding.
  static Permutation from_images1(const std::vector<long long> &images);
  /// Cycle notation such as "(1,2,3)(4,5)" on n points; "()" is the identity.
  static Permutation from_cycles(std::string_view text, unsigned n);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  unsigned operator()(unsigned i) const { return img_[i]; }
  const std::vector<std::uint16_t> &images() const { return img_; }
  std::vector<long long> images1() const;
  std::string cycle_string() const;
  bool is_even() const;
  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<std::uint16_t> img_;
};

/// Square matrix over a finite field, row-major.
class Matrix {
public:
  using Elt = Field::Elt;

  Matrix() = default;
  Matrix(FieldPtr field, unsigned n, std::vector<Elt> entries);

  static Matrix identity(FieldPtr field, unsigned n);
  static Matrix diagonal(FieldPtr field, const std::vector<Elt> &diag);
  static Matrix block_diagonal(const std::vector<Matrix> &blocks);

  const FieldPtr &field() const { return f_; }
  unsigned dim() const { return n_; }
  Elt at(unsigned r, unsigned c) const { return a_[std::size_t(r) * n_ + c]; }
  const std::vector<Elt> &entries() const { return a_; }

  Elt det() const;
  bool is_invertible() const { return det() != 0; }
  bool is_identity() const;
  bool is_scalar() const;
  bool is_diagonal() const;
  Matrix inverse() const;
  Matrix scaled(Elt lambda) const;
  /// Block of size k starting at (r0, c0).
  Matrix block(unsigned r0, unsigned c0, unsigned k) const;

  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.n_ == b.n_ && a.order_key() == b.order_key() && a.a_ == b.a_;
  }
  friend std::strong_ordering operator<=>(const Matrix &a, const Matrix &b);

private:
  std::uint32_t order_key() const { return f_ ? f_->order() : 0; }
  FieldPtr f_;
  unsigned n_ = 0;
  std::vector<Elt> a_;
};

/// 1-based beta_{ab}: 1 at (a,b), zero elsewhere.
Matrix beta_matrix(unsigned a, unsigned b, unsigned n, FieldPtr field);
/// I_n + beta_{ab}, a != b.
Matrix transvection(unsigned a, unsigned b, unsigned n, FieldPtr field);

/// A matrix modulo the central scalar subgroup of the given order (a divisor
/// of q-1). The stored representative is the least scalar multiple of any
/// representative, so equality of cosets is equality of representatives.
class CentralCoset {
public:
  CentralCoset() = default;
  CentralCoset(const Matrix &rep, unsigned center_order);

  const Matrix &representative() const { return rep_; }
  unsigned center_order() const { return center_order_; }
  std::vector<Field::Elt> center_scalars() const;

  friend bool operator==(const CentralCoset &, const CentralCoset &) = default;
  friend std::strong_ordering operator<=>(const CentralCoset &a,
                                          const CentralCoset &b);

private:
  Matrix rep_;
  unsigned center_order_ = 1;
};

/// Scalars of GF(q)^x of the given order-divisor: {lambda : lambda^m = 1}.
std::vector<Field::Elt> scalar_subgroup(const Field &F, unsigned m);

/// An element of a permutation group, a matrix group, or a central quotient of
/// a matrix group.
class GroupElement {
public:
  using Variant = std::variant<Permutation, Matrix, CentralCoset>;

  GroupElement() = default;
  GroupElement(Permutation p) : v_(std::move(p)) {}
  GroupElement(Matrix m) : v_(std::move(m)) {}
  GroupElement(CentralCoset c) : v_(std::move(c)) {}

  bool is_permutation() const { return v_.index() == 0; }
  bool is_matrix() const { return v_.index() == 1; }
  bool is_coset() const { return v_.index() == 2; }
  const Permutation &permutation() const { return std::get<Permutation>(v_); }
  const Matrix &matrix() const { return std::get<Matrix>(v_); }
  const CentralCoset &coset() const { return std::get<CentralCoset>(v_); }
  const Variant &variant() const { return v_; }

  bool is_identity() const;
  /// Identity of the same kind, degree, dimension and field.
  GroupElement identity() const;
  GroupElement inverse() const;
  std::size_t hash() const;
  std::string to_string() const;

  friend GroupElement operator*(const GroupElement &a, const GroupElement &b);
  friend bool operator==(const GroupElement &, const GroupElement &) = default;
  friend std::strong_ordering operator<=>(const GroupElement &a,
                                          const GroupElement &b);

private:
  Variant v_;
};

/// Throws std::invalid_argument unless a and b can be multiplied.
void require_compatible(const GroupElement &a, const GroupElement &b);
/// x g x^{-1}.
GroupElement conjugate(const GroupElement &x, const GroupElement &g);
GroupElement power(const GroupElement &g, long long k);
std::uint64_t element_order(const GroupElement &g);
/// a*b == b*a, without building both products where avoidable.
bool commutes(const GroupElement &a, const GroupElement &b);
/// a^{-1} b^{-1} a b
GroupElement commutator(const GroupElement &a, const GroupElement &b);

struct ElementHash {
  std::size_t operator()(const GroupElement &g) const { return g.hash(); }
};

} // namespace quillen

template <> struct std::hash<quillen::GroupElement> {
  std::size_t operator()(const quillen::GroupElement &g) const {
    return g.hash();
  }
};
