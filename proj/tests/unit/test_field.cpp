#include "doctest.h"

#include "quillen/field.hpp"
#include "quillen/poly.hpp"

using namespace quillen;

TEST_CASE("prime fields use modulus x") {
  auto F2 = Field::create(2, 1);
  CHECK(F2->order() == 2);
  CHECK(F2->modulus() == std::vector<Field::Elt>{0, 1});
  auto F7 = Field::create(7, 1);
  CHECK(F7->order() == 7);
  CHECK(F7->modulus() == std::vector<Field::Elt>{0, 1});
}

TEST_CASE("GF(4) has modulus x^2 + x + 1") {
  auto F = Field::create(2, 2);
  CHECK(F->order() == 4);
  CHECK(F->modulus() == std::vector<Field::Elt>{1, 1, 1});
  // the only monic irreducible quadratic over GF(2), by exhaustion
  auto F2 = Field::create(2, 1);
  int irreducible = 0;
  for (Field::Elt c0 = 0; c0 < 2; ++c0)
    for (Field::Elt c1 = 0; c1 < 2; ++c1)
      if (poly::is_irreducible(*F2, {c0, c1, 1}))
        ++irreducible;
  CHECK(irreducible == 1);
}

TEST_CASE("fields are interned") {
  CHECK(Field::create(3, 2) == Field::create(3, 2));
  CHECK(Field::of_order(9) == Field::create(3, 2));
  CHECK_THROWS(Field::of_order(6));
}

TEST_CASE("least irreducible is least among irreducible candidates") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    auto Fp = Field::create(p, 1);
    auto m = poly::least_irreducible(*Fp, k);
    REQUIRE(m.size() == k + 1);
    CHECK(m.back() == 1);
    CHECK(poly::is_irreducible(*Fp, m));
    // every monic of degree k with a smaller tail is reducible
    std::uint64_t tail = 0, scale = 1;
    for (unsigned i = 0; i < k; ++i, scale *= p)
      tail += m[i] * scale;
    for (std::uint64_t t = 0; t < tail; ++t) {
      poly::Poly f(k + 1);
      std::uint64_t v = t;
      for (unsigned i = 0; i < k; ++i, v /= p)
        f[i] = static_cast<Field::Elt>(v % p);
      f[k] = 1;
      CHECK_FALSE(poly::is_irreducible(*Fp, f));
    }
    CHECK(Field::create(p, k)->modulus() == m);
  }
}

TEST_CASE("field axioms by exhaustion for |F| <= 64") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64}) {
    CAPTURE(q);
    auto F = Field::of_order(q);
    const auto n = F->order();
    bool ok = true;
    for (Field::Elt a = 0; a < n && ok; ++a) {
      ok = ok && F->add(a, 0) == a && F->mul(a, 1) == a &&
           F->add(a, F->neg(a)) == 0 && F->sub(a, a) == 0;
      if (a != 0)
        ok = ok && F->mul(a, F->inv(a)) == 1;
      for (Field::Elt b = 0; b < n && ok; ++b) {
        ok = ok && F->add(a, b) == F->add(b, a) && F->mul(a, b) == F->mul(b, a);
        if (a != 0 && b != 0)
          ok = ok && F->mul(a, b) != 0;
        for (Field::Elt c = 0; c < n && ok; ++c)
          ok = ok && F->add(F->add(a, b), c) == F->add(a, F->add(b, c)) &&
               F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)) &&
               F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c));
      }
    }
    CHECK(ok);
    CHECK(F->mult_order(F->primitive_element()) == n - 1);
    // sum of p copies of 1 is 0
    Field::Elt s = 0;
    for (unsigned i = 0; i < F->characteristic(); ++i)
      s = F->add(s, 1);
    CHECK(s == 0);
  }
}

TEST_CASE("least element of a given order") {
  auto F7 = Field::create(7, 1);
  CHECK(F7->least_of_order(3) == 2);
  CHECK(F7->least_of_order(5) == 0);
  auto F4 = Field::create(2, 2);
  CHECK(F4->mult_order(F4->least_of_order(3)) == 3);
}

TEST_CASE("integer helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_power(64) == std::pair<unsigned, unsigned>{2, 6});
  CHECK(prime_power(12) == std::pair<unsigned, unsigned>{0, 0});
  CHECK(multiplicative_order_mod(2, 3) == 2);
  CHECK(multiplicative_order_mod(7, 3) == 1);
  CHECK(multiplicative_order_mod(2, 7) == 3);
  CHECK(p_part(360, 3) == 9);
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("polynomial arithmetic over GF(5)") {
  auto F = Field::create(5, 1);
  poly::Poly a{1, 2}, b{4, 0, 1};
  auto prod = poly::mul(*F, a, b);
  CHECK(prod == poly::Poly{4, 3, 1, 2});
  CHECK(poly::mod(*F, prod, b).empty());
  CHECK(poly::degree(poly::gcd(*F, prod, a)) == 1);
  CHECK(poly::degree({}) == -1);
}
