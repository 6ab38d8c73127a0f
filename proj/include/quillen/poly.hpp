#pragma once

#include "quillen/field.hpp"

#include <vector>

// Dense univariate polynomials over a Field, coefficients low to high. Used to
// pick field moduli and to build GF(q^d) as an extension of GF(q).
namespace quillen::poly {

using Poly = std::vector<Field::Elt>;

void trim(Poly &f);
int degree(const Poly &f); // -1 for the zero polynomial
Poly add(const Field &F, const Poly &a, const Poly &b);
Poly sub(const Field &F, const Poly &a, const Poly &b);
Poly mul(const Field &F, const Poly &a, const Poly &b);
Poly mod(const Field &F, Poly a, const Poly &m);
Poly mulmod(const Field &F, const Poly &a, const Poly &b, const Poly &m);
Poly powmod(const Field &F, Poly base, std::uint64_t e, const Poly &m);
Poly gcd(const Field &F, Poly a, Poly b);
/// Rabin's irreducibility test for a monic polynomial of degree >= 1.
bool is_irreducible(const Field &F, const Poly &f);
/// Least monic irreducible of the given degree, tails ordered by
/// sum_{i<d} c_i |F|^i.
Poly least_irreducible(const Field &F, unsigned degree);

} // namespace quillen::poly
