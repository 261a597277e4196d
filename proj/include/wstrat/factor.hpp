#pragma once

#include <vector>

#include "wstrat/poly.hpp"

namespace wstrat {

struct FactorUnit {
    Polynomial factor;  // irreducible over Q, integer-primitive, positive lead
    int multiplicity = 1;
};

// Greatest common divisor over Q[x...], integer-primitive with positive
// leading coefficient; gcd(0, g) = primitive(g).
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

// f divided by gcd(f, all partial derivatives): same irreducible factors,
// each with multiplicity one.
Polynomial squarefree_part(const Polynomial& f);

// Irreducible factorization over Q: f = c * prod factor^multiplicity for a
// rational c.  The constant is dropped; factors are primitive with positive
// leading coefficient, sorted deterministically.
std::vector<FactorUnit> squarefree_and_factor(const Polynomial& f);

// h / g when g divides h exactly; throws structural_error otherwise.
Polynomial poly_divide_exact(const Polynomial& h, const Polynomial& g);

// Coefficients of f viewed as a univariate polynomial in var: entry d is the
// (var-free) coefficient of var^d, in the same ring.
std::vector<Polynomial> coefficients_in(const Polynomial& f, int var);

// gcd of those coefficients: the content of f with respect to var.
Polynomial content_in(const Polynomial& f, int var);

}  // namespace wstrat
