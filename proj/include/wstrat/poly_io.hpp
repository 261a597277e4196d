#pragma once

#include <string>
#include <vector>

#include "wstrat/poly.hpp"

namespace wstrat {

struct parse_error : structural_error {
    parse_error(const std::string& msg, int pos)
        : structural_error(msg + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
    int position;
};

// Canonical text form: terms in descending order, explicit '*' between
// factors, '^' for exponents, rationals as a/b.  Round-trips through
// parse_poly.
std::string to_string(const Polynomial& f);
std::string to_string(const std::vector<Polynomial>& gens);

// Accepts + - * / ^ ( ), integer literals, '**' as a synonym for '^', and
// division by nonzero constants.  Variable names must exist in the ring.
Polynomial parse_poly(const std::string& text, const RingPtr& ring);

}  // namespace wstrat
