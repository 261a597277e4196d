#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wstrat {

// Exact rational coefficients.  mpq_class already maintains the required
// invariants: reduced fraction, positive denominator, zero = 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct timeout_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat_of(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Rational rat_parse(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw structural_error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational rat_pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r;
}

}  // namespace wstrat
