#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wstrat/monomial.hpp"
#include "wstrat/order.hpp"
#include "wstrat/rational.hpp"
#include "wstrat/ring.hpp"

namespace wstrat {

struct Term {
    Monomial mon;
    Rational coeff;
};

// Sparse exact polynomial.  Terms are kept strictly sorted descending under
// grevlex (the structural order); engines that run under another order make
// their own sorted working copies.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, int var, std::uint32_t power = 1);
    // Terms in any order with possible duplicates; normalized on entry.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
    }
    bool is_unit_constant() const {
        return terms_.size() == 1 && terms_[0].mon.is_one();
    }
    const Term& leading() const { return terms_.front(); }
    std::uint64_t degree() const;  // total degree, 0 for the zero polynomial
    std::uint32_t degree_in(int var) const;
    bool is_homogeneous() const;
    bool uses_var(int var) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    Polynomial mul_scalar(const Rational& c) const;
    Polynomial pow(unsigned e) const;
    Polynomial derivative(int var) const;

    // var := value substitution (used by dehomogenization and evaluation).
    Polynomial substitute(int var, const Polynomial& value) const;
    // Rename into a structurally different ring; every variable used must
    // exist in the target ring under the same name.
    Polynomial map_to(const RingPtr& target) const;

    // Scale to integer coefficients with content 1 and positive leading
    // coefficient; the zero polynomial is untouched.
    Polynomial primitive() const;

    // Deterministic structural comparison (grevlex term sequence).
    static int cmp(const Polynomial& a, const Polynomial& b);

  private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial homogenize(const Polynomial& f, const RingPtr& target, int new_var);
Polynomial dehomogenize(const Polynomial& f, int var, const RingPtr& target);

}  // namespace wstrat
