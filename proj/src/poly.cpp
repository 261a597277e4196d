#include "wstrat/poly.hpp"

#include <algorithm>

namespace wstrat {

namespace {
const TermOrder kStructural = TermOrder::grevlex();
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({Monomial(p.ring_->arity()), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var, std::uint32_t power) {
    Polynomial p(std::move(ring));
    Monomial m(p.ring_->arity());
    m.set(var, power);
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return kStructural.cmp(a.mon, b.mon) > 0;
    });
    for (Term& t : terms) {
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

std::uint64_t Polynomial::degree() const {
    std::uint64_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

std::uint32_t Polynomial::degree_in(int var) const {
    std::uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mon[var]);
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const Term& t : terms_)
        if (t.mon.degree() != terms_[0].mon.degree()) return false;
    return true;
}

bool Polynomial::uses_var(int var) const {
    for (const Term& t : terms_)
        if (t.mon[var]) return true;
    return false;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_))
        throw structural_error("polynomial ring mismatch");
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = kStructural.cmp(terms_[i].mon, o.terms_[j].mon);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mon, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_))
        throw structural_error("polynomial ring mismatch");
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            acc.push_back({a.mon.mul(b.mon), a.coeff * b.coeff});
    return from_terms(ring_, std::move(acc));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mon != o.terms_[i].mon ||
            terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mon.mul(m), t.coeff * c});
    return r;
}

Polynomial Polynomial::mul_scalar(const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mon, t.coeff * c});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(ring_);
    for (const Term& t : terms_) {
        std::uint32_t e = t.mon[var];
        if (!e) continue;
        Monomial m = t.mon;
        m.set(var, e - 1);
        r.terms_.push_back({std::move(m), t.coeff * Rational(e)});
    }
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) {
        return kStructural.cmp(a.mon, b.mon) > 0;
    });
    return r;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
    // Group terms by the power of var and evaluate with Horner's rule.
    std::uint32_t top = degree_in(var);
    if (top == 0) return *this;
    std::vector<Polynomial> by_pow(top + 1, Polynomial(ring_));
    for (const Term& t : terms_) {
        std::uint32_t e = t.mon[var];
        Monomial m = t.mon;
        m.set(var, 0);
        by_pow[e] = by_pow[e] + from_terms(ring_, {{std::move(m), t.coeff}});
    }
    Polynomial r = by_pow[top];
    for (int e = static_cast<int>(top) - 1; e >= 0; --e)
        r = r * value + by_pow[e];
    return r;
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
    std::vector<int> where(ring_->arity(), -1);
    for (int i = 0; i < ring_->arity(); ++i)
        where[i] = target->index_of(ring_->var(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m(target->arity());
        for (int i = 0; i < ring_->arity(); ++i) {
            if (!t.mon[i]) continue;
            if (where[i] < 0)
                throw structural_error("variable " + ring_->var(i) +
                                       " does not exist in the target ring");
            m.set(where[i], t.mon[i]);
        }
        out.push_back({std::move(m), t.coeff});
    }
    return from_terms(target, std::move(out));
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;
    Integer den_lcm(1), num_gcd(0);
    for (const Term& t : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                t.coeff.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                t.coeff.get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_[0].coeff < 0) scale = -scale;
    return mul_scalar(scale);
}

int Polynomial::cmp(const Polynomial& a, const Polynomial& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = kStructural.cmp(a.terms_[i].mon, b.terms_[i].mon);
        if (c != 0) return c;
        int s = ::cmp(a.terms_[i].coeff, b.terms_[i].coeff);
        if (s != 0) return s;
    }
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

Polynomial homogenize(const Polynomial& f, const RingPtr& target, int new_var) {
    if (f.ring()->index_of(target->var(new_var)) >= 0)
        throw structural_error("homogenization variable already in the ring");
    Polynomial moved = f.map_to(target);
    std::uint64_t top = moved.degree();
    std::vector<Term> out;
    for (const Term& t : moved.terms()) {
        Monomial m = t.mon;
        m.set(new_var, static_cast<std::uint32_t>(top - t.mon.degree()));
        out.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(out));
}

Polynomial dehomogenize(const Polynomial& f, int var, const RingPtr& target) {
    Polynomial one = Polynomial::constant(f.ring(), Rational(1));
    return f.substitute(var, one).map_to(target);
}

}  // namespace wstrat
