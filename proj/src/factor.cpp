#include "wstrat/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "wstrat/engine.hpp"
#include "wstrat/poly_io.hpp"

// Factorization over Q: primitive-PRS gcds, a Berlekamp + Hensel + subset
// recombination engine for univariate polynomials, and slice-wise Hensel
// lifting from a reduced evaluation for multivariate polynomials.

namespace wstrat {

namespace {

// ---------------------------------------------------------------- division

bool try_divide(const Polynomial& h, const Polynomial& g, Polynomial* out) {
    Polynomial r = h;
    Polynomial q(h.ring());
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        const Term& lg = g.leading();
        if (!lr.mon.divisible_by(lg.mon)) return false;
        Polynomial t = Polynomial::from_terms(
            h.ring(), {{lr.mon.div(lg.mon), lr.coeff / lg.coeff}});
        q = q + t;
        r = r - t * g;
    }
    if (out) *out = std::move(q);
    return true;
}

// ------------------------------------------------------- multivariate tools

std::vector<int> used_vars(const Polynomial& f) {
    std::vector<int> v;
    for (int i = 0; i < f.ring()->arity(); ++i)
        if (f.uses_var(i)) v.push_back(i);
    return v;
}

std::uint32_t degree_in_var(const Polynomial& f, int v) {
    return f.degree_in(v);
}

// Coefficients of f viewed as a univariate polynomial in v; entry d is the
// coefficient of v^d, an element of the same ring not using v.
std::vector<Polynomial> coeffs_in(const Polynomial& f, int v) {
    std::vector<Polynomial> cs(degree_in_var(f, v) + 1, Polynomial(f.ring()));
    std::vector<std::vector<Term>> buckets(cs.size());
    for (const Term& t : f.terms()) {
        Monomial m = t.mon;
        std::uint32_t d = m[v];
        m.set(v, 0);
        buckets[d].push_back({std::move(m), t.coeff});
    }
    for (size_t d = 0; d < cs.size(); ++d)
        cs[d] = Polynomial::from_terms(f.ring(), std::move(buckets[d]));
    return cs;
}

Polynomial from_coeffs(const RingPtr& ring, const std::vector<Polynomial>& cs,
                       int v) {
    std::vector<Term> ts;
    for (size_t d = 0; d < cs.size(); ++d)
        for (const Term& t : cs[d].terms()) {
            Monomial m = t.mon;
            m.set(v, static_cast<std::uint32_t>(d));
            ts.push_back({std::move(m), t.coeff});
        }
    return Polynomial::from_terms(ring, std::move(ts));
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g);

Polynomial gcd_list(const std::vector<Polynomial>& fs) {
    Polynomial acc(fs.empty() ? RingPtr() : fs[0].ring());
    for (const Polynomial& f : fs) {
        if (f.is_zero()) continue;
        acc = acc.is_zero() ? f.primitive() : gcd_rec(acc, f);
        if (acc.is_constant()) break;
    }
    return acc;
}

// Pseudo-remainder of f by g with respect to v (both with positive v-degree,
// deg_v f >= deg_v g).
Polynomial prem_v(Polynomial f, const Polynomial& g, int v) {
    std::uint32_t dg = degree_in_var(g, v);
    std::vector<Polynomial> gc = coeffs_in(g, v);
    const Polynomial& lg = gc[dg];
    while (!f.is_zero()) {
        std::uint32_t df = degree_in_var(f, v);
        if (df < dg) break;
        std::vector<Polynomial> fc = coeffs_in(f, v);
        Polynomial shift = Polynomial::variable(f.ring(), v, df - dg);
        f = f * lg - fc[df] * shift * g;
    }
    return f;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g) {
    Engine::get().check_deadline();
    if (f.is_zero()) return g.primitive();
    if (g.is_zero()) return f.primitive();
    if (f.is_constant() || g.is_constant())
        return Polynomial::constant(f.ring(), Rational(1));
    std::vector<int> uf = used_vars(f), ug = used_vars(g);
    int v = std::min(uf.front(), ug.front());
    if (degree_in_var(f, v) == 0)
        return gcd_rec(gcd_list(coeffs_in(g, v)), f);
    if (degree_in_var(g, v) == 0)
        return gcd_rec(gcd_list(coeffs_in(f, v)), g);

    Polynomial cf = gcd_list(coeffs_in(f, v));
    Polynomial cg = gcd_list(coeffs_in(g, v));
    Polynomial a = poly_divide_exact(f, cf);
    Polynomial b = poly_divide_exact(g, cg);
    if (degree_in_var(a, v) < degree_in_var(b, v)) std::swap(a, b);
    while (!b.is_zero()) {
        Engine::get().check_deadline();
        Polynomial r = prem_v(a, b, v);
        a = std::move(b);
        if (r.is_zero()) {
            b = r;
        } else {
            Polynomial cr = gcd_list(coeffs_in(r, v));
            b = poly_divide_exact(r, cr);
        }
    }
    if (degree_in_var(a, v) == 0) {
        // Primitive parts are coprime in v; only the contents share factors.
        return gcd_rec(cf, cg);
    }
    Polynomial ca = gcd_list(coeffs_in(a, v));
    return (gcd_rec(cf, cg) * poly_divide_exact(a, ca)).primitive();
}

// ------------------------------------------------ dense univariate helpers

using UQ = std::vector<Rational>;  // index = degree
using UZ = std::vector<Integer>;

void uq_trim(UQ& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int uq_deg(const UQ& a) { return static_cast<int>(a.size()) - 1; }

UQ uq_mul(const UQ& a, const UQ& b) {
    if (a.empty() || b.empty()) return {};
    UQ r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uq_trim(r);
    return r;
}

UQ uq_sub(UQ a, const UQ& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    uq_trim(a);
    return a;
}

UQ uq_scale(UQ a, const Rational& c) {
    for (auto& x : a) x *= c;
    uq_trim(a);
    return a;
}

// Remainder of a modulo b (b nonzero), ordinary division over Q.
UQ uq_rem(UQ a, const UQ& b) {
    while (uq_deg(a) >= uq_deg(b)) {
        Rational c = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        a.pop_back();
        uq_trim(a);
    }
    return a;
}

// For coprime a, b: s, t with s*a + t*b = 1.
void uq_bezout(const UQ& a, const UQ& b, UQ* s, UQ* t) {
    UQ r0 = a, r1 = b;
    UQ s0 = {Rational(1)}, s1 = {};
    UQ t0 = {}, t1 = {Rational(1)};
    while (!r1.empty()) {
        // Quotient of r0 by r1.
        UQ q;
        UQ rem = r0;
        while (uq_deg(rem) >= uq_deg(r1)) {
            size_t off = rem.size() - r1.size();
            Rational c = rem.back() / r1.back();
            if (q.size() < off + 1) q.resize(off + 1, Rational(0));
            q[off] += c;
            for (size_t i = 0; i < r1.size(); ++i) rem[off + i] -= c * r1[i];
            rem.pop_back();
            uq_trim(rem);
        }
        UQ ns = uq_sub(s0, uq_mul(q, s1));
        UQ nt = uq_sub(t0, uq_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (uq_deg(r0) != 0)
        throw structural_error("bezout of non-coprime polynomials");
    Rational inv = Rational(1) / r0[0];
    *s = uq_scale(std::move(s0), inv);
    *t = uq_scale(std::move(t0), inv);
}

// ------------------------------------------------- modular univariate (F_p)

void um_norm(UZ& a, const Integer& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int um_deg(const UZ& a) { return static_cast<int>(a.size()) - 1; }

UZ um_mul(const UZ& a, const UZ& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    UZ r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    um_norm(r, m);
    return r;
}

Integer um_inv(const Integer& a, const Integer& m) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw structural_error("non-invertible element in modular arithmetic");
    return r;
}

// Division with remainder modulo m; the divisor's leading coefficient must be
// invertible (m prime, or the divisor monic).
void um_divmod(const UZ& a, const UZ& b, const Integer& m, UZ* q, UZ* r) {
    UZ rem = a;
    um_norm(rem, m);
    UZ quo;
    Integer linv = um_inv(b.back(), m);
    while (um_deg(rem) >= um_deg(b)) {
        size_t off = rem.size() - b.size();
        Integer c = (rem.back() * linv) % m;
        if (quo.size() < off + 1) quo.resize(off + 1, Integer(0));
        quo[off] = (quo[off] + c) % m;
        for (size_t i = 0; i < b.size(); ++i)
            rem[off + i] = (rem[off + i] - c * b[i]) % m;
        um_norm(rem, m);
    }
    um_norm(quo, m);
    if (q) *q = std::move(quo);
    if (r) *r = std::move(rem);
}

UZ um_gcd(UZ a, UZ b, const Integer& p) {
    um_norm(a, p);
    um_norm(b, p);
    while (!b.empty()) {
        UZ r;
        um_divmod(a, b, p, nullptr, &r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Integer inv = um_inv(a.back(), p);
        for (auto& c : a) c = (c * inv) % p;
        um_norm(a, p);
    }
    return a;
}

UZ um_derivative(const UZ& a, const Integer& m) {
    UZ d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Integer(i));
    um_norm(d, m);
    return d;
}

// s*a + t*b = 1 modulo the prime p for coprime a, b.
void um_bezout(const UZ& a, const UZ& b, const Integer& p, UZ* s, UZ* t) {
    UZ r0 = a, r1 = b;
    um_norm(r0, p);
    um_norm(r1, p);
    UZ s0 = {Integer(1)}, s1 = {};
    UZ t0 = {}, t1 = {Integer(1)};
    while (!r1.empty()) {
        UZ q, rem;
        um_divmod(r0, r1, p, &q, &rem);
        UZ ns = s0, nt = t0;
        UZ qs = um_mul(q, s1, p), qt = um_mul(q, t1, p);
        if (ns.size() < qs.size()) ns.resize(qs.size(), Integer(0));
        for (size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
        if (nt.size() < qt.size()) nt.resize(qt.size(), Integer(0));
        for (size_t i = 0; i < qt.size(); ++i) nt[i] -= qt[i];
        um_norm(ns, p);
        um_norm(nt, p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (um_deg(r0) != 0)
        throw structural_error("modular bezout of non-coprime polynomials");
    Integer inv = um_inv(r0[0], p);
    for (auto& c : s0) c = (c * inv) % p;
    for (auto& c : t0) c = (c * inv) % p;
    um_norm(s0, p);
    um_norm(t0, p);
    *s = std::move(s0);
    *t = std::move(t0);
}

// ---------------------------------------------------------------- Berlekamp

// Monic squarefree f modulo the small prime p -> monic irreducible factors.
std::vector<UZ> berlekamp(const UZ& f, const Integer& p) {
    int n = um_deg(f);
    if (n == 1) return {f};
    // Rows of the Frobenius matrix: x^(p*i) mod f.
    std::vector<UZ> rows(static_cast<size_t>(n));
    rows[0] = {Integer(1)};
    // x^p mod f by square and multiply.
    UZ xp = {Integer(1)};
    UZ base = {Integer(0), Integer(1)};
    {
        UZ acc = {Integer(1)};
        Integer e = p;
        UZ sq = base;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) {
                acc = um_mul(acc, sq, p);
                um_divmod(acc, f, p, nullptr, &acc);
            }
            e >>= 1;
            if (e > 0) {
                sq = um_mul(sq, sq, p);
                um_divmod(sq, f, p, nullptr, &sq);
            }
        }
        xp = acc;
    }
    for (int i = 1; i < n; ++i) {
        rows[static_cast<size_t>(i)] =
            um_mul(rows[static_cast<size_t>(i - 1)], xp, p);
        um_divmod(rows[static_cast<size_t>(i)], f, p, nullptr,
                  &rows[static_cast<size_t>(i)]);
    }
    // Kernel of (Q - I) acting on coefficient row vectors: solve v Q = v,
    // i.e. (Q^T - I) v^T = 0.
    std::vector<std::vector<Integer>> m(
        static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n),
                                                     Integer(0)));
    for (int i = 0; i < n; ++i) {
        const UZ& row = rows[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            Integer v = j < static_cast<int>(row.size())
                            ? row[static_cast<size_t>(j)]
                            : Integer(0);
            m[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
        }
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] -= 1;
    }
    // Gaussian elimination over F_p; record pivot columns.
    std::vector<int> pivot_of_row;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int row = rank; row < n; ++row) {
            Integer v = m[static_cast<size_t>(row)][static_cast<size_t>(col)] %
                        p;
            if (v != 0) {
                sel = row;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(rank)]);
        Integer inv = um_inv(((m[static_cast<size_t>(rank)]
                                [static_cast<size_t>(col)] %
                               p) +
                              p) %
                                 p,
                             p);
        for (int j = 0; j < n; ++j) {
            auto& c = m[static_cast<size_t>(rank)][static_cast<size_t>(j)];
            c = ((c * inv) % p + p) % p;
        }
        for (int row = 0; row < n; ++row) {
            if (row == rank) continue;
            Integer c = ((m[static_cast<size_t>(row)][static_cast<size_t>(col)] %
                          p) +
                         p) %
                        p;
            if (c == 0) continue;
            for (int j = 0; j < n; ++j) {
                auto& x = m[static_cast<size_t>(row)][static_cast<size_t>(j)];
                x = ((x - c * m[static_cast<size_t>(rank)]
                                [static_cast<size_t>(j)]) %
                         p +
                     p) %
                    p;
            }
        }
        pivot_of_row.push_back(col);
        ++rank;
    }
    std::vector<char> is_pivot(static_cast<size_t>(n), 0);
    for (int c : pivot_of_row) is_pivot[static_cast<size_t>(c)] = 1;
    // Kernel basis vectors, one per free column.
    std::vector<UZ> kernel;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[static_cast<size_t>(col)]) continue;
        UZ v(static_cast<size_t>(n), Integer(0));
        v[static_cast<size_t>(col)] = 1;
        for (int row = 0; row < rank; ++row) {
            int pc = pivot_of_row[static_cast<size_t>(row)];
            Integer c = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
            v[static_cast<size_t>(pc)] = ((-c) % p + p) % p;
        }
        um_norm(v, p);
        kernel.push_back(std::move(v));
    }
    size_t nfactors = kernel.size();
    if (nfactors <= 1) return {f};

    std::vector<UZ> factors = {f};
    for (const UZ& v : kernel) {
        if (factors.size() == nfactors) break;
        if (um_deg(v) <= 0) continue;  // the constant kernel vector
        for (Integer c(0); c < p && factors.size() < nfactors; ++c) {
            UZ shifted = v;
            if (shifted.empty()) shifted.push_back(Integer(0));
            shifted[0] = ((shifted[0] - c) % p + p) % p;
            um_norm(shifted, p);
            std::vector<UZ> next;
            for (UZ& u : factors) {
                if (um_deg(u) <= 1) {
                    next.push_back(std::move(u));
                    continue;
                }
                UZ g = um_gcd(u, shifted, p);
                if (um_deg(g) <= 0 || um_deg(g) == um_deg(u)) {
                    next.push_back(std::move(u));
                } else {
                    UZ q;
                    um_divmod(u, g, p, &q, nullptr);
                    next.push_back(std::move(g));
                    next.push_back(std::move(q));
                }
            }
            factors = std::move(next);
        }
    }
    std::sort(factors.begin(), factors.end(), [](const UZ& a, const UZ& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return factors;
}

// ------------------------------------------------------------ Hensel (1var)

// F monic over Z, F = g*h mod p with g, h monic coprime mod p; lifts to
// F = g*h mod p^K.
void hensel_pair(const UZ& F, UZ& g, UZ& h, const Integer& p, int K) {
    UZ s, t;
    um_bezout(g, h, p, &s, &t);
    Integer pk(1);
    for (int k = 1; k < K; ++k) {
        pk *= p;
        // e = (F - g*h) / p^k mod p
        UZ gh = g;
        {
            // plain integer product, not reduced
            UZ prod(g.size() + h.size() - 1, Integer(0));
            for (size_t i = 0; i < g.size(); ++i)
                for (size_t j = 0; j < h.size(); ++j)
                    prod[i + j] += g[i] * h[j];
            gh = std::move(prod);
        }
        UZ e(std::max(F.size(), gh.size()), Integer(0));
        for (size_t i = 0; i < F.size(); ++i) e[i] += F[i];
        for (size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
        for (auto& c : e) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
            c = q;  // exact: F == g*h mod p^k
        }
        um_norm(e, p);
        if (e.empty()) continue;
        UZ dg = um_mul(t, e, p);
        um_divmod(dg, g, p, nullptr, &dg);
        UZ dh = um_mul(s, e, p);
        um_divmod(dh, h, p, nullptr, &dh);
        // deg dg < deg g and deg dh < deg h, so no resizing is needed.
        for (size_t i = 0; i < dg.size(); ++i) g[i] += pk * dg[i];
        for (size_t i = 0; i < dh.size(); ++i) h[i] += pk * dh[i];
    }
}

// Lifts all modular factors of monic F to factors mod p^K via pair splits.
void hensel_tree(const UZ& F, std::vector<UZ>& factors, size_t lo, size_t hi,
                 const Integer& p, int K) {
    if (hi - lo <= 1) {
        // Single factor: it equals F reduced mod p^K.
        Integer pK(1);
        for (int k = 0; k < K; ++k) pK *= p;
        factors[lo] = F;
        um_norm(factors[lo], pK);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    UZ g = {Integer(1)}, h = {Integer(1)};
    for (size_t i = lo; i < mid; ++i) g = um_mul(g, factors[i], p);
    for (size_t i = mid; i < hi; ++i) h = um_mul(h, factors[i], p);
    hensel_pair(F, g, h, p, K);
    hensel_tree(g, factors, lo, mid, p, K);
    hensel_tree(h, factors, mid, hi, p, K);
}

// --------------------------------------------- univariate factorization (Z)

UZ uz_from_poly(const Polynomial& f, int v) {
    UZ c(f.degree_in(v) + 1, Integer(0));
    for (const Term& t : f.terms()) c[t.mon[v]] = Integer(t.coeff.get_num());
    return c;
}

Polynomial poly_from_uz(const RingPtr& ring, const UZ& c, int v) {
    std::vector<Term> ts;
    for (size_t d = 0; d < c.size(); ++d)
        if (c[d] != 0)
            ts.push_back({[&] {
                              Monomial m(ring->arity());
                              m.set(v, static_cast<std::uint32_t>(d));
                              return m;
                          }(),
                          Rational(c[d])});
    return Polynomial::from_terms(ring, std::move(ts));
}

// Monic squarefree F over Z -> monic irreducible factors over Z.
std::vector<UZ> factor_monic_squarefree_uz(const UZ& F) {
    int d = um_deg(F);
    if (d <= 1) return {F};

    static const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                   37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                   79, 83, 89, 97, 101, 103, 107, 109, 113};
    Integer p(0);
    for (long cand : kPrimes) {
        Integer pc(cand);
        UZ fp = F;
        um_norm(fp, pc);
        if (um_deg(fp) != d) continue;  // cannot happen for monic F
        UZ der = um_derivative(fp, pc);
        if (der.empty()) continue;
        UZ g = um_gcd(fp, der, pc);
        if (um_deg(g) == 0) {
            p = pc;
            break;
        }
    }
    if (p == 0)
        throw structural_error(
            "no small prime keeps the polynomial squarefree");

    UZ fp = F;
    um_norm(fp, p);
    std::vector<UZ> modular = berlekamp(fp, p);
    if (modular.size() == 1) return {F};

    // Landau-Mignotte bound on the coefficients of monic factors.
    Integer norm2(0);
    for (const Integer& c : F) norm2 += c * c;
    Integer bound = sqrt(norm2) + 1;
    Integer two_d;
    mpz_ui_pow_ui(two_d.get_mpz_t(), 2, static_cast<unsigned long>(d + 1));
    bound *= two_d;
    int K = 1;
    Integer pK = p;
    while (pK < 2 * bound + 1) {
        pK *= p;
        ++K;
    }

    hensel_tree(F, modular, 0, modular.size(), p, K);

    auto balanced = [&](UZ c) {
        um_norm(c, pK);
        Integer half = pK / 2;
        for (auto& x : c)
            if (x > half) x -= pK;
        while (!c.empty() && c.back() == 0) c.pop_back();
        return c;
    };

    std::vector<UZ> result;
    UZ rem_poly = F;
    std::vector<UZ> pool = std::move(modular);
    size_t subset_size = 1;
    while (subset_size <= pool.size() / 2) {
        Engine::get().check_deadline();
        // Enumerate index subsets of the current pool of this size.
        std::vector<size_t> idx(subset_size);
        for (size_t i = 0; i < subset_size; ++i) idx[i] = i;
        bool found = false;
        for (;;) {
            UZ cand = {Integer(1)};
            for (size_t i : idx) cand = um_mul(cand, pool[i], pK);
            cand = balanced(cand);
            // Exact division test over Z.
            bool divides = false;
            UZ quo;
            if (!cand.empty() && cand.back() == 1) {
                UZ r = rem_poly;
                quo.assign(r.size() - cand.size() + 1, Integer(0));
                for (int pos = static_cast<int>(r.size()) - 1;
                     pos >= static_cast<int>(cand.size()) - 1; --pos) {
                    Integer c = r[static_cast<size_t>(pos)];
                    if (c == 0) continue;
                    size_t off =
                        static_cast<size_t>(pos) - (cand.size() - 1);
                    quo[off] = c;
                    for (size_t i = 0; i < cand.size(); ++i)
                        r[off + i] -= c * cand[i];
                }
                divides = std::all_of(r.begin(), r.end(),
                                      [](const Integer& x) { return x == 0; });
            }
            if (divides) {
                result.push_back(cand);
                while (!quo.empty() && quo.back() == 0) quo.pop_back();
                rem_poly = std::move(quo);
                std::vector<UZ> next_pool;
                for (size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    next_pool.push_back(std::move(pool[i]));
                }
                pool = std::move(next_pool);
                found = true;
                break;
            }
            // Next subset.
            int i = static_cast<int>(subset_size) - 1;
            while (i >= 0 &&
                   idx[static_cast<size_t>(i)] ==
                       pool.size() - subset_size + static_cast<size_t>(i))
                --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (size_t j = static_cast<size_t>(i) + 1; j < subset_size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (um_deg(rem_poly) > 0) result.push_back(rem_poly);
    return result;
}

// Univariate squarefree f (as Polynomial in variable v) -> irreducible
// Polynomial factors.
std::vector<Polynomial> factor_univariate(const Polynomial& f, int v) {
    const RingPtr& ring = f.ring();
    std::vector<Polynomial> out;
    Polynomial work = f.primitive();
    UZ c = uz_from_poly(work, v);
    // Strip a factor of v if present.
    size_t shift = 0;
    while (shift < c.size() && c[shift] == 0) ++shift;
    if (shift > 0) {
        out.push_back(Polynomial::variable(ring, v));
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
    }
    int d = um_deg(c);
    if (d <= 0) return out;
    if (d == 1) {
        out.push_back(poly_from_uz(ring, c, v).primitive());
        return out;
    }
    // Monic transform: lc^(d-1) * f(x / lc) has coefficient c_i * lc^(d-1-i)
    // at x^i and leading coefficient 1.
    if (c.back() < 0)
        for (auto& x : c) x = -x;
    Integer lc = c.back();
    UZ monic(c.size());
    monic[static_cast<size_t>(d)] = 1;
    {
        Integer pow(1);
        for (int i = d - 1; i >= 0; --i) {
            monic[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] * pow;
            pow *= lc;
        }
    }
    std::vector<UZ> fz = factor_monic_squarefree_uz(monic);
    for (const UZ& g : fz) {
        // Map back z -> lc * x and take the primitive part.
        UZ mapped(g.size());
        Integer pow(1);
        for (size_t i = 0; i < g.size(); ++i) {
            mapped[i] = g[i] * pow;
            pow *= lc;
        }
        out.push_back(poly_from_uz(ring, mapped, v).primitive());
    }
    return out;
}

// ------------------------------------------- multivariate factorization

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.exps() < b.exps();
    }
};

std::uint64_t degree_outside(const Monomial& m, int v) {
    return m.degree() - m[v];
}

// Terms of f with total degree k in all variables except v, keyed by the
// non-v part of the monomial, as dense univariate coefficients in v.
std::map<Monomial, UQ, MonomialLess> slice(const Polynomial& f, int v,
                                           std::uint64_t k) {
    std::map<Monomial, UQ, MonomialLess> out;
    for (const Term& t : f.terms()) {
        if (degree_outside(t.mon, v) != k) continue;
        Monomial key = t.mon;
        std::uint32_t dv = key[v];
        key.set(v, 0);
        UQ& c = out[key];
        if (c.size() < dv + 1) c.resize(dv + 1, Rational(0));
        c[dv] = t.coeff;
    }
    return out;
}

Polynomial poly_from_uq(const RingPtr& ring, const UQ& c, int v,
                        const Monomial& ypart) {
    std::vector<Term> ts;
    for (size_t d = 0; d < c.size(); ++d) {
        if (c[d] == 0) continue;
        Monomial m = ypart;
        m.set(v, static_cast<std::uint32_t>(d));
        ts.push_back({std::move(m), c[d]});
    }
    return Polynomial::from_terms(ring, std::move(ts));
}

Polynomial truncate_y(const Polynomial& f, int v, std::uint64_t D) {
    std::vector<Term> ts;
    for (const Term& t : f.terms())
        if (degree_outside(t.mon, v) <= D) ts.push_back(t);
    return Polynomial::from_terms(f.ring(), std::move(ts));
}

// F monic in v, F(v, y + a) given; g0 * h0 its univariate part at y = 0
// (monic coprime).  Lifts to F = g*h modulo y-degree > D.
void hensel_pair_multi(const Polynomial& F, int v, std::uint64_t D,
                       const UQ& g0u, const UQ& h0u, Polynomial* gout,
                       Polynomial* hout) {
    const RingPtr& ring = F.ring();
    UQ s, t;
    uq_bezout(g0u, h0u, &s, &t);
    Monomial one(ring->arity());
    Polynomial g = poly_from_uq(ring, g0u, v, one);
    Polynomial h = poly_from_uq(ring, h0u, v, one);
    for (std::uint64_t k = 1; k <= D; ++k) {
        Engine::get().check_deadline();
        Polynomial e = truncate_y(F - g * h, v, k);
        if (e.is_zero()) continue;
        auto ek = slice(e, v, k);
        if (ek.empty()) continue;
        std::vector<Term> dg_terms, dh_terms;
        for (auto& [mon, cu] : ek) {
            UQ dg = uq_rem(uq_mul(t, cu), g0u);
            UQ dh = uq_rem(uq_mul(s, cu), h0u);
            for (size_t d = 0; d < dg.size(); ++d)
                if (dg[d] != 0) {
                    Monomial m = mon;
                    m.set(v, static_cast<std::uint32_t>(d));
                    dg_terms.push_back({std::move(m), dg[d]});
                }
            for (size_t d = 0; d < dh.size(); ++d)
                if (dh[d] != 0) {
                    Monomial m = mon;
                    m.set(v, static_cast<std::uint32_t>(d));
                    dh_terms.push_back({std::move(m), dh[d]});
                }
        }
        g = g + Polynomial::from_terms(ring, std::move(dg_terms));
        h = h + Polynomial::from_terms(ring, std::move(dh_terms));
    }
    *gout = std::move(g);
    *hout = std::move(h);
}

void hensel_tree_multi(const Polynomial& F, int v, std::uint64_t D,
                       const std::vector<UZ>& bases, size_t lo, size_t hi,
                       std::vector<Polynomial>& lifted) {
    if (hi - lo <= 1) {
        lifted[lo] = truncate_y(F, v, D);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    auto uq_of = [](const UZ& z) {
        UQ q;
        q.reserve(z.size());
        for (const Integer& c : z) q.emplace_back(c);
        return q;
    };
    UQ g0 = {Rational(1)}, h0 = {Rational(1)};
    for (size_t i = lo; i < mid; ++i) g0 = uq_mul(g0, uq_of(bases[i]));
    for (size_t i = mid; i < hi; ++i) h0 = uq_mul(h0, uq_of(bases[i]));
    Polynomial g(F.ring()), h(F.ring());
    hensel_pair_multi(F, v, D, g0, h0, &g, &h);
    hensel_tree_multi(g, v, D, bases, lo, mid, lifted);
    hensel_tree_multi(h, v, D, bases, mid, hi, lifted);
}

std::vector<Polynomial> factor_squarefree(const Polynomial& f);

// Squarefree primitive f using >= 2 variables; v = main variable.
std::vector<Polynomial> factor_multivariate(const Polynomial& f, int v) {
    const RingPtr& ring = f.ring();
    std::vector<int> yvars;
    for (int u : used_vars(f))
        if (u != v) yvars.push_back(u);

    // Split off the content with respect to v.
    std::vector<Polynomial> cs = coeffs_in(f, v);
    Polynomial content = gcd_list(cs);
    Polynomial pp = poly_divide_exact(f, content);
    std::vector<Polynomial> out;
    if (!content.is_constant())
        for (Polynomial& g : factor_squarefree(content))
            out.push_back(std::move(g));
    if (degree_in_var(pp, v) == 0) return out;
    if (degree_in_var(pp, v) == 1 || pp.degree() == 1) {
        out.push_back(pp.primitive());
        return out;
    }

    // Monic transform in v: lc(y)^(d-1) * pp(v / lc, y) has coefficient
    // pc_i * lc^(d-1-i) at v^i and leading coefficient 1.
    std::uint32_t d = degree_in_var(pp, v);
    std::vector<Polynomial> pc = coeffs_in(pp, v);
    Polynomial lc = pc[d];
    std::vector<Polynomial> mc(d + 1, Polynomial(ring));
    mc[d] = Polynomial::constant(ring, Rational(1));
    {
        Polynomial pow = Polynomial::constant(ring, Rational(1));
        for (std::uint32_t i = d; i-- > 0;) {
            mc[i] = pc[i] * pow;
            pow = pow * lc;
        }
    }
    Polynomial F = from_coeffs(ring, mc, v);

    // Evaluation point: F(v, a) must stay squarefree.  Deterministic search
    // over small integer points; among the first hits keep the one with the
    // fewest univariate factors.
    std::vector<Rational> best_point;
    std::vector<UZ> best_factors;
    int accepted = 0;
    for (int trial = 0; trial < 400 && accepted < 3; ++trial) {
        std::vector<Rational> a(yvars.size());
        // Enumerate tuples over 0, 1, -1, 2, -2, ... by mixed radix.
        int code = trial;
        for (size_t i = 0; i < yvars.size(); ++i) {
            int digit = code % 9;
            code /= 9;
            static const int vals[9] = {0, 1, -1, 2, -2, 3, -3, 4, -4};
            a[i] = Rational(vals[digit]);
        }
        Polynomial F0 = F;
        for (size_t i = 0; i < yvars.size(); ++i)
            F0 = F0.substitute(yvars[i],
                               Polynomial::constant(ring, a[i]));
        UZ c = uz_from_poly(F0.primitive(), v);
        if (um_deg(c) != static_cast<int>(d)) continue;
        // Squarefree test over Q via modular gcd with the derivative is not
        // enough; use a rational gcd.
        UQ cq;
        for (const Integer& x : c) cq.emplace_back(x);
        UQ dq;
        for (size_t i = 1; i < cq.size(); ++i)
            dq.push_back(cq[i] * Rational(static_cast<long>(i)));
        UQ r0 = cq, r1 = dq;
        while (!r1.empty()) {
            UQ rem = uq_rem(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
        }
        if (uq_deg(r0) != 0) continue;
        // F has integer coefficients and is monic in v, so the image is a
        // monic integer polynomial.
        if (c.back() != 1) continue;
        std::vector<UZ> fz = factor_monic_squarefree_uz(c);
        ++accepted;
        if (best_factors.empty() || fz.size() < best_factors.size()) {
            best_factors = std::move(fz);
            best_point = std::move(a);
        }
        if (best_factors.size() == 1) break;
    }
    if (best_factors.empty())
        throw structural_error("no usable evaluation point for factorization");

    if (best_factors.size() == 1) {
        out.push_back(pp.primitive());
        return out;
    }

    // Shift so the evaluation point is the origin, then lift.
    Polynomial Fsh = F;
    for (size_t i = 0; i < yvars.size(); ++i) {
        if (best_point[i] == 0) continue;
        Polynomial repl = Polynomial::variable(ring, yvars[i]) +
                          Polynomial::constant(ring, best_point[i]);
        Fsh = Fsh.substitute(yvars[i], repl);
    }
    std::uint64_t D = 0;
    for (const Term& t : Fsh.terms())
        D = std::max(D, degree_outside(t.mon, v));

    std::vector<Polynomial> lifted(best_factors.size(), Polynomial(ring));
    hensel_tree_multi(Fsh, v, D, best_factors, 0, best_factors.size(),
                      lifted);

    // Subset recombination against Fsh.
    std::vector<Polynomial> found;
    Polynomial rem_poly = Fsh;
    std::vector<Polynomial> pool = std::move(lifted);
    size_t subset_size = 1;
    while (subset_size <= pool.size() / 2) {
        Engine::get().check_deadline();
        std::vector<size_t> idx(subset_size);
        for (size_t i = 0; i < subset_size; ++i) idx[i] = i;
        bool found_one = false;
        for (;;) {
            Polynomial cand = Polynomial::constant(ring, Rational(1));
            for (size_t i : idx) cand = cand * pool[i];
            cand = truncate_y(cand, v, D);
            Polynomial quo(ring);
            if (try_divide(rem_poly, cand, &quo)) {
                found.push_back(cand);
                rem_poly = std::move(quo);
                std::vector<Polynomial> next_pool;
                for (size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    next_pool.push_back(std::move(pool[i]));
                }
                pool = std::move(next_pool);
                found_one = true;
                break;
            }
            int i = static_cast<int>(subset_size) - 1;
            while (i >= 0 &&
                   idx[static_cast<size_t>(i)] ==
                       pool.size() - subset_size + static_cast<size_t>(i))
                --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (size_t j = static_cast<size_t>(i) + 1; j < subset_size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!found_one) ++subset_size;
    }
    if (!rem_poly.is_constant()) found.push_back(rem_poly);

    // Undo the shift and the monic transform.
    for (Polynomial& g : found) {
        for (size_t i = 0; i < yvars.size(); ++i) {
            if (best_point[i] == 0) continue;
            Polynomial repl = Polynomial::variable(ring, yvars[i]) -
                              Polynomial::constant(ring, best_point[i]);
            g = g.substitute(yvars[i], repl);
        }
        g = g.substitute(v, Polynomial::variable(ring, v) * lc);
        std::vector<Polynomial> gc = coeffs_in(g, v);
        Polynomial gcont = gcd_list(gc);
        g = poly_divide_exact(g, gcont);
        out.push_back(g.primitive());
    }
    return out;
}

// Squarefree primitive nonconstant f -> irreducible factors.
std::vector<Polynomial> factor_squarefree(const Polynomial& f) {
    std::vector<int> uv = used_vars(f);
    if (uv.empty()) return {};
    if (uv.size() == 1) return factor_univariate(f, uv[0]);
    // Main variable: smallest positive degree keeps the lift shallow.
    int v = uv[0];
    for (int u : uv)
        if (degree_in_var(f, u) < degree_in_var(f, v)) v = u;
    return factor_multivariate(f, v);
}

}  // namespace

Polynomial poly_divide_exact(const Polynomial& h, const Polynomial& g) {
    if (g.is_zero()) throw structural_error("division by zero polynomial");
    Polynomial q(h.ring());
    if (h.is_zero()) return q;
    if (!try_divide(h, g, &q))
        throw structural_error("inexact polynomial division");
    return q;
}

std::vector<Polynomial> coefficients_in(const Polynomial& f, int var) {
    return coeffs_in(f, var);
}

Polynomial content_in(const Polynomial& f, int var) {
    return gcd_list(coeffs_in(f, var));
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return g.primitive();
    if (g.is_zero()) return f.primitive();
    if (!same_ring(f.ring(), g.ring()))
        throw structural_error("gcd across different rings");
    return gcd_rec(f.primitive(), g.primitive()).primitive();
}

namespace {

// Factorization and squarefree parts are memoized by the primitive form's
// canonical string.  Neither depends on the ambient ring beyond the names of
// the variables used, so a hit from a different ring is remapped by name.
std::mutex factor_memo_mutex;
std::map<std::string, Polynomial> sqfree_memo;
std::map<std::string, std::vector<FactorUnit>> factor_memo;

}  // namespace

Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero() || f.is_constant()) return f.primitive();
    Polynomial fp = f.primitive();
    std::string key = to_string(fp);
    {
        std::lock_guard<std::mutex> lock(factor_memo_mutex);
        auto it = sqfree_memo.find(key);
        if (it != sqfree_memo.end()) return it->second.map_to(f.ring());
    }
    Polynomial g(f.ring());
    for (int v : used_vars(fp)) {
        Polynomial d = fp.derivative(v);
        g = g.is_zero() ? std::move(d) : poly_gcd(g, d);
        if (g.is_unit_constant()) break;
    }
    Polynomial h = poly_gcd(fp, g);
    Polynomial out = poly_divide_exact(fp, h).primitive();
    std::lock_guard<std::mutex> lock(factor_memo_mutex);
    sqfree_memo.emplace(key, out);
    return out;
}

std::vector<FactorUnit> squarefree_and_factor(const Polynomial& f) {
    if (f.is_zero())
        throw structural_error("factorization of the zero polynomial");
    std::vector<FactorUnit> units;
    if (f.is_constant()) return units;
    Polynomial work = f.primitive();
    std::string key = to_string(work);
    {
        std::lock_guard<std::mutex> lock(factor_memo_mutex);
        auto it = factor_memo.find(key);
        if (it != factor_memo.end()) {
            for (const FactorUnit& u : it->second)
                units.push_back({u.factor.map_to(f.ring()), u.multiplicity});
            return units;
        }
    }
    Polynomial rad = squarefree_part(work);
    std::vector<Polynomial> irreducibles = factor_squarefree(rad);
    for (Polynomial& g : irreducibles) {
        int mult = 0;
        Polynomial quo(f.ring());
        while (try_divide(work, g, &quo)) {
            work = std::move(quo);
            ++mult;
        }
        units.push_back({std::move(g), mult});
    }
    if (!work.is_constant())
        throw structural_error("factorization left a nonconstant remainder");
    std::sort(units.begin(), units.end(),
              [](const FactorUnit& a, const FactorUnit& b) {
                  return Polynomial::cmp(a.factor, b.factor) < 0;
              });
    std::lock_guard<std::mutex> lock(factor_memo_mutex);
    factor_memo.emplace(key, units);
    return units;
}

}  // namespace wstrat
