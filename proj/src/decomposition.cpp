#include "wstrat/decomposition.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "wstrat/engine.hpp"
#include "wstrat/factor.hpp"
#include "wstrat/poly_io.hpp"

// Minimal primes and primary decomposition in the Shimoyama-Yokoyama style:
// split on factored generators while possible, certify the remaining ideals
// prime through a Gianni-Trager-Zacharias zero-dimensional reduction over
// the field of fractions of a maximal independent variable set, and extract
// primary components by separator saturations.

namespace wstrat {

namespace {

const char* kGenVar = "@T";  // generic-coordinate helper variable

Ideal zero_ideal(const RingPtr& ring) { return Ideal(ring, {}); }

Ideal unit_ideal(const RingPtr& ring) {
    return Ideal(ring, {Polynomial::constant(ring, Rational(1))});
}

std::vector<Polynomial> drop_zero(std::vector<Polynomial> gens) {
    std::vector<Polynomial> out;
    for (Polynomial& g : gens)
        if (!g.is_zero()) out.push_back(std::move(g));
    return out;
}

bool any_constant(const std::vector<Polynomial>& gens) {
    for (const Polynomial& g : gens)
        if (!g.is_zero() && g.is_constant()) return true;
    return false;
}

std::string ideal_key(const Ideal& I) {
    std::string out;
    for (const Polynomial& g : I.gens()) {
        out += to_string(g);
        out += ';';
    }
    return out;
}

std::string gens_key(const std::vector<Polynomial>& gens) {
    std::vector<std::string> ss;
    for (const Polynomial& g : gens) ss.push_back(to_string(g));
    std::sort(ss.begin(), ss.end());
    std::string out;
    for (const std::string& s : ss) {
        out += s;
        out += ';';
    }
    return out;
}

// ------------------------------------------------------- linear reduction

// Substitutes away variables occurring linearly with a constant coefficient.
// Each substitution (v, repl) has repl free of every substituted variable;
// primes of the reduced ideal lift by appending v - repl.  Valid because
// quotienting by v - repl is an isomorphism onto the polynomial ring in the
// remaining variables.
struct LinearReduction {
    std::vector<Polynomial> reduced;
    std::vector<std::pair<int, Polynomial>> subs;
};

LinearReduction linear_reduce(const RingPtr& ring,
                              std::vector<Polynomial> gens) {
    gens = drop_zero(std::move(gens));
    LinearReduction out;
    std::vector<char> gone(ring->arity(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        int hit = -1;
        Polynomial repl(ring);
        for (size_t gi = 0; gi < gens.size() && hit < 0; ++gi) {
            const Polynomial& g = gens[gi];
            if (g.is_zero() || g.is_constant()) continue;
            for (int v = 0; v < ring->arity() && hit < 0; ++v) {
                if (gone[v] || !g.uses_var(v) || g.degree_in(v) != 1)
                    continue;
                std::vector<Term> cterms, rterms;
                for (const Term& t : g.terms()) {
                    if (t.mon[v] == 1) {
                        Monomial m = t.mon;
                        m.set(v, 0);
                        cterms.push_back({std::move(m), t.coeff});
                    } else {
                        rterms.push_back(t);
                    }
                }
                Polynomial c =
                    Polynomial::from_terms(ring, std::move(cterms));
                if (!c.is_unit_constant()) continue;
                Polynomial r =
                    Polynomial::from_terms(ring, std::move(rterms));
                repl = r.mul_scalar(Rational(-1) / c.leading().coeff);
                hit = v;
            }
        }
        if (hit < 0) break;
        std::vector<Polynomial> next;
        for (const Polynomial& q : gens) {
            Polynomial s = q.substitute(hit, repl);
            if (!s.is_zero()) next.push_back(std::move(s));
        }
        gens = std::move(next);
        for (auto& [w, rr] : out.subs) rr = rr.substitute(hit, repl);
        out.subs.emplace_back(hit, repl);
        gone[hit] = 1;
        changed = true;
    }
    out.reduced = std::move(gens);
    return out;
}

std::vector<Polynomial> linear_lift_gens(const RingPtr& ring,
                                         const LinearReduction& lr) {
    std::vector<Polynomial> lin;
    for (const auto& [v, repl] : lr.subs)
        lin.push_back(
            (Polynomial::variable(ring, v) - repl).primitive());
    return lin;
}

Ideal lift_linear(const Ideal& piece, const std::vector<Polynomial>& lin) {
    std::vector<Polynomial> gens = piece.gens();
    gens.insert(gens.end(), lin.begin(), lin.end());
    return canonical(Ideal(piece.ring(), std::move(gens)));
}

// ------------------------------------------------------------ factor split

struct Split {
    size_t index;
    std::vector<Polynomial> bases;
};

std::optional<Split> factor_split(const std::vector<Polynomial>& gens) {
    for (size_t i = 0; i < gens.size(); ++i) {
        const Polynomial& g = gens[i];
        if (g.is_zero() || g.is_constant()) continue;
        std::vector<FactorUnit> units = squarefree_and_factor(g);
        bool nontrivial =
            units.size() > 1 ||
            (units.size() == 1 && units[0].multiplicity > 1);
        if (!nontrivial) continue;
        Split s;
        s.index = i;
        for (FactorUnit& u : units) s.bases.push_back(std::move(u.factor));
        return s;
    }
    return std::nullopt;
}

// ------------------------------------------------- GTZ building blocks

Monomial project_mask(const Monomial& m, const std::vector<char>& keep) {
    Monomial out(m.arity());
    for (int i = 0; i < m.arity(); ++i)
        if (keep[i]) out.set(i, m[i]);
    return out;
}

// Multiplier h in QQ[params]: I extended to QQ(params)[y] and contracted
// back equals I : h^inf, where h is the lcm of the non-constant leading
// y-coefficients of a Groebner basis under the product order y >> params.
std::optional<Polynomial> gtz_h(const Ideal& J,
                                const std::vector<char>& ymask) {
    const RingPtr& ring = J.ring();
    bool has_param = false;
    for (char c : ymask)
        if (!c) has_param = true;
    if (!has_param) return std::nullopt;
    const auto& G = J.groebner(TermOrder::elim(ymask));
    TermOrder grev = TermOrder::grevlex();
    std::vector<char> pmask(ymask.size());
    for (size_t i = 0; i < ymask.size(); ++i) pmask[i] = !ymask[i];
    Polynomial h = Polynomial::constant(ring, Rational(1));
    for (const Polynomial& g : G) {
        Monomial besty;
        bool first = true;
        for (const Term& t : g.terms()) {
            Monomial y = project_mask(t.mon, ymask);
            if (first || grev.cmp(y, besty) > 0) {
                besty = std::move(y);
                first = false;
            }
        }
        std::vector<Term> cterms;
        for (const Term& t : g.terms())
            if (project_mask(t.mon, ymask) == besty)
                cterms.push_back({project_mask(t.mon, pmask), t.coeff});
        Polynomial lc = Polynomial::from_terms(ring, std::move(cterms));
        if (lc.is_constant()) continue;
        Polynomial d = poly_gcd(h, lc);
        h = poly_divide_exact(h * lc, d).primitive();
    }
    if (h.is_constant()) return std::nullopt;
    return squarefree_part(h);
}

// Dimension of the quotient as a QQ(params)-vector space, from the staircase
// of y-leading monomials of the product-order basis (a Groebner basis of the
// extended ideal over QQ(params)[y]); nullopt when infinite.
std::optional<long> vecdim(const Ideal& base,
                           const std::vector<char>& ymask) {
    const auto& G = base.groebner(TermOrder::elim(ymask));
    if (G.empty()) return std::nullopt;
    TermOrder ord = TermOrder::elim(ymask);
    std::vector<int> yv;
    for (size_t i = 0; i < ymask.size(); ++i)
        if (ymask[i]) yv.push_back(static_cast<int>(i));
    std::vector<Monomial> leads;
    for (const Polynomial& g : G) {
        const Monomial* lm = nullptr;
        for (const Term& t : g.terms())
            if (!lm || ord.cmp(t.mon, *lm) > 0) lm = &t.mon;
        leads.push_back(project_mask(*lm, ymask));
    }
    std::vector<std::uint32_t> bounds;
    for (int v : yv) {
        bool found = false;
        std::uint32_t bound = 0;
        for (const Monomial& m : leads) {
            if (m.degree() != m[v]) continue;  // not a pure power of v
            if (!found || m[v] < bound) bound = m[v];
            found = true;
        }
        if (!found) return std::nullopt;
        bounds.push_back(bound);
    }
    // Count monomials in the box below the staircase.
    long count = 0;
    std::vector<std::uint32_t> idx(yv.size(), 0);
    for (;;) {
        bool divisible = false;
        for (const Monomial& m : leads) {
            bool all = true;
            for (size_t i = 0; i < yv.size() && all; ++i)
                if (idx[i] < m[yv[i]]) all = false;
            if (all) {
                divisible = true;
                break;
            }
        }
        if (!divisible) ++count;
        size_t pos = 0;
        while (pos < idx.size()) {
            if (++idx[pos] < bounds[pos]) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) break;
    }
    return count;
}

// Generator of the contraction of I * QQ(params)[v] (the minimal polynomial
// of v over QQ(params) modulo I); nullopt when v is free.
std::optional<Polynomial> minpoly_of(const Ideal& I, int v,
                                     const std::vector<char>& param_mask) {
    const RingPtr& ring = I.ring();
    std::vector<std::string> drop;
    for (int i = 0; i < ring->arity(); ++i)
        if (i != v && !param_mask[i]) drop.push_back(ring->var(i));
    Ideal E = drop.empty() ? I : eliminate(I, drop);
    Polynomial g(ring);
    for (const Polynomial& f : E.gens()) {
        Polynomial fm = f.map_to(ring);
        if (!fm.uses_var(v)) continue;
        g = g.is_zero() ? std::move(fm) : poly_gcd(g, fm);
    }
    if (g.is_zero() || !g.uses_var(v)) return std::nullopt;
    Polynomial cont = content_in(g, v);
    if (!cont.is_constant()) g = poly_divide_exact(g, cont);
    return g.primitive();
}

std::vector<std::vector<int>> coeff_stream(size_t k) {
    static const int picks[8] = {1, -1, 2, -2, 3, 5, -3, 7};
    std::vector<std::vector<int>> out;
    for (int trial = 0; trial < 24; ++trial) {
        std::vector<int> cs(k);
        for (size_t i = 0; i < k; ++i) {
            int ii = static_cast<int>(i);
            cs[i] = picks[(trial * (ii + 3) + ii * ii + trial) % 8];
        }
        cs[0] = 1;
        out.push_back(std::move(cs));
    }
    return out;
}

std::vector<Ideal> min_primes_impl(const RingPtr& ring,
                                   std::vector<Polynomial> gens,
                                   const std::vector<Ideal>& known);

// Minimal primes of a GTZ-certifiable ideal over the independent set, plus
// the lead-coefficient multiplier h (the caller recurses on gens + h).
std::pair<std::vector<Ideal>, std::optional<Polynomial>> zerodim_primes(
    const RingPtr& ring, const std::vector<Polynomial>& cur,
    const std::vector<int>& indep) {
    int arity = ring->arity();
    std::vector<char> pmask(arity, 0), ymask(arity, 1);
    for (int v : indep) {
        pmask[v] = 1;
        ymask[v] = 0;
    }
    std::vector<int> yvars;
    for (int v = 0; v < arity; ++v)
        if (ymask[v]) yvars.push_back(v);

    Ideal J = Ideal::from_groebner(ring, cur, TermOrder::grevlex());
    std::optional<Polynomial> h = gtz_h(J, ymask);
    Ideal base = h ? saturate(J, *h) : canonical(J);
    if (base.is_unit()) return {{}, h};

    std::map<int, Polynomial> minpolys;
    for (int v : yvars) {
        std::optional<Polynomial> m = minpoly_of(base, v, pmask);
        if (!m) continue;
        minpolys.emplace(v, *m);
        std::vector<FactorUnit> units = squarefree_and_factor(*m);
        std::vector<FactorUnit> vfacs;
        for (FactorUnit& u : units)
            if (u.factor.uses_var(v)) vfacs.push_back(std::move(u));
        if (vfacs.size() > 1) {
            std::vector<Ideal> out;
            for (const FactorUnit& u : vfacs) {
                std::vector<Polynomial> sub = base.gens();
                sub.push_back(u.factor);
                for (Ideal& p : min_primes_impl(ring, std::move(sub), {}))
                    out.push_back(std::move(p));
            }
            return {out, h};
        }
        if (vfacs.size() == 1 && vfacs[0].multiplicity > 1) {
            std::vector<Polynomial> sub = base.gens();
            sub.push_back(vfacs[0].factor);
            return {min_primes_impl(ring, std::move(sub), {}), h};
        }
    }

    std::optional<long> vd = vecdim(base, ymask);
    for (int v : yvars) {
        auto it = minpolys.find(v);
        if (it != minpolys.end() && vd &&
            static_cast<long>(it->second.degree_in(v)) == *vd)
            return {{canonical(base)}, h};
    }

    // Generic coordinates until the quotient is certified a field.
    for (const std::vector<int>& cs : coeff_stream(yvars.size())) {
        RingPtr ext = ring->extended({kGenVar}, "@gen");
        int tv = ext->index_of(kGenVar);
        Polynomial combo(ext);
        for (size_t i = 0; i < yvars.size(); ++i)
            combo = combo + Polynomial::variable(ext, yvars[i])
                                .mul_scalar(rat_of(cs[i]));
        std::vector<Polynomial> eg;
        for (const Polynomial& g : base.gens()) eg.push_back(g.map_to(ext));
        eg.push_back(Polynomial::variable(ext, tv) - combo);
        std::vector<char> pmask_ext(ext->arity(), 0);
        for (int v : indep) pmask_ext[v] = 1;
        std::optional<Polynomial> m =
            minpoly_of(Ideal(ext, std::move(eg)), tv, pmask_ext);
        if (!m) continue;
        std::vector<FactorUnit> units = squarefree_and_factor(*m);
        std::vector<Polynomial> tfacs;
        for (FactorUnit& u : units)
            if (u.factor.uses_var(tv)) tfacs.push_back(std::move(u.factor));
        if (tfacs.size() > 1) {
            std::vector<Ideal> out;
            for (const Polynomial& b : tfacs) {
                Polynomial g2 = b.substitute(tv, combo).map_to(ring);
                std::vector<Polynomial> sub = base.gens();
                sub.push_back(std::move(g2));
                for (Ideal& p : min_primes_impl(ring, std::move(sub), {}))
                    out.push_back(std::move(p));
            }
            return {out, h};
        }
        if (vd && static_cast<long>(m->degree_in(tv)) == *vd)
            return {{canonical(base)}, h};
    }
    throw structural_error("prime certification failed");
}

// Deduplicates and removes non-minimal primes.
std::vector<Ideal> minimize(std::vector<Ideal> primes) {
    std::vector<Ideal> canon;
    std::set<std::string> seen;
    for (Ideal& p : primes) {
        Ideal c = canonical(p);
        if (seen.insert(ideal_key(c)).second) canon.push_back(std::move(c));
    }
    std::vector<Ideal> out;
    for (size_t i = 0; i < canon.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < canon.size() && !redundant; ++j) {
            if (i == j) continue;
            if (ideal_contains(canon[i], canon[j]) &&
                (!ideal_contains(canon[j], canon[i]) || j < i))
                redundant = true;
        }
        if (!redundant) out.push_back(canon[i]);
    }
    return out;
}

// True when some nonzero already-found prime reduces to zero against the
// given reducers: that branch only carries primes over the found one.  Sound
// because reduction to zero certifies membership (the converse may fail for
// a non-basis, making this a partial but safe prune).
bool pruned_by_found(const std::vector<Polynomial>& reducers,
                     const std::vector<Ideal>& found) {
    for (const Ideal& P : found) {
        if (P.gens().empty()) continue;
        bool all_zero = true;
        for (const Polynomial& p : P.gens()) {
            if (!normal_form(p, reducers, TermOrder::grevlex()).is_zero()) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) return true;
    }
    return false;
}

std::vector<Ideal> min_primes_impl(const RingPtr& ring,
                                   std::vector<Polynomial> gens,
                                   const std::vector<Ideal>& known) {
    Engine::get().check_deadline();
    gens = drop_zero(std::move(gens));
    if (gens.empty()) return {zero_ideal(ring)};
    if (any_constant(gens)) return {};

    LinearReduction lr = linear_reduce(ring, gens);
    if (!lr.subs.empty()) {
        std::vector<Ideal> inner = min_primes_impl(ring, lr.reduced, {});
        std::vector<Polynomial> lin = linear_lift_gens(ring, lr);
        std::vector<Ideal> lifted;
        for (const Ideal& p : inner) lifted.push_back(lift_linear(p, lin));
        return minimize(std::move(lifted));
    }

    std::vector<Ideal> found;
    for (const Ideal& p : known) found.push_back(canonical(p));
    std::set<std::string> visited;
    std::vector<std::vector<Polynomial>> work;
    work.push_back(std::move(gens));
    while (!work.empty()) {
        Engine::get().check_deadline();
        std::vector<Polynomial> cur = drop_zero(std::move(work.back()));
        work.pop_back();
        if (cur.empty()) {
            found.push_back(zero_ideal(ring));
            continue;
        }
        if (any_constant(cur)) continue;
        for (Polynomial& g : cur) g = squarefree_part(g);
        // Identical branch ideals recur across splits; processing one copy
        // finds the same primes.
        if (!visited.insert(gens_key(cur)).second) continue;
        if (pruned_by_found(cur, found)) continue;

        std::optional<Split> split = factor_split(cur);
        if (!split) {
            Ideal Icur(ring, cur);
            const auto& G = Icur.groebner();
            if (Icur.is_unit()) continue;
            cur = G;
            if (pruned_by_found(cur, found)) continue;
            split = factor_split(cur);
        }
        if (split) {
            std::vector<Polynomial> rest;
            for (size_t i = 0; i < cur.size(); ++i)
                if (i != split->index) rest.push_back(cur[i]);
            for (const Polynomial& b : split->bases) {
                std::vector<Polynomial> next = rest;
                next.push_back(b);
                work.push_back(std::move(next));
            }
            continue;
        }

        Ideal Icur = Ideal::from_groebner(ring, cur, TermOrder::grevlex());
        std::optional<std::vector<int>> indep = independent_set(Icur);
        if (!indep) continue;
        if (static_cast<int>(indep->size()) == ring->arity()) {
            found.push_back(zero_ideal(ring));
            continue;
        }
        auto [primes, h] = zerodim_primes(ring, cur, *indep);
        for (Ideal& p : primes) found.push_back(std::move(p));
        if (h && !h->is_constant()) {
            std::vector<Polynomial> next = cur;
            next.push_back(squarefree_part(*h));
            work.push_back(std::move(next));
        }
    }
    return minimize(std::move(found));
}

// ------------------------------------------------ primary decomposition

// Smallest m with f^m * sat inside J; then J : f^m = J : f^inf, which makes
// the splitting J = (J : f^inf) meet (J + <f^m>) exact.
int sat_exponent(const Ideal& J, const Polynomial& f, const Ideal& sat) {
    const auto& G = J.groebner();
    Polynomial fp = Polynomial::constant(J.ring(), Rational(1));
    for (int m = 1; m < 60; ++m) {
        fp = fp * f;
        bool ok = true;
        for (const Polynomial& q : sat.gens()) {
            if (!normal_form(fp * q, G, TermOrder::grevlex()).is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) return m;
    }
    throw structural_error("saturation exponent not found");
}

// Small element inside the second minimal prime but not the first.
Polynomial pick_splitter(const std::vector<Ideal>& ps) {
    const auto& G0 = ps[0].groebner();
    const Polynomial* best = nullptr;
    for (const Polynomial& g : ps[1].gens()) {
        if (normal_form(g, G0, TermOrder::grevlex()).is_zero()) continue;
        if (!best) {
            best = &g;
            continue;
        }
        auto key = [](const Polynomial& p) {
            return std::make_tuple(p.degree(), p.terms().size(),
                                   to_string(p));
        };
        if (key(g) < key(*best)) best = &g;
    }
    if (!best) throw structural_error("no splitting element found");
    return *best;
}

std::vector<PrimaryComponent> pd_main(const RingPtr& ring,
                                      const std::vector<Polynomial>& in) {
    Ideal I0 = canonical(Ideal(ring, in));
    if (I0.gens().empty())
        return {{zero_ideal(ring), zero_ideal(ring)}};
    if (I0.is_unit())
        throw structural_error("primary decomposition of the unit ideal");

    struct WorkItem {
        std::vector<Polynomial> gens;
        std::vector<Ideal> seeds;
    };
    std::vector<WorkItem> work;
    work.push_back({I0.gens(), {}});
    std::vector<PrimaryComponent> comps;
    int guard = 0;
    while (!work.empty()) {
        Engine::get().check_deadline();
        if (++guard >= 400)
            throw structural_error("primary decomposition did not stabilize");
        WorkItem item = std::move(work.back());
        work.pop_back();
        Ideal J = canonical(Ideal(ring, std::move(item.gens)));
        if (J.is_unit()) continue;
        std::vector<Ideal> ps =
            min_primes_impl(ring, J.gens(), item.seeds);
        if (ps.empty()) continue;
        if (ps.size() > 1) {
            Polynomial g = pick_splitter(ps);
            Ideal Jt = saturate(J, g);
            int m = sat_exponent(J, g, Jt);
            // Minimal primes avoiding g stay minimal over J : g^inf, the
            // ones through g stay minimal over J + <g^m> (incomparability
            // forces any smaller prime to coincide).
            std::vector<Ideal> through, avoid;
            for (Ideal& P : ps) {
                if (ideal_membership(g, P))
                    through.push_back(std::move(P));
                else
                    avoid.push_back(std::move(P));
            }
            work.push_back({Jt.gens(), std::move(avoid)});
            std::vector<Polynomial> plus = J.gens();
            plus.push_back(g.pow(static_cast<unsigned>(m)));
            work.push_back({std::move(plus), std::move(through)});
            continue;
        }
        Ideal P = std::move(ps[0]);
        std::optional<std::vector<int>> u = independent_set(P);
        std::optional<Polynomial> h;
        if (u && !u->empty()) {
            std::vector<char> ymask(ring->arity(), 1);
            for (int v : *u) ymask[v] = 0;
            h = gtz_h(J, ymask);
        }
        Ideal Q = J;
        if (h) {
            Q = saturate(J, *h);
            if (!ideal_eq(Q, J)) {
                int k = sat_exponent(J, *h, Q);
                std::vector<Polynomial> plus = J.gens();
                plus.push_back(h->pow(static_cast<unsigned>(k)));
                work.push_back({std::move(plus), {}});
            }
        }
        comps.push_back({canonical(Q), canonical(P)});
    }

    // Merge components sharing a radical.
    std::vector<PrimaryComponent> merged;
    for (PrimaryComponent& c : comps) {
        bool hit = false;
        for (PrimaryComponent& m : merged) {
            if (ideal_eq(c.associated_prime, m.associated_prime)) {
                m.component =
                    canonical(intersect(c.component, m.component));
                hit = true;
                break;
            }
        }
        if (!hit) merged.push_back(std::move(c));
    }

    // A component Q with prime P is redundant exactly when the intersection
    // of the components with primes strictly inside P lies in Q.
    std::vector<PrimaryComponent>& keep = merged;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < keep.size(); ++i) {
            std::vector<Ideal> lower;
            {
                const auto& GP = keep[i].associated_prime.groebner();
                for (size_t j = 0; j < keep.size(); ++j) {
                    if (j == i) continue;
                    bool inside = true;
                    for (const Polynomial& g :
                         keep[j].associated_prime.gens()) {
                        if (!normal_form(g, GP, TermOrder::grevlex())
                                 .is_zero()) {
                            inside = false;
                            break;
                        }
                    }
                    if (inside) lower.push_back(keep[j].component);
                }
            }
            if (lower.empty()) continue;
            Ideal T = intersect_many(ring, lower);
            if (ideal_contains(keep[i].component, T)) {
                keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return keep;
}

}  // namespace

std::vector<Ideal> minimal_primes(const Ideal& I) {
    std::vector<Ideal> out = min_primes_impl(I.ring(), I.gens(), {});
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        return Ideal::cmp(a, b) < 0;
    });
    return out;
}

Decomposition primary_decomposition(const Ideal& I) {
    const RingPtr& ring = I.ring();
    if (I.is_unit())
        throw structural_error("primary decomposition of the unit ideal");
    std::vector<Polynomial> gens = drop_zero(I.gens());
    Decomposition D;
    D.input = I;
    if (gens.empty()) {
        D.components.push_back({zero_ideal(ring), zero_ideal(ring)});
        return D;
    }
    LinearReduction lr = linear_reduce(ring, gens);
    if (!lr.subs.empty()) {
        std::vector<PrimaryComponent> inner;
        if (lr.reduced.empty()) {
            inner.push_back({zero_ideal(ring), zero_ideal(ring)});
        } else {
            inner = pd_main(ring, lr.reduced);
        }
        std::vector<Polynomial> lin = linear_lift_gens(ring, lr);
        for (PrimaryComponent& c : inner)
            D.components.push_back({lift_linear(c.component, lin),
                                    lift_linear(c.associated_prime, lin)});
    } else {
        D.components = pd_main(ring, gens);
    }
    std::sort(D.components.begin(), D.components.end(),
              [](const PrimaryComponent& a, const PrimaryComponent& b) {
                  return Ideal::cmp(a.associated_prime, b.associated_prime) <
                         0;
              });
    // Certification: the components intersect exactly to the input.
    std::vector<Ideal> parts;
    for (const PrimaryComponent& c : D.components)
        parts.push_back(c.component);
    if (!ideal_eq(intersect_many(ring, parts), I))
        throw structural_error("primary decomposition failed certification");
    Engine::get().count_decomposition();
    return D;
}

std::vector<Ideal> associated_primes(const Ideal& I) {
    Decomposition D = primary_decomposition(I);
    std::vector<Ideal> out;
    for (PrimaryComponent& c : D.components)
        out.push_back(std::move(c.associated_prime));
    return out;
}

Ideal radical(const Ideal& I) {
    std::vector<Ideal> ps = minimal_primes(I);
    if (ps.empty()) return unit_ideal(I.ring());
    return canonical(intersect_many(I.ring(), ps));
}

Ideal pure_d(const Ideal& I, int d, const ProjectiveContext& ctx) {
    if (I.is_unit()) return unit_ideal(I.ring());
    std::vector<Ideal> keep;
    for (Ideal& P : minimal_primes(I))
        if (dimension(P, ctx) == d) keep.push_back(std::move(P));
    if (keep.empty()) return unit_ideal(I.ring());
    return canonical(intersect_many(I.ring(), keep));
}

Decomposition discard_irrelevant(const Decomposition& D,
                                 const ProjectiveContext& ctx) {
    Decomposition out;
    out.input = D.input;
    for (const PrimaryComponent& c : D.components)
        if (!is_empty_projective(c.associated_prime, ctx))
            out.components.push_back(c);
    return out;
}

Ideal intersect_many(const RingPtr& ring, const std::vector<Ideal>& ideals) {
    if (ideals.empty()) return unit_ideal(ring);
    Ideal acc = ideals.front();
    for (size_t i = 1; i < ideals.size(); ++i)
        acc = intersect(acc, ideals[i]);
    return acc;
}

}  // namespace wstrat
