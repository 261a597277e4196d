#include <algorithm>

#include "wstrat/engine.hpp"
#include "wstrat/ideal.hpp"
#include "wstrat/ideal_ops.hpp"

// Buchberger engine with Gebauer-Moeller pair pruning and sugar selection.
// Internally polynomials carry integer coefficients with content 1; rational
// inputs are cleared on entry and results rescaled on exit.

namespace wstrat {

namespace {

struct ETerm {
    Monomial mon;
    Integer c;
};

struct EPoly {
    std::vector<ETerm> t;
    std::uint64_t sugar = 0;

    bool empty() const { return t.empty(); }
    const Monomial& lead_mon() const { return t.front().mon; }
    const Integer& lead_c() const { return t.front().c; }
    bool is_constant() const {
        return t.size() == 1 && t.front().mon.is_one();
    }
};

void make_primitive(EPoly& p) {
    if (p.t.empty()) return;
    Integer g(0);
    for (const ETerm& t : p.t) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    if (p.t.front().c < 0) g = -g;
    if (g == 1) return;
    for (ETerm& t : p.t)
        mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

EPoly to_epoly(const Polynomial& f, const TermOrder& ord) {
    EPoly p;
    if (f.is_zero()) return p;
    Integer den(1);
    for (const Term& t : f.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    p.t.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        Rational scaled = t.coeff * Rational(den);
        p.t.push_back({t.mon, Integer(scaled.get_num())});
        p.sugar = std::max(p.sugar, t.mon.degree());
    }
    std::sort(p.t.begin(), p.t.end(), [&](const ETerm& a, const ETerm& b) {
        return ord.cmp(a.mon, b.mon) > 0;
    });
    make_primitive(p);
    return p;
}

Polynomial from_epoly(const RingPtr& ring, const EPoly& p,
                      const Integer& scale) {
    std::vector<Term> ts;
    ts.reserve(p.t.size());
    for (const ETerm& t : p.t) {
        Rational q(t.c, scale);
        q.canonicalize();
        ts.push_back({t.mon, std::move(q)});
    }
    return Polynomial::from_terms(ring, std::move(ts));
}

// a*(mf . f) - b*(mg . g), merged under ord.  Either shift may be the unit
// monomial.
EPoly combine(const EPoly& f, const Monomial& mf, const Integer& a,
              const EPoly& g, const Monomial& mg, const Integer& b,
              const TermOrder& ord) {
    EPoly r;
    r.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
    r.t.reserve(f.t.size() + g.t.size());
    size_t i = 0, j = 0;
    Monomial fm, gm;
    if (i < f.t.size()) fm = f.t[i].mon.mul(mf);
    if (j < g.t.size()) gm = g.t[j].mon.mul(mg);
    while (i < f.t.size() && j < g.t.size()) {
        int c = ord.cmp(fm, gm);
        if (c > 0) {
            r.t.push_back({std::move(fm), a * f.t[i].c});
            if (++i < f.t.size()) fm = f.t[i].mon.mul(mf);
        } else if (c < 0) {
            r.t.push_back({std::move(gm), -Integer(b * g.t[j].c)});
            if (++j < g.t.size()) gm = g.t[j].mon.mul(mg);
        } else {
            Integer s = a * f.t[i].c - b * g.t[j].c;
            if (s != 0) r.t.push_back({std::move(fm), std::move(s)});
            if (++i < f.t.size()) fm = f.t[i].mon.mul(mf);
            if (++j < g.t.size()) gm = g.t[j].mon.mul(mg);
        }
    }
    for (; i < f.t.size(); ++i)
        r.t.push_back({f.t[i].mon.mul(mf), a * f.t[i].c});
    for (; j < g.t.size(); ++j)
        r.t.push_back({g.t[j].mon.mul(mg), -Integer(b * g.t[j].c)});
    return r;
}

// Fully reduces f against the non-redundant members of basis.  On return no
// term of the result is divisible by any active leading term, and
// scale * f == result modulo the ideal of the basis.
EPoly reduce_full(EPoly f, const std::vector<EPoly>& basis,
                  const std::vector<char>& redundant, const TermOrder& ord,
                  Integer* scale_out = nullptr) {
    Engine& eng = Engine::get();
    Integer scale(1);
    Monomial unit(f.t.empty() ? 0 : f.t.front().mon.arity());
    std::vector<ETerm> done;
    size_t head = 0;
    while (head < f.t.size()) {
        eng.check_deadline();
        const Monomial& lm = f.t[head].mon;
        const EPoly* red = nullptr;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (redundant[k] || basis[k].empty()) continue;
            if (lm.divisible_by(basis[k].lead_mon())) {
                red = &basis[k];
                break;
            }
        }
        if (!red) {
            done.push_back(std::move(f.t[head]));
            ++head;
            continue;
        }
        // a*f - b*(m.red) cancels the leading term: a*lc_f - b*lc_red = 0.
        Integer d;
        mpz_gcd(d.get_mpz_t(), f.t[head].c.get_mpz_t(),
                red->lead_c().get_mpz_t());
        Integer a = red->lead_c() / d;
        Integer b = f.t[head].c / d;
        Monomial m = lm.div(red->lead_mon());
        if (a < 0) {
            a = -a;
            b = -b;
        }
        if (a != 1) {
            for (ETerm& t : done) t.c *= a;
            scale *= a;
        }
        EPoly rest;
        rest.t.assign(f.t.begin() + static_cast<std::ptrdiff_t>(head),
                      f.t.end());
        rest.sugar = f.sugar;
        EPoly next = combine(rest, unit, a, *red, m, b, ord);
        next.sugar = std::max(f.sugar, red->sugar + m.degree());
        f = std::move(next);
        head = 0;
    }
    EPoly r;
    r.t = std::move(done);
    r.sugar = f.sugar;
    if (scale_out) {
        *scale_out = scale;
    } else {
        make_primitive(r);
    }
    return r;
}

struct Pair {
    int i, j;
    Monomial lcm;
    std::uint64_t sugar;
};

// Deterministic priority: sugar, then lcm degree, then lcm under ord, then
// indices.
bool pair_before(const Pair& a, const Pair& b, const TermOrder& ord) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm.degree() != b.lcm.degree())
        return a.lcm.degree() < b.lcm.degree();
    int c = ord.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

std::uint64_t pair_sugar(const std::vector<EPoly>& basis, int i, int j,
                         const Monomial& lcm) {
    const EPoly& f = basis[static_cast<size_t>(i)];
    const EPoly& g = basis[static_cast<size_t>(j)];
    return std::max(f.sugar + lcm.div(f.lead_mon()).degree(),
                    g.sugar + lcm.div(g.lead_mon()).degree());
}

// Gebauer-Moeller update after appending basis[h].
void gm_update(std::vector<Pair>& pairs, const std::vector<EPoly>& basis,
               std::vector<char>& redundant, int h) {
    const Monomial& lth = basis[static_cast<size_t>(h)].lead_mon();

    struct Cand {
        int g;
        Monomial lcm;
        bool coprime;
        bool alive = true;
    };
    std::vector<Cand> cands;
    for (int g = 0; g < h; ++g) {
        if (redundant[static_cast<size_t>(g)]) continue;
        const Monomial& ltg = basis[static_cast<size_t>(g)].lead_mon();
        cands.push_back({g, lth.lcm(ltg), lth.coprime(ltg), true});
    }
    // Sequential sweep: a candidate is pruned when some candidate still in
    // play (unprocessed, or processed and kept) has an lcm dividing this
    // one.  Two equal lcms: the later candidate survives.
    for (size_t a = 0; a < cands.size(); ++a) {
        for (size_t b = 0; b < cands.size(); ++b) {
            if (a == b) continue;
            if (b < a && !cands[b].alive) continue;
            if (cands[a].lcm.divisible_by(cands[b].lcm)) {
                cands[a].alive = false;
                break;
            }
        }
    }
    // Old pairs whose lcm absorbs the new leading term are no longer needed
    // unless they share their lcm with one of the new pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (Pair& p : pairs) {
        const Monomial& l1 =
            basis[static_cast<size_t>(p.i)].lead_mon();
        const Monomial& l2 =
            basis[static_cast<size_t>(p.j)].lead_mon();
        if (p.lcm.divisible_by(lth) && lth.lcm(l1) != p.lcm &&
            lth.lcm(l2) != p.lcm) {
            continue;
        }
        kept.push_back(std::move(p));
    }
    pairs = std::move(kept);
    for (Cand& c : cands) {
        if (!c.alive || c.coprime) continue;
        std::uint64_t sug = pair_sugar(basis, c.g, h, c.lcm);
        pairs.push_back({c.g, h, std::move(c.lcm), sug});
    }
    for (int g = 0; g < h; ++g) {
        if (redundant[static_cast<size_t>(g)]) continue;
        if (basis[static_cast<size_t>(g)].lead_mon().divisible_by(lth))
            redundant[static_cast<size_t>(g)] = true;
    }
}

std::vector<Polynomial> engine_groebner(const RingPtr& ring,
                                        const std::vector<Polynomial>& gens,
                                        const TermOrder& ord) {
    Engine& eng = Engine::get();
    eng.count_gb_call();

    std::vector<EPoly> inputs;
    for (const Polynomial& g : gens) {
        EPoly p = to_epoly(g, ord);
        if (!p.empty()) inputs.push_back(std::move(p));
    }
    if (inputs.empty()) return {};
    // Deterministic insertion order: cheap polynomials first.
    std::sort(inputs.begin(), inputs.end(),
              [&](const EPoly& a, const EPoly& b) {
                  if (a.sugar != b.sugar) return a.sugar < b.sugar;
                  if (a.t.size() != b.t.size())
                      return a.t.size() < b.t.size();
                  int c = ord.cmp(a.lead_mon(), b.lead_mon());
                  if (c != 0) return c < 0;
                  for (size_t k = 0; k < a.t.size(); ++k) {
                      c = ord.cmp(a.t[k].mon, b.t[k].mon);
                      if (c != 0) return c < 0;
                      c = cmp(a.t[k].c, b.t[k].c);
                      if (c != 0) return c < 0;
                  }
                  return false;
              });

    std::vector<EPoly> basis;
    std::vector<char> redundant;
    std::vector<Pair> pairs;
    auto absorb = [&](EPoly p) -> bool {
        // Returns true when the ideal is the whole ring.
        p = reduce_full(std::move(p), basis, redundant, ord);
        if (p.empty()) return false;
        make_primitive(p);
        if (p.is_constant()) return true;
        basis.push_back(std::move(p));
        redundant.push_back(0);
        gm_update(pairs, basis, redundant,
                  static_cast<int>(basis.size()) - 1);
        eng.note_basis_size(basis.size());
        return false;
    };

    for (EPoly& p : inputs) {
        if (absorb(std::move(p))) {
            return {Polynomial::constant(ring, Rational(1))};
        }
    }

    while (!pairs.empty()) {
        eng.check_deadline();
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (pair_before(pairs[k], pairs[best], ord)) best = k;
        Pair p = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        const EPoly& f = basis[static_cast<size_t>(p.i)];
        const EPoly& g = basis[static_cast<size_t>(p.j)];
        Integer d;
        mpz_gcd(d.get_mpz_t(), f.lead_c().get_mpz_t(),
                g.lead_c().get_mpz_t());
        Integer a = g.lead_c() / d;
        Integer b = f.lead_c() / d;
        if (a < 0) {
            a = -a;
            b = -b;
        }
        EPoly s = combine(f, p.lcm.div(f.lead_mon()), a, g,
                          p.lcm.div(g.lead_mon()), b, ord);
        s.sugar = p.sugar;
        if (absorb(std::move(s))) {
            return {Polynomial::constant(ring, Rational(1))};
        }
    }

    // Minimal basis survives in the non-redundant entries; tail-reduce each
    // against the others to get the unique reduced basis.
    std::vector<EPoly> minimal;
    for (size_t k = 0; k < basis.size(); ++k)
        if (!redundant[k]) minimal.push_back(std::move(basis[k]));
    std::sort(minimal.begin(), minimal.end(),
              [&](const EPoly& a, const EPoly& b) {
                  return ord.cmp(a.lead_mon(), b.lead_mon()) < 0;
              });
    std::vector<char> none(minimal.size(), 0);
    for (size_t k = 0; k < minimal.size(); ++k) {
        EPoly self = std::move(minimal[k]);
        minimal[k] = EPoly();  // excluded from its own reduction
        EPoly r = reduce_full(std::move(self), minimal, none, ord);
        make_primitive(r);
        minimal[k] = std::move(r);
    }

    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (const EPoly& p : minimal)
        out.push_back(from_epoly(ring, p, Integer(1)));
    return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring_))
            throw structural_error("ideal generator from a different ring");
        gens_.push_back(std::move(g));
    }
}

const std::vector<Polynomial>& Ideal::groebner(const TermOrder& ord) const {
    if (!cache_) throw structural_error("uninitialized ideal");
    std::string key = ord.key();
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->by_order.find(key);
        if (it != cache_->by_order.end()) return it->second;
    }
    std::vector<Polynomial> basis = engine_groebner(ring_, gens_, ord);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [it, inserted] = cache_->by_order.emplace(key, std::move(basis));
    (void)inserted;  // losing the race is fine: bases are identical
    return it->second;
}

bool Ideal::is_unit() const {
    const auto& gb = groebner(TermOrder::grevlex());
    return gb.size() == 1 && gb[0].is_unit_constant();
}

int Ideal::cmp(const Ideal& a, const Ideal& b) {
    size_t n = std::min(a.gens_.size(), b.gens_.size());
    for (size_t k = 0; k < n; ++k) {
        int c = Polynomial::cmp(a.gens_[k], b.gens_[k]);
        if (c != 0) return c;
    }
    if (a.gens_.size() != b.gens_.size())
        return a.gens_.size() < b.gens_.size() ? -1 : 1;
    return 0;
}

ProjectiveContext ProjectiveContext::all_blocks(const RingPtr& ring) {
    ProjectiveContext ctx;
    for (const Block& b : ring->blocks()) ctx.irrelevant_blocks.push_back(b.name);
    return ctx;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& ord) {
    if (f.is_zero()) return f;
    std::vector<EPoly> basis;
    basis.reserve(G.size());
    for (const Polynomial& g : G) {
        EPoly p = to_epoly(g, ord);
        if (!p.empty()) basis.push_back(std::move(p));
    }
    std::vector<char> none(basis.size(), 0);
    // Track the denominator scaling so the remainder is exact over Q.
    Integer den(1);
    for (const Term& t : f.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    EPoly ef = to_epoly(f, ord);
    // to_epoly normalized content away; redo the scale bookkeeping directly.
    Integer content(0);
    {
        for (const Term& t : f.terms()) {
            Rational scaled = t.coeff * Rational(den);
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                    scaled.get_num_mpz_t());
        }
        if (!f.terms().empty() && f.terms()[0].coeff < 0) content = -content;
    }
    Integer scale(1);
    EPoly r = reduce_full(std::move(ef), basis, none, ord, &scale);
    // f = (content/den) * primitive(f); remainder of primitive is r/scale.
    Integer num = content;
    return from_epoly(f.ring(), r, Integer(scale * den))
        .mul_scalar(Rational(num));
}

}  // namespace wstrat
