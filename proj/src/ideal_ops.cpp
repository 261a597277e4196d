#include "wstrat/ideal_ops.hpp"

#include <algorithm>

#include "wstrat/engine.hpp"

namespace wstrat {

namespace {

const char* kAux = "@t";

std::vector<Polynomial> map_gens(const std::vector<Polynomial>& gens,
                                 const RingPtr& target) {
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (const Polynomial& g : gens) out.push_back(g.map_to(target));
    return out;
}

// h / g for h in the principal ideal <g>.
Polynomial divide_exact(const Polynomial& h, const Polynomial& g) {
    Polynomial r = h;
    Polynomial q(h.ring());
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        const Term& lg = g.leading();
        if (!lr.mon.divisible_by(lg.mon))
            throw structural_error(
                "exact division failed: dividend outside the principal ideal");
        Polynomial t = Polynomial::from_terms(
            h.ring(), {{lr.mon.div(lg.mon), lr.coeff / lg.coeff}});
        q = q + t;
        r = r - t * g;
    }
    return q;
}

}  // namespace

Ideal Ideal::from_groebner(RingPtr ring, std::vector<Polynomial> basis,
                           const TermOrder& ord) {
    Ideal I(std::move(ring), basis);
    std::lock_guard<std::mutex> lock(I.cache_->mutex);
    I.cache_->by_order.emplace(ord.key(), std::move(basis));
    return I;
}

bool ideal_membership(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) return true;
    if (!same_ring(f.ring(), I.ring()))
        throw structural_error("membership test across different rings");
    return normal_form(f, I.groebner(), TermOrder::grevlex()).is_zero();
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) return true;
    if (!same_ring(f.ring(), I.ring()))
        throw structural_error("membership test across different rings");
    RingPtr ext = I.ring()->extended({kAux}, kAux);
    std::vector<Polynomial> gens = map_gens(I.gens(), ext);
    Polynomial t = Polynomial::variable(ext, ext->index_of(kAux));
    gens.push_back(t * f.map_to(ext) -
                   Polynomial::constant(ext, Rational(1)));
    return Ideal(ext, std::move(gens)).is_unit();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw structural_error("sum of ideals in different rings");
    std::vector<Polynomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return Ideal(I.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop_vars) {
    const RingPtr& ring = I.ring();
    std::vector<char> mask(static_cast<size_t>(ring->arity()), 0);
    for (const std::string& name : drop_vars) {
        int idx = ring->index_of(name);
        if (idx < 0)
            throw structural_error("eliminating unknown variable " + name);
        mask[static_cast<size_t>(idx)] = 1;
    }
    RingPtr target = ring->without(mask);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : I.groebner(TermOrder::elim(mask))) {
        bool touched = false;
        for (int v = 0; v < ring->arity() && !touched; ++v)
            if (mask[static_cast<size_t>(v)] && g.uses_var(v)) touched = true;
        if (!touched) kept.push_back(g.map_to(target));
    }
    return Ideal(target, std::move(kept));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw structural_error("intersection of ideals in different rings");
    // The zero ideal absorbs intersections.
    if (I.is_zero()) return I;
    if (J.is_zero()) return J;
    RingPtr ext = I.ring()->extended({kAux}, kAux);
    Polynomial t = Polynomial::variable(ext, ext->index_of(kAux));
    Polynomial omt = Polynomial::constant(ext, Rational(1)) - t;
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size() + J.gens().size());
    for (const Polynomial& g : I.gens()) gens.push_back(t * g.map_to(ext));
    for (const Polynomial& g : J.gens()) gens.push_back(omt * g.map_to(ext));
    Ideal cut = eliminate(Ideal(ext, std::move(gens)), {kAux});
    return Ideal(I.ring(), map_gens(cut.gens(), I.ring()));
}

Ideal quotient(const Ideal& I, const Polynomial& g) {
    if (g.is_zero()) throw structural_error("quotient by the zero polynomial");
    if (!same_ring(I.ring(), g.ring()))
        throw structural_error("quotient across different rings");
    if (g.is_constant() || I.is_zero()) return I;
    Ideal cut = intersect(I, Ideal(I.ring(), {g}));
    std::vector<Polynomial> quo;
    quo.reserve(cut.gens().size());
    for (const Polynomial& h : cut.gens())
        quo.push_back(divide_exact(h, g).primitive());
    return Ideal(I.ring(), std::move(quo));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
    std::vector<const Polynomial*> divisors;
    for (const Polynomial& g : J.gens())
        if (!g.is_zero()) divisors.push_back(&g);
    if (divisors.empty())
        throw structural_error("quotient by the zero ideal");
    Ideal acc = quotient(I, *divisors[0]);
    for (size_t k = 1; k < divisors.size(); ++k)
        acc = intersect(acc, quotient(I, *divisors[k]));
    return acc;
}

namespace {

template <typename Quot>
Ideal saturate_loop(Ideal I, const Quot& quot) {
    for (;;) {
        Engine::get().check_deadline();
        Ideal next = quot(I);
        if (ideal_contains(I, next)) return I;
        I = std::move(next);
    }
}

}  // namespace

Ideal saturate(const Ideal& I, const Polynomial& g) {
    return saturate_loop(I, [&](const Ideal& J) { return quotient(J, g); });
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    return saturate_loop(I, [&](const Ideal& K) { return quotient(K, J); });
}

namespace {

// Largest subset of variables containing no leading-term support; the
// complement is a minimal cover of the supports.  Returns (size, mask) with
// size -1 when even the empty set fails (unit ideal).
std::pair<int, std::uint64_t> best_independent_mask(
    const std::vector<Polynomial>& basis, int arity) {
    std::vector<std::uint64_t> supports;
    for (const Polynomial& g : basis) {
        std::uint64_t s = 0;
        const Monomial& m = g.leading().mon;
        for (int v = 0; v < arity; ++v)
            if (m[v]) s |= std::uint64_t(1) << v;
        supports.push_back(s);
    }
    if (arity > 22)
        throw structural_error("dimension query beyond supported arity");
    int best = -1;
    std::uint64_t best_mask = 0;
    const std::uint64_t total = std::uint64_t(1) << arity;
    for (std::uint64_t set = 0; set < total; ++set) {
        int size = __builtin_popcountll(set);
        if (size <= best) continue;
        bool independent = true;
        for (std::uint64_t s : supports) {
            if ((s & ~set) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) {
            best = size;
            best_mask = set;
        }
    }
    return {best, best_mask};
}

}  // namespace

int affine_dimension(const Ideal& I) {
    const auto& gb = I.groebner(TermOrder::grevlex());
    if (gb.size() == 1 && gb[0].is_unit_constant()) return -1;
    return best_independent_mask(gb, I.ring()->arity()).first;
}

std::optional<std::vector<int>> independent_set(const Ideal& I) {
    const auto& gb = I.groebner(TermOrder::grevlex());
    int arity = I.ring()->arity();
    auto [size, mask] = best_independent_mask(gb, arity);
    if (size < 0) return std::nullopt;
    std::vector<int> out;
    for (int v = 0; v < arity; ++v)
        if (mask & (std::uint64_t(1) << v)) out.push_back(v);
    return out;
}

bool is_empty_projective(const Ideal& I, const ProjectiveContext& ctx) {
    Ideal J = I;
    for (const std::string& name : ctx.irrelevant_blocks) {
        const Block* b = I.ring()->block(name);
        if (!b) throw structural_error("unknown irrelevant block " + name);
        std::vector<Polynomial> vars;
        for (int v = b->first; v < b->first + b->count; ++v)
            vars.push_back(Polynomial::variable(I.ring(), v));
        J = saturate(J, Ideal(I.ring(), std::move(vars)));
    }
    return J.is_unit();
}

int dimension(const Ideal& I, const ProjectiveContext& ctx) {
    const RingPtr& ring = I.ring();
    for (const std::string& name : ctx.irrelevant_blocks) {
        const Block* b = ring->block(name);
        if (!b) throw structural_error("unknown irrelevant block " + name);
        for (const Polynomial& g : I.gens()) {
            bool first = true;
            std::uint64_t deg = 0;
            for (const Term& t : g.terms()) {
                std::uint64_t d = 0;
                for (int v = b->first; v < b->first + b->count; ++v)
                    d += t.mon[v];
                if (first) {
                    deg = d;
                    first = false;
                } else if (d != deg) {
                    throw structural_error(
                        "dimension of an ideal that is not homogeneous in "
                        "block " +
                        name);
                }
            }
        }
    }
    int nblocks = static_cast<int>(ctx.irrelevant_blocks.size());
    int cone = affine_dimension(I);
    if (nblocks == 0) return cone;
    if (cone < nblocks) return -1;  // the cone only meets irrelevant loci
    if (nblocks > 1 && is_empty_projective(I, ctx)) return -1;
    return cone - nblocks;
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
    for (const Polynomial& g : J.gens())
        if (!ideal_membership(g, I)) return false;
    return true;
}

bool ideal_eq(const Ideal& I, const Ideal& J) {
    return ideal_contains(I, J) && ideal_contains(J, I);
}

bool variety_contains(const Ideal& J, const Ideal& I) {
    for (const Polynomial& g : I.gens())
        if (!radical_membership(g, J)) return false;
    return true;
}

bool same_variety(const Ideal& I, const Ideal& J) {
    return variety_contains(I, J) && variety_contains(J, I);
}

Ideal canonical(const Ideal& I) {
    return Ideal::from_groebner(I.ring(), I.groebner(TermOrder::grevlex()),
                                TermOrder::grevlex());
}

}  // namespace wstrat
