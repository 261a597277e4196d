"""Exact ideal-theory helpers over sympy, used to generate frozen test fixtures.

Everything here is deliberately independent of the C++ library: saturations go
through the extra-variable trick instead of iterated quotients, associated
primes are certified by explicit intersection/containment arguments, and
sympy's Groebner engine does all the rewriting.  Results are memoized
aggressively because fixture generation revisits the same ideals many times.
"""

import itertools

import sympy as sp
from sympy import QQ, groebner
from sympy.polys.orderings import ProductOrder, grevlex


def elim_order(nelim):
    return ProductOrder(
        (grevlex, lambda m, k=nelim: m[:k]),
        (grevlex, lambda m, k=nelim: m[k:]),
    )


def _strs(gens):
    return tuple(sorted(sp.sstr(g) for g in gens))


def _vstrs(gens_vars):
    return tuple(str(v) for v in gens_vars)


_gb_cache = {}


def gb(gens, gens_vars, order="grevlex", domain=None):
    gens = [sp.expand(g) for g in gens if sp.expand(g) != 0]
    if not gens:
        return []
    key = None
    if isinstance(order, str) and domain is None:
        key = (_strs(gens), order, _vstrs(gens_vars))
        hit = _gb_cache.get(key)
        if hit is not None:
            return list(hit)
    kwargs = {"order": order}
    if domain is not None:
        kwargs["domain"] = domain
    G = groebner(gens, *gens_vars, **kwargs)
    out = [sp.expand(e) for e in G.exprs]
    if key is not None:
        _gb_cache[key] = list(out)
    return out


def is_unit_ideal(gens, gens_vars):
    G = gb(gens, gens_vars)
    return any(g.is_number and g != 0 for g in G)


def nf(f, basis, gens_vars, order="grevlex"):
    f = sp.expand(f)
    basis = [b for b in basis if sp.expand(b) != 0]
    if not basis:
        return f
    _, r = sp.reduced(f, basis, *gens_vars, order=order)
    return sp.expand(r)


def in_ideal(f, gens, gens_vars):
    return nf(f, gb(gens, gens_vars), gens_vars) == 0


def ideal_contains(big, small, gens_vars):
    """Every generator of small lies in big (small subset of big as ideals)."""
    G = gb(big, gens_vars)
    return all(nf(f, G, gens_vars) == 0 for f in small)


def ideal_eq(a, b, gens_vars):
    return ideal_contains(a, b, gens_vars) and ideal_contains(b, a, gens_vars)


_elim_cache = {}


def eliminate(gens, gens_vars, drop_vars):
    """Generators of the ideal intersected with the subring without drop_vars."""
    drop = [v for v in gens_vars if v in drop_vars]
    keep = [v for v in gens_vars if v not in drop_vars]
    if not drop:
        return list(gens), keep
    gens = [sp.expand(g) for g in gens if sp.expand(g) != 0]
    key = (_strs(gens), _vstrs(drop), _vstrs(keep))
    hit = _elim_cache.get(key)
    if hit is not None:
        return list(hit), keep
    ordered = drop + keep
    G = gb(gens, ordered, order=elim_order(len(drop)))
    kept = [g for g in G if not (set(g.free_symbols) & set(drop))]
    _elim_cache[key] = list(kept)
    return kept, keep


_int_cache = {}


def intersect(a, b, gens_vars):
    a = [g for g in (sp.expand(x) for x in a) if g != 0]
    b = [g for g in (sp.expand(x) for x in b) if g != 0]
    # an empty list is the zero ideal, which absorbs the intersection
    if not a or not b:
        return []
    ka, kb = _strs(a), _strs(b)
    key = (min(ka, kb), max(ka, kb), _vstrs(gens_vars))
    hit = _int_cache.get(key)
    if hit is not None:
        return list(hit)
    t = sp.Dummy("t")
    gens = [t * f for f in a] + [(1 - t) * f for f in b]
    out, _ = eliminate(gens, [t] + list(gens_vars), [t])
    _int_cache[key] = list(out)
    return out


def intersect_many(ideals, gens_vars):
    """Balanced pairwise intersections to keep the intermediates small."""
    items = [[sp.expand(g) for g in i] for i in ideals]
    if not items:
        return []
    while len(items) > 1:
        nxt = [intersect(a, b, gens_vars) for a, b in zip(items[::2], items[1::2])]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def quotient_elem(gens, f, gens_vars):
    """I : f for a single polynomial f."""
    f = sp.expand(f)
    inter = intersect(gens, [f], gens_vars)
    out = []
    for g in inter:
        q, r = sp.div(g, f, *gens_vars)
        assert sp.expand(r) == 0
        out.append(sp.expand(q))
    return gb(out, gens_vars)


_sat_cache = {}


def saturate_elem(gens, f, gens_vars):
    """I : f^inf via the extra-variable trick."""
    f = sp.expand(f)
    if f == 0:
        return gb(gens, gens_vars)
    key = (_strs(gens), sp.sstr(f), _vstrs(gens_vars))
    hit = _sat_cache.get(key)
    if hit is not None:
        return list(hit)
    w = sp.Dummy("w")
    ext = list(gens) + [1 - w * f]
    out, _ = eliminate(ext, [w] + list(gens_vars), [w])
    _sat_cache[key] = list(out)
    return out


def saturate_ideal(gens, by, gens_vars):
    """I : J^inf = intersection of the single-element saturations."""
    by = [g for g in (sp.expand(x) for x in by) if g != 0]
    parts = [saturate_elem(gens, f, gens_vars) for f in by]
    return intersect_many(parts, gens_vars) if parts else list(gens)


def radical_member(f, gens, gens_vars):
    f = sp.expand(f)
    if f == 0:
        return True
    w = sp.Dummy("w")
    return is_unit_ideal(list(gens) + [1 - w * f], [w] + list(gens_vars))


def variety_contained(inner, outer, gens_vars):
    """V(inner) subset of V(outer): every gen of outer vanishes on V(inner)."""
    return all(radical_member(f, inner, gens_vars) for f in outer)


def lead_monoms(gens, gens_vars, order="grevlex"):
    from sympy.polys.orderings import monomial_key

    key = monomial_key(order) if isinstance(order, str) else order
    out = []
    for g in gens:
        p = sp.Poly(g, *gens_vars)
        out.append(max(p.monoms(), key=key))
    return out


def max_indep_set(gens, gens_vars):
    """Largest set of variables independent modulo the lead terms of a GB."""
    G = gb(gens, gens_vars)
    if any(g.is_number and g != 0 for g in G):
        return None
    lms = lead_monoms(G, gens_vars)
    supports = [frozenset(i for i, e in enumerate(m) if e > 0) for m in lms]
    n = len(gens_vars)
    best = []

    def rec(i, cur):
        nonlocal best
        if len(cur) + (n - i) <= len(best):
            return
        if i == n:
            if len(cur) > len(best):
                best = list(cur)
            return
        trial = cur + [i]
        if not any(s <= set(trial) for s in supports):
            rec(i + 1, trial)
        rec(i + 1, cur)

    rec(0, [])
    return [gens_vars[i] for i in best]


def affine_dim(gens, gens_vars):
    """Krull dimension of the affine zero set; -1 when empty."""
    u = max_indep_set(gens, gens_vars)
    return -1 if u is None else len(u)


def proj_dim(gens, gens_vars, nblocks=1):
    d = affine_dim(gens, gens_vars)
    if d <= 0:
        return -1
    return d - nblocks


_fl_cache = {}


def _factor_list_cached(f, gens_vars):
    key = (sp.sstr(f), _vstrs(gens_vars))
    hit = _fl_cache.get(key)
    if hit is None:
        hit = sp.factor_list(f, *gens_vars)
        _fl_cache[key] = hit
    return hit


def sqfree(f, gens_vars):
    f = sp.expand(f)
    if f == 0 or f.is_number:
        return f
    _, facs = _factor_list_cached(f, gens_vars)
    out = sp.Integer(1)
    for base, _ in facs:
        out *= base
    return sp.expand(out)


def int_normalize(f, gens_vars, order="grevlex"):
    """Scale to integer coefficients, content one, positive lead coefficient."""
    f = sp.expand(f)
    if f == 0:
        return f
    p = sp.Poly(f, *gens_vars)
    dens = [sp.Rational(c).q for c in p.coeffs()]
    f = sp.expand(f * sp.lcm([sp.Integer(d) for d in dens]))
    p = sp.Poly(f, *gens_vars)
    nums = [sp.Integer(c) for c in p.coeffs()]
    f = sp.expand(sp.cancel(f / sp.gcd(nums)))
    p = sp.Poly(f, *gens_vars)
    from sympy.polys.orderings import monomial_key

    key = monomial_key(order) if isinstance(order, str) else order
    lm = max(p.monoms(), key=key)
    if p.coeff_monomial(lm) < 0:
        f = sp.expand(-f)
    return f


def canon_ideal(gens, gens_vars, order="grevlex"):
    """Canonical form: normalized reduced GB, sorted by string."""
    G = gb(gens, gens_vars, order=order)
    G = [int_normalize(g, gens_vars, order) for g in G]
    return sorted(G, key=sp.sstr)


def pstr(f):
    return sp.sstr(sp.expand(f)).replace("**", "^")


def ideal_strs(gens, gens_vars):
    return [pstr(f) for f in canon_ideal(gens, gens_vars)]


# ---------------------------------------------------------------------------
# minimal primes / associated primes


def _linear_reduce(gens, gens_vars):
    """Substitute away variables that occur linearly with a constant
    coefficient.  Returns (reduced gens, remaining vars, substitutions), where
    each substitution (v, repl) is expressed in the remaining variables, so a
    prime Q of the reduced ring lifts to Q + <v - repl : each substitution>.
    Valid because quotienting by v - repl is a ring isomorphism onto the
    polynomial ring in the remaining variables."""
    gens = [sp.expand(g) for g in gens if sp.expand(g) != 0]
    vars_ = list(gens_vars)
    subs = []
    changed = True
    while changed:
        changed = False
        for g in gens:
            if g.is_number:
                continue
            hit = None
            for v in vars_:
                if v not in g.free_symbols or sp.degree(g, v) != 1:
                    continue
                c = sp.expand(g.coeff(v, 1))
                if c.is_number:
                    hit = (v, sp.expand(-(g - c * v) / c))
                    break
            if hit is None:
                continue
            v, repl = hit
            gens = [sp.expand(q.subs(v, repl)) for q in gens]
            gens = [q for q in gens if q != 0]
            subs = [(w, sp.expand(r.subs(v, repl))) for w, r in subs]
            subs.append((v, repl))
            vars_.remove(v)
            changed = True
            break
    return gens, vars_, subs


def _lift_linear(pieces, subs, gens_vars):
    lin = [int_normalize(v - r, gens_vars) for v, r in subs]
    return [canon_ideal(list(p) + lin, gens_vars) for p in pieces]


def _factor_split(gens, gens_vars):
    """Index of a generator with a nontrivial factorization, plus its factors."""
    for i, g in enumerate(gens):
        if g == 0 or g.is_number:
            continue
        _, facs = _factor_list_cached(g, gens_vars)
        bases = [b for b, _ in facs if not b.is_number]
        if len(bases) > 1 or any(m > 1 for b, m in facs if not b.is_number):
            return i, bases
    return None


def _minpoly_of(gens, gens_vars, var, params):
    """Generator of the elimination ideal in QQ(params)[var], or None."""
    others = [v for v in gens_vars if v != var and v not in params]
    kept, _ = eliminate(gens, others + [var] + list(params), others)
    kept = [f for f in kept if var in f.free_symbols]
    if not kept:
        return None
    g = sp.Integer(0)
    for f in kept:
        g = sp.gcd(g, f) if g != 0 else f
    g = sp.expand(g)
    if g == 0 or var not in g.free_symbols:
        return None
    # strip the content over QQ[params]: gcd over QQ(params)[var]
    p = sp.Poly(g, var)
    cont = sp.Integer(0)
    for c in p.all_coeffs():
        cont = sp.gcd(cont, c) if cont != 0 else c
    if not cont.is_number:
        g = sp.expand(sp.cancel(g / cont))
    return int_normalize(g, [var] + list(params))


def _vecdim(gens, yvars, dom):
    G = groebner(gens, *yvars, order="grevlex", domain=dom)
    lms = [sp.Poly(e, *yvars, domain=dom) for e in G.exprs]
    from sympy.polys.orderings import monomial_key

    key = monomial_key("grevlex")
    lts = [max(p.monoms(), key=key) for p in lms]
    # count standard monomials under the staircase
    bounds = []
    for i in range(len(yvars)):
        pures = [m[i] for m in lts if sum(m) == m[i]]
        if not pures:
            return None
        bounds.append(min(pures))
    count = 0
    for mono in itertools.product(*[range(b) for b in bounds]):
        if not any(all(mono[i] >= m[i] for i in range(len(yvars))) for m in lts):
            count += 1
    return count


_mp_cache = {}


def min_primes(gens, gens_vars, known=()):
    """Minimal primes; `known` may seed certified minimal primes of the same
    ideal, which prunes the branches that would rediscover them.  The result
    does not depend on the seeds, so the cache is shared."""
    gens = [sp.expand(g) for g in gens]
    gens = [g for g in gens if g != 0]
    if not gens:
        return [[]]
    if any(g.is_number for g in gens):
        return []
    key = (_strs(gens), _vstrs(gens_vars))
    hit = _mp_cache.get(key)
    if hit is not None:
        return [list(p) for p in hit]

    red, rvars, subs = _linear_reduce(gens, gens_vars)
    if subs:
        inner = min_primes(red, rvars) if rvars else ([[]] if not red else [])
        out = _minimize(_lift_linear(inner, subs, gens_vars), gens_vars)
        _mp_cache[key] = [list(p) for p in out]
        return out

    found = [canon_ideal(p, gens_vars) for p in known]
    work = [gens]
    while work:
        cur = [sp.expand(g) for g in work.pop()]
        cur = [g for g in cur if g != 0]
        if not cur:
            found.append([])
            continue
        if any(g.is_number for g in cur):
            continue
        cur = [sqfree(g, gens_vars) for g in cur]
        # a branch whose ideal contains an already-found prime only carries
        # primes over that prime, so it cannot contribute a new minimal one;
        # reduction against the raw generators is a sound (partial) check
        if any(P and all(nf(p, cur, gens_vars) == 0 for p in P) for P in found):
            continue
        split = _factor_split(cur, gens_vars)
        if split is None:
            G = gb(cur, gens_vars)
            if any(g.is_number and g != 0 for g in G):
                continue
            if any(all(nf(p, G, gens_vars) == 0 for p in P) for P in found):
                continue
            split = _factor_split(G, gens_vars)
            cur = G
        if split is not None:
            i, bases = split
            rest = cur[:i] + cur[i + 1 :]
            for b in bases:
                work.append(rest + [b])
            continue

        u = max_indep_set(cur, gens_vars)
        if u is None:
            continue
        yvars = [v for v in gens_vars if v not in u]
        if not yvars:
            found.append([])
            continue
        primes, h = _zerodim_primes(cur, gens_vars, yvars, u)
        found.extend(primes)
        if h is not None and not h.is_number:
            work.append(list(cur) + [sqfree(h, gens_vars)])

    out = _minimize(found, gens_vars)
    _mp_cache[key] = [list(p) for p in out]
    return out


_gtzh_cache = {}


def _gtz_h(gens, yvars, params):
    """Multiplier h in QQ[params] with I*QQ(params)[y] meet QQ[x] = I : h^inf.

    h is the lcm of the leading y-coefficients of a Groebner basis with the
    dependent variables ordered above the parameters.
    """
    if not params:
        return None
    key = (_strs(gens), _vstrs(yvars), _vstrs(params))
    if key in _gtzh_cache:
        return _gtzh_cache[key]
    from sympy.polys.orderings import monomial_key

    G = groebner(gens, *(list(yvars) + list(params)), order=elim_order(len(yvars)))
    mkey = monomial_key("grevlex")
    h = sp.Integer(1)
    for g in G.exprs:
        p = sp.Poly(sp.expand(g), *yvars)
        lm = max(p.monoms(), key=mkey)
        lc = sp.expand(p.coeff_monomial(lm))
        if not lc.is_number:
            h = sp.lcm(h, lc)
    h = sp.expand(h)
    out = None if h.is_number else sqfree(h, list(params))
    _gtzh_cache[key] = out
    return out


def _zerodim_primes(gens, gens_vars, yvars, params):
    """Minimal primes not vanishing on the lead-coefficient locus, plus that
    lead coefficient h (caller recurses on gens + h)."""
    dom = QQ.frac_field(*params) if params else QQ
    h = _gtz_h(gens, yvars, params)
    base = saturate_elem(gens, h, gens_vars) if h is not None else gb(gens, gens_vars)
    if any(g.is_number and g != 0 for g in base):
        return [], h

    # split via minimal polynomials of the dependent variables
    minpolys = {}
    for v in yvars:
        m = _minpoly_of(base, gens_vars, v, params)
        if m is None:
            continue
        minpolys[v] = m
        _, facs = _factor_list_cached(m, [v] + list(params))
        vfacs = [(b, mult) for b, mult in facs if v in b.free_symbols]
        if len(vfacs) > 1:
            out = []
            for b, _ in vfacs:
                out.extend(min_primes(base + [b], gens_vars))
            return out, h
        if len(vfacs) == 1 and vfacs[0][1] > 1:
            return min_primes(base + [vfacs[0][0]], gens_vars), h

    vd = _vecdim(base, yvars, dom)
    for v in yvars:
        m = minpolys.get(v)
        if m is not None and vd is not None and sp.degree(m, v) == vd:
            return [canon_ideal(base, gens_vars)], h

    # generic coordinates until the quotient is certified a field
    coeffs = _coeff_stream(len(yvars))
    for cs in coeffs:
        t = sp.Dummy("T")
        lin = t - sum(c * v for c, v in zip(cs, yvars))
        ext_vars = list(gens_vars) + [t]
        m = _minpoly_of(base + [lin], ext_vars, t, params)
        if m is None:
            continue
        _, facs = sp.factor_list(m, *([t] + list(params)))
        tfacs = [b for b, _ in facs if t in b.free_symbols]
        if len(tfacs) > 1:
            out = []
            sub = sum(c * v for c, v in zip(cs, yvars))
            for b in tfacs:
                g2 = sp.expand(b.subs(t, sub))
                for p in min_primes(base + [g2], gens_vars):
                    out.append(p)
            return out, h
        if vd is not None and sp.degree(m, t) == vd:
            return [canon_ideal(base, gens_vars)], h
    raise RuntimeError("prime certification failed")


def _coeff_stream(k):
    picks = [1, -1, 2, -2, 3, 5, -3, 7]
    out = []
    for trial in range(24):
        cs = [picks[(trial * (i + 3) + i * i + trial) % len(picks)] for i in range(k)]
        cs[0] = 1
        out.append(cs)
    return out


def _minimize(primes, gens_vars):
    canon = []
    seen = set()
    for p in primes:
        c = tuple(ideal_strs(p, gens_vars))
        if c not in seen:
            seen.add(c)
            canon.append(canon_ideal(p, gens_vars))
    out = []
    for i, p in enumerate(canon):
        redundant = False
        for j, q in enumerate(canon):
            if i != j and ideal_contains(p, q, gens_vars):
                if not ideal_contains(q, p, gens_vars) or j < i:
                    redundant = True
                    break
        if not redundant:
            out.append(p)
    return out


def radical(gens, gens_vars):
    ps = min_primes(gens, gens_vars)
    if not ps:
        return [sp.Integer(1)]
    return canon_ideal(intersect_many(ps, gens_vars), gens_vars)


def _sat_exponent(gens, f, sat, gens_vars):
    """Smallest m with f^m * (I : f^inf) inside I.

    Then I : f^m = I : f^inf, hence I : f^m = I : f^(2m), which makes the
    splitting I = (I : f^inf) meet (I + <f^m>) exact: for x = j + c f^m in the
    right side with x f^m in I, c f^(2m) lies in I, so c f^m does, so x in I."""
    G = gb(gens, gens_vars)
    fp = sp.Integer(1)
    for m in range(1, 60):
        fp = sp.expand(fp * f)
        if all(nf(sp.expand(fp * q), G, gens_vars) == 0 for q in sat):
            return m
    raise RuntimeError("saturation exponent not found")


def _pick_splitter(ps, gens_vars):
    """Small element inside one minimal prime but not another."""
    G0 = gb(ps[0], gens_vars)
    cands = [g for g in ps[1] if nf(g, G0, gens_vars) != 0]
    return min(cands, key=lambda g: (sp.total_degree(g), len(g.args), sp.sstr(g)))


def primary_decomposition(gens, gens_vars, certify=True):
    """List of (primary component, associated prime) pairs.

    The worklist splits one small element at a time: I = (I : g^inf) meet
    (I + <g^m>) is exact once g^m * (I : g^inf) lies in I (see _sat_exponent).
    An ideal with a single minimal prime P is replaced by its localization
    piece I : h^inf -- which is P-primary because I becomes zero-dimensional
    with prime radical over the fraction field of the independent variables --
    plus the remainder ideal I + <h^m>.  Components sharing a radical are
    merged, so the output primes are pairwise distinct and contain every
    associated prime of I.  A component Q with prime P is then redundant if
    and only if the intersection T of the components with primes strictly
    inside P satisfies T subset of Q: dropping such a Q keeps the global
    intersection equal to I, and conversely any x in T minus Q times a power
    of an element s outside P but inside all primes not below P stays outside
    Q, so Q is needed when T is not inside Q."""
    gens = [sp.expand(g) for g in gens if sp.expand(g) != 0]
    if not gens:
        return [([], [])]
    if any(g.is_number for g in gens):
        return []

    red, rvars, subs = _linear_reduce(gens, gens_vars)
    if subs:
        if not red:
            inner = [([], [])]
        elif any(g.is_number for g in red):
            return []
        else:
            inner = _pd_main(red, rvars, certify)
        lifted = []
        for Q, P in inner:
            lifted.append(
                (
                    _lift_linear([Q], subs, gens_vars)[0],
                    _lift_linear([P], subs, gens_vars)[0],
                )
            )
        return lifted
    return _pd_main(gens, gens_vars, certify)


def _pd_main(gens, gens_vars, certify):
    gens = gb(gens, gens_vars)
    if not gens:
        return [([], [])]
    if any(g.is_number for g in gens):
        return []
    work = [(list(gens), [])]
    comps = []
    guard = 0
    while work:
        guard += 1
        assert guard < 400
        item, seeds = work.pop()
        J = gb(item, gens_vars)
        if any(g.is_number and g != 0 for g in J):
            continue
        ps = min_primes(J, gens_vars, known=seeds)
        if not ps:
            continue
        if len(ps) > 1:
            g = _pick_splitter(ps, gens_vars)
            Jt = saturate_elem(J, g, gens_vars)
            m = _sat_exponent(J, g, Jt, gens_vars)
            # the minimal primes of J avoiding g stay minimal over J : g^inf,
            # the ones through g stay minimal over J + <g^m> (pairwise
            # incomparability forces any smaller prime to coincide)
            through = [P for P in ps if nf(g, gb(P, gens_vars), gens_vars) == 0]
            avoid = [P for P in ps if P not in through]
            work.append((Jt, avoid))
            work.append((list(J) + [sp.expand(g**m)], through))
            continue
        P = ps[0]
        u = max_indep_set(P, gens_vars)
        yv = [v for v in gens_vars if v not in u]
        h = _gtz_h(J, yv, u) if u else None
        if h is not None:
            Q = saturate_elem(J, h, gens_vars)
            if not ideal_eq(Q, J, gens_vars):
                k = _sat_exponent(J, h, Q, gens_vars)
                work.append((list(J) + [sp.expand(h**k)], []))
        else:
            Q = J
        comps.append((canon_ideal(Q, gens_vars), canon_ideal(P, gens_vars)))

    # merge components sharing a radical
    merged = []
    for Q, P in comps:
        hit = False
        for i, (Q2, P2) in enumerate(merged):
            if ideal_eq(P, P2, gens_vars):
                merged[i] = (canon_ideal(intersect(Q, Q2, gens_vars), gens_vars), P2)
                hit = True
                break
        if not hit:
            merged.append((Q, P))

    # drop redundant components (see the criterion in the docstring)
    keep = list(merged)
    changed = True
    while changed:
        changed = False
        for i, (Q, P) in enumerate(keep):
            GP = gb(P, gens_vars)
            lower = [
                Q2
                for j, (Q2, P2) in enumerate(keep)
                if j != i
                and all(nf(g, GP, gens_vars) == 0 for g in P2)
            ]
            if not lower:
                continue
            T = intersect_many(lower, gens_vars)
            if ideal_contains(Q, T, gens_vars):
                keep.pop(i)
                changed = True
                break

    if certify:
        assert ideal_eq(
            intersect_many([c for c, _ in keep], gens_vars), gens, gens_vars
        )
    return keep


def ass_primes(gens, gens_vars, certify=True):
    return [P for _, P in primary_decomposition(gens, gens_vars, certify)]
