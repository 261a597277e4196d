"""Reference Whitney stratification on top of oracle_lib, for fixture freezing.

Stratifications are lists of radical ideals indexed by dimension; the unit
ideal stands for an empty level. All ideals are kept in canonical form.
"""

import itertools

import sympy as sp

from oracle_lib import (
    affine_dim,
    saturate_elem,
    canon_ideal,
    eliminate,
    gb,
    ideal_contains,
    intersect,
    intersect_many,
    min_primes,
    nf,
    primary_decomposition,
    proj_dim,
    saturate_ideal,
)

_mp_cache = {}


def cached_min_primes(gens, gens_vars):
    key = (tuple(sp.sstr(g) for g in canon_ideal(gens, gens_vars)), tuple(map(str, gens_vars)))
    if key not in _mp_cache:
        _mp_cache[key] = min_primes(gens, gens_vars)
    return _mp_cache[key]


def is_unit(gens, gens_vars):
    return any(g.is_number and g != 0 for g in gb(gens, gens_vars))


def jacobian_minors(gens, gens_vars, size):
    mat = sp.Matrix([[sp.diff(g, v) for v in gens_vars] for g in gens])
    out = []
    rows = range(mat.rows)
    cols = range(mat.cols)
    for rs in itertools.combinations(rows, size):
        for cs in itertools.combinations(cols, size):
            m = sp.expand(mat[list(rs), list(cs)].det())
            if m != 0:
                out.append(m)
    return out


def singular_locus(gens, xs):
    """Radical ideal of the singular set of a pure-dimensional variety."""
    gens = canon_ideal(gens, xs)
    if not gens:
        return [sp.Integer(1)]
    c = len(xs) - affine_dim(gens, xs)
    minors = jacobian_minors(gens, xs, c)
    sing = list(gens) + minors
    ps = cached_min_primes(sing, xs)
    if not ps:
        return [sp.Integer(1)]
    return canon_ideal(intersect_many(ps, xs), xs)


_con_cache = {}


def conormal(gens, xs, xis):
    """Ideal of the conormal variety in P^n x (P^n)*.

    Computed per irreducible component. For an irreducible component the
    saturation runs sequentially over the Jacobian generators, which
    over-saturates in general but agrees here because the conormal variety of
    an irreducible X is irreducible of dimension n-1; the dimension assertion
    certifies that nothing was lost.
    """
    gens = canon_ideal(gens, xs)
    key = (tuple(sp.sstr(g) for g in gens), tuple(map(str, xs)), tuple(map(str, xis)))
    if key in _con_cache:
        return _con_cache[key]
    allv = list(xs) + list(xis)
    comps = cached_min_primes(gens, xs)
    assert comps
    if len(comps) > 1:
        parts = [conormal(c, xs, xis) for c in comps]
        out = canon_ideal(intersect_many(parts, allv), allv)
        _con_cache[key] = out
        return out

    P = canon_ideal(comps[0], xs)
    c = len(xs) - affine_dim(P, xs)
    jac = jacobian_minors(P, xs, c)
    mat = sp.Matrix([list(xis)] + [[sp.diff(g, v) for v in xs] for g in P])
    aug = []
    for rs in itertools.combinations(range(1, mat.rows), c):
        for cs in itertools.combinations(range(mat.cols), c + 1):
            m = sp.expand(mat[[0] + list(rs), list(cs)].det())
            if m != 0:
                aug.append(m)
    S = list(P) + aug
    for g in jac:
        S = saturate_elem(S, g, allv)
    assert affine_dim(S, allv) == len(xs)
    out = canon_ideal(S, allv)
    _con_cache[key] = out
    return out


def _proj_empty_prime(P, xs, xis, allv):
    G = gb(P, allv)
    for block in ([xs] if xis is None else [xs, xis]):
        if all(nf(v, G, allv) == 0 for v in block):
            return True
    return False


def decompose_projections(Y, X, xs, xis):
    """x-projections of the associated primes of Con(X) + I_Y, with their
    projective dimensions."""
    allv = list(xs) + list(xis)
    J = list(conormal(X, xs, xis)) + list(Y)
    # components supported where a whole coordinate block vanishes are empty
    # biprojectively; saturating by each block ideal removes exactly the
    # associated primes containing that block before decomposing
    J = saturate_ideal(J, xs, allv)
    J = saturate_ideal(J, xis, allv)
    out = []
    for _, P in primary_decomposition(J, allv):
        if _proj_empty_prime(P, xs, xis, allv):
            continue
        K, _ = eliminate(P, allv, xis)
        K = canon_ideal(K, xs)
        out.append((K, proj_dim(K, xs)))
    return out


def decompose_step(Y, X, xs, xis):
    """Levels (0..d) with Y at level d and each small projection at its
    dimension and above."""
    Y = canon_ideal(Y, xs)
    d = proj_dim(Y, xs)
    levels = [[sp.Integer(1)]] * d + [Y]
    for K, dk in decompose_projections(Y, X, xs, xis):
        if 0 <= dk < d:
            for i in range(dk, d):
                levels[i] = canon_ideal(intersect(levels[i], K, xs), xs)
    return levels


def merge(levels, sub, xs):
    top = len(sub) - 1
    for i in range(len(levels)):
        w = sub[min(i, top)]
        levels[i] = canon_ideal(intersect(levels[i], w, xs), xs)


def pure_d(gens, d, xs):
    if is_unit(gens, xs):
        return [sp.Integer(1)]
    keep = [P for P in cached_min_primes(gens, xs) if proj_dim(P, xs) == d]
    if not keep:
        return [sp.Integer(1)]
    return canon_ideal(intersect_many(keep, xs), xs)


class FlagAdder:
    """Routes every irreducible piece added to a stratification through the
    flag: the piece lands at its own dimension, and its lower-dimensional
    intersections with flag levels land at theirs."""

    def __init__(self, flag, xs):
        self.flag = flag
        self.xs = xs

    def pieces(self, V):
        seen = set()
        out = []
        stack = [tuple(canon_ideal(V, self.xs))]
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            cur_l = list(cur)
            dv = proj_dim(cur_l, self.xs)
            if dv < 0:
                continue
            out.append(cur_l)
            for Fj in self.flag[:-1]:
                Z = cur_l + list(Fj)
                if is_unit(Z, self.xs):
                    continue
                dz = proj_dim(Z, self.xs)
                if 0 <= dz < dv:
                    for c in cached_min_primes(Z, self.xs):
                        stack.append(tuple(canon_ideal(c, self.xs)))
        return out


def _add_piece(levels, Z, xs, hi=None):
    d = proj_dim(Z, xs)
    if d < 0:
        return
    for i in range(d, len(levels) if hi is None else hi):
        levels[i] = canon_ideal(intersect(levels[i], Z, xs), xs)


def whit_strat(X, xs, xis, flag=None):
    """Whitney stratification of a pure-dimensional projective variety; with a
    flag, the output is additionally subordinate to it."""
    X = canon_ideal(X, xs)
    k = proj_dim(X, xs)
    adder = FlagAdder(flag, xs) if flag is not None else None

    levels = [[sp.Integer(1)] for _ in range(k)] + [X]
    if adder is not None:
        levels[k] = [sp.Integer(1)]
        for comp in cached_min_primes(X, xs):
            for p in adder.pieces(comp):
                _add_piece(levels, p, xs)

    sing = singular_locus(X, xs)
    if is_unit(sing, xs):
        return levels
    for Z in cached_min_primes(sing, xs):
        todo = adder.pieces(Z) if adder is not None else [Z]
        for p in todo:
            _add_piece(levels, p, xs, hi=k)
    mu = proj_dim(sing, xs)
    for d in range(mu, 0, -1):
        # d = 0 is skipped: points only yield projections of dimension < 0
        # (nothing), and the recursion on a finite set returns the set itself
        Yd = pure_d(levels[d], d, xs)
        if is_unit(Yd, xs):
            continue
        for K, dk in decompose_projections(Yd, X, xs, xis):
            if not (0 <= dk < d):
                continue
            for P in cached_min_primes(K, xs):
                todo = adder.pieces(P) if adder is not None else [P]
                for p in todo:
                    _add_piece(levels, p, xs, hi=d)
        merge(levels, whit_strat(Yd, xs, xis, flag), xs)
    return levels


# ---------------------------------------------------------------------------
# affine stratification: homogenize, stratify projectively, dehomogenize


def homogenize_ideal(gens, xs, x0):
    """Projective closure: homogenize a grevlex Groebner basis."""
    G = gb(gens, xs)
    out = []
    for g in G:
        p = sp.Poly(g, *xs)
        out.append(sp.expand(p.homogenize(x0).as_expr()))
    return canon_ideal(out, [x0] + list(xs))


def dehomogenize(gens, x0, xs):
    out = [sp.expand(g.subs(x0, 1)) for g in gens]
    return canon_ideal([g for g in out if g != 0] or ([sp.Integer(1)] if any(
        g.is_number and g != 0 for g in (sp.expand(q.subs(x0, 1)) for q in gens)
    ) else []), xs)


def whit_strat_affine(X, xs, x0, xis, flag=None):
    """Affine Whitney stratification via the projective one.

    flag, when given, is a list of affine ideals; each level is homogenized
    alongside X."""
    H = homogenize_ideal(X, xs, x0)
    pxs = [x0] + list(xs)
    pflag = None
    if flag is not None:
        pflag = [homogenize_ideal(F, xs, x0) for F in flag[:-1]]
        pflag.append(H)
    levels = whit_strat(H, pxs, xis, flag=pflag)
    return [dehomogenize(L, x0, xs) for L in levels]


# ---------------------------------------------------------------------------
# morphisms: graphs, images, preimages, Thom-Boardman flags


def graph_ideal(IX, fcomps, xs, ys):
    """Bihomogeneous ideal of the graph of f restricted to V(IX), obtained by
    eliminating the scaling variable from <y_i - u f_i>."""
    u = sp.Dummy("u")
    gens = list(IX) + [y - u * fc for y, fc in zip(ys, fcomps)]
    out, _ = eliminate(gens, [u] + list(xs) + list(ys), [u])
    return canon_ideal(out, list(xs) + list(ys))


def image_ideal(IX, fcomps, Xp, xs, ys):
    """Radical ideal of f(V(Xp)) for V(Xp) inside V(IX)."""
    from oracle_lib import radical

    u = sp.Dummy("u")
    gens = list(IX) + list(Xp) + [y - u * fc for y, fc in zip(ys, fcomps)]
    out, _ = eliminate(gens, [u] + list(xs) + list(ys), [u] + list(xs))
    return canon_ideal(radical(out, ys), ys)


def preimage_ideal(IX, fcomps, Yp, xs, ys):
    """Radical ideal of f^{-1}(V(Yp)) inside V(IX)."""
    from oracle_lib import radical

    G = graph_ideal(IX, fcomps, xs, ys)
    # saturating by the target block removes the y = 0 cone slab, whose
    # projection would otherwise cover all of X
    allv = list(xs) + list(ys)
    K = saturate_ideal(list(G) + list(Yp), ys, allv)
    out, _ = eliminate(K, list(ys) + list(xs), list(ys))
    return canon_ideal(radical(out, xs), xs)


def jacobian_matrix(fcomps, xs):
    return [[sp.expand(sp.diff(fc, v)) for v in xs] for fc in fcomps]


def minors_ideal(M, size):
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if size == 0:
        return [sp.Integer(1)]
    if size > rows or size > cols:
        return []
    out = []
    for ri in itertools.combinations(range(rows), size):
        for ci in itertools.combinations(range(cols), size):
            m = sp.Matrix([[M[r][c] for c in ci] for r in ri])
            d = sp.expand(m.det())
            if d != 0:
                out.append(d)
    return out


def thom_boardman_flag(IX, fcomps, xs, ys):
    """Levels T_0 subset ... subset T_{k+1} = X of the rank-deficiency flag;
    level i carries the ideal of I_X + (i x i minors of the Jacobian)."""
    J = jacobian_matrix(fcomps, xs)
    k = 0
    for i in range(1, min(len(fcomps), len(xs)) + 1):
        if minors_ideal(J, i):
            k = i
    levels = []
    for i in range(k + 2):
        mi = minors_ideal(J, i)
        if i == 0:
            levels.append([sp.Integer(1)])
        else:
            levels.append(canon_ideal(list(IX) + mi, xs))
    return levels, k


# ---------------------------------------------------------------------------
# stratification of a generic morphism


def strata_of(levels, gens_vars):
    """(closure prime, level) for the strata: components of each level not
    contained in the previous one."""
    out = []
    for i, L in enumerate(levels):
        if is_unit(L, gens_vars):
            continue
        for P in cached_min_primes(L, gens_vars):
            if i > 0 and ideal_contains(P, levels[i - 1], gens_vars):
                continue
            out.append((P, i))
    return out


def stratum_target(imS, Ylevels, ys):
    """Level index and closure prime of the codomain stratum containing the
    image of a domain stratum."""
    for j, L in enumerate(Ylevels):
        if is_unit(L, ys):
            continue
        if ideal_contains(imS, L, ys):
            for C in cached_min_primes(L, ys):
                if ideal_contains(imS, C, ys):
                    return j, C
    raise RuntimeError("image not contained in any codomain level")


def problematic_pairs(Xlv, Ylv, IX, fcomps, xs, ys):
    """Domain/codomain stratum pairs (S, R) with f(S) in R and dim S < dim R."""
    out = []
    for P, i in strata_of(Xlv, xs):
        imS = image_ideal(IX, fcomps, P, xs, ys)
        j, C = stratum_target(imS, Ylv, ys)
        dS = proj_dim(P, xs)
        dR = proj_dim(C, ys)
        if dS < dR:
            out.append((P, i, C, j, dS, dR))
    return out


def _gap_index(P, flag_levels, xs):
    """Largest l with V(P) not inside flag level l (so the stratum lies in the
    gap between levels l and l+1)."""
    for j, F in enumerate(flag_levels):
        if ideal_contains(P, F, xs):
            return j - 1
    return len(flag_levels) - 1


def _meets_stratum(Z, P, lower, gens_vars):
    """Does V(Z) meet the stratum V(P) minus V(lower)?"""
    M = list(Z) + list(P)
    if is_unit(M, gens_vars):
        return False
    from oracle_lib import variety_contained

    return not variety_contained(M, lower, gens_vars)


def refine(Xlv, Ylv, IX, IY, fcomps, xs, ys, xis, etas, Fflag):
    """Subdivide until no domain stratum maps into a strictly bigger codomain
    stratum.  Pairs are processed in descending codomain dimension; the
    re-stratified level is the one that just received the new piece."""
    Xlv = [canon_ideal(L, xs) for L in Xlv]
    Ylv = [canon_ideal(L, ys) for L in Ylv]
    guard = 0
    while True:
        guard += 1
        assert guard < 40
        pairs = problematic_pairs(Xlv, Ylv, IX, fcomps, xs, ys)
        if not pairs:
            return Xlv, Ylv
        pairs.sort(key=lambda t: (-t[5], [sp.sstr(g) for g in t[2]], [sp.sstr(g) for g in t[0]]))
        P, i, C, j, dS, dR = pairs[0]
        Yp = [list(L) for L in Ylv]
        imS = image_ideal(IX, fcomps, P, xs, ys)
        d = proj_dim(imS, ys)
        _add_piece(Yp, imS, ys)
        merge(Yp, whit_strat(pure_d(Yp[d], d, ys), ys, etas), ys)
        for l in range(d, -1, -1):
            if is_unit(Yp[l], ys):
                continue
            news = [
                W
                for W in cached_min_primes(Yp[l], ys)
                if not ideal_contains(W, Ylv[l], ys)
            ]
            for W in news:
                pre = preimage_ideal(IX, fcomps, W, xs, ys)
                if is_unit(pre, xs):
                    continue
                for Z in cached_min_primes(pre, xs):
                    hit = False
                    for Pp, ip in strata_of(Xlv, xs):
                        if _gap_index(Pp, Fflag, xs) != l:
                            continue
                        lower = Xlv[ip - 1] if ip > 0 else [sp.Integer(1)]
                        if _meets_stratum(Z, Pp, lower, xs):
                            hit = True
                            break
                    if not hit:
                        continue
                    r = proj_dim(Z, xs)
                    if r < 0:
                        continue
                    _add_piece(Xlv, Z, xs)
                    merge(Xlv, whit_strat(pure_d(Xlv[r], r, xs), xs, xis), xs)
        Ylv = [canon_ideal(L, ys) for L in Yp]


def whit_strat_map(IX, IY, fcomps, xs, ys, xis, etas):
    """Stratifications of domain and codomain making f a stratified map."""
    IX = canon_ideal(IX, xs)
    IY = canon_ideal(IY, ys)
    T, k = thom_boardman_flag(IX, fcomps, xs, ys)
    B = []
    for i in range(k + 1):
        if is_unit(T[i], xs) or proj_dim(T[i], xs) < 0:
            B.append([sp.Integer(1)])
        else:
            B.append(image_ideal(IX, fcomps, T[i], xs, ys))
    B.append(image_ideal(IX, fcomps, IX, xs, ys))
    B.append(IY)
    B = [Fi if proj_dim(Fi, ys) >= 0 or not Fi else [sp.Integer(1)] for Fi in B]
    Ylv = whit_strat(IY, ys, etas, flag=B)
    F = []
    for i in range(len(Ylv)):
        if is_unit(Ylv[i], ys):
            F.append([sp.Integer(1)])
        else:
            Fi = preimage_ideal(IX, fcomps, Ylv[i], xs, ys)
            F.append(Fi if proj_dim(Fi, xs) >= 0 or not Fi else [sp.Integer(1)])
    Xlv = whit_strat(IX, xs, xis, flag=F)
    return refine(Xlv, Ylv, IX, IY, fcomps, xs, ys, xis, etas, F)
