#!/usr/bin/env python3
"""Regenerates the frozen JSON fixtures under tests/fixtures/.

Usage (from this directory):  python3 gen_fixtures.py [name ...]

With no arguments every fixture file is rebuilt; otherwise only the named
ones (e.g. `kernel_battery maps`).  Output is deterministic: generator lists
are canonical reduced Groebner bases (integer content 1, positive leading
coefficient) and prime/component lists are sorted by their string form.
Consumers must treat all generator arrays as *unordered* sets of polynomials.

Conventions, shared with the C++ test readers:
  - "vars" lists the variables in precedence order (first = largest).
  - A generator array ["1"] (unit ideal) denotes the empty variety.
  - An empty generator array [] denotes the zero ideal, i.e. the whole space.
  - Stratification "levels" run from dimension 0 upward.
"""
import json
import os
import sys
import time

import sympy as sp

from oracle_lib import (
    affine_dim, ass_primes, canon_ideal, eliminate, gb, proj_dim, pstr,
    saturate_elem, saturate_ideal,
)
from strat_lib import (
    conormal, decompose_projections, graph_ideal, image_ideal, preimage_ideal,
    thom_boardman_flag, whit_strat, whit_strat_affine, whit_strat_map,
)

OUT = os.path.normpath(os.path.join(os.path.dirname(os.path.abspath(__file__)),
                                    "..", "..", "tests", "fixtures"))
T0 = time.time()


def sy(names):
    return list(sp.symbols(names))


def strs(gens, variables):
    return [pstr(g) for g in canon_ideal(list(gens), variables)]


def lvls(levels, variables):
    return [[pstr(g) for g in canon_ideal(list(L), variables)] for L in levels]


def vnames(variables):
    return [str(v) for v in variables]


def write(name, obj):
    path = os.path.join(OUT, name)
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print("[%7.1fs] wrote %s" % (time.time() - T0, name), flush=True)


# ---------------------------------------------------------------- kernel ----

def battery_item(name, variables, gens, elim_drop=None, sat_by=None,
                 lex_too=False):
    item = {
        "name": name,
        "vars": vnames(variables),
        "gens": [pstr(g) for g in gens],
        "gb": strs(gens, variables),
        "dim": affine_dim(gens, variables),
        "ass_primes": sorted(strs(p, variables) for p in
                             ass_primes(gens, variables)),
    }
    if lex_too:
        item["gb_lex"] = [pstr(g) for g in
                          canon_ideal(gens, variables, order="lex")]
    if elim_drop is not None:
        drop = [v for v in variables if str(v) in elim_drop]
        kept, keep = eliminate(gens, variables, drop)
        item["elim"] = {"drop": elim_drop,
                        "result": strs(kept, keep) if kept else []}
    if sat_by is not None:
        res = saturate_elem(gens, sat_by, variables)
        item["sat"] = {"by": pstr(sat_by), "result": strs(res, variables)}
    return item


def gen_kernel_battery():
    x, y, z, w = sy("x y z w")
    u0, u1, u2 = sy("u0 u1 u2")
    items = [
        battery_item("B01-embedded-line", [x, y], [x**2, x*y],
                     elim_drop=["x"], sat_by=y, lex_too=True),
        battery_item("B02-twisted-cubic-affine", [x, y, z],
                     [y - x**2, z - x**3],
                     elim_drop=["x"], sat_by=x, lex_too=True),
        battery_item("B03-plane-and-line", [x, y, z], [x*y, x*z],
                     elim_drop=["y"], sat_by=x, lex_too=True),
        battery_item("B04-gaussian-point", [x, y], [x**2 + 1, y - x**3],
                     elim_drop=["x"], sat_by=x, lex_too=True),
        battery_item("B05-katsura-3", [u0, u1, u2],
                     [u0 + 2*u1 + 2*u2 - 1,
                      u0**2 + 2*u1**2 + 2*u2**2 - u0,
                      2*u0*u1 + 2*u1*u2 - u1],
                     elim_drop=["u0"], sat_by=u1),
        battery_item("B06-fat-line-pair", [x, y],
                     [sp.expand((x + y)**3 * (x - y)**2)],
                     elim_drop=["x"], sat_by=x + y, lex_too=True),
        battery_item("B07-fat-point", [x, y], [x**2, y**2],
                     elim_drop=["x"], sat_by=x, lex_too=True),
        battery_item("B08-monomial-curve-plus-axis", [x, y, z],
                     [x*z - y**2, x**3 - y*z],
                     elim_drop=["x"], sat_by=x),
        battery_item("B09-determinantal-surface", [x, y, z, w],
                     [x*z - y**2, x*w - y*z, y*w - z**2],
                     elim_drop=["x"], sat_by=y),
        battery_item("B10-univariate-split", [x],
                     [x**4 - 5*x**2 + 6],
                     sat_by=x, lex_too=True),
    ]
    write("kernel_battery.json", {"items": items})


# -------------------------------------------------------------- conormal ----

def gen_conormal():
    xs = sy("x0 x1 x2 x3")
    xis = sy("xi0 xi1 xi2 xi3")
    x0, x1, x2, x3 = xs
    allv = xs + xis
    cases = [
        ("smooth-quadric", [x0*x3 - x1*x2]),
        ("whitney-cusp", [x0**2*x2**2 + x0*x3**3 - x1**2*x3**2]),
        ("cone-over-conic", [x1**2 - x0*x2]),
    ]
    items = []
    for name, gens in cases:
        con = conormal(gens, xs, xis)
        items.append({
            "name": name,
            "vars": vnames(xs), "dual_vars": vnames(xis),
            "gens": [pstr(g) for g in gens],
            "conormal": strs(con, allv),
        })
    write("conormal.json", {"items": items})


# ------------------------------------------------------------- decompose ----

def gen_decompose():
    xs = sy("x0 x1 x2 x3")
    xis = sy("xi0 xi1 xi2 xi3")
    x0, x1, x2, x3 = xs
    items = []
    for name, Y, X in [
        ("cusp-singular-line", [x2, x3],
         [x0**2*x2**2 + x0*x3**3 - x1**2*x3**2]),
        ("cone-vertex", [x0, x1, x2], [x1**2 - x0*x2]),
    ]:
        projs = decompose_projections(Y, X, xs, xis)
        items.append({
            "name": name,
            "vars": vnames(xs), "dual_vars": vnames(xis),
            "Y": [pstr(g) for g in Y],
            "X": [pstr(g) for g in X],
            "projections": sorted(strs(p, xs) for p, _ in projs),
        })
    write("decompose.json", {"items": items})


# -------------------------------------------------------------- stratify ----

def gen_stratify():
    xs = sy("x0 x1 x2 x3")
    xis = sy("xi0 xi1 xi2 xi3")
    x0, x1, x2, x3 = xs
    items = []

    def proj_case(name, gens, flag=None):
        levels = whit_strat(gens, xs, xis, flag=flag)
        item = {
            "name": name, "vars": vnames(xs),
            "gens": [pstr(g) for g in gens],
            "levels": lvls(levels, xs),
        }
        if flag is not None:
            item["flag"] = [[pstr(g) for g in F] for F in flag]
        items.append(item)

    cusp = [x0**2*x2**2 + x0*x3**3 - x1**2*x3**2]
    proj_case("smooth-quadric", [x0*x3 - x1*x2])
    proj_case("whitney-cusp", cusp)
    proj_case("whitney-cusp-flag", cusp, flag=[[x1, x2, x3], cusp])
    proj_case("cone-over-conic", [x1**2 - x0*x2])
    proj_case("plane-pair", [x0*x1**2 - x1**2*x2])

    # affine Whitney cusp: x1 is the axis coordinate, x0 homogenizes
    axs = sy("x1 x2 x3")
    ax1, ax2, ax3 = axs
    aff = [ax2**2 + ax3**3 - ax1**2*ax3**2]
    levels = whit_strat_affine(aff, axs, x0, xis)
    items.append({
        "name": "whitney-cusp-affine", "vars": vnames(axs), "affine": True,
        "gens": [pstr(g) for g in aff],
        "levels": lvls(levels, axs),
    })
    write("stratify.json", {"items": items})


# ------------------------------------------------------------------ maps ----

def gen_maps():
    items = []

    # Veronese embedding of P^1 onto the conic in P^2
    xs = sy("x0 x1")
    ys = sy("y0 y1 y2")
    xis = sy("xi0 xi1")
    etas = sy("eta0 eta1 eta2")
    x0, x1 = xs
    y0, y1, y2 = ys
    IX, IY = [], [y0*y2 - y1**2]
    f = [x0**2, x0*x1, x1**2]
    allv = xs + ys
    tb, k = thom_boardman_flag(IX, f, xs, ys)
    Xlv, Ylv = whit_strat_map(IX, IY, f, xs, ys, xis, etas)
    items.append({
        "name": "veronese-conic",
        "vars": vnames(xs), "codomain_vars": vnames(ys),
        "X": [], "Y": [pstr(g) for g in IY], "f": [pstr(g) for g in f],
        "graph": strs(graph_ideal(IX, f, xs, ys), allv),
        "image": strs(image_ideal(IX, f, [], xs, ys), ys),
        "preimage_of": [pstr(y0)],
        "preimage": strs(preimage_ideal(IX, f, [y0], xs, ys), xs),
        "tb_rank": k,
        "tb_levels": lvls(tb, xs),
        "X_levels": lvls(Xlv, xs),
        "Y_levels": lvls(Ylv, ys),
    })

    # twisted cubic projected onto the cuspidal plane cubic
    xs = sy("x0 x1 x2 x3")
    ys = sy("y0 y1 y2")
    xis = sy("xi0 xi1 xi2 xi3")
    x0, x1, x2, x3 = xs
    y0, y1, y2 = ys
    IX = [x0*x2 - x1**2, x1*x3 - x2**2, x0*x3 - x1*x2]
    IY = [y1**3 - y0**2*y2]
    f = [x0, x1, x3]
    tb, k = thom_boardman_flag(IX, f, xs, ys)
    Xlv, Ylv = whit_strat_map(IX, IY, f, xs, ys, xis, etas)
    items.append({
        "name": "twisted-cubic-to-cuspidal-cubic",
        "vars": vnames(xs), "codomain_vars": vnames(ys),
        "X": [pstr(g) for g in IX], "Y": [pstr(g) for g in IY],
        "f": [pstr(g) for g in f],
        "image": strs(image_ideal(IX, f, [], xs, ys), ys),
        "preimage_of": [pstr(g) for g in [y0, y1]],
        "preimage": strs(preimage_ideal(IX, f, [y0, y1], xs, ys), xs),
        "tb_rank": k,
        "X_levels": lvls(Xlv, xs),
        "Y_levels": lvls(Ylv, ys),
    })

    # nodal cubic projected to P^1 from [0:1:1]; the node collapses into the
    # open stratum, so the refinement loop must add the image point and its
    # second preimage
    xs = sy("x0 x1 x2")
    ys = sy("y0 y1")
    xis = sy("xi0 xi1 xi2")
    etas = sy("eta0 eta1")
    x0, x1, x2 = xs
    y0, y1 = ys
    IX = [x1**2*x2 - x0**2*(x0 + x2)]
    IY = []
    f = [x0, x1 - x2]
    Xlv, Ylv = whit_strat_map(IX, IY, f, xs, ys, xis, etas)
    items.append({
        "name": "nodal-cubic-collapse",
        "vars": vnames(xs), "codomain_vars": vnames(ys),
        "X": [pstr(g) for g in IX], "Y": [], "f": [pstr(g) for g in f],
        "X_levels": lvls(Xlv, xs),
        "Y_levels": lvls(Ylv, ys),
    })

    # deliberately broken pair for the same map: both sides are valid Whitney
    # stratifications, but the node stratum maps into the open arc of P^1
    # (rank 0 < 1), so the verifier must reject it
    items.append({
        "name": "nodal-cubic-corrupted",
        "vars": vnames(xs), "codomain_vars": vnames(ys),
        "X": [pstr(g) for g in IX], "Y": [], "f": [pstr(g) for g in f],
        "X_levels": lvls(Xlv, xs),
        "Y_levels": [["1"], []],
        "reject": True,
    })
    write("maps.json", {"items": items})


# ------------------------------------------------------------------ main ----

ALL = {
    "kernel_battery": gen_kernel_battery,
    "conormal": gen_conormal,
    "decompose": gen_decompose,
    "stratify": gen_stratify,
    "maps": gen_maps,
}

if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    wanted = sys.argv[1:] or list(ALL)
    for name in wanted:
        ALL[name]()
    print("[%7.1fs] done" % (time.time() - T0), flush=True)
