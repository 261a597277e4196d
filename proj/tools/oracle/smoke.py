import time
import sympy as sp
from sympy import symbols
from oracle_lib import *

t0=time.time()
x,y,z = symbols('x y z')
V=[x,y]
# Ass(<x^2, xy>) = {<x>, <x,y>}
pd = primary_decomposition([x**2, x*y], V)
print("pd x2,xy:", [([pstr(g) for g in Q],[pstr(g) for g in P]) for Q,P in pd])

# min primes of cusp singular ideal
x0,x1,x2,x3 = symbols('x0 x1 x2 x3')
X=[x0,x1,x2,x3]
f = x0**2*x2**2 + x0*x3**3 - x1**2*x3**2
sing = [f] + [sp.diff(f,v) for v in X]
mp = min_primes(sing, X)
print("cusp sing primes:", [[pstr(g) for g in P] for P in mp])

# saturation <x^2*y> : x^inf = <y>
print("sat:", [pstr(g) for g in saturate_elem([x**2*y],x,V)])

# dims
print("dim twisted cubic:", proj_dim([x0*x2-x1**2, x1*x3-x2**2, x0*x3-x1*x2], X))
print("dim zero ideal P3:", proj_dim([], X) if False else affine_dim([],X)-1)
print("empty proj:", proj_dim([x0,x1,x2,x3],X))

# 4-point ideal
pd2 = min_primes([x**2-1, y**2-1], V)
print("4 pts:", [[pstr(g) for g in P] for P in pd2])

# conjugate pair stays prime over QQ
pd3 = min_primes([x**2-2, y-x], V)
print("sqrt2:", [[pstr(g) for g in P] for P in pd3])

# intersection of the two cusp lines
print("lines cap:", [pstr(g) for g in intersect([x0,x3],[x2,x3],X)])
print("%.1fs" % (time.time()-t0))
