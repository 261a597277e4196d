import time
import sympy as sp
from sympy import symbols
from oracle_lib import *
from strat_lib import *

x0,x1,x2,x3 = symbols('x0 x1 x2 x3')
xi0,xi1,xi2,xi3 = symbols('xi0 xi1 xi2 xi3')
XS=[x0,x1,x2,x3]; XI=[xi0,xi1,xi2,xi3]
f = x0**2*x2**2 + x0*x3**3 - x1**2*x3**2

t0=time.time()
C = conormal([f], XS, XI)
print("conormal cusp: %d gens, %.1fs" % (len(C), time.time()-t0))
for g in C: print("  ", pstr(g))

t0=time.time()
pr = decompose_projections([x2,x3], [f], XS, XI)
print("decompose(V(x2,x3)) %.1fs:" % (time.time()-t0))
for K,d in pr: print("   dim",d,":", [pstr(g) for g in K])
