import time
import sympy as sp
from sympy import symbols
from oracle_lib import *
t0=time.time()
x,y,z = symbols('x y z')
V=[x,y]
pd = primary_decomposition([x**2, x*y], V)
print("pd x2,xy:", [([pstr(g) for g in Q],[pstr(g) for g in P]) for Q,P in pd])
# x*(x,y,z) in 3 vars: Ass {<x>, <x,y,z>}
V3=[x,y,z]
pd2 = primary_decomposition([x**2, x*y, x*z], V3)
print("pd x2,xy,xz:", [([pstr(g) for g in Q],[pstr(g) for g in P]) for Q,P in pd2])
# radical ideal: decomposition = min primes
pd3 = primary_decomposition([x*y, x*z], V3)
print("pd xy,xz:", [([pstr(g) for g in Q],[pstr(g) for g in P]) for Q,P in pd3])
# mixed with conjugate points: (y - x^2) meet (x^2+1): V(y-x^2) cap ... use I = <(x^2+1)*(y-1), (x^2+1)*(x-y)>
I4 = [sp.expand((x**2+1)*(y-1)), sp.expand((x**2+1)*(x-y))]
pd4 = primary_decomposition(I4, V)
print("pd conj:", [([pstr(g) for g in Q],[pstr(g) for g in P]) for Q,P in pd4])
print("%.1fs" % (time.time()-t0))
