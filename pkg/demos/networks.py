"""Driving-point impedances of small RC/LC networks."""
from realcomp import (Const, LCTank, Phi, RCShunt, Series, evaluate, flatten,
                      is_positive_sampled, ladder, rhp_grid)

# 1 ohm in series with two RC shunts, written two ways
tree = Series((Const([[1.0]]), RCShunt(1.0, 1.0), RCShunt(0.5, 0.25)))
Z = flatten(tree)
L = ladder(1.0, [(1.0, 1.0), (4.0, 8.0)])
for z in (0.5, 1.0 + 2.0j):
    print(f"z={z}: tree {evaluate(Z, z)[0, 0]:.6f}  ladder {evaluate(L, z)[0, 0]:.6f}")

# (F + G^-1)^-1 with an LC tank in the feedback position
fb = flatten(Phi(LCTank(1.0, 1.0), Series((Const([[2.0]]), RCShunt(1.0, 3.0)))))
print("feedback network state dim", fb.n, " positive real:",
      is_positive_sampled(fb, rhp_grid(100)))

# inverting a tank with no direct term fails with the failing node named
try:
    flatten(Series((Const([[1.0]]), Phi(Const([[1.0]]), LCTank(1.0, 1.0)))))
except Exception as exc:
    print(type(exc).__name__, "->", exc)
