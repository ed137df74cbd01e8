"""Build, evaluate, invert and multiply state-space realizations."""
import numpy as np

from realcomp import (Realization, evaluate, inverse_realization, kron_lift,
                      mcmillan_degree, product_realization)

# F(z) = 1 + 1/(z+1) + 2/(z+3), written as D + C (zI - A)^-1 B
F = Realization(np.diag([-1.0, -3.0]), [[1.0], [1.0]], [[1.0, 2.0]], [[1.0]])
z = 2.0 + 1.0j
print("F(z)          =", evaluate(F, z)[0, 0])
print("by hand       =", 1 + 1 / (z + 1) + 2 / (z + 3))

Finv = inverse_realization(F)
print("F^-1(z) F(z)  =", (evaluate(Finv, z) @ evaluate(F, z))[0, 0])

# the product keeps both state spaces, but the function is the constant 1
P = product_realization(F, Finv)
print("state dim of F F^-1:", P.n, " McMillan degree:", mcmillan_degree(P))

# I_3 (x) F is a 3x3 diagonal function
print("kron_lift(3, F)(z) diagonal:", np.diag(evaluate(kron_lift(3, F), z)).round(6))
