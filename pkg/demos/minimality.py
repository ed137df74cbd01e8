"""Controllability, observability and the McMillan degree."""
import numpy as np

from realcomp import (Realization, is_minimal, kalman_controllable, mcmillan_degree,
                      pbh_controllable, projection_realization)

A = np.diag([-1.0, -2.0, -2.0])
B = np.array([[1.0], [1.0], [1.0]])
C = np.array([[1.0, 1.0, 0.5]])
R = Realization(A, B, C, [[0.0]])

# a repeated eigenvalue with one input can never be controllable
print("PBH controllable:   ", pbh_controllable(A, B))
print("Kalman controllable:", kalman_controllable(A, B))
print("McMillan degree:", mcmillan_degree(R), "of", R.n, " minimal:", is_minimal(R))

# partial fractions over the distinct eigenvalues expose the redundant state
pf = projection_realization(R, distinct=True)
for a, Bj, Cj in pf.terms:
    print(f"pole {a.real:+.1f}: residue {(Cj @ Bj)[0, 0].real:.3f}")
