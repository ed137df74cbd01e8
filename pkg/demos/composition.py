"""Compose realizations: F_L(F_R(z)) in both senses."""
import numpy as np

from realcomp import (Realization, compose_v1, compose_v1_scalar_inner, compose_v2,
                      evaluate, mcmillan_degree)

rng = np.random.default_rng(3)
R_L = Realization(np.diag([-1.0, -2.0]), rng.normal(size=(2, 2)), rng.normal(size=(2, 2)),
                  np.eye(2))
r_R = Realization([[-0.5]], [[1.0]], [[1.0]], [[2.0]])  # 2 + 1/(z + 0.5)
z = 0.7 + 0.4j

# scalar substitution: F_L evaluated at the number f_R(z)
out = compose_v1_scalar_inner(R_L, r_R)
w = evaluate(r_R, z)[0, 0]
print("scalar inner, state dim", out.n, " error",
      np.linalg.norm(evaluate(out, z) - evaluate(R_L, w)))

# through the eigen-decomposition of A_L; with a matrix-valued F_R the
# variants place (F_R - a_j)^-1 on different sides, so their values differ
R_R = Realization(np.diag([-0.5, -1.5]), np.eye(2), np.eye(2), 3 * np.eye(2))
for case in ("I", "IIa", "IIb"):
    comp = compose_v1(R_L, R_R, case=case)
    print(f"case {case:3s} value at z:", np.round(evaluate(comp, z)[0], 6))

# matrix substitution into the resolvent: D_L + C_L (F_R(z) - A_L)^-1 B_L
v2 = compose_v2(R_L, R_R)
FR = evaluate(R_R, z)
ref = R_L.D + R_L.C @ np.linalg.solve(FR - R_L.A, R_L.B)
print("version 2, state dim", v2.n, " McMillan degree", mcmillan_degree(v2),
      " error", np.linalg.norm(evaluate(v2, z) - ref))
