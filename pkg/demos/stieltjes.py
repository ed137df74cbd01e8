"""Positive-real and Stieltjes checks, and a certified Stieltjes composition."""
import numpy as np

from realcomp import (HermClass, StieltjesParams, compose_stieltjes, degree_one_stieltjes,
                      is_positive_sampled, is_stieltjes_canonical, is_stieltjes_sampled,
                      rhp_grid, schur_psd_equiv, stieltjes_from_params)

grid = rhp_grid(100, seed=1)
f = degree_one_stieltjes(alpha=1.0, beta=2.0, delta=0.5)
print("degree-one function: positive", is_positive_sampled(f, grid),
      " Stieltjes", is_stieltjes_sampled(f, grid))

rng = np.random.default_rng(4)


def random_params(p, n):
    C = rng.normal(size=(p, n)) + 1j * rng.normal(size=(p, n))
    G = rng.normal(size=(n, n))
    H = rng.normal(size=(p, p))
    return StieltjesParams(C, G @ G.T + 0.1 * np.eye(n), H @ H.T)


R_L = stieltjes_from_params(random_params(2, 3))
R_R = stieltjes_from_params(random_params(3, 2))
print("inputs canonical:", is_stieltjes_canonical(R_L), is_stieltjes_canonical(R_R))

out, cert = compose_stieltjes(R_L, R_R)
print("composite canonical:", cert.canonical, " sampled Stieltjes:",
      is_stieltjes_sampled(out, grid))
print("certificate M:", cert.M_class.name, " W:", cert.W_class.name,
      f" residual {cert.residual:.1e}")
assert cert.M_class is HermClass.POSITIVE_DEFINITE

# a PSD block matrix and its two Schur complements agree
X, Z, Y = np.eye(2), np.array([[1.0, 0.0], [0.5, 1.0]]), 3 * np.eye(2)
rep = schur_psd_equiv(X, Z, Y)
print("Schur statements:", rep.i, rep.ii, rep.iii)
