"""State-space realizations and their basic calculus.

A :class:`Realization` stores ``(A, B, C, D)`` and represents

    F(z) = D + C (zI - A)^{-1} B,

a ``p x m``-valued rational function analytic at infinity with state
dimension ``n``.  ``n = 0`` is legal and denotes the constant ``D``.

The combinators here never reduce the state dimension; minimality is
checked separately (see :mod:`realcomp.spectral`).
"""
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import DimensionMismatch, NonSquare, PoleError, SingularMatrix
from .linalg import DEFAULT_TOL, as_matrix, eye, kron, mat_inverse, solve, zeros

__all__ = [
    "Realization",
    "evaluate",
    "similarity",
    "inverse_realization",
    "product_realization",
    "add_realization",
    "scale_realization",
    "shift_realization",
    "kron_lift",
]


def _frozen(M):
    M = np.array(M, dtype=complex)
    M.setflags(write=False)
    return M


@dataclass(frozen=True, eq=False)
class Realization:
    """Immutable realization ``(A, B, C, D)`` of ``D + C (zI - A)^{-1} B``.

    Parameters
    ----------
    A : (n, n) array_like
    B : (n, m) array_like
    C : (p, n) array_like
    D : (p, m) array_like

    Examples
    --------
    >>> R = Realization([[-1.0]], [[1.0]], [[1.0]], [[0.0]])
    >>> complex(R(1.0)[0, 0])
    (0.5+0j)
    """

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.A)
        D = as_matrix(self.D, name="D")
        p, m = D.shape
        n = 0 if A.size == 0 else as_matrix(A, name="A").shape[0]
        A = as_matrix(A, (n, n), "A") if n else zeros(0, 0)
        B = as_matrix(self.B, (n, m), "B") if n else zeros(0, m)
        C = as_matrix(self.C, (p, n), "C") if n else zeros(p, 0)
        if n and A.shape[0] != A.shape[1]:
            raise NonSquare(f"A must be square, got {A.shape}")
        for name, M in zip("ABCD", (A, B, C, D)):
            object.__setattr__(self, name, _frozen(M))

    @classmethod
    def constant(cls, D):
        """The constant function ``F(z) = D`` (empty state)."""
        D = as_matrix(D, name="D")
        return cls(zeros(0, 0), zeros(0, D.shape[1]), zeros(D.shape[0], 0), D)

    @property
    def n(self):
        return self.A.shape[0]

    @property
    def p(self):
        return self.D.shape[0]

    @property
    def m(self):
        return self.D.shape[1]

    @property
    def shape(self):
        """``(n, p, m)``."""
        return self.n, self.p, self.m

    @property
    def array(self):
        """The ``(n+p) x (n+m)`` block array ``[[A, B], [C, D]]``."""
        return np.block([[self.A, self.B], [self.C, self.D]])

    @classmethod
    def from_array(cls, R, n):
        """Split an ``(n+p) x (n+m)`` block array back into a realization."""
        R = as_matrix(R, name="realization array")
        return cls(R[:n, :n], R[:n, n:], R[n:, :n], R[n:, n:])

    def __call__(self, z, tol=DEFAULT_TOL):
        return evaluate(self, z, tol)

    def __repr__(self):
        n, p, m = self.shape
        return f"Realization(n={n}, p={p}, m={m})"


def evaluate(R, z, tol=DEFAULT_TOL):
    """Evaluate ``D + C (zI - A)^{-1} B`` at a complex point ``z``.

    Raises
    ------
    PoleError
        If ``zI - A`` is singular at tolerance ``tol``.
    """
    if R.n == 0:
        return np.array(R.D)
    try:
        X = solve(complex(z) * eye(R.n) - R.A, R.B, tol, what="zI - A")
    except SingularMatrix as exc:
        raise PoleError(f"z = {complex(z):.6g} is a pole candidate: {exc}") from None
    return R.D + R.C @ X


def similarity(R, S, tol=DEFAULT_TOL):
    """Change of state coordinates: ``(S^-1 A S, S^-1 B, C S, D)``."""
    S = as_matrix(S, (R.n, R.n), "S") if R.n else zeros(0, 0)
    Sinv = mat_inverse(S, tol, what="S")
    return Realization(Sinv @ R.A @ S, Sinv @ R.B, R.C @ S, R.D)


def inverse_realization(R, tol=DEFAULT_TOL):
    """Realization of ``F(z)^{-1}`` with the same state dimension.

    ``(A - B D^-1 C, -B D^-1, D^-1 C, D^-1)``; requires square, invertible
    ``D``.
    """
    if R.p != R.m:
        raise NonSquare(f"cannot invert a {R.p}x{R.m}-valued function")
    Dinv = mat_inverse(R.D, tol, what="D")
    return Realization(R.A - R.B @ Dinv @ R.C, -R.B @ Dinv, Dinv @ R.C, Dinv)


def product_realization(R1, R2):
    """Realization of the pointwise product ``F1(z) F2(z)``.

    The state is stacked as ``[x1; x2]`` with
    ``A = [[A1, B1 C2], [0, A2]]``, ``B = [B1 D2; B2]``,
    ``C = [C1, D1 C2]`` and ``D = D1 D2``.
    """
    if R1.m != R2.p:
        raise DimensionMismatch(
            f"inner dimensions differ: {R1.p}x{R1.m} times {R2.p}x{R2.m}")
    A = np.block([[R1.A, R1.B @ R2.C], [zeros(R2.n, R1.n), R2.A]])
    B = np.vstack([R1.B @ R2.D, R2.B])
    C = np.hstack([R1.C, R1.D @ R2.C])
    return Realization(A, B, C, R1.D @ R2.D)


def add_realization(R1, R2):
    """Realization of ``F1 + F2`` (block-diagonal state stacking)."""
    if (R1.p, R1.m) != (R2.p, R2.m):
        raise DimensionMismatch(
            f"cannot add {R1.p}x{R1.m} and {R2.p}x{R2.m} valued functions")
    A = sla.block_diag(R1.A, R2.A)
    return Realization(A, np.vstack([R1.B, R2.B]), np.hstack([R1.C, R2.C]),
                       R1.D + R2.D)


def scale_realization(R, c):
    """Realization of ``c F(z)`` for a complex scalar ``c``."""
    c = complex(c)
    return Realization(R.A, R.B, c * R.C, c * R.D)


def shift_realization(R, K):
    """Realization of ``F(z) + K`` for a constant ``p x m`` matrix ``K``."""
    K = as_matrix(K, (R.p, R.m), "K")
    return Realization(R.A, R.B, R.C, R.D + K)


def kron_lift(k, R):
    """Realization of ``I_k (x) F(z)``: every block Kronecker-lifted."""
    if k < 0:
        raise ValueError("k must be non-negative")
    Ik = eye(k)
    if R.n == 0:
        return Realization.constant(kron(Ik, R.D))
    return Realization(kron(Ik, R.A), kron(Ik, R.B), kron(Ik, R.C), kron(Ik, R.D))
