"""Structural analysis of realizations.

Controllability and observability (eigenvector and Krylov tests),
minimality, McMillan degree, and the oblique spectral projections of a
diagonalizable state matrix together with the partial-fraction
realization they induce.
"""
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NotDiagonalizable
from .linalg import DEFAULT_TOL, as_matrix, eig_clusters, norm, numeric_rank

__all__ = [
    "SpectralDecomposition",
    "PartialFractionForm",
    "pbh_controllable",
    "pbh_observable",
    "controllable_subspace",
    "kalman_controllable",
    "kalman_observable",
    "controllability_matrix",
    "observability_matrix",
    "hankel_rank",
    "is_minimal",
    "mcmillan_degree",
    "spectral_projections",
    "projection_realization",
]


@dataclass(frozen=True)
class SpectralDecomposition:
    """Distinct eigenvalues ``a_j`` with projections ``Pi_j`` and multiplicities.

    ``A = sum_j a_j Pi_j``, ``sum_j Pi_j = I`` and ``Pi_j Pi_k = delta_jk Pi_j``.
    """

    terms: list = field(default_factory=list)

    @property
    def eigenvalues(self):
        return [a for a, _, _ in self.terms]

    @property
    def projections(self):
        return [P for _, P, _ in self.terms]

    @property
    def multiplicities(self):
        return [k for _, _, k in self.terms]

    def reconstruct(self):
        """``sum_j a_j Pi_j``."""
        n = self.terms[0][1].shape[0] if self.terms else 0
        out = np.zeros((n, n), dtype=complex)
        for a, P, _ in self.terms:
            out += a * P
        return out

    def resolvent(self, z):
        """``(zI - A)^{-1}`` as ``sum_j Pi_j (z - a_j)^{-1} Pi_j``."""
        n = self.terms[0][1].shape[0] if self.terms else 0
        out = np.zeros((n, n), dtype=complex)
        for a, P, _ in self.terms:
            out += P @ P / (z - a)
        return out


@dataclass(frozen=True)
class PartialFractionForm:
    """``F(z) = D + sum_j C_j (z - a_j)^{-1} B_j`` with ``B_j = Pi_j B``, ``C_j = C Pi_j``."""

    D: np.ndarray
    terms: list = field(default_factory=list)

    def __call__(self, z):
        out = np.array(self.D, dtype=complex)
        for a, Bj, Cj in self.terms:
            out = out + (Cj @ Bj) / (z - a)
        return out

    @property
    def residues(self):
        """The constant matrices ``C_j B_j``."""
        return [Cj @ Bj for _, Bj, Cj in self.terms]


def _orth(M, tol):
    # orthonormal basis for the numerical range of M
    if M.size == 0:
        return np.zeros((M.shape[0], 0), dtype=complex)
    U, s, _ = np.linalg.svd(M, full_matrices=False)
    return U[:, s > tol * max(s[0], np.finfo(float).tiny)] if s[0] > 0 else U[:, :0]


def _eigenspaces(A, tol):
    W, clusters = eig_clusters(A, tol)
    Vleft = np.linalg.inv(W) if W.size else W
    return W, Vleft, clusters


def _pbh_blocks_full_rank(A, B, tol):
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    n = A.shape[0]
    if B.ndim != 2 or B.shape[0] != n:
        raise DimensionMismatch(f"B has shape {B.shape}, A is {n}x{n}")
    if n == 0:
        return True
    _, Vleft, clusters = _eigenspaces(A, tol)
    threshold = tol * max(norm(B), np.finfo(float).tiny)
    for _, idx in clusters:
        # orthonormal basis of the left eigenspace; rank of beta_j is basis-independent
        Q = _orth(Vleft[idx, :].conj().T, tol)
        if Q.shape[1] != len(idx):
            raise NotDiagonalizable("left eigenspace basis is rank deficient")
        beta = Q.conj().T @ B
        s = np.linalg.svd(beta, compute_uv=False) if beta.size else np.zeros(0)
        if np.sum(s > threshold) < len(idx):
            return False
    return True


def pbh_controllable(A, B, tol=DEFAULT_TOL):
    """Eigenvector (PBH) controllability test for diagonalizable ``A``.

    With ``A = V^{-1} diag(a_j I_{n_j}) V``, the pair is controllable iff
    each block ``beta_j`` of ``V B`` (the rows belonging to the left
    eigenspace of ``a_j``) has full row rank ``n_j``.  In particular more
    inputs than the largest multiplicity are needed.

    Raises
    ------
    NotDiagonalizable
    DimensionMismatch
    """
    return _pbh_blocks_full_rank(A, B, tol)


def pbh_observable(A, C, tol=DEFAULT_TOL):
    """Dual of :func:`pbh_controllable`: blocks ``gamma_j`` of ``C V^{-1}``."""
    A = np.asarray(A, dtype=complex)
    C = np.asarray(C, dtype=complex)
    return _pbh_blocks_full_rank(A.conj().T, C.conj().T, tol)


def controllable_subspace(A, B, tol=DEFAULT_TOL, scale=None):
    """Orthonormal basis of the reachable subspace ``range [B, AB, A^2 B, ...]``.

    Computed by an orthogonal Krylov (staircase) iteration, which avoids
    forming powers of ``A`` explicitly.  Directions of ``B`` with singular
    value below ``tol * scale`` are dropped; ``scale`` defaults to ``||B||``.
    """
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    n = A.shape[0]
    if n == 0 or B.size == 0:
        return np.zeros((n, 0), dtype=complex)
    scale = norm(B) if scale is None else scale
    if scale == 0.0:
        return np.zeros((n, 0), dtype=complex)
    U, s, _ = np.linalg.svd(B, full_matrices=False)
    basis = U[:, s > tol * scale]
    block = basis
    scale = norm(A)
    while block.shape[1] and basis.shape[1] < n:
        X = A @ block
        for _ in range(2):
            X = X - basis @ (basis.conj().T @ X)
        if X.size == 0 or scale == 0.0:
            break
        U, s, _ = np.linalg.svd(X, full_matrices=False)
        block = U[:, s > tol * scale]
        basis = np.hstack([basis, block])
    return basis


def kalman_controllable(A, B, tol=DEFAULT_TOL):
    """Krylov rank test: ``rank [B, AB, ..., A^{n-1} B] == n``."""
    return controllable_subspace(A, B, tol).shape[1] == np.shape(A)[0]


def kalman_observable(A, C, tol=DEFAULT_TOL):
    A = np.asarray(A, dtype=complex)
    C = np.asarray(C, dtype=complex)
    return kalman_controllable(A.conj().T, C.conj().T, tol)


def controllability_matrix(A, B):
    """``[B, AB, ..., A^{n-1} B]``."""
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    blocks = [B]
    for _ in range(A.shape[0] - 1):
        blocks.append(A @ blocks[-1])
    return np.hstack(blocks) if A.shape[0] else np.zeros((0, B.shape[1]), dtype=complex)


def observability_matrix(A, C):
    """``[C; CA; ...; C A^{n-1}]``."""
    A = np.asarray(A, dtype=complex)
    C = np.asarray(C, dtype=complex)
    return controllability_matrix(A.conj().T, C.conj().T).conj().T


def hankel_rank(R, tol=DEFAULT_TOL):
    """Literal ``rank(Obs(A, C) @ Ctrl(A, B))``.

    Forms explicit matrix powers, so only reliable for small, well-scaled
    ``A``; :func:`mcmillan_degree` computes the same quantity stably.
    """
    if R.n == 0:
        return 0
    return numeric_rank(observability_matrix(R.A, R.C) @ controllability_matrix(R.A, R.B), tol)


def mcmillan_degree(R, tol=DEFAULT_TOL):
    """McMillan degree: dimension of the controllable and observable part.

    Equals the rank of ``Obs(A, C) Ctrl(A, B)``; computed by restricting to
    the reachable subspace and then measuring the observable subspace of the
    restriction, both with the staircase iteration.
    """
    if R.n == 0:
        return 0
    Q = controllable_subspace(R.A, R.B, tol)
    if Q.shape[1] == 0:
        return 0
    Ar = Q.conj().T @ R.A @ Q
    Cr = R.C @ Q
    # Cr may be pure rounding noise, so measure it against the original C
    return controllable_subspace(Ar.conj().T, Cr.conj().T, tol, scale=norm(R.C)).shape[1]


def is_minimal(R, tol=DEFAULT_TOL):
    """Controllable and observable.

    Uses the eigenvector blocks when ``A`` is diagonalizable and falls back
    to the Krylov rank tests otherwise.
    """
    if R.n == 0:
        return True
    try:
        return pbh_controllable(R.A, R.B, tol) and pbh_observable(R.A, R.C, tol)
    except NotDiagonalizable:
        return kalman_controllable(R.A, R.B, tol) and kalman_observable(R.A, R.C, tol)


def spectral_projections(A, tol=DEFAULT_TOL):
    """Unique decomposition ``A = sum_j a_j Pi_j`` over distinct eigenvalues.

    ``Pi_j = V^{-1} E_j V`` where ``E_j`` selects the ``j``-th eigenvalue
    block.  Eigenvalues closer than ``tol * ||A||`` are treated as one.

    Raises
    ------
    NotDiagonalizable
    """
    A = as_matrix(A, name="A") if np.size(A) else np.zeros((0, 0), dtype=complex)
    if A.shape[0] == 0:
        return SpectralDecomposition([])
    W, Vleft, clusters = _eigenspaces(A, tol)
    terms = [(val, W[:, idx] @ Vleft[idx, :], len(idx)) for val, idx in clusters]
    return SpectralDecomposition(terms)


def projection_realization(R, distinct=False, tol=DEFAULT_TOL):
    """Partial-fraction form of ``R`` from the spectral projections of ``A``.

    Parameters
    ----------
    R : Realization
    distinct : bool
        ``False`` gives one rank-one term per eigenvalue counted with
        multiplicity; ``True`` one term per distinct eigenvalue.
    tol : float

    Returns
    -------
    PartialFractionForm
        Terms ``(a_j, Pi_j B, C Pi_j)`` sorted by eigenvalue.
    """
    if R.n == 0:
        return PartialFractionForm(np.array(R.D), [])
    W, Vleft, clusters = _eigenspaces(R.A, tol)
    terms = []
    for val, idx in clusters:
        groups = [idx] if distinct else [[i] for i in idx]
        for g in groups:
            P = W[:, g] @ Vleft[g, :]
            terms.append((val, P @ R.B, R.C @ P))
    return PartialFractionForm(np.array(R.D), terms)
