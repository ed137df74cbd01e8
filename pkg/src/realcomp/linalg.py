"""Dense complex matrix kernels.

Thin, tolerance-aware wrappers around numpy/scipy for the small dense
matrices (dimension at most a few hundred) that appear in realization
arithmetic.  Matrices are plain 2-D ``complex128`` numpy arrays.

All rank, singularity and diagonalizability decisions use one relative
tolerance, ``DEFAULT_TOL``, overridable per call.
"""
import enum
import warnings

import numpy as np
import scipy.linalg as sla

from .errors import DimensionMismatch, NonSquare, NotDiagonalizable, SingularMatrix

DEFAULT_TOL = 1e-9

__all__ = [
    "DEFAULT_TOL",
    "HermClass",
    "as_matrix",
    "eye",
    "zeros",
    "norm",
    "mat_mul",
    "mat_inverse",
    "solve",
    "kron",
    "eig_diagonalize",
    "eig_clusters",
    "herm_psd_check",
    "numeric_rank",
    "is_psd",
    "is_pd",
]


def as_matrix(x, shape=None, name="matrix"):
    """Convert ``x`` to a finite 2-D complex array.

    Scalars become 1x1 matrices.  A 1-D input is rejected unless ``shape``
    is given, in which case it is reshaped.  An optional ``shape`` (with
    ``None`` entries as wildcards) is enforced.
    """
    M = np.array(x, dtype=complex)
    if M.ndim == 0:
        M = M.reshape(1, 1)
    elif M.ndim == 1:
        if shape is None or None in shape:
            raise DimensionMismatch(f"{name} must be 2-D, got shape {M.shape}")
        M = M.reshape(shape)
    elif M.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-D, got {M.ndim}-D")
    if shape is not None:
        for axis, want in enumerate(shape):
            if want is not None and M.shape[axis] != want:
                raise DimensionMismatch(
                    f"{name} has shape {M.shape}, expected {tuple(shape)}")
    if not np.all(np.isfinite(M)):
        raise ValueError(f"{name} contains non-finite entries")
    return M


def eye(n):
    return np.eye(n, dtype=complex)


def zeros(rows, cols):
    return np.zeros((rows, cols), dtype=complex)


def norm(M):
    """Spectral norm; zero for empty matrices."""
    M = np.asarray(M)
    if M.size == 0:
        return 0.0
    return float(np.linalg.norm(M, 2))


def mat_mul(lhs, rhs):
    """Matrix product with an explicit shape check."""
    lhs = np.asarray(lhs, dtype=complex)
    rhs = np.asarray(rhs, dtype=complex)
    if lhs.ndim != 2 or rhs.ndim != 2 or lhs.shape[1] != rhs.shape[0]:
        raise DimensionMismatch(
            f"cannot multiply {lhs.shape} by {rhs.shape}")
    return lhs @ rhs


def _lu(M, tol, what):
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NonSquare(f"{what} must be square, got shape {M.shape}")
    n = M.shape[0]
    if n == 0:
        return None
    with warnings.catch_warnings():
        # exact zero pivots are reported below as SingularMatrix
        warnings.simplefilter("ignore", sla.LinAlgWarning)
        lu, piv = sla.lu_factor(M, check_finite=False)
    pivots = np.abs(np.diag(lu))
    scale = norm(M)
    if scale == 0.0 or pivots.min() <= tol * scale:
        raise SingularMatrix(
            f"{what} is singular at tolerance {tol:g} "
            f"(min pivot {pivots.min():.3e}, norm {scale:.3e})", what=what)
    return lu, piv


def solve(M, rhs, tol=DEFAULT_TOL, what="matrix"):
    """Solve ``M X = rhs`` with a pivoted LU factorization.

    Raises
    ------
    SingularMatrix
        If a pivot magnitude falls below ``tol * ||M||``.
    """
    rhs = np.asarray(rhs, dtype=complex)
    fac = _lu(M, tol, what)
    if rhs.shape[0] != np.shape(M)[0]:
        raise DimensionMismatch(
            f"right-hand side has {rhs.shape[0]} rows, expected {np.shape(M)[0]}")
    if fac is None:
        return rhs.copy()
    return sla.lu_solve(fac, rhs, check_finite=False)


def mat_inverse(M, tol=DEFAULT_TOL, what="matrix"):
    """Inverse of a square matrix via pivoted LU.

    Raises
    ------
    NonSquare
        If ``M`` is not square.
    SingularMatrix
        If a pivot magnitude falls below ``tol * ||M||``.
    """
    n = np.shape(M)[0] if np.ndim(M) == 2 else -1
    return solve(M, eye(max(n, 0)), tol=tol, what=what)


def kron(M, N):
    """Kronecker product: the block matrix ``[m_ij * N]``."""
    return np.kron(np.asarray(M, dtype=complex), np.asarray(N, dtype=complex))


def _square(A, what="A"):
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NonSquare(f"{what} must be square, got shape {A.shape}")
    return A


def _cluster(values, radius):
    # single-linkage clustering of points closer than ``radius``
    n = len(values)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= radius:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def eig_clusters(A, tol=DEFAULT_TOL):
    """Eigen-decomposition grouped into numerically distinct eigenvalues.

    Returns ``(W, clusters)`` where ``W`` holds unit-norm right eigenvectors
    as columns, and ``clusters`` is a list of ``(value, indices)`` pairs
    sorted lexicographically by ``(value.real, value.imag)``.  ``value`` is
    the mean of the clustered eigenvalues and ``indices`` select the
    matching columns of ``W``.

    Raises
    ------
    NotDiagonalizable
        If the eigenvector matrix is rank deficient at ``tol``.
    """
    A = _square(A)
    n = A.shape[0]
    if n == 0:
        return eye(0), []
    w, W = np.linalg.eig(A)
    W = W / np.linalg.norm(W, axis=0, keepdims=True)
    s = np.linalg.svd(W, compute_uv=False)
    if s[-1] <= tol * s[0]:
        raise NotDiagonalizable(
            f"eigenvector matrix is rank deficient (sigma_min/sigma_max = "
            f"{s[-1] / s[0]:.3e} <= {tol:g})")
    clusters = []
    for idx in _cluster(w, tol * norm(A)):
        idx = sorted(idx, key=lambda i: (w[i].real, w[i].imag))
        clusters.append((complex(np.mean(w[idx])), idx))
    clusters.sort(key=lambda c: (c[0].real, c[0].imag))
    return W, clusters


def eig_diagonalize(A, tol=DEFAULT_TOL):
    """Diagonalize ``A`` as ``A = inv(V) @ diag(eigenvalues) @ V``.

    The rows of ``V`` are left eigenvectors.  Eigenvalues are listed with
    multiplicity; eigenvalues within ``tol * ||A||`` of each other are
    merged to their mean and the groups are ordered by ``(re, im)``.

    Parameters
    ----------
    A : (n, n) array_like
    tol : float
        Relative tolerance for the rank test on the eigenvector matrix and
        for eigenvalue clustering.

    Returns
    -------
    V : (n, n) ndarray
    eigenvalues : (n,) ndarray

    Raises
    ------
    NotDiagonalizable
    """
    W, clusters = eig_clusters(A, tol)
    order = [i for _, idx in clusters for i in idx]
    values = np.array([val for val, idx in clusters for _ in idx], dtype=complex)
    W = W[:, order]
    V = np.linalg.inv(W) if W.size else W
    return V, values


class HermClass(enum.Enum):
    POSITIVE_DEFINITE = "PositiveDefinite"
    POSITIVE_SEMIDEFINITE = "PositiveSemiDefinite"
    INDEFINITE = "Indefinite"
    NOT_HERMITIAN = "NotHermitian"

    def __str__(self):
        return self.value


def herm_psd_check(H, tol=DEFAULT_TOL):
    """Classify a square matrix as PD / PSD / indefinite / non-Hermitian.

    ``H`` is non-Hermitian when ``||H - H*|| > tol ||H||``.  Otherwise the
    smallest eigenvalue of the Hermitian part is compared with
    ``+-tol ||H||``.  The empty matrix is positive definite.
    """
    H = _square(H, "H")
    if H.shape[0] == 0:
        return HermClass.POSITIVE_DEFINITE
    scale = norm(H)
    if norm(H - H.conj().T) > tol * scale:
        return HermClass.NOT_HERMITIAN
    lam = np.linalg.eigvalsh(0.5 * (H + H.conj().T))[0]
    if lam > tol * scale:
        return HermClass.POSITIVE_DEFINITE
    if lam >= -tol * scale:
        return HermClass.POSITIVE_SEMIDEFINITE
    return HermClass.INDEFINITE


def is_psd(H, tol=DEFAULT_TOL):
    return herm_psd_check(H, tol) in (HermClass.POSITIVE_DEFINITE,
                                      HermClass.POSITIVE_SEMIDEFINITE)


def is_pd(H, tol=DEFAULT_TOL):
    return herm_psd_check(H, tol) is HermClass.POSITIVE_DEFINITE


def numeric_rank(M, tol=DEFAULT_TOL):
    """Number of singular values above ``tol`` times the largest one."""
    M = np.asarray(M, dtype=complex)
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))
