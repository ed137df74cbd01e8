"""Positive and Stieltjes rational functions.

A square-valued ``F`` is *positive* when it is analytic on the open right
half plane and ``F(z) + F(z)^*`` is positive semidefinite there.  It is a
*Stieltjes* function when, in addition, ``F(z) / (iz)`` is positive.

Two kinds of evidence are produced:

* sampling checks on a finite right-half-plane grid, which can refute but
  never prove positivity;
* algebraic certificates on the realization array itself.  A realization
  is *canonical* when ``-i diag(-I_n, I_p) [[A, B], [C, D]]`` is Hermitian
  positive semidefinite and ``A, B, C, D`` all have full rank; such a
  realization certifies a Stieltjes function.
"""
from dataclasses import dataclass, field

import numpy as np

from .composition import compose_v2
from .errors import (DimensionMismatch, EmptySampleSet, InvalidParams, NonSquare,
                     NotCanonical, PoleError, RankDeficient)
from .linalg import (DEFAULT_TOL, HermClass, as_matrix, herm_psd_check,
                     is_pd, is_psd, mat_inverse, norm, numeric_rank)
from .realization import Realization, evaluate

__all__ = [
    "StieltjesParams",
    "CompositionCertificate",
    "SchurReport",
    "hermitian_part_at",
    "is_positive_sampled",
    "is_stieltjes_sampled",
    "stieltjes_from_params",
    "stieltjes_from_gram",
    "degree_one_stieltjes",
    "kyp_residual",
    "canonical_matrix",
    "is_stieltjes_canonical",
    "stieltjes_compress",
    "compose_stieltjes",
    "schur_psd_equiv",
]


@dataclass(frozen=True)
class StieltjesParams:
    """Parameters of ``F(z) = i(C alpha^-1 C* + delta) + C (zI + i alpha)^-1 C*``.

    ``C`` is ``p x n`` of full rank, ``alpha`` is ``n x n`` Hermitian positive
    definite and ``delta`` is ``p x p`` Hermitian positive semidefinite.
    """

    C: np.ndarray
    alpha: np.ndarray
    delta: np.ndarray

    def validate(self, tol=DEFAULT_TOL):
        C = as_matrix(self.C, name="C")
        p, n = C.shape
        alpha = as_matrix(self.alpha, (n, n), "alpha")
        delta = as_matrix(self.delta, (p, p), "delta")
        if numeric_rank(C, tol) != min(p, n):
            raise InvalidParams("C must have full rank")
        if herm_psd_check(alpha, tol) is not HermClass.POSITIVE_DEFINITE:
            raise InvalidParams("alpha must be Hermitian positive definite")
        if herm_psd_check(delta, tol) not in (HermClass.POSITIVE_DEFINITE,
                                              HermClass.POSITIVE_SEMIDEFINITE):
            raise InvalidParams("delta must be Hermitian positive semidefinite")
        return C, alpha, delta


def hermitian_part_at(R, z, tol=DEFAULT_TOL):
    """``F(z) + F(z)^*``.  Raises :class:`PoleError` at a pole."""
    F = evaluate(R, z, tol)
    return F + F.conj().T


def _psd_against(H, scale, tol):
    # PSD test with the threshold tied to ||F(z)||, not ||H||: H may vanish
    # identically (lossless functions) and then carries only rounding noise
    if H.size == 0:
        return True
    lam = np.linalg.eigvalsh(0.5 * (H + H.conj().T))[0]
    return lam >= -tol * max(scale, np.finfo(float).tiny)


def _check_samples(samples):
    samples = np.atleast_1d(np.asarray(samples, dtype=complex))
    if samples.size == 0:
        raise EmptySampleSet("no sample points given")
    if np.any(samples.real <= 0):
        raise ValueError("all samples must lie in the open right half plane")
    return samples


def is_positive_sampled(R, samples, tol=DEFAULT_TOL):
    """Necessary-condition check for positivity on a finite sample set.

    Returns ``False`` if any sample is a pole or the Hermitian part there has
    an eigenvalue below ``-tol ||F(z)||``.  A ``True`` result is evidence,
    not proof.
    """
    if R.p != R.m:
        raise NonSquare("positivity needs a square-valued function")
    for z in _check_samples(samples):
        try:
            F = evaluate(R, z, tol)
        except PoleError:
            return False
        if not _psd_against(F + F.conj().T, norm(F), tol):
            return False
    return True


def is_stieltjes_sampled(R, samples, tol=DEFAULT_TOL):
    """:func:`is_positive_sampled` plus positivity of ``F(z) / (iz)``."""
    samples = _check_samples(samples)
    if not is_positive_sampled(R, samples, tol):
        return False
    for z in samples:
        G = evaluate(R, z, tol) / (1j * z)
        if not _psd_against(G + G.conj().T, norm(G), tol):
            return False
    return True


def stieltjes_from_params(params, tol=DEFAULT_TOL):
    """Canonical realization ``(-i alpha, C*, C, i(C alpha^-1 C* + delta))``.

    Raises
    ------
    InvalidParams
    """
    C, alpha, delta = params.validate(tol)
    Delta = C @ mat_inverse(alpha, tol, what="alpha") @ C.conj().T + delta
    return Realization(-1j * alpha, C.conj().T, C, 1j * Delta)


def stieltjes_from_gram(C, Delta, eta, tol=DEFAULT_TOL):
    """Canonical realization parametrized by the feedthrough instead of the state.

    ``F(z) = i Delta + C (zI + i(C* Delta^-1 C + eta))^-1 C*`` with ``C``
    ``p x n`` of full rank, ``Delta`` Hermitian positive definite and ``eta``
    Hermitian positive semidefinite.  Covers the case ``eta = 0``, in which
    the state matrix is determined by ``C`` and ``Delta`` alone.
    """
    C = as_matrix(C, name="C")
    p, n = C.shape
    Delta = as_matrix(Delta, (p, p), "Delta")
    eta = as_matrix(eta, (n, n), "eta")
    if numeric_rank(C, tol) != min(p, n):
        raise InvalidParams("C must have full rank")
    if not is_pd(Delta, tol):
        raise InvalidParams("Delta must be Hermitian positive definite")
    if not is_psd(eta, tol):
        raise InvalidParams("eta must be Hermitian positive semidefinite")
    alpha = C.conj().T @ mat_inverse(Delta, tol, what="Delta") @ C + eta
    return Realization(-1j * alpha, C.conj().T, C, 1j * Delta)


def degree_one_stieltjes(alpha, beta, delta=0.0):
    """Scalar ``i(delta + beta/alpha) + beta / (z + i alpha)``."""
    if alpha <= 0 or beta <= 0 or delta < 0:
        raise InvalidParams("need alpha > 0, beta > 0, delta >= 0")
    return stieltjes_from_params(
        StieltjesParams([[np.sqrt(beta)]], [[alpha]], [[delta]]))


def _signature(n, p):
    return np.diag(np.r_[-np.ones(n), np.ones(p)]).astype(complex)


def kyp_residual(R):
    """``|| J R + R* J ||`` with ``J = diag(-I_n, I_p)`` and ``R`` the array."""
    if R.p != R.m:
        raise NonSquare("the lossless KYP equation needs a square array")
    J = _signature(R.n, R.p)
    M = R.array
    return norm(J @ M + M.conj().T @ J)


def canonical_matrix(R):
    """``-i diag(-I_n, I_p) [[A, B], [C, D]]``."""
    if R.p != R.m:
        raise NonSquare("canonical form needs a square array")
    return -1j * _signature(R.n, R.p) @ R.array


def _full_rank(M, tol):
    return numeric_rank(M, tol) == min(M.shape) if M.size else True


def is_stieltjes_canonical(R, tol=DEFAULT_TOL):
    """Algebraic certificate that ``R`` realizes a Stieltjes function.

    True iff ``canonical_matrix(R)`` is Hermitian positive semidefinite at
    ``tol`` and each of ``A``, ``B``, ``C``, ``D`` has full rank.
    """
    if R.p != R.m:
        return False
    if herm_psd_check(canonical_matrix(R), tol) not in (
            HermClass.POSITIVE_DEFINITE, HermClass.POSITIVE_SEMIDEFINITE):
        return False
    return all(_full_rank(M, tol) for M in (R.A, R.B, R.C, R.D))


def stieltjes_compress(R, U, V, tol=DEFAULT_TOL):
    """Congruence ``diag(U, V) R diag(U, V)*`` of a canonical realization.

    ``U`` is ``nu x n`` and ``V`` is ``pi x p``, both of full row rank.  The
    result realizes a ``pi x pi``-valued Stieltjes function with state
    dimension ``nu``.

    Raises
    ------
    NotCanonical
    RankDeficient
    """
    if not is_stieltjes_canonical(R, tol):
        raise NotCanonical("input realization is not canonical")
    U = as_matrix(U, (None, R.n), "U")
    V = as_matrix(V, (None, R.p), "V")
    for name, M in (("U", U), ("V", V)):
        if M.shape[0] > M.shape[1] or numeric_rank(M, tol) != M.shape[0]:
            raise RankDeficient(f"{name} must have full row rank, shape {M.shape}")
    Uh, Vh = U.conj().T, V.conj().T
    return Realization(U @ R.A @ Uh, U @ R.B @ Vh, V @ R.C @ Uh, V @ R.D @ Vh)


@dataclass
class CompositionCertificate:
    """Evidence attached to :func:`compose_stieltjes`.

    ``M = Delta_R^-1 - (Delta_R + alpha_L)^-1`` and
    ``W = diag(eta, delta) + G M G*`` with ``G = [gamma_R*; -gamma_L alpha_L^-1 Delta_R]``.
    ``residual`` is ``|| canonical_matrix(result) - W ||``.
    """

    M: np.ndarray
    W: np.ndarray
    M_class: HermClass
    W_class: HermClass
    rank_W: int
    residual: float
    canonical: bool


def compose_stieltjes(R_L, R_R, tol=DEFAULT_TOL):
    """Version-2 composition of two canonical Stieltjes realizations.

    ``R_L`` is ``p x p``-valued with state dimension ``n``; ``R_R`` is
    ``n x n``-valued with state dimension ``m <= n``.  Returns the composed
    realization and a :class:`CompositionCertificate`.

    Raises
    ------
    NotCanonical
    DimensionMismatch
    """
    for name, R in (("left", R_L), ("right", R_R)):
        if not is_stieltjes_canonical(R, tol):
            raise NotCanonical(f"{name} realization is not canonical")
    n, m = R_L.n, R_R.n
    if R_R.p != n:
        raise DimensionMismatch(f"F_R must be {n}x{n}-valued, got {R_R.p}x{R_R.p}")
    if n < m:
        raise DimensionMismatch(f"need n >= m, got n={n}, m={m}")
    out = compose_v2(R_L, R_R, tol)

    alpha_L, gamma_L, Delta_L = 1j * R_L.A, -1j * R_L.C, -1j * R_L.D
    alpha_R, gamma_R, Delta_R = 1j * R_R.A, -1j * R_R.C, -1j * R_R.D
    Delta_R_inv = mat_inverse(Delta_R, tol, what="Delta_R")
    alpha_L_inv = mat_inverse(alpha_L, tol, what="alpha_L")
    delta = Delta_L - gamma_L @ alpha_L_inv @ gamma_L.conj().T
    eta = alpha_R - gamma_R.conj().T @ Delta_R_inv @ gamma_R
    M = Delta_R_inv - mat_inverse(Delta_R + alpha_L, tol, what="Delta_R + alpha_L")
    G = np.vstack([gamma_R.conj().T, -gamma_L @ alpha_L_inv @ Delta_R])
    p = R_L.p
    diag = np.zeros((m + p, m + p), dtype=complex)
    diag[:m, :m] = eta
    diag[m:, m:] = delta
    W = diag + G @ M @ G.conj().T
    cert = CompositionCertificate(
        M=M,
        W=W,
        M_class=herm_psd_check(M, tol),
        W_class=herm_psd_check(W, tol),
        rank_W=numeric_rank(W, tol),
        residual=norm(canonical_matrix(out) - W),
        canonical=is_stieltjes_canonical(out, tol),
    )
    return out, cert


@dataclass
class SchurReport:
    """Truth values of the three block-PSD statements and any violations.

    (i)   ``[[X, Z*], [Z, Y]]`` is PSD
    (ii)  ``Y`` PD and ``X - Z* Y^-1 Z`` PSD
    (iii) ``X`` PD and ``Y - Z X^-1 Z*`` PSD

    (ii) and (iii) each imply (i); (i) implies (ii) when ``n >= p`` and
    (iii) when ``p >= n``.
    """

    i: bool
    ii: bool
    iii: bool
    n: int
    p: int
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def schur_psd_equiv(X, Z, Y, tol=DEFAULT_TOL):
    """Evaluate the Schur-complement statements for full-rank ``Z`` (``p x n``).

    Raises
    ------
    RankDeficient
    """
    Z = as_matrix(Z, name="Z")
    p, n = Z.shape
    X = as_matrix(X, (n, n), "X")
    Y = as_matrix(Y, (p, p), "Y")
    if numeric_rank(Z, tol) != min(p, n):
        raise RankDeficient("Z must have full rank")
    big = np.block([[X, Z.conj().T], [Z, Y]])
    scale = norm(big)
    s_i = is_psd(big, tol)
    # complements may vanish exactly, so judge them against the block scale
    s_ii = is_pd(Y, tol) and _psd_against(X - Z.conj().T @ np.linalg.solve(Y, Z), scale, tol)
    s_iii = is_pd(X, tol) and _psd_against(Y - Z @ np.linalg.solve(X, Z.conj().T), scale, tol)
    violations = []
    if s_ii and not s_i:
        violations.append("(ii) holds but (i) fails")
    if s_iii and not s_i:
        violations.append("(iii) holds but (i) fails")
    if n >= p and s_i and not s_ii:
        violations.append("n >= p: (i) holds but (ii) fails")
    if p >= n and s_i and not s_iii:
        violations.append("p >= n: (i) holds but (iii) fails")
    return SchurReport(s_i, s_ii, s_iii, n, p, violations)
