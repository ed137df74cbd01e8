"""Realizations of composed rational functions.

Two notions of composing ``F_L`` with ``F_R`` are supported.

Version 1 substitutes ``F_R(z)`` for the scalar variable of ``F_L``.
For a scalar inner function this is ``D_L + C_L (f_R(z) I - A_L)^{-1} B_L``
(:func:`compose_v1_scalar_inner`); for a diagonalizable ``A_L`` it is a sum
of degree-one compositions (:func:`compose_v1_diag`, four variants); for a
scalar outer function with arbitrary ``A_L`` it is built in stages from the
inverse and Kronecker-lift constructions (:func:`compose_v1_scalar_outer`).
The state dimension is always the product of the two state dimensions.

Version 2 substitutes the matrix value ``F_R(z)`` for the argument of the
resolvent, ``D_L + C_L (F_R(z) - A_L)^{-1} B_L`` (:func:`compose_v2`), and
keeps the state dimension of ``F_R``.
"""
import numpy as np
import scipy.linalg as sla

from .errors import (CaseDimensionMismatch, DimensionMismatch, NotDiagonalizable,
                     NotScalarInner, SingularDelta, SingularMatrix, UnsupportedCase)
from .linalg import DEFAULT_TOL, eye, kron, mat_inverse, norm
from .realization import (Realization, inverse_realization, kron_lift,
                          shift_realization)
from .spectral import projection_realization

__all__ = [
    "DIAG_CASES",
    "compose_v1",
    "compose_v1_scalar_inner",
    "compose_v1_diag",
    "compose_v1_scalar_outer",
    "compose_v2",
    "pushthrough_identity_check",
]

DIAG_CASES = ("I", "IIa", "IIb", "III")


def compose_v1_scalar_inner(R_L, r_R, tol=DEFAULT_TOL):
    """Realize ``F_L(f_R(z)) = D_L + C_L (f_R(z) I_n - A_L)^{-1} B_L``.

    ``f_R`` must be scalar (1x1-valued) with state dimension ``m``; the
    result has state dimension ``m n``.  In block form::

        [[I_n (x) A_R, 0], [0, D_L]]
            + [[-I_n (x) b_R], [C_L]] (d_R I_n - A_L)^{-1} [[I_n (x) c_R, B_L]]

    Raises
    ------
    NotScalarInner
        If ``r_R`` is not 1x1-valued.
    SingularMatrix
        If ``d_R I_n - A_L`` is singular at ``tol``.
    """
    if (r_R.p, r_R.m) != (1, 1):
        raise NotScalarInner(f"inner function must be scalar, got {r_R.p}x{r_R.m}")
    n = R_L.n
    d_R = r_R.D[0, 0]
    Dhat_inv = mat_inverse(d_R * eye(n) - R_L.A, tol, what="d_R I - A_L")
    In = eye(n)
    A_hat = kron(In, r_R.A)
    B_hat = kron(In, r_R.B)
    C_hat = kron(In, r_R.C)
    return Realization(
        A_hat - B_hat @ Dhat_inv @ C_hat,
        -B_hat @ Dhat_inv @ R_L.B,
        R_L.C @ Dhat_inv @ C_hat,
        R_L.D + R_L.C @ Dhat_inv @ R_L.B,
    )


def _check_case(R_L, q, case):
    n, p, m = R_L.shape
    if case == "I":
        if q != n:
            raise CaseDimensionMismatch(f"case I needs F_R to be {n}x{n}-valued, got {q}x{q}")
    elif case in ("IIa", "IIb"):
        if p != m or q != p:
            raise CaseDimensionMismatch(
                f"case {case} needs F_L and F_R of equal square size, got "
                f"{p}x{m} and {q}x{q}")
    elif case == "III":
        if (p, m) != (1, 1):
            raise CaseDimensionMismatch(f"case III needs scalar F_L, got {p}x{m}")
    else:
        raise ValueError(f"unknown case {case!r}; expected one of {DIAG_CASES}")


def _auto_case(R_L, q):
    for case in ("I", "IIa", "III"):
        try:
            _check_case(R_L, q, case)
            return case
        except CaseDimensionMismatch:
            pass
    raise CaseDimensionMismatch(
        f"no composition case fits F_L {R_L.p}x{R_L.m} (n={R_L.n}) with F_R {q}x{q}")


def compose_v1_diag(R_L, R_R, case="auto", tol=DEFAULT_TOL):
    """Version-1 composition for diagonalizable ``A_L``.

    ``F_L`` is first written as ``D_L + sum_j C_j (z - a_j)^{-1} B_j`` over
    the eigenvalues ``a_j`` of ``A_L`` counted with multiplicity, and each
    term is composed with ``F_R`` through ``Delta_j = D_R - a_j I_q``:

    ``"I"``   (``q = n``)  ``D_L + sum_j C_j (F_R - a_j)^{-1} B_j``
    ``"IIa"`` (``q = p``)  ``D_L + sum_j (F_R - a_j)^{-1} C_j B_j``
    ``"IIb"`` (``q = p``)  ``D_L + sum_j C_j B_j (F_R - a_j)^{-1}``
    ``"III"`` (``p = 1``)  ``d_L I_q + sum_j eta_j (F_R - a_j)^{-1}``, ``eta_j = C_j B_j``

    The four variants share ``A_comp = blockdiag(A_R - B_R Delta_j^{-1} C_R)``
    and differ in ``B_comp``, ``C_comp`` and ``D_comp``.  ``case="auto"``
    picks the first of I, IIa, III whose dimensions fit.

    Parameters
    ----------
    R_L, R_R : Realization
        ``R_R`` must be square-valued (``q x q``).
    case : {"I", "IIa", "IIb", "III", "auto"}
    tol : float

    Returns
    -------
    Realization
        State dimension ``n * m``.

    Raises
    ------
    NotDiagonalizable
    SingularDelta
        Carries the offending index ``j`` (zero based) and eigenvalue.
    CaseDimensionMismatch
    """
    q = R_R.p
    if R_R.m != q:
        raise CaseDimensionMismatch(f"F_R must be square-valued, got {R_R.p}x{R_R.m}")
    if case == "auto":
        case = _auto_case(R_L, q)
    _check_case(R_L, q, case)

    pf = projection_realization(R_L, distinct=False, tol=tol)
    Iq = eye(q)
    D_L = R_L.D[0, 0] * Iq if case == "III" else R_L.D
    blocks_A, blocks_B, blocks_C = [], [], []
    D = np.array(D_L, dtype=complex)
    for j, (a, Bj, Cj) in enumerate(pf.terms):
        try:
            Dinv = mat_inverse(R_R.D - a * Iq, tol, what="D_R - a_j I")
        except SingularMatrix:
            raise SingularDelta(j, a) from None
        if case == "I":
            beta, gamma = Bj, Cj
        elif case == "IIa":
            beta, gamma = Cj @ Bj, Iq
        elif case == "IIb":
            beta, gamma = Iq, Cj @ Bj
        else:
            beta, gamma = Iq, (Cj @ Bj)[0, 0] * Iq
        blocks_A.append(R_R.A - R_R.B @ Dinv @ R_R.C)
        blocks_B.append(-R_R.B @ Dinv @ beta)
        blocks_C.append(gamma @ Dinv @ R_R.C)
        D = D + gamma @ Dinv @ beta
    if not pf.terms or R_R.n == 0:
        return Realization.constant(D)
    return Realization(sla.block_diag(*blocks_A), np.vstack(blocks_B),
                       np.hstack(blocks_C), D)


def compose_v1_scalar_outer(r_L, R_R, tol=DEFAULT_TOL):
    """Realize ``f_L(F_R(z))`` for scalar ``f_L`` and any (even defective) ``A_L``.

    Uses ``f_L(X) = d_L I + (C_L (x) I)(I_n (x) X - A_L (x) I)^{-1}(B_L (x) I)``
    and builds the realization in stages: Kronecker-lift ``F_R`` to
    ``I_n (x) F_R``, shift by ``-A_L (x) I_q``, invert, then fold the constant
    left and right factors into ``C``, ``B`` and ``D``.  State dimension
    ``n m``.

    Raises
    ------
    UnsupportedCase
        If ``r_L`` is not scalar.
    SingularMatrix
        If ``I_n (x) D_R - A_L (x) I_q`` is singular.
    """
    if (r_L.p, r_L.m) != (1, 1):
        raise UnsupportedCase(
            "stage-wise composition needs a scalar outer function; "
            f"got {r_L.p}x{r_L.m}")
    q = R_R.p
    if R_R.m != q:
        raise DimensionMismatch(f"F_R must be square-valued, got {R_R.p}x{R_R.m}")
    n = r_L.n
    Iq = eye(q)
    d_L = r_L.D[0, 0]
    if n == 0:
        return Realization.constant(d_L * Iq)
    lifted = shift_realization(kron_lift(n, R_R), -kron(r_L.A, Iq))
    try:
        inv = inverse_realization(lifted, tol)
    except SingularMatrix:
        raise SingularMatrix("I_n (x) D_R - A_L (x) I_q is singular at tolerance",
                             what="I (x) D_R - A_L (x) I") from None
    left = kron(r_L.C, Iq)
    right = kron(r_L.B, Iq)
    return Realization(inv.A, inv.B @ right, left @ inv.C,
                       d_L * Iq + left @ inv.D @ right)


def compose_v1(R_L, R_R, case="auto", tol=DEFAULT_TOL):
    """Dispatch to one of the version-1 constructions.

    ``case`` is one of ``"scalar-inner"``, ``"I"``, ``"IIa"``, ``"IIb"``,
    ``"III"``, ``"scalar-outer"`` or ``"auto"``.  Auto mode tries the
    diagonalizable variants first and falls back to the stage-wise
    construction for a scalar ``F_L`` with defective ``A_L``.
    """
    if case == "scalar-inner":
        return compose_v1_scalar_inner(R_L, R_R, tol)
    if case == "scalar-outer":
        return compose_v1_scalar_outer(R_L, R_R, tol)
    if case != "auto":
        return compose_v1_diag(R_L, R_R, case, tol)
    try:
        return compose_v1_diag(R_L, R_R, "auto", tol)
    except NotDiagonalizable:
        if (R_L.p, R_L.m) == (1, 1):
            return compose_v1_scalar_outer(R_L, R_R, tol)
        raise UnsupportedCase(
            "matrix-valued F_L with non-diagonalizable A_L has no version-1 "
            "construction") from None


def compose_v2(R_L, R_R, tol=DEFAULT_TOL):
    """Realize ``D_L + C_L (F_R(z) - A_L)^{-1} B_L``.

    ``F_R`` must be ``n x n``-valued where ``n`` is the state dimension of
    ``R_L``, and ``D_R - A_L`` must be nonsingular.  The result is
    ``p x p``-valued with the state dimension ``m`` of ``R_R``::

        A = A_R - B_R (D_R - A_L)^{-1} C_R     B = B_R (D_R - A_L)^{-1} B_L
        C = -C_L (D_R - A_L)^{-1} C_R          D = D_L + C_L (D_R - A_L)^{-1} B_L

    Raises
    ------
    DimensionMismatch
    SingularMatrix
    """
    n = R_L.n
    if (R_R.p, R_R.m) != (n, n):
        raise DimensionMismatch(
            f"F_R must be {n}x{n}-valued to match the state of F_L, got {R_R.p}x{R_R.m}")
    Xinv = mat_inverse(R_R.D - R_L.A, tol, what="D_R - A_L")
    return Realization(
        R_R.A - R_R.B @ Xinv @ R_R.C,
        R_R.B @ Xinv @ R_L.B,
        -R_L.C @ Xinv @ R_R.C,
        R_L.D + R_L.C @ Xinv @ R_L.B,
    )


def pushthrough_identity_check(X, Y, tol=DEFAULT_TOL):
    """Residual of ``(I + XY)^{-1} = I - X (I + YX)^{-1} Y``.

    ``X`` is ``n x m`` and ``Y`` is ``m x n``.  Returns the spectral norm of
    the difference of the two sides.

    Raises
    ------
    SingularMatrix
        If ``-1`` is (numerically) an eigenvalue of ``XY``.
    """
    X = np.asarray(X, dtype=complex)
    Y = np.asarray(Y, dtype=complex)
    n, m = X.shape
    if Y.shape != (m, n):
        raise DimensionMismatch(f"Y must be {m}x{n}, got {Y.shape}")
    lhs = mat_inverse(eye(n) + X @ Y, tol, what="I + XY")
    rhs = eye(n) - X @ mat_inverse(eye(m) + Y @ X, tol, what="I + YX") @ Y
    return norm(lhs - rhs)
