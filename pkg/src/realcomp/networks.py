"""Circuit elements and feedback combinators as realizations.

Only proper building blocks are leaves: an isolated inductor ``zL`` or
capacitor admittance ``zC`` is not analytic at infinity and has no
realization, so the parallel LC pair is exposed through its closed form.

Network expressions are small trees::

    Series([Const([[0.5]]), RCShunt(1.0, 2.0)])
    Phi(F, G)          # (F + G^-1)^-1

which :func:`flatten` reduces to a single :class:`Realization`.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonPositiveElement, NonSquare, RealizationError
from .linalg import DEFAULT_TOL, as_matrix
from .realization import Realization, add_realization, inverse_realization
from .serialization import (DocumentError, decode_matrix, encode_matrix,
                            realization_from_dict, realization_to_dict)

__all__ = [
    "rc_shunt",
    "lc_tank",
    "ladder",
    "phi",
    "Const",
    "Leaf",
    "RCShunt",
    "LCTank",
    "Series",
    "Phi",
    "flatten",
    "network_to_dict",
    "network_from_dict",
]


def _positive(**values):
    for name, v in values.items():
        v = float(v)
        if not (np.isfinite(v) and v > 0):
            raise NonPositiveElement(f"{name} must be positive, got {v}")


def rc_shunt(resistance, capacitance):
    """Impedance of a resistor in parallel with a capacitor.

    ``(1/R + zC)^-1 = gamma / (z + a)`` with ``gamma = 1/C`` and
    ``a = 1/(RC)``.

    Examples
    --------
    >>> complex(rc_shunt(1.0, 1.0)(1.0)[0, 0])
    (0.5+0j)
    """
    _positive(resistance=resistance, capacitance=capacitance)
    R, C = float(resistance), float(capacitance)
    return Realization([[-1.0 / (R * C)]], [[1.0]], [[1.0 / C]], [[0.0]])


def lc_tank(inductance, capacitance):
    """Impedance of an inductor in parallel with a capacitor.

    ``((zL)^-1 + zC)^-1 = (1/C) z / (z^2 + 1/(LC))``, lossless, with poles
    at ``+-i/sqrt(LC)``.
    """
    _positive(inductance=inductance, capacitance=capacitance)
    L, C = float(inductance), float(capacitance)
    return Realization([[0.0, -1.0 / (L * C)], [1.0, 0.0]], [[1.0], [0.0]],
                       [[1.0 / C, 0.0]], [[0.0]])


def ladder(d_L, branches):
    """Series resistor followed by RC shunt branches.

    ``d_L + sum_j gamma_j / (z + a_j)``, realized with diagonal state
    matrix ``diag(-a_j)``.

    Parameters
    ----------
    d_L : float
        Series resistance, ``>= 0``.
    branches : sequence of (gamma_j, a_j)
        Both strictly positive.
    """
    d_L = float(d_L)
    if not (np.isfinite(d_L) and d_L >= 0):
        raise NonPositiveElement(f"d_L must be non-negative, got {d_L}")
    branches = list(branches)
    if not branches:
        return Realization.constant([[d_L]])
    for j, (g, a) in enumerate(branches):
        _positive(**{f"gamma[{j}]": g, f"a[{j}]": a})
    gammas = np.array([float(g) for g, _ in branches])
    rates = np.array([float(a) for _, a in branches])
    k = len(branches)
    return Realization(np.diag(-rates), np.ones((k, 1)), gammas[None, :], [[d_L]])


def phi(F, G, tol=DEFAULT_TOL):
    """Feedback / parallel combination ``(F + G^-1)^-1``.

    Requires square-valued ``F`` and ``G`` of equal size, ``D_G`` invertible
    and ``D_F + D_G^-1`` invertible; these are checked by the two inversions.

    Raises
    ------
    NonSquare, DimensionMismatch, SingularMatrix
    """
    if F.p != F.m or G.p != G.m:
        raise NonSquare("phi needs square-valued operands")
    if F.p != G.p:
        raise DimensionMismatch(f"phi operands are {F.p}x{F.p} and {G.p}x{G.p}")
    return inverse_realization(add_realization(F, inverse_realization(G, tol)), tol)


@dataclass(frozen=True)
class Const:
    D: object


@dataclass(frozen=True)
class Leaf:
    realization: Realization


@dataclass(frozen=True)
class RCShunt:
    R: float
    C: float


@dataclass(frozen=True)
class LCTank:
    L: float
    C: float


@dataclass(frozen=True)
class Series:
    terms: tuple


@dataclass(frozen=True)
class Phi:
    F: object
    G: object


def _annotate(exc, step):
    # prepend the tree step to the error path and message
    path = [step] + list(getattr(exc, "path", []))
    msg = exc.args[0] if exc.args else ""
    base = getattr(exc, "_base_message", msg)
    exc._base_message = base
    exc.path = path
    exc.args = (f"at {'/'.join(path)}: {base}",) + tuple(exc.args[1:])
    return exc


def _flatten(expr, tol):
    if isinstance(expr, Const):
        return Realization.constant(as_matrix(expr.D, name="D"))
    if isinstance(expr, Leaf):
        return expr.realization
    if isinstance(expr, RCShunt):
        return rc_shunt(expr.R, expr.C)
    if isinstance(expr, LCTank):
        return lc_tank(expr.L, expr.C)
    if isinstance(expr, Series):
        if not expr.terms:
            raise DimensionMismatch("series with no terms")
        out = None
        for i, term in enumerate(expr.terms):
            try:
                R = _flatten(term, tol)
                out = R if out is None else add_realization(out, R)
            except RealizationError as exc:
                raise _annotate(exc, f"series[{i}]")
        return out
    if isinstance(expr, Phi):
        parts = {}
        for label in ("F", "G"):
            try:
                parts[label] = _flatten(getattr(expr, label), tol)
            except RealizationError as exc:
                raise _annotate(exc, f"phi.{label}")
        try:
            return phi(parts["F"], parts["G"], tol)
        except RealizationError as exc:
            raise _annotate(exc, "phi")
    raise TypeError(f"not a network expression: {expr!r}")


def flatten(expr, tol=DEFAULT_TOL):
    """Reduce a network expression to one realization.

    Series nodes add their terms, Phi nodes apply :func:`phi`.  Errors raised
    inside the tree carry a ``path`` attribute (also prefixed to the message)
    locating the failing node.
    """
    return _flatten(expr, tol)


def network_to_dict(expr):
    """Tagged-union JSON encoding with a ``kind`` field."""
    if isinstance(expr, Const):
        return {"kind": "const", "D": encode_matrix(as_matrix(expr.D, name="D"))}
    if isinstance(expr, Leaf):
        return {"kind": "leaf", "realization": realization_to_dict(expr.realization)}
    if isinstance(expr, RCShunt):
        return {"kind": "rc_shunt", "R": float(expr.R), "C": float(expr.C)}
    if isinstance(expr, LCTank):
        return {"kind": "lc_tank", "L": float(expr.L), "C": float(expr.C)}
    if isinstance(expr, Series):
        return {"kind": "series", "terms": [network_to_dict(t) for t in expr.terms]}
    if isinstance(expr, Phi):
        return {"kind": "phi", "F": network_to_dict(expr.F), "G": network_to_dict(expr.G)}
    raise TypeError(f"not a network expression: {expr!r}")


def _real(doc, key):
    v = doc.get(key)
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise DocumentError(f"'{key}' must be a number")
    return float(v)


def network_from_dict(doc):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise DocumentError("network node must be an object with a 'kind' field")
    kind = doc["kind"]
    if kind == "const":
        D = doc.get("D")
        if isinstance(D, (int, float, list)) and not isinstance(D, bool) and not (
                isinstance(D, list) and D and isinstance(D[0], list)):
            D = [[D]]
        if not isinstance(D, list) or not D:
            raise DocumentError("'D' must be a non-empty matrix")
        return Const(decode_matrix(D, (len(D), len(D[0])), "D"))
    if kind == "leaf":
        return Leaf(realization_from_dict(doc.get("realization")))
    if kind == "rc_shunt":
        return RCShunt(_real(doc, "R"), _real(doc, "C"))
    if kind == "lc_tank":
        return LCTank(_real(doc, "L"), _real(doc, "C"))
    if kind == "series":
        terms = doc.get("terms")
        if not isinstance(terms, list):
            raise DocumentError("'terms' must be a list")
        return Series(tuple(network_from_dict(t) for t in terms))
    if kind == "phi":
        return Phi(network_from_dict(doc.get("F")), network_from_dict(doc.get("G")))
    raise DocumentError(f"unknown network node kind {kind!r}")
