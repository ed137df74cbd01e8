"""Sample points for pointwise checks.

Two grids are used throughout:

* oracle points on the circles ``|z| = 1`` and ``|z| = 10``, kept at least
  ``margin`` away from every eigenvalue of the supplied state matrices;
* a right-half-plane grid for positivity checks, with log-spaced moduli in
  ``[1e-2, 1e2]`` and arguments uniform in ``(-pi/2, pi/2)``.
"""
import numpy as np

from .realization import evaluate

__all__ = ["oracle_points", "rhp_grid", "max_pointwise_error"]


def _eigenvalues(realizations):
    vals = [np.linalg.eigvals(R.A) for R in realizations if R.n]
    return np.concatenate(vals) if vals else np.zeros(0, dtype=complex)


def oracle_points(realizations=(), count=20, seed=0, radii=(1.0, 10.0), margin=1e-3):
    """Random points on the circles ``|z| = r`` avoiding all eigenvalues.

    Points alternate between the radii in ``radii``.
    """
    rng = np.random.default_rng(seed)
    poles = _eigenvalues(realizations)
    points = []
    while len(points) < count:
        r = radii[len(points) % len(radii)]
        z = r * np.exp(2j * np.pi * rng.uniform())
        if poles.size and np.min(np.abs(poles - z)) < margin:
            continue
        points.append(complex(z))
    return np.array(points)


def rhp_grid(count=50, seed=0, moduli=(1e-2, 1e2)):
    """Fixed grid in the open right half plane."""
    rng = np.random.default_rng(seed)
    r = np.logspace(np.log10(moduli[0]), np.log10(moduli[1]), count)
    theta = rng.uniform(-np.pi / 2, np.pi / 2, count)
    # keep strictly inside the open half plane
    theta = np.clip(theta, -np.pi / 2 + 1e-6, np.pi / 2 - 1e-6)
    return r * np.exp(1j * theta)


def max_pointwise_error(R, reference, points, relative=False):
    """Largest deviation between ``R(z)`` and ``reference(z)`` over ``points``.

    ``reference`` is any callable returning a matrix.  With ``relative``
    the error at each point is divided by the norm of the reference value.
    """
    worst = 0.0
    for z in points:
        ref = np.asarray(reference(z))
        err = np.linalg.norm(evaluate(R, z) - ref, 2) if ref.size else 0.0
        if relative:
            err /= max(np.linalg.norm(ref, 2), np.finfo(float).tiny)
        worst = max(worst, err)
    return worst
