"""State-space realization calculus for matrix-valued rational functions.

A rational function analytic at infinity is represented by a realization
``F(z) = D + C (zI - A)^{-1} B``.  The package provides inversion, products,
two kinds of composition, controllability and minimality tests, spectral
projections, positivity and Stieltjes certificates, and circuit combinators,
all as pure functions over immutable :class:`Realization` values.
"""
from .composition import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .linalg import *  # noqa: F401,F403
from .networks import *  # noqa: F401,F403
from .realization import *  # noqa: F401,F403
from .sampling import *  # noqa: F401,F403
from .serialization import *  # noqa: F401,F403
from .spectral import *  # noqa: F401,F403
from .stieltjes import *  # noqa: F401,F403

__version__ = "0.1.0"
