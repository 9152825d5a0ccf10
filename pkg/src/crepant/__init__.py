"""Exact-arithmetic checks of open and closed crepant resolution correspondences.

The package computes open and closed Gromov-Witten style potentials for a
threefold Z2 orbifold vertex and its resolution, entirely over the Gaussian
rationals, and verifies that independently computed routes to the same
quantity agree coefficient by coefficient.
"""

from .gauss import GaussRat, Rat
from .series import Caps, Monomial, TruncSeries, VarId

__version__ = "0.1.0"

__all__ = ["GaussRat", "Rat", "Caps", "Monomial", "TruncSeries", "VarId", "__version__"]
