"""Exact Pell, Mukai-lattice and movable-cone computations for Hilbert schemes of K3 surfaces."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
