"""Stochastic-limit master equations for laser-driven atoms.

Bath coefficients from radial form factors, Lindblad-form generators with
time-dependent effective Hamiltonians, trajectory integration, stationary
states via the vectorized Liouvillian, and dark-state laser design for
lambda atoms.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
