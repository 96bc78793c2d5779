"""Convergence acceleration of numeric sequences over exact rationals."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
