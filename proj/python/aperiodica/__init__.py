"""Aperiodic point sets, patch statistics and diffraction."""

from ._aperiodica import *  # noqa: F401,F403
from ._aperiodica import __version__  # noqa: F401
