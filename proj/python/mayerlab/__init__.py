"""Two-slit beam fields, Bohmian trajectories and lattice field checks."""

from ._core import *  # noqa: F401,F403
