"""Finite disingquandle toolkit: axiom checking, structure search, and
coloring-counting invariants of dichromatic singular link diagrams."""

from pydsq._core import *  # noqa: F401,F403
from pydsq._core import __version__  # noqa: F401
