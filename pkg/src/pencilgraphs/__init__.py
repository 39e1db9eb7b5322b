"""Ordered-pencil graphs over binary projective space."""

from pencilgraphs.gf2 import SpaceCtx

__all__ = ["SpaceCtx"]
__version__ = "0.1.0"
