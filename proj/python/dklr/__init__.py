"""Counting and enumerative coding of (d, k, l, r) run-length constrained sequences."""

from ._core import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
