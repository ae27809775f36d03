"""Finite groups with operations: internal groupoids, coverings and
crossed modules, with exhaustive validators and isomorphism search."""

from gwo._core import *  # noqa: F401,F403
from gwo._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc
