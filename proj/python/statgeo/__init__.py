"""Geodesics, curvature and exchange statistics on economic state manifolds."""

from ._statgeo import *  # noqa: F401,F403
from ._statgeo import __doc__ as _native_doc  # noqa: F401

__version__ = "0.1.0"
