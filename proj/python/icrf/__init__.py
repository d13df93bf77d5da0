"""Capacity regions, regime reports, and relay-placement maps for fading
interference channels with a relay, backed by the C++ core."""

try:
    from ._icrf import *  # noqa: F401,F403  (installed wheel layout)
    from . import _icrf as _backend  # noqa: F401
except ImportError:  # build-tree layout: _icrf.so sits on PYTHONPATH
    from _icrf import *  # noqa: F401,F403
    import _icrf as _backend  # noqa: F401

__version__ = "0.1.0"
