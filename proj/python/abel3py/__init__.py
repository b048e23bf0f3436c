"""Python bindings for the abel3 exact-arithmetic library."""

try:
    from ._abel3 import *  # noqa: F401,F403  (installed package layout)
    from . import _abel3 as _impl
except ImportError:
    from _abel3 import *  # noqa: F401,F403  (build-tree layout via PYTHONPATH)
    import _abel3 as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
