"""Python face of the coupled-wave numerical laboratory.

The compiled core is normally installed next to this file (wheel layout).
For in-tree use the WAVELAB_CORE_DIR environment variable may point at the
directory that holds the compiled module (e.g. the CMake build tree).
"""

import importlib
import os
import sys

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _core_doc  # noqa: F401
except ImportError:  # in-tree layout: compiled module lives in the build dir
    _core_dir = os.environ.get("WAVELAB_CORE_DIR")
    if not _core_dir:
        raise
    if _core_dir not in sys.path:
        sys.path.insert(0, _core_dir)
    _core = importlib.import_module("_core")
    _names = [_n for _n in dir(_core) if not _n.startswith("_")]
    globals().update({_n: getattr(_core, _n) for _n in _names})
    del _core, _names

__all__ = [n for n in dir() if not n.startswith("_")]
