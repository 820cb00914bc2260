"""Pick the bracket kernel: compiled extension when built, else pure Python.

Set ``BRUNNLINK_PURE_PYTHON=1`` to force the Python kernel.
"""

import os

from . import _bracket_py

try:
    if os.environ.get("BRUNNLINK_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _bracket_ext
    BACKEND = "compiled"
except ImportError:
    _bracket_ext = None
    BACKEND = "python"


def state_counts(quads):
    if _bracket_ext is not None:
        try:
            return _bracket_ext.state_counts(quads)
        except OverflowError:  # frontier wider than the compiled slot table
            pass
    return _bracket_py.state_counts(quads)
