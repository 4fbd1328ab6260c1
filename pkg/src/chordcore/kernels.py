"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``CHORDCORE_PURE=1`` to force the pure-Python kernels.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
dismantle_lex = _pykernels.dismantle_lex
gf2_rank = _pykernels.gf2_rank

if os.environ.get("CHORDCORE_PURE") != "1":
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        dismantle_lex = _kernels.dismantle_lex
        gf2_rank = _kernels.gf2_rank


def available_backends() -> dict[str, object]:
    """Every importable kernel module by name, for tests and benchmarks."""
    found: dict[str, object] = {"python": _pykernels}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        found["cython"] = _kernels
    return found
