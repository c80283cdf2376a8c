"""Axiom-scan kernels.

The three covector-axiom checks are the hot inner loops of the whole package
(quadratic pair scans over the covector set, with an existence search inside
the strong-elimination scan).  A compiled Cython implementation is used when
it importable; otherwise the pure-Python reference implementation takes over.
Set ``COMKIT_PURE_PYTHON=1`` to force the fallback.

Both implementations take the covectors as a list of sign tuples (entries
-1/0/+1) and must return identical results; ``tests/test_kernels.py`` checks
the parity and ``benchmarks/backend_bench.py`` compares their speed.
"""

import os

from . import _pykernels

if os.environ.get("COMKIT_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "compiled"

# The compiled kernels pack each row into a base-3 int64 key.
_PACK_LIMIT = 39


def _route(rows):
    if _impl is not _pykernels and rows and len(rows[0]) > _PACK_LIMIT:
        return _pykernels
    return _impl


def compose_closed(rows) -> bool:
    return _route(rows).compose_closed(rows)


def face_symmetry_closed(rows) -> bool:
    return _route(rows).face_symmetry_closed(rows)


def strong_elimination_holds(rows) -> bool:
    return _route(rows).strong_elimination_holds(rows)
