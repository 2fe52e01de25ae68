"""Numba toggle.

Set TREEMAGIC_JIT=0 (or "false"/"no") before import to run the pure-Python
kernel fallbacks instead of the compiled ones; the same kernel source runs
either way. Falls back automatically when numba is not importable.
"""

import os

JIT_ENABLED = os.environ.get("TREEMAGIC_JIT", "1").strip().lower() not in ("0", "false", "no")

if JIT_ENABLED:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        JIT_ENABLED = False

if not JIT_ENABLED:

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap
