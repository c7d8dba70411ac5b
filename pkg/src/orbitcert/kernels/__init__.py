"""Kernel dispatch: compiled extension when built, pure Python otherwise.

Set ORBITCERT_PURE=1 to force the pure backend (used by the benchmark and the
parity tests).  ``BACKEND`` records which one is active.
"""

import os

if os.environ.get("ORBITCERT_PURE") == "1":
    from . import pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import pure as _impl

        BACKEND = "pure"

hamming_count = _impl.hamming_count
compose = _impl.compose
invert = _impl.invert
automorphisms = _impl.automorphisms
embedding_ok = _impl.embedding_ok
eppa_search_size = _impl.eppa_search_size
