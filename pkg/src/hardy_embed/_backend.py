"""Backend selection: compiled extension when available, numpy fallback otherwise.

Set HARDY_EMBED_BACKEND=python or =compiled to force a choice (the benchmark
uses this to time both implementations).
"""

import os

_choice = os.environ.get("HARDY_EMBED_BACKEND", "auto").lower()

if _choice not in ("auto", "compiled", "python"):
    raise ValueError(f"HARDY_EMBED_BACKEND must be auto/compiled/python, got {_choice!r}")

if _choice == "python":
    from . import _core_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise
        from . import _core_py as _impl

        BACKEND = "python"

kernel_matvec = _impl.kernel_matvec
quadratic_form = _impl.quadratic_form
inverse_square_tail = _impl.inverse_square_tail
