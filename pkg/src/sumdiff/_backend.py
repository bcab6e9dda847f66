"""Backend selection: compiled kernel when available, pure Python otherwise.

Set SUMDIFF_BACKEND=python or SUMDIFF_BACKEND=compiled to force a choice;
the default ("auto") prefers the compiled extension.
"""
from __future__ import annotations

import os

_ENV_VAR = "SUMDIFF_BACKEND"


def _select():
    choice = os.environ.get(_ENV_VAR, "auto")
    if choice not in ("auto", "compiled", "python"):
        raise RuntimeError(f"{_ENV_VAR} must be 'auto', 'compiled' or 'python', got {choice!r}")
    if choice in ("auto", "compiled"):
        try:
            from . import _kernel

            return _kernel
        except ImportError:
            if choice == "compiled":
                raise RuntimeError(
                    "compiled kernel requested via SUMDIFF_BACKEND but the "
                    "extension is not built; install with the C extension or "
                    "use SUMDIFF_BACKEND=python"
                ) from None
    from . import _kernel_py

    return _kernel_py


kernel = _select()
BACKEND_NAME: str = kernel.BACKEND
