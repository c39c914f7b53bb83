"""Kernel backend selection.

The compiled extension is preferred when present; the numpy fallback is
used otherwise, or when ``MVQL_PURE_PYTHON`` is set in the environment.
Consumers access the active backend through the module attribute
``kernels`` (``_backend.kernels.quad_forms(...)``) so that benchmarks and
parity tests can swap it with :func:`set_backend`.
"""

from __future__ import annotations

import os

from . import _kernels_py

kernels = _kernels_py
BACKEND = "python"

if not os.environ.get("MVQL_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        kernels = _compiled
        BACKEND = "compiled"


def available_backends() -> dict:
    """Map of backend name to kernel module, for everything importable."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels as compiled
    except ImportError:
        pass
    else:
        out["compiled"] = compiled
    return out


def set_backend(name: str) -> None:
    """Switch the active kernel backend ('python' or 'compiled')."""
    global kernels, BACKEND
    modules = available_backends()
    if name not in modules:
        raise ValueError(f"backend {name!r} is not available; have {sorted(modules)}")
    kernels = modules[name]
    BACKEND = name
