"""Backend dispatch for the hot numeric primitives.

Two interchangeable implementations exist: a numba-compiled one
(_kernels_nb) and a pure-numpy one (_kernels_np).  The default is numba
when it imports cleanly, numpy otherwise.  Set LERCHZETA_BACKEND=numpy or
=numba before import to force a choice, or call use() at runtime (the
benchmark does) to switch.

Callers must access the primitives as attributes, e.g.
``backend.series_sum(...)``, so a use() call takes effect immediately.
"""

from __future__ import annotations

import os

from . import _kernels_np

_PRIMITIVES = (
    "series_sum",
    "lerch_kernel_values",
    "exp_sum_values",
    "weight_values",
    "power_values",
)

_active = "numpy"


def _load(name: str):
    if name == "numpy":
        return _kernels_np
    if name == "numba":
        from . import _kernels_nb
        return _kernels_nb
    raise ValueError(f"unknown backend {name!r}; expected 'numpy' or 'numba'")


def use(name: str) -> None:
    """Switch the active backend; name is 'numpy' or 'numba'."""
    global _active
    mod = _load(name)
    for prim in _PRIMITIVES:
        globals()[prim] = getattr(mod, prim)
    _active = name


def current() -> str:
    """Name of the active backend."""
    return _active


def _initial() -> str:
    choice = os.environ.get("LERCHZETA_BACKEND", "").strip().lower()
    if choice in ("numpy", "numba"):
        return choice
    if choice:
        raise ValueError(
            f"LERCHZETA_BACKEND={choice!r}; expected 'numpy' or 'numba'")
    try:
        _load("numba")
    except ImportError:
        return "numpy"
    return "numba"


use(_initial())
