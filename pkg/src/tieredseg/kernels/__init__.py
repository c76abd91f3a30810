"""Kernel backend selection.

Two interchangeable backends provide the hot loops (patch unfolding, 2x2
max pooling, column-path dynamic programming): a compiled Cython extension
and a pure-NumPy fallback. The compiled one is used when built; set
``TIEREDSEG_KERNELS=numpy`` or ``=c`` to force a choice. Both produce
bit-identical results; ``benchmarks/bench_kernels.py`` compares speed.
"""
import os

from . import numpy_backend

_backends = {"numpy": numpy_backend}
try:
    from . import _ckern

    _backends["c"] = _ckern
except ImportError:
    _ckern = None

_forced = os.environ.get("TIEREDSEG_KERNELS", "").strip().lower()
if _forced:
    if _forced not in _backends:
        raise ImportError(
            f"TIEREDSEG_KERNELS={_forced!r} not available; "
            f"choices: {sorted(_backends)}"
        )
    _active = _backends[_forced]
else:
    _active = _backends.get("c", numpy_backend)


def available():
    """Names of the usable backends."""
    return sorted(_backends)


def active_name():
    """Name of the backend currently in use."""
    return "c" if _active is _backends.get("c") else "numpy"


def use(name):
    """Switch the active backend at runtime (mainly for benchmarks/tests)."""
    global _active
    if name not in _backends:
        raise ValueError(f"unknown kernel backend {name!r}; choices: {sorted(_backends)}")
    _active = _backends[name]


def im2col(x, k):
    return _active.im2col(x, k)


def maxpool2x2(x):
    return _active.maxpool2x2(x)


def maxpool2x2_backward(grad, idx):
    return _active.maxpool2x2_backward(grad, idx)


def viterbi_path(cost, floor, lam, jump):
    return _active.viterbi_path(cost, floor, lam, jump)
