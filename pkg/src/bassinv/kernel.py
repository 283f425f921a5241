"""Selects the term-arithmetic kernel at import time.

The compiled extension (`bassinv._core_cy`) is preferred; the pure-Python
kernel is the fallback.  Set BASSINV_KERNEL=py or =cy to force one, or use
`use()` / `set_backend()` from tests and benchmarks.
"""

import os
from contextlib import contextmanager

from . import _core_py


def _load_compiled():
    from . import _core_cy
    return _core_cy


def _initial():
    forced = os.environ.get("BASSINV_KERNEL", "")
    if forced == "py":
        return _core_py
    if forced == "cy":
        return _load_compiled()
    if forced:
        raise RuntimeError(f"BASSINV_KERNEL={forced!r}: expected 'py' or 'cy'")
    try:
        return _load_compiled()
    except ImportError:
        return _core_py


_impl = _initial()


def active():
    return _impl


def backend_name():
    return _impl.BACKEND


def available_backends():
    names = ["python"]
    try:
        _load_compiled()
        names.append("cython")
    except ImportError:
        pass
    return names


def set_backend(name):
    global _impl
    if name in ("py", "python"):
        _impl = _core_py
    elif name in ("cy", "cython"):
        _impl = _load_compiled()
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    return _impl


@contextmanager
def use(name):
    global _impl
    previous = _impl
    set_backend(name)
    try:
        yield _impl
    finally:
        _impl = previous
