"""Optional numba acceleration.

Kernels are written once as plain Python over numpy arrays and compiled with
``njit`` when numba is importable. Set ``ARGLAB_DISABLE_NUMBA=1`` to run the
interpreted path instead; the flag is read at import time.

Compiling costs seconds on a cold cache, so small inputs always take the
interpreted path; ``ARGLAB_JIT_MIN_SIZE`` (default 16) sets the problem size
from which compiled kernels are used.
"""
import functools
import os
import types

DISABLE_ENV = "ARGLAB_DISABLE_NUMBA"
MIN_SIZE_ENV = "ARGLAB_JIT_MIN_SIZE"


def _disabled_by_env():
    return os.environ.get(DISABLE_ENV, "").strip().lower() in {"1", "true", "yes", "on"}


try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USING_NUMBA = numba is not None and not _disabled_by_env()
JIT_MIN_SIZE = int(os.environ.get(MIN_SIZE_ENV, "16"))


def njit(*args, **kwargs):
    """``numba.njit`` when acceleration is on, identity otherwise.

    Either way the returned callable exposes ``py_func`` (the uncompiled
    function) so callers and benchmarks can reach the interpreted path.
    """

    def wrap(fn):
        if USING_NUMBA:
            return numba.njit(**kwargs)(fn)
        fn.py_func = fn
        return fn

    if len(args) == 1 and callable(args[0]) and not kwargs:
        return wrap(args[0])
    return wrap


@functools.lru_cache(maxsize=None)
def interpreted(kernel):
    """Fully interpreted version of ``kernel``.

    ``kernel.py_func`` alone would still call compiled helpers through its
    globals, so those references are rebound to their interpreted versions.
    """
    fn = kernel.py_func
    if not USING_NUMBA:
        return fn
    env = dict(fn.__globals__)
    for name in fn.__code__.co_names:
        value = env.get(name)
        if value is not kernel and isinstance(value, numba.core.registry.CPUDispatcher):
            env[name] = interpreted(value)
    clone = types.FunctionType(fn.__code__, env, fn.__name__, fn.__defaults__, fn.__closure__)
    clone.__doc__ = fn.__doc__
    return clone


def select(kernel, size):
    """The compiled kernel for inputs of at least JIT_MIN_SIZE, else the interpreted one."""
    return kernel if size >= JIT_MIN_SIZE else interpreted(kernel)
