import os
from types import ModuleType

ENV_FLAG = "CHAINLOOP_NO_JIT"


def load(name: str | None = None) -> ModuleType:
    """Return the kernel module: ``"numba"``, ``"numpy"``, or the default.

    The default is numba unless ``CHAINLOOP_NO_JIT`` is set to a truthy
    value or numba fails to import.
    """
    if name is None:
        name = "numpy" if os.environ.get(ENV_FLAG, "").lower() in ("1", "true", "yes") else "numba"
    if name == "numba":
        try:
            from . import _kernels_numba
        except ImportError:
            name = "numpy"
        else:
            return _kernels_numba
    if name != "numpy":
        raise ValueError(f"unknown backend {name!r}")
    from . import _kernels_numpy

    return _kernels_numpy


kernels = load()
BACKEND = "numba" if kernels.__name__.endswith("_numba") else "numpy"
