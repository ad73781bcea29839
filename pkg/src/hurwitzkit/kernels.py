"""Backend selection for the hot kernels.

The compiled ``_ckernels`` module is used when it imports; otherwise, or when
``HURWITZKIT_PURE_PYTHON`` is set to a non-empty value, ``_pykernels`` is.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

if os.environ.get("HURWITZKIT_PURE_PYTHON") or _ckernels is None:
    impl = _pykernels
else:
    impl = _ckernels

BACKEND = impl.NAME


def available_backends():
    return tuple(_BACKENDS)


def get_backend(name=None):
    """Return the kernel module ``name`` (default: the selected one)."""
    if name is None:
        return impl
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} not available; have {available_backends()}") from None


def tables_for(group, backend=None):
    """Multiplication tables of ``group`` in the layout ``backend`` expects (cached)."""
    mod = get_backend(backend)
    cache = group.__dict__.setdefault("_kernel_tables", {})
    tab = cache.get(mod.NAME)
    if tab is None:
        tab = cache[mod.NAME] = mod.Tables(group.mul_table, group.inv_table)
    return tab
