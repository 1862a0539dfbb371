"""Matrix kernels, compiled when available.

The Cython extension ``_ckernels`` is used when it was built; otherwise the
pure-Python module ``_pykernels`` is used.  Setting ``UKRUSKAL_PURE=1``
forces the fallback.  ``BACKEND`` names the active implementation.
"""

import os

import numpy as np

from . import _pykernels

if os.environ.get("UKRUSKAL_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

reflexivity_violation = _impl.reflexivity_violation
antisymmetry_violation = _impl.antisymmetry_violation
transitivity_violation = _impl.transitivity_violation
canonical_labeling = _impl.canonical_labeling
hig_witnesses = _impl.hig_witnesses
hig_min = _impl.hig_min
longest_bad = _impl.longest_bad


def as_matrix(rows):
    """Contiguous uint8 matrix from nested sequences of truthy values."""
    return np.ascontiguousarray(np.asarray(rows, dtype=np.uint8))


def order_violation(M):
    """First partial-order axiom violated by ``M`` as ``(axiom, indices)``, else None."""
    for name, check in (("reflexivity", reflexivity_violation),
                        ("antisymmetry", antisymmetry_violation),
                        ("transitivity", transitivity_violation)):
        bad = check(M)
        if bad is not None:
            return name, bad
    return None
