"""Select the compiled table kernels when built, else the Python ones.

Set ``SMCTENSOR_PURE_PYTHON=1`` to force the fallback.
"""

import os

from ._kernels_py import AXIOM_NAMES

if os.environ.get("SMCTENSOR_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = "compiled" if _impl.__name__.endswith("._kernels") else "python"

assoc_violations = _impl.assoc_violations
identity_violations = _impl.identity_violations
functor_violations = _impl.functor_violations
naturality_violations = _impl.naturality_violations
bifunctor_violations = _impl.bifunctor_violations
monoidal_functor_violations = _impl.monoidal_functor_violations
smc_violations = _impl.smc_violations

__all__ = [
    "AXIOM_NAMES",
    "BACKEND",
    "assoc_violations",
    "identity_violations",
    "functor_violations",
    "naturality_violations",
    "bifunctor_violations",
    "monoidal_functor_violations",
    "smc_violations",
]
