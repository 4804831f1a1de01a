"""Kernel backend selection.

The compiled Cython kernel is used when available; set IYANG_KERNEL=py to
force the pure-Python twin (IYANG_KERNEL=c insists on the compiled one).
"""

import os

_choice = os.environ.get("IYANG_KERNEL", "").strip().lower()

if _choice in ("py", "python"):
    from . import _poly_py as impl
elif _choice in ("c", "cy", "cython"):
    from . import _poly_cy as impl  # type: ignore[no-redef]
else:
    try:
        from . import _poly_cy as impl  # type: ignore[no-redef]
    except ImportError:
        from . import _poly_py as impl

BACKEND = impl.BACKEND

norm3 = impl.norm3
c_add = impl.c_add
c_mul = impl.c_mul
c_neg = impl.c_neg
terms_add = impl.terms_add
terms_sub = impl.terms_sub
terms_neg = impl.terms_neg
terms_scale = impl.terms_scale
terms_mul = impl.terms_mul
terms_signed_permute = impl.terms_signed_permute
terms_leading = impl.terms_leading
terms_exact_div = impl.terms_exact_div
