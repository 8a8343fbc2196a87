"""Hot kernels with backend selection at import time.

The compiled Cython module is preferred; the pure-Python module is the
fallback.  Set SYMTRANS_PURE=1 to force the fallback (used by the
benchmark and to exercise both paths in CI).
"""

import os

if os.environ.get("SYMTRANS_PURE"):
    from symtrans._kernels import pure as _impl

    BACKEND = "pure"
else:
    try:
        from symtrans._kernels import _fast as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from symtrans._kernels import pure as _impl

        BACKEND = "pure"

int_matmul = _impl.int_matmul
int_commutator_is_zero = _impl.int_commutator_is_zero
int_product_is_zero = _impl.int_product_is_zero
int_rref = _impl.int_rref
int_det = _impl.int_det
_rk4_fill = _impl.rk4_fill


def rk4_quadratic(tensor, x0, v0, t_end, dt):
    """Integrate x'' = -T(x', x') from (x0, v0) over [0, t_end].

    Returns (ts, xs) numpy arrays of shape (steps+1,) and (steps+1, d),
    where steps = round(t_end / dt).
    """
    import numpy as np

    if dt <= 0 or t_end <= 0:
        raise ValueError("t_end and dt must be positive")
    steps = max(1, round(t_end / dt))
    T = np.ascontiguousarray(np.asarray(tensor, dtype=float))
    d = T.shape[0]
    ts = np.empty(steps + 1, dtype=float)
    xs = np.empty((steps + 1, d), dtype=float)
    _rk4_fill(
        T,
        np.ascontiguousarray(np.asarray(x0, dtype=float)),
        np.ascontiguousarray(np.asarray(v0, dtype=float)),
        float(dt),
        steps,
        ts,
        xs,
    )
    return ts, xs
