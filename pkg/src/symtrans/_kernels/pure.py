"""Pure-Python fallback for the hot kernels.

Same contracts as the compiled module ``_fast``:

* integer matrices are lists of row lists of Python ints (arbitrary
  precision is preserved throughout);
* ``int_rref`` returns a canonical integer echelon form: every row is
  primitive (gcd 1) with a positive pivot and zeros above and below each
  pivot, so two matrices have equal row spans iff the outputs are equal;
* ``rk4_fill`` integrates x'' = -T(x', x') in doubles, writing into
  caller-allocated buffers.
"""

from math import gcd


def int_matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def int_commutator_is_zero(a, b):
    """True iff a@b == b@a, with early exit."""
    n = len(a)
    for i in range(n):
        ai = a[i]
        bi = b[i]
        for j in range(n):
            ab = sum(ai[k] * b[k][j] for k in range(n))
            ba = sum(bi[k] * a[k][j] for k in range(n))
            if ab != ba:
                return False
    return True


def int_product_is_zero(a, b):
    """True iff a@b == 0, with early exit."""
    n = len(a)
    m = len(b[0])
    for i in range(n):
        ai = a[i]
        for j in range(m):
            if sum(ai[k] * b[k][j] for k in range(len(b))) != 0:
                return False
    return True


def _row_gcd(row):
    g = 0
    for v in row:
        if v:
            g = gcd(g, v if v > 0 else -v)
            if g == 1:
                return 1
    return g


def int_rref(rows):
    """Canonical integer reduced echelon form.

    Returns (reduced_rows, pivot_columns).  Rows are gcd-reduced after
    every elimination to bound coefficient growth.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if m[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv_row = m[r]
        g = _row_gcd(piv_row)
        if g > 1:
            piv_row = [v // g for v in piv_row]
        if piv_row[c] < 0:
            piv_row = [-v for v in piv_row]
        m[r] = piv_row
        pv = piv_row[c]
        for i in range(nrows):
            if i == r:
                continue
            w = m[i][c]
            if not w:
                continue
            row = [x * pv - y * w for x, y in zip(m[i], piv_row)]
            g = _row_gcd(row)
            if g > 1:
                row = [v // g for v in row]
            m[i] = row
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r] + m[r:], pivots


def int_det(a):
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            swap = -1
            for i in range(k + 1, n):
                if m[i][k]:
                    swap = i
                    break
            if swap < 0:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            mi = m[i]
            mk = m[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pkk - mik * mk[j]) // prev
            mi[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def rk4_fill(tensor, x0, v0, dt, steps, ts_out, xs_out):
    """Classic RK4 for x'' = -T(x', x'); fills ts_out and xs_out in place.

    tensor: (d, d, d) C-contiguous float buffer with T[a][b][c];
    xs_out: (steps + 1, d); ts_out: (steps + 1,).
    """
    import numpy as np

    T = np.asarray(tensor)
    x = np.asarray(x0, dtype=float).copy()
    v = np.asarray(v0, dtype=float).copy()

    def acc(vel):
        return -np.einsum("abc,b,c->a", T, vel, vel)

    ts_out[0] = 0.0
    xs_out[0, :] = x
    h = dt
    for s in range(1, steps + 1):
        k1x = v
        k1v = acc(v)
        k2x = v + 0.5 * h * k1v
        k2v = acc(k2x)
        k3x = v + 0.5 * h * k2v
        k3v = acc(k3x)
        k4x = v + h * k3v
        k4v = acc(k4x)
        x = x + (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
        v = v + (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        ts_out[s] = s * h
        xs_out[s, :] = x
    return None
