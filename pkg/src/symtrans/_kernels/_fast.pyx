# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.

Integer routines keep entries as Python ints (arbitrary precision
preserved); Cython removes the interpreter overhead of the inner loops.
The RK4 stepper runs entirely in C doubles.  Contracts match
symtrans._kernels.pure exactly.
"""

from libc.stdlib cimport free, malloc


def int_matmul(a, b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t kk = len(b)
    cdef Py_ssize_t m = len(b[0]) if kk else 0
    cdef Py_ssize_t i, j, t
    cdef list out = []
    cdef list bt = [[b[t][j] for t in range(kk)] for j in range(m)]
    cdef list row, col, new_row
    cdef object acc
    for i in range(n):
        row = a[i]
        new_row = []
        for j in range(m):
            col = bt[j]
            acc = 0
            for t in range(kk):
                acc += row[t] * col[t]
            new_row.append(acc)
        out.append(new_row)
    return out


def int_commutator_is_zero(a, b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, t
    cdef list ai, bi
    cdef object ab, ba
    for i in range(n):
        ai = a[i]
        bi = b[i]
        for j in range(n):
            ab = 0
            ba = 0
            for t in range(n):
                ab += ai[t] * b[t][j]
                ba += bi[t] * a[t][j]
            if ab != ba:
                return False
    return True


def int_product_is_zero(a, b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t kk = len(b)
    cdef Py_ssize_t m = len(b[0]) if kk else 0
    cdef Py_ssize_t i, j, t
    cdef list ai
    cdef object acc
    for i in range(n):
        ai = a[i]
        for j in range(m):
            acc = 0
            for t in range(kk):
                acc += ai[t] * b[t][j]
            if acc != 0:
                return False
    return True


cdef object _row_gcd(list row):
    cdef object g = 0
    cdef object v
    for v in row:
        if v:
            g = _gcd(g, v if v > 0 else -v)
            if g == 1:
                return g
    return g


cdef object _gcd(object a, object b):
    while b:
        a, b = b, a % b
    return a


def int_rref(rows):
    """Canonical integer RREF: primitive rows, positive pivots, zeros
    above and below every pivot.  Returns (rows, pivot_columns)."""
    cdef list m = [list(input_row) for input_row in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t ncols = len(m[0]) if nrows else 0
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, pr, t
    cdef list piv_row, row
    cdef object g, pv, w
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
            row = m[i]
            row = [row[t] * pv - piv_row[t] * w for t in range(ncols)]
            g = _row_gcd(row)
            if g > 1:
                row = [v // g for v in row]
            m[i] = row
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def int_det(a):
    """Bareiss fraction-free determinant of a square integer matrix."""
    cdef Py_ssize_t n = len(a)
    if n == 0:
        return 1
    cdef list m = [list(row) for row in a]
    cdef int sign = 1
    cdef object prev = 1
    cdef Py_ssize_t k, i, j, swap
    cdef object pkk, mik
    cdef list mi, mk
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
            mi = m[i]
            mk = m[k]
            mik = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pkk - mik * mk[j]) // prev
            mi[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def rk4_fill(double[:, :, ::1] tensor, double[::1] x0, double[::1] v0,
             double dt, Py_ssize_t steps,
             double[::1] ts_out, double[:, ::1] xs_out):
    """Classic RK4 for x'' = -T(x', x'); fills the output buffers."""
    cdef Py_ssize_t d = tensor.shape[0]
    cdef Py_ssize_t s, a, b, c
    cdef double h = dt, acc
    cdef double *x = <double *> malloc(7 * d * sizeof(double))
    if x == NULL:
        raise MemoryError()
    cdef double *v = x + d
    cdef double *k1v = x + 2 * d
    cdef double *k2v = x + 3 * d
    cdef double *k3v = x + 4 * d
    cdef double *k4v = x + 5 * d
    cdef double *vv = x + 6 * d
    try:
        for a in range(d):
            x[a] = x0[a]
            v[a] = v0[a]
            xs_out[0, a] = x[a]
        ts_out[0] = 0.0
        for s in range(1, steps + 1):
            _accel(tensor, v, k1v, d)
            for a in range(d):
                vv[a] = v[a] + 0.5 * h * k1v[a]
            _accel(tensor, vv, k2v, d)
            for a in range(d):
                vv[a] = v[a] + 0.5 * h * k2v[a]
            _accel(tensor, vv, k3v, d)
            for a in range(d):
                vv[a] = v[a] + h * k3v[a]
            _accel(tensor, vv, k4v, d)
            # k1x..k4x are v, v + h/2 k1v, v + h/2 k2v, v + h k3v
            for a in range(d):
                x[a] += (h / 6.0) * (6.0 * v[a]
                                     + h * (k1v[a] + k2v[a] + k3v[a]))
                v[a] += (h / 6.0) * (k1v[a] + 2.0 * k2v[a] + 2.0 * k3v[a] + k4v[a])
                xs_out[s, a] = x[a]
            ts_out[s] = s * h
    finally:
        free(x)
    return None


cdef inline void _accel(double[:, :, ::1] tensor, double *vel, double *out,
                        Py_ssize_t d) noexcept:
    cdef Py_ssize_t a, b, c
    cdef double acc
    for a in range(d):
        acc = 0.0
        for b in range(d):
            for c in range(d):
                acc += tensor[a, b, c] * vel[b] * vel[c]
        out[a] = -acc
