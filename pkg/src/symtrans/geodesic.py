"""Geodesic integration for the flat and the twisted connection.

This is the one floating-point corner of the package.  For a constant
difference tensor the twisted geodesics have an exact closed form (the
orbit map conjugates them to straight lines); the RK4 route solves
x'' + S_{x'}x' = 0 independently so the two can be compared.  Exact
rational evaluation of the closed form is kept available as the
completeness witness at huge parameter times.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from symtrans import _kernels as kernels
from symtrans.cubic import CubicForm
from symtrans.linalg import vec, vec_add, vec_scale
from symtrans.rational import to_float


@dataclass(frozen=True)
class Trajectory:
    ts: np.ndarray
    xs: np.ndarray  # shape (len(ts), dim)

    def write_csv(self, stream):
        dim = self.xs.shape[1]
        stream.write("t," + ",".join(f"x_{i+1}" for i in range(dim)) + "\n")
        for t, row in zip(self.ts, self.xs):
            stream.write(",".join(repr(float(v)) for v in [t, *row]) + "\n")


@dataclass(frozen=True)
class GeodesicResult:
    connection: str               # "d" or "nabla"
    closed: Trajectory | None     # closed form, when available
    rk4: Trajectory | None        # independent RK4 integration
    sup_norm_diff: float | None   # max |closed - rk4| over the grid

    @property
    def primary(self) -> Trajectory:
        return self.closed if self.closed is not None else self.rk4


def endo_tensor_float(cubic: CubicForm) -> np.ndarray:
    """T[a][b][c] = (S_{e_b})_{ac} as floats, so S_u v = T(u, v) contracting b, c."""
    scale, mats = cubic._endo_ints()
    dim = cubic.space.dim
    T = np.empty((dim, dim, dim), dtype=float)
    for b in range(dim):
        T[:, b, :] = np.array(mats[b], dtype=float) / scale
    return T


def grid_times(t_end: float, dt: float) -> np.ndarray:
    steps = max(1, round(t_end / dt))
    return np.arange(steps + 1) * dt


def straight_line(p0, v0, t_end: float, dt: float) -> Trajectory:
    ts = grid_times(t_end, dt)
    p = np.array([to_float(x) for x in vec(p0)])
    v = np.array([to_float(x) for x in vec(v0)])
    return Trajectory(ts=ts, xs=p[None, :] + ts[:, None] * v[None, :])


def closed_form_exact(cubic: CubicForm, p0, v0, t) -> tuple:
    """The twisted geodesic at exact rational time t: the orbit-conjugated line.

    gamma(t) = Phi^{-1}(Phi(p0) + t (id + S_{p0}) v0), all in exact
    arithmetic; defined for every t, which witnesses completeness.
    """
    from symtrans.affine import GroupChart

    chart = GroupChart(cubic)
    p0, v0 = vec(p0), vec(v0)
    t = t if isinstance(t, Fraction) else Fraction(t)
    a = chart.orbit_map(p0)
    b = vec_add(v0, cubic.endo(p0).apply(v0))
    return chart.orbit_map_inverse(vec_add(a, vec_scale(t, b)))


def closed_form_trajectory(cubic: CubicForm, p0, v0, t_end: float, dt: float) -> Trajectory:
    """Float evaluation of the closed form on the RK4 grid."""
    from symtrans.affine import GroupChart

    chart = GroupChart(cubic)
    p0, v0 = vec(p0), vec(v0)
    ts = grid_times(t_end, dt)
    T = endo_tensor_float(cubic)
    a = np.array([to_float(x) for x in chart.orbit_map(p0)])
    b_exact = vec_add(v0, cubic.endo(p0).apply(v0))
    b = np.array([to_float(x) for x in b_exact])
    y = a[None, :] + ts[:, None] * b[None, :]
    correction = 0.5 * np.einsum("abc,tb,tc->ta", T, y, y)
    return Trajectory(ts=ts, xs=y - correction)


def rk4_constant(cubic: CubicForm, p0, v0, t_end: float, dt: float) -> Trajectory:
    T = endo_tensor_float(cubic)
    x0 = [to_float(x) for x in vec(p0)]
    vv0 = [to_float(x) for x in vec(v0)]
    ts, xs = kernels.rk4_quadratic(T, x0, vv0, t_end, dt)
    return Trajectory(ts=ts, xs=xs)


def rk4_variable(tensor_at, dim: int, p0, v0, t_end: float, dt: float) -> Trajectory:
    """RK4 for x'' = -T(x)(x', x') with a position-dependent tensor.

    tensor_at(x: ndarray) must return the (dim, dim, dim) float tensor.
    Used for non-constant difference tensors, where no closed form exists.
    """
    ts = grid_times(t_end, dt)
    steps = len(ts) - 1
    h = float(dt)
    x = np.array([to_float(a) for a in vec(p0)])
    v = np.array([to_float(a) for a in vec(v0)])
    xs = np.empty((steps + 1, dim))
    xs[0] = x

    def acc(pos, vel):
        return -np.einsum("abc,b,c->a", tensor_at(pos), vel, vel)

    for s in range(1, steps + 1):
        k1x, k1v = v, acc(x, v)
        k2x, k2v = v + 0.5 * h * k1v, acc(x + 0.5 * h * k1x, v + 0.5 * h * k1v)
        k3x, k3v = v + 0.5 * h * k2v, acc(x + 0.5 * h * k2x, v + 0.5 * h * k2v)
        k4x, k4v = v + h * k3v, acc(x + h * k3x, v + h * k3v)
        x = x + (h / 6.0) * (k1x + 2 * k2x + 2 * k3x + k4x)
        v = v + (h / 6.0) * (k1v + 2 * k2v + 2 * k3v + k4v)
        xs[s] = x
    return Trajectory(ts=ts, xs=xs)


def sup_norm_diff(a: Trajectory, b: Trajectory) -> float:
    return float(np.max(np.abs(a.xs - b.xs)))
