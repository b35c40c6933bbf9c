"""Semi-Lagrangian tracer transport on the unit sphere.

Each step traces every grid node backward along the flow for one time step
and interpolates the current tracer field at the resulting departure points
with the spherical barycentric interpolant.

Two coordinate conventions meet here. The flow and initial conditions are
written in longitude ``lam`` and LATITUDE ``lat`` in [-pi/2, pi/2]; the
interpolant uses COLATITUDE ``theta = pi/2 - lat``. :func:`colatitude` and
:func:`latitude` are the only places that convert between them.

The test flow is the reversing deformational flow of Nair and Lauritzen
(2010): after one period ``T`` the exact solution equals the initial
condition, which is therefore the reference for the error norms.
"""

from __future__ import annotations

import enum
import logging
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import DivergenceError
from .grids import make_sphere_grid
from .sphere import build_sphere_interpolant, eval_sphere_arrays, replace_samples

log = logging.getLogger(__name__)

#: Maximum speed of the deformational flow with T = 5.
SPEED_MAX = 2.93

# Cash-Karp fifth-order stages.
_CK_C = np.array([0.0, 1 / 5, 3 / 10, 3 / 5, 1.0, 7 / 8])
_CK_A = [
    [],
    [1 / 5],
    [3 / 40, 9 / 40],
    [3 / 10, -9 / 10, 6 / 5],
    [-11 / 54, 5 / 2, -70 / 27, 35 / 27],
    [1631 / 55296, 175 / 512, 575 / 13824, 44275 / 110592, 253 / 4096],
]
_CK_B = np.array([37 / 378, 0.0, 250 / 621, 125 / 594, 0.0, 512 / 1771])


def colatitude(lat):
    return np.pi / 2 - lat


def latitude(theta):
    return np.pi / 2 - theta


def to_cartesian(lam, lat):
    """Unit vectors for longitude/latitude arrays; shape ``(..., 3)``."""
    c = np.cos(lat)
    return np.stack([c * np.cos(lam), c * np.sin(lam), np.sin(lat)], axis=-1)


def to_lonlat(xyz):
    """Inverse of :func:`to_cartesian` for (not necessarily unit) vectors."""
    r = np.linalg.norm(xyz, axis=-1)
    lam = np.arctan2(xyz[..., 1], xyz[..., 0])
    lat = np.arcsin(np.clip(xyz[..., 2] / r, -1.0, 1.0))
    return lam, lat


@dataclass(frozen=True)
class VelocityField:
    """Deformational flow of period ``T``.

    Both deformational terms are taken in the frame rotating with the
    background flow, ``lam' = lam - 2 pi t / T``; in particular the
    meridional term is ``sin(2 lam')``. Only with that argument do particles
    return to their starting points at ``t = T``.

    ``scale`` multiplies the whole field (0 gives a motionless flow) and
    ``frozen_time``, when set, evaluates the field at that time regardless
    of the time argument.
    """

    T: float = 5.0
    scale: float = 1.0
    frozen_time: float | None = None

    def _time(self, t):
        return t if self.frozen_time is None else self.frozen_time

    def lonlat(self, lam, lat, t):
        """Longitude and latitude velocity components ``(u, v)``."""
        t = self._time(t)
        T = self.T
        amp = 10.0 / T * np.cos(np.pi * t / T)
        lam_r = lam - 2 * np.pi * t / T
        u = amp * np.sin(lam_r) ** 2 * np.sin(2 * lat) + 2 * np.pi / T * np.cos(lat)
        v = amp * np.sin(2 * lam_r) * np.cos(lat)
        return self.scale * u, self.scale * v

    def cartesian(self, xyz, t):
        """Tangent velocity at the points ``xyz`` (direction only is used).

        Written so that the factors that vanish at the poles multiply the
        ill-defined longitude terms; the field is continuous there.
        """
        t = self._time(t)
        T = self.T
        r = np.linalg.norm(xyz, axis=-1)
        x, y, z = xyz[..., 0] / r, xyz[..., 1] / r, xyz[..., 2] / r
        lam = np.arctan2(y, x)
        amp = 10.0 / T * np.cos(np.pi * t / T)
        omega = 2 * np.pi / T
        # u * e_lam = (2 amp sin^2(lam - wt) z + omega) * (-y, x, 0)
        cu = 2 * amp * np.sin(lam - omega * t) ** 2 * z + omega
        # v * e_lat = amp sin(2 (lam - wt)) * (-z x, -z y, x^2 + y^2)
        cv = amp * np.sin(2 * (lam - omega * t))
        out = np.empty_like(xyz)
        out[..., 0] = -cu * y - cv * z * x
        out[..., 1] = cu * x - cv * z * y
        out[..., 2] = cv * (x * x + y * y)
        return self.scale * out


def eval_velocity(field, lam, lat, t):
    """Return ``(u, v)`` of ``field`` at longitude ``lam``, latitude ``lat``, time ``t``."""
    return field.lonlat(lam, lat, t)


class InitialCondition(str, enum.Enum):
    COSINE_BELLS = "cosine"
    GAUSSIAN_BELLS = "gaussian"


BELL_CENTERS = ((np.pi / 6, 0.0), (-np.pi / 6, 0.0))


def great_circle_cos(lam, lat, lam_c, lat_c):
    """Cosine of the great-circle distance between two lon/lat points."""
    return np.sin(lat) * np.sin(lat_c) + np.cos(lat) * np.cos(lat_c) * np.cos(lam - lam_c)


def initial_condition(kind, lam, lat):
    """Cosine-bell or Gaussian-bell tracer at longitude ``lam``, latitude ``lat``."""
    kind = InitialCondition(kind)
    lam = np.asarray(lam, dtype=float)
    lat = np.asarray(lat, dtype=float)
    R = [great_circle_cos(lam, lat, lc, tc) for lc, tc in BELL_CENTERS]
    if kind is InitialCondition.GAUSSIAN_BELLS:
        return 0.95 * (np.exp(-10 * (1 - R[0])) + np.exp(-10 * (1 - R[1])))
    q = 0.1
    for Ri in R:
        r = np.arccos(np.clip(Ri, -1.0, 1.0))
        q = q + 0.9 * np.where(r < 0.5, 0.5 * (1 + np.cos(2 * np.pi * r)), 0.0)
    return q


def integrate(xyz, t0, t1, field, substeps=1):
    """Carry points ``xyz`` from ``t0`` to ``t1`` with fixed Cash-Karp steps.

    Works in either time direction; positions are projected back onto the
    sphere after every step.
    """
    h = (t1 - t0) / substeps
    x = np.array(xyz, dtype=float)
    t = t0
    for _ in range(substeps):
        k = []
        for i in range(6):
            xi = x
            for a, kj in zip(_CK_A[i], k):
                xi = xi + h * a * kj
            k.append(field.cartesian(xi, t + _CK_C[i] * h))
        x = x + h * sum(b * kj for b, kj in zip(_CK_B, k) if b != 0.0)
        x /= np.linalg.norm(x, axis=-1, keepdims=True)
        t = t + h
    return x


def trace_departure(lam, lat, t_arrive, dt, field, substeps=1):
    """Departure points at ``t_arrive - dt`` of particles at (lam, lat) at ``t_arrive``."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    xyz = to_cartesian(np.asarray(lam, dtype=float), np.asarray(lat, dtype=float))
    return to_lonlat(integrate(xyz, t_arrive, t_arrive - dt, field, substeps))


@dataclass
class TransportConfig:
    """Settings for one semi-Lagrangian run.

    ``n`` defaults to ``m + 1`` latitudes. ``snapshot_times`` lists times at
    which a copy of the tracer field is kept (the nearest step is used).
    """

    grid: str = "eq"
    m: int = 120
    n: int | None = None
    ic: str = "cosine"
    num_steps: int = 35
    t_final: float = 5.0
    substeps: int = 1
    threads: int = 1
    period: float = 5.0
    velocity_scale: float = 1.0
    snapshot_times: list = field(default_factory=list)

    def __post_init__(self):
        if self.n is None:
            self.n = self.m + 1
        if self.num_steps < 1:
            raise ValueError("num_steps must be >= 1")
        if not self.t_final > 0:
            raise ValueError("t_final must be positive")
        if self.substeps < 1:
            raise ValueError("substeps must be >= 1")
        InitialCondition(self.ic)

    @property
    def dt(self):
        return self.t_final / self.num_steps


@dataclass
class TracerField:
    values: np.ndarray
    time: float


@dataclass
class TransportReport:
    l2_error: float
    max_error: float
    tracer_min: float
    tracer_max: float
    wall_time: float
    step_times: list
    dt: float
    dof: int
    config: dict
    snapshots: dict = field(default_factory=dict)

    def to_dict(self):
        d = asdict(self)
        d.pop("snapshots")
        return d


def cfl_steps(m, multiple, t_final=5.0, speed=SPEED_MAX):
    """Number of uniform steps for a time step of ``multiple`` * (pi/m)/speed."""
    return int(np.ceil(t_final / (multiple * (np.pi / m) / speed) - 1e-9))


def run_transport(config):
    """Advect the tracer to ``t_final`` and compare with the initial condition.

    Returns ``(TracerField, TransportReport)``. Errors are relative:
    ``l2 = ||q - q0||_2 / ||q0||_2`` and ``max = ||q - q0||_inf / ||q0||_inf``
    over the grid nodes.

    Raises
    ------
    DivergenceError
        If the tracer becomes non-finite.
    """
    grid = make_sphere_grid(config.grid, config.m, config.n)
    PHI, THETA = grid.mesh()
    lam = PHI.ravel()
    lat = latitude(THETA.ravel())
    xyz = to_cartesian(lam, lat)
    q0 = initial_condition(config.ic, PHI, latitude(THETA))
    flow = VelocityField(T=config.period, scale=config.velocity_scale)

    interp = build_sphere_interpolant(grid, q0)
    q = q0
    dt = config.dt
    snap_steps = {int(round(t / dt)): t for t in config.snapshot_times}
    snapshots = {t: q0.copy() for s, t in snap_steps.items() if s == 0}
    step_times = []
    start = time.perf_counter()
    for k in range(config.num_steps):
        t0 = time.perf_counter()
        dep = integrate(xyz, (k + 1) * dt, k * dt, flow, config.substeps)
        lam_d, lat_d = to_lonlat(dep)
        q = eval_sphere_arrays(interp, lam_d, colatitude(lat_d), threads=config.threads)
        q = q.reshape(grid.shape)
        if not np.all(np.isfinite(q)):
            raise DivergenceError(k + 1)
        interp = replace_samples(interp, q)
        step_times.append(time.perf_counter() - t0)
        if k + 1 in snap_steps:
            snapshots[snap_steps[k + 1]] = q.copy()
        log.debug("step %d/%d: min %.3e max %.3e", k + 1, config.num_steps, q.min(), q.max())
    wall = time.perf_counter() - start

    err = q - q0
    report = TransportReport(
        l2_error=float(np.sqrt(np.sum(err**2) / np.sum(q0**2))),
        max_error=float(np.max(np.abs(err)) / np.max(np.abs(q0))),
        tracer_min=float(q.min()),
        tracer_max=float(q.max()),
        wall_time=wall,
        step_times=step_times,
        dt=dt,
        dof=grid.size,
        config=asdict(config),
        snapshots=snapshots,
    )
    return TracerField(q, config.num_steps * dt), report
