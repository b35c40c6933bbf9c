"""Barycentric interpolation on the sphere via the double Fourier sphere idea.

Samples ``f[j, k]`` on a latitude-longitude grid are split into

    f_plus  = (f[:, k] + f[:, k+m]) / 2     (pi-periodic in phi, even in theta)
    f_minus = (f[:, k] - f[:, k+m]) / 2     (pi-antiperiodic in phi, odd in theta)

Each of the m columns gets a cosine interpolant (f_plus) and a sine
interpolant (f_minus) in colatitude; the columns are combined in longitude
by the cot/csc formulas. The result is a bivariate trigonometric polynomial
with the glide-reflection symmetry s(phi, -theta) = s(phi + pi, theta).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _tensor
from .bary1d import WeightTable, trig_even_weights, trig_odd_weights
from .errors import SizeError
from .grids import SphereGrid, SphereKind


@dataclass(frozen=True, eq=False)
class SphereInterpolant:
    grid: SphereGrid
    raw_samples: np.ndarray
    f_plus: np.ndarray
    f_minus: np.ndarray
    lat_even_table: WeightTable
    lat_odd_table: WeightTable


@dataclass(frozen=True)
class PoleReport:
    """Spread of interpolant values around the poles (or origin).

    ``guaranteed`` is True when the grid contains the pole(s) so that the
    interpolant is single-valued there; otherwise the numbers are
    diagnostic only.
    """

    north: float
    south: float
    guaranteed: bool
    tol: float

    @property
    def deviation(self):
        return max(self.north, self.south)

    @property
    def passed(self):
        return self.deviation < self.tol


def build_sphere_interpolant(grid, samples):
    """Build the interpolant of ``samples`` (shape ``(n, 2m)``) on ``grid``."""
    f = np.array(samples, dtype=float)
    if f.shape != grid.shape:
        raise SizeError(f"samples have shape {f.shape}, grid expects {grid.shape}")
    if not np.all(np.isfinite(f)):
        raise ValueError("samples must be finite")
    f.setflags(write=False)
    f_plus, f_minus = _tensor.split_samples(f, grid.m)
    kind = SphereKind(grid.kind).value
    return SphereInterpolant(
        grid, f, f_plus, f_minus,
        trig_even_weights(grid.theta, kind), trig_odd_weights(grid.theta, kind),
    )


def replace_samples(interp, samples):
    """Reuse the grid and weight tables of ``interp`` for new samples."""
    f = np.array(samples, dtype=float)
    if f.shape != interp.grid.shape:
        raise SizeError(f"samples have shape {f.shape}, grid expects {interp.grid.shape}")
    f.setflags(write=False)
    f_plus, f_minus = _tensor.split_samples(f, interp.grid.m)
    return SphereInterpolant(
        interp.grid, f, f_plus, f_minus, interp.lat_even_table, interp.lat_odd_table
    )


def _eval(interp, phi, theta, threads=1):
    g = interp.grid
    return _tensor.evaluate(
        interp.lat_even_table, interp.lat_odd_table, interp.f_plus, interp.f_minus,
        g.m, g.phi0, phi, theta, threads, interp.raw_samples,
    )


def eval_sphere(interp, phi, theta):
    """Value of the interpolant at longitude ``phi`` and colatitude ``theta``.

    ``phi`` is reduced mod 2pi. ``theta`` is not reduced: the interpolant is
    a trigonometric polynomial in theta, so points slightly outside
    [0, pi] are handled by its symmetric extension.
    """
    out = _eval(interp, np.array([phi], dtype=float), np.array([theta], dtype=float))
    return float(out[0])


def eval_sphere_batch(interp, points, threads=1):
    """Evaluate at a sequence of ``(phi, theta)`` pairs, preserving order.

    The result is bit-for-bit identical to looping over :func:`eval_sphere`
    and independent of ``threads``.
    """
    phi, theta = _tensor.points_to_arrays(points)
    return _eval(interp, phi, theta, threads)


def eval_sphere_arrays(interp, phi, theta, threads=1):
    """Evaluate at broadcast arrays ``phi`` and ``theta``; returns their shape."""
    phi, theta = np.broadcast_arrays(np.asarray(phi, dtype=float), np.asarray(theta, dtype=float))
    shape = phi.shape
    out = _eval(interp, np.ascontiguousarray(phi).ravel(), np.ascontiguousarray(theta).ravel(), threads)
    return out.reshape(shape)


def check_bmc1(interp, tol=1e-12, samples=64):
    """Check that the interpolant is constant along theta = 0 and theta = pi.

    Both poles are probed at ``samples`` equispaced longitudes. The spread
    is measured relative to ``1 + max|raw_samples|``.
    """
    phi = 2 * np.pi * np.arange(samples) / samples
    scale = 1.0 + np.max(np.abs(interp.raw_samples))
    north = eval_sphere_arrays(interp, phi, 0.0)
    south = eval_sphere_arrays(interp, phi, np.pi)
    g = interp.grid
    return PoleReport(
        north=float(np.ptp(north) / scale),
        south=float(np.ptp(south) / scale),
        guaranteed=bool(g.theta[0] == 0.0 and g.theta[-1] == np.pi),
        tol=tol,
    )
