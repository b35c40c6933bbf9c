"""Barycentric interpolation on the unit disk.

Same construction as on the sphere, with even/odd polynomial interpolants in
the radius (over the point set mirrored to [-1, 1]) in place of the
cosine/sine interpolants in colatitude.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _tensor
from .bary1d import WeightTable, poly_even_weights, poly_odd_weights
from .errors import DomainError, SizeError
from .grids import DiskGrid, DiskKind
from .sphere import PoleReport


@dataclass(frozen=True, eq=False)
class DiskInterpolant:
    grid: DiskGrid
    raw_samples: np.ndarray
    f_plus: np.ndarray
    f_minus: np.ndarray
    rad_even_table: WeightTable
    rad_odd_table: WeightTable


def build_disk_interpolant(grid, samples):
    """Build the interpolant of ``samples`` (shape ``(n + 1, 2m)``) on ``grid``."""
    f = np.array(samples, dtype=float)
    if f.shape != grid.shape:
        raise SizeError(f"samples have shape {f.shape}, grid expects {grid.shape}")
    if not np.all(np.isfinite(f)):
        raise ValueError("samples must be finite")
    f.setflags(write=False)
    f_plus, f_minus = _tensor.split_samples(f, grid.m)
    kind = DiskKind(grid.kind).value
    odd = poly_odd_weights(grid.rho, kind, grid.include_origin)
    assert grid.include_origin or np.all(odd.nodes > 0.0)
    return DiskInterpolant(
        grid, f, f_plus, f_minus,
        poly_even_weights(grid.rho, kind, grid.include_origin), odd,
    )


def _eval(interp, phi, rho, threads=1):
    if rho.size and np.max(np.abs(rho)) > 1.0:
        raise DomainError("radius outside [-1, 1]")
    g = interp.grid
    return _tensor.evaluate(
        interp.rad_even_table, interp.rad_odd_table, interp.f_plus, interp.f_minus,
        g.m, g.phi0, phi, rho, threads, interp.raw_samples,
    )


def eval_disk(interp, phi, rho):
    """Value at polar angle ``phi`` and radius ``rho``, ``-1 <= rho <= 1``.

    Negative radii are read through the symmetric extension,
    s(phi, -rho) = s(phi + pi, rho).
    """
    out = _eval(interp, np.array([phi], dtype=float), np.array([rho], dtype=float))
    return float(out[0])


def eval_disk_batch(interp, points, threads=1):
    """Evaluate at a sequence of ``(phi, rho)`` pairs, preserving order."""
    phi, rho = _tensor.points_to_arrays(points)
    return _eval(interp, phi, rho, threads)


def eval_disk_arrays(interp, phi, rho, threads=1):
    phi, rho = np.broadcast_arrays(np.asarray(phi, dtype=float), np.asarray(rho, dtype=float))
    shape = phi.shape
    out = _eval(interp, np.ascontiguousarray(phi).ravel(), np.ascontiguousarray(rho).ravel(), threads)
    return out.reshape(shape)


def check_bmc2(interp, tol=1e-12, samples=64):
    """Check that the interpolant is single-valued at the origin."""
    phi = 2 * np.pi * np.arange(samples) / samples
    scale = 1.0 + np.max(np.abs(interp.raw_samples))
    center = eval_disk_arrays(interp, phi, 0.0)
    return PoleReport(
        north=float(np.ptp(center) / scale),
        south=0.0,
        guaranteed=interp.grid.include_origin,
        tol=tol,
    )
