"""Convergence studies for the sphere and disk interpolants.

The interpolant of a smooth test function is built on a sequence of grids
and its relative max-norm error is measured on a fixed set of seeded
quasi-random points (scrambled Halton sequence mapped area-preservingly).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import qmc

from .disk import build_disk_interpolant, eval_disk_arrays
from .grids import DiskKind, SphereKind, make_disk_grid, make_sphere_grid
from .sphere import build_sphere_interpolant, eval_sphere_arrays

FLOOR = 1e-10


def sphere_test_function(phi, theta):
    """Smooth test function on the sphere (longitude ``phi``, colatitude ``theta``)."""
    return np.cos(
        1 + 8 * np.pi * (np.cos(phi) + np.sin(phi)) * np.sin(theta)
        + 5 * np.sin(3 * np.pi * np.cos(theta))
    )


def disk_test_function(phi, rho):
    """Smooth, highly oscillatory test function on the unit disk."""
    return np.sin(
        21 * np.pi * (1 + np.cos(np.pi * rho))
        * (rho**2 - 2 * rho**5 * np.cos(5 * (phi - 0.11)))
    )


def constant_function(phi, t):
    return np.full(np.broadcast(phi, t).shape, 0.75)


def sphere_points(count, seed=0):
    """Quasi-random points ``(phi, theta)`` uniformly distributed on the sphere."""
    u = qmc.Halton(d=2, scramble=True, seed=seed).random(count)
    return 2 * np.pi * u[:, 0], np.arccos(1 - 2 * u[:, 1])


def disk_points(count, seed=0):
    """Quasi-random points ``(phi, rho)`` uniformly distributed on the disk."""
    u = qmc.Halton(d=2, scramble=True, seed=seed).random(count)
    return 2 * np.pi * u[:, 0], np.sqrt(u[:, 1])


@dataclass(frozen=True)
class ConvergenceRow:
    grid: str
    m: int
    N: int
    rel_max_err: float


def _rel_max(approx, exact):
    return float(np.max(np.abs(approx - exact)) / np.max(np.abs(exact)))


def converge_sphere(kind, m_list, eval_count=2000, seed=0, func=sphere_test_function, threads=1):
    """Relative max errors for ``n = m`` sphere grids of ``kind``."""
    kind = SphereKind(kind).value
    phi, theta = sphere_points(eval_count, seed)
    exact = func(phi, theta)
    rows = []
    for m in m_list:
        g = make_sphere_grid(kind, m, m)
        P, T = g.mesh()
        s = build_sphere_interpolant(g, func(P, T))
        err = _rel_max(eval_sphere_arrays(s, phi, theta, threads=threads), exact)
        rows.append(ConvergenceRow(kind, m, g.size, err))
    return rows


def converge_disk(kind, m_list, eval_count=2000, seed=0, func=disk_test_function,
                  include_origin=True, threads=1):
    """Relative max errors for ``n = m`` disk grids of ``kind``."""
    kind = DiskKind(kind).value
    phi, rho = disk_points(eval_count, seed)
    exact = func(phi, rho)
    rows = []
    for m in m_list:
        g = make_disk_grid(kind, m, m, include_origin)
        P, R = g.mesh()
        s = build_disk_interpolant(g, func(P, R))
        err = _rel_max(eval_disk_arrays(s, phi, rho, threads=threads), exact)
        rows.append(ConvergenceRow(kind, m, g.size, err))
    return rows


def geometric_decay(errors, ratio=5.0, floor=FLOOR):
    """True if errors fall by more than ``ratio`` per step until reaching ``floor``.

    Once an error is at or below ``floor`` the remaining entries are only
    required to stay at or below ``floor``.
    """
    errors = list(errors)
    for prev, cur in zip(errors, errors[1:]):
        if prev <= floor:
            if cur > floor:
                return False
            continue
        if not (cur < prev and prev / cur > ratio):
            return False
    return True
