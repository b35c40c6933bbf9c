"""Tensor-product latitude-longitude grids on the sphere and polar grids on the disk.

All grids use 2m equally spaced longitudes. Sphere grids store colatitudes
``theta`` ascending in [0, pi]; disk grids store radii ``rho`` descending in
[0, 1]. Poles and the origin, when they are nodes, are stored as exact
literals so that formulas with sin(theta_j) or rho_j factors see true zeros.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import SizeError
from .gauss_legendre import gl_nodes


class SphereKind(str, enum.Enum):
    EQ = "eq"
    SEQ = "seq"
    GL = "gl"


class DiskKind(str, enum.Enum):
    CH1 = "ch1"
    CH2 = "ch2"
    GL = "glr"


def _readonly(a):
    a = np.ascontiguousarray(a, dtype=float)
    a.setflags(write=False)
    return a


def longitudes(m, phi0=0.0):
    """Return the 2m equispaced longitudes ``phi0 + pi*k/m``."""
    return phi0 + np.pi * np.arange(2 * m) / m


@dataclass(frozen=True, eq=False)
class SphereGrid:
    """Latitude-longitude grid; samples are indexed ``[j, k]`` = (theta_j, phi_k)."""

    kind: SphereKind
    m: int
    n: int
    phi: np.ndarray
    theta: np.ndarray

    @property
    def shape(self):
        return (self.n, 2 * self.m)

    @property
    def phi0(self):
        return float(self.phi[0])

    @property
    def size(self):
        return 2 * self.m * self.n

    def mesh(self):
        """Return ``(PHI, THETA)`` arrays of shape ``(n, 2m)``."""
        return np.meshgrid(self.phi, self.theta)


@dataclass(frozen=True, eq=False)
class DiskGrid:
    """Polar grid; samples are indexed ``[j, k]`` = (rho_j, phi_k), rho descending."""

    kind: DiskKind
    m: int
    n: int
    include_origin: bool
    ell: int
    phi: np.ndarray
    rho: np.ndarray

    @property
    def shape(self):
        return (self.n + 1, 2 * self.m)

    @property
    def phi0(self):
        return float(self.phi[0])

    @property
    def size(self):
        return 2 * self.m * (self.n + 1)

    def mesh(self):
        """Return ``(PHI, RHO)`` arrays of shape ``(n + 1, 2m)``."""
        return np.meshgrid(self.phi, self.rho)


def make_sphere_grid(kind, m, n, shift_longitude=False):
    """Build an EQ, SEQ or GL grid with 2m longitudes and n colatitudes.

    Longitudes are ``pi*k/m`` for every kind. Pass ``shift_longitude=True``
    to offset them by half a spacing, ``pi*(k + 1/2)/m``, which is the
    traditional longitude set of the shifted (SEQ) grid; the interpolation
    formulas accept either.

    Examples
    --------
    >>> g = make_sphere_grid("eq", 2, 3)
    >>> g.theta.tolist() == [0.0, np.pi / 2, np.pi]
    True
    """
    kind = SphereKind(kind)
    m, n = int(m), int(n)
    if m < 1:
        raise SizeError(f"m must be >= 1, got {m}")
    if n < (2 if kind is SphereKind.EQ else 1):
        raise SizeError(f"n must be >= {2 if kind is SphereKind.EQ else 1} for {kind.name}, got {n}")

    j = np.arange(n)
    if kind is SphereKind.EQ:
        theta = np.pi * j / (n - 1)
        theta[0] = 0.0
        theta[-1] = np.pi
    elif kind is SphereKind.SEQ:
        theta = np.pi * (j + 0.5) / n
    else:
        z = gl_nodes(n).nodes[::-1]
        theta = np.arccos(z)

    phi0 = np.pi / (2 * m) if shift_longitude else 0.0
    return SphereGrid(kind, m, n, _readonly(longitudes(m, phi0)), _readonly(theta))


def make_disk_grid(kind, m, n, include_origin=True):
    """Build a CH1, CH2 or GL polar grid with 2m angles and n+1 radii.

    The radii are the nonnegative half of a point set symmetric on [-1, 1]
    with ``ell + 1`` points, ``ell = 2n`` (origin included) or ``2n + 1``.

    Examples
    --------
    >>> make_disk_grid("ch2", 2, 2).rho.round(12).tolist()
    [1.0, 0.707106781187, 0.0]
    """
    kind = DiskKind(kind)
    m, n = int(m), int(n)
    if m < 1:
        raise SizeError(f"m must be >= 1, got {m}")
    if n < 1:
        raise SizeError(f"n must be >= 1, got {n}")
    include_origin = bool(include_origin)
    ell = 2 * n if include_origin else 2 * n + 1

    j = np.arange(n + 1)
    if kind is DiskKind.CH1:
        rho = np.cos((j + 0.5) * np.pi / (ell + 1))
    elif kind is DiskKind.CH2:
        rho = np.cos(j * np.pi / ell)
        rho[0] = 1.0
    else:
        rho = gl_nodes(ell + 1).nodes[::-1][: n + 1].copy()
    if include_origin:
        rho[-1] = 0.0

    return DiskGrid(kind, m, n, include_origin, ell, _readonly(longitudes(m)), _readonly(rho))
