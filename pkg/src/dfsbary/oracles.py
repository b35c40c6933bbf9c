"""Reference evaluators used to cross-check the fast kernels.

Each function evaluates a closed form directly from the nodes, with no
precomputed weights and O(n^2) work per point. They exist for tests and for
the CLI ``--oracle`` switch, not for production use.
"""

from __future__ import annotations

import enum

import numpy as np

from .bary1d import exact_sin


class OracleKind(str, enum.Enum):
    COSINE_LAGRANGE = "cosine_lagrange"
    SINE_LAGRANGE = "sine_lagrange"
    FULL_TRIG_BARY = "full_trig_bary"
    FULL_POLY_BARY = "full_poly_bary"


def _lagrange(xn, f, x):
    """Lagrange form sum_j f_j prod_{i!=j} (x - x_i)/(x_j - x_i)."""
    total = 0.0
    for j in range(xn.size):
        num = 1.0
        den = 1.0
        for i in range(xn.size):
            if i != j:
                num *= x - xn[i]
                den *= xn[j] - xn[i]
        total += num / den * f[j]
    return total


def cosine_lagrange(theta_nodes, samples, theta):
    """Cosine polynomial through even data, Lagrange form in cos(theta)."""
    tn = np.asarray(theta_nodes, dtype=float)
    f = np.asarray(samples, dtype=float)
    for j in range(tn.size):
        if np.cos(theta) == np.cos(tn[j]):
            return float(f[j])
    return float(_lagrange(np.cos(tn), f, np.cos(theta)))


def sine_lagrange(theta_nodes, samples, theta):
    """Sine polynomial through odd data.

    Nodes at a pole are dropped: odd data vanish there and the basis
    functions ``sin(theta)/sin(theta_j)`` are undefined.
    """
    tn = np.asarray(theta_nodes, dtype=float)
    f = np.asarray(samples, dtype=float)
    s = exact_sin(tn)
    keep = s != 0.0
    tn, f, s = tn[keep], f[keep], s[keep]
    for j in range(tn.size):
        if np.cos(theta) == np.cos(tn[j]):
            return float(f[j] * np.sin(theta) / s[j])
    return float(np.sin(theta) * _lagrange(np.cos(tn), f / s, np.cos(theta)))


def full_trig_bary(phi_nodes, samples, phi):
    """Henrici's formula for an even number of equispaced nodes on [0, 2pi)."""
    pn = np.asarray(phi_nodes, dtype=float)
    f = np.asarray(samples, dtype=float)
    if pn.size % 2:
        raise ValueError("Henrici's cot formula needs an even number of nodes")
    num = 0.0
    den = 0.0
    for k in range(pn.size):
        half = 0.5 * (phi - pn[k])
        if np.sin(half) == 0.0:
            return float(f[k])
        term = (-1.0) ** k / np.tan(half)
        num += term * f[k]
        den += term
    return float(num / den)


def full_poly_bary(nodes, samples, x):
    """Polynomial barycentric formula with product weights."""
    xn = np.asarray(nodes, dtype=float)
    f = np.asarray(samples, dtype=float)
    num = 0.0
    den = 0.0
    for j in range(xn.size):
        if x == xn[j]:
            return float(f[j])
        w = 1.0
        for i in range(xn.size):
            if i != j:
                w /= xn[j] - xn[i]
        num += w / (x - xn[j]) * f[j]
        den += w / (x - xn[j])
    return float(num / den)


_DISPATCH = {
    OracleKind.COSINE_LAGRANGE: cosine_lagrange,
    OracleKind.SINE_LAGRANGE: sine_lagrange,
    OracleKind.FULL_TRIG_BARY: full_trig_bary,
    OracleKind.FULL_POLY_BARY: full_poly_bary,
}


def oracle_eval(kind, nodes, samples, x):
    """Evaluate the reference formula ``kind`` at the scalar ``x``."""
    if len(nodes) > 64:
        raise ValueError("oracles are limited to 64 nodes")
    return _DISPATCH[OracleKind(kind)](nodes, samples, x)


# -- mirrored / extended data for the full-period formulas --------------------


def mirror_radial(rho, samples, odd):
    """Extend radial data on rho >= 0 to the symmetric set on [-1, 1]."""
    rho = np.asarray(rho, dtype=float)
    f = np.asarray(samples, dtype=float)
    sign = -1.0 if odd else 1.0
    if rho[-1] == 0.0:
        if odd:
            f = np.concatenate([f[:-1], [0.0]])
        return np.concatenate([rho, -rho[-2::-1]]), np.concatenate([f, sign * f[-2::-1]])
    return np.concatenate([rho, -rho[::-1]]), np.concatenate([f, sign * f[::-1]])


def extend_longitude(phi_nodes, values, anti):
    """Extend m values to 2m using pi-periodicity or pi-antiperiodicity."""
    phi_nodes = np.asarray(phi_nodes, dtype=float)
    values = np.asarray(values, dtype=float)
    m = phi_nodes.size
    full_phi = phi_nodes[0] + np.pi * np.arange(2 * m) / m
    return full_phi, np.concatenate([values, -values if anti else values])


# -- bivariate references -------------------------------------------------------


def sphere_oracle(grid, samples, phi, theta):
    """Tensor-product reference for the sphere interpolant at one point."""
    f = np.asarray(samples, dtype=float)
    m = grid.m
    fp = 0.5 * (f[:, :m] + f[:, m:])
    fm = 0.5 * (f[:, :m] - f[:, m:])
    uc = np.array([cosine_lagrange(grid.theta, fp[:, k], theta) for k in range(m)])
    us = np.array([sine_lagrange(grid.theta, fm[:, k], theta) for k in range(m)])
    phi = float(np.mod(phi, 2 * np.pi))
    return full_trig_bary(grid.phi, np.concatenate([uc + us, uc - us]), phi)


def disk_oracle(grid, samples, phi, rho):
    """Tensor-product reference for the disk interpolant at one point."""
    f = np.asarray(samples, dtype=float)
    m = grid.m
    fp = 0.5 * (f[:, :m] + f[:, m:])
    fm = 0.5 * (f[:, :m] - f[:, m:])
    ve = []
    vo = []
    for k in range(m):
        xs, ys = mirror_radial(grid.rho, fp[:, k], odd=False)
        ve.append(full_poly_bary(xs, ys, rho))
        xs, ys = mirror_radial(grid.rho, fm[:, k], odd=True)
        vo.append(full_poly_bary(xs, ys, rho))
    ve, vo = np.array(ve), np.array(vo)
    phi = float(np.mod(phi, 2 * np.pi))
    return full_trig_bary(grid.phi, np.concatenate([ve + vo, ve - vo]), phi)
