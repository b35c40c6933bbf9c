"""Chunked tensor-product evaluation shared by the sphere and disk interpolants."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .bary1d import cardinal_rows, longitude_hits, longitude_rows, node_hits

CHUNK = 2048


def split_samples(samples, m):
    """Split (rows, 2m) samples into the pi-periodic and pi-antiperiodic halves."""
    left, right = samples[:, :m], samples[:, m:]
    return 0.5 * (left + right), 0.5 * (left - right)


def _raw_hits(even, raw, m, phi0, phi, t, out):
    # At a grid node return the stored sample itself; f_plus + f_minus
    # reproduces it only up to rounding. Pole/origin rows keep the formula
    # value (the longitude average of that row) unless the row is constant.
    j, sign = node_hits(even, t)
    pole = np.flatnonzero((j >= 0) & (sign == 0))
    if pole.size:
        rows = raw[j[pole]]
        const = np.all(rows == rows[:, :1], axis=1)
        out[pole[const]] = rows[const, 0]
    sel = (j >= 0) & (sign != 0)
    if not sel.any():
        return
    k, half = longitude_hits(m, phi0, phi[sel])
    ok = k >= 0
    idx = np.flatnonzero(sel)[ok]
    col = k[ok] + m * ((half[ok] + (sign[idx] < 0)) % 2)
    out[idx] = raw[j[idx], col]


def _eval_chunk(even, odd, f_plus, f_minus, m, phi0, phi, t, raw=None):
    # BLAS takes a different (gemv) path for a single row, which rounds
    # differently; padding to two rows keeps results independent of chunking.
    single = phi.size == 1
    if single:
        phi = np.repeat(phi, 2)
        t = np.repeat(t, 2)
    uc = cardinal_rows(even, t) @ f_plus
    us = cardinal_rows(odd, t) @ f_minus
    A, B = longitude_rows(m, phi0, phi)
    out = (A * uc + B * us).sum(axis=1) / A.sum(axis=1)
    if raw is not None:
        _raw_hits(even, raw, m, phi0, phi, t, out)
    return out[:1] if single else out


def evaluate(even, odd, f_plus, f_minus, m, phi0, phi, t, threads=1, raw=None):
    """Evaluate the combined interpolant at flat arrays ``phi``, ``t``.

    Points are processed in fixed chunks of ``CHUNK`` so that the result does
    not depend on ``threads``. ``raw`` (the unsplit samples) enables exact
    reproduction at grid nodes.
    """
    f_minus = f_minus[odd.index]
    n = phi.size
    if n == 0:
        return np.empty(0)
    bounds = [(i, min(i + CHUNK, n)) for i in range(0, n, CHUNK)]

    def work(b):
        lo, hi = b
        return _eval_chunk(even, odd, f_plus, f_minus, m, phi0, phi[lo:hi], t[lo:hi], raw)

    if threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, bounds))
    else:
        parts = [work(b) for b in bounds]
    return np.concatenate(parts)


def points_to_arrays(points):
    """Accept a sequence of (phi, t) pairs or an (N, 2) array."""
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        return np.empty(0), np.empty(0)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must have shape (N, 2)")
    return np.ascontiguousarray(pts[:, 0]), np.ascontiguousarray(pts[:, 1])
