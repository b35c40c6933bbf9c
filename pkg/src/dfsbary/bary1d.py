"""One-dimensional barycentric kernels.

Latitude and radial directions use a single formula shape,

    value(t) = pref(t) * sum_j a_j f_j / (x - x_j) / sum_j b_j / (x - x_j),

in the variable ``x = cos(t)`` (trigonometric, sphere) or ``x = t**2``
(polynomial, disk). Even interpolants have ``pref = 1`` and ``a = b``; odd
ones have ``pref = sin(t)`` or ``pref = t``. Every sign, halving and
sin/rho factor is folded into ``a`` and ``b`` when the table is built.

Longitude uses the pi-periodic and pi-antiperiodic reductions of Henrici's
trigonometric formula on 2m equispaced points; both reduce to cot/csc
weighted sums over the first m nodes.

Evaluation at (or within 1e-13 relative of) a node returns the node value
directly instead of evaluating 0/0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError, SizeError
from .gauss_legendre import gl_nodes

HIT_TOL = 1e-13


class TableKind(str, enum.Enum):
    TRIG_EVEN = "trig_even"
    TRIG_ODD = "trig_odd"
    POLY_EVEN = "poly_even"
    POLY_ODD = "poly_odd"


@dataclass(frozen=True, eq=False)
class WeightTable:
    """Precomputed weights for one latitude or radial interpolant.

    Only terms with nonzero weight are stored. ``index[i]`` is the position
    in the caller's sample vector that term ``i`` multiplies, so an odd
    table on a grid containing a pole or the origin is shorter than the
    sample vector.

    Attributes
    ----------
    kind : TableKind
    nodes : ndarray
        Colatitudes or radii of the stored terms.
    x : ndarray
        ``cos(nodes)`` or ``nodes**2``.
    weights : ndarray
        Denominator weights ``b``.
    num_weights : ndarray
        Numerator weights ``a``; the same values as ``weights`` for even kinds.
    scale : ndarray
        ``sin(nodes)`` or ``nodes`` for odd kinds (used at node hits), else ones.
    index : ndarray of int
    n_samples : int
    contains_zero, contains_pi : bool
        Whether 0 (pole or origin) and pi (trigonometric only) are nodes.
    """

    kind: TableKind
    nodes: np.ndarray
    x: np.ndarray
    weights: np.ndarray
    num_weights: np.ndarray
    scale: np.ndarray
    index: np.ndarray
    n_samples: int
    contains_zero: bool = False
    contains_pi: bool = False

    @property
    def odd(self):
        return self.kind in (TableKind.TRIG_ODD, TableKind.POLY_ODD)

    @property
    def trig(self):
        return self.kind in (TableKind.TRIG_EVEN, TableKind.TRIG_ODD)

    def rescaled(self, factor):
        """Return a copy with every weight multiplied by ``factor``."""
        return WeightTable(
            self.kind, self.nodes, self.x, self.weights * factor, self.num_weights * factor,
            self.scale, self.index, self.n_samples, self.contains_zero, self.contains_pi,
        )


def product_weights(x):
    """Barycentric weights ``1 / prod_{i != j} (x_j - x_i)``, scaled to max 1.

    Differences are multiplied by ``4 / (max(x) - min(x))`` before the
    product is taken, which keeps the products of order one for the node
    sets used here (and far from overflow for several thousand nodes).

    Raises
    ------
    DegeneracyError
        If two nodes coincide.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    if n == 1:
        return np.ones(1)
    span = x.max() - x.min()
    if span == 0.0:
        raise DegeneracyError("interpolation nodes coincide")
    diff = (4.0 / span) * (x[:, None] - x[None, :])
    np.fill_diagonal(diff, 1.0)
    if np.any(diff == 0.0):
        raise DegeneracyError("interpolation nodes coincide")
    with np.errstate(over="ignore", under="ignore", divide="ignore"):
        w = 1.0 / np.prod(diff, axis=1)
    if np.all(np.isfinite(w)) and np.all(w != 0.0):
        return w / np.max(np.abs(w))
    # Partial products over- or underflow for large n; work with logs.
    logw = -np.sum(np.log(np.abs(diff)), axis=1)
    sign = np.where(np.sum(diff < 0, axis=1) % 2 == 0, 1.0, -1.0)
    return sign * np.exp(logw - logw.max())


def _alternating(n):
    return np.where(np.arange(n) % 2 == 0, 1.0, -1.0)


def _check_increasing(theta):
    theta = np.asarray(theta, dtype=float)
    if theta.ndim != 1 or theta.size == 0:
        raise SizeError("nodes must be a non-empty 1-D sequence")
    d = np.diff(theta)
    if np.any(d == 0.0):
        raise DegeneracyError("duplicate interpolation nodes")
    if np.any(d < 0.0) or theta[0] < 0.0 or theta[-1] > np.pi:
        raise ValueError("colatitude nodes must be strictly increasing in [0, pi]")
    return theta


def _check_decreasing(rho):
    rho = np.asarray(rho, dtype=float)
    if rho.ndim != 1 or rho.size == 0:
        raise SizeError("nodes must be a non-empty 1-D sequence")
    d = np.diff(rho)
    if np.any(d == 0.0):
        raise DegeneracyError("duplicate interpolation nodes")
    if np.any(d > 0.0) or rho[-1] < 0.0 or rho[0] > 1.0:
        raise ValueError("radial nodes must be strictly decreasing in [0, 1]")
    return rho


def exact_sin(theta):
    """sin(theta) with exact zeros at theta == 0 and theta == pi."""
    s = np.sin(theta)
    s[(theta == 0.0) | (theta == np.pi)] = 0.0
    return s


def _grid_kind(kind):
    return None if kind is None else str(getattr(kind, "value", kind)).lower()


# -- latitude (trigonometric) tables ------------------------------------------


def _equispaced_factors(theta, has0, haspi):
    """eta_j, delta_j of the even formula and xi_j of the odd one."""
    if has0 and haspi:
        eta = np.ones_like(theta)
        xi = exact_sin(theta)
    elif has0:
        eta = np.cos(theta / 2)
        xi = np.sin(theta / 2)
    elif haspi:
        eta = np.sin(theta / 2)
        xi = np.cos(theta / 2)
    else:
        eta = exact_sin(theta)
        xi = np.ones_like(theta)
    delta = np.where((theta == 0.0) | (theta == np.pi), 0.5, 1.0)
    return eta, delta, xi


def _gl_latitude_weights(theta):
    rule = gl_nodes(theta.size)
    z = rule.nodes[::-1]
    if not np.allclose(np.cos(theta), z, rtol=0.0, atol=1e-13):
        raise ValueError("nodes are not Gauss-Legendre colatitudes")
    return np.array(rule.bary_weights[::-1])


def _even_trig_weights(theta, kind):
    has0, haspi = bool(theta[0] == 0.0), bool(theta[-1] == np.pi)
    if kind in ("eq", "seq"):
        eta, delta, _ = _equispaced_factors(theta, has0, haspi)
        return _alternating(theta.size) * delta * eta
    if kind == "gl":
        return _gl_latitude_weights(theta)
    return product_weights(np.cos(theta))


def trig_even_weights(nodes, grid_kind=None):
    """Weights for the cosine-polynomial interpolant of even 2pi-periodic data.

    Parameters
    ----------
    nodes : array_like
        Colatitudes, strictly increasing in [0, pi].
    grid_kind : {"eq", "seq", "gl", None}
        ``"eq"``/``"seq"`` select the closed forms for equispaced nodes,
        ``"gl"`` the Gauss-Legendre barycentric weights; ``None`` computes
        product weights for arbitrary nodes.
    """
    theta = _check_increasing(nodes)
    kind = _grid_kind(grid_kind)
    w = _even_trig_weights(theta, kind)
    n = theta.size
    return WeightTable(
        TableKind.TRIG_EVEN, theta, np.cos(theta), w, w, np.ones(n), np.arange(n), n,
        bool(theta[0] == 0.0), bool(theta[-1] == np.pi),
    )


def trig_odd_weights(nodes, grid_kind=None):
    """Weights for the sine-polynomial interpolant of odd 2pi-periodic data.

    Terms at a pole carry zero weight (an odd function vanishes there) and
    are not stored.
    """
    theta = _check_increasing(nodes)
    kind = _grid_kind(grid_kind)
    n = theta.size
    has0, haspi = bool(theta[0] == 0.0), bool(theta[-1] == np.pi)
    s = exact_sin(theta)
    keep = s != 0.0
    if kind in ("eq", "seq"):
        _, _, xi = _equispaced_factors(theta, has0, haspi)
        a = _alternating(n) * xi
        b = a * s
    elif kind == "gl":
        w = _gl_latitude_weights(theta)
        a = w / s
        b = w
    else:
        # Removing the pole nodes and using the csc form on the rest is the
        # same interpolant as the sin/sin^2 form over the full node set.
        a = np.zeros(n)
        b = np.zeros(n)
        if keep.any():
            w = product_weights(np.cos(theta[keep]))
            a[keep] = w / s[keep]
            b[keep] = w
    idx = np.flatnonzero(keep)
    return WeightTable(
        TableKind.TRIG_ODD, theta[idx], np.cos(theta[idx]), b[idx], a[idx], s[idx], idx, n,
        has0, haspi,
    )


# -- radial (polynomial) tables -----------------------------------------------


def _even_poly_weights(rho, kind, include_origin):
    n = rho.size - 1
    sgn = _alternating(n + 1)
    j = np.arange(n + 1)
    if kind == "ch1":
        if include_origin:
            w = sgn * np.sin((2 * j + 1) * np.pi / (4 * n + 2))
            w[-1] *= 0.5
        else:
            w = sgn * rho * np.sin((2 * j + 1) * np.pi / (4 * n + 4))
    elif kind == "ch2":
        if include_origin:
            w = sgn.copy()
            w[0] *= 0.5
            w[-1] *= 0.5
        else:
            w = sgn * rho
            w[0] *= 0.5
    elif kind in ("glr", "gl"):
        ell = 2 * n if include_origin else 2 * n + 1
        rule = gl_nodes(ell + 1)
        pos = rule.nodes[::-1][: n + 1]
        if not np.allclose(pos, rho, rtol=0.0, atol=1e-14):
            raise ValueError("nodes are not Gauss-Legendre radii")
        wfull = np.array(rule.bary_weights[::-1][: n + 1])
        if include_origin:
            w = wfull
            w[-1] *= 0.5
        else:
            w = wfull * rho
    else:
        w = product_weights(rho**2)
    return w / np.max(np.abs(w))


def _origin_flag(rho, include_origin):
    has0 = bool(rho[-1] == 0.0)
    if include_origin is None:
        return has0
    if bool(include_origin) != has0:
        raise ValueError("include_origin does not match whether rho contains 0")
    return has0


def poly_even_weights(rho_nodes, grid_kind=None, include_origin=None):
    """Weights for the even polynomial interpolant in rho**2.

    Parameters
    ----------
    rho_nodes : array_like
        Radii strictly decreasing in [0, 1]; they are the nonnegative half of
        a node set symmetric about the origin.
    grid_kind : {"ch1", "ch2", "glr", None}
        Closed-form weights for Chebyshev points of the first and second
        kind, Gauss-Legendre weights, or product weights for any other set.
    include_origin : bool, optional
        Must agree with ``rho_nodes[-1] == 0``; inferred when omitted.
    """
    rho = _check_decreasing(rho_nodes)
    has0 = _origin_flag(rho, include_origin)
    w = _even_poly_weights(rho, _grid_kind(grid_kind), has0)
    n = rho.size
    return WeightTable(TableKind.POLY_EVEN, rho, rho**2, w, w, np.ones(n), np.arange(n), n, has0)


def poly_odd_weights(rho_nodes, grid_kind=None, include_origin=None):
    """Weights for the odd polynomial interpolant ``rho * q(rho**2)``."""
    rho = _check_decreasing(rho_nodes)
    has0 = _origin_flag(rho, include_origin)
    w = _even_poly_weights(rho, _grid_kind(grid_kind), has0)
    if has0:
        a, b = w * rho, w * rho**2
        idx = np.arange(rho.size - 1)
    else:
        a, b = w / rho, w
        idx = np.arange(rho.size)
    a, b = a[idx], b[idx]
    return WeightTable(
        TableKind.POLY_ODD, rho[idx], rho[idx] ** 2, b, a, rho[idx], idx, rho.size, has0,
    )


# -- evaluation ---------------------------------------------------------------


def cardinal_rows(table, t):
    """Return ``L`` with ``L @ samples[table.index]`` the interpolant at ``t``.

    ``t`` is a 1-D array of colatitudes or radii; the result has shape
    ``(len(t), len(table.index))``. Rows at node hits are exact unit (or
    signed unit) vectors.
    """
    t = np.asarray(t, dtype=float)
    if table.trig:
        x = np.cos(t)
        pref = exact_sin(t) if table.odd else None
    else:
        x = t * t
        pref = t if table.odd else None
    if table.x.size == 0:
        return np.zeros((t.size, 0))

    diff = x[:, None] - table.x[None, :]
    hit = np.abs(diff) < (HIT_TOL * (1.0 + np.abs(x)))[:, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        c = table.weights / diff
        den = c.sum(axis=1)
        if table.odd:
            rows = (table.num_weights / diff) * (pref / den)[:, None]
        else:
            rows = c / den[:, None]

    hit_rows = np.flatnonzero(hit.any(axis=1))
    if hit_rows.size:
        j = np.argmin(np.abs(diff[hit_rows]), axis=1)
        rows[hit_rows] = 0.0
        if table.odd:
            # t is +-node (mod 2pi); return +-sample exactly.
            rows[hit_rows, j] = np.sign(pref[hit_rows]) * np.sign(table.scale[j])
        else:
            rows[hit_rows, j] = 1.0
    return rows


def node_hits(table, t):
    """Locate node hits of an even table for the raw-sample short-circuit.

    Returns ``(j, sign)``: ``j[i]`` is the sample index hit by ``t[i]`` or -1,
    and ``sign[i]`` is +1 for ``t = node``, -1 for ``t = -node`` (mod 2pi)
    and 0 when the node is a pole or the origin, where no side is defined.
    """
    t = np.asarray(t, dtype=float)
    x = np.cos(t) if table.trig else t * t
    j = np.full(t.size, -1)
    sign = np.zeros(t.size)
    if table.x.size == 0:
        return j, sign
    diff = np.abs(x[:, None] - table.x[None, :])
    hit = diff < (HIT_TOL * (1.0 + np.abs(x)))[:, None]
    rows = np.flatnonzero(hit.any(axis=1))
    if rows.size:
        jj = np.argmin(diff[rows], axis=1)
        j[rows] = table.index[jj]
        if table.trig:
            sign[rows] = np.sign(np.sin(t[rows])) * np.sign(exact_sin(table.nodes[jj]))
        else:
            sign[rows] = np.sign(t[rows]) * np.sign(table.nodes[jj])
    return j, sign


def _evaluate(table, samples, t):
    samples = np.asarray(samples, dtype=float)
    if samples.shape[0] != table.n_samples:
        raise SizeError(f"expected {table.n_samples} samples, got {samples.shape[0]}")
    scalar = np.ndim(t) == 0
    tt = np.atleast_1d(np.asarray(t, dtype=float)).ravel()
    vals = cardinal_rows(table, tt) @ samples[table.index]
    if scalar:
        return float(vals[0])
    return vals.reshape(np.shape(t) + samples.shape[1:])


def trig_even_eval(table, samples, theta):
    """Evaluate the cosine-polynomial interpolant at ``theta`` (scalar or array)."""
    return _evaluate(table, samples, theta)


def trig_odd_eval(table, samples, theta):
    """Evaluate the sine-polynomial interpolant at ``theta`` (scalar or array)."""
    return _evaluate(table, samples, theta)


def poly_even_eval(table, samples, rho):
    """Evaluate the even radial interpolant at ``rho`` (scalar or array)."""
    return _evaluate(table, samples, rho)


def poly_odd_eval(table, samples, rho):
    """Evaluate the odd radial interpolant at ``rho``; exactly 0 at ``rho = 0``."""
    return _evaluate(table, samples, rho)


# -- longitude ----------------------------------------------------------------


def longitude_rows(m, phi0, phi):
    """cot/csc weight rows for the m-term longitude formulas.

    Returns ``(A, B)``, each of shape ``(len(phi), m)``. The pi-periodic part
    is ``sum(A * c) / sum(A)``, the pi-antiperiodic part ``sum(B * c) / sum(A)``.
    For m even ``A`` holds cot terms and ``B`` csc terms; for m odd the roles
    swap. A point within 1e-13 of ``phi_k`` (mod pi) gets ``A = e_k`` and
    ``B = +-e_k``, the sign telling ``phi_k`` apart from ``phi_k + pi``.
    """
    phi = np.asarray(phi, dtype=float)
    d = np.mod(phi, 2 * np.pi)[:, None] - (phi0 + np.pi * np.arange(m) / m)[None, :]
    s = np.sin(d)
    c = np.cos(d)
    sgn = _alternating(m)
    hit = np.abs(s) < HIT_TOL
    with np.errstate(divide="ignore", invalid="ignore"):
        csc = sgn / s
        cot = c * csc
    A, B = (cot, csc) if m % 2 == 0 else (csc, cot)

    hit_rows = np.flatnonzero(hit.any(axis=1))
    if hit_rows.size:
        k = np.argmin(np.abs(s[hit_rows]), axis=1)
        A[hit_rows] = 0.0
        B[hit_rows] = 0.0
        A[hit_rows, k] = 1.0
        B[hit_rows, k] = np.where(c[hit_rows, k] > 0.0, 1.0, -1.0)
    return A, B


def longitude_hits(m, phi0, phi):
    """Return ``(k, half)``: hit longitude index in 0..m-1 (or -1) and 0/1 for
    ``phi_k`` versus ``phi_k + pi``."""
    phi = np.asarray(phi, dtype=float)
    d = np.mod(phi, 2 * np.pi)[:, None] - (phi0 + np.pi * np.arange(m) / m)[None, :]
    s = np.abs(np.sin(d))
    k = np.full(phi.size, -1)
    half = np.zeros(phi.size, dtype=int)
    rows = np.flatnonzero((s < HIT_TOL).any(axis=1))
    if rows.size:
        kk = np.argmin(s[rows], axis=1)
        k[rows] = kk
        half[rows] = np.cos(d[rows, kk]) < 0.0
    return k, half


def _phi_layout(phi_nodes):
    phi_nodes = np.asarray(phi_nodes, dtype=float)
    m = phi_nodes.size
    if m < 1:
        raise SizeError("need at least one longitude node")
    if m > 1 and not np.allclose(np.diff(phi_nodes), np.pi / m, rtol=0.0, atol=1e-12):
        raise ValueError("longitude nodes must be phi0 + pi*k/m, k = 0..m-1")
    return m, float(phi_nodes[0])


def _lon_eval(phi_nodes, values, phi, anti):
    m, phi0 = _phi_layout(phi_nodes)
    values = np.asarray(values, dtype=float)
    if values.shape != (m,):
        raise SizeError(f"expected {m} column values, got shape {values.shape}")
    scalar = np.ndim(phi) == 0
    p = np.atleast_1d(np.asarray(phi, dtype=float)).ravel()
    A, B = longitude_rows(m, phi0, p)
    out = ((B if anti else A) * values).sum(axis=1) / A.sum(axis=1)
    return float(out[0]) if scalar else out.reshape(np.shape(phi))


def pi_periodic_eval(phi_nodes, column_values, phi):
    """Trigonometric interpolant of pi-periodic data given on the first m of 2m nodes.

    Examples
    --------
    >>> nodes = np.pi * np.arange(3) / 3
    >>> round(pi_periodic_eval(nodes, [1.0, 2.0, 3.0], nodes[2] + np.pi), 12)
    3.0
    """
    return _lon_eval(phi_nodes, column_values, phi, anti=False)


def pi_antiperiodic_eval(phi_nodes, column_values, phi):
    """Trigonometric interpolant of pi-antiperiodic data, ``f(phi + pi) = -f(phi)``."""
    return _lon_eval(phi_nodes, column_values, phi, anti=True)
