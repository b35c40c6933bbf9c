"""Gauss-Legendre nodes, quadrature weights and barycentric weights.

Nodes are found by Newton's method on the three-term Legendre recurrence.
The barycentric weights of the interpolating polynomial through the nodes
follow from the quadrature weights,

    w_j ~ (-1)^j sqrt((1 - x_j^2) q_j),

which avoids the O(N^2) product formula and its overflow for large N.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NumericalError, SizeError

MAX_DEGREE = 10_000
MAX_NEWTON = 100
NEWTON_TOL = 1e-15


@dataclass(frozen=True, eq=False)
class GLRule:
    """Gauss-Legendre rule of a given degree on [-1, 1].

    Attributes
    ----------
    degree : int
        Number of nodes N (the degree of the Legendre polynomial).
    nodes : ndarray
        The N roots of P_N, ascending.
    quad_weights : ndarray
        Positive quadrature weights; they sum to 2.
    bary_weights : ndarray
        Barycentric weights for polynomial interpolation at ``nodes``,
        scaled so that ``max(abs(bary_weights)) == 1``.
    """

    degree: int
    nodes: np.ndarray
    quad_weights: np.ndarray
    bary_weights: np.ndarray


def legendre_eval(n, x):
    """Return ``(P_n(x), P_{n-1}(x))`` by the three-term recurrence."""
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev, np.zeros_like(x)
    p = x.copy()
    for k in range(2, n + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    return p, p_prev


def _legendre_and_derivative(n, x):
    p, p_prev = legendre_eval(n, x)
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def gl_nodes(N):
    """Compute the degree-``N`` Gauss-Legendre rule.

    The result is cached and immutable; callers must not write into the
    returned arrays.

    Raises
    ------
    SizeError
        If ``N`` is outside ``1 <= N <= 10**4``.
    NumericalError
        If Newton's method does not converge in 100 iterations.
    """
    N = int(N)
    if not 1 <= N <= MAX_DEGREE:
        raise SizeError(f"Gauss-Legendre degree must be in [1, {MAX_DEGREE}], got {N}")
    return _gl_nodes_cached(N)


@lru_cache(maxsize=64)
def _gl_nodes_cached(N):
    if N == 1:
        nodes = np.zeros(1)
        quad = np.full(1, 2.0)
        bary = np.ones(1)
        return _freeze(GLRule(1, nodes, quad, bary))

    # Only the nonnegative half is iterated; the rest follows by symmetry.
    half = (N + 1) // 2
    k = np.arange(1, half + 1)
    x = (1.0 - (N - 1) / (8.0 * N**3)) * np.cos(np.pi * (4 * k - 1) / (4 * N + 2))
    if N % 2 == 1:
        x[-1] = 0.0

    for _ in range(MAX_NEWTON):
        p, dp = _legendre_and_derivative(N, x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) < NEWTON_TOL:
            break
    else:
        raise NumericalError(f"Newton iteration for Legendre roots of degree {N} did not converge")

    if N % 2 == 1:
        x[-1] = 0.0
    _, dp = _legendre_and_derivative(N, x)
    q = 2.0 / ((1.0 - x * x) * dp * dp)

    # x is descending and positive; mirror to get the full ascending set.
    if N % 2 == 1:
        nodes = np.concatenate([-x, x[-2::-1]])
        quad = np.concatenate([q, q[-2::-1]])
    else:
        nodes = np.concatenate([-x, x[::-1]])
        quad = np.concatenate([q, q[::-1]])

    signs = np.where(np.arange(N) % 2 == 0, 1.0, -1.0)
    bary = signs * np.sqrt((1.0 - nodes**2) * quad)
    bary /= np.max(np.abs(bary))
    return _freeze(GLRule(N, nodes, quad, bary))


def _freeze(rule):
    for arr in (rule.nodes, rule.quad_weights, rule.bary_weights):
        arr.setflags(write=False)
    return rule
