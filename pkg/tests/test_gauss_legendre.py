import numpy as np
import pytest
from numpy.testing import assert_allclose

from dfsbary import NumericalError, SizeError, gl_nodes
from dfsbary.gauss_legendre import legendre_eval
from dfsbary.oracles import full_poly_bary


def test_two_point_rule():
    r = gl_nodes(2)
    assert_allclose(r.nodes, [-0.5773502691896257, 0.5773502691896257], rtol=0, atol=1e-15)
    assert_allclose(r.quad_weights, [1.0, 1.0], rtol=0, atol=1e-15)


def test_three_point_rule():
    r = gl_nodes(3)
    assert_allclose(r.nodes, [-np.sqrt(0.6), 0.0, np.sqrt(0.6)], rtol=0, atol=1e-15)
    assert_allclose(r.quad_weights, [5 / 9, 8 / 9, 5 / 9], rtol=0, atol=1e-15)


@pytest.mark.parametrize("N", [8, 13, 20])
def test_bary_weights_match_product_formula(N):
    r = gl_nodes(N)
    x = r.nodes
    w = np.array([1 / np.prod(x[j] - np.delete(x, j)) for j in range(N)])
    ratio = r.bary_weights / w
    assert_allclose(ratio, ratio[0], rtol=1e-12)


@pytest.mark.parametrize("N", range(1, 41))
def test_invariants(N):
    r = gl_nodes(N)
    assert r.degree == N
    assert np.all(np.diff(r.nodes) > 0)
    assert abs(r.quad_weights.sum() - 2) < 1e-13
    assert np.all(r.quad_weights > 0)
    assert_allclose(r.nodes, -r.nodes[::-1], rtol=0, atol=1e-15)
    assert_allclose(r.quad_weights, r.quad_weights[::-1], rtol=1e-14)
    assert np.all(r.bary_weights[:-1] * r.bary_weights[1:] < 0)
    assert np.max(np.abs(r.bary_weights)) == 1.0


def test_matches_numpy():
    # numpy's own weights lose accuracy near the endpoints for larger N
    for N in (5, 17, 64):
        x, w = np.polynomial.legendre.leggauss(N)
        r = gl_nodes(N)
        assert_allclose(r.nodes, x, rtol=0, atol=1e-14)
        assert_allclose(r.quad_weights, w, rtol=5e-12)


def test_large_n_converges():
    r = gl_nodes(10_000)
    assert r.nodes.size == 10_000
    assert abs(r.quad_weights.sum() - 2) < 1e-12


@pytest.mark.parametrize("N", [0, -1, 10_001])
def test_size_errors(N):
    with pytest.raises(SizeError):
        gl_nodes(N)


def test_error_types():
    assert issubclass(NumericalError, ArithmeticError)


def test_rule_is_read_only():
    r = gl_nodes(6)
    with pytest.raises(ValueError):
        r.nodes[0] = 0.0


def test_weight_scale_invariance_at_evaluation_level(rng):
    from dfsbary import make_disk_grid, poly_even_eval, poly_even_weights

    g = make_disk_grid("glr", 1, 6, False)
    table = poly_even_weights(g.rho, "glr", False)
    f = rng.standard_normal(g.rho.size)
    rho = rng.uniform(0, 1, 50)
    assert_allclose(poly_even_eval(table.rescaled(-3.7e5), f, rho), poly_even_eval(table, f, rho),
                    rtol=1e-14)


def test_legendre_eval_recurrence():
    x = np.linspace(-1, 1, 7)
    p, _ = legendre_eval(3, x)
    assert_allclose(p, 0.5 * (5 * x**3 - 3 * x), atol=1e-15)
    # interpolation at GL nodes reproduces a cubic
    r = gl_nodes(4)
    assert abs(full_poly_bary(r.nodes, r.nodes**3, 0.3) - 0.027) < 1e-14
