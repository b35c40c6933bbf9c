import numpy as np
import pytest
from numpy.testing import assert_allclose

from dfsbary.oracles import (
    OracleKind,
    cosine_lagrange,
    extend_longitude,
    full_poly_bary,
    mirror_radial,
    oracle_eval,
)


def test_cosine_lagrange_constant(rng):
    th = np.sort(rng.uniform(0, np.pi, 6))
    for x in rng.uniform(0, np.pi, 5):
        assert abs(oracle_eval(OracleKind.COSINE_LAGRANGE, th, np.full(6, 4.0), x) - 4.0) < 1e-12


def test_full_poly_at_node(rng):
    x = np.linspace(-1, 1, 7)
    f = rng.standard_normal(7)
    assert oracle_eval("full_poly_bary", x, f, x[3]) == f[3]


def test_oracles_agree_on_shared_space(rng):
    th = np.pi * (np.arange(8) + 0.5) / 8
    f = rng.standard_normal(8)
    for t in rng.uniform(0, np.pi, 20):
        a = cosine_lagrange(th, f, t)
        b = full_poly_bary(np.cos(th), f, np.cos(t))
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


def test_size_limit_and_parity():
    with pytest.raises(ValueError):
        oracle_eval("cosine_lagrange", np.linspace(0, 3, 65), np.ones(65), 0.1)
    with pytest.raises(ValueError):
        oracle_eval("full_trig_bary", np.arange(5.0), np.ones(5), 0.1)


def test_mirror_and_extend():
    xs, ys = mirror_radial([1.0, 0.5, 0.0], [1.0, 2.0, 3.0], odd=True)
    assert xs.tolist() == [1.0, 0.5, 0.0, -0.5, -1.0]
    assert ys.tolist() == [1.0, 2.0, 0.0, -2.0, -1.0]
    xs, ys = mirror_radial([0.9, 0.4], [1.0, 2.0], odd=False)
    assert xs.tolist() == [0.9, 0.4, -0.4, -0.9] and ys.tolist() == [1.0, 2.0, 2.0, 1.0]
    phi, vals = extend_longitude(np.pi * np.arange(3) / 3, [1.0, 2.0, 3.0], anti=True)
    assert_allclose(phi, np.pi * np.arange(6) / 3)
    assert vals.tolist() == [1.0, 2.0, 3.0, -1.0, -2.0, -3.0]
