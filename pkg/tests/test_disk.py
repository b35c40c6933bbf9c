import numpy as np
import pytest
from numpy.testing import assert_allclose

from conftest import random_disk
from dfsbary import (
    DomainError,
    SizeError,
    build_disk_interpolant,
    check_bmc2,
    eval_disk,
    eval_disk_batch,
    make_disk_grid,
)
from dfsbary.disk import eval_disk_arrays
from dfsbary.oracles import disk_oracle


def test_split_examples(rng):
    g = make_disk_grid("ch2", 1, 1, True)
    s = build_disk_interpolant(g, [[4.0, 0.0], [1.0, 1.0]])
    assert s.f_plus[0].tolist() == [2.0] and s.f_minus[0].tolist() == [2.0]
    g = make_disk_grid("ch1", 2, 3, False)
    s = build_disk_interpolant(g, np.full(g.shape, 0.5))
    assert np.all(s.f_minus == 0)
    g = make_disk_grid("glr", 3, 3, True)
    f = rng.standard_normal(g.shape)
    s = build_disk_interpolant(g, f)
    ulp = np.spacing(np.abs(f).max())
    assert np.max(np.abs(s.f_plus + s.f_minus - f[:, :3])) <= 2 * ulp
    assert np.max(np.abs(s.f_plus - s.f_minus - f[:, 3:])) <= 2 * ulp


def test_shape_mismatch():
    g = make_disk_grid("ch1", 2, 3, True)
    with pytest.raises(SizeError):
        build_disk_interpolant(g, np.zeros((3, 4)))


def test_domain_error(rng):
    g, f = random_disk("ch2", True, 2, 3, rng)
    s = build_disk_interpolant(g, f)
    with pytest.raises(DomainError):
        eval_disk(s, 0.0, 1.2)
    assert np.isfinite(eval_disk(s, 0.4, -1.0))


def test_node_reproduction_bitwise(disk_case, rng):
    g, f = random_disk(*disk_case, 4, 5, rng)
    s = build_disk_interpolant(g, f)
    P, R = g.mesh()
    assert np.array_equal(eval_disk_batch(s, np.stack([P.ravel(), R.ravel()], 1)), f.ravel())


def test_constant_and_x(disk_case, rng):
    kind, origin = disk_case
    g = make_disk_grid(kind, 3, 2, origin)
    P, R = g.mesh()
    phi, rho = rng.uniform(0, 2 * np.pi, 60), rng.uniform(0, 1, 60)
    s = build_disk_interpolant(g, np.full(g.shape, 0.3))
    assert_allclose(eval_disk_arrays(s, phi, rho), 0.3, rtol=1e-13)
    s = build_disk_interpolant(g, R * np.cos(P))
    assert_allclose(eval_disk_arrays(s, phi, rho), rho * np.cos(phi), atol=1e-12)


def test_glide_reflection_and_periodicity(disk_case, rng):
    g, f = random_disk(*disk_case, 5, 6, rng)
    s = build_disk_interpolant(g, f)
    phi, rho = rng.uniform(0, 2 * np.pi, 100), rng.uniform(0, 1, 100)
    v = eval_disk_arrays(s, phi, rho)
    scale = np.max(np.abs(v))
    assert np.max(np.abs(eval_disk_arrays(s, phi, -rho) - eval_disk_arrays(s, phi + np.pi, rho))) < 1e-12 * scale
    assert np.max(np.abs(eval_disk_arrays(s, phi - 2 * np.pi, rho) - v)) < 1e-12 * scale


@pytest.mark.parametrize("m", [1, 4, 5])
def test_matches_oracle(disk_case, m, rng):
    g, f = random_disk(*disk_case, m, 5, rng)
    s = build_disk_interpolant(g, f)
    pts = np.stack([rng.uniform(0, 2 * np.pi, 30), rng.uniform(-1, 1, 30)], 1)
    ref = np.array([disk_oracle(g, f, p, r) for p, r in pts])
    assert np.max(np.abs(eval_disk_batch(s, pts) - ref)) < 1e-12 * np.max(np.abs(ref))


def test_batch_threads(rng):
    g, f = random_disk("glr", False, 6, 6, rng)
    s = build_disk_interpolant(g, f)
    pts = np.stack([rng.uniform(0, 2 * np.pi, 5000), rng.uniform(0, 1, 5000)], 1)
    a = eval_disk_batch(s, pts)
    assert np.array_equal(a, eval_disk_batch(s, pts, threads=8))
    assert np.array_equal(a[:50], [eval_disk(s, p, r) for p, r in pts[:50]])


def test_bmc2(rng):
    g = make_disk_grid("ch2", 12, 12, True)
    P, R = g.mesh()
    x, y = R * np.cos(P), R * np.sin(P)
    rep = check_bmc2(build_disk_interpolant(g, np.exp(x - 2 * y) * np.cos(x * y)))
    assert rep.guaranteed and rep.deviation < 1e-12
    g = make_disk_grid("ch1", 4, 4, False)
    assert check_bmc2(build_disk_interpolant(g, np.full(g.shape, 2.0))).deviation < 1e-15
    f = rng.standard_normal(g.shape)
    f[:, 4:] = -f[:, :4]
    s = build_disk_interpolant(g, f)
    assert np.all(s.f_plus == 0)
    assert np.all(eval_disk_arrays(s, rng.uniform(0, 6, 20), 0.0) == 0.0)
