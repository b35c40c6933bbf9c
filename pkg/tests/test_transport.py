import numpy as np
import pytest
from numpy.testing import assert_allclose

from dfsbary import DivergenceError
from dfsbary.transport import (
    SPEED_MAX,
    TransportConfig,
    VelocityField,
    cfl_steps,
    colatitude,
    eval_velocity,
    initial_condition,
    integrate,
    latitude,
    run_transport,
    to_cartesian,
    to_lonlat,
    trace_departure,
)


def test_latitude_colatitude_convention():
    assert colatitude(np.pi / 2) == 0.0
    assert colatitude(-np.pi / 2) == np.pi
    assert latitude(np.pi / 2) == 0.0
    lat = np.linspace(-1.5, 1.5, 7)
    assert_allclose(latitude(colatitude(lat)), lat, atol=1e-15)


def test_velocity_half_period(rng):
    f = VelocityField()
    lam, lat = rng.uniform(-np.pi, np.pi, 20), rng.uniform(-np.pi / 2, np.pi / 2, 20)
    u, v = eval_velocity(f, lam, lat, 2.5)
    assert_allclose(u, 2 * np.pi / 5 * np.cos(lat), atol=1e-15)
    assert_allclose(v, 0.0, atol=1e-15)


def test_velocity_origin():
    u, v = eval_velocity(VelocityField(), 0.0, 0.0, 0.0)
    assert abs(u - 2 * np.pi / 5) < 1e-15 and abs(v) < 1e-15


def test_velocity_max_speed():
    rng = np.random.default_rng(7)
    lam = rng.uniform(-np.pi, np.pi, 100_000)
    lat = np.arcsin(rng.uniform(-1, 1, 100_000))
    t = rng.uniform(0, 5, 100_000)
    u, v = eval_velocity(VelocityField(), lam, lat, t)
    vmax = np.sqrt(u**2 + v**2).max()
    assert abs(vmax - SPEED_MAX) / SPEED_MAX < 0.02


def test_cartesian_matches_lonlat(rng):
    f = VelocityField()
    lam, lat = rng.uniform(-np.pi, np.pi, 50), rng.uniform(-1.5, 1.5, 50)
    t = rng.uniform(0, 5, 50)
    u, v = f.lonlat(lam, lat, t)
    e_lam = np.stack([-np.sin(lam), np.cos(lam), 0 * lam], -1)
    e_lat = np.stack([-np.sin(lat) * np.cos(lam), -np.sin(lat) * np.sin(lam), np.cos(lat)], -1)
    expect = u[:, None] * e_lam + v[:, None] * e_lat
    assert_allclose(f.cartesian(to_cartesian(lam, lat), t), expect, atol=1e-13)


def test_flow_returns_after_one_period(rng):
    lam, lat = rng.uniform(-np.pi, np.pi, 30), rng.uniform(-1.4, 1.4, 30)
    x0 = to_cartesian(lam, lat)
    x1 = integrate(x0, 0.0, 5.0, VelocityField(), substeps=400)
    assert np.max(np.linalg.norm(x1 - x0, axis=-1)) < 1e-9


def test_initial_conditions():
    c1 = initial_condition("cosine", np.pi / 6, 0.0)
    assert abs(c1 - 1.0) < 1e-15  # 0.1 + 0.9 * (1 + 0)
    g1 = initial_condition("gaussian", np.pi / 6, 0.0)
    assert abs(g1 - 0.95 * (1 + np.exp(-5))) < 1e-14
    assert initial_condition("cosine", 0.3, np.pi / 2) == pytest.approx(0.1, abs=1e-15)
    # both bells sit on the equator, symmetric in longitude
    assert initial_condition("gaussian", -np.pi / 6, 0.0) == pytest.approx(g1, rel=1e-14)
    assert initial_condition("gaussian", 0.0, 0.3) == pytest.approx(initial_condition("gaussian", 0.0, -0.3))


def test_trace_zero_field(rng):
    lam, lat = rng.uniform(-3, 3, 20), rng.uniform(-1.5, 1.5, 20)
    ld, td = trace_departure(lam, lat, 1.0, 0.3, VelocityField(scale=0.0))
    assert_allclose(ld, lam, atol=1e-15)
    assert_allclose(td, lat, atol=1e-15)


def test_trace_solid_body(rng):
    lam, lat = rng.uniform(-1, 1, 20), rng.uniform(-1.2, 1.2, 20)
    ld, td = trace_departure(lam, lat, 2.5, 0.2, VelocityField(frozen_time=2.5))
    assert_allclose(ld, lam - 2 * np.pi / 5 * 0.2, atol=1e-10)
    assert_allclose(td, lat, atol=1e-10)


def test_trace_reversible(rng):
    lam, lat = rng.uniform(-3, 3, 20), rng.uniform(-1.4, 1.4, 20)
    f = VelocityField()
    # one Cash-Karp step leaves ~1e-7 truncation error over the round trip;
    # the error falls as substeps**-5
    ld, td = trace_departure(lam, lat, 1.3, 0.1, f, substeps=4)
    back = integrate(to_cartesian(ld, td), 1.2, 1.3, f, substeps=4)
    assert np.max(np.linalg.norm(back - to_cartesian(lam, lat), axis=-1)) < 1e-9


def test_trace_pole_safe():
    ld, td = trace_departure(np.array([0.0]), np.array([np.pi / 2]), 0.7, 0.1, VelocityField())
    assert np.isfinite(ld).all() and np.isfinite(td).all()


def test_dt_must_be_positive():
    with pytest.raises(ValueError):
        trace_departure(0.0, 0.0, 1.0, 0.0, VelocityField())


def test_config_validation():
    assert TransportConfig(m=10).n == 11
    with pytest.raises(ValueError):
        TransportConfig(num_steps=0)
    with pytest.raises(ValueError):
        TransportConfig(t_final=0)
    with pytest.raises(ValueError):
        TransportConfig(ic="square")


def test_cfl_steps():
    assert cfl_steps(120, 10) == 56
    assert cfl_steps(128, 1) == 597


@pytest.mark.parametrize("grid", ["eq", "seq", "gl"])
def test_zero_velocity_is_exact(grid):
    field, rep = run_transport(TransportConfig(grid=grid, m=8, num_steps=1, velocity_scale=0.0))
    assert rep.l2_error == 0.0 and rep.max_error == 0.0
    assert rep.dof == 16 * 9


def test_short_run_report():
    cfg = TransportConfig(m=16, ic="gaussian", num_steps=4, t_final=0.5, snapshot_times=[0.0, 0.25])
    field, rep = run_transport(cfg)
    assert field.values.shape == (17, 32) and field.time == pytest.approx(0.5)
    assert len(rep.step_times) == 4 and rep.dt == pytest.approx(0.125)
    assert set(rep.snapshots) == {0.0, 0.25}
    d = rep.to_dict()
    assert "snapshots" not in d and d["config"]["m"] == 16


def test_threads_identical():
    a, _ = run_transport(TransportConfig(m=24, num_steps=2, t_final=0.4, threads=1))
    b, _ = run_transport(TransportConfig(m=24, num_steps=2, t_final=0.4, threads=8))
    assert np.array_equal(a.values, b.values)


def test_divergence_error(monkeypatch):
    import dfsbary.transport as tr

    def bad(*args, **kwargs):
        return np.full(args[1].shape, np.nan)

    monkeypatch.setattr(tr, "eval_sphere_arrays", bad)
    with pytest.raises(DivergenceError) as exc:
        run_transport(TransportConfig(m=4, num_steps=3))
    assert exc.value.step == 1


def test_lonlat_roundtrip(rng):
    lam, lat = rng.uniform(-3, 3, 10), rng.uniform(-1.5, 1.5, 10)
    l2, t2 = to_lonlat(to_cartesian(lam, lat))
    assert_allclose(l2, lam, atol=1e-14)
    assert_allclose(t2, lat, atol=1e-14)
