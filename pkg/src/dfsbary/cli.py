"""Command-line interface: ``dfsbary {grid,interp,converge,sla,selftest}``.

Exit codes: 0 success, 1 self-test failure, 2 usage error, 3 data error
(unreadable or malformed input, inconsistent sizes), 4 numerical divergence.

CSV conventions
---------------
Samples: one row per colatitude (theta ascending) or radius (rho
descending), one column per longitude (phi ascending), no header.
Points: two columns ``phi,theta`` or ``phi,rho``; an optional header line
is skipped. Floats are written in shortest round-trip form.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import fields
from pathlib import Path

import numpy as np

from . import convergence, oracles
from .disk import build_disk_interpolant, eval_disk_batch
from .errors import DfsError, DivergenceError
from .grids import DiskKind, SphereKind, make_disk_grid, make_sphere_grid
from .sphere import build_sphere_interpolant, eval_sphere_batch
from .transport import TransportConfig, run_transport

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA, EXIT_DIVERGED = 0, 1, 2, 3, 4

SPHERE_KINDS = [k.value for k in SphereKind]
DISK_KINDS = [k.value for k in DiskKind]

log = logging.getLogger("dfsbary")


class DataError(Exception):
    """Bad input data; mapped to exit code 3."""


def fmt(x):
    return repr(float(x))


def _is_sphere(kind):
    return kind in SPHERE_KINDS


def _make_grid(args):
    if _is_sphere(args.grid):
        return make_sphere_grid(args.grid, args.m, args.n if args.n is not None else args.m)
    return make_disk_grid(args.grid, args.m, args.n if args.n is not None else args.m, args.include_origin)


def _open_out(path):
    if path is None or path == "-":
        return sys.stdout, False
    try:
        return open(path, "w", newline=""), True
    except OSError as exc:
        raise DataError(f"cannot write {path}: {exc.strerror}") from exc


def _read_text(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from exc


def read_matrix(path):
    """Read a numeric CSV without header into a 2D array."""
    rows = []
    for lineno, row in enumerate(csv.reader(io.StringIO(_read_text(path))), 1):
        if not row or row[0].startswith("#"):
            continue
        try:
            rows.append([float(v) for v in row])
        except ValueError as exc:
            raise DataError(f"{path}:{lineno}: {exc}") from exc
    if not rows:
        raise DataError(f"{path}: no data")
    if len({len(r) for r in rows}) != 1:
        raise DataError(f"{path}: rows have different lengths")
    return np.array(rows)


def read_points(path):
    """Read ``(N, 2)`` points; a non-numeric first line is taken as a header."""
    pts = []
    for lineno, row in enumerate(csv.reader(io.StringIO(_read_text(path))), 1):
        if not row or row[0].startswith("#"):
            continue
        try:
            vals = [float(v) for v in row]
        except ValueError as exc:
            if not pts and lineno == 1:
                continue
            raise DataError(f"{path}:{lineno}: {exc}") from exc
        if len(vals) != 2:
            raise DataError(f"{path}:{lineno}: expected 2 columns, found {len(vals)}")
        pts.append(vals)
    return np.array(pts, dtype=float).reshape(-1, 2)


# -- commands -----------------------------------------------------------------


def cmd_grid(args):
    g = _make_grid(args)
    coord = g.theta if _is_sphere(args.grid) else g.rho
    tables = {"phi": g.phi, "coord": coord}
    for name, values in tables.items():
        if args.out:
            fh, close = _open_out(f"{args.out}_{name}.csv")
        else:
            fh, close = sys.stdout, False
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["index", name])
        for i, v in enumerate(values):
            w.writerow([i, fmt(v)])
        if close:
            fh.close()
    return EXIT_OK


def _oracle_values(grid, samples, pts, sphere):
    ref = oracles.sphere_oracle if sphere else oracles.disk_oracle
    return np.array([ref(grid, samples, p, t) for p, t in pts])


def cmd_interp(args):
    g = _make_grid(args)
    sphere = _is_sphere(args.grid)
    samples = read_matrix(args.samples)
    if samples.shape != g.shape:
        raise DataError(
            f"{args.samples}: expected {g.shape[0]} rows x {g.shape[1]} columns, "
            f"found {samples.shape[0]} x {samples.shape[1]}"
        )
    pts = read_points(args.points)
    if sphere:
        s = build_sphere_interpolant(g, samples)
        values = eval_sphere_batch(s, pts, threads=args.threads)
    else:
        s = build_disk_interpolant(g, samples)
        values = eval_disk_batch(s, pts, threads=args.threads)
    if args.oracle:
        ref = _oracle_values(g, samples, pts, sphere)
        scale = max(1.0, float(np.max(np.abs(ref)))) if ref.size else 1.0
        diff = float(np.max(np.abs(values - ref))) / scale if ref.size else 0.0
        print(f"oracle max relative difference: {diff:.3e}", file=sys.stderr)
        values = ref
    fh, close = _open_out(args.out)
    fh.write("value\n")
    for v in values:
        fh.write(fmt(v) + "\n")
    if close:
        fh.close()
    return EXIT_OK


def cmd_converge(args):
    m_list = args.m_list
    if any(b <= a for a, b in zip(m_list, m_list[1:])):
        raise DataError("--m values must be strictly ascending")
    if _is_sphere(args.grid):
        func = convergence.constant_function if args.constant else convergence.sphere_test_function
        rows = convergence.converge_sphere(args.grid, m_list, args.eval_count, args.seed, func, args.threads)
    else:
        func = convergence.constant_function if args.constant else convergence.disk_test_function
        rows = convergence.converge_disk(
            args.grid, m_list, args.eval_count, args.seed, func, args.include_origin, args.threads
        )
    fh, close = _open_out(args.out)
    fh.write(f"# seed={args.seed} eval_count={args.eval_count}\n")
    fh.write("grid,m,N,rel_max_err\n")
    for r in rows:
        fh.write(f"{r.grid},{r.m},{r.N},{fmt(r.rel_max_err)}\n")
    if close:
        fh.close()
    ok = convergence.geometric_decay([r.rel_max_err for r in rows])
    print(f"geometric decay: {'yes' if ok else 'no'}", file=sys.stderr)
    return EXIT_OK


_CONFIG_ALIASES = {"steps": "num_steps", "kind": "grid"}


def load_sla_config(path):
    """Parse a JSON run configuration; returns ``(TransportConfig, extras)``.

    Extra keys understood here: ``output`` (report path) and
    ``snapshot_prefix`` (CSV field dumps).
    """
    text = _read_text(path)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise DataError(f"{path}: top level must be an object")
    known = {f.name for f in fields(TransportConfig)}
    kwargs, extras = {}, {}
    for key, value in raw.items():
        name = _CONFIG_ALIASES.get(key, key)
        if name in ("output", "snapshot_prefix"):
            extras[name] = value
        elif name in known:
            kwargs[name] = value
        else:
            raise DataError(f"{path}: unknown field '{key}'")
    try:
        return TransportConfig(**kwargs), extras
    except (TypeError, ValueError) as exc:
        raise DataError(f"{path}: invalid configuration: {exc}") from exc


def cmd_sla(args):
    config, extras = load_sla_config(args.config)
    if args.threads is not None:
        config.threads = args.threads
    try:
        field, report = run_transport(config)
    except DivergenceError as exc:
        print(f"error: diverged at step {exc.step}", file=sys.stderr)
        return EXIT_DIVERGED
    out = args.out or extras.get("output")
    fh, close = _open_out(out)
    json.dump(report.to_dict(), fh, indent=2)
    fh.write("\n")
    if close:
        fh.close()
    prefix = extras.get("snapshot_prefix")
    if prefix:
        for t, values in sorted(report.snapshots.items()):
            sfh, _ = _open_out(f"{prefix}_t{t:g}.csv")
            with sfh:
                for row in values:
                    sfh.write(",".join(fmt(v) for v in row) + "\n")
    return EXIT_OK


def cmd_selftest(args):
    """Quick consistency checks against the reference evaluators."""
    rng = np.random.default_rng(args.seed)
    failures = 0

    def report(name, err, tol):
        nonlocal failures
        ok = err < tol
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: {err:.2e} (tol {tol:g})")

    pts = rng.uniform([0, 0], [2 * np.pi, np.pi], size=(20, 2))
    for kind in SPHERE_KINDS:
        g = make_sphere_grid(kind, 5, 6)
        f = rng.standard_normal(g.shape)
        if kind == "eq":
            f[0], f[-1] = f[0, 0], f[-1, 0]
        s = build_sphere_interpolant(g, f)
        v = eval_sphere_batch(s, pts)
        ref = _oracle_values(g, f, pts, True)
        report(f"sphere {kind} oracle", float(np.max(np.abs(v - ref)) / np.max(np.abs(ref))), 1e-12)
        nodes = np.stack([a.ravel() for a in g.mesh()], axis=1)
        report(f"sphere {kind} nodes", float(np.max(np.abs(eval_sphere_batch(s, nodes) - f.ravel()))), 1e-12)
    dpts = np.stack([rng.uniform(0, 2 * np.pi, 20), rng.uniform(0, 1, 20)], axis=1)
    for kind in DISK_KINDS:
        for origin in (True, False):
            g = make_disk_grid(kind, 5, 5, origin)
            f = rng.standard_normal(g.shape)
            if origin:
                f[-1] = f[-1, 0]
            s = build_disk_interpolant(g, f)
            v = eval_disk_batch(s, dpts)
            ref = _oracle_values(g, f, dpts, False)
            tag = "origin" if origin else "no-origin"
            report(f"disk {kind} {tag} oracle", float(np.max(np.abs(v - ref)) / np.max(np.abs(ref))), 1e-12)
    print("selftest: " + ("ok" if failures == 0 else f"{failures} failure(s)"))
    return EXIT_OK if failures == 0 else EXIT_FAIL


# -- parser ---------------------------------------------------------------------


def _add_grid_args(p, m_multiple=False):
    p.add_argument("--grid", required=True, choices=SPHERE_KINDS + DISK_KINDS)
    if m_multiple:
        p.add_argument("--m", dest="m_list", type=int, nargs="+", required=True,
                       help="ascending list of m (n = m)")
    else:
        p.add_argument("--m", type=int, required=True, help="half the number of longitudes")
        p.add_argument("--n", type=int, help="latitudes (sphere) or radii minus one (disk); default m")
    p.add_argument("--include-origin", action=argparse.BooleanOptionalAction, default=True,
                   help="disk grids only (default: include)")


def build_parser():
    parser = argparse.ArgumentParser(prog="dfsbary", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("grid", help="write grid coordinates as CSV")
    _add_grid_args(p)
    p.add_argument("--out", help="prefix; writes PREFIX_phi.csv and PREFIX_coord.csv")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("interp", help="interpolate sampled data at points")
    _add_grid_args(p)
    p.add_argument("--samples", required=True)
    p.add_argument("--points", required=True)
    p.add_argument("--out")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--oracle", action="store_true",
                   help="use the slow reference evaluator and report the difference")
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("converge", help="convergence study on the smooth test functions")
    _add_grid_args(p, m_multiple=True)
    p.add_argument("--eval-count", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--constant", action="store_true", help="interpolate a constant instead")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("sla", help="semi-Lagrangian transport run from a JSON config")
    p.add_argument("config")
    p.add_argument("--out", help="report path (overrides the config's 'output')")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_sla)

    p = sub.add_parser("selftest", help="compare fast kernels with reference evaluators")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (DataError, DfsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
