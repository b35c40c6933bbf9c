"""Barycentric interpolation on tensor-product sphere and disk grids.

Double Fourier sphere barycentric formulas for latitude-longitude grids on
the sphere and polar grids on the disk, a Gauss-Legendre rule generator,
and a semi-Lagrangian tracer transport solver built on the sphere
interpolant.
"""

from .bary1d import (
    HIT_TOL,
    TableKind,
    WeightTable,
    pi_antiperiodic_eval,
    pi_periodic_eval,
    poly_even_eval,
    poly_even_weights,
    poly_odd_eval,
    poly_odd_weights,
    trig_even_eval,
    trig_even_weights,
    trig_odd_eval,
    trig_odd_weights,
)
from .disk import DiskInterpolant, build_disk_interpolant, check_bmc2, eval_disk, eval_disk_batch
from .errors import (
    DegeneracyError,
    DfsError,
    DivergenceError,
    DomainError,
    NumericalError,
    SizeError,
)
from .gauss_legendre import GLRule, gl_nodes
from .grids import DiskGrid, DiskKind, SphereGrid, SphereKind, make_disk_grid, make_sphere_grid
from .sphere import (
    PoleReport,
    SphereInterpolant,
    build_sphere_interpolant,
    check_bmc1,
    eval_sphere,
    eval_sphere_batch,
)
from .transport import (
    InitialCondition,
    TracerField,
    TransportConfig,
    TransportReport,
    VelocityField,
    eval_velocity,
    initial_condition,
    run_transport,
    trace_departure,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
