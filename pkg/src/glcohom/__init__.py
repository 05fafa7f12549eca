"""Mod-2 cohomology of finite groups and parity certificates for GL_r(F_2)."""

from .cohom import (
    CohomologyResult,
    Resolution,
    ResourceExceeded,
    bar_oracle,
    build_resolution,
    cohomology_dims,
    compute_cohomology,
)
from .f2la import BitMatrix, EchelonForm, in_span, kernel_basis, rank, rref
from .grpcore import CapExceeded, ElementTable, GeneratorSet, close_generators, frattini_rank, order_factorization
from .parabolic import (
    Composition,
    compositions,
    dual,
    gl_order,
    parabolic_generators,
    parabolic_label,
    parabolic_order,
    symmetric_compositions,
)
from .specs import parse_group_spec
from .webb import Ledger, LedgerEntry, ParityReport, ledger_append, ledger_load, parity_sum, report_render

__version__ = "0.1.0"
