"""Exact elliptic quasimap and genus-1 Gromov-Witten potentials of local
Calabi-Yau complete intersections in projective space."""

from .cyclotomic import HPoly, IExpansion
from .errors import QMError
from .ifunction import GeometrySpec, expand_I, extract_I0_I1, pf_check
from .invariants import (
    DiagnosticSeries,
    InitialConstants,
    compute_Ck,
    diagnostics,
    quasimap_potential,
    vert_loop_consistency,
)
from .series import PowerSeries
from .wallcross import (
    PotentialReport,
    chern_coefficient,
    compute_report,
    euler_characteristic,
    gw_potential,
    mirror_map,
    nd_crosscheck,
)

__version__ = "0.1.0"
