"""Numerics for the colored Jones polynomial of the figure-eight knot at q = exp(xi/N)."""

from .asymptotics_verifier import (
    AsymptoticPrediction,
    ConvergenceReport,
    convergence_study,
    known_case_predict,
    predict,
    saddle_check,
    sum_vs_integral_check,
)
from .errors import (
    BracketError,
    DegenerateSaddleError,
    DomainError,
    Fig8Error,
    NumericalFailure,
    PoleError,
)
from .figure_eight_core import (
    KAPPA,
    CuspParameter,
    LogComplex,
    action_s,
    action_s_minus,
    action_s_plus,
    alexander,
    colored_jones,
    longitude_eigenvalue,
    make_cusp,
    torsion,
    v_of,
)
from .quantum_dilog import (
    PotentialContext,
    QuadratureSpec,
    big_f,
    big_f_prime,
    f_n,
    jones_via_potential,
    make_context,
    t_n,
)
from .region_atlas import RegionDiagnostics, RegionLabel, classify, hv_membership
from .special_functions import dilog, l1, l2, principal_log, principal_sqrt
from .topology_invariants import (
    Matrix2C,
    RileyRep,
    check_relation,
    cs_invariant,
    longitude_matrix,
    riley_rep,
)

__version__ = "0.1.0"
