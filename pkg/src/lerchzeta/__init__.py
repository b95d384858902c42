"""Lerch zeta evaluation through fractional differintegrals on rays.

L(t, x, s) = sum_{n>=0} (n+x)^(-s) exp(2 pi i t n) is computed three
independent ways: the defining series (the reference), a ray
differintegral of the lattice kernel exp(2 pi i u x)/(1 - exp(2 pi i u))
valid for Im(t) > 0, and a reflection form built from two such
differintegrals that reaches Re(s) < 1.  Riemann zeta falls out at
(t, x) = (1/2, 1) and in the t -> 0+ limit; Hurwitz zeta at t = 0.
The cross-method verification suites live in `suites` and behind the
`lerchzeta verify` command.
"""

from .backend import current as backend_current, use as backend_use
from .differintegral import (BasePoint, DifferintegralSpec, Exponential,
                             ExpSum, LerchKernel, Power, rl_exp_closed,
                             rl_numeric, rl_power_closed)
from .errors import (BranchCutError, DivergenceSuspected, DomainError,
                     ExtrapolationUnstable, LerchZetaError, NonconvergenceError,
                     PoleError, ToleranceNotMet)
from .extrapolate import RichardsonResult, richardson
from .fracrep import (InterchangeReport, InterchangeTestConfig,
                      LimitContourConfig, LimitResult, RealTResult,
                      interchange_check, lerch_theorem1, lerch_theorem1_real_t,
                      lerch_theorem2, riemann_halfpoint, riemann_limit)
from .lerch_ref import (ConjugationCheck, EvaluationPoint, SeriesResult,
                        conjugation_residual, hurwitz, lerch_series)
from .quadrature import QuadratureConfig, SingularWeight
from .suites import ComparisonRecord, run_suite

__version__ = "0.1.0"

__all__ = [
    "BasePoint",
    "BranchCutError",
    "ComparisonRecord",
    "ConjugationCheck",
    "DifferintegralSpec",
    "DivergenceSuspected",
    "DomainError",
    "EvaluationPoint",
    "Exponential",
    "ExpSum",
    "ExtrapolationUnstable",
    "InterchangeReport",
    "InterchangeTestConfig",
    "LerchKernel",
    "LerchZetaError",
    "LimitContourConfig",
    "LimitResult",
    "NonconvergenceError",
    "PoleError",
    "Power",
    "QuadratureConfig",
    "RealTResult",
    "RichardsonResult",
    "SeriesResult",
    "SingularWeight",
    "ToleranceNotMet",
    "backend_current",
    "backend_use",
    "conjugation_residual",
    "hurwitz",
    "interchange_check",
    "lerch_series",
    "lerch_theorem1",
    "lerch_theorem1_real_t",
    "lerch_theorem2",
    "riemann_halfpoint",
    "riemann_limit",
    "richardson",
    "rl_exp_closed",
    "rl_numeric",
    "rl_power_closed",
    "run_suite",
    "__version__",
]
