"""Lerch zeta through fractional differintegrals of the lattice kernel.

The central identity: with f(u) = exp(2 pi i u x) / (1 - exp(2 pi i u)),

    L(t, x, s) = (2 pi)^s exp(i pi (s/2 - 2 t x)) * D^(-s) f (t)

for Im(t) > 0, where D is the ray differintegral with base -infinity.
The prefactor equals (2 pi i)^s exp(-2 pi i t x) with principal powers;
the two forms agree identically and the expanded one avoids a spurious
branch jump at Re(s) integer.

Real t sits on the boundary of validity (the kernel has poles at every
integer u), so real-t evaluation approaches it through a ladder
t + i eps_k with Richardson extrapolation in eps.  The same ladder
machinery drives the reflection-type representation (lerch_theorem2)
whose two differintegrals are taken at the base points -x and x, and the
Riemann-zeta corollaries.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

from .complexfn import gamma, principal_pow
from .differintegral import (BasePoint, DifferintegralSpec, ExpSum,
                             LerchKernel, rl_exp_closed, rl_numeric)
from .errors import DomainError, PoleError
from .extrapolate import richardson
from .lerch_ref import EvaluationPoint
from .quadrature import QuadratureConfig

__all__ = [
    "LimitContourConfig",
    "InterchangeTestConfig",
    "RealTResult",
    "LimitResult",
    "InterchangeRecord",
    "InterchangeReport",
    "lerch_theorem1",
    "lerch_theorem1_real_t",
    "riemann_halfpoint",
    "riemann_limit",
    "lerch_theorem2",
    "interchange_check",
]

TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class LimitContourConfig:
    """Ladder eps_k = eps0 / ratio**k used to reach real parameters."""

    eps0: float = 1e-2
    levels: int = 6
    ratio: float = 2.0
    extrapolation: str = "richardson"  # or "none": take the last level

    def __post_init__(self):
        if not 0.0 < self.eps0 <= 0.5:
            raise DomainError(f"eps0 must lie in (0, 0.5]; got {self.eps0}")
        if self.levels < 2:
            raise DomainError("need at least two ladder levels")
        if not self.ratio > 1.0:
            raise DomainError(f"ladder ratio must exceed 1; got {self.ratio}")
        if self.extrapolation not in ("richardson", "none"):
            raise DomainError(
                f"extrapolation must be 'richardson' or 'none'; "
                f"got {self.extrapolation!r}")


@dataclass(frozen=True)
class InterchangeTestConfig:
    """Disc and term schedule for the sum/differintegral swap check."""

    disc_center: complex = 0.3 + 0.7j
    disc_radius: float = 0.5
    #: safety margin applied to the geometric tail-bound modulus
    delta: float = 0.1
    partial_terms: tuple = (0, 5, 10, 20, 40)

    def __post_init__(self):
        c = complex(self.disc_center)
        if self.disc_radius <= 0.0:
            raise DomainError("disc_radius must be positive")
        edge = c - self.disc_radius
        if edge.imag == 0.0 and edge.real >= 0.0:
            raise DomainError(
                "disc_center - disc_radius must avoid [0, inf); "
                f"got {edge}")
        if not 0.0 < self.delta < 1.0:
            raise DomainError(f"delta must lie in (0, 1); got {self.delta}")
        if not self.partial_terms or any(n < 0 for n in self.partial_terms):
            raise DomainError("partial_terms must be non-negative and non-empty")


@dataclass(frozen=True)
class RealTResult:
    value: complex
    error: float
    #: per-level values along the eps ladder
    levels: tuple
    extrapolants: tuple
    diffs: tuple


@dataclass(frozen=True)
class LimitResult:
    value: complex
    error: float
    ts: tuple
    level_values: tuple
    extrapolants: tuple
    diffs: tuple


def _theorem1_prefactor(t: complex, x: complex, s: complex) -> complex:
    return cmath.exp(s * math.log(2.0 * math.pi)
                     + 1j * math.pi * (0.5 * s - 2.0 * t * x))


def lerch_theorem1(point: EvaluationPoint, cfg: QuadratureConfig | None = None,
                   *, direction: float | None = None) -> tuple[complex, float]:
    """L(t, x, s) via the ray differintegral; needs Im(t) > 0, x off (-inf, 0]."""
    if not point.in_theorem1_domain:
        raise DomainError(
            "differintegral route requires Im(t) > 0 and x off the cut "
            f"(-inf, 0]; got t = {point.t}, x = {point.x}")
    t, x, s = complex(point.t), complex(point.x), complex(point.s)
    dspec = DifferintegralSpec(-s, BasePoint.MINUS_INFINITY, LerchKernel(x))
    D, err = rl_numeric(dspec, t, cfg, direction=direction)
    pref = _theorem1_prefactor(t, x, s)
    return pref * D, abs(pref) * err


def _eps_ladder(lcfg: LimitContourConfig, pole_distance: float = math.inf):
    """Ladder eps_k, with eps0 capped well below the nearest kernel pole.

    The ladder only sits in its asymptotic regime once eps is small
    against the distance from the real base point to the pole lattice,
    so the configured eps0 acts as an upper bound, not an absolute.
    """
    eps0 = min(lcfg.eps0, pole_distance / 8.0)
    return [eps0 / lcfg.ratio ** k for k in range(lcfg.levels)]


def _collapse(values, errs, lcfg: LimitContourConfig):
    """(value, error, extrapolants, diffs) for a ladder of measurements."""
    worst = max(errs)
    if lcfg.extrapolation == "none":
        tail_gap = abs(values[-1] - values[-2])
        return values[-1], worst + tail_gap, tuple(values), (tail_gap,)
    rich = richardson(values, lcfg.ratio, noise_floor=10.0 * worst)
    return rich.value, max(rich.error, worst), rich.extrapolants, rich.diffs


def lerch_theorem1_real_t(t: float, x: complex, s: complex,
                          lcfg: LimitContourConfig | None = None,
                          cfg: QuadratureConfig | None = None) -> RealTResult:
    """L(t, x, s) for real non-integer t, by the ladder t + i eps_k."""
    if lcfg is None:
        lcfg = LimitContourConfig()
    t = complex(t)
    if t.imag != 0.0:
        raise DomainError(
            f"t must be real here (got {t}); use lerch_theorem1 for Im t > 0")
    tr = t.real
    if abs(tr - round(tr)) < 1e-9:
        raise PoleError(
            f"t = {tr} is (numerically) an integer; the kernel pole sits at "
            "the contour start")
    values, errs = [], []
    for eps in _eps_ladder(lcfg, abs(tr - round(tr))):
        v, e = lerch_theorem1(EvaluationPoint(tr + 1j * eps, x, s), cfg)
        values.append(v)
        errs.append(e)
    value, error, extr, diffs = _collapse(values, errs, lcfg)
    return RealTResult(value, error, tuple(values), extr, diffs)


def riemann_halfpoint(s: complex, lcfg: LimitContourConfig | None = None,
                      cfg: QuadratureConfig | None = None) -> tuple[complex, float]:
    """zeta(s) = L(1/2, 1, s) / (1 - 2^(1-s)); s away from 1."""
    s = complex(s)
    denom = 1.0 - principal_pow(2.0, 1.0 - s)
    if abs(denom) < 1e-8:
        raise PoleError(
            f"1 - 2^(1-s) vanishes near s = {s}; the half-point form has a "
            "0/0 there (and zeta itself has its pole at s = 1)")
    r = lerch_theorem1_real_t(0.5, 1.0, s, lcfg, cfg)
    return r.value / denom, r.error / abs(denom)


def riemann_limit(s: complex, t0: float = 0.08,
                  lcfg: LimitContourConfig | None = None,
                  cfg: QuadratureConfig | None = None) -> LimitResult:
    """zeta(s) = lim_{t->0+} exp(2 pi i t) L(t, 1, s), extrapolated.

    Requires Re(s) > 1; the limit values W(t) = exp(2 pi i t) L(t, 1, s)
    carry a t^(s-1) term (times log t at integer s), so the polynomial
    ladder converges slowly when s - 1 is small and the diffs sequence in
    the result is the honest record of that.
    """
    s = complex(s)
    if not s.real > 1.0:
        raise DomainError(f"the t -> 0 limit needs Re(s) > 1; got s = {s}")
    if lcfg is None:
        lcfg = LimitContourConfig()
    if not 0.0 < t0 < 0.5:
        raise DomainError(f"t0 must lie in (0, 0.5); got {t0}")
    ts = [t0 / lcfg.ratio ** k for k in range(lcfg.levels)]
    values, errs = [], []
    for tk in ts:
        r = lerch_theorem1_real_t(tk, 1.0, s, lcfg, cfg)
        values.append(cmath.exp(TWO_PI_I * tk) * r.value)
        errs.append(r.error)
    worst = max(errs)
    if lcfg.extrapolation == "none":
        gap = abs(values[-1] - values[-2])
        return LimitResult(values[-1], worst + gap, tuple(ts), tuple(values),
                           tuple(values), (gap,))
    rich = richardson(values, lcfg.ratio,
                      exponents=_limit_exponents(s, lcfg.levels - 1),
                      noise_floor=10.0 * worst)
    return LimitResult(rich.value, max(rich.error, worst), tuple(ts),
                       tuple(values), rich.extrapolants, rich.diffs)


def _limit_exponents(s: complex, count: int):
    """Error powers of W(t) about t = 0: integer powers t^j plus a single
    t^(s-1) term, the latter carrying a log t factor when s is a positive
    integer.  The log pair is absorbed by listing that power twice."""
    s = complex(s)
    base = [float(j) for j in range(1, count + 2)]
    if abs(s.imag) < 1e-12 and abs(s.real - round(s.real)) < 1e-12:
        sched = sorted(base + [round(s.real) - 1.0])
    else:
        sched = sorted(base + [s - 1.0], key=lambda z: complex(z).real)
    return sched[:count]


def lerch_theorem2(t: complex, x: float, s: complex,
                   lcfg: LimitContourConfig | None = None,
                   cfg: QuadratureConfig | None = None) -> tuple[complex, float]:
    """L(t, x, 1-s) from two differintegrals taken at base points -x and x.

    With g_a(u) = exp(2 pi i u a) / (1 - exp(2 pi i u)),

        L(t, x, 1-s) = Gamma(s) [ e^(i pi s) D^(-s) g_t (-x)
                                  + D^(-s) g_{1-t} (x) ].

    Needs real x in (0, 1) and either Im(t) > 0 or real t in (0, 1).
    The base points are approached through the usual eps ladder.
    """
    # the deep end of the eps ladder drags the ray past kernel poles at
    # distance eps, and the m-th derivative kernel peaks like eps**-(m+1);
    # summing those peaks in doubles floors the achievable absolute error
    # well above the usual 1e-11 request.  For m >= 2 keep the ladder
    # shallower (its truncation error is still far below the noise) and in
    # both regimes ask the quadrature only for what roundoff permits.
    m = max(0, math.floor((-complex(s)).real) + 1)
    if lcfg is None:
        lcfg = LimitContourConfig()
        if m >= 2:
            lcfg = replace(lcfg, eps0=4.0 * lcfg.eps0)
    if cfg is None:
        cfg = (QuadratureConfig(rel_tol=1e-9, abs_tol=1e-11) if m <= 1
               else QuadratureConfig(rel_tol=3e-9, abs_tol=5e-8))
    x = complex(x)
    if x.imag != 0.0 or not 0.0 < x.real < 1.0:
        raise DomainError(f"x must be real in (0, 1); got {x}")
    xr = x.real
    t = complex(t)
    if t.imag < 0.0:
        raise DomainError(f"Im(t) must be >= 0; got t = {t}")
    if t.imag == 0.0 and not 0.0 < t.real < 1.0:
        raise DomainError(
            f"real t must lie in (0, 1) so both t and 1-t stay off the cut; "
            f"got t = {t}")
    s = complex(s)
    gs = gamma(s)  # PoleError at non-positive integer s
    eips = cmath.exp(1j * math.pi * s)
    k_t = LerchKernel(t)
    k_omt = LerchKernel(1.0 - t)
    d1 = DifferintegralSpec(-s, BasePoint.MINUS_INFINITY, k_t)
    d2 = DifferintegralSpec(-s, BasePoint.MINUS_INFINITY, k_omt)
    values, errs = [], []
    for eps in _eps_ladder(lcfg, min(xr, 1.0 - xr)):
        v1, e1 = rl_numeric(d1, -xr + 1j * eps, cfg)
        v2, e2 = rl_numeric(d2, xr + 1j * eps, cfg)
        values.append(gs * (eips * v1 + v2))
        errs.append(abs(gs) * (abs(eips) * e1 + e2))
    value, error, _extr, _diffs = _collapse(values, errs, lcfg)
    return value, error


@dataclass(frozen=True)
class InterchangeRecord:
    n_terms: int
    ray_value: complex
    closed_sum: complex
    residual: float


@dataclass(frozen=True)
class InterchangeReport:
    records: tuple
    lattice_value: complex
    lattice_error: float
    tail_bound: float


def interchange_check(point: EvaluationPoint,
                      icfg: InterchangeTestConfig | None = None,
                      cfg: QuadratureConfig | None = None) -> InterchangeReport:
    """Termwise differintegration of the mode expansion, checked two ways.

    For each N in the schedule the ray differintegral of the truncated
    mode sum sum_{n<=N} exp(2 pi i u (x+n)) is compared against the sum
    of closed forms k^(-(-s))... i.e. sum_n (2 pi i (x+n))^s-type terms;
    the swap of sum and integral is exact for finite N, so the residual
    measures the engine only.  The full lattice-kernel differintegral and
    a geometric tail bound close the gap to N -> infinity.
    """
    if icfg is None:
        icfg = InterchangeTestConfig()
    t, x, s = complex(point.t), complex(point.x), complex(point.s)
    if abs(t - complex(icfg.disc_center)) > icfg.disc_radius:
        raise DomainError(
            f"t = {t} lies outside the test disc around {icfg.disc_center}")
    if not t.imag > 0.0:
        raise DomainError(f"the geometric tail bound needs Im(t) > 0; got {t}")
    records = []
    for N in icfg.partial_terms:
        ks = tuple(TWO_PI_I * (x + n) for n in range(N + 1))
        kernel = ExpSum(ks, (1.0,) * (N + 1))
        dspec = DifferintegralSpec(-s, BasePoint.MINUS_INFINITY, kernel)
        ray_value, _ = rl_numeric(dspec, t, cfg)
        closed = sum(rl_exp_closed(k, -s, t) for k in ks)
        records.append(InterchangeRecord(N, ray_value, closed,
                                         abs(ray_value - closed)))
    full_spec = DifferintegralSpec(-s, BasePoint.MINUS_INFINITY, LerchKernel(x))
    lattice_value, lattice_error = rl_numeric(full_spec, t, cfg)
    n_max = max(icfg.partial_terms)
    lead = abs(rl_exp_closed(TWO_PI_I * (x + n_max + 1), -s, t))
    shrink = math.exp(-2.0 * math.pi * t.imag * (1.0 - icfg.delta))
    grow = ((n_max + 2.0 + abs(x)) / (n_max + 1.0 + abs(x))) ** max(0.0, -s.real)
    rho = shrink * grow
    tail = math.inf if rho >= 1.0 else lead / (1.0 - rho)
    return InterchangeReport(tuple(records), lattice_value, lattice_error, tail)
