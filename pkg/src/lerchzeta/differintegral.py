"""Riemann-Liouville differintegrals of exponential-type kernels.

The numeric engine evaluates

    D^alpha f(t) = d^sigma / Gamma(sigma)
                   * integral_0^inf v^(sigma-1) F(t - v d) dv,

where d = exp(-i theta) is the unit direction of the integration ray
running from t toward complex infinity.  For Re(alpha) < 0 take
sigma = -alpha and F = f; otherwise sigma = m - alpha and F is the m-th
derivative of f with m = floor(Re(alpha)) + 1.  theta = 0 is the classic
ray along the real axis; the engine tilts the ray automatically when the
kernel modes do not all decay horizontally, which is how evaluations
continue past parameter regions where the horizontal integral diverges.

Base point zero uses the finite-segment form

    D^alpha_0 f(t) = t^sigma / Gamma(sigma)
                     * integral_0^1 w^(sigma-1) F(t (1-w)) dw

plus, on the derivative path, the boundary terms
sum_{j<m} f^(j)(0) t^(j-alpha) / Gamma(j+1-alpha).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from . import backend
from .complexfn import gamma, log_principal, principal_pow, rgamma
from .errors import DomainError, PoleError
from .quadrature import (QuadratureConfig, SingularWeight, integrate_halfline,
                         integrate_unit)

__all__ = [
    "BasePoint",
    "Exponential",
    "Power",
    "LerchKernel",
    "ExpSum",
    "DifferintegralSpec",
    "rl_exp_closed",
    "rl_power_closed",
    "rl_numeric",
]

TWO_PI_I = 2j * math.pi

#: derivative orders are reduced through at most this many classical
#: derivatives before the fractional integral takes over
MAX_DERIVATIVE_STEPS = 8

#: number of leading modes used for ray planning of the lattice kernel
_N_PLANNING_MODES = 9


class BasePoint(Enum):
    MINUS_INFINITY = "minus_infinity"
    ZERO = "zero"


@dataclass(frozen=True)
class Exponential:
    """Kernel u -> exp(k u); k off the closed negative real axis."""

    k: complex

    def __post_init__(self):
        k = complex(self.k)
        if k.imag == 0.0 and k.real <= 0.0:
            raise DomainError(
                f"exponential rate must avoid (-inf, 0]; got k = {k}")

    def modes(self) -> np.ndarray:
        return np.array([complex(self.k)])

    def eval_derivative(self, u: np.ndarray, m: int) -> np.ndarray:
        k = complex(self.k)
        return backend.exp_sum_values(u, np.array([k]), np.array([k ** m]))

    def derivative_at0(self, j: int) -> complex:
        return complex(self.k) ** j


@dataclass(frozen=True)
class Power:
    """Kernel u -> u^beta (principal); integrable at 0 iff Re(beta) > -1."""

    beta: complex

    def __post_init__(self):
        if not complex(self.beta).real > -1.0:
            raise DomainError(
                f"power kernel needs Re(beta) > -1; got beta = {self.beta}")


@dataclass(frozen=True)
class LerchKernel:
    """Kernel u -> exp(2 pi i u x) / (1 - exp(2 pi i u)).

    Simple poles at every integer u; modes exp(2 pi i u (x+n)), n >= 0,
    under the geometric expansion of the denominator.
    """

    x: complex

    def __post_init__(self):
        x = complex(self.x)
        if x.imag == 0.0 and x.real <= 0.0:
            raise DomainError(
                f"lerch kernel parameter must avoid (-inf, 0]; got x = {x}")

    def modes(self) -> np.ndarray:
        x = complex(self.x)
        return TWO_PI_I * (x + np.arange(_N_PLANNING_MODES))

    def eval_derivative(self, u: np.ndarray, m: int) -> np.ndarray:
        coefs, pcoefs = _lerch_coef_tables(complex(self.x), m)
        return backend.lerch_kernel_values(u, complex(self.x), coefs, pcoefs)


@dataclass(frozen=True)
class ExpSum:
    """Kernel u -> sum_j c_j exp(k_j u), every k_j nonzero."""

    ks: tuple
    cs: tuple

    def __post_init__(self):
        if len(self.ks) != len(self.cs) or not self.ks:
            raise DomainError("ks and cs must be equal-length and non-empty")
        if any(complex(k) == 0 for k in self.ks):
            raise DomainError("zero rate in exponential sum (no decay)")

    def modes(self) -> np.ndarray:
        return np.array([complex(k) for k in self.ks])

    def eval_derivative(self, u: np.ndarray, m: int) -> np.ndarray:
        ks = np.array([complex(k) for k in self.ks])
        cs = np.array([complex(c) for c in self.cs]) * ks ** m
        return backend.exp_sum_values(u, ks, cs)

    def derivative_at0(self, j: int) -> complex:
        return sum(complex(c) * complex(k) ** j
                   for c, k in zip(self.cs, self.ks))


@dataclass(frozen=True)
class DifferintegralSpec:
    order: complex
    base: BasePoint
    kernel: object


@lru_cache(maxsize=256)
def _lerch_coef_tables(x: complex, m: int):
    """Leibniz tables for the m-th derivative of the lattice kernel.

    coefs[j] = C(m,j) (2 pi i x)^(m-j) (2 pi i)^j; pcoefs[j, :j+1] holds
    P_j with (q d/dq)^j [1/(1-q)] = P_j(q)/(1-q)^(j+1), built from
    P_0 = 1, P_{j+1} = q [(1-q) P_j' + (j+1) P_j].
    """
    coefs = np.array([math.comb(m, j) * (TWO_PI_I * x) ** (m - j)
                      * TWO_PI_I ** j for j in range(m + 1)])
    P = np.zeros((m + 1, m + 1))
    P[0, 0] = 1.0
    for j in range(m):
        deriv = np.zeros(j + 2)
        for c in range(j):
            deriv[c] = (c + 1) * P[j, c + 1]
        s = np.zeros(j + 2)
        for c in range(j + 1):
            prev = deriv[c - 1] if c >= 1 else 0.0
            s[c] = deriv[c] - prev + (j + 1) * P[j, c]
        P[j + 1, 1:j + 2] = s[:j + 1]
    return coefs, P


def rl_exp_closed(k: complex, alpha: complex, t: complex) -> complex:
    """D^alpha of exp(k u) at t with base -inf: k^alpha exp(k t)."""
    return principal_pow(k, alpha) * cmath.exp(complex(k) * complex(t))


def rl_power_closed(beta: complex, alpha: complex, t: complex) -> complex:
    """D^alpha_0 of u^beta at t: Gamma(beta+1)/Gamma(beta-alpha+1) t^(beta-alpha)."""
    beta = complex(beta)
    if not beta.real > -1.0:
        raise DomainError(f"power kernel needs Re(beta) > -1; got beta = {beta}")
    alpha = complex(alpha)
    return (gamma(beta + 1.0) / gamma(beta - alpha + 1.0)
            * principal_pow(t, beta - alpha))


def _order_split(alpha: complex) -> tuple[complex, int]:
    """(sigma, m) with D^alpha = d^m/dt^m compose D^(sigma-integral)."""
    alpha = complex(alpha)
    if alpha.real < 0.0:
        return -alpha, 0
    m = math.floor(alpha.real) + 1
    if m > MAX_DERIVATIVE_STEPS:
        raise DomainError(
            f"order real part {alpha.real} needs {m} derivative reductions; "
            f"the cap is {MAX_DERIVATIVE_STEPS}")
    return m - alpha, m


def _feasible_direction(args) -> float:
    """Mid-point of the angular interval where every mode decays."""
    best = None
    for wrap in (0.0, 2.0 * math.pi):
        adj = [a + wrap if a < 0 else a for a in args] if wrap else list(args)
        lo = max(adj) - 0.5 * math.pi
        hi = min(adj) + 0.5 * math.pi
        if lo < hi:
            theta = 0.5 * (lo + hi)
            margin = hi - lo
            if theta > math.pi:
                theta -= 2.0 * math.pi
            if best is None or margin > best[1]:
                best = (theta, margin)
    if best is None:
        raise DomainError("kernel modes share no common decay direction")
    return best[0]


def _plan_ray(kernel, direction: float | None) -> float:
    modes = kernel.modes()
    if direction is None:
        if float(np.min(modes.real)) >= 0.3:
            return 0.0
        return _feasible_direction([cmath.phase(complex(k)) for k in modes])
    theta = float(direction)
    d = cmath.exp(-1j * theta)
    if float(np.min((modes * d).real)) <= 0.0:
        raise DomainError(
            f"kernel does not decay along direction theta = {theta}")
    return theta


def _lattice_breakpoints(t: complex, theta: float, rate: float) -> list[tuple]:
    """(ray abscissa, pole distance) of near-pole passages of the ray.

    The distance doubles as the local peak width, letting the quadrature
    pre-grade its panels around each passage.
    """
    ct = math.cos(theta)
    if abs(ct) < 1e-6:
        return []
    v_reach = 60.0 / rate + 10.0
    eit = cmath.exp(1j * theta)
    A = (t * eit).real
    n_a, n_b = sorted((A / ct, (A - v_reach) / ct))
    out = []
    for n in range(math.ceil(n_a) - 1, math.floor(n_b) + 2):
        v_star = A - n * ct
        dist = abs(((t - n) * eit).imag)
        if 1e-9 < v_star < v_reach and dist < 0.25:
            out.append((v_star, max(dist, 1e-9)))
    return sorted(out)


def _oscillation_period(modes: np.ndarray, theta: float, lattice: bool) -> float | None:
    d = cmath.exp(-1j * theta)
    periods = []
    for k in modes[:3]:
        im = abs((complex(k) * d).imag)
        if im > 1e-9:
            periods.append(2.0 * math.pi / im)
    if lattice and abs(math.cos(theta)) > 1e-6:
        periods.append(1.0 / abs(math.cos(theta)))
    return min(periods) if periods else None


def rl_numeric(dspec: DifferintegralSpec, t: complex,
               cfg: QuadratureConfig | None = None, *,
               direction: float | None = None) -> tuple[complex, float]:
    """Numeric differintegral; returns (value, error_estimate)."""
    if cfg is None:
        cfg = QuadratureConfig()
    t = complex(t)
    kernel = dspec.kernel
    sigma, m = _order_split(dspec.order)

    if dspec.base is BasePoint.ZERO:
        return _rl_numeric_base0(dspec.order, sigma, m, kernel, t, cfg)

    if isinstance(kernel, Power):
        raise DomainError("power kernel has no decay toward -inf; use base zero")
    if isinstance(kernel, LerchKernel):
        if abs(t.imag) < 1e-9 and abs(t.real - round(t.real)) < 1e-9:
            raise PoleError(f"ray would start at the kernel pole t = {t}")

    theta = _plan_ray(kernel, direction)
    d = cmath.exp(-1j * theta)
    modes = kernel.modes()
    rate = float(np.min((modes * d).real))

    lattice = isinstance(kernel, LerchKernel)
    breakpoints = _lattice_breakpoints(t, theta, rate) if lattice else ()
    if cfg.oscillation_period_hint is None:
        hint = _oscillation_period(modes, theta, lattice)
        if hint is not None:
            cfg = QuadratureConfig(cfg.rel_tol, cfg.abs_tol,
                                   cfg.max_subdivisions, cfg.truncation_margin,
                                   hint)

    def g(v: np.ndarray) -> np.ndarray:
        return kernel.eval_derivative(t - v * d, m)

    I, err = integrate_halfline(g, SingularWeight(sigma), rate, cfg,
                                breakpoints=breakpoints)
    pref = cmath.exp(-1j * theta * sigma) * rgamma(sigma)
    return pref * I, abs(pref) * err


def _rl_numeric_base0(alpha, sigma, m, kernel, t, cfg):
    log_t = log_principal(t)  # also rejects t on the cut
    if isinstance(kernel, LerchKernel):
        raise DomainError(
            "lattice kernel is singular at the zero base point (pole at u = 0)")

    pref = cmath.exp(sigma * log_t) * rgamma(sigma)
    if isinstance(kernel, Power):
        beta = complex(kernel.beta)
        if m > 0 and not beta.real > m - 1:
            raise DomainError(
                f"derivative path with m = {m} needs Re(beta) > {m - 1}; "
                f"got beta = {beta}")
        # F = f^(m) = Gamma(beta+1)/Gamma(beta-m+1) u^(beta-m); the power of
        # (1-w) joins the right endpoint weight and the integral is a Beta
        # kernel evaluated by quadrature.
        cm = gamma(beta + 1.0) * rgamma(beta - m + 1.0)
        scale = pref * cm * cmath.exp((beta - m) * log_t)

        def g(w, omw):
            return np.ones_like(w, dtype=np.complex128)

        I, err = integrate_unit(g, SingularWeight(sigma),
                                SingularWeight(beta - m + 1.0), cfg)
        return scale * I, abs(scale) * err

    def g(w, omw):
        return kernel.eval_derivative(t * omw, m)

    I, err = integrate_unit(g, SingularWeight(sigma), None, cfg)
    value = pref * I
    err_out = abs(pref) * err
    for j in range(m):
        value += (kernel.derivative_at0(j) * cmath.exp((j - alpha) * log_t)
                  * rgamma(j + 1.0 - complex(alpha)))
    return value, err_out
