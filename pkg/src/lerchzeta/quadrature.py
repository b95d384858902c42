"""Adaptive quadrature for weighted contour integrals.

Two integrators, both returning (value, error_estimate):

* integrate_halfline: integral of v**(sigma-1) * g(v) over v in [0, inf),
  for g decaying like exp(-decay_rate * v).  A double-exponential panel
  absorbs the endpoint weight on [0, b0]; embedded 7/15 Gauss-Legendre
  pairs handle [b0, V] adaptively; the remainder beyond the truncation
  point V is covered by an analytic envelope bound.
* integrate_unit: integral of w**(sl-1) * (1-w)**(sr-1) * g(w, 1-w) over
  [0, 1], double-exponential throughout, both endpoint weights absorbed.

The double-exponential pieces combine weight and Jacobian in log space,
so exponents cancel before exp() and endpoint exponents arbitrarily close
to 0 stay overflow-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backend
from .errors import DivergenceSuspected, DomainError, ToleranceNotMet

__all__ = [
    "SingularWeight",
    "QuadratureConfig",
    "integrate_halfline",
    "integrate_unit",
]


@dataclass(frozen=True)
class SingularWeight:
    """Endpoint weight v**(sigma-1); integrable iff Re sigma > 0."""

    sigma: complex

    def __post_init__(self):
        if not complex(self.sigma).real > 0.0:
            raise DomainError(
                f"weight exponent needs Re(sigma) > 0; got sigma = {self.sigma}")


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-11
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000
    truncation_margin: float = 1e-16
    #: expected period of the fastest oscillation of g, if known; panels
    #: are kept no wider than half of it
    oscillation_period_hint: float | None = None

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be at least 1")
        if self.truncation_margin <= 0:
            raise DomainError("truncation_margin must be positive")
        hint = self.oscillation_period_hint
        if hint is not None and hint <= 0:
            raise DomainError("oscillation_period_hint must be positive")


_GL7_X, _GL7_W = np.polynomial.legendre.leggauss(7)
_GL15_X, _GL15_W = np.polynomial.legendre.leggauss(15)

_H_FIRST = 0.5
# 1/64 resolves smooth weights; the deeper halvings engage only when
# Im(sigma) makes a near-flat endpoint power (tiny Re sigma) spin in
# log v, and cost nothing otherwise because refinement stops at the
# requested error.  The step-halving estimate trails the true error by
# one level, so the floor sits one level below where those corner cases
# are observed to converge.
_H_LAST = 1.0 / 1024.0


def _lncosh(w: np.ndarray) -> np.ndarray:
    aw = np.abs(w)
    return aw + np.log1p(np.exp(-2.0 * aw)) - math.log(2.0)


def _de_nodes(tau: np.ndarray):
    """Log-space node data for phi(tau) = 1/(1 + exp(-pi*sinh(tau))).

    Returns (lnphi_plus, lnphi_minus, lnjac) with phi_minus = 1 - phi_plus
    and jac = d phi / d tau = pi*cosh(tau)/(4*cosh(w)**2), w = pi/2*sinh(tau).
    """
    w = 0.5 * math.pi * np.sinh(tau)
    # ln phi(tau): phi = 1/(1+e^(-2w))
    lnp = np.where(w >= 0, -np.log1p(np.exp(-2.0 * np.abs(w))),
                   2.0 * w - np.log1p(np.exp(2.0 * np.where(w < 0, w, 0.0))))
    lnm = np.where(-w >= 0, -np.log1p(np.exp(-2.0 * np.abs(w))),
                   -2.0 * w - np.log1p(np.exp(-2.0 * np.where(w > 0, w, 0.0))))
    lnjac = math.log(math.pi / 4.0) + _lncosh(tau) - 2.0 * _lncosh(w)
    return lnp, lnm, lnjac


def _tau_max(*sigmas: complex) -> float:
    worst = min(min(complex(s).real, 1.0) for s in sigmas)
    # keep endpoint mass v**Re(sigma) below ~1e-18
    wmax = max(30.0, 21.0 / worst)
    return max(4.0, math.asinh(2.0 * wmax / math.pi))


class _DERefiner:
    """Trapezoid-in-tau with step halving; reuses previous levels."""

    def __init__(self, term_sum, tau_max: float):
        # term_sum(tau array) -> complex contribution sum at those nodes
        self._term_sum = term_sum
        self._tau_max = tau_max
        self._h = None
        self._value = None
        self.error = math.inf

    def _nodes_all(self, h):
        j_hi = math.ceil(self._tau_max / h)
        return np.arange(-j_hi, j_hi + 1) * h

    def _nodes_odd(self, h):
        j_hi = math.ceil(self._tau_max / h)
        j = np.arange(-j_hi, j_hi + 1)
        return (j[j % 2 != 0]) * h

    def refine(self) -> complex:
        if self._h is None:
            self._h = _H_FIRST
            self._value = self._h * self._term_sum(self._nodes_all(self._h))
            return self._value
        h = self._h / 2.0
        new = 0.5 * self._value + h * self._term_sum(self._nodes_odd(h))
        self.error = abs(new - self._value)
        self._h, self._value = h, new
        return new

    def run(self, target: float) -> complex:
        v = self.refine()
        while self._h > _H_LAST:
            v = self.refine()
            if self.error <= target:
                break
        return v

    @property
    def exhausted(self) -> bool:
        return self._h is not None and self._h <= _H_LAST


def _gl_batch(F, a: np.ndarray, b: np.ndarray):
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x15 = mid[:, None] + half[:, None] * _GL15_X[None, :]
    f15 = F(x15.ravel()).reshape(x15.shape)
    i15 = (f15 * _GL15_W).sum(axis=1) * half
    x7 = mid[:, None] + half[:, None] * _GL7_X[None, :]
    f7 = F(x7.ravel()).reshape(x7.shape)
    i7 = (f7 * _GL7_W).sum(axis=1) * half
    diff = np.abs(i15 - i7)
    # the raw 7/15 gap tracks the 7-point rule's error, which can sit many
    # orders above the 15-point result on a resolved peak panel; rescale it
    # against the panel's variation (the classic 200x**1.5 law) and floor
    # at roundoff in the panel's absolute mass
    resabs = (np.abs(f15) * _GL15_W).sum(axis=1) * half
    mean = np.where(half > 0.0, i15 / np.where(half > 0.0, 2.0 * half, 1.0), 0.0)
    spread = (np.abs(f15 - mean[:, None]) * _GL15_W).sum(axis=1) * half
    safe = np.where(spread > 0.0, spread, 1.0)
    err = np.where(spread > 0.0,
                   safe * np.minimum(1.0, (200.0 * diff / safe) ** 1.5),
                   diff)
    return i15, np.maximum(err, 50.0 * np.finfo(float).eps * resabs)


def _envelope(g, decay_rate: float, breakpoints) -> float:
    """Estimate C with |g(v)| <= C exp(-decay_rate v), and screen for growth."""
    vgeo = np.array([r / decay_rate for r in (0.1, 0.3, 1.0, 2.0, 4.0, 6.0, 8.0)])
    probe = np.abs(g(vgeo))
    if not np.all(np.isfinite(probe)):
        raise DomainError("integrand is non-finite on the sample ray")
    if (probe[-1] > 1e3 * (probe[0] + 1e-300)
            and probe[-1] > 3 * probe[-2] > 9 * probe[-3]):
        raise DivergenceSuspected(
            "integrand magnitude grows along the ray; wrong decay direction?")
    vs = list(vgeo)
    for bp in list(breakpoints)[:5]:
        if bp > 0:
            vs.extend((bp * (1 - 1e-3) + 1e-9, bp, bp * (1 + 1e-3)))
    v = np.array(sorted(vs))
    scaled = np.abs(g(v)) * np.exp(decay_rate * v)
    scaled = scaled[np.isfinite(scaled)]
    return float(max(np.max(scaled), 1e-300)) if scaled.size else 1e-300


def _truncation_point(C: float, decay_rate: float, a_pow: float,
                      margin: float) -> tuple[float, float]:
    """Smallest V with envelope tail below margin*C/decay_rate; returns
    (V, tail_bound)."""
    target = margin * C / decay_rate
    V = max(1.0, math.log(2.0 * C / (target * decay_rate)) / decay_rate)
    for _ in range(4):
        V = max(1.0, (math.log(2.0 * C / (target * decay_rate))
                      + a_pow * math.log(max(V, 1.0))) / decay_rate)
    tail = 2.0 * C * max(V, 1.0) ** a_pow * math.exp(-decay_rate * V) / decay_rate
    return V, tail


def integrate_halfline(g, weight: SingularWeight, decay_rate: float,
                       cfg: QuadratureConfig | None = None, *,
                       breakpoints=()) -> tuple[complex, float]:
    """Integral of v**(sigma-1) g(v) dv over [0, inf).

    g maps a positive float array to a complex array and must decay like
    exp(-decay_rate * v).  breakpoints marks abscissae of near-pole
    passages (or other rough spots); panel edges are pinned there.
    """
    if cfg is None:
        cfg = QuadratureConfig()
    if not decay_rate > 0.0:
        raise DomainError(f"decay_rate must be positive; got {decay_rate}")
    sigma = complex(weight.sigma)
    sm1 = sigma - 1.0

    pairs = []
    for b in breakpoints:
        v, w = (float(b[0]), float(b[1])) if isinstance(b, tuple) else (float(b), 0.0)
        if v > 0.0:
            pairs.append((v, w))
    pairs.sort()

    C = _envelope(g, decay_rate, [v for v, _w in pairs])
    a_pow = max(0.0, sigma.real - 1.0)
    V, tail = _truncation_point(C, decay_rate, a_pow, cfg.truncation_margin)

    bps = [(v, w) for v, w in pairs if v < V]
    b0 = min(1.0, V / 4.0)
    if bps:
        b0 = min(b0, 0.9 * bps[0][0])

    # double-exponential piece on [0, b0]
    tau_max = _tau_max(sigma)

    def de_terms(tau):
        lnp, _lnm, lnjac = _de_nodes(tau)
        lnv = math.log(b0) + lnp
        fac = np.exp(sm1 * lnv + lnjac + math.log(b0))
        v = np.exp(lnv)
        return complex(np.sum(fac * g(v)))

    de = _DERefiner(de_terms, tau_max)
    de_val = de.refine()
    de_val = de.refine()

    # Gauss-Legendre panels on [b0, V]
    def F(v):
        return backend.weight_values(v, sm1) * g(v)

    # panel skeleton: edges pinned at every rough spot and, where a peak
    # width is known, graded dyadically away from it so the adaptive loop
    # starts from panels that already match the local scale
    width_cap = 2.0
    if cfg.oscillation_period_hint is not None:
        width_cap = min(width_cap, 0.5 * cfg.oscillation_period_hint)
    marks = set()
    for v, w in bps:
        marks.add(v)
        step = max(w, 1e-9)
        while w > 0.0 and step < width_cap:
            for e in (v - step, v + step):
                if b0 < e < V:
                    marks.add(e)
            step *= 2.0
    edges = [b0]
    for stop in sorted(marks | {V}):
        if stop <= edges[-1] + 1e-10:
            continue
        start = edges[-1]
        n_step = max(1, math.ceil((stop - start) / width_cap))
        step = (stop - start) / n_step
        edges.extend(start + step * (i + 1) for i in range(n_step))
        edges[-1] = stop
    if edges[-1] < V:
        edges.append(V)
    pa = np.array(edges[:-1])
    pb = np.array(edges[1:])
    pI, pE = _gl_batch(F, pa, pb)
    splits_used = 0

    while True:
        total = de_val + complex(np.sum(pI))
        tol = max(cfg.abs_tol, cfg.rel_tol * abs(total))
        gl_err = float(np.sum(pE))
        if de.error + gl_err + tail <= tol:
            return total, de.error + gl_err + tail
        # refine the dominant piece(s)
        progressed = False
        if de.error > 0.25 * tol and not de.exhausted:
            de_val = de.run(0.1 * tol)
            progressed = True
        tol_gl = max(0.5 * (tol - tail - de.error), 0.25 * tol)
        if gl_err > tol_gl:
            share = tol_gl / max(len(pa), 1)
            worst = np.nonzero(pE > 0.5 * share)[0]
            if worst.size == 0:
                worst = np.array([int(np.argmax(pE))])
            if splits_used + worst.size > cfg.max_subdivisions:
                raise ToleranceNotMet(
                    f"error estimate {de.error + gl_err + tail:.3e} above "
                    f"tolerance {tol:.3e} after {splits_used} subdivisions",
                    value=total, estimate=de.error + gl_err + tail)
            splits_used += worst.size
            mid = 0.5 * (pa[worst] + pb[worst])
            na = np.concatenate((np.delete(pa, worst), pa[worst], mid))
            nb = np.concatenate((np.delete(pb, worst), mid, pb[worst]))
            nI, nE = _gl_batch(F, na[-2 * worst.size:], nb[-2 * worst.size:])
            pI = np.concatenate((np.delete(pI, worst), nI))
            pE = np.concatenate((np.delete(pE, worst), nE))
            pa, pb = na, nb
            progressed = True
        if not progressed:
            raise ToleranceNotMet(
                f"refinement stalled at error {de.error + gl_err + tail:.3e} "
                f"(tolerance {tol:.3e})",
                value=total, estimate=de.error + gl_err + tail)


def integrate_unit(g, weight_left: SingularWeight,
                   weight_right: SingularWeight | None = None,
                   cfg: QuadratureConfig | None = None) -> tuple[complex, float]:
    """Integral of w**(sl-1) (1-w)**(sr-1) g(w, 1-w) dw over [0, 1].

    g receives both w and 1-w as arrays so it never forms 1-w itself
    (the right endpoint is resolved to ~1e-300 without cancellation).
    """
    if cfg is None:
        cfg = QuadratureConfig()
    sl = complex(weight_left.sigma) - 1.0
    if weight_right is None:
        weight_right = SingularWeight(1.0)
    sr = complex(weight_right.sigma) - 1.0
    tau_max = _tau_max(weight_left.sigma, weight_right.sigma)

    def de_terms(tau):
        lnp, lnm, lnjac = _de_nodes(tau)
        fac = np.exp(sl * lnp + sr * lnm + lnjac)
        return complex(np.sum(fac * g(np.exp(lnp), np.exp(lnm))))

    de = _DERefiner(de_terms, tau_max)
    val = de.refine()
    val = de.refine()
    while True:
        tol = max(cfg.abs_tol, cfg.rel_tol * abs(val))
        if de.error <= tol:
            return val, de.error
        if de.exhausted:
            raise ToleranceNotMet(
                f"error estimate {de.error:.3e} above tolerance {tol:.3e} "
                "at the finest step", value=val, estimate=de.error)
        val = de.refine()
