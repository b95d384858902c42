"""Direct-summation reference for the Lerch zeta function.

L(t, x, s) = sum_{n>=0} (n+x)^(-s) exp(2 pi i t n), summed term by term
in ascending n with principal powers.  No acceleration is applied; the
truncation index comes from an analytic tail bound, so the reported
error is a bound rather than a heuristic.  With real t the series only
converges for Re(s) > 1 and the bound decays like N^(1-Re s), which
makes tight tolerances genuinely unreachable within the term cap; that
is surfaced as NonconvergenceError, not papered over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import backend
from .errors import DomainError, NonconvergenceError

__all__ = [
    "EvaluationPoint",
    "SeriesResult",
    "SERIES_TERM_CAP",
    "lerch_series",
    "hurwitz",
    "conjugation_residual",
    "ConjugationCheck",
]

SERIES_TERM_CAP = 10_000_000
_CHUNK = 1 << 20


@dataclass(frozen=True)
class EvaluationPoint:
    t: complex
    x: complex
    s: complex

    @property
    def in_series_domain(self) -> bool:
        """Absolute convergence: Re x > 0 and (Im t > 0, or real t with Re s > 1)."""
        t, x, s = complex(self.t), complex(self.x), complex(self.s)
        if not x.real > 0.0:
            return False
        if t.imag > 0.0:
            return True
        return t.imag == 0.0 and s.real > 1.0

    @property
    def in_theorem1_domain(self) -> bool:
        """Fractional-derivative route: Im t > 0 and x off the cut (-inf, 0]."""
        t, x = complex(self.t), complex(self.x)
        on_cut = x.imag == 0.0 and x.real <= 0.0
        return t.imag > 0.0 and not on_cut


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    error: float
    terms: int


def _amplitude(n: float, x: complex, s: complex) -> float:
    """Envelope of |(n+x)^(-s)| / exp(pi |Im s| / 2) for Re(n+x) > 0."""
    if s.real >= 0.0:
        return (n + x.real) ** (-s.real)
    return (n + abs(x)) ** (-s.real)


def _pick_truncation(t: complex, x: complex, s: complex, tol: float,
                     term_cap: int) -> tuple[int, float]:
    """Smallest N with tail bound sum_{n>N} <= tol; returns (N, bound)."""
    kappa = math.exp(0.5 * math.pi * abs(s.imag))
    b = t.imag
    if b == 0.0:
        # integral comparison: tail <= kappa (N+Re x)^(1-Re s)/(Re s - 1)
        p = s.real - 1.0
        log_n = math.log(kappa / (tol * p)) / p
        if log_n > math.log(term_cap) + 1.0:
            raise NonconvergenceError(
                f"series tail bound cannot reach {tol:.1e} within "
                f"{term_cap} terms (decay exponent {p:.3g})")
        N = max(1, math.ceil(math.exp(log_n) - x.real))
        bound = kappa * (N + x.real) ** (-p) / p
        while bound > tol:
            N = min(term_cap, max(N + 1, int(N * 1.1)))
            bound = kappa * (N + x.real) ** (-p) / p
            if N >= term_cap and bound > tol:
                raise NonconvergenceError(
                    f"series tail bound {bound:.1e} above {tol:.1e} at the "
                    f"{term_cap}-term cap")
        return N, bound
    r = math.exp(-2.0 * math.pi * b)

    def bound_at(N: int) -> float:
        ratio = r
        if s.real < 0.0:
            ax = abs(x)
            ratio = r * ((N + 2.0 + ax) / (N + 1.0 + ax)) ** (-s.real)
        if ratio >= 1.0:
            return math.inf
        lead = _amplitude(N + 1.0, x, s) * math.exp(-2.0 * math.pi * b * (N + 1))
        return kappa * lead / (1.0 - ratio)

    N = 8
    bound = bound_at(N)
    while bound > tol:
        if N >= term_cap:
            raise NonconvergenceError(
                f"series tail bound {bound:.1e} above {tol:.1e} at the "
                f"{term_cap}-term cap")
        N = min(term_cap, max(N + 1, int(N * 1.3)))
        bound = bound_at(N)
    return N, bound


def lerch_series(point: EvaluationPoint, tol: float = 1e-12, *,
                 term_cap: int = SERIES_TERM_CAP) -> SeriesResult:
    """Truncated series with its tail bound <= tol (when attainable)."""
    if not point.in_series_domain:
        raise DomainError(
            "series domain requires Re(x) > 0 and either Im(t) > 0 or "
            f"real t with Re(s) > 1; got t = {point.t}, x = {point.x}, "
            f"s = {point.s}")
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    t, x, s = complex(point.t), complex(point.x), complex(point.s)
    N, bound = _pick_truncation(t, x, s, tol, term_cap)
    total = 0j
    for n0 in range(0, N + 1, _CHUNK):
        n1 = min(N + 1, n0 + _CHUNK)
        total += backend.series_sum(x, s, t, n0, n1)
    return SeriesResult(total, bound, N + 1)


def hurwitz(x: complex, s: complex, tol: float = 1e-12) -> SeriesResult:
    """Hurwitz zeta(x, s) = L(0, x, s); needs Re(x) > 0 and Re(s) > 1."""
    return lerch_series(EvaluationPoint(0.0, x, s), tol)


@dataclass(frozen=True)
class ConjugationCheck:
    residual: float
    lhs: complex
    rhs: complex


def conjugation_residual(point: EvaluationPoint, evaluator: str = "series",
                         **kwargs) -> ConjugationCheck:
    """|conj L(t,x,s) - L(-conj t, conj x, conj s)| by one evaluator.

    The reflection is an exact symmetry of the function, so the residual
    is pure numerical noise of the chosen evaluator.
    """
    t, x, s = complex(point.t), complex(point.x), complex(point.s)
    mirror = EvaluationPoint(-t.conjugate(), x.conjugate(), s.conjugate())
    if evaluator == "series":
        lhs = lerch_series(point, **kwargs).value
        rhs = lerch_series(mirror, **kwargs).value
    elif evaluator == "theorem1":
        from .fracrep import lerch_theorem1
        lhs = lerch_theorem1(point, **kwargs)[0]
        rhs = lerch_theorem1(mirror, **kwargs)[0]
    else:
        raise DomainError(f"unknown evaluator {evaluator!r}")
    lhs_c = lhs.conjugate()
    return ConjugationCheck(abs(lhs_c - rhs), lhs_c, rhs)
