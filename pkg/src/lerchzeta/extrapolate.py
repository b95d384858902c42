"""Richardson extrapolation on a geometric parameter ladder.

Input values v_k sampled at eps_k = eps0 / ratio**k, k ascending.  The
table assumes an asymptotic expansion in integer powers of eps; each
diagonal step cancels one more power.  Logarithmic terms (eps^j log eps)
are not cancelled exactly but are demoted one power per level, so deep
tables still converge on them, just more slowly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ExtrapolationUnstable

__all__ = ["RichardsonResult", "richardson"]


@dataclass(frozen=True)
class RichardsonResult:
    value: complex
    error: float
    #: diagonal of the table, one entry per ladder level
    extrapolants: tuple
    #: successive |extrapolant differences|; should be (roughly) decreasing
    diffs: tuple


def richardson(values, ratio: float, *, exponents=None,
               check_stability: bool = True,
               noise_floor: float = 0.0) -> RichardsonResult:
    """Extrapolate the eps -> 0 limit of a geometric ladder of values.

    exponents, when given, lists the error powers to eliminate in order
    (default 1, 2, 3, ...).  An eps^p log(eps) term turns into a clean
    eps^p term after one p-elimination, so listing p twice removes the
    logarithmic pair completely.
    """
    vals = [complex(v) for v in values]
    if len(vals) < 2:
        raise DomainError("richardson needs at least two ladder levels")
    if not ratio > 1.0:
        raise DomainError(f"ladder ratio must exceed 1; got {ratio}")
    if exponents is None:
        exponents = [float(j) for j in range(1, len(vals))]
    else:
        exponents = [complex(p) for p in exponents]
        if len(exponents) < len(vals) - 1:
            raise DomainError("need one exponent per elimination column")
        if any(complex(p).real <= 0.0 for p in exponents):
            raise DomainError("elimination exponents must have positive real part")
    row = list(vals[:1])
    diag = [row[0]]
    for k in range(1, len(vals)):
        prev = row
        row = [vals[k]]
        for j in range(1, k + 1):
            row.append(row[j - 1]
                       + (row[j - 1] - prev[j - 1]) / (ratio ** exponents[j - 1] - 1.0))
        diag.append(row[k])
    diffs = tuple(abs(diag[i + 1] - diag[i]) for i in range(len(diag) - 1))
    if check_stability and len(diffs) >= 3:
        if (diffs[-1] > noise_floor
                and diffs[-1] > 2.0 * diffs[-2]
                and diffs[-2] > 2.0 * diffs[-3]):
            raise ExtrapolationUnstable(
                f"extrapolant differences grow: {diffs[-3]:.3e} -> "
                f"{diffs[-2]:.3e} -> {diffs[-1]:.3e}")
    error = diffs[-1]
    if len(row) >= 2:
        error = max(error, abs(row[-1] - row[-2]))
    return RichardsonResult(diag[-1], error, tuple(diag), diffs)
