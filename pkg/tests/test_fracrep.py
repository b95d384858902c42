import cmath
import math

import pytest

from lerchzeta.complexfn import gamma, principal_pow
from lerchzeta.errors import DomainError, PoleError
from lerchzeta.fracrep import (
    TWO_PI_I,
    InterchangeTestConfig,
    _theorem1_prefactor,
    interchange_check,
    lerch_theorem1,
    lerch_theorem1_real_t,
    lerch_theorem2,
    riemann_halfpoint,
    riemann_limit,
)
from lerchzeta.lerch_ref import EvaluationPoint, lerch_series


def test_prefactor_is_principal_power_of_2pii():
    # (2 pi)^s exp(i pi s/2) = (2 pi i)^s on the principal branch, so the
    # prefactor is (2 pi i)^s exp(-2 pi i t x)
    for t, x, s in [(0.2 + 0.6j, 0.7, 2.5), (0.4 + 0.3j, 1.1 - 0.5j, -1.2 + 0.8j)]:
        want = principal_pow(TWO_PI_I, s) * cmath.exp(-TWO_PI_I * t * x)
        got = _theorem1_prefactor(t, x, s)
        assert abs(got - want) <= 1e-13 * abs(want)


def test_ray_route_anchor():
    # mpmath, 40 digits
    want = 0.46032314728431114067 + 1.6555096312897203311j
    val, est = lerch_theorem1(EvaluationPoint(0.2 + 0.6j, 0.7 - 0.4j, 2.5))
    assert abs(val - want) <= 1e-9 * abs(want)
    assert abs(val - want) <= max(10.0 * est, 1e-12 * abs(want))


def test_ray_route_real_x_anchor():
    # mpmath, 40 digits
    want = 3.9122048126881196853 + 0.0078890432974275610137j
    val, _ = lerch_theorem1(EvaluationPoint(0.3 + 0.7j, 0.35, 1.3))
    assert abs(val - want) <= 1e-9 * abs(want)


def test_ray_route_below_series_strip():
    # for Im t > 0 the series converges at any s, so it can referee the
    # continuation to Re s < 1
    pt = EvaluationPoint(0.25 + 0.55j, 0.8 + 0.3j, 0.5 + 0.3j)
    val, _ = lerch_theorem1(pt)
    ref = lerch_series(pt, tol=1e-12).value
    assert abs(val - ref) <= 1e-9 * abs(ref)


def test_ray_route_domain():
    with pytest.raises(DomainError):
        lerch_theorem1(EvaluationPoint(0.3, 1.0, 2.0))
    with pytest.raises(DomainError):
        lerch_theorem1(EvaluationPoint(0.3 + 0.5j, -1.0, 2.0))


def test_real_t_ladder():
    r = lerch_theorem1_real_t(0.5, 1.0, 2.0)
    want = math.pi ** 2 / 12.0
    assert abs(r.value - want) <= 1e-9 * want
    assert abs(r.value - want) <= 10.0 * r.error + 1e-12
    assert len(r.levels) == len(r.extrapolants)


def test_real_t_rejects_integer_t():
    with pytest.raises(PoleError):
        lerch_theorem1_real_t(1.0, 0.7, 2.0)
    with pytest.raises(PoleError):
        lerch_theorem1_real_t(1e-12, 0.7, 2.0)
    with pytest.raises(DomainError):
        lerch_theorem1_real_t(0.3 + 0.1j, 0.7, 2.0)


def test_halfpoint_zeta():
    # mpmath zeta(3), 40 digits
    want3 = 1.2020569031595942854
    v3, _ = riemann_halfpoint(3.0)
    assert abs(v3 - want3) <= 1e-9 * want3
    v2, _ = riemann_halfpoint(2.0)
    assert abs(v2 - math.pi ** 2 / 6.0) <= 1e-9


def test_halfpoint_continues_left_of_one():
    # the alternating form continues zeta left of Re s = 1 with no extra
    # machinery; zeta(-1) = -1/12
    v, _ = riemann_halfpoint(-1.0)
    assert abs(v - (-1.0 / 12.0)) <= 1e-5


def _averaged_alternating(s, n=40):
    # repeated averaging of the partial sums of sum (-1)^j (j+1)^(-s);
    # each pass halves the leftover, and unlike the binomial form of the
    # same transform it is roundoff-stable, so ~1e-14 is reachable even
    # left of s = 1 where the raw series diverges to a Cesaro limit
    rows = []
    acc = 0.0
    for j in range(n):
        acc += (-1.0) ** j * (j + 1.0) ** -s
        rows.append(acc)
    while len(rows) > 1:
        rows = [0.5 * (a + b) for a, b in zip(rows, rows[1:])]
    return rows[0]


def test_halfpoint_in_the_strip_vs_transformed_series():
    # the transform is validated at a closed-form point first, then
    # referees the continuation at s = 0.75
    assert abs(_averaged_alternating(2.0) - math.pi ** 2 / 12.0) <= 1e-12
    s = 0.75
    want = _averaged_alternating(s) / (1.0 - 2.0 ** (1.0 - s))
    v, _ = riemann_halfpoint(s)
    assert abs(v - want) <= 1e-9 * abs(want)


def test_halfpoint_pole():
    with pytest.raises(PoleError):
        riemann_halfpoint(1.0)


def test_limit_zeta_two():
    r = riemann_limit(2.0)
    assert abs(r.value - math.pi ** 2 / 6.0) <= 1e-5
    assert len(r.ts) == len(r.level_values)


def test_limit_near_one_converges_slowly_but_monotonically():
    # mpmath zeta(1.05), 40 digits; the t^(s-1) error term has exponent
    # 0.05 here, so the ladder crawls and the diffs record it honestly
    want = 20.58084430203700259
    r = riemann_limit(1.05)
    assert all(b < a for a, b in zip(r.diffs, r.diffs[1:]))
    assert abs(r.value - want) <= 1e-6 * want


def test_limit_domain():
    with pytest.raises(DomainError):
        riemann_limit(1.0)
    with pytest.raises(DomainError):
        riemann_limit(0.5)
    with pytest.raises(DomainError):
        riemann_limit(2.0, t0=0.7)


def test_two_base_route_anchor():
    # the routine takes the reflected exponent: argument s = -0.5 yields
    # L(t, x, 1.5); mpmath L(0.3+0.4i, 0.25, 1.5), 40 digits
    want = 7.9805909413527594244 + 0.053932545482375578732j
    val, est = lerch_theorem2(0.3 + 0.4j, 0.25, -0.5)
    assert abs(val - want) <= 1e-6 * abs(want)
    assert abs(val - want) <= max(10.0 * est, 1e-12 * abs(want))


def test_two_base_route_real_t_reflection():
    # with s = 2.5 the result is L(t, x, -1.5), which the convergent-side
    # reflection rebuilds from two series values
    t, x, s = 0.3, 0.25, 2.5
    val, _ = lerch_theorem2(t, x, s)
    f1 = lerch_series(EvaluationPoint(-x, t, s), tol=1e-10).value
    f2 = lerch_series(EvaluationPoint(x, 1.0 - t, s), tol=1e-10).value
    want = (gamma(s) * (2.0 * math.pi) ** -s
            * (cmath.exp(1j * math.pi * (0.5 * s - 2.0 * t * x)) * f1
               + cmath.exp(-1j * math.pi * (0.5 * s - 2.0 * x * (1.0 - t))) * f2))
    assert abs(val - want) <= 1e-8 * abs(want)


def test_two_base_route_domain():
    with pytest.raises(DomainError):
        lerch_theorem2(0.3 + 0.4j, 1.2, -0.5)
    with pytest.raises(DomainError):
        lerch_theorem2(0.3 + 0.4j, 0.0, -0.5)
    with pytest.raises(DomainError):
        lerch_theorem2(1.5, 0.25, -0.5)
    with pytest.raises(DomainError):
        lerch_theorem2(0.3 - 0.2j, 0.25, -0.5)
    with pytest.raises(PoleError):
        lerch_theorem2(0.3 + 0.4j, 0.25, 0.0)
    with pytest.raises(PoleError):
        lerch_theorem2(0.3 + 0.4j, 0.25, -2.0)


def test_interchange_finite_sums_commute():
    report = interchange_check(EvaluationPoint(0.3 + 0.7j, 0.35, 1.2))
    assert [r.n_terms for r in report.records] == [0, 5, 10, 20, 40]
    for rec in report.records:
        assert rec.residual <= 1e-9 * (1.0 + abs(rec.closed_sum))
    last = report.records[-1]
    gap = abs(report.lattice_value - last.closed_sum)
    assert gap <= 10.0 * (report.lattice_error + report.tail_bound) + 1e-12


def test_interchange_domain():
    with pytest.raises(DomainError):
        interchange_check(EvaluationPoint(0.9 + 0.7j, 0.35, 1.2))
    icfg = InterchangeTestConfig(disc_center=0.3 + 0.05j, partial_terms=(0, 2))
    with pytest.raises(DomainError):
        interchange_check(EvaluationPoint(0.3 - 0.1j, 0.35, 1.2), icfg)
