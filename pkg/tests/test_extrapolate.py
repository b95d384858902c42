import math

import pytest

from lerchzeta.errors import DomainError, ExtrapolationUnstable
from lerchzeta.extrapolate import richardson


def _ladder(f, eps0, ratio, n):
    return [f(eps0 / ratio ** k) for k in range(n)]


def test_single_power_eliminated_exactly():
    # v(eps) = L + c*eps; one elimination recovers L to roundoff
    vals = _ladder(lambda e: 3.0 + 0.7 * e, 0.1, 2.0, 2)
    r = richardson(vals, 2.0)
    assert abs(r.value - 3.0) < 1e-14


def test_integer_power_series():
    f = lambda e: 1.25 + 0.9 * e - 0.4 * e ** 2 + 0.15 * e ** 3 - 0.05 * e ** 4
    r = richardson(_ladder(f, 0.2, 2.0, 5), 2.0)
    assert abs(r.value - 1.25) < 1e-12
    assert abs(r.value - 1.25) <= 10.0 * r.error + 1e-15


def test_fractional_exponent_schedule():
    # v(eps) = L + a*eps^0.5 + b*eps^1.5, the expansion of a ray limit
    # with a half-integer order
    f = lambda e: (2.0 - 1.0j) + 0.8 * e ** 0.5 - 0.3 * e ** 1.5
    r = richardson(_ladder(f, 0.1, 2.0, 6), 2.0, exponents=[0.5, 1.5, 2.5, 3.5, 4.5])
    assert abs(r.value - (2.0 - 1.0j)) < 1e-11


def test_log_pair_via_duplicated_exponent():
    # eps*log(eps) demotes to a clean eps term after one 1-elimination,
    # so listing the power twice removes the pair completely
    f = lambda e: 4.0 + 0.6 * e * math.log(e) + 0.2 * e
    r = richardson(_ladder(f, 0.1, 2.0, 3), 2.0, exponents=[1.0, 1.0])
    assert abs(r.value - 4.0) < 1e-13


def test_complex_values_supported():
    f = lambda e: (0.3 + 0.4j) + (1.0 - 2.0j) * e + (0.5 + 0.1j) * e ** 2
    r = richardson(_ladder(f, 0.25, 2.0, 4), 2.0)
    assert abs(r.value - (0.3 + 0.4j)) < 1e-12


def test_error_field_tracks_true_error():
    f = lambda e: 1.0 + 0.5 * e + 0.25 * e ** 2 + 0.125 * e ** 3 + 0.0625 * e ** 4
    r = richardson(_ladder(f, 0.3, 2.0, 4), 2.0)
    assert abs(r.value - 1.0) <= 10.0 * r.error


def test_growing_diffs_raise():
    # an oscillation that triples per level defeats every elimination
    # column; the stability screen must fire rather than return garbage
    vals = [1.0 + (-3.0) ** k * 1e-6 for k in range(6)]
    with pytest.raises(ExtrapolationUnstable):
        richardson(vals, 2.0)


def test_noise_floor_suppresses_instability():
    vals = [1.0 + (-3.0) ** k * 1e-6 for k in range(6)]
    r = richardson(vals, 2.0, noise_floor=1.0)
    assert abs(r.value - 1.0) < 0.1


def test_validation():
    with pytest.raises(DomainError):
        richardson([1.0], 2.0)
    with pytest.raises(DomainError):
        richardson([1.0, 2.0], 1.0)
    with pytest.raises(DomainError):
        richardson([1.0, 2.0, 3.0], 2.0, exponents=[1.0])
    with pytest.raises(DomainError):
        richardson([1.0, 2.0], 2.0, exponents=[-1.0])
