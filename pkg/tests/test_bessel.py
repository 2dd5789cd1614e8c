import math

import mpmath
import numpy as np
import pytest

from hodgecone.cone_kernels.bessel import (REL_ERROR, bessel_i, bessel_i_prime, bessel_i_scaled, bessel_k,
                                    bessel_k_prime, bessel_k_scaled, in_supported_range, log_bessel_i,
                                    log_bessel_k, wronskian)
from hodgecone.errors import BesselRangeError

mpmath.mp.dps = 40
ORDERS = np.linspace(0.0, 60.0, 13)
ARGS = np.geomspace(1e-6, 700.0, 17)


def _log_ref(fn, nu, x):
    return float(mpmath.log(fn(nu, x)))


@pytest.mark.parametrize("nu", ORDERS)
def test_log_forms_against_mpmath(nu):
    for x in ARGS:
        li = log_bessel_i(float(nu), float(x))
        lk = log_bessel_k(float(nu), float(x))
        assert li == pytest.approx(_log_ref(mpmath.besseli, nu, x), abs=1e-12, rel=1e-13)
        assert lk == pytest.approx(_log_ref(mpmath.besselk, nu, x), abs=1e-12, rel=1e-13)


@pytest.mark.parametrize("nu", ORDERS)
def test_values_within_stated_error(nu):
    for x in ARGS:
        for fn, ref in ((bessel_i, mpmath.besseli), (bessel_k, mpmath.besselk)):
            try:
                out = fn(float(nu), float(x))
            except BesselRangeError:
                # only when the true value leaves the double range
                assert abs(float(mpmath.log(ref(nu, x)))) > 700
                continue
            exact = ref(nu, x)
            assert abs(out.value - float(exact)) <= out.abs_error_bound
            assert out.abs_error_bound == pytest.approx(REL_ERROR * out.value)


def test_non_half_integer_k_recurrence_region():
    # order 40.3 at a tiny argument overflows kve, so the ratio recurrence is used
    assert log_bessel_k(40.3, 1e-5) == pytest.approx(_log_ref(mpmath.besselk, 40.3, 1e-5), rel=1e-13)


def test_small_argument_series_region():
    assert log_bessel_i(55.0, 1e-6) == pytest.approx(_log_ref(mpmath.besseli, 55, 1e-6), rel=1e-13)


def test_derivatives():
    for nu in (0.0, 0.5, 1.0, 2.7, 12.0):
        for x in (0.05, 1.0, 9.0):
            di = float(mpmath.diff(lambda t: mpmath.besseli(nu, t), x))
            dk = float(mpmath.diff(lambda t: mpmath.besselk(nu, t), x))
            assert bessel_i_prime(nu, x).value == pytest.approx(di, rel=1e-12)
            assert bessel_k_prime(nu, x).value == pytest.approx(dk, rel=1e-12)
            assert abs(bessel_i_prime(nu, x).value - di) <= bessel_i_prime(nu, x).abs_error_bound


def test_scaled_forms():
    assert bessel_i_scaled(2.0, 500.0) == pytest.approx(float(mpmath.besseli(2, 500) * mpmath.exp(-500)), rel=1e-12)
    assert bessel_k_scaled(2.0, 500.0) == pytest.approx(float(mpmath.besselk(2, 500) * mpmath.exp(500)), rel=1e-12)


def test_wronskian_small_argument_high_order():
    assert wronskian(60.0, 1e-6) * 1e-6 == pytest.approx(-1.0, abs=1e-10)


@pytest.mark.parametrize("bad", [(-1.0, 1.0), (1.0, 0.0), (1.0, -2.0), (math.nan, 1.0), (1.0, math.inf)])
def test_invalid_arguments(bad):
    with pytest.raises(BesselRangeError):
        bessel_i(*bad)
    with pytest.raises(BesselRangeError):
        log_bessel_k(*bad)


def test_overflow_is_reported():
    with pytest.raises(BesselRangeError, match="overflows"):
        bessel_i(0.0, 720.0)
    with pytest.raises(BesselRangeError, match="underflows"):
        bessel_k(0.0, 720.0)
    assert math.isfinite(log_bessel_i(0.0, 720.0))


def test_supported_range():
    assert in_supported_range(0.0, 1e-6) and in_supported_range(60.0, 700.0)
    assert not in_supported_range(61.0, 1.0) and not in_supported_range(1.0, 701.0)
