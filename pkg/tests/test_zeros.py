import math

import numpy as np
import pytest

import bessel_lommel as bl
from bessel_lommel.special import DomainError, jvp


def jfid(nu):
    return bl.FunctionId(bl.Kind.BESSEL_J, nu)


def test_first_zeros_of_j0():
    # frozen via the series + bisection oracle
    zl = bl.zeros(jfid(0.0), 3)
    assert zl.zeros == pytest.approx(
        (2.404825557695773, 5.520078110286311, 8.653727912911013), abs=1e-9
    )


def test_first_critical_point_of_j1():
    zl = bl.zeros(bl.FunctionId(bl.Kind.BESSEL_J_PRIME, 1.0), 1)
    assert zl.zeros[0] == pytest.approx(1.8411837813406593, abs=1e-9)


def test_first_zero_of_negative_y0():
    # C with alpha = pi/2 is -Y_0; frozen via the bisection oracle
    zl = bl.zeros(bl.FunctionId(bl.Kind.CYLINDER, 0.0, alpha=math.pi / 2.0), 1)
    assert zl.zeros[0] == pytest.approx(0.8935769662791675, abs=1e-9)


def test_zero_list_contract():
    for fid in (jfid(1.125), bl.FunctionId(bl.Kind.CYLINDER, 0.5, alpha=math.pi / 4.0)):
        zl = bl.zeros(fid, 12)
        xs = zl.as_array()
        assert np.all(np.diff(xs) > 0.0)
        assert np.all(np.diff(xs) >= 1.0)
        df = bl.special.derivative_fn(fid)
        for z, r in zip(zl.zeros, zl.residuals):
            assert r < zl.tolerance * max(1.0, abs(float(df(z))))


def test_classical_interlacing_with_adjacent_orders():
    for nu in (-0.5, 0.0, 1.125, 2.7, 5.0):
        base = bl.zeros(jfid(nu), 20).as_array()
        for shift in (1.0, 2.0):
            up = bl.zeros(jfid(nu + shift), 20).as_array()
            assert np.all(base[:-1] < up[:-1])
            assert np.all(up[:-1] < base[1:])


def test_zeros_are_simple():
    for nu in (-0.5, 0.0, 1.125, 2.7, 5.0):
        zl = bl.zeros(jfid(nu), 20)
        for z in zl.zeros:
            assert abs(jvp(nu, z)) > 1e-3


def test_critical_points_interlace_with_zeros():
    for nu in (0.5, 1.0, 2.7):
        crit = bl.zeros(bl.FunctionId(bl.Kind.BESSEL_J_PRIME, nu), 10).as_array()
        zer = bl.zeros(jfid(nu), 10).as_array()
        assert crit[0] < zer[0]
        assert np.all(crit[:10] < zer[:10])
        assert np.all(zer[:9] < crit[1:10])


def test_bulk_zeros_match_scan_path():
    nu = 0.7
    bulk = bl.zeros(jfid(nu), 120)
    assert "asymptotic" in bulk.method
    head = bl.zeros(jfid(nu), 60)
    assert bulk.zeros[:60] == pytest.approx(head.zeros, abs=1e-11)
    assert max(bulk.residuals) < 1e-12


def test_bulk_zeros_spacing_for_large_order():
    zl = bl.zeros(jfid(60.0), 50)
    xs = zl.as_array()
    assert xs[0] > 60.0
    assert np.all(np.diff(xs) >= 1.0)


def test_second_kind_zeros():
    # Y_{1/2}(x) = -sqrt(2/(pi x)) cos x, zeros at pi/2 + k pi
    zl = bl.zeros(bl.FunctionId(bl.Kind.BESSEL_Y, 0.5), 3)
    expect = (math.pi / 2.0, 3.0 * math.pi / 2.0, 5.0 * math.pi / 2.0)
    assert zl.zeros == pytest.approx(expect, abs=1e-11)


def test_lommel_kind_routing():
    nu = 1.125
    zl = bl.zeros(bl.FunctionId(bl.Kind.LOMMEL, nu + 1.0, degree=2), 5)
    assert len(zl) == 1
    assert zl.zeros[0] == pytest.approx(2.0 * math.sqrt((nu + 1.0) * (nu + 2.0)), rel=1e-12)


def test_domain_errors():
    with pytest.raises(DomainError):
        bl.zeros(jfid(-1.5), 3)
    with pytest.raises(DomainError):
        bl.zeros(bl.FunctionId(bl.Kind.BESSEL_J_PRIME, -0.5), 3)
    assert len(bl.zeros(jfid(1.0), 0)) == 0


def test_order_derivative_routes_agree():
    od = bl.dj_dnu(1.0, 1)
    assert od.value_fd > 0 and od.value_series > 0 and od.value_watson > 0
    assert abs(od.value_fd - od.value_series) / od.value_fd < 1e-5
    assert od.spread <= 1e-4


def test_order_derivative_large_order_trend():
    od = bl.dj_dnu(50.0, 1)
    assert 1.0 < od.value_series < 1.2


def test_order_derivative_positive_grid():
    for nu in (0.5, 2.7):
        for k in (1, 2):
            od = bl.dj_dnu(nu, k)
            assert min(od.value_fd, od.value_series, od.value_watson) > 0.0
            assert od.spread <= 1e-4


def test_order_derivative_domain():
    with pytest.raises(DomainError):
        bl.dj_dnu(0.0, 1)


def test_cylinder_zero_monotonicity():
    assert bl.cylinder_zero_monotonicity(0.0, np.arange(0.5, 5.01, 0.5), 1)
    assert bl.cylinder_zero_monotonicity(math.pi / 4.0, np.arange(1.0, 4.01, 0.5), 2)
    assert bl.cylinder_zero_monotonicity(0.0, [2.0], 1)


def test_watson_derivative_matches_finite_difference():
    from bessel_lommel.zeros import watson_derivative

    nu = 1.5
    j = bl.zeros(jfid(nu), 2).zeros[1]
    h = 1e-4
    up = bl.zeros(jfid(nu + h), 2).zeros[1]
    dn = bl.zeros(jfid(nu - h), 2).zeros[1]
    assert watson_derivative(nu, j) == pytest.approx((up - dn) / (2.0 * h), rel=1e-6)
