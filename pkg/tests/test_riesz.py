import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

import oracles
from strategies import cross_sections
from hodgecone.errors import GuardViolation
from hodgecone.riesz import (DecayIndex, Interval, TopologyInput, case2_interval,
                             generic_degree_interval, nu_D_min_formula, nu_indices, nu_ker,
                             riesz_interval, sobolev_exponents, sufficient_interval)
from hodgecone.indicial import indicial_set
from hodgecone.spectral_data import from_lists, sphere_jmax_for_radius, sphere_preset

INF = math.inf


@pytest.fixture(scope="module")
def r5():
    return sphere_preset(5, sphere_jmax_for_radius(10))


@pytest.mark.parametrize("n", range(3, 9))
def test_sphere_decay_indices(n):
    cs = sphere_preset(n, sphere_jmax_for_radius(10))
    half = Fraction(n, 2)
    for q in range(1, n):
        nd, ndelta, nD = nu_indices(cs, q)
        assert nd.value == ndelta.value == nD.value == half
    nd, ndelta, nD = nu_indices(cs, 0)
    assert nd.value == half and ndelta.is_empty and nD.value == half
    nd, ndelta, nD = nu_indices(cs, n)
    assert nd.is_empty and ndelta.value == half and nD.value == half


def test_decay_index_behaviour():
    e = DecayIndex.empty()
    assert e.is_empty and float(e) == INF and e.to_json() == "empty" and str(e) == "empty"
    b = DecayIndex(lower_bound=2.5)
    assert b.is_bound and float(b) == 2.5 and b.to_json() == {"lower_bound": 2.5}
    v = DecayIndex(Fraction(3, 2))
    assert v.to_json() == {"exact": "3/2", "decimal": 1.5}


def test_interval_formulas():
    assert sufficient_interval(5, Fraction(3, 2), Fraction(7, 2)) == Interval(1, 5)
    assert sufficient_interval(5, Fraction(5, 2), Fraction(9, 2)) == Interval(1, INF)
    assert case2_interval(6, Fraction(3), Fraction(2)) == Interval(Fraction(3, 2), 6)
    iv = Interval(Fraction(6, 5), 6)
    assert iv.contains(2) and not iv.contains(6) and iv.issubset(Interval(1, INF))
    assert str(Interval(1, INF)) == "(1, inf)"


def test_nu_ker_rules(r5):
    iset = indicial_set(r5, 2, 8)
    v0 = Fraction(3, 2)
    assert nu_ker(v0, TopologyInput()) == Fraction(7, 2)
    # snapped down to the largest root not above the decay
    assert nu_ker(v0, TopologyInput(kernel_dim=1, kernel_decay=2.7), iset) == Fraction(5, 2)
    assert nu_ker(v0, TopologyInput(kernel_dim=1, kernel_decay=9.0), iset) == Fraction(7, 2)
    with pytest.raises(ValueError):
        nu_ker(v0, TopologyInput(kernel_dim=1))
    with pytest.raises(ValueError):
        nu_ker(v0, TopologyInput(kernel_dim=1, kernel_decay=1.2))
    with pytest.raises(ValueError):
        nu_ker(0, TopologyInput())


def test_topology_validation():
    with pytest.raises(ValueError):
        TopologyInput(kernel_dim=-1)
    with pytest.raises(ValueError):
        TopologyInput(kernel_dim=1, kernel_decay=1.0)
    with pytest.raises(ValueError):
        TopologyInput(n0=2)


def test_injectivity_is_inferred(r5):
    rep = riesz_interval(r5, 0, TopologyInput())
    assert rep.case is None and rep.sharp_status == "not certified"
    assert rep.candidates["case 1"] == Interval(1, 5)
    assert rep.candidates["case 2"] == Interval(1, INF)
    # q = 1 on R^5: e_2 is injective because b_1(S^4) = 0
    rep = riesz_interval(r5, 4, TopologyInput())
    assert rep.case == 2 and rep.sharp_status == "certified"
    with pytest.raises(ValueError, match="cannot be non-injective"):
        riesz_interval(r5, 4, TopologyInput(e_injective_n_minus_q_plus_1=False))


def test_low_order_of_conicity_withholds_sharp_interval(r5):
    rep = riesz_interval(r5, 2, TopologyInput(n0=3))
    assert rep.sharp_interval is None and rep.sharp_status == "not certified"
    assert "case 2" in rep.candidates
    assert any(a.name == "order of conicity" and a.status == "fail" for a in rep.assumptions)


def test_hypothesis_failure_report():
    cs = from_lists(2, (1, 0, 1), {1: [(Fraction(3, 4), 1), (Fraction(40), 1)], 2: [(Fraction(40), 1)]})
    rep = riesz_interval(cs, 1, TopologyInput())
    assert not rep.hypothesis_ok and rep.sharp_interval is None and rep.nu0 == 0
    assert rep.to_json()["sharp_status"] == "hypothesis failure"


def test_report_json(r5):
    doc = riesz_interval(r5, 2, TopologyInput()).to_json()
    assert doc["sharp_interval"] == {"lo": {"exact": "1", "decimal": 1.0}, "hi": "inf"}
    assert doc["nu0"] == {"exact": "3/2", "decimal": 1.5}
    assert doc["case"] == 2


def _generic_reference(n, q, kernel):
    gap = abs(Fraction(n, 2) - q)
    hi = Fraction(n) / (Fraction(n, 2) + 1 - gap) if Fraction(n, 2) + 1 - gap > 0 else INF
    lo = min(Fraction(2), Fraction(n) / (Fraction(n, 2) - 2 + gap)) if kernel else Fraction(n) / (Fraction(n, 2) + gap)
    return lo, hi


@pytest.mark.parametrize("n", range(3, 11))
def test_generic_degree_interval(n):
    for q in range(n + 1):
        if abs(Fraction(n, 2) - q) <= 1:
            with pytest.raises(ValueError):
                generic_degree_interval(n, q, False)
            continue
        for kernel in (False, True):
            iv = generic_degree_interval(n, q, kernel)
            assert (iv.lo, iv.hi) == _generic_reference(n, q, kernel)
            assert 1 <= iv.lo and iv.hi > 2
            gap = abs(Fraction(n, 2) - q)
            if not kernel or gap > 2:
                assert iv.contains(2)
            else:
                # the open lower endpoint sits exactly at 2
                assert iv.lo == 2


def test_generic_degree_interval_example():
    assert generic_degree_interval(7, 1, False) == Interval(Fraction(7, 6), Fraction(7, 2))
    with pytest.raises(ValueError, match="out of range"):
        generic_degree_interval(6, 3, False)


def test_generic_interval_inside_euclidean_interval():
    for n in range(6, 9):
        cs = sphere_preset(n, sphere_jmax_for_radius(10))
        for q in range(1, n):
            if abs(Fraction(n, 2) - q) > 1:
                iv = generic_degree_interval(n, q, False)
                assert iv.issubset(riesz_interval(cs, q, TopologyInput()).sharp_interval)


def test_sobolev_exponents():
    s = sobolev_exponents(3)
    assert (s.p, s.p_prime) == (Fraction(6, 5), 6)
    assert [a.status for a in s.assumptions] == ["unknown", "unknown"]
    s = sobolev_exponents(4, Fraction(1), Fraction(3))
    assert [a.status for a in s.assumptions] == ["pass", "pass"]
    with pytest.raises(ValueError):
        sobolev_exponents(2)


@settings(max_examples=120, deadline=None)
@given(cross_sections())
def test_closed_form_nu_D_matches_definition(case):
    cs, dim, betti, exact, q = case
    try:
        closed = nu_D_min_formula(cs, q)
    except GuardViolation:
        return
    idx = nu_indices(cs, q)[2]
    if idx.value is not None:
        assert abs(float(closed) - float(idx.value)) < 1e-9
    elif idx.is_bound:
        assert float(closed) >= float(idx.lower_bound) - 1e-9
    else:
        assert closed == INF


@settings(max_examples=60, deadline=None)
@given(cross_sections())
def test_function_interval_matches_scalar_formula(case):
    cs, dim, betti, exact, q = case
    rep = riesz_interval(cs, 0, TopologyInput(e_injective_q_plus_1=True))
    if not rep.hypothesis_ok:
        return
    lam1 = min(e for e, _ in exact[1])
    ref = oracles.recovered_function_interval_hi(dim + 1, lam1, rep.nu_ker)
    hi = rep.sharp_interval.hi
    assert (hi == INF and ref == INF) or abs(float(hi) - float(ref)) < 1e-9 * max(1, float(ref))


def test_nu_D_variant_validation(r5):
    with pytest.raises(ValueError):
        nu_D_min_formula(r5, 2, "other")
