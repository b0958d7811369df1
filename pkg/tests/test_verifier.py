import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetakit import catalog, verifier
from zetakit.catalog import CatalogKey
from zetakit.specfun import catalan, clausen_cl2, riemann_zeta
from zetakit.verifier import (
    InconclusiveError,
    check_binomial_identity,
    check_reciprocal_identity,
    cross_check_clausen,
    quadrature,
    verify,
    verify_all,
    verify_integral_identity,
)

PI = math.pi


# --- verify --------------------------------------------------------------------

def test_verify_simple_pass():
    (report,) = verify(CatalogKey("SUM_23"), 1e-10)
    assert report.passed
    assert report.rhs == 0.5
    assert report.variant == "corrected"
    assert report.abs_err == abs(report.lhs - report.rhs)


def test_verify_corrected_entry_reports_both_variants():
    corrected, printed = verify(CatalogKey("SUM_34"), 1e-10)
    assert corrected.passed and corrected.variant == "corrected"
    assert not printed.passed and printed.variant == "printed"
    assert printed.abs_err == pytest.approx(PI ** 3 / 48, rel=1e-9)
    assert printed.abs_err > 0.1


def test_verify_apery_is_fast():
    (report,) = verify(CatalogKey("ZETA3_APERY_14"), 1e-12)
    assert report.passed
    assert report.n_terms <= 25


def test_verify_pass_criterion_is_reproducible():
    for key in (CatalogKey("SUM_9"), CatalogKey("THM_29", 1), CatalogKey("RZS_GAMMA")):
        (report,) = verify(key, 1e-9)
        assert report.passed
        lhs = catalog.assembled_sum(key, _depth_of(key, report))
        assert report.passed == (report.abs_err <= report.tolerance + lhs.error_bound)


def _depth_of(key, report):
    entry = catalog.get(key.id)
    return entry.start_index + report.n_terms - 1


def test_verify_pass_soundness_under_doubling():
    for key in (CatalogKey("SUM_22"), CatalogKey("ZETA3_13"), CatalogKey("THM_21", 4)):
        (report,) = verify(key, 1e-9)
        n = _depth_of(key, report)
        lhs = catalog.assembled_sum(key, n)
        doubled = catalog.assembled_sum(key, 2 * n)
        assert abs(doubled.value - lhs.value) <= lhs.error_bound + 1e-15


def test_verify_rejects_tiny_tolerance():
    with pytest.raises(ValueError):
        verify(CatalogKey("SUM_23"), 1e-14)


_ALL_KEYS = [
    CatalogKey(e.id, e.param_min if e.is_family else None)
    for e in catalog.registry().values()
    if e.verifiable
] + [CatalogKey("THM_21", 7), CatalogKey("THM_29", 8), CatalogKey("SUM_37", 5),
     CatalogKey("SUM_38", 6), CatalogKey("SUM_28", 4)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_ALL_KEYS), st.floats(1e-12, 1e-6))
def test_verify_passes_at_any_tolerance(key, tolerance):
    reports = verify(key, tolerance)
    assert reports[0].passed  # the corrected/authoritative variant
    assert reports[0].abs_err == abs(reports[0].lhs - reports[0].rhs)


def test_verify_inconclusive_under_term_cap(monkeypatch):
    monkeypatch.setenv("ZETAKIT_MAX_TERMS", "4")
    with pytest.raises(InconclusiveError):
        verify(CatalogKey("RZS_ONE"), 1e-9)


# --- verify_all ------------------------------------------------------------------

def test_verify_all_expected_failures():
    reports = verify_all(1e-9, 12)
    fails = [r for r in reports if not r.passed]
    assert {(r.key.id, r.variant) for r in fails} == {("SUM_28", "printed"), ("SUM_34", "printed")}
    assert all(r.abs_err > 0.1 for r in fails)
    assert not any(r.inconclusive for r in reports)


def test_verify_all_report_count():
    reports = verify_all(1e-9, 12)
    scalars = sum(1 for e in catalog.registry().values() if e.verifiable and not e.is_family)
    family_sizes = sum(
        13 - e.param_min
        for e in catalog.registry().values()
        if e.verifiable and e.is_family
    )
    corrected = 2  # one printed variant each for SUM_28 and SUM_34
    assert len(reports) == scalars + family_sizes + corrected


def test_verify_all_zeta_e_weight_at_lowest_order():
    reports = verify_all(1e-9, 1)
    thm29 = [r for r in reports if r.key.id == "THM_29"]
    assert len(thm29) == 1 and thm29[0].key.param == 1 and thm29[0].passed


def test_verify_all_deterministic():
    a = verify_all(1e-9, 6)
    b = verify_all(1e-9, 6)
    assert a == b
    assert verifier.reports_to_json(a) == verifier.reports_to_json(b)


def test_verify_all_marks_inconclusive(monkeypatch):
    monkeypatch.setenv("ZETAKIT_MAX_TERMS", "6")
    reports = verify_all(1e-9, 2)
    assert any(r.inconclusive for r in reports)
    assert len(reports) > 10  # the suite still runs to the end


def test_report_json_schema():
    reports = verify_all(1e-9, 2)
    data = json.loads(verifier.reports_to_json(reports))
    assert len(data) == len(reports)
    expected_fields = {"key", "lhs", "rhs", "abs_err", "rel_err", "n_terms",
                       "tolerance", "variant", "pass", "inconclusive"}
    assert all(set(row) == expected_fields for row in data)
    assert all(set(row["key"]) == {"id", "param"} for row in data)


# --- exact combinatorial lemmas ------------------------------------------------------

def test_binomial_identity_small_case():
    # n = j = 1: C(2,2) - C(3,3)/3 = 2/3 = (2/3) C(2,2)
    assert check_binomial_identity(1, 1)


def test_binomial_identity_full_range():
    assert check_binomial_identity(20, 20)


def test_reciprocal_identity():
    assert check_reciprocal_identity(50)


def test_lemma_bounds_validated():
    with pytest.raises(ValueError):
        check_binomial_identity(0, 5)
    with pytest.raises(ValueError):
        check_reciprocal_identity(0)


# --- quadrature -----------------------------------------------------------------------

def test_quadrature_log_sin_quarter_period():
    q = quadrature("log_sin", 0.0, PI / 2)
    assert abs(q.value - (-PI / 2 * math.log(2.0))) <= 1e-10
    assert q.evaluations > 0


def test_quadrature_log_two_sin_half_vanishes_over_period():
    q = quadrature("log_two_sin_half", 0.0, PI)
    assert abs(q.value) <= 1e-10


def test_quadrature_moment_integral():
    q = quadrature("x_log_sin", 0.0, PI / 4)
    target = (35.0 / 128.0) * riemann_zeta(3.0).value - PI * catalan().value / 8.0 \
        - PI ** 2 / 32.0 * math.log(2.0)
    assert abs(q.value - target) <= 1e-10


def test_quadrature_quadratic_moment_integral():
    # int_0^{pi/2} x^2 log(2 sin(x/2)) dx, closed form via zeta(3), G, beta(4)
    q = quadrature("x2_log_two_sin_half", 0.0, PI / 2)
    from zetakit.specfun import dirichlet_beta
    closed = (72.0 * PI * riemann_zeta(3.0).value - 192.0 * PI ** 2 * catalan().value
              + 1536.0 * dirichlet_beta(4.0).value) / 768.0
    assert abs(q.value - closed) <= 1e-10


def test_quadrature_handles_interior_singularity():
    # log|cos| is singular at pi/2, inside this range
    q = quadrature("log_cos", 0.0, 3 * PI / 4)
    target = 0.5 * clausen_cl2(PI - 1.5 * PI).value - 0.75 * PI * math.log(2.0)
    assert abs(q.value - target) <= 1e-10


def test_quadrature_self_consistency():
    for target in (1e-8, 1e-10):
        a = quadrature("log_sin", 0.0, 1.0, target=target)
        b = quadrature("log_sin", 0.0, 1.0, target=target / 2)
        assert abs(a.value - b.value) <= a.error_estimate + 1e-14


def test_quadrature_errors():
    with pytest.raises(ValueError):
        quadrature("exp_sin", 0.0, 1.0)
    with pytest.raises(ValueError):
        quadrature("log_sin", 1.0, 1.0)


# --- integral identities -----------------------------------------------------------------

@pytest.mark.parametrize("identity_id", verifier.INTEGRAL_IDENTITY_IDS)
def test_integral_identities_pass(identity_id):
    report = verify_integral_identity(identity_id, 1e-8)
    assert report.passed, (identity_id, report.abs_err)
    assert report.abs_err <= 1e-8


def test_cl2_defining_integral_at_one():
    report = verify_integral_identity("CL2_INTEGRAL", 1e-9, thetas=(1.0,))
    assert report.passed
    assert report.abs_err <= 1e-9


def test_integral_identity_unknown_id():
    with pytest.raises(ValueError):
        verify_integral_identity("INT_LOG_TAN", 1e-8)


# --- Clausen cross-check --------------------------------------------------------------------

def test_cross_check_clausen_default_grid():
    report = cross_check_clausen(64, 1e-9)
    assert report.passed
    assert report.abs_err <= 1e-9


def test_cross_check_methods_at_quarter_turn():
    g = catalan().value
    for method in ("accel", "peeled", "wzl"):
        assert abs(clausen_cl2(PI / 2, method).value - g) <= 1e-10


def test_cross_check_near_period_boundary():
    theta = 2 * PI - 0.05
    a = clausen_cl2(theta, "accel").value
    w = clausen_cl2(theta, "wzl").value
    assert abs(a - w) <= 1e-8


def test_cross_check_validates_grid():
    with pytest.raises(ValueError):
        cross_check_clausen(4, 1e-9)
