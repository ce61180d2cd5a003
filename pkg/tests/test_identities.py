import random

import pytest

from trispinor import (
    DegenerateDelta,
    GaussScalar,
    IdentityId,
    Quaternion,
    SeqParams,
    Spinor,
    Status,
    UnsupportedParams,
    binet_spinor,
    determinant_combination_values,
    norm_forms,
    preset,
    qv_matrix,
    random_params,
    run_identity,
    run_suite,
    sigma,
    summation_correction,
    trib_spinor,
    verify_binet,
    verify_conjugate_relations,
    verify_determinant_combination,
    verify_genfunc_agreement,
    verify_matrix_power_shift,
    verify_norm_equality,
    verify_spinor_matrix_behavior,
    verify_spinor_recurrence,
    verify_summation,
    verify_triple_product_map,
    verify_u_decomposition,
)

TRIB = preset("tribonacci")
JAC = preset("third_order_jacobsthal")
DEGENERATE_DELTA = SeqParams(1, 1, -1, 0, 1, 1)
TRIPLE_ROOT = SeqParams(3, -3, 1, 0, 1, 1)


def test_spinor_recurrence_reports():
    assert verify_spinor_recurrence(TRIB, 50).status is Status.EXACT_PASS
    rng = random.Random(2)
    for _ in range(5):
        assert verify_spinor_recurrence(random_params(rng), 50).status is Status.EXACT_PASS
    with pytest.raises(ValueError):
        verify_spinor_recurrence(TRIB, 2)


def test_conjugate_relations_reports():
    assert verify_conjugate_relations(TRIB, 100).status is Status.EXACT_PASS
    assert verify_conjugate_relations(JAC, 100).status is Status.EXACT_PASS
    zero_seeds = SeqParams(1, 1, 1, 0, 0, 0)
    assert verify_conjugate_relations(zero_seeds, 20).status is Status.EXACT_PASS


def test_norm_equality_reports_and_spots():
    assert norm_forms(TRIB, 0) == (GaussScalar(6),) * 3
    assert norm_forms(TRIB, 1) == (GaussScalar(22),) * 3
    assert verify_norm_equality(TRIB, 60).status is Status.EXACT_PASS
    assert verify_norm_equality(SeqParams(1, 1, 1, 0, 0, 0), 10).status is Status.EXACT_PASS


def test_binet_reports():
    report = verify_binet(TRIB, 30, 1e-9)
    assert report.status is Status.TOLERED_PASS
    assert "max relative error" in report.note
    assert verify_binet(JAC, 25, 1e-9).status is Status.TOLERED_PASS


def test_binet_fail_carries_witness():
    # An absurdly tight tolerance forces the float comparison to fail, which
    # exercises the witness machinery on a real computation.
    report = verify_binet(TRIB, 30, 1e-18)
    assert report.status is Status.FAIL
    assert report.witness is not None
    assert report.witness.lhs != report.witness.rhs
    # The witness replays through the public operations.
    n = report.witness.n
    c1, c2 = binet_spinor(TRIB, n)
    assert f"[{c1:.12g}; {c2:.12g}]" == report.witness.lhs
    assert str(trib_spinor(TRIB, n)) == report.witness.rhs


def test_genfunc_reports():
    assert verify_genfunc_agreement(TRIB, 63).status is Status.EXACT_PASS
    rng = random.Random(4)
    for _ in range(5):
        assert verify_genfunc_agreement(random_params(rng), 40).status is Status.EXACT_PASS


def test_triple_product_reports():
    report = verify_triple_product_map(42, 1000)
    assert report.status is Status.EXACT_PASS
    assert report.params is None
    assert report.span == (0, 999)
    with pytest.raises(ValueError):
        verify_triple_product_map(42, 0)


def test_spinor_matrix_behavior_reports():
    assert verify_spinor_matrix_behavior(TRIB, 30).status is Status.EXACT_PASS
    rng = random.Random(6)
    for _ in range(5):
        assert verify_spinor_matrix_behavior(random_params(rng), 20).status is Status.EXACT_PASS


def test_determinant_combination_values_agree():
    for n in range(6):
        for fixed in (False, True):
            spin_val, quat_val = determinant_combination_values(TRIB, n, fixed)
            assert spin_val == -sigma(quat_val)
    # The shifted reading is the constant one.
    reference = Spinor(GaussScalar(-4, 4), GaussScalar(4, -4))
    for n in range(6):
        spin_val, _ = determinant_combination_values(TRIB, n)
        assert spin_val == reference


def test_determinant_combination_report():
    report = verify_determinant_combination(TRIB, 20)
    assert report.status is Status.EXACT_PASS
    assert "equals reference" in report.note
    assert "varies with n" in report.note
    with pytest.raises(UnsupportedParams):
        verify_determinant_combination(JAC, 5)


def test_summation_report_tribonacci():
    report = verify_summation(TRIB, 50)
    assert report.status is Status.EXACT_PASS
    assert "[-5-1i; -1-3i]" in report.note
    assert "[-3-1i; 0-2i]" in report.note
    assert "first mismatch at n=0" in report.note


def test_summation_single_term_spot_value():
    # delta * (sum of the single spinor at n=0) for the tribonacci preset.
    delta = summation_correction(TRIB).delta
    assert delta * trib_spinor(TRIB, 0) == Spinor(GaussScalar(4, 0), GaussScalar(2, 2))


def test_summation_random_params():
    rng = random.Random(8)
    checked = 0
    while checked < 8:
        p = random_params(rng)
        if p.r + p.s + p.t - 1 == 0:
            continue
        checked += 1
        assert verify_summation(p, 80).status is Status.EXACT_PASS


def test_summation_degenerate_delta():
    with pytest.raises(DegenerateDelta):
        verify_summation(DEGENERATE_DELTA, 10)


def test_matrix_power_shift_reports():
    report = verify_matrix_power_shift(TRIB, 20)
    assert report.status is Status.EXACT_PASS
    assert qv_matrix(TRIB, 1).entries[0][0] == Quaternion(7, 13, 24, 44)
    rng = random.Random(10)
    for _ in range(4):
        assert verify_matrix_power_shift(random_params(rng), 30).status is Status.EXACT_PASS


def test_u_decomposition_reports():
    assert verify_u_decomposition(TRIB, 40).status is Status.EXACT_PASS
    rng = random.Random(12)
    for _ in range(4):
        assert verify_u_decomposition(random_params(rng), 40).status is Status.EXACT_PASS


def test_run_identity_skips():
    report = run_identity(IdentityId.SUMMATION_CLOSED_FORM, DEGENERATE_DELTA, nmax=20)
    assert report.status is Status.SKIPPED
    assert "DegenerateDelta" in report.note
    report = run_identity(IdentityId.BINET_AGREEMENT, TRIPLE_ROOT, nmax=20)
    assert report.status is Status.SKIPPED
    assert "DegenerateRoots" in report.note
    report = run_identity(IdentityId.DETERMINANT_COMBINATION, JAC, nmax=20)
    assert report.status is Status.SKIPPED
    assert "UnsupportedParams" in report.note


def test_run_suite_tribonacci():
    reports = run_suite(TRIB, nmax=50, seed=1)
    assert len(reports) == 11
    assert [r.identity for r in reports] == list(IdentityId)
    assert all(r.status in (Status.EXACT_PASS, Status.TOLERED_PASS) for r in reports)
    by_id = {r.identity: r for r in reports}
    assert "sigma(omega)" in by_id[IdentityId.SUMMATION_CLOSED_FORM].note
    assert "reference" in by_id[IdentityId.DETERMINANT_COMBINATION].note


def test_run_suite_deterministic():
    first = run_suite(TRIB, nmax=30, seed=7)
    second = run_suite(TRIB, nmax=30, seed=7)
    assert first == second


def test_run_suite_skips_where_inapplicable():
    reports = run_suite(DEGENERATE_DELTA, nmax=20, seed=0)
    by_id = {r.identity: r for r in reports}
    assert by_id[IdentityId.SUMMATION_CLOSED_FORM].status is Status.SKIPPED
    assert by_id[IdentityId.DETERMINANT_COMBINATION].status is Status.SKIPPED
    assert by_id[IdentityId.SPINOR_RECURRENCE].status is Status.EXACT_PASS

    reports = run_suite(TRIPLE_ROOT, nmax=20, seed=0)
    by_id = {r.identity: r for r in reports}
    assert by_id[IdentityId.BINET_AGREEMENT].status is Status.SKIPPED
