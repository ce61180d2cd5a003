import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from trispinor import (
    DegenerateDelta,
    Quaternion,
    SeqParams,
    companion_power,
    k_quaternion,
    preset,
    qconj,
    qmul,
    qnorm,
    quat_partial_sum,
    quat_u_decomposition,
    qv_matrix,
    qv_right_multiply,
    seq_slice,
    summation_correction,
    trib_quaternion,
)

TRIB = preset("tribonacci")

ONE = Quaternion(1, 0, 0, 0)
E1 = Quaternion(0, 1, 0, 0)
E2 = Quaternion(0, 0, 1, 0)
E3 = Quaternion(0, 0, 0, 1)

fractions = st.fractions(min_value=-10, max_value=10, max_denominator=8)
quaternions = st.builds(Quaternion, fractions, fractions, fractions, fractions)


def test_basis_table():
    assert qmul(E1, E2) == E3
    assert qmul(E2, E1) == -E3
    assert qmul(E2, E3) == E1
    assert qmul(E3, E2) == -E1
    assert qmul(E3, E1) == E2
    assert qmul(E1, E3) == -E2
    for e in (E1, E2, E3):
        assert qmul(e, e) == -ONE


def test_identity_element():
    q = Quaternion(Fraction(1, 2), -3, 4, Fraction(7, 3))
    assert qmul(ONE, q) == q
    assert qmul(q, ONE) == q


def test_noncommutativity_witness():
    assert qmul(E1, E2) == -qmul(E2, E1)
    assert qmul(E1, E2) != Quaternion(0, 0, 0, 0)


def test_conjugate():
    assert qconj(Quaternion(5, 0, 0, 0)) == Quaternion(5, 0, 0, 0)
    assert qconj(E1) == -E1
    assert qconj(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4)


def test_norm():
    assert qnorm(Quaternion(0, 0, 0, 0)) == 0
    assert qnorm(E1) == 1
    assert qnorm(Quaternion(1, 2, 3, 4)) == 30


def test_norm_is_scalar_part_of_q_times_conj():
    q = Quaternion(1, -2, Fraction(3, 2), 4)
    prod = qmul(q, qconj(q))
    assert prod == Quaternion(qnorm(q), 0, 0, 0)


@given(a=quaternions, b=quaternions, c=quaternions)
def test_associativity(a, b, c):
    assert qmul(qmul(a, b), c) == qmul(a, qmul(b, c))


def test_associativity_bulk():
    rng = random.Random(1000)
    for _ in range(1000):
        a, b, c = (
            Quaternion(*(Fraction(rng.randint(-9, 9), rng.choice((1, 2))) for _ in range(4)))
            for _ in range(3)
        )
        assert qmul(qmul(a, b), c) == qmul(a, qmul(b, c))


@given(p=quaternions, q=quaternions)
def test_norm_multiplicative(p, q):
    assert qnorm(qmul(p, q)) == qnorm(p) * qnorm(q)


@given(p=quaternions, q=quaternions)
def test_conjugate_antihomomorphism(p, q):
    assert qconj(qmul(p, q)) == qmul(qconj(q), qconj(p))


def test_trib_quaternion_windows():
    assert trib_quaternion(TRIB, 0).value == Quaternion(0, 1, 1, 2)
    assert trib_quaternion(TRIB, 1).value == Quaternion(1, 1, 2, 4)
    assert trib_quaternion(TRIB, 2).value == Quaternion(1, 2, 4, 7)


def test_quaternion_recurrence():
    rng = random.Random(23)
    for _ in range(8):
        p = SeqParams(*(rng.randint(-5, 5) for _ in range(6)))
        qs = [trib_quaternion(p, n).value for n in range(104)]
        for n in range(101):
            assert qs[n + 3] == p.r * qs[n + 2] + p.s * qs[n + 1] + p.t * qs[n]


def test_k_quaternion():
    assert k_quaternion(TRIB, 0) == Quaternion(1, 2, 3, 6)
    assert k_quaternion(TRIB, 1) == Quaternion(2, 3, 6, 11)
    flat = SeqParams(2, 0, 0, 1, 1, 1)
    assert k_quaternion(flat, 3) == Quaternion(0, 0, 0, 0)


def test_qv_matrix_layout():
    qv = qv_matrix(TRIB, 0)
    assert qv.entries[0][0] == trib_quaternion(TRIB, 4).value
    assert qv.entries[2][1] == k_quaternion(TRIB, 0)
    assert qv.entries[1][2] == TRIB.t * trib_quaternion(TRIB, 2).value
    shifted = qv_matrix(TRIB, 1)
    assert shifted.entries[0][0] == trib_quaternion(TRIB, 5).value


def test_qv_shift_identity():
    rng = random.Random(31)
    for _ in range(4):
        p = SeqParams(*(rng.randint(-4, 4) for _ in range(6)))
        base = qv_matrix(p, 0)
        for n in (0, 1, 2, 5, 11):
            assert qv_right_multiply(base, companion_power(p, n)) == qv_matrix(p, n).entries


def test_u_decomposition_examples():
    assert quat_u_decomposition(TRIB, 0) == Quaternion(1, 2, 4, 7)
    assert quat_u_decomposition(TRIB, 1) == Quaternion(2, 4, 7, 13)
    aux_seeded = SeqParams(1, 1, 1, 0, 0, 1)
    u = seq_slice(aux_seeded, 5, 4)
    assert quat_u_decomposition(aux_seeded, 3) == Quaternion(*u)


def test_u_decomposition_matches_window():
    rng = random.Random(37)
    for _ in range(6):
        p = SeqParams(*(rng.randint(-5, 5) for _ in range(6)))
        for n in range(0, 101, 9):
            assert quat_u_decomposition(p, n) == trib_quaternion(p, n + 2).value


def test_summation_correction_tribonacci():
    corr = summation_correction(TRIB)
    assert corr.delta == 2
    assert corr.lambda_ == -1
    assert corr.omega == Quaternion(-1, -1, -3, -5)


def test_summation_correction_zero_seeds():
    corr = summation_correction(SeqParams(1, 1, 1, 0, 0, 0))
    assert corr.lambda_ == 0
    assert corr.omega == Quaternion(0, 0, 0, 0)


def test_summation_correction_degenerate_delta_params():
    p = SeqParams(1, 0, 0, 1, 0, 0)
    corr = summation_correction(p)
    assert corr.delta == 0
    assert corr.lambda_ == (p.r + p.s - 1) * p.v0 + (p.r - 1) * p.v1 - p.v2


def test_partial_sum_examples():
    assert quat_partial_sum(TRIB, 0) == Quaternion(0, 1, 1, 2)
    assert quat_partial_sum(TRIB, 2) == Quaternion(2, 4, 7, 13)


def test_partial_sum_degenerate_delta():
    with pytest.raises(DegenerateDelta):
        quat_partial_sum(SeqParams(1, 1, -1, 0, 1, 1), 4)


def test_partial_sum_matches_direct_sum():
    rng = random.Random(41)
    checked = 0
    while checked < 6:
        p = SeqParams(*(rng.randint(-5, 5) for _ in range(6)))
        if p.r + p.s + p.t - 1 == 0:
            continue
        checked += 1
        total = Quaternion(0, 0, 0, 0)
        for n in range(201):
            total = total + trib_quaternion(p, n).value
            if n % 17 == 0 or n == 200:
                assert quat_partial_sum(p, n) == total
