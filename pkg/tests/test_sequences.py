import math
from fractions import Fraction

import pytest

from circulant_hitting.sequences import (
    Identity,
    SequenceKind,
    SequenceTable,
    alternating_sum_closed_form,
    alternating_sum_oracle,
    check_identity,
    fibonacci,
    jacobsthal,
)


def test_jacobsthal_known_values():
    # 0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341 by iterating the recurrence
    assert [jacobsthal(n) for n in range(11)] == [0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341]
    assert jacobsthal(5) == 11
    assert jacobsthal(10) == 341


def test_fibonacci_known_values():
    assert [fibonacci(n) for n in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert fibonacci(1) == 1
    assert fibonacci(5) == 5
    assert fibonacci(10) == 55


@pytest.mark.parametrize("func", [jacobsthal, fibonacci])
def test_negative_index_rejected(func):
    with pytest.raises(ValueError):
        func(-1)


def test_sequence_table_is_append_only():
    table = SequenceTable(SequenceKind.JACOBSTHAL)
    table.warm_up(20)
    snapshot = [table.value(n) for n in range(21)]
    size = len(table)
    table.value(40)
    assert [table.value(n) for n in range(21)] == snapshot
    assert len(table) > size


def test_closed_form_identity_up_to_512():
    for n in range(0, 513):
        assert 3 * jacobsthal(n) == 2 ** n - (-1) ** n


def test_sum_adjacent_and_double_step_up_to_512():
    for n in range(1, 513):
        assert check_identity(Identity.SUM_ADJACENT, n).holds
        assert check_identity(Identity.DOUBLE_STEP, n).holds


def test_sum_adjacent_example():
    check = check_identity(Identity.SUM_ADJACENT, 6)
    assert check.holds
    assert check.lhs == 43 + 21 == 64 == 2 ** 6


def test_addition_law_on_grid():
    for n in range(1, 129):
        for m in range(1, 129):
            assert check_identity(Identity.ADDITION_LAW, n, m=m).holds


def test_convolution_all_splits_up_to_256():
    for n in range(2, 257):
        for j in range(1, n):
            assert check_identity(Identity.CONVOLUTION, n, j=j).holds


def test_convolution_example():
    check = check_identity(Identity.CONVOLUTION, 5, j=2)
    assert check.holds
    assert check.lhs == 5  # J[4]
    assert check.rhs == 1 * 3 + 2 * 1 * 1  # J[2]*J[3] + 2*J[1]*J[2]


def test_weighted_pow_sum_up_to_256():
    for n in range(1, 257):
        assert check_identity(Identity.WEIGHTED_POW_SUM, n).holds


def test_alternating_sum_as_stated_fails_at_n1():
    check = check_identity(Identity.ALTERNATING_SUM, 1)
    assert not check.holds
    assert check.lhs == 1
    assert check.rhs == Fraction(1, 3)


def test_alternating_sum_oracle_values():
    assert alternating_sum_oracle(1) == 1
    assert alternating_sum_oracle(2) == 0   # -J[1] + J[2]
    assert alternating_sum_oracle(3) == 3   # J[1] - J[2] + J[3]
    with pytest.raises(ValueError):
        alternating_sum_oracle(0)


def test_alternating_sum_replacement_matches_direct_sum_up_to_256():
    for n in range(1, 257):
        assert alternating_sum_closed_form(n) == alternating_sum_oracle(n)


def test_monotone_growth():
    for n in range(2, 257):
        assert jacobsthal(n + 1) > jacobsthal(n)


def test_identity_domain_errors():
    with pytest.raises(ValueError):
        check_identity(Identity.CLOSED_FORM, -1)
    with pytest.raises(ValueError):
        check_identity(Identity.SUM_ADJACENT, 0)
    with pytest.raises(ValueError):
        check_identity(Identity.ADDITION_LAW, 3)  # missing m
    with pytest.raises(ValueError):
        check_identity(Identity.CONVOLUTION, 5, j=5)  # j out of 1..n-1
    with pytest.raises(ValueError):
        check_identity(Identity.CONVOLUTION, 1, j=1)
    with pytest.raises(ValueError):
        check_identity(Identity.WEIGHTED_POW_SUM, 4, m=2)  # extraneous index


def test_identity_check_reports_both_sides():
    text = str(check_identity(Identity.ALTERNATING_SUM, 1))
    assert "fails" in text and "lhs=1" in text and "rhs=1/3" in text
    assert "holds" in str(check_identity(Identity.SUM_ADJACENT, 3))


def test_exactness_no_floats():
    check = check_identity(Identity.WEIGHTED_POW_SUM, 9)
    assert isinstance(check.lhs, Fraction) and isinstance(check.rhs, Fraction)
    assert check.rhs.denominator >= 1
    assert math.gcd(check.rhs.numerator, check.rhs.denominator) == 1
