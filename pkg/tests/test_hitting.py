from fractions import Fraction

import pytest

from circulant_hitting.circulant import CirculantWalk, build_system, hitting_oracle
from circulant_hitting.exact_linalg import is_identity, multiply
from circulant_hitting.hitting import (
    FORWARD_ONE_TWO_STEPS,
    HittingResult,
    Method,
    hitting_corrected,
    hitting_corrected_vector,
    hitting_fibonacci,
    hitting_fibonacci_vector,
    hitting_last,
    hitting_printed,
    hitting_printed_vector,
    hitting_rowsum,
    inverse_entry,
    inverse_matrix,
    undirected_one_two_steps,
)
from circulant_hitting.sequences import jacobsthal


def test_inverse_entry_examples():
    assert inverse_entry(5, 1, 2) == Fraction(3, 11)   # superdiagonal: J[1]*J[3]/J[5]
    assert inverse_entry(5, 3, 2) == Fraction(5, 11)
    assert inverse_entry(5, 4, 1) == Fraction(5, 11)   # corner: J[4]/J[5]


def test_inverse_entry_validation():
    with pytest.raises(ValueError):
        inverse_entry(2, 1, 1)
    with pytest.raises(ValueError):
        inverse_entry(5, 0, 1)
    with pytest.raises(ValueError):
        inverse_entry(5, 1, 5)


def test_inverse_matrix_three():
    inv = inverse_matrix(3)
    assert inv.data == [[Fraction(2, 3), Fraction(1, 3)], [Fraction(1, 3), Fraction(2, 3)]]


def test_inverse_matrix_five_rows():
    inv = inverse_matrix(5)
    assert inv.row(0) == [Fraction(8, 11), Fraction(3, 11), Fraction(2, 11), Fraction(4, 11)]
    assert inv.row(3) == [Fraction(5, 11), Fraction(6, 11), Fraction(4, 11), Fraction(8, 11)]


def test_inverse_matrix_inverts_system_up_to_64():
    for n in range(3, 65):
        system = build_system(CirculantWalk(n, FORWARD_ONE_TWO_STEPS))
        assert is_identity(multiply(system.matrix, inverse_matrix(n)))


def test_corner_branch_is_redundant():
    # The general lower-triangle formula reproduces the corner entry because
    # J[0] = 0 and J[0] + J[1] = 1; the dispatch order is therefore immaterial.
    J = jacobsthal
    for n in range(3, 257):
        i, j = n - 1, 1
        general = J(i - j + 1) * (J(n - i + j - 2) + J(n - i + j - 1)) \
            - (-1) ** (i + j) * J(j - 1) * J(n - i - 1)
        assert general == J(n - 1)
        assert inverse_entry(n, i, j) == Fraction(J(n - 1), J(n))


def test_rowsum_examples():
    assert hitting_rowsum(3).values == [2, 2]
    assert hitting_rowsum(4).values == [Fraction(14, 5), Fraction(12, 5), Fraction(18, 5)]
    assert hitting_rowsum(5).values == [Fraction(34, 11), Fraction(28, 11), Fraction(42, 11), Fraction(46, 11)]
    assert hitting_rowsum(5).method is Method.ROW_SUM


def test_rowsum_matches_oracle_up_to_40():
    for n in range(3, 41):
        assert hitting_rowsum(n).values == hitting_oracle(CirculantWalk(n, FORWARD_ONE_TWO_STEPS)).values


def test_corrected_examples():
    assert hitting_corrected(5, 1) == Fraction(34, 11)
    assert hitting_corrected(4, 2) == Fraction(12, 5)
    assert hitting_corrected(3, 1) == 2


def test_corrected_matches_oracle_up_to_40():
    for n in range(3, 41):
        oracle = hitting_oracle(CirculantWalk(n, FORWARD_ONE_TWO_STEPS))
        for l in range(1, n):
            assert hitting_corrected(n, l) == oracle.value(l)


def test_printed_examples():
    assert hitting_printed(5, 4) == Fraction(46, 11)   # agrees with the oracle at l = N-1
    assert hitting_printed(5, 1) == Fraction(24, 11)   # oracle gives 34/11
    assert hitting_printed(5, 2) == Fraction(82, 33)   # oracle gives 84/33


def test_printed_agrees_only_at_last_target():
    for n in range(3, 31):
        oracle = hitting_oracle(CirculantWalk(n, FORWARD_ONE_TWO_STEPS))
        assert hitting_printed(n, n - 1) == oracle.value(n - 1)
        for l in range(1, n - 1):
            assert hitting_printed(n, l) != oracle.value(l)


def test_hitting_last_examples():
    assert hitting_last(5) == Fraction(46, 11)  # (2/33) * (5*5 + 4*11)
    assert hitting_last(4) == Fraction(18, 5)   # (2/15) * (4*3 + 3*5)
    assert hitting_last(3) == 2                 # (2/9) * (3*1 + 2*3)


def test_hitting_last_matches_rowsum():
    for n in range(3, 65):
        assert hitting_last(n) == hitting_rowsum(n).value(n - 1)


def test_fibonacci_on_complete_graph():
    # Z_5 with steps {±1, ±2} is the complete graph K_5: geometric hitting with
    # success probability 1/4, so every expected hitting time is 4.
    for l in range(1, 5):
        assert hitting_fibonacci(5, l) == 4


def test_fibonacci_matches_oracle_spot():
    oracle = hitting_oracle(CirculantWalk(6, undirected_one_two_steps(6)))
    assert hitting_fibonacci(6, 3) == oracle.value(3) == 6


def test_fibonacci_matches_oracle_up_to_40():
    for n in range(5, 41):
        oracle = hitting_oracle(CirculantWalk(n, undirected_one_two_steps(n)))
        for l in range(1, n):
            assert hitting_fibonacci(n, l) == oracle.value(l)


def test_fibonacci_symmetric_in_target():
    for n in range(5, 65):
        for l in range(1, n):
            assert hitting_fibonacci(n, l) == hitting_fibonacci(n, n - l)


def test_fibonacci_validation():
    with pytest.raises(ValueError):
        hitting_fibonacci(4, 1)
    with pytest.raises(ValueError):
        hitting_fibonacci(6, 6)


def test_undirected_steps():
    assert undirected_one_two_steps(5) == (1, 2, 3, 4)
    assert undirected_one_two_steps(6) == (1, 2, 4, 5)


def test_modulus_and_target_validation():
    with pytest.raises(ValueError):
        hitting_rowsum(2)
    with pytest.raises(ValueError):
        inverse_matrix(2)
    with pytest.raises(ValueError):
        hitting_corrected(5, 0)
    with pytest.raises(ValueError):
        hitting_printed(5, 5)
    with pytest.raises(ValueError):
        hitting_last(2)


def test_vector_helpers_tag_methods():
    assert hitting_corrected_vector(6).method is Method.CORRECTED
    assert hitting_printed_vector(6).method is Method.PRINTED
    fib = hitting_fibonacci_vector(6)
    assert fib.method is Method.FIBONACCI
    assert fib.steps == (1, 2, 4, 5)
    assert hitting_corrected_vector(6).values == [hitting_corrected(6, l) for l in range(1, 6)]


def test_hitting_result_validation():
    with pytest.raises(ValueError):
        HittingResult(5, FORWARD_ONE_TWO_STEPS, [Fraction(1)], Method.ORACLE)
    result = hitting_rowsum(5)
    with pytest.raises(ValueError):
        result.value(0)
    with pytest.raises(ValueError):
        result.value(5)
