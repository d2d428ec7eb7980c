import math

import pytest

from cllc.errors import UsageError
from cllc.perm import Permutation
from cllc.polynomial import IntPolynomial
from cllc.stirling import (
    STIRLING,
    az_hultman_recurrence_check,
    f_cyclic_closed,
    f_cyclic_recurrence,
    g_cyclic_closed,
    h_genus,
    hultman,
    hultman_brute,
    rec_f_as_printed_residual,
    stirling_first,
    stirling_gf,
)

from oracles import hultman_by_lemma, io_coeffs, rho, rising_factorial_coeffs, stirling_brute


def test_stirling_examples():
    assert stirling_first(4, 2) == 11
    assert all(stirling_first(n, n) == 1 for n in range(12))
    assert stirling_first(5, 1) == 24
    with pytest.raises(UsageError):
        stirling_first(3, 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_stirling_counts_permutations(n):
    assert [stirling_first(n, k) for k in range(n + 1)] == [stirling_brute(n, k) for k in range(n + 1)]


@pytest.mark.parametrize("n", range(1, 21))
def test_stirling_row_sums_and_gf(n):
    row = STIRLING.row(n)
    assert sum(row) == math.factorial(n)
    assert row[0] == 0
    assert stirling_gf(n) == IntPolynomial(rising_factorial_coeffs(n))


def test_stirling_gf_examples():
    assert stirling_gf(1) == IntPolynomial([0, 1])
    assert stirling_gf(2) == IntPolynomial([0, 1, 1])
    assert stirling_gf(4) == IntPolynomial([0, 6, 11, 6, 1])


def test_hultman_examples():
    assert hultman(1, 2) == 1
    assert hultman(3, 2) == 5
    assert hultman(2, 2) == 0
    with pytest.raises(UsageError):
        hultman(3, 5)


def test_hultman_brute_examples():
    assert hultman_brute(1, 2) == 1
    assert hultman_brute(2, 1) == 1 and hultman_brute(2, 3) == 1
    assert hultman_brute(3, 4) == 1
    with pytest.raises(UsageError):
        hultman_brute(12, 1)


@pytest.mark.parametrize("n", range(0, 6))
def test_brute_matches_lemma_oracle(n):
    for k in range(1, n + 2):
        assert hultman_brute(n, k) == hultman_by_lemma(n, k)


@pytest.mark.parametrize("n", range(0, 9))
def test_hultman_closed_equals_brute(n):
    assert [hultman(n, k) for k in range(1, n + 2)] == [hultman_brute(n, k) for k in range(1, n + 2)]
    assert sum(hultman_brute(n, k) for k in range(n + 2)) == math.factorial(n)


def test_printed_hultman_formula_is_wrong():
    # with Stirling(n, k) in place of Stirling(n+2, k), H(1, 2) would be 0 / 3
    assert stirling_brute(1, 2) == 0
    assert hultman_by_lemma(1, 2) == 1 == stirling_brute(3, 2) // math.comb(3, 2)


def test_f_closed_examples():
    assert f_cyclic_closed(3) == IntPolynomial([1, 1])
    assert f_cyclic_closed(4) == IntPolynomial([5, 1])
    assert f_cyclic_closed(5) == IntPolynomial([8, 15, 1])


def test_g_closed_examples():
    assert g_cyclic_closed(3) == IntPolynomial([0, 1, 0, 1])
    assert g_cyclic_closed(4) == IntPolynomial([0, 0, 5, 0, 1])
    assert g_cyclic_closed(2) == IntPolynomial([0, 0, 1])


@pytest.mark.parametrize("n", range(1, 8))
def test_closed_forms_match_brute_force(n):
    assert list(f_cyclic_closed(n).coeffs) == io_coeffs(rho(n))
    assert list(g_cyclic_closed(n).coeffs) == io_coeffs(rho(n), floor=False)


def test_recurrence_examples():
    seq = f_cyclic_recurrence(5)
    assert seq[2] == IntPolynomial([1, 1])
    assert seq[3] == IntPolynomial([5, 1])
    assert seq[4] == IntPolynomial([8, 15, 1])
    with pytest.raises(UsageError):
        f_cyclic_recurrence(1)


def test_recurrence_agrees_with_closed_form():
    seq = f_cyclic_recurrence(50)
    assert seq == [f_cyclic_closed(n) for n in range(1, 51)]


def test_recurrence_as_printed_fails_at_three():
    known = {0: IntPolynomial([1]), 1: IntPolynomial([1]), 2: IntPolynomial([1]),
             3: IntPolynomial(io_coeffs(rho(3)))}
    lhs, rhs = rec_f_as_printed_residual(3, known)
    assert lhs == IntPolynomial([5, 5])
    assert rhs == IntPolynomial([25, -2])


def test_az_recurrence_small_cases():
    # h_g(n) = H(n, n+1-2g); values from the lemma oracle
    assert [h_genus(0, n) for n in range(3)] == [hultman_by_lemma(n, n + 1) for n in range(3)] == [1, 1, 1]
    assert h_genus(1, 2) == hultman_by_lemma(2, 1) == 1
    assert h_genus(1, 1) == h_genus(1, 0) == 0
    assert 4 * h_genus(0, 2) == 5 * h_genus(0, 1) - h_genus(0, 0)
    assert 4 * h_genus(1, 2) == 5 * h_genus(1, 1) - h_genus(1, 0) + 4 * h_genus(0, 0)
    assert az_hultman_recurrence_check(2).ok


def test_az_recurrence_to_twenty():
    rep = az_hultman_recurrence_check(20)
    assert rep.ok and rep.first_violation is None and rep.checked > 100


def test_rho_matches_module():
    assert Permutation.rho(5).images == rho(5)
