import math

import pytest

from planecyclic.congruence import (
    CongruenceSystem,
    GammaFilter,
    Residue,
    divisor_candidates,
    divisors,
    solve_system,
)


def trial_division_divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def test_divisors_basic():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(13) == trial_division_divisors(13)


@pytest.mark.parametrize("n", [2, 7, 36, 57, 64, 72, 97, 720])
def test_divisors_against_trial_division(n):
    assert divisors(n) == trial_division_divisors(n)


def test_divisors_rejects_nonpositive():
    with pytest.raises(ValueError):
        divisors(0)


def test_divisor_candidates_values():
    assert divisor_candidates(4) == {3, 4, 7, 9, 8, 12}
    assert divisor_candidates(5) == {4, 5, 13, 16, 15, 20}
    assert divisor_candidates(9) == {8, 9, 57, 64, 63, 72}


def test_divisor_candidates_rejects_small_degree():
    with pytest.raises(ValueError):
        divisor_candidates(3)


def test_residue_normalizes():
    assert Residue(17, 5).value == 2
    assert Residue(-1, 5).value == 4
    with pytest.raises(ValueError):
        Residue(1, 0)


def klein_system(d, m):
    # anchors of the three-vertex shape share one character
    return CongruenceSystem(modulus=m, constraints=((d - 2, 1, 0), (1, -(d - 1), 0)))


def test_solve_system_contains_reference_types():
    sols = solve_system(klein_system(5, 13), GammaFilter.COPRIME_PAIRS)
    assert (1, 10) in sols
    sols4 = solve_system(klein_system(4, 7), GammaFilter.COPRIME_PAIRS)
    assert (1, 5) in sols4


def test_solve_system_modulus_two_is_empty():
    sys2 = CongruenceSystem(modulus=2, constraints=((1, 1, 0),))
    assert solve_system(sys2, GammaFilter.COPRIME_PAIRS) == []


def test_solve_system_is_lexicographic_and_self_consistent():
    system = klein_system(6, 21)
    sols = solve_system(system, GammaFilter.COPRIME_PAIRS)
    assert sols == sorted(sols)
    for a, b in sols:
        assert system.satisfied_by(a, b)
        assert 1 <= a != b <= 20
        assert math.gcd(a, b) == 1


def test_solve_system_zero_a_domain():
    system = CongruenceSystem(modulus=6, constraints=())
    sols = solve_system(system, GammaFilter.ZERO_A)
    assert sols == [(0, 1), (0, 5)]


def test_system_reduces_coefficients():
    system = CongruenceSystem(modulus=7, constraints=((9, -1, 14),))
    assert system.constraints == ((2, 6, 0),)
