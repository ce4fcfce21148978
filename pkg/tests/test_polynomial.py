from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from conftest import weak_compositions
from skyline.core import compositions
from skyline.polynomial import (
    DivisionError, Polynomial, apply_pis, atom_polynomial, atom_via_right_keys,
    demazure_pi, demazure_pi_hat, divide_by_difference, is_symmetric, key_polynomial,
    key_via_right_keys, pi_on_monomial,
)
from skyline.bruhat import orbit_poset
from skyline.sweeps import demazure_sweep
from skyline.tableaux import partitions_of


def x(i, n=2):
    return Polynomial.variable(i, n)


def one(n=2):
    return Polynomial.one(n)


def test_arithmetic():
    p = x(1) + x(2)
    assert p * p == x(1) * x(1) + 2 * x(1) * x(2) + x(2) * x(2)
    assert p - p == Polynomial.zero(2)
    assert not (p - p)
    assert (p * 3).terms == {(1, 0): 3, (0, 1): 3}
    assert p.degree() == 1 and Polynomial.zero(2).degree() == -1
    with pytest.raises(ValueError):
        x(1, 2) + x(1, 3)
    with pytest.raises(ValueError):
        Polynomial(2, {(1,): 1})


def test_rendering_order():
    p = x(1) * x(2) + 3 * x(1) - one()
    assert p.to_str() == "x1*x2 + 3*x1 - 1"
    assert (-x(2)).to_str() == "-x2"
    assert Polynomial.zero(2).to_str() == "0"
    assert p.to_json() == [[[1, 1], 1], [[1, 0], 3], [[0, 0], -1]]


def test_embed_and_swap():
    p = x(1) * x(1) + x(2)
    assert p.embed(4, 2).terms == {(0, 0, 2, 0): 1, (0, 0, 0, 1): 1}
    assert p.swap(1, 2) == x(2) * x(2) + x(1)


def test_division():
    f = x(1) * x(1) - x(2) * x(2)
    assert divide_by_difference(f, 1, 2) == x(1) + x(2)
    with pytest.raises(DivisionError):
        divide_by_difference(x(1), 1, 2)


def test_pi_examples():
    assert demazure_pi(1, one()) == one()
    assert demazure_pi(1, x(1)) == x(1) + x(2)
    assert demazure_pi(1, x(2)) == Polynomial.zero(2)
    assert demazure_pi_hat(1, one()) == Polynomial.zero(2)
    assert demazure_pi_hat(1, x(1)) == x(2)
    with pytest.raises(IndexError):
        demazure_pi(2, x(1))


def test_pi_matches_closed_form():
    for n in (2, 3, 4):
        for s in range(6):
            for exp in compositions(s, n):
                for i in range(1, n):
                    assert demazure_pi(i, Polynomial.monomial(exp)) == pi_on_monomial(i, exp)


def test_pi_hat_squared():
    for n in (2, 3):
        for s in range(5):
            for exp in compositions(s, n):
                f = Polynomial.monomial(exp)
                for i in range(1, n):
                    h = demazure_pi_hat(i, f)
                    assert demazure_pi_hat(i, h) == -h


@given(st.integers(1, 3).flatmap(lambda i: st.tuples(st.just(i), weak_compositions(n=4))))
def test_pi_image_symmetric_and_linear(case):
    i, exp = case
    f = Polynomial.monomial(exp)
    g = demazure_pi(i, f)
    assert g.swap(i, i + 1) == g
    h = Polynomial.monomial(tuple(reversed(exp)))
    assert demazure_pi(i, f + h) == g + demazure_pi(i, h)


def test_y_block_operator():
    # pi_1 in the second block of x1, x2, y1, y2
    y1 = Polynomial.variable(3, 4)
    y2 = Polynomial.variable(4, 4)
    assert demazure_pi(1, y1, offset=2, n=2) == y1 + y2
    assert apply_pis((1,), y1 * Polynomial.variable(1, 4), offset=2, n=2) == \
        (y1 + y2) * Polynomial.variable(1, 4)


def test_apply_pis_order():
    f = Polynomial.monomial((1, 0, 0))
    # rightmost acts first: pi_1 pi_2 x1 = pi_1 x1 versus pi_2 pi_1 x1
    assert apply_pis((1, 2), f) == demazure_pi(1, demazure_pi(2, f))
    assert apply_pis((2, 1), f) == Polynomial(3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})


def test_key_and_atom_examples():
    assert key_polynomial((0, 0)) == one()
    assert key_polynomial((0, 1)) == x(1) + x(2)
    assert key_polynomial((1, 0)) == x(1)
    assert atom_polynomial((1, 0)) == x(1)
    assert atom_polynomial((0, 1)) == x(2)
    assert atom_polynomial((0, 1)) == key_polynomial((0, 1)) - key_polynomial((1, 0))


def test_key_decomposes_into_atoms():
    for n in (2, 3, 4):
        for s in range(6):
            for nu in compositions(s, n):
                poset = orbit_poset(tuple(sorted(nu, reverse=True)))
                total = Polynomial.zero(n)
                for a in poset.elements:
                    if poset.leq(a, nu):
                        total = total + atom_polynomial(a)
                assert total == key_polynomial(nu)


def test_right_key_sums():
    for n in (2, 3):
        for s in range(5):
            for nu in compositions(s, n):
                assert atom_via_right_keys(nu) == atom_polynomial(nu)
                assert key_via_right_keys(nu) == key_polynomial(nu)


def test_orbit_sum_of_atoms_symmetric():
    for n in (2, 3):
        for s in range(5):
            for lam in partitions_of(s, n):
                lam = lam + (0,) * (n - len(lam))
                total = Polynomial.zero(n)
                for a in set(permutations(lam)):
                    total = total + atom_polynomial(a)
                assert is_symmetric(total, n)
                assert total == key_polynomial(tuple(reversed(lam)))


def test_demazure_sweep():
    res = demazure_sweep(4, 5)
    assert res.ok, res.examples
