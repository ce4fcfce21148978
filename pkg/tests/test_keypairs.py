from itertools import combinations, permutations

import pytest

from conftest import SEC3
from skyline.bruhat import bruhat_leq, omega, simple_swap
from skyline.core import Biword, NearStaircase
from skyline.keypairs import (
    LayerSpec, a_condition, b_condition, bruhat_test, classify_biword, extend_m, key_pair_of,
    layer_specs, nw_condition, nw_se_condition_b, proper_subsequence_condition, se_condition,
    split_condition,
)
from skyline.sweeps import mixed_shapes, theorem42_sweep, theorem44_sweep
from skyline.tableaux import partitions_of


def orbit(lam):
    return sorted(set(permutations(lam)))


def orbits(n, max_size):
    for size in range(max_size + 1):
        for lam in partitions_of(size, n):
            yield orbit(lam + (0,) * (n - len(lam)))


def test_key_pair_of():
    assert key_pair_of(SEC3, 7) == ((3, 0, 4, 1, 0, 0, 1), (1, 0, 1, 0, 4, 0, 3))
    assert key_pair_of(Biword(), 3) == ((0, 0, 0), (0, 0, 0))
    assert key_pair_of(Biword((1,), (1,)), 3) == ((1, 0, 0), (1, 0, 0))


def test_empty_layer_is_omega_inequality():
    shape = NearStaircase(4)
    for orb in orbits(4, 4):
        for nu in orb:
            for beta in orb:
                assert nw_se_condition_b(nu, beta, shape) == bruhat_leq(beta, omega(nu))


def test_one_nw_cell_oracle():
    shape = NearStaircase(4, nw=(2,))
    hits = 0
    for nu in orbit((2, 1, 1, 0)):
        for beta in orbit((2, 1, 1, 0)):
            expected = not bruhat_leq(beta, omega(nu)) and bruhat_leq(beta, omega(simple_swap(2, nu)))
            assert nw_se_condition_b(nu, beta, shape) == expected
            hits += expected
    assert hits > 0


def test_one_se_cell_matches_nw_form():
    for r in (1, 2, 3):
        shape = NearStaircase(4, se=(4 - r,))
        for orb in orbits(4, 5):
            for nu in orb:
                for beta in orb:
                    got = nw_se_condition_b(nu, beta, shape)
                    assert got == se_condition(nu, beta, (r,), 4) == nw_condition(nu, beta, (r,))


def test_three_forms_equivalent():
    # NW form, SE form and every split point agree on all small orbits
    for n in (2, 3, 4):
        for orb in orbits(n, 6 if n < 4 else 5):
            for k in range(1, n):
                for rows in combinations(range(1, n), k):
                    for nu in orb:
                        for beta in orb:
                            a = nw_condition(nu, beta, rows)
                            assert a == se_condition(nu, beta, rows, n)
                            for p in range(k + 1):
                                assert a == split_condition(nu, beta, rows, p, n)


def test_membership_implies_proper_subsequences_fail():
    for n in (3, 4):
        for orb in orbits(n, 5):
            for k in range(1, n):
                for rows in combinations(range(1, n), k):
                    for nu in orb:
                        for beta in orb:
                            if nw_condition(nu, beta, rows):
                                assert proper_subsequence_condition(nu, beta, rows)


def test_bruhat_test_other_orbit():
    assert not bruhat_test((1, 0), (1, 1), (), ())


def test_classify():
    shape = NearStaircase(4, nw=(2,))
    assert classify_biword(Biword((1,), (1,)), shape).kind == "staircase"
    cls = classify_biword(Biword((3,), (3,)), shape)
    assert (cls.kind, cls.nw) == ("layer", (2,))
    assert classify_biword(Biword((4,), (4,)), shape).kind == "outside"
    se = NearStaircase(5, nw=(3,), se=(4,))
    cls = classify_biword(Biword((3, 5), (4, 2)), se)
    assert (cls.nw, cls.se) == ((3,), (4,))


def test_layer_spec_validation():
    shape = NearStaircase(5, nw=(3,), se=(4,))
    assert len(list(layer_specs(shape))) == 4
    with pytest.raises(ValueError):
        LayerSpec(shape, (2,), ())
    with pytest.raises(ValueError):
        LayerSpec(shape, (), (1,))
    spec = LayerSpec(shape, (1,), ())
    assert spec.rows == (3,) and spec.labels == ()
    assert extend_m(spec).M == (2,)


def test_a_set_reversal_and_increasing():
    shape = NearStaircase(3)
    empty = LayerSpec(shape)
    assert a_condition((2, 1, 0), (0, 1, 2), empty)
    assert a_condition((0, 1, 2), (0, 1, 2), empty) == bruhat_leq((0, 1, 2), (2, 1, 0))


def test_a_set_matches_sub_shape():
    shape = NearStaircase(5, nw=(3,), se=(4,))
    for spec in layer_specs(shape):
        for orb in orbits(5, 3):
            for nu in orb:
                for beta in orb:
                    assert a_condition(nu, beta, spec) == nw_se_condition_b(nu, beta, spec.sub_shape())


def test_b_set():
    shape = NearStaircase(4, se=(3,))
    spec = LayerSpec(shape)
    # strict column inequality fails at e = 3
    assert not b_condition((1, 0, 0, 0), (0, 0, 1, 0), spec)
    hits = 0
    for orb in orbits(4, 4):
        for nu in orb:
            for beta in orb:
                if a_condition(nu, beta, extend_m(spec)):
                    assert b_condition(nu, beta, spec)
                    hits += 1
                expected = beta[2] < beta[3] and bruhat_leq(simple_swap(3, beta), omega(nu))
                assert b_condition(nu, beta, spec) == expected
    assert hits > 0
    with pytest.raises(ValueError):
        b_condition((0,) * 4, (0,) * 4, extend_m(spec))


def test_theorem42_sweep():
    res = theorem42_sweep(4, 3)
    assert res.ok, res.examples


def test_theorem44_sweep():
    assert [s.to_json() for s in mixed_shapes(5)] == [
        {"n": 5, "nw": [3], "se": [4]}, {"n": 5, "nw": [4], "se": [3]}, {"n": 5, "nw": [4], "se": [4]},
    ]
    res = theorem44_sweep(max_mult=3)
    assert res.ok, res.examples
