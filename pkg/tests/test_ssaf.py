import pytest

from skyline.core import sort_to_partition
from skyline.ssaf import (
    NotInImage, Ssaf, key_ssaf, psi, psi_inverse, rho, rho_inverse, right_key, ssafs,
    ssafs_via_rho,
)
from skyline.tableaux import Rssyt, Ssyt, is_key_tableau, key_of, rssyts, ssyts

P2 = Ssyt([[1, 2, 3, 4], [2, 5], [3]])
P2_TILDE = Rssyt([[5, 3, 3, 2], [4, 2], [1]])
F2 = Ssaf.from_columns(5, {1: [1], 4: [4, 3, 3, 2], 5: [5, 2]})


def test_rho_golden():
    F = rho(P2_TILDE, 5)
    assert F == F2
    assert F.shape == (1, 0, 0, 4, 2)
    assert F.is_valid()


def test_rho_trivial():
    assert rho(Rssyt(), 5) == Ssaf.empty(5)
    assert rho(Rssyt([[3]]), 5) == Ssaf.from_columns(5, {3: [3]})


def test_rho_inverse():
    assert rho_inverse(F2) == P2_TILDE
    assert rho_inverse(Ssaf.empty(3)) == Rssyt()


def test_rho_inverse_rejects():
    # repeated entries in one row
    with pytest.raises(NotInImage):
        rho_inverse(Ssaf.from_columns(2, {1: [1], 2: [1]}))


def test_psi_golden():
    assert psi(P2, 5) == F2
    assert psi(Ssyt(), 4) == Ssaf.empty(4)
    for k in range(1, 5):
        assert psi(Ssyt([[k]]), 4) == Ssaf.from_columns(4, {k: [k]})
    assert psi_inverse(F2) == P2


def test_right_key():
    assert right_key(P2, 5) == key_of((1, 0, 0, 4, 2))
    T = Ssyt([[1, 1, 2]])
    assert right_key(T, 3) == key_of(psi(T, 3).shape)


def test_keys_are_own_right_keys():
    for n in range(1, 5):
        for size in range(6):
            for t in ssyts(n, size):
                if is_key_tableau(t):
                    assert right_key(t, n) == t


def test_rho_properties_exhaustive():
    for n in range(1, 5):
        for size in range(6):
            for R in rssyts(n, size):
                F = rho(R, n)
                assert F.is_valid(), F.violations()
                assert F.content == R.content(n)
                assert sort_to_partition(F.shape)[:len(R.shape)] == R.shape
                assert rho_inverse(F) == R


def test_psi_injective():
    for n in range(1, 5):
        for size in range(6):
            images = [psi(t, n) for t in ssyts(n, size)]
            assert len(set(images)) == len(images)


def test_direct_enumeration_matches_rho_image():
    for n in range(1, 5):
        for size in range(5):
            assert set(ssafs(n, size)) == set(ssafs_via_rho(n, size))


def test_key_ssaf_valid():
    F = key_ssaf((1, 0, 2))
    assert F.is_valid() and F.shape == (1, 0, 2) and F.content == (1, 0, 2)


def test_violations_reported():
    bad = Ssaf.from_columns(2, {1: [2]})
    assert not bad.is_valid()


def test_json_round_trip():
    assert Ssaf.from_json(F2.to_json()) == F2
