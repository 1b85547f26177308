from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricsat.errors import InputError
from toricsat.weights import (
    QuasiWeight,
    UsualWeight,
    adjoint_weight,
    dominance_leq,
    dual_weight,
    from_lattice_embedding,
    from_usual,
    fundamental_weight,
    in_weight_system,
    lattice_embedding,
    parse_highest,
    shift,
    to_usual,
    weight_system,
    weyl_orbit,
)

F = Fraction


def test_quasi_weight_canonical():
    assert QuasiWeight([3, 2, 2]).coords == (1, 0, 0)
    assert QuasiWeight([1, 0, 0]) == QuasiWeight([2, 1, 1])
    with pytest.raises(InputError):
        QuasiWeight([F(1, 2), 0])


def test_to_usual_examples():
    assert to_usual(QuasiWeight([1, 0, 0])).coords == (F(2, 3), F(-1, 3), F(-1, 3))
    assert to_usual(QuasiWeight([0, 0, 0])).coords == (0, 0, 0)
    assert to_usual(QuasiWeight([2, 0])).coords == (1, -1)


def test_usual_weight_checks():
    with pytest.raises(InputError):
        UsualWeight([1, 0])
    with pytest.raises(InputError):
        UsualWeight([F(1, 4), F(-1, 4)])  # denominator 4 does not divide n = 2


def test_fundamental_weights():
    assert fundamental_weight(1, 4).coords == (1, 0, 0, 0)
    assert fundamental_weight(3, 6).coords == (1, 1, 1, 0, 0, 0)
    assert fundamental_weight(4, 5).coords == (1, 1, 1, 1, 0)
    assert adjoint_weight(3).coords == (2, 1, 0)


def test_dominance_examples():
    z = UsualWeight([0, 0, 0])
    mu = UsualWeight([1, 0, -1])
    assert dominance_leq(mu, mu)
    assert dominance_leq(z, mu)
    assert not dominance_leq(mu, z)


def test_weight_system_examples():
    M = weight_system(fundamental_weight(2, 4))
    assert len(M) == 6 and all(sorted(w.coords) == [0, 0, 1, 1] for w in M)
    M = weight_system(adjoint_weight(3))
    assert len(M) == 7 and QuasiWeight([0, 0, 0]) in M
    M = weight_system(QuasiWeight([2, 0, 0]))
    assert len(M) == 6
    assert QuasiWeight([1, 1, 0]) in M  # e1 + e2 = -e3


def test_weight_system_counts():
    assert len(weight_system(fundamental_weight(3, 6))) == 20
    assert len(weight_system(adjoint_weight(5))) == 21
    assert len(weight_system(QuasiWeight([4, 0]))) == 5
    assert len(weight_system(QuasiWeight([3, 0]))) == 4


def test_dual_weight_examples():
    assert dual_weight(fundamental_weight(1, 3)) == fundamental_weight(2, 3)
    assert dual_weight(adjoint_weight(5)) == adjoint_weight(5)
    assert dual_weight(QuasiWeight([2, 0, 0])) == QuasiWeight([2, 2, 0])


def test_shift_examples():
    assert shift(UsualWeight([2, 0, 0, -2]), 0, 3).coords == (1, 0, 0, -1)
    assert shift(UsualWeight([3, -1, -2]), 0, 2).coords == (2, -1, -1)
    # (1, 0, -1) has gap 2 between its ends, so only the adjacent pairs fail
    assert shift(UsualWeight([1, 0, -1]), 0, 2).coords == (0, 0, 0)
    with pytest.raises(InputError):
        shift(UsualWeight([1, 0, -1]), 0, 1)


def test_weyl_orbit_examples():
    assert weyl_orbit(QuasiWeight([1, 1, 0])) == sorted(
        [QuasiWeight([1, 1, 0]), QuasiWeight([1, 0, 1]), QuasiWeight([0, 1, 1])])
    assert len(weyl_orbit(fundamental_weight(2, 4))) == 6
    assert weyl_orbit(QuasiWeight([0, 0, 0])) == [QuasiWeight([0, 0, 0])]


def test_parse_highest():
    assert parse_highest("pi3", 6) == fundamental_weight(3, 6)
    assert parse_highest("2 0 0", 3) == QuasiWeight([2, 0, 0])
    for bad in ("0 1 2", "pix", "1 0"):
        with pytest.raises(InputError):
            parse_highest(bad, 3)


dominant = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.integers(0, 3), min_size=n - 1, max_size=n - 1).map(
        lambda head: QuasiWeight(sorted(head, reverse=True) + [0])))


@settings(max_examples=60, deadline=None)
@given(dominant)
def test_weight_system_properties(lam):
    M = weight_system(lam)
    assert lam in M
    for w in M:
        assert in_weight_system(w, lam)
        assert to_usual(w).square_norm() <= to_usual(lam).square_norm()
    assert len({w for w in M}) == len(M)
    # duality negates the whole weight system
    D = weight_system(dual_weight(lam))
    assert sorted(-w for w in M) == list(D)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=6))
def test_usual_and_embedding_round_trips(coords):
    w = QuasiWeight(coords)
    assert from_usual(to_usual(w)) == w
    assert from_lattice_embedding(lattice_embedding(w)) == w
    assert sum(to_usual(w).coords) == 0


@settings(max_examples=60, deadline=None)
@given(dominant)
def test_shift_stays_in_weight_system(lam):
    u = to_usual(lam)
    n = lam.n
    for i in range(n):
        for j in range(i + 1, n):
            if u.coords[i] - u.coords[j] >= 2:
                s = shift(u, i, j)
                assert s.square_norm() < u.square_norm()
                assert in_weight_system(from_usual(s), lam)
