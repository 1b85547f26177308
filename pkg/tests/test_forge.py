from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricsat.certificate import DiscriminatingFunction, EnssCertificate
from toricsat.errors import CertificateError, InputError, RoutingError, SaturatedCase
from toricsat.forge import (
    check_discriminating_function,
    coin_representable,
    example_enss,
    find_special_point,
    fractional_coordinate_enss,
    fundamental_enss,
    integer_coordinate_enss,
    multiply_enss,
    negate_enss,
    step_enss,
    verify_enss,
)
from toricsat.lattice import GeneratorSet, QVector
from toricsat.lattice.membership import semigroup_membership
from toricsat.weights import QuasiWeight, UsualWeight, from_usual, fundamental_weight, in_weight_system

F = Fraction

# (id, k) -> (multiset of f on generators, f(witness)), frozen from the constructions
F_VALUES = {
    (1, None): ({3: 6, 10: 1}, 8),
    (2, None): ({4: 3, 8: 2, 11: 1, 12: 1, 15: 1}, 18),
    (3, 4): ({2: 1, 8: 3, 10: 1, 15: 1}, 13),
    (3, 5): ({7: 3, 9: 1, 12: 3}, 15),
    (3, 6): ({14: 4, 16: 1, 20: 3}, 24),
    (4, 3): ({5: 6, 12: 1}, 9),
    (4, 4): ({11: 8, 20: 1}, 16),
    (4, 5): ({19: 10, 30: 1}, 25),
    (5, None): ({2: 3, 4: 3, 10: 1, 11: 1}, 9),
    (6, None): ({6: 6, 15: 1}, 15),
    (7, None): ({2: 3, 4: 1, 5: 1, 12: 1}, 3),
    (8, None): ({1: 3}, 1),
    (9, None): ({1: 4}, 1),
}


@pytest.mark.parametrize("key", sorted(F_VALUES, key=str))
def test_example_f_values_frozen(key):
    c = example_enss(*key)
    assert verify_enss(c).ok
    assert not c.notes  # the transcribed combinations were accepted verbatim
    values, fv = c.f_values()
    assert Counter(values) == Counter({F(a): b for a, b in F_VALUES[key][0].items()})
    assert fv == F_VALUES[key][1]


def test_example_one_shape():
    c = example_enss(1)
    assert c.n == 7 and len(c.generators) == 7
    assert c.witness == QVector((1, 1, 1, 0, 0, 0, 0))
    assert c.disc_fn.coeffs == (-2, 5, 5, -2, -2, -2, -2)


def test_example_ids_validated():
    for bad in ((0,), (10,), (3,), (1, 2)):
        with pytest.raises(InputError):
            example_enss(*bad)
    with pytest.raises(InputError):
        example_enss(3, 3)


def test_broken_witness_fails_clause_c():
    c = example_enss(1)
    bad = EnssCertificate.build(
        [list(map(int, g)) for g in c.generators], [1, 1, 0, 0, 0, 0, 0],
        highest_weight=c.highest_weight,
    )
    r = verify_enss(bad)
    assert not r.ok and r.clause == "c"


def test_wrong_combination_fails_clause_a():
    c = example_enss(2)
    from toricsat.lattice.vectors import CombinationCertificate

    broken = EnssCertificate(c.n, c.generators, c.witness,
                             CombinationCertificate("cone", ((0, F(1, 3)),)),
                             c.lattice_combo, c.disc_fn, c.provenance, c.highest_weight)
    r = verify_enss(broken)
    assert not r.ok and r.clause == "a"


def test_context_mismatch_fails_clause_d():
    r = verify_enss(example_enss(1), context=fundamental_weight(1, 7))
    assert not r.ok and r.clause == "d"


def test_coin_problem_examples():
    assert coin_representable(0, [3])
    assert not coin_representable(18, [4, 8, 11, 12, 15])
    assert not coin_representable(13, [2, 8, 10, 15])
    assert not coin_representable(8, [3, 10])
    assert not coin_representable(9, [2, 4, 10, 11])
    assert coin_representable(15, [6, 15])
    with pytest.raises(ValueError):
        coin_representable(5, [0, 2])


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 60), st.lists(st.integers(1, 12), min_size=1, max_size=4))
def test_coin_matches_brute_force(t, vals):
    reach = {0}
    for _ in range(t):
        reach |= {r + v for r in reach for v in vals if r + v <= t}
    assert coin_representable(t, vals) == (t in reach)


def test_discriminating_function_example_six_fiber():
    # the single fiber solution uses the generator with f = 15 != witness
    c = example_enss(6)
    assert check_discriminating_function(c.disc_fn, c) is True


def test_discriminating_function_inconclusive_on_zero():
    c = example_enss(1)
    f = DiscriminatingFunction([1, -1, 0, 0, 0, 0, 0])
    with pytest.raises(CertificateError):
        check_discriminating_function(f, c)  # negative on e2 + e3
    zero = DiscriminatingFunction([0] * 7)
    assert check_discriminating_function(zero, c) is None


def test_discriminating_function_consistent_with_search():
    for key in F_VALUES:
        c = example_enss(*key)
        if check_discriminating_function(c.disc_fn, c):
            assert semigroup_membership(c.target(), GeneratorSet(c.rows())) is None


# -- combinators and routing -------------------------------------------------------


def test_multiply_identity_and_examples():
    c = example_enss(1)
    assert multiply_enss(c, 1) is c
    assert multiply_enss(c, 2).highest_weight == fundamental_weight(4, 14)
    assert multiply_enss(example_enss(6), 2).highest_weight == fundamental_weight(6, 18)


def test_step_examples():
    assert step_enss(example_enss(1)).highest_weight == fundamental_weight(2, 9)
    assert step_enss(example_enss(2)).highest_weight == fundamental_weight(3, 11)
    assert step_enss(example_enss(6)).highest_weight == fundamental_weight(3, 12)


def test_negate_dual():
    c = negate_enss(example_enss(1))
    assert c.highest_weight == fundamental_weight(5, 7)
    assert verify_enss(c).ok


def test_routes():
    assert fundamental_enss(7, 3).provenance.startswith("Example 4 (n=2k+1, k=3)")
    assert fundamental_enss(8, 2).provenance == "Example 5 (n=8, k=2)"
    p = fundamental_enss(15, 6).provenance
    assert "Example 6" in p and "step" in p
    assert fundamental_enss(7, 2).provenance == "Example 1 (n=7, k=2)"


def test_positive_fundamentals_refused():
    for n, k in [(4, 2), (5, 2), (5, 3), (6, 2), (6, 3), (6, 4), (6, 1), (9, 8)]:
        with pytest.raises(SaturatedCase):
            fundamental_enss(n, k)
    with pytest.raises(InputError):
        fundamental_enss(5, 5)


@pytest.mark.parametrize("n", range(7, 13))
def test_fundamental_sweep_small(n):
    for k in range(2, n - 1):
        c = fundamental_enss(n, k)
        assert c.highest_weight == fundamental_weight(k, n)
        assert verify_enss(c).ok
        assert all(in_weight_system(g, c.highest_weight) for g in c.generator_weights())


def test_step_and_multiply_preserve_validity():
    rng = random.Random(11)
    pairs = [(n, k) for n in range(7, 12) for k in range(2, n - 1)]
    for _ in range(50):
        n, k = rng.choice(pairs)
        c = fundamental_enss(n, k)
        if 2 * k > n:
            c = negate_enss(c)
        op = rng.choice(["step", "multiply"])
        out = step_enss(c) if op == "step" else multiply_enss(c, rng.choice([2, 3]))
        assert verify_enss(out).ok


# -- non-fundamental constructions --------------------------------------------------


def test_find_special_point_examples():
    p = find_special_point(UsualWeight([2, 0, 0, -2]), [[2, 0, -1, -1]])
    assert p.coords == (2, 0, -1, -1)
    p = find_special_point(UsualWeight([1, 1, 0, -1, -1]), [[1, 1, 0, -1, -1]])
    assert p.coords == (1, 1, 0, -1, -1)
    p = find_special_point(UsualWeight([F(5, 3), F(-1, 3), F(-4, 3)]), [[F(5, 3), F(-4, 3), F(-1, 3)]])
    assert p.coords == (F(5, 3), F(-1, 3), F(-4, 3))
    with pytest.raises(RoutingError):
        find_special_point(UsualWeight([1, 0, 0, -1]), [[2, 0, -1, -1]])


def test_integer_case_examples():
    c = integer_coordinate_enss(from_usual([2, 0, -1, -1]))
    assert "Example 8" in c.provenance
    assert c.witness_weight() == from_usual([0, -1, 1, 0])
    c = integer_coordinate_enss(from_usual([1, 1, 0, -1, -1]))
    assert "Example 9" in c.provenance
    c = integer_coordinate_enss(from_usual([3, -3]))
    assert c.witness_weight() == from_usual([1, -1])
    assert "recomputed" not in c.provenance
    with pytest.raises(SaturatedCase):
        integer_coordinate_enss(from_usual([1, 0, -1]))


def test_fractional_case_examples():
    c = fractional_coordinate_enss(QuasiWeight([5, 0]))
    assert c.witness_weight() == QuasiWeight([1, 0])
    assert "recomputed" in c.provenance
    # v = 2 v1 - v2 in usual coordinates, v1 = (3/2, -3/2), v2 = (5/2, -5/2)
    assert c.lattice_combo.dense(2) == [2, -1]
    c = fractional_coordinate_enss(QuasiWeight([2, 0, 0, 0]))
    assert c.witness_weight() == QuasiWeight([1, 1, 0, 0])
    vals, fv = c.f_values()
    assert set(vals) == {2} and fv == 2
    c = fractional_coordinate_enss(QuasiWeight([3, 1, 0]))
    assert c.witness_weight() == QuasiWeight([2, 1, 0])
    with pytest.raises(SaturatedCase):
        fractional_coordinate_enss(QuasiWeight([2, 0, 0]))


def test_good_triple_certificate_f_values():
    c = fractional_coordinate_enss(QuasiWeight([3, 0, 0, 0]))
    vals, fv = c.f_values()
    assert set(vals) == {1} and fv == 1
