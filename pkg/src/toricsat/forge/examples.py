"""The explicit non-saturated sets used as base cases.

Examples 1-7 live in weight systems of fundamental weights; 8 and 9 in
weight systems with integral usual coordinates. Vectors are written with
1-based quasi-basis indices (``_e(n, 1, 2)`` is e_1 + e_2) or, for 8 and
9, in usual coordinates, to keep them comparable with their source.
"""

from __future__ import annotations

from fractions import Fraction

from ..certificate import DiscriminatingFunction, EnssCertificate
from ..errors import InputError
from ..weights import QuasiWeight, fundamental_weight, from_usual


def _e(n: int, *idx: int) -> list[int]:
    v = [0] * n
    for i in idx:
        v[i - 1] += 1
    return v


def _x(n: int, coeffs: dict[int, int]) -> DiscriminatingFunction:
    """Functional ``sum c_i x_i`` from a map of 1-based index to coefficient."""
    return DiscriminatingFunction(coeffs.get(i + 1, 0) for i in range(n))


def _q(usual: list[int]) -> list[int]:
    return list(from_usual(usual).coords)


def example_1() -> EnssCertificate:
    n = 7
    edges = [(1, 2), (2, 3), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)]
    gens = [_e(n, *ed) for ed in edges]
    half = Fraction(1, 2)
    cone = [half, half, half, 0, 0, 0, 0]
    lattice = [0, 2, 0, -1, -1, -1, -1]
    f = _x(n, {2: 5, 3: 5, 1: -2, 4: -2, 5: -2, 6: -2, 7: -2})
    return EnssCertificate.build(
        gens, _e(n, 1, 2, 3), cone, lattice, disc_fn=f,
        provenance="Example 1 (n=7, k=2)", highest_weight=fundamental_weight(2, n),
    )


def example_2() -> EnssCertificate:
    n = 8
    rows = [
        "00111000",
        "10011000",
        "11001000",
        "11100000",
        "01110000",
        "00110100",
        "01010010",
        "01100001",
    ]
    gens = [[int(ch) for ch in r] for r in rows]
    third = Fraction(1, 3)
    cone = [third] * 5 + [0, 0, 0]
    lattice = [0, 0, 0, 0, 2, -1, -1, -1]
    f = _x(n, {1: 1, 2: 5, 3: 5, 4: 5, 5: 2, 6: -6, 7: -6, 8: -6})
    return EnssCertificate.build(
        gens, [1, 1, 1, 1, 1, 0, 0, 0], cone, lattice, disc_fn=f,
        provenance="Example 2 (n=8, k=3)", highest_weight=fundamental_weight(3, n),
    )


def example_3(k: int) -> EnssCertificate:
    if k < 4:
        raise InputError(f"Example 3 needs k >= 4, got {k}")
    n = 2 * k
    second = list(range(k + 1, 2 * k + 1))
    gens = []
    for i in range(1, k + 1):
        gens.append(_e(n, i, *[j for j in second if j != k + i]))
    gens.append(_e(n, 2, *second[:-1]))
    gens.append(_e(n, 1, 2, *second[1:-1]))
    witness = _e(n, *second)
    cone = [Fraction(1, k - 2)] * k + [0, 0]
    lattice = [1] + [0] * (k - 1) + [1, -1]
    if k == 4:
        f = _x(n, {3: -6, 4: -7, 5: 5, 6: 5, 7: 5, 8: -2})
    else:
        f = _x(n, {**{j: k - 2 for j in second}, **{j: -k for j in range(3, k + 1)}})
    return EnssCertificate.build(
        gens, witness, cone, lattice, disc_fn=f,
        provenance=f"Example 3 (n=2k, k={k})", highest_weight=fundamental_weight(k, n),
    )


def example_4(k: int) -> EnssCertificate:
    if k < 3:
        raise InputError(f"Example 4 needs k >= 3, got {k}")
    n = 2 * k + 1
    head = list(range(1, k + 2))
    gens = [_e(n, *[j for j in head if j != i]) for i in head]
    for i in range(1, k + 1):
        gens.append(_e(n, *[j for j in range(1, k + 1) if j != i], k + 1 + i))
    witness = _e(n, *head)
    cone = [Fraction(1, k)] * (k + 1) + [0] * k
    lattice = [0] * k + [k - 1] + [-1] * k
    f = _x(n, {**{j: k + 1 for j in range(1, k + 1)}, **{j: -k for j in range(k + 1, n + 1)}})
    return EnssCertificate.build(
        gens, witness, cone, lattice, disc_fn=f,
        provenance=f"Example 4 (n=2k+1, k={k})", highest_weight=fundamental_weight(k, n),
    )


def example_5() -> EnssCertificate:
    n = 8
    edges = [(1, 2), (2, 3), (1, 3), (5, 6), (6, 7), (5, 7), (3, 4), (4, 5)]
    gens = [_e(n, *ed) for ed in edges]
    half = Fraction(1, 2)
    cone = [half] * 6 + [0, 0]
    lattice = [1, 0, 0, 1, 0, 1, 1, -1]
    f = _x(n, {1: 1, 2: 1, 3: 1, 5: 2, 6: 2, 7: 2, 4: 9, 8: -18})
    return EnssCertificate.build(
        gens, _e(n, 1, 2, 3, 5, 6, 7), cone, lattice, disc_fn=f,
        provenance="Example 5 (n=8, k=2)", highest_weight=fundamental_weight(2, n),
    )


def example_6() -> EnssCertificate:
    n = 9
    triples = [(1, 2, 4), (1, 2, 5), (2, 3, 6), (2, 3, 7), (1, 3, 8), (1, 3, 9), (2, 4, 6)]
    gens = [_e(n, *t) for t in triples]
    third = Fraction(1, 3)
    cone = [third] * 6 + [0]
    lattice = [1, 0, 1, 0, 0, 0, -1]
    f = _x(n, {1: 5, 2: 5, 3: 5, 4: 5, 5: -4, 6: -4, 7: -4, 8: -4, 9: -4})
    return EnssCertificate.build(
        gens, _e(n, 1, 2, 3), cone, lattice, disc_fn=f,
        provenance="Example 6 (n=9, k=3)", highest_weight=fundamental_weight(3, n),
    )


def example_7() -> EnssCertificate:
    n = 10
    quads = [(1, 2, 3, 5), (1, 2, 4, 6), (3, 4, 5, 6), (5, 6, 7, 8), (5, 7, 8, 9), (6, 7, 8, 10)]
    gens = [_e(n, *t) for t in quads]
    half = Fraction(1, 2)
    cone = [half, half, half, 0, 0, 0]
    lattice = [0, 0, 0, 1, -1, -1]
    f = _x(n, {1: 1, 3: 1, 4: 1, 7: 6, 8: 6, 9: -7, 10: -8})
    return EnssCertificate.build(
        gens, _e(n, 1, 2, 3, 4, 5, 6), cone, lattice, disc_fn=f,
        provenance="Example 7 (n=10, k=4)", highest_weight=fundamental_weight(4, n),
    )


def _pad(v: list[int], n: int) -> list[int]:
    return v + [0] * (n - len(v))


def example_8(n: int = 3, negate: bool = False) -> EnssCertificate:
    """Highest weight (2, 0, ..., 0, -1, -1); ``negate`` gives (1, 1, 0, ..., 0, -2)."""
    if n < 3:
        raise InputError(f"Example 8 needs n >= 3, got {n}")
    s = -1 if negate else 1
    usual = [[1, -1, 0], [-1, -1, 2], [2, -1, -1]]
    gens = [_q([s * c for c in _pad(u, n)]) for u in usual]
    witness = _q([s * c for c in _pad([0, -1, 1], n)])
    half = Fraction(1, 2)
    lam = [2] + [0] * (n - 3) + [-1, -1]
    if negate:
        lam = [1, 1] + [0] * (n - 3) + [-2]
    f = DiscriminatingFunction.usual_coordinate(1, n, -s)
    return EnssCertificate.build(
        gens, witness, [half, half, 0], [-1, 1, 1], disc_fn=f,
        provenance=f"Example 8 (n={n}{', negated' if negate else ''})",
        highest_weight=from_usual(lam),
    )


def example_9(n: int = 4) -> EnssCertificate:
    """Highest weight (1, 1, 0, ..., 0, -1, -1)."""
    if n < 4:
        raise InputError(f"Example 9 needs n >= 4, got {n}")
    usual = [[1, 1, -1, -1], [1, -1, 1, -1], [0, 1, 0, -1], [0, 0, 1, -1]]
    gens = [_q(_pad(u, n)) for u in usual]
    witness = _q(_pad([1, 0, 0, -1], n))
    half = Fraction(1, 2)
    lam = [1, 1] + [0] * (n - 4) + [-1, -1]
    f = DiscriminatingFunction.usual_coordinate(3, n, -1)
    return EnssCertificate.build(
        gens, witness, [half, half, 0, 0], [1, 0, -1, 1], disc_fn=f,
        provenance=f"Example 9 (n={n})", highest_weight=from_usual(lam),
    )


def example_enss(example_id: int, k: int | None = None, n: int | None = None) -> EnssCertificate:
    """Certificate of Example ``example_id`` (1-9).

    Examples 3 and 4 take ``k``; 8 and 9 take an optional ``n``.
    """
    if example_id in (3, 4):
        if k is None:
            raise InputError(f"Example {example_id} needs k")
        return example_3(k) if example_id == 3 else example_4(k)
    if k is not None:
        raise InputError(f"Example {example_id} takes no k")
    if example_id in (8, 9):
        if n is None:
            return example_8() if example_id == 8 else example_9()
        return example_8(n) if example_id == 8 else example_9(n)
    if n is not None:
        raise InputError(f"Example {example_id} has a fixed n")
    builders = {1: example_1, 2: example_2, 5: example_5, 6: example_6, 7: example_7}
    if example_id not in builders:
        raise InputError(f"no Example {example_id}; ids run from 1 to 9")
    return builders[example_id]()
