"""Exact rational simplex (phase I only) with Bland's anti-cycling rule.

Only feasibility questions are asked of the LP layer: is there an
``x >= 0`` with ``A x = b``? A basic feasible solution is returned, so its
support is a linearly independent set of columns.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_point(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Return a basic ``x >= 0`` with ``A x == b`` exactly, or None if infeasible.

    ``A`` is given row-wise (``len(A) == len(b)``); entries may be ints or
    Fractions. No floating point is involved.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n
    one = Fraction(1)
    T: list[list[Fraction]] = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = one
        T.append(row + art + [rhs])
    width = n + m + 1
    basis = [n + i for i in range(m)]
    # Reduced costs for "minimise the sum of artificials".
    z = [Fraction(0)] * width
    for j in range(n):
        z[j] = -sum((T[i][j] for i in range(m)), Fraction(0))
    z[-1] = -sum((T[i][-1] for i in range(m)), Fraction(0))

    while True:
        enter = next((j for j in range(n) if z[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # unbounded direction; cannot happen in phase I
            break
        _pivot(T, z, leave, enter)
        basis[leave] = enter

    if z[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i][-1]
    return x


def _pivot(T: list[list[Fraction]], z: list[Fraction], r: int, c: int) -> None:
    row = T[r]
    inv = 1 / row[c]
    if inv != 1:
        row = [x * inv for x in row]
        T[r] = row
    nz = [(j, x) for j, x in enumerate(row) if x]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                for j, x in nz:
                    other[j] -= f * x
    f = z[c]
    if f:
        for j, x in nz:
            z[j] -= f * x
