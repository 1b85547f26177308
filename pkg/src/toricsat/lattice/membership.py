"""Membership of a vector in the lattice, cone and semigroup spanned by a set.

All three queries scale the input to integers by the common denominator
first; none of the three sets changes shape under scaling.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from ..errors import CertificateError, InputError, ResourceLimitError
from .linalg import hnf, hnf_basis, left_nullspace, pivots, solve_echelon
from .simplex import feasible_point
from .vectors import (
    CombinationCertificate,
    GeneratorSet,
    QVector,
    common_denominator,
    integer_rows,
)

DEFAULT_NODE_LIMIT = 2_000_000


def _prepare(v, S: GeneratorSet) -> tuple[list[int], list[list[int]], list[int]]:
    """Scale ``v`` and the nonzero generators to integers.

    Returns the integer target, the integer generator rows and the indices
    (into ``S``) those rows came from.
    """
    v = v if isinstance(v, QVector) else QVector(v)
    if v.dim != S.dim:
        raise InputError(f"dimension mismatch: vector has {v.dim}, set has {S.dim}")
    idx = [i for i, g in enumerate(S) if not g.is_zero()]
    scale = common_denominator([v] + [S[i] for i in idx])
    (target,) = integer_rows([v], scale)
    rows = integer_rows([S[i] for i in idx], scale)
    return target, rows, idx


def lattice_membership(v, S: GeneratorSet) -> CombinationCertificate | None:
    """Integer combination of ``S`` equal to ``v``, or None if ``v`` is not in Z(S)."""
    target, rows, idx = _prepare(v, S)
    if not any(target):
        return CombinationCertificate("lattice", ())
    if not rows:
        return None
    coeffs = _lattice_coefficients(rows, target)
    if coeffs is None:
        return None
    return CombinationCertificate("lattice", tuple((idx[i], Fraction(c)) for i, c in enumerate(coeffs) if c))


def _lattice_coefficients(rows: list[list[int]], target: list[int]) -> list[int] | None:
    H, U = hnf(rows)
    r = sum(1 for row in H if any(row))
    x = solve_echelon(H[:r], target)
    if x is None:
        return None
    return [sum(x[k] * U[k][i] for k in range(r)) for i in range(len(rows))]


def cone_membership(v, S: GeneratorSet) -> CombinationCertificate | None:
    """Nonnegative rational combination of ``S`` equal to ``v`` (exact LP), or None.

    The returned combination is a basic solution, so its support is
    linearly independent.
    """
    target, rows, idx = _prepare(v, S)
    if not any(target):
        return CombinationCertificate("cone", ())
    if not rows:
        return None
    x = _cone_coefficients(rows, target)
    if x is None:
        return None
    return CombinationCertificate("cone", tuple((idx[i], c) for i, c in enumerate(x) if c))


def _cone_coefficients(rows: Sequence[Sequence[int]], target: Sequence[int]) -> list[Fraction] | None:
    d = len(target)
    A = [[rows[i][j] for i in range(len(rows))] for j in range(d)]
    return feasible_point(A, target)


def reduce_to_independent_support(v, combo: CombinationCertificate, S: GeneratorSet) -> CombinationCertificate:
    """Carathéodory reduction of a cone certificate.

    Repeatedly removes a linear dependency from the support, moving along
    it until one coefficient hits zero. The result still combines to ``v``
    exactly and its support is linearly independent.
    """
    v = v if isinstance(v, QVector) else QVector(v)
    if combo.kind != "cone":
        raise CertificateError("expected a cone certificate")
    if not combo.checks(v, S.vectors):
        raise CertificateError("cone certificate does not combine to the vector")
    coeffs = combo.as_dict()
    while True:
        support = sorted(i for i, c in coeffs.items() if c)
        kernel = left_nullspace([S[i] for i in support])
        if not kernel:
            break
        mu = kernel[0]
        if not any(m > 0 for m in mu):
            mu = [-m for m in mu]
        t = min(coeffs[i] / m for i, m in zip(support, mu) if m > 0)
        for i, m in zip(support, mu):
            coeffs[i] -= t * m
        # exact arithmetic: the minimising index lands on zero
        coeffs = {i: c for i, c in coeffs.items() if c != 0}
    out = CombinationCertificate("cone", tuple(coeffs.items()))
    assert out.checks(v, S.vectors)
    return out


class SemigroupSolver:
    """Decides membership in the semigroup Z_+(G) for a fixed integer set G.

    The cone of G splits into its lineality space L and a pointed part.
    Generators lying in L generate a group (each one's negative is a
    nonnegative combination), so only the pointed generators need a
    bounded search. A functional ``h`` vanishing on L and at least 1 on
    every other generator bounds that search: any representation of ``v``
    satisfies ``sum n_p h(p) == h(v)``. Leaves are decided by lattice
    membership in Z(G ∩ L).
    """

    def __init__(self, rows: Sequence[Sequence[int]], node_limit: int = DEFAULT_NODE_LIMIT):
        self.rows = [list(r) for r in rows]
        if any(not any(r) for r in self.rows):
            raise InputError("zero generator passed to SemigroupSolver")
        self.node_limit = node_limit
        self.m = len(self.rows)
        self.d = len(self.rows[0]) if self.rows else 0
        self._lattice = hnf(self.rows) if self.rows else None
        self._split()

    # -- structure ----------------------------------------------------------

    def _split(self) -> None:
        m = self.m
        h = self._positive_functional(range(m), [])
        if h is not None:
            self.lineal: list[int] = []
            self.relation: list[int] = []
        else:
            lineal = []
            relation = [0] * m
            for i in range(m):
                neg = [-x for x in self.rows[i]]
                x = _cone_coefficients(self.rows, neg)
                if x is None:
                    continue
                lineal.append(i)
                rel = list(x)
                rel[i] += 1
                den = 1
                for c in rel:
                    den = lcm(den, c.denominator)
                for j, c in enumerate(rel):
                    relation[j] += int(c * den)
            self.lineal = lineal
            self.relation = [relation[i] for i in lineal]
            pointed = [i for i in range(m) if i not in set(lineal)]
            h = self._positive_functional(pointed, lineal)
            if h is None:  # pragma: no cover - contradicts the lineality split
                raise ArithmeticError("no positive functional on the pointed part")
        self.h = h
        lin = set(self.lineal)
        self.pointed = [i for i in range(m) if i not in lin]
        self.weights = [self._h(self.rows[i]) for i in self.pointed]
        if self.lineal:
            self._lin_hnf = hnf([self.rows[i] for i in self.lineal])
        else:
            self._lin_hnf = None

    def _positive_functional(self, positive, zero) -> list[int] | None:
        positive, zero = list(positive), list(zero)
        if not positive:
            return [0] * self.d
        d = self.d
        # Unknowns: h+ (d), h- (d), slack per positive generator.
        A, b = [], []
        np_ = len(positive)
        for i in zero:
            g = self.rows[i]
            A.append(list(g) + [-x for x in g] + [0] * np_)
            b.append(0)
        for k, i in enumerate(positive):
            g = self.rows[i]
            slack = [0] * np_
            slack[k] = -1
            A.append(list(g) + [-x for x in g] + slack)
            b.append(1)
        x = feasible_point(A, b)
        if x is None:
            return None
        h = [x[j] - x[d + j] for j in range(d)]
        den = 1
        for c in h:
            den = lcm(den, c.denominator)
        hi = [int(c * den) for c in h]
        g = 0
        for c in hi:
            g = gcd(g, c)
        return [c // g for c in hi] if g else hi

    def _h(self, v: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.h, v))

    @property
    def is_group(self) -> bool:
        """True when every generator lies in the lineality space (Z_+ == Z)."""
        return not self.pointed

    # -- queries ------------------------------------------------------------

    def in_lattice(self, v: Sequence[int]) -> list[int] | None:
        if not self.rows:
            return [] if not any(v) else None
        H, U = self._lattice
        r = sum(1 for row in H if any(row))
        x = solve_echelon(H[:r], v)
        if x is None:
            return None
        return [sum(x[k] * U[k][i] for k in range(r)) for i in range(self.m)]

    def _lineal_combo(self, v: Sequence[int]) -> list[int] | None:
        if self._lin_hnf is None:
            return None if any(v) else []
        H, U = self._lin_hnf
        r = sum(1 for row in H if any(row))
        x = solve_echelon(H[:r], v)
        if x is None:
            return None
        z = [sum(x[k] * U[k][i] for k in range(r)) for i in range(len(self.lineal))]
        # shift by the positive relation until every coefficient is >= 0
        t = max([0] + [-(zi // ri) for zi, ri in zip(z, self.relation)])
        return [zi + t * ri for zi, ri in zip(z, self.relation)]

    def member(self, v: Sequence[int]) -> list[int] | None:
        """Nonnegative integer coefficients (dense, length m) or None."""
        v = list(v)
        if not any(v):
            return [0] * self.m
        if self.in_lattice(v) is None:
            return None
        budget = self._h(v)
        if budget < 0:
            return None
        pointed, weights, rows = self.pointed, self.weights, self.rows
        npt = len(pointed)
        failed: set = set()
        nodes = 0
        chosen: list[int] = []

        def dfs(start: int, res: list[int], left: int) -> list[int] | None:
            nonlocal nodes
            nodes += 1
            if nodes > self.node_limit:
                raise ResourceLimitError(f"semigroup search exceeded {self.node_limit} nodes")
            if left == 0:
                return self._lineal_combo(res)
            key = (start, tuple(res))
            if key in failed:
                return None
            for k in range(start, npt):
                w = weights[k]
                if w > left:
                    continue
                g = rows[pointed[k]]
                chosen.append(k)
                found = dfs(k, [a - b for a, b in zip(res, g)], left - w)
                if found is not None:
                    return found
                chosen.pop()
            failed.add(key)
            return None

        lin = dfs(0, v, budget)
        if lin is None:
            return None
        out = [0] * self.m
        for k in chosen:
            out[pointed[k]] += 1
        for i, c in zip(self.lineal, lin):
            out[i] += c
        return out


def semigroup_membership(v, S: GeneratorSet, node_limit: int = DEFAULT_NODE_LIMIT) -> CombinationCertificate | None:
    """Nonnegative integer combination of ``S`` equal to ``v``, or None.

    A None answer is authoritative: the search is complete. Exceeding
    ``node_limit`` raises :class:`ResourceLimitError` instead.
    """
    target, rows, idx = _prepare(v, S)
    if not any(target):
        return CombinationCertificate("semigroup", ())
    if not rows:
        return None
    coeffs = SemigroupSolver(rows, node_limit).member(target)
    if coeffs is None:
        return None
    cert = CombinationCertificate("semigroup", tuple((idx[i], Fraction(c)) for i, c in enumerate(coeffs) if c))
    assert cert.checks(v, S.vectors)
    return cert
