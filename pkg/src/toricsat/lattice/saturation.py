"""Deciding whether a finite set is saturated: Z_+(S) == Z(S) ∩ Q_+(S).

Any ``w`` in Z(S) ∩ Q_+(S) is a nonnegative combination of a linearly
independent subset of S, which extends to a basis B of span(S).
Subtracting the integer parts of the coefficients leaves a point of Z(S)
in the half-open parallelepiped of B, and ``w`` is in the semigroup as
soon as that point is. So S is saturated iff every lattice point in every
such parallelepiped is in Z_+(S). Bases with determinant ±1 relative to
Z(S) contribute only the origin and are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING, Sequence

from ..errors import InputError
from .linalg import batch_det, det_bareiss, hnf_basis, integer_left_kernel, left_nullspace, pivots, rank, solve_echelon, solve_rational
from .membership import DEFAULT_NODE_LIMIT, SemigroupSolver, lattice_membership
from .vectors import CombinationCertificate, GeneratorSet, QVector, common_denominator, integer_rows

if TYPE_CHECKING:
    from ..certificate import EnssCertificate


@dataclass(frozen=True)
class SaturationVerdict:
    saturated: bool
    witness: EnssCertificate | None = None
    summary: object | None = None

    def __bool__(self) -> bool:
        return self.saturated


def _box_points(H: Sequence[Sequence[int]], bound: int) -> list[list[int]]:
    """Points of the row lattice of the echelon matrix ``H`` in ``[0, bound)^d``."""
    H = [list(r) for r in H if any(r)]
    if not H:
        return []
    d = len(H[0])
    piv = pivots(H)
    k = len(H)
    out: list[list[int]] = []

    def rec(i: int, acc: list[int]) -> None:
        # columns strictly before the next pivot are final once rows < i are chosen
        upto = piv[i] if i < k else d
        lo = piv[i - 1] if i > 0 else 0
        for c in range(lo, upto):
            if not 0 <= acc[c] < bound:
                return
        if i == k:
            out.append(acc)
            return
        p = piv[i]
        h = H[i][p]
        first = -(acc[p] // h)  # ceil(-acc[p] / h)
        last = (bound - 1 - acc[p]) // h
        row = H[i]
        for y in range(first, last + 1):
            rec(i + 1, [a + y * b for a, b in zip(acc, row)])

    rec(0, [0] * d)
    return out


def _parallelepiped(B: Sequence[Sequence[int]]) -> list[tuple[list[Fraction], list[int]]]:
    """Points of Z^r in the half-open parallelepiped of a square integer basis.

    Returns ``(q, x)`` pairs with ``x == q @ B`` and ``0 <= q_i < 1``.
    """
    r = len(B)
    D = abs(det_bareiss(B))
    if D == 0:
        raise InputError("basis is singular")
    inv = [solve_rational(B, [1 if j == i else 0 for j in range(r)]) for i in range(r)]
    adj = [[int(c * D) for c in row] for row in inv]
    out = []
    for y in _box_points(hnf_basis(adj), D):
        q = [Fraction(c, D) for c in y]
        x = [sum(q[i] * B[i][j] for i in range(r)) for j in range(r)]
        out.append((q, [int(c) for c in x]))
    return out


def enumerate_parallelepiped_points(B: GeneratorSet | Sequence[Sequence], L: GeneratorSet | Sequence[Sequence]) -> list[QVector]:
    """Points of Z(L) in ``{sum q_b b : 0 <= q_b < 1}``, in lexicographic order.

    ``B`` must be linearly independent. It need not lie in Z(L); only the
    part of Z(L) inside span(B) can meet the parallelepiped.
    """
    Bv = [QVector(b) for b in B]
    Lv = [QVector(v) for v in L]
    if not Bv:
        raise InputError("empty basis")
    d = Bv[0].dim
    if any(v.dim != d for v in Bv + Lv):
        raise InputError("dimension mismatch")
    if rank(Bv) != len(Bv):
        raise InputError("basis vectors are linearly dependent")
    Lv = [v for v in Lv if not v.is_zero()]
    if not Lv:
        return [QVector([0] * d)]
    scale = common_denominator(Bv + Lv)
    Bi = integer_rows(Bv, scale)
    Li = integer_rows(Lv, scale)
    Hb = hnf_basis(Li)
    # restrict Z(L) to span(B): integer y with (y @ Hb) orthogonal to ker(B^T)
    ortho = left_nullspace([[Bi[i][j] for i in range(len(Bi))] for j in range(d)])
    if ortho:
        M = [[sum(Fraction(h[j]) * w[j] for j in range(d)) for w in ortho] for h in Hb]
        den = common_denominator(M)
        Mi = [[int(c * den) for c in row] for row in M]
        ys = integer_left_kernel(Mi)
        gens = [[sum(y[i] * Hb[i][j] for i in range(len(Hb))) for j in range(d)] for y in ys]
        gens = [g for g in gens if any(g)]
        if not gens:
            return [QVector([0] * d)]
        lat = hnf_basis(gens)
    else:
        lat = Hb
    coords = [solve_rational(Bi, v) for v in lat]
    qden = common_denominator(coords)
    Q = [[int(c * qden) for c in row] for row in coords]
    pts = []
    for y in _box_points(hnf_basis(Q), qden):
        x = [sum(Fraction(y[i], qden) * Bi[i][j] for i in range(len(Bi))) for j in range(d)]
        pts.append(QVector(c / scale for c in x))
    return sorted(pts)


@dataclass(frozen=True)
class Failure:
    """A parallelepiped point outside the semigroup.

    ``basis`` indexes the input rows, ``q`` are the coefficients of the
    point over that basis and ``point`` is the point itself.
    """

    basis: tuple[int, ...]
    q: tuple[Fraction, ...]
    point: tuple[int, ...]


class SaturationEngine:
    """Saturation test for a list of nonzero integer vectors.

    Works in coordinates over a Z-basis of Z(S), where the lattice is all
    of Z^r and a basis of S has determinant ±1 exactly when its
    parallelepiped holds no nonzero lattice point.
    """

    def __init__(self, rows: Sequence[Sequence[int]], node_limit: int = DEFAULT_NODE_LIMIT):
        self.rows = [list(r) for r in rows]
        if any(not any(r) for r in self.rows):
            raise InputError("zero vector passed to SaturationEngine")
        self.node_limit = node_limit
        self.m = len(self.rows)
        if self.rows:
            self.lattice_basis = hnf_basis(self.rows)
        else:
            self.lattice_basis = []
        self.r = len(self.lattice_basis)
        self.coords = [solve_echelon(self.lattice_basis, row) for row in self.rows]
        self.bases_tested = 0

    def to_ambient(self, x: Sequence[int]) -> list[int]:
        H = self.lattice_basis
        d = len(H[0])
        return [sum(x[i] * H[i][j] for i in range(self.r)) for j in range(d)]

    def find_failure(self) -> Failure | None:
        """First basis (in index order) whose parallelepiped has a non-member.

        Within that basis the failing point with the lexicographically
        smallest ambient coordinates is returned.
        """
        m, r = self.m, self.r
        if m <= r:
            return None
        solver: SemigroupSolver | None = None
        known: dict[tuple[int, ...], bool] = {}
        combos = list(combinations(range(m), r))
        dets = batch_det([[self.coords[i] for i in combo] for combo in combos])
        self.bases_tested += len(combos)
        for combo, D in zip(combos, dets):
            if abs(D) <= 1:
                continue
            B = [self.coords[i] for i in combo]
            if solver is None:
                solver = SemigroupSolver(self.coords, self.node_limit)
                if solver.is_group:
                    return None
            candidates = []
            for q, x in _parallelepiped(B):
                if not any(x):
                    continue
                key = tuple(x)
                if key not in known:
                    known[key] = solver.member(x) is not None
                if not known[key]:
                    candidates.append((self.to_ambient(x), q))
            if candidates:
                point, q = min(candidates)
                return Failure(combo, tuple(q), tuple(point))
        return None


def is_saturated(S: GeneratorSet | Sequence[Sequence], node_limit: int = DEFAULT_NODE_LIMIT) -> SaturationVerdict:
    """Decide saturation; on failure the verdict carries a checked witness."""
    from ..certificate import EnssCertificate

    if not isinstance(S, GeneratorSet):
        S = GeneratorSet(S)
    idx = [i for i, g in enumerate(S) if not g.is_zero()]
    if not idx:
        return SaturationVerdict(True)
    scale = common_denominator([S[i] for i in idx])
    rows = integer_rows([S[i] for i in idx], scale)
    failure = SaturationEngine(rows, node_limit).find_failure()
    if failure is None:
        return SaturationVerdict(True)
    witness = QVector(Fraction(c, scale) for c in failure.point)
    cone = CombinationCertificate("cone", tuple((idx[b], q) for b, q in zip(failure.basis, failure.q)))
    lattice = lattice_membership(witness, S)
    cert = EnssCertificate(
        n=S.dim,
        generators=S,
        witness=witness,
        cone_combo=cone,
        lattice_combo=lattice,
        provenance="parallelepiped point over generators " + ",".join(str(idx[b]) for b in failure.basis),
        quasi=False,
    )
    return SaturationVerdict(False, cert)
