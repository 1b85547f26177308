"""Independent re-checking of non-saturation certificates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from ..certificate import DiscriminatingFunction, EnssCertificate
from ..errors import CertificateError, ResourceLimitError
from ..lattice.membership import DEFAULT_NODE_LIMIT, SemigroupSolver
from ..lattice.vectors import QVector, common_denominator, integer_rows
from ..weights import QuasiWeight, in_weight_system


def coin_representable(target: int, values: Sequence[int]) -> bool:
    """True iff ``target`` is a sum of (repeatable) entries of ``values``."""
    if any(v <= 0 for v in values):
        raise ValueError("coin values must be positive")
    if target < 0:
        return False
    if target == 0:
        return True
    vals = sorted({int(v) for v in values if v <= target})
    reach = 1  # bit t set <=> t is representable
    mask = (1 << (target + 1)) - 1
    while True:
        grown = reach
        for v in vals:
            grown |= reach << v
        grown &= mask
        if grown == reach:
            break
        reach = grown
    return bool(reach >> target & 1)


def _fiber(target: int, values: Sequence[int]):
    """All nonnegative integer ``n`` with ``sum n_i * values_i == target``."""
    m = len(values)
    n = [0] * m

    def rec(i: int, left: int):
        if i == m:
            if left == 0:
                yield list(n)
            return
        v = values[i]
        for c in range(left // v + 1):
            n[i] = c
            yield from rec(i + 1, left - c * v)
        n[i] = 0

    yield from rec(0, target)


def check_discriminating_function(f: DiscriminatingFunction, c: EnssCertificate) -> bool | None:
    """Coin-problem argument that the witness is not in the semigroup.

    Returns True when every way of writing f(witness) as a sum of
    generator values fails to reproduce the witness itself, False when
    some way does, and None when f vanishes on a generator (the fiber is
    then infinite and the argument says nothing).
    """
    if f.n != c.n:
        raise CertificateError(f"function has {f.n} coefficients for dimension {c.n}")
    vals = [f(g) for g in c.generators]
    if any(x < 0 for x in vals):
        raise CertificateError("discriminating function is negative on a generator")
    if any(x == 0 for x in vals):
        return None
    fv = f(c.witness)
    den = 1
    for x in vals + [fv]:
        den = lcm(den, x.denominator)
    ivals = [int(x * den) for x in vals]
    target = fv * den
    if target.denominator != 1 or target < 0:
        return True
    target = int(target)
    if not coin_representable(target, ivals):
        return True
    rows = c.rows()
    goal = c.target()
    for n in _fiber(target, ivals):
        acc = [Fraction(0)] * len(goal)
        for k, g in zip(n, rows):
            if k:
                for j, x in enumerate(g):
                    acc[j] += k * x
        if QVector(acc) == goal:
            return False
    return True


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    clause: str | None = None
    message: str = ""
    disc_fn: bool | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "certificate verified"
        return f"clause ({self.clause}) failed: {self.message}"


def _fail(clause: str, message: str) -> VerificationResult:
    return VerificationResult(False, clause, message)


def verify_enss(c: EnssCertificate, context: QuasiWeight | None = None, node_limit: int = DEFAULT_NODE_LIMIT) -> VerificationResult:
    """Re-check every claim of a certificate from scratch.

    (a) the cone combination reproduces the witness, (b) so does the
    lattice combination, (c) the witness is not in the semigroup
    (complete search), (d) with a highest weight, every generator lies in
    its weight system, (e) an attached discriminating function is
    well formed and its coin argument does not contradict (c).
    """
    try:
        rows = c.rows()
        goal = c.target()
    except Exception as exc:  # malformed coordinates
        return _fail("a", f"malformed certificate: {exc}")
    if c.cone_combo.kind != "cone":
        return _fail("a", "cone combination has the wrong kind")
    try:
        if c.cone_combo.combine(rows) != goal:
            return _fail("a", "cone combination does not reproduce the witness")
    except CertificateError as exc:
        return _fail("a", str(exc))
    if c.lattice_combo.kind != "lattice":
        return _fail("b", "lattice combination has the wrong kind")
    try:
        if c.lattice_combo.combine(rows) != goal:
            return _fail("b", "lattice combination does not reproduce the witness")
    except CertificateError as exc:
        return _fail("b", str(exc))

    if goal.is_zero():
        return _fail("c", "the zero vector is always in the semigroup")
    nz = [g for g in rows if not g.is_zero()]
    if nz:
        scale = common_denominator([goal] + nz)
        (t,) = integer_rows([goal], scale)
        try:
            member = SemigroupSolver(integer_rows(nz, scale), node_limit).member(t)
        except ResourceLimitError as exc:
            return _fail("c", f"semigroup search gave up: {exc}")
        if member is not None:
            return _fail("c", "witness is a nonnegative integer combination of the generators")

    lam = context if context is not None else c.highest_weight
    if lam is not None:
        if not c.quasi:
            return _fail("d", "a highest weight needs a certificate over weights")
        if lam.n != c.n:
            return _fail("d", f"highest weight has n={lam.n}, certificate has n={c.n}")
        for g in c.generator_weights():
            if not in_weight_system(g, lam):
                return _fail("d", f"generator {g} is not a weight of V({lam})")

    disc = None
    if c.disc_fn is not None:
        try:
            disc = check_discriminating_function(c.disc_fn, c)
        except CertificateError as exc:
            return _fail("e", str(exc))
        if disc is False:
            return _fail("e", "discriminating function admits a representation of the witness")
    return VerificationResult(True, disc_fn=disc)
