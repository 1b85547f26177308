"""Proof objects for non-saturation: a generator set plus a witness.

An :class:`EnssCertificate` records a set ``S``, a vector ``v`` and two
combinations showing ``v`` lies in the cone and in the lattice of ``S``.
That ``v`` is not in the semigroup is re-checked by search on
verification; an attached :class:`DiscriminatingFunction` gives a second,
independent argument when its values on ``S`` are all positive.

Certificates over weights (``quasi=True``) store canonical
quasi-coordinates. Every combination is then read modulo the all-ones
vector, i.e. after :func:`~toricsat.weights.lattice_embedding`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import CertificateError, InputError
from .lattice.vectors import CombinationCertificate, GeneratorSet, QVector, to_fraction
from .weights import QuasiWeight, lattice_embedding


@dataclass(frozen=True)
class DiscriminatingFunction:
    """Linear functional in quasi-coordinates with coefficient sum zero."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        data = tuple(to_fraction(c) for c in coeffs)
        if not data:
            raise InputError("a discriminating function needs coefficients")
        if sum(data) != 0:
            raise InputError(f"coefficients must sum to zero, got sum {sum(data)}")
        object.__setattr__(self, "coeffs", data)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __call__(self, v: Sequence) -> Fraction:
        if len(v) != self.n:
            raise InputError(f"function on {self.n} coordinates applied to {len(v)}")
        return sum((c * to_fraction(x) for c, x in zip(self.coeffs, v)), Fraction(0))

    @classmethod
    def usual_coordinate(cls, i: int, n: int, scale=1) -> DiscriminatingFunction:
        """``scale * y_i`` where ``y`` are the usual (mean-zero) coordinates."""
        s = to_fraction(scale)
        return cls((s if j == i else 0) - s / n for j in range(n))

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs)


def _dense_or_mapping(values, m: int) -> list[Fraction]:
    if values is None:
        return None
    if isinstance(values, CombinationCertificate):
        return values.dense(m)
    if isinstance(values, Mapping):
        out = [Fraction(0)] * m
        for i, c in values.items():
            out[i] = to_fraction(c)
        return out
    vals = [to_fraction(c) for c in values]
    if len(vals) != m:
        raise CertificateError(f"expected {m} coefficients, got {len(vals)}")
    return vals


@dataclass(frozen=True)
class EnssCertificate:
    n: int
    generators: GeneratorSet
    witness: QVector
    cone_combo: CombinationCertificate
    lattice_combo: CombinationCertificate
    disc_fn: DiscriminatingFunction | None = None
    provenance: str = ""
    highest_weight: QuasiWeight | None = None
    quasi: bool = True
    notes: tuple[str, ...] = field(default=(), compare=False)

    # -- construction -------------------------------------------------------

    @classmethod
    def build(
        cls,
        generators: Sequence[Sequence],
        witness: Sequence,
        cone=None,
        lattice=None,
        *,
        disc_fn: DiscriminatingFunction | Iterable | None = None,
        provenance: str = "",
        highest_weight: QuasiWeight | None = None,
        quasi: bool = True,
    ) -> EnssCertificate:
        """Assemble a certificate from generators in any order.

        ``cone`` and ``lattice`` are coefficient lists aligned with
        ``generators`` (or index mappings). Generators are canonicalised and
        sorted and the coefficients re-indexed to match. A combination that
        is missing, or that does not re-substitute exactly, is recomputed
        by exact LP / Hermite form; a note records the replacement.
        """
        from .lattice.membership import _cone_coefficients, _lattice_coefficients

        if quasi:
            gens = [QVector(QuasiWeight(_ints(g)).coords) for g in generators]
            wit = QVector(QuasiWeight(_ints(witness)).coords)
        else:
            gens = [QVector(g) for g in generators]
            wit = QVector(witness)
        if not gens:
            raise CertificateError("a certificate needs at least one generator")
        n = wit.dim
        gset = GeneratorSet(gens, dim=n)
        m = len(gens)
        mapping = [gset.index(g) for g in gens]
        notes: list[str] = []

        rows = [_embed(g, quasi) for g in gset]
        target = _embed(wit, quasi)
        nz = [i for i, r in enumerate(rows) if any(r)]

        def recompute(kind: str) -> CombinationCertificate:
            from .lattice.vectors import common_denominator, integer_rows

            scale = common_denominator([target] + [rows[i] for i in nz])
            (t,) = integer_rows([target], scale)
            R = integer_rows([rows[i] for i in nz], scale)
            if not any(t):
                return CombinationCertificate(kind, ())
            coeffs = None
            if R:
                coeffs = _cone_coefficients(R, t) if kind == "cone" else _lattice_coefficients(R, t)
            if coeffs is None:
                raise CertificateError(f"witness is not in the {kind} of the generators")
            return CombinationCertificate(kind, tuple((nz[i], Fraction(c)) for i, c in enumerate(coeffs) if c))

        combos = {}
        for kind, given in (("cone", cone), ("lattice", lattice)):
            dense = _dense_or_mapping(given, m)
            combo = None
            if dense is not None:
                try:
                    combo = CombinationCertificate.from_dense(kind, dense).remap(mapping)
                except CertificateError as exc:
                    notes.append(f"given {kind} combination rejected ({exc}); recomputed")
                    combo = None
                if combo is not None and combo.combine(rows) != QVector(target):
                    notes.append(f"given {kind} combination does not re-substitute; recomputed")
                    combo = None
            if combo is None:
                combo = recompute(kind)
            combos[kind] = combo

        if disc_fn is not None and not isinstance(disc_fn, DiscriminatingFunction):
            disc_fn = DiscriminatingFunction(disc_fn)
        if notes:
            provenance = provenance + ("; " if provenance else "") + "; ".join(notes)
        return cls(
            n=n,
            generators=gset,
            witness=wit,
            cone_combo=combos["cone"],
            lattice_combo=combos["lattice"],
            disc_fn=disc_fn,
            provenance=provenance,
            highest_weight=highest_weight,
            quasi=quasi,
            notes=tuple(notes),
        )

    # -- views --------------------------------------------------------------

    def rows(self) -> list[QVector]:
        """Generators in the coordinates where combinations are exact."""
        return [_embed(g, self.quasi) for g in self.generators]

    def target(self) -> QVector:
        return _embed(self.witness, self.quasi)

    def witness_weight(self) -> QuasiWeight:
        if not self.quasi:
            raise InputError("certificate is not over weights")
        return QuasiWeight(_ints(self.witness))

    def generator_weights(self) -> list[QuasiWeight]:
        if not self.quasi:
            raise InputError("certificate is not over weights")
        return [QuasiWeight(_ints(g)) for g in self.generators]

    def f_values(self) -> tuple[list[Fraction], Fraction] | None:
        """Values of the attached function on the generators and on the witness."""
        if self.disc_fn is None:
            return None
        return [self.disc_fn(g) for g in self.generators], self.disc_fn(self.witness)

    def with_context(self, highest: QuasiWeight | None, provenance: str | None = None) -> EnssCertificate:
        return EnssCertificate(
            self.n,
            self.generators,
            self.witness,
            self.cone_combo,
            self.lattice_combo,
            self.disc_fn,
            self.provenance if provenance is None else provenance,
            highest,
            self.quasi,
            self.notes,
        )


def _ints(v: Sequence) -> list[int]:
    out = []
    for c in v:
        c = to_fraction(c)
        if c.denominator != 1:
            raise InputError(f"quasi-coordinates must be integers, got {c}")
        out.append(c.numerator)
    return out


def _embed(v: Sequence, quasi: bool) -> QVector:
    if not quasi:
        return QVector(v)
    if len(v) < 2:
        raise InputError("quasi-coordinates need n >= 2")
    return QVector(lattice_embedding(_ints(v)))
