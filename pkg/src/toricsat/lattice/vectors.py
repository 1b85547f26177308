"""Exact rational vectors, generator sets and combination certificates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from ..errors import CertificateError, InputError


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise InputError(f"not an exact rational: {x!r}")


class QVector(tuple):
    """Immutable vector of exact rationals.

    A ``tuple`` subclass so that equality, hashing and the lexicographic
    order used for canonical enumeration come for free.
    """

    def __new__(cls, coords: Iterable = ()):
        data = tuple(to_fraction(c) for c in coords)
        if not data:
            raise InputError("a QVector needs at least one coordinate")
        return super().__new__(cls, data)

    @property
    def dim(self) -> int:
        return len(self)

    def is_zero(self) -> bool:
        return not any(self)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self)

    def __add__(self, other):
        _check_dim(self, other)
        return QVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        _check_dim(self, other)
        return QVector(a - b for a, b in zip(self, other))

    def __neg__(self):
        return QVector(-a for a in self)

    def scale(self, c) -> QVector:
        c = to_fraction(c)
        return QVector(c * a for a in self)

    def __repr__(self) -> str:
        return "QVector(" + ", ".join(str(c) for c in self) + ")"


def _check_dim(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise InputError(f"dimension mismatch: {len(a)} vs {len(b)}")


class GeneratorSet:
    """A finite set of vectors of one dimension, stored in lexicographic order.

    Duplicates are rejected. The zero vector is allowed (it changes none of
    the lattice, cone or semigroup) and is skipped by the membership code.
    """

    __slots__ = ("dim", "vectors")

    def __init__(self, vectors: Iterable, dim: int | None = None):
        vecs = [v if isinstance(v, QVector) else QVector(v) for v in vectors]
        if dim is None:
            if not vecs:
                raise InputError("empty generator set needs an explicit dim")
            dim = vecs[0].dim
        if dim < 1:
            raise InputError("dimension must be positive")
        for v in vecs:
            if v.dim != dim:
                raise InputError(f"dimension mismatch: {v.dim} vs {dim}")
        if len(set(vecs)) != len(vecs):
            raise InputError("duplicate generators")
        self.dim = dim
        self.vectors: tuple[QVector, ...] = tuple(sorted(vecs))

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i) -> QVector:
        return self.vectors[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, GeneratorSet) and self.vectors == other.vectors and self.dim == other.dim

    def __hash__(self) -> int:
        return hash((self.dim, self.vectors))

    def __repr__(self) -> str:
        return f"GeneratorSet({list(self.vectors)!r})"

    def index(self, v) -> int:
        return self.vectors.index(QVector(v))

    def union(self, more: Iterable) -> GeneratorSet:
        extra = [QVector(v) for v in more]
        return GeneratorSet(set(self.vectors) | set(extra), dim=self.dim)

    def scaled(self, c: int) -> GeneratorSet:
        return GeneratorSet([v.scale(c) for v in self.vectors], dim=self.dim)


def common_denominator(vectors: Iterable[Sequence[Fraction]]) -> int:
    d = 1
    for v in vectors:
        for c in v:
            d = lcm(d, Fraction(c).denominator)
    return d


def integer_rows(vectors: Iterable[Sequence[Fraction]], scale: int) -> list[list[int]]:
    out = []
    for v in vectors:
        row = []
        for c in v:
            x = Fraction(c) * scale
            if x.denominator != 1:
                raise InputError("scale does not clear denominators")
            row.append(x.numerator)
        out.append(row)
    return out


KINDS = ("cone", "lattice", "semigroup")


@dataclass(frozen=True)
class CombinationCertificate:
    """Coefficients (generator index, value) expressing a vector over a set.

    Omitted indices mean coefficient zero. The ``kind`` restricts the
    allowed coefficients: nonnegative rationals, integers, or nonnegative
    integers.
    """

    kind: str
    coefficients: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CertificateError(f"unknown combination kind {self.kind!r}")
        merged: dict[int, Fraction] = {}
        for i, c in self.coefficients:
            if not isinstance(i, int) or i < 0:
                raise CertificateError(f"bad generator index {i!r}")
            merged[i] = merged.get(i, Fraction(0)) + to_fraction(c)
        clean = tuple(sorted((i, c) for i, c in merged.items() if c != 0))
        for i, c in clean:
            if self.kind in ("lattice", "semigroup") and c.denominator != 1:
                raise CertificateError(f"{self.kind} coefficient {c} at index {i} is not an integer")
            if self.kind in ("cone", "semigroup") and c < 0:
                raise CertificateError(f"{self.kind} coefficient {c} at index {i} is negative")
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def from_dense(cls, kind: str, values: Sequence) -> CombinationCertificate:
        return cls(kind, tuple((i, to_fraction(c)) for i, c in enumerate(values) if c != 0))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coefficients)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.coefficients)

    def dense(self, m: int) -> list[Fraction]:
        out = [Fraction(0)] * m
        for i, c in self.coefficients:
            if i >= m:
                raise CertificateError(f"index {i} out of range for {m} generators")
            out[i] = c
        return out

    def combine(self, vectors: Sequence[Sequence]) -> QVector:
        """Exact re-substitution of the coefficients into ``vectors``."""
        if not vectors:
            raise CertificateError("no vectors to combine")
        dim = len(vectors[0])
        acc = [Fraction(0)] * dim
        for i, c in self.coefficients:
            if i >= len(vectors):
                raise CertificateError(f"index {i} out of range for {len(vectors)} generators")
            for j, x in enumerate(vectors[i]):
                acc[j] += c * x
        return QVector(acc)

    def remap(self, mapping: Sequence[int]) -> CombinationCertificate:
        """Re-index: coefficient at ``i`` moves to ``mapping[i]``."""
        return CombinationCertificate(self.kind, tuple((mapping[i], c) for i, c in self.coefficients))

    def checks(self, v: Sequence, vectors: Sequence[Sequence]) -> bool:
        return self.combine(vectors) == QVector(v)
