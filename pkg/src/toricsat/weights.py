"""Characters of the diagonal torus of SL(n) and weight systems of simple modules.

A character is an integer vector modulo the all-ones vector (the
quasi-basis ``e_1, ..., e_n`` satisfies ``e_1 + ... + e_n = 0``).
:class:`QuasiWeight` stores the representative whose smallest coordinate
is 0; :class:`UsualWeight` is the same point written with rational
coordinates summing to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

from .errors import InputError


@dataclass(frozen=True, order=True)
class QuasiWeight:
    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        raw = []
        for c in coords:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise InputError(f"quasi-coordinates must be integers, got {c}")
                c = c.numerator
            if not isinstance(c, int):
                raise InputError(f"quasi-coordinates must be integers, got {c!r}")
            raw.append(int(c))
        if not raw:
            raise InputError("a weight needs at least one coordinate")
        low = min(raw)
        object.__setattr__(self, "coords", tuple(c - low for c in raw))

    @property
    def n(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other: QuasiWeight) -> QuasiWeight:
        _same_n(self, other)
        return QuasiWeight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: QuasiWeight) -> QuasiWeight:
        _same_n(self, other)
        return QuasiWeight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> QuasiWeight:
        return QuasiWeight(-a for a in self.coords)

    def __mul__(self, k: int) -> QuasiWeight:
        return QuasiWeight(k * a for a in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.coords, self.coords[1:]))

    def dominant(self) -> QuasiWeight:
        """The dominant point of the S_n-orbit (coordinates sorted decreasingly)."""
        return QuasiWeight(sorted(self.coords, reverse=True))

    def permuted(self, perm: Sequence[int]) -> QuasiWeight:
        """Coordinate ``i`` of the result is coordinate ``perm[i]`` of self."""
        return QuasiWeight(self.coords[p] for p in perm)

    def usual(self) -> UsualWeight:
        return to_usual(self)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class UsualWeight:
    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        data = tuple(Fraction(c) for c in coords)
        if not data:
            raise InputError("a weight needs at least one coordinate")
        if sum(data) != 0:
            raise InputError(f"usual coordinates must sum to zero: {data}")
        n = len(data)
        if any((c * n).denominator != 1 for c in data):
            raise InputError("usual coordinates must have denominators dividing n")
        object.__setattr__(self, "coords", data)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __neg__(self) -> UsualWeight:
        return UsualWeight(-c for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.coords, self.coords[1:]))

    def dominant(self) -> UsualWeight:
        return UsualWeight(sorted(self.coords, reverse=True))

    def square_norm(self) -> Fraction:
        return sum((c * c for c in self.coords), Fraction(0))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _same_n(a, b) -> None:
    if len(a) != len(b):
        raise InputError(f"weights for different n: {len(a)} vs {len(b)}")


def to_usual(w: QuasiWeight) -> UsualWeight:
    """Subtract the mean so the coordinates sum to zero."""
    mean = Fraction(sum(w.coords), w.n)
    return UsualWeight(c - mean for c in w.coords)


def from_usual(u: UsualWeight | Sequence) -> QuasiWeight:
    """Integer representative of a usual-coordinate point.

    Fails when two coordinates differ by a non-integer, i.e. the point is
    not a character of the torus.
    """
    coords = [Fraction(c) for c in u]
    low = min(coords)
    shifted = [c - low for c in coords]
    if any(c.denominator != 1 for c in shifted):
        raise InputError(f"not a character of the torus: {coords}")
    return QuasiWeight(int(c) for c in shifted)


def fundamental_weight(k: int, n: int) -> QuasiWeight:
    """``e_1 + ... + e_k`` in SL(n)."""
    if n < 2 or not 1 <= k <= n - 1:
        raise InputError(f"fundamental weight needs 1 <= k <= n-1, got k={k}, n={n}")
    return QuasiWeight([1] * k + [0] * (n - k))


def adjoint_weight(n: int) -> QuasiWeight:
    """``e_1 - e_n``, the highest weight of the adjoint module."""
    if n < 2:
        raise InputError("n must be at least 2")
    return QuasiWeight([1] + [0] * (n - 2) + [-1])


def _usual(w) -> UsualWeight:
    if isinstance(w, UsualWeight):
        return w
    if isinstance(w, QuasiWeight):
        return to_usual(w)
    return UsualWeight(w)


def dominance_leq(nu, mu) -> bool:
    """True iff ``nu`` lies below ``mu``: every prefix sum of ``mu - nu`` is >= 0."""
    nu, mu = _usual(nu), _usual(mu)
    _same_n(nu, mu)
    diff = [a - b for a, b in zip(mu.coords, nu.coords)]
    return all(s >= 0 for s in accumulate(diff[:-1]))


def in_root_lattice(w: QuasiWeight | Sequence[int]) -> bool:
    """Coordinate sum divisible by n (for any integer representative)."""
    coords = list(w)
    return sum(coords) % len(coords) == 0


def same_root_class(a: QuasiWeight, b: QuasiWeight) -> bool:
    _same_n(a, b)
    return (sum(a.coords) - sum(b.coords)) % a.n == 0


def in_weight_system(mu: QuasiWeight, lam: QuasiWeight) -> bool:
    """Membership in M(lam) without generating it."""
    _same_n(mu, lam)
    if not same_root_class(mu, lam):
        return False
    return dominance_leq(mu.dominant(), lam.dominant())


def multiset_permutations(items: Sequence) -> Iterator[tuple]:
    """Distinct permutations of ``items`` in lexicographic order."""
    pool = sorted(items)
    n = len(pool)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(pool)
        i = n - 2
        while i >= 0 and pool[i] >= pool[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while pool[j] <= pool[i]:
            j -= 1
        pool[i], pool[j] = pool[j], pool[i]
        pool[i + 1:] = reversed(pool[i + 1:])


def weyl_orbit(w: QuasiWeight) -> list[QuasiWeight]:
    """All distinct coordinate permutations of ``w``, sorted."""
    return sorted(QuasiWeight(p) for p in multiset_permutations(w.coords))


def _partitions(n_parts: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of length ``n_parts`` with entries in [0, max_part]."""
    if n_parts == 0:
        yield ()
        return
    for first in range(max_part, -1, -1):
        for rest in _partitions(n_parts - 1, first):
            yield (first,) + rest


def dominant_weights_below(lam: QuasiWeight) -> list[QuasiWeight]:
    """Dominant ``mu`` with ``mu <= lam`` in dominance order and ``lam - mu`` a root-lattice vector."""
    if not lam.is_dominant():
        raise InputError(f"highest weight must be dominant: {lam}")
    n = lam.n
    top = lam.coords[0]
    out = []
    for head in _partitions(n - 1, top):
        mu = QuasiWeight(head + (0,))
        if same_root_class(mu, lam) and dominance_leq(mu, lam):
            out.append(mu)
    return sorted(out)


@dataclass(frozen=True)
class WeightSystem:
    n: int
    highest: QuasiWeight
    weights: tuple[QuasiWeight, ...]

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __contains__(self, w) -> bool:
        return w in set(self.weights)

    def dominant_weights(self) -> list[QuasiWeight]:
        return [w for w in self.weights if w.is_dominant()]


def weight_system(lam: QuasiWeight) -> WeightSystem:
    """M(lam): the S_n-closure of the dominant weights below ``lam``."""
    dom = dominant_weights_below(lam)
    weights = set()
    for mu in dom:
        weights.update(weyl_orbit(mu))
    return WeightSystem(lam.n, lam, tuple(sorted(weights)))


def dual_weight(lam: QuasiWeight) -> QuasiWeight:
    """Highest weight of the dual module: negate and reverse."""
    if not lam.is_dominant():
        raise InputError(f"highest weight must be dominant: {lam}")
    return QuasiWeight(-c for c in reversed(lam.coords))


def shift(y: UsualWeight, i: int, j: int) -> UsualWeight:
    """Move one unit from the larger of ``y[i]``, ``y[j]`` to the smaller.

    Indices are 0-based. Requires ``|y[i] - y[j]| >= 2``; the result lies
    in the weight system of ``y`` and has strictly smaller squared norm.
    """
    y = _usual(y)
    n = y.n
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise InputError(f"bad shift indices {i}, {j} for n={n}")
    a, b = y.coords[i], y.coords[j]
    if abs(a - b) < 2:
        raise InputError(f"shift needs |y_i - y_j| >= 2, got {a} and {b}")
    out = list(y.coords)
    if a > b:
        out[i], out[j] = a - 1, b + 1
    else:
        out[i], out[j] = a + 1, b - 1
    return UsualWeight(out)


def lattice_embedding(w: QuasiWeight | Sequence[int]) -> list[int]:
    """Isomorphism of the character lattice onto Z^(n-1): ``a -> (a_i - a_n)_{i<n}``."""
    c = list(w)
    last = c[-1]
    return [x - last for x in c[:-1]]


def from_lattice_embedding(v: Sequence[int]) -> QuasiWeight:
    return QuasiWeight(list(v) + [0])


def parse_highest(spec: str, n: int) -> QuasiWeight:
    """Parse ``piK`` or a whitespace-separated list of ``n`` quasi-coordinates."""
    text = spec.strip()
    if text.lower().startswith("pi"):
        try:
            k = int(text[2:])
        except ValueError:
            raise InputError(f"bad fundamental weight spec {spec!r}") from None
        return fundamental_weight(k, n)
    parts = text.replace(",", " ").split()
    try:
        coords = [int(p) for p in parts]
    except ValueError:
        raise InputError(f"quasi-coordinates must be integers: {spec!r}") from None
    if len(coords) != n:
        raise InputError(f"expected {n} quasi-coordinates, got {len(coords)}")
    lam = QuasiWeight(coords)
    if not lam.is_dominant():
        raise InputError(f"highest weight {lam} is not dominant (coordinates must be weakly decreasing)")
    return lam
