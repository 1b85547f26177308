"""Certificates for highest weights that are not fundamental.

If a dominant ``mu`` lies in M(lam) then M(mu) ⊂ M(lam), so any
certificate over M(mu) is one over M(lam). Each construction below
walks from ``lam`` by Shift moves to a small special point and
instantiates a fixed certificate there.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Callable, Sequence

from ..certificate import DiscriminatingFunction, EnssCertificate
from ..errors import CertificateError, InputError, RoutingError, SaturatedCase
from ..theorem import is_fundamental, positive_reason
from ..weights import QuasiWeight, UsualWeight, dual_weight, from_usual, in_weight_system, to_usual
from .examples import example_8, example_9
from .fundamental import negate_enss
from .verify import verify_enss

Point = tuple[Fraction, ...]


def _sorted_desc(y) -> Point:
    return tuple(sorted((Fraction(c) for c in y), reverse=True))


def _shift_neighbours(y: Point) -> list[Point]:
    out = set()
    n = len(y)
    for i in range(n):
        for j in range(i + 1, n):
            if y[i] - y[j] >= 2:
                z = list(y)
                z[i] -= 1
                z[j] += 1
                out.add(_sorted_desc(z))
    # larger square norm first: closer to the start of the descent
    return sorted(out, key=lambda p: (-sum(c * c for c in p), tuple(-c for c in p)))


def find_special_point(lam, targets: Sequence | Callable[[Point], bool]) -> UsualWeight:
    """Search M(lam) by Shift moves for a point matching one of ``targets``.

    ``targets`` is a list of usual-coordinate points (matched up to
    permutation) or a predicate on descending-sorted coordinate tuples.
    Every Shift lowers the square norm, so the search is finite. Returns
    the matching point with coordinates sorted decreasingly; raises
    :class:`RoutingError` if none is reachable.
    """
    if isinstance(lam, QuasiWeight):
        lam = to_usual(lam)
    start = _sorted_desc(lam)
    if callable(targets):
        match = targets
    else:
        wanted = {_sorted_desc(t) for t in targets}
        match = wanted.__contains__
    seen = {start}
    queue = deque([start])
    while queue:
        y = queue.popleft()
        if match(y):
            return UsualWeight(y)
        for z in _shift_neighbours(y):
            if z not in seen:
                seen.add(z)
                queue.append(z)
    raise RoutingError(f"no target point reachable from {UsualWeight(start)} by Shift moves")


def good_triple(y: Point) -> Fraction | None:
    """The largest ``a`` with ``a + 1, a, a - 1`` all among the coordinates."""
    vals = set(y)
    for a in sorted(vals, reverse=True):
        if a + 1 in vals and a - 1 in vals:
            return a
    return None


def _finish(c: EnssCertificate, lam: QuasiWeight, route: str) -> EnssCertificate:
    out = c.with_context(lam, provenance=f"{route}; {c.provenance}")
    result = verify_enss(out)
    if not result:
        raise CertificateError(f"constructed certificate failed verification: {result}")
    return out


def _as_quasi(lam) -> QuasiWeight:
    q = lam if isinstance(lam, QuasiWeight) else from_usual(lam)
    if not q.is_dominant():
        raise InputError(f"highest weight {q} is not dominant")
    return q


def _refuse_positive(lam: QuasiWeight) -> None:
    reason = positive_reason(lam)
    if reason is not None:
        raise SaturatedCase(f"every orbit closure in V({lam}) is normal ({reason})")


def integer_coordinate_enss(lam) -> EnssCertificate:
    """Certificate for a highest weight whose usual coordinates are integers."""
    lam = _as_quasi(lam)
    n = lam.n
    if sum(lam.coords) % n:
        raise InputError(f"usual coordinates of {lam} are not integers")
    _refuse_positive(lam)
    u = to_usual(lam)
    if n == 2:
        # lam = (a, -a), a >= 3: (1, -1) = (2, -2)/2 = (3, -3) - (2, -2)
        gens = [[4, 0], [6, 0]]
        c = EnssCertificate.build(
            gens, [2, 0], [Fraction(1, 2), 0], None,
            disc_fn=DiscriminatingFunction.usual_coordinate(0, 2),
            provenance="n=2 pair (2,-2), (3,-3)", highest_weight=lam,
        )
        return _finish(c, lam, f"integer case, n=2, lam={u}")
    ex8 = _sorted_desc([2] + [0] * (n - 3) + [-1, -1])
    ex8neg = _sorted_desc([1, 1] + [0] * (n - 3) + [-2])
    targets = [ex8, ex8neg]
    if n >= 4:
        ex9 = _sorted_desc([1, 1] + [0] * (n - 4) + [-1, -1])
        targets.append(ex9)
    try:
        point = _sorted_desc(find_special_point(u, targets))
        how = "shift search"
    except RoutingError:
        point = next((t for t in targets if in_weight_system(from_usual(t), lam)), None)
        if point is None:
            raise
        how = "dominance check"
    if point == ex8:
        c = example_8(n)
    elif point == ex8neg:
        c = example_8(n, negate=True)
    else:
        c = example_9(n)
    return _finish(c, lam, f"integer case, {how} reached {UsualWeight(point)} in M({u})")


def _triple_certificate(point: Point, lam: QuasiWeight) -> EnssCertificate:
    a = good_triple(point)
    rest = list(point)
    for x in (a + 1, a, a - 1):
        rest.remove(x)
    n = len(point)
    v1 = [a + 1, a, a - 1] + rest
    v2 = [a - 1, a, a + 1] + rest
    v3 = [a + 1, a - 1, a] + rest
    v4 = [a, a - 1, a + 1] + rest
    v = [a, a, a] + rest
    gens = [list(from_usual(p).coords) for p in (v1, v2, v3, v4)]
    f = DiscriminatingFunction.usual_coordinate(3, n, 1 / rest[0])
    half = Fraction(1, 2)
    return EnssCertificate.build(
        gens, list(from_usual(v).coords), [half, half, 0, 0], [0, 1, 1, -1], disc_fn=f,
        provenance=f"good triple at {UsualWeight(point)}", highest_weight=lam,
    )


def _double_e1_certificate(n: int) -> EnssCertificate:
    e = lambda *idx: [sum(1 for i in idx if i == j) for j in range(1, n + 1)]  # noqa: E731
    gens = [e(1, 1), e(2, 2), e(1, 3), e(2, 3)]
    f = DiscriminatingFunction([1, 1, 1] + [0] * (n - 4) + [-3])
    half = Fraction(1, 2)
    return EnssCertificate.build(
        gens, e(1, 2), [half, half, 0, 0], [1, 0, -1, 1], disc_fn=f,
        provenance=f"2e_1 set (n={n})", highest_weight=QuasiWeight([2] + [0] * (n - 1)),
    )


def _n3_certificate() -> EnssCertificate:
    gens = [[1, 0, 0], [2, 2, 0], [3, 1, 0]]
    return EnssCertificate.build(
        gens, [2, 1, 0], [1, Fraction(1, 2), 0], [-1, 0, 1],
        disc_fn=DiscriminatingFunction([1, 0, -1]),
        provenance="n=3 set {e1, 2e1+2e2, 3e1+e2}", highest_weight=QuasiWeight([3, 1, 0]),
    )


def fractional_coordinate_enss(lam) -> EnssCertificate:
    """Certificate for a non-fundamental highest weight with non-integral usual coordinates."""
    lam = _as_quasi(lam)
    n = lam.n
    if sum(lam.coords) % n == 0:
        raise InputError(f"usual coordinates of {lam} are integers")
    _refuse_positive(lam)
    if is_fundamental(lam) is not None:
        raise RoutingError(f"{lam} is fundamental; use the fundamental-weight construction")
    u = to_usual(lam)
    if n == 2:
        # lam = (a/2, -a/2), a odd >= 5: (1/2, -1/2) = (3/2, -3/2)/3 = 2(3/2, -3/2) - (5/2, -5/2)
        c = EnssCertificate.build(
            [[3, 0], [5, 0]], [1, 0], [Fraction(1, 3), 0], None,
            disc_fn=DiscriminatingFunction.usual_coordinate(0, 2, 2),
            provenance="n=2 pair (3/2,-3/2), (5/2,-5/2); lattice combination recomputed (2v1 - v2, not 2v2 - v1)",
            highest_weight=lam,
        )
        return _finish(c, lam, f"fractional case, n=2, lam={u}")
    if n == 3:
        flip = sum(lam.coords) % 3 == 2
        work = dual_weight(lam) if flip else lam
        target = _sorted_desc([Fraction(5, 3), Fraction(-1, 3), Fraction(-4, 3)])
        try:
            find_special_point(to_usual(work), [target])
        except RoutingError:
            if not in_weight_system(QuasiWeight([3, 1, 0]), work):
                raise
        c = _n3_certificate()
        if flip:
            c = negate_enss(c)
        return _finish(c, lam, f"fractional case, n=3{', via dual' if flip else ''}, lam={u}")
    try:
        point = _sorted_desc(find_special_point(u, lambda y: good_triple(y) is not None))
    except RoutingError:
        point = None
    if point is not None:
        c = _triple_certificate(point, lam)
        return _finish(c, lam, f"fractional case, shift search reached {UsualWeight(point)}")
    two_e1 = QuasiWeight([2] + [0] * (n - 1))
    if lam == two_e1:
        return _finish(_double_e1_certificate(n), lam, "fractional case, 2e_1 shape")
    if lam == dual_weight(two_e1):
        return _finish(negate_enss(_double_e1_certificate(n)), lam, "fractional case, dual of 2e_1 shape")
    raise RoutingError(f"no construction applies to {u}")
