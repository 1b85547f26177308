"""The list of highest weights whose torus orbit closures are all normal.

Membership is decided symbolically, up to duality.
"""

from __future__ import annotations

from .errors import InputError
from .weights import QuasiWeight, adjoint_weight, dual_weight, fundamental_weight

# (n, quasi-coordinates) of the rows beyond the two infinite families
EXCEPTIONAL = (
    (2, (3, 0)),
    (2, (4, 0)),
    (3, (2, 0, 0)),
    (4, (1, 1, 0, 0)),
    (5, (1, 1, 0, 0, 0)),
    (6, (1, 1, 0, 0, 0, 0)),
    (6, (1, 1, 1, 0, 0, 0)),
)

TABLE_NAMES = {
    (2, (3, 0)): "S^3 k^2",
    (2, (4, 0)): "S^4 k^2",
    (3, (2, 0, 0)): "S^2 k^3",
    (4, (1, 1, 0, 0)): "Λ^2 k^4",
    (5, (1, 1, 0, 0, 0)): "Λ^2 k^5",
    (6, (1, 1, 0, 0, 0, 0)): "Λ^2 k^6",
    (6, (1, 1, 1, 0, 0, 0)): "Λ^3 k^6",
}


def _direct_reason(lam: QuasiWeight) -> str | None:
    n = lam.n
    if lam == fundamental_weight(1, n):
        return "tautological"
    if lam == adjoint_weight(n):
        return "adjoint"
    if (n, lam.coords) in EXCEPTIONAL:
        return "exceptional-table-row"
    return None


def positive_reason(lam: QuasiWeight) -> str | None:
    """Why every orbit closure in V(lam) is normal, or None if it is not.

    The zero weight (trivial module) is reported as ``"trivial"``.
    """
    if lam.n < 2:
        raise InputError("n must be at least 2")
    if not lam.is_dominant():
        raise InputError(f"highest weight {lam} is not dominant")
    if lam.is_zero():
        return "trivial"
    reason = _direct_reason(lam)
    if reason is not None:
        return reason
    if _direct_reason(dual_weight(lam)) is not None:
        return "dual-of-positive"
    return None


def is_fundamental(lam: QuasiWeight) -> int | None:
    """``k`` when ``lam`` is the fundamental weight π_k, else None."""
    if lam.is_zero() or any(c not in (0, 1) for c in lam.coords) or not lam.is_dominant():
        return None
    return sum(lam.coords)


def positive_cases(max_n: int) -> list[tuple[str, QuasiWeight]]:
    """Every positive-list weight (duals omitted) with ``n <= max_n``."""
    out: list[tuple[str, QuasiWeight]] = []
    for n in range(2, max_n + 1):
        out.append(("tautological", fundamental_weight(1, n)))
        out.append(("adjoint", adjoint_weight(n)))
        for m, coords in EXCEPTIONAL:
            if m == n:
                out.append((TABLE_NAMES[(m, coords)], QuasiWeight(coords)))
    return out
