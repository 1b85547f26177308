"""Certificates for fundamental weights: base examples plus three combinators.

``multiply_enss`` repeats every coordinate string r times, ``step_enss``
pads with k zeros and adds one generator, and ``negate_enss`` passes to
the dual module (k -> n - k). ``fundamental_enss`` routes a pair (n, k)
through them down to Examples 1-7.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..certificate import DiscriminatingFunction, EnssCertificate
from ..errors import CertificateError, InputError, SaturatedCase
from ..weights import QuasiWeight, dual_weight, fundamental_weight
from .examples import example_1, example_2, example_3, example_4, example_5, example_6, example_7
from .verify import verify_enss


def _fundamental_k(c: EnssCertificate) -> int:
    """The common number of ones of the 0/1 generators, checked."""
    if not c.quasi:
        raise InputError("expected a certificate over weights")
    ks = set()
    for g in c.generators:
        if any(x not in (0, 1) for x in g):
            raise InputError(f"generator {tuple(map(int, g))} is not a 0/1 vector")
        ks.add(sum(int(x) for x in g))
    if len(ks) != 1:
        raise InputError("generators have different numbers of ones")
    (k,) = ks
    if not 0 < k < c.n:
        raise InputError("generators are not weights of a fundamental module")
    return k


def _checked(c: EnssCertificate) -> EnssCertificate:
    result = verify_enss(c)
    if not result:
        raise CertificateError(f"constructed certificate failed verification: {result}")
    return c


def multiply_enss(c: EnssCertificate, r: int) -> EnssCertificate:
    """Certificate for (nr, kr): every quasi-coordinate string written r times.

    Combinations carry over unchanged (a relation modulo the all-ones
    vector stays one); the discriminating function is repeated likewise.
    """
    if r < 1:
        raise InputError(f"r must be positive, got {r}")
    k = _fundamental_k(c)
    if r == 1:
        return c
    gens = [list(map(int, g)) * r for g in c.generators]
    witness = list(map(int, c.witness)) * r
    f = None
    if c.disc_fn is not None:
        f = DiscriminatingFunction(list(c.disc_fn.coeffs) * r)
    out = EnssCertificate.build(
        gens, witness, c.cone_combo, c.lattice_combo, disc_fn=f,
        provenance=f"{c.provenance} -> multiply r={r}",
        highest_weight=fundamental_weight(k * r, c.n * r),
    )
    return _checked(out)


def step_enss(c: EnssCertificate) -> EnssCertificate:
    """Certificate for (n + k, k) from one for (n, k).

    Every vector is padded with k zeros and ``(0, ..., 0, 1, ..., 1)`` is
    added. With the witness written with nonnegative coordinates and a
    zero, ``v = sum q_i v_i - a (1, ..., 1)`` has ``a >= 0`` and the padded
    witness is ``sum q_i v_i' + a v_new`` modulo the all-ones vector.
    """
    k = _fundamental_k(c)
    n = c.n
    gens = [list(map(int, g)) + [0] * k for g in c.generators]
    witness = QuasiWeight(map(int, c.witness))  # canonical: >= 0 with a zero
    if witness.is_zero():
        raise InputError("witness must be nonzero")
    new = [0] * n + [1] * k
    extended = []
    for combo in (c.cone_combo, c.lattice_combo):
        total = combo.combine([list(g) for g in c.generators])
        alpha = total[0] - witness.coords[0]
        if any(total[j] - witness.coords[j] != alpha for j in range(n)):
            raise CertificateError(f"{combo.kind} combination is not exact modulo the all-ones vector")
        if combo.kind == "cone" and alpha < 0:
            raise CertificateError("negative shift; witness representative is not canonical")
        extended.append(combo.dense(len(gens)) + [alpha])
    f = None
    out = EnssCertificate.build(
        gens + [new], list(witness.coords) + [0] * k, extended[0], extended[1], disc_fn=f,
        provenance=f"{c.provenance} -> step to ({n + k},{k})",
        highest_weight=fundamental_weight(k, n + k),
    )
    return _checked(out)


def negate_enss(c: EnssCertificate) -> EnssCertificate:
    """Certificate with every vector negated, for the dual module."""
    gens = [[-int(x) for x in g] for g in c.generators]
    witness = [-int(x) for x in c.witness]
    f = None
    if c.disc_fn is not None:
        f = DiscriminatingFunction(-x for x in c.disc_fn.coeffs)
    lam = dual_weight(c.highest_weight) if c.highest_weight is not None else None
    out = EnssCertificate.build(
        gens, witness, c.cone_combo, c.lattice_combo, disc_fn=f,
        provenance=f"{c.provenance} -> dual",
        highest_weight=lam, quasi=c.quasi,
    )
    return _checked(out)


_POSITIVE_FUNDAMENTAL = {(4, 2), (5, 2), (6, 2), (6, 3)}


def is_positive_fundamental(n: int, k: int) -> bool:
    return k in (1, n - 1) or (n, min(k, n - k)) in _POSITIVE_FUNDAMENTAL


def fundamental_enss(n: int, k: int) -> EnssCertificate:
    """Certificate of non-normality for Λ^k k^n outside the positive list.

    The provenance field records the route taken.
    """
    if n < 2 or not 1 <= k <= n - 1:
        raise InputError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    if is_positive_fundamental(n, k):
        raise SaturatedCase(f"every orbit closure in Λ^{k} k^{n} is normal")
    return _route(n, k)


def _route(n: int, k: int) -> EnssCertificate:
    if 2 * k > n:
        return negate_enss(_route(n, n - k))
    if n % k == 0:
        if k >= 4:
            return example_3(k) if n == 2 * k else step_enss(_route(n - k, k))
        if k == 2:
            return example_5() if n == 8 else step_enss(_route(n - 2, 2))
        # k == 3
        return example_6() if n == 9 else step_enss(_route(n - 3, 3))
    g = gcd(n, k)
    if g > 1:
        if 5 * k == 2 * n:
            k1 = k // 2
            if k1 == 2:
                return example_7()
            if k1 == 3:
                return step_enss(negate_enss(example_6()))
            # (2k1, k1) -> (3k1, k1) -> (3k1, 2k1) -> (5k1, 2k1)
            return step_enss(negate_enss(step_enss(example_3(k1))))
        return multiply_enss(_route(n // g, k // g), g)
    if n == 2 * k + 1:
        return example_4(k)
    if (n, k) == (7, 2):
        return example_1()
    if (n, k) == (8, 3):
        return example_2()
    return step_enss(_route(n - k, k))
