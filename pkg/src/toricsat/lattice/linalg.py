"""Integer and rational linear algebra: Hermite normal form, kernels, ranks.

Everything here is exact. Integer routines work on ``list[list[int]]``,
rational ones on lists of ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import InputError

Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _as_int_matrix(rows: Sequence[Sequence]) -> Matrix:
    out = []
    for row in rows:
        r = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise InputError(f"non-integer entry {x}")
                x = x.numerator
            elif not isinstance(x, int):
                raise InputError(f"non-integer entry {x!r}")
            r.append(int(x))
        out.append(r)
    if not out:
        raise InputError("empty matrix")
    width = len(out[0])
    if any(len(r) != width for r in out):
        raise InputError("ragged matrix")
    return out


def hnf(rows: Sequence[Sequence]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``. ``H`` is in
    row echelon form with positive pivots, entries above each pivot reduced
    into ``[0, pivot)``, and zero rows last; its nonzero rows are the unique
    HNF basis of the row lattice.
    """
    H = [list(r) for r in _as_int_matrix(rows)]
    m, d = len(H), len(H[0])
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for col in range(d):
        if r == m:
            break
        for i in range(r + 1, m):
            b = H[i][col]
            if b == 0:
                continue
            a = H[r][col]
            g, s, t = xgcd(a, b)
            p, q = a // g, b // g
            Hr, Hi = H[r], H[i]
            H[r] = [s * x + t * y for x, y in zip(Hr, Hi)]
            H[i] = [p * y - q * x for x, y in zip(Hr, Hi)]
            Ur, Ui = U[r], U[i]
            U[r] = [s * x + t * y for x, y in zip(Ur, Ui)]
            U[i] = [p * y - q * x for x, y in zip(Ur, Ui)]
        piv = H[r][col]
        if piv == 0:
            continue
        if piv < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
            piv = -piv
        for i in range(r):
            f = H[i][col] // piv
            if f:
                H[i] = [x - f * y for x, y in zip(H[i], H[r])]
                U[i] = [x - f * y for x, y in zip(U[i], U[r])]
        r += 1
    return H, U


def hnf_basis(rows: Sequence[Sequence]) -> Matrix:
    """Nonzero rows of the Hermite normal form (a basis of the row lattice)."""
    H, _ = hnf(rows)
    return [row for row in H if any(row)]


def pivots(H: Matrix) -> list[int]:
    out = []
    for row in H:
        for j, x in enumerate(row):
            if x:
                out.append(j)
                break
    return out


def solve_echelon(H: Matrix, v: Sequence[int]) -> list[int] | None:
    """Integer ``x`` with ``x @ H == v`` for an echelon ``H`` (nonzero rows), or None."""
    res = list(v)
    x = []
    for row, p in zip(H, pivots(H)):
        q, rem = divmod(res[p], row[p])
        if rem:
            return None
        x.append(q)
        if q:
            res = [a - q * b for a, b in zip(res, row)]
    if any(res):
        return None
    return x


def lattice_solve(rows: Sequence[Sequence[int]], v: Sequence[int]) -> list[int] | None:
    """Integer coefficients ``c`` with ``sum c_i rows_i == v`` or None."""
    H, U = hnf(rows)
    rank = sum(1 for row in H if any(row))
    x = solve_echelon(H[:rank], v)
    if x is None:
        return None
    m = len(U)
    return [sum(x[k] * U[k][i] for k in range(rank)) for i in range(m)]


def integer_left_kernel(rows: Sequence[Sequence[int]]) -> Matrix:
    """Basis of ``{x in Z^m : x @ A == 0}``."""
    H, U = hnf(rows)
    return [U[i] for i, row in enumerate(H) if not any(row)]


def det_bareiss(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free elimination)."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        rowk = A[k]
        for i in range(k + 1, n):
            rowi = A[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and its pivot columns."""
    A = [[Fraction(x) for x in r] for r in rows]
    if not A:
        return [], []
    m, d = len(A), len(A[0])
    piv = []
    r = 0
    for c in range(d):
        p = next((i for i in range(r, m) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv.append(c)
        r += 1
        if r == m:
            break
    return A[:r], piv


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    if all(isinstance(x, int) for r in rows for x in r):
        return sum(1 for row in hnf(rows)[0] if any(row))
    return len(rref(rows)[1])


def left_nullspace(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Rational basis of ``{x : x @ A == 0}`` (one vector per free row)."""
    m = len(rows)
    if m == 0:
        return []
    # Solve A^T x = 0.
    At = [[Fraction(rows[i][j]) for i in range(m)] for j in range(len(rows[0]))]
    R, piv = rref(At)
    free = [j for j in range(m) if j not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * m
        x[f] = Fraction(1)
        for r, p in zip(R, piv):
            x[p] = -r[f]
        basis.append(x)
    return basis


def solve_rational(B: Sequence[Sequence], v: Sequence) -> list[Fraction] | None:
    """Rational ``x`` with ``x @ B == v`` (rows of ``B`` independent) or None."""
    m = len(B)
    d = len(v)
    # Augmented system B^T x = v.
    aug = [[Fraction(B[i][j]) for i in range(m)] + [Fraction(v[j])] for j in range(d)]
    R, piv = rref(aug)
    if m in piv:
        return None
    x = [Fraction(0)] * m
    for r, p in zip(R, piv):
        x[p] = r[m]
    return x


def batch_det(mats) -> list[int]:
    """Exact determinants of a stack of square integer matrices.

    Fraction-free elimination vectorised over the stack in int64. Every
    intermediate is a minor of the input, so it is bounded by Hadamard's
    bound; when the square of that bound could overflow, falls back to
    :func:`det_bareiss` on Python integers.
    """
    import numpy as np

    A = np.array(mats, dtype=object)
    if A.ndim != 3 or A.shape[1] != A.shape[2]:
        raise InputError("expected a stack of square matrices")
    N, r = A.shape[0], A.shape[1]
    if N == 0:
        return []
    if r == 0:
        return [1] * N
    norms = np.sqrt((A.astype(float) ** 2).sum(axis=2)).prod(axis=1)
    if float(norms.max()) ** 2 >= 2.0**62:
        return [det_bareiss(m) for m in A.tolist()]
    A = A.astype(np.int64)
    sign = np.ones(N, dtype=np.int64)
    prev = np.ones(N, dtype=np.int64)
    singular = np.zeros(N, dtype=bool)
    for k in range(r - 1):
        nz = A[:, k:, k] != 0
        has = nz.any(axis=1)
        singular |= ~has
        first = nz.argmax(axis=1) + k
        swap = np.nonzero(has & (first != k))[0]
        if swap.size:
            rows_k = A[swap, k].copy()
            A[swap, k] = A[swap, first[swap]]
            A[swap, first[swap]] = rows_k
            sign[swap] = -sign[swap]
        piv = A[:, k, k].copy()
        piv[~has] = 1
        sub = A[:, k + 1:, k + 1:]
        A[:, k + 1:, k + 1:] = (piv[:, None, None] * sub - A[:, k + 1:, k, None] * A[:, k, None, k + 1:]) // prev[:, None, None]
        prev = piv
    det = sign * A[:, r - 1, r - 1]
    det[singular] = 0
    return [int(x) for x in det]
