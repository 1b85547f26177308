"""Deciding normality of all torus orbit closures in a simple SL(n)-module.

:func:`classify` answers from the Main Theorem's list and backs every
negative answer with a verified certificate. :func:`check_all_subsets`
is the exhaustive audit: it tests every subset of a weight system for
saturation, up to the S_n symmetry and three sound prunings.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Callable

import numpy as np

from .certificate import EnssCertificate
from .errors import CertificateError, InputError, ResourceLimitError, SaturatedCase
from .forge import (
    fractional_coordinate_enss,
    fundamental_enss,
    integer_coordinate_enss,
    verify_enss,
)
from .lattice.membership import DEFAULT_NODE_LIMIT
from .lattice.saturation import SaturationEngine, SaturationVerdict
from .theorem import is_fundamental, positive_cases, positive_reason
from .weights import QuasiWeight, WeightSystem, from_lattice_embedding, lattice_embedding, weight_system

DEFAULT_SUBSET_CAP = 10**7
CHUNK = 256


@dataclass(frozen=True)
class ScanSummary:
    weights: int
    subsets_total: int
    subsets_enumerated: int
    orbits: int
    orbits_tested: int
    independent: int
    saturation_tests: int
    bases_tested: int
    pruning: bool

    @property
    def pruned(self) -> int:
        return self.subsets_total - self.subsets_enumerated

    def as_dict(self) -> dict:
        return {
            "weights": self.weights,
            "subsets_total": self.subsets_total,
            "subsets_enumerated": self.subsets_enumerated,
            "pruned": self.pruned,
            "orbits": self.orbits,
            "orbits_tested": self.orbits_tested,
            "independent": self.independent,
            "saturation_tests": self.saturation_tests,
            "bases_tested": self.bases_tested,
            "pruning": self.pruning,
        }


@dataclass(frozen=True)
class ClassificationVerdict:
    n: int
    highest: QuasiWeight
    all_normal: bool
    positive_reason: str | None = None
    negative_certificate: EnssCertificate | None = None
    exhaustive_proof: ScanSummary | None = None

    def __post_init__(self):
        if self.all_normal and self.positive_reason is None:
            raise ValueError("a positive verdict needs a reason")
        if not self.all_normal and self.negative_certificate is None:
            raise ValueError("a negative verdict needs a certificate")


def classify(lam: QuasiWeight, n: int | None = None, *, exhaustive: bool = False,
             subset_cap: int = DEFAULT_SUBSET_CAP, workers: int = 1) -> ClassificationVerdict:
    """Are all maximal torus orbit closures in V(lam) normal?

    With ``exhaustive`` a positive answer is also confirmed by a full
    subset scan.
    """
    if not isinstance(lam, QuasiWeight):
        lam = QuasiWeight(lam)
    if n is not None and n != lam.n:
        raise InputError(f"highest weight has {lam.n} coordinates, n={n}")
    n = lam.n
    if n < 2:
        raise InputError("n must be at least 2")
    if not lam.is_dominant():
        raise InputError(f"highest weight {lam} is not dominant")
    reason = positive_reason(lam)
    if reason is not None:
        proof = None
        if exhaustive:
            verdict = check_all_subsets(weight_system(lam), subset_cap=subset_cap, workers=workers)
            if not verdict.saturated:
                raise AssertionError(f"positive-list weight {lam} has a non-saturated subset")
            proof = verdict.summary
        return ClassificationVerdict(n, lam, True, positive_reason=reason, exhaustive_proof=proof)
    cert = negative_certificate(lam)
    return ClassificationVerdict(n, lam, False, negative_certificate=cert)


def negative_certificate(lam: QuasiWeight) -> EnssCertificate:
    """A verified certificate over M(lam) for a weight outside the positive list."""
    k = is_fundamental(lam)
    if k is not None:
        cert = fundamental_enss(lam.n, k)
    elif sum(lam.coords) % lam.n == 0:
        cert = integer_coordinate_enss(lam)
    else:
        cert = fractional_coordinate_enss(lam)
    cert = cert.with_context(lam)
    result = verify_enss(cert)
    if not result:
        raise CertificateError(f"certificate for {lam} failed verification: {result}")
    return cert


# -- exhaustive scan ----------------------------------------------------------


def _symmetry(weights: list[QuasiWeight]) -> np.ndarray:
    """Distinct permutations of ``range(len(weights))`` induced by S_n."""
    n = weights[0].n
    index = {w: i for i, w in enumerate(weights)}
    images = {tuple(index[w.permuted(p)] for w in weights) for p in permutations(range(n))}
    return np.array(sorted(images), dtype=np.int64)


def _apply(masks: np.ndarray, img: np.ndarray, m: int) -> np.ndarray:
    """Image of each mask under the index permutation ``img``, via byte lookup tables."""
    nbytes = (m + 7) // 8
    bits = ((np.arange(256)[:, None] >> np.arange(8)[None, :]) & 1).astype(np.int64)
    padded = np.zeros(nbytes * 8, dtype=np.int64)
    padded[:m] = 1 << img
    out = np.zeros_like(masks)
    for c in range(nbytes):
        out |= (bits @ padded[8 * c: 8 * c + 8])[(masks >> (8 * c)) & 255]
    return out


def _canonical(masks: np.ndarray, images: np.ndarray, m: int) -> np.ndarray:
    """Smallest mask in the S_n-orbit of each mask."""
    best = masks.copy()
    for img in images:
        np.minimum(best, _apply(masks, img, m), out=best)
    return best


def _orbit_minima(masks: np.ndarray, images: np.ndarray, m: int) -> np.ndarray:
    """The masks that are smallest in their orbit, ascending.

    A mask survives while no image seen so far is smaller, so the
    candidate set shrinks fast and later permutations are cheap. The
    enumerated set must be closed under the symmetry.
    """
    cand = np.unique(masks)
    for img in images:
        cand = cand[_apply(cand, img, m) >= cand]
    return cand


def _pruned_masks(weights: list[QuasiWeight]) -> tuple[list[tuple[int, int]], list[int]]:
    """Bit groups for subsets without 0 and without an opposite pair."""
    index = {w: i for i, w in enumerate(weights)}
    pairs, singles, seen = [], [], set()
    for i, w in enumerate(weights):
        if i in seen or w.is_zero():
            continue
        j = index.get(-w)
        if j is not None and j != i:
            pairs.append((i, j))
            seen.update((i, j))
        else:
            singles.append(i)
            seen.add(i)
    return pairs, singles


def _units(weights: list[QuasiWeight], prune: bool) -> tuple[list[tuple[int, int]], list[int]]:
    if prune:
        return _pruned_masks(weights)
    return [], list(range(len(weights)))


def _combos(items: list[int], k: int) -> np.ndarray:
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(combinations(items, k)), dtype=np.int64).reshape(-1, k)


def _level_count(pairs: int, singles: int, k: int) -> int:
    return sum(comb(pairs, i) * 2**i * comb(singles, k - i) for i in range(k + 1))


def _level_masks(pairs: list[tuple[int, int]], singles: list[int], k: int) -> np.ndarray:
    """All masks with ``k`` elements: at most one element per pair, any singles."""
    a = np.array([p[0] for p in pairs], dtype=np.int64)
    b = np.array([p[1] for p in pairs], dtype=np.int64)
    s = np.array(singles, dtype=np.int64)
    parts = []
    for i in range(max(0, k - len(singles)), min(k, len(pairs)) + 1):
        chosen = _combos(list(range(len(pairs))), i)
        pm = np.zeros(1, dtype=np.int64)
        if i:
            # every sign pattern for the chosen pairs
            signs = (np.arange(2**i)[:, None] >> np.arange(i)[None, :]) & 1
            bits = np.where(signs[None, :, :] == 1, b[chosen][:, None, :], a[chosen][:, None, :])
            pm = (np.left_shift(1, bits)).sum(axis=2).ravel()
        sm = (np.left_shift(1, s[_combos(list(range(len(singles))), k - i)])).sum(axis=1)
        parts.append((pm[:, None] | sm[None, :]).ravel())
    return np.sort(np.concatenate(parts)) if parts else np.zeros(0, dtype=np.int64)


def subset_count(M: WeightSystem, prune: bool = True) -> int:
    """How many subsets a complete scan enumerates before symmetry reduction."""
    pairs, singles = _units(list(M.weights), prune)
    return 3 ** len(pairs) * 2 ** len(singles)


def _scan_chunk(args) -> tuple[tuple[int, int, int, int], tuple | None]:
    rows, masks, node_limit, prune = args
    tested = independent = saturations = bases = 0
    for mask in masks:
        sub = [rows[i] for i in range(len(rows)) if mask >> i & 1 and any(rows[i])]
        tested += 1
        engine = SaturationEngine(sub, node_limit)
        if engine.m <= engine.r:
            independent += 1
            if prune:
                continue
        saturations += 1
        failure = engine.find_failure()
        bases += engine.bases_tested
        if failure is not None:
            return (tested, independent, saturations, bases), (mask, failure)
    return (tested, independent, saturations, bases), None


def check_all_subsets(
    M: WeightSystem,
    *,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    workers: int = 1,
    prune: bool = True,
    node_limit: int = DEFAULT_NODE_LIMIT,
    progress: Callable[[int, int], None] | None = None,
) -> SaturationVerdict:
    """Is every subset of the weight system saturated?

    Subsets are scanned by size, smallest first, and within a size
    reduced to one representative per S_n-orbit (the smallest bitmask,
    bit i standing for the i-th weight in canonical order), tested in
    increasing order. The scan stops inside the first size that has a
    non-saturated subset, so negative answers are usually cheap. With
    ``prune``, subsets containing the zero weight or an opposite pair
    {a, -a} are never enumerated, and linearly independent subsets are
    passed without a test; without it every representative is tested.
    The zero weight is dropped inside a test in both modes, since it
    changes neither cone, lattice nor semigroup.

    ``subset_cap`` bounds the subsets enumerated; a size that would take
    the running total past it raises :class:`ResourceLimitError`. The
    witness is the first failing representative, independent of
    ``workers``.
    """
    weights = list(M.weights)
    m = len(weights)
    if m == 0:
        raise InputError("empty weight system")
    if m > 62:
        raise ResourceLimitError(f"{m} weights do not fit a 64-bit subset mask")
    pairs, singles = _units(weights, prune)
    images = _symmetry(weights)
    rows = [lattice_embedding(w) for w in weights]
    max_k = len(pairs) + len(singles)

    totals = [0, 0, 0, 0]
    enumerated = orbits = 0
    found = None
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for k in range(max_k + 1):
            count = _level_count(len(pairs), len(singles), k)
            if enumerated + count > subset_cap:
                raise ResourceLimitError(
                    f"{enumerated + count} subsets (through size {k}) exceed the cap of {subset_cap}; "
                    f"a complete scan needs {3 ** len(pairs) * 2 ** len(singles)}"
                )
            enumerated += count
            reps = _orbit_minima(_level_masks(pairs, singles, k), images, m).tolist()
            orbits += len(reps)
            chunks = [(rows, reps[i: i + CHUNK], node_limit, prune) for i in range(0, len(reps), CHUNK)]
            if pool is not None and len(chunks) > 1:
                results = (f.result() for f in [pool.submit(_scan_chunk, ch) for ch in chunks])
            else:
                results = (_scan_chunk(ch) for ch in chunks)
            for stats, failure in results:
                for i, x in enumerate(stats):
                    totals[i] += x
                if progress is not None:
                    progress(totals[0], orbits)
                if failure is not None:
                    found = failure
                    break
            if found is not None:
                break
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)

    summary = ScanSummary(
        weights=m,
        subsets_total=2**m,
        subsets_enumerated=enumerated,
        orbits=orbits,
        orbits_tested=totals[0],
        independent=totals[1],
        saturation_tests=totals[2],
        bases_tested=totals[3],
        pruning=prune,
    )
    if found is None:
        return SaturationVerdict(True, None, summary)
    mask, failure = found
    members = [i for i in range(m) if mask >> i & 1 and any(rows[i])]
    gens = [list(weights[i].coords) for i in members]
    witness = list(from_lattice_embedding(failure.point).coords)
    cone = {b: q for b, q in zip(failure.basis, failure.q)}
    cert = EnssCertificate.build(
        gens, witness, cone, None,
        provenance=f"subset scan: first non-saturated subset ({len(members)} weights, mask {mask:#x})",
        highest_weight=M.highest,
    )
    result = verify_enss(cert)
    if not result:
        raise CertificateError(f"scan witness failed verification: {result}")
    return SaturationVerdict(False, cert, summary)


# -- Main Theorem audit ---------------------------------------------------------


@dataclass
class MainTheoremReport:
    max_n: int
    records: list[dict] = field(default_factory=list)

    @property
    def disagreements(self) -> list[dict]:
        return [r for r in self.records if not r["agrees"]]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in self.records)


def _record(n, lam, case, verdict, expected, subsets=None, pruned=None, detail="", wall=None) -> dict:
    rec = {
        "n": n,
        "lambda": " ".join(map(str, lam.coords)),
        "case": case,
        "verdict": verdict,
        "expected": expected,
        "agrees": verdict in (expected, "skipped"),
        "subsets_tested": subsets,
        "pruned": pruned,
        "witness_or_reason": detail,
    }
    if wall is not None:
        rec["wall_time_ms"] = wall
    return rec


def verify_main_theorem(
    max_n: int,
    *,
    workers: int = 1,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    timings: bool = False,
    progress: Callable[[str], None] | None = None,
) -> MainTheoremReport:
    """Audit the Main Theorem for every n up to ``max_n``.

    Positive-list weight systems get an exhaustive subset scan (cases
    whose pruned subset count exceeds ``subset_cap`` are recorded as
    skipped); negative fundamental weights with n >= 7 and a sample of
    n = 2 weights get a verified certificate. Records contain no timing
    unless ``timings`` is set, so reports are reproducible byte for byte.
    """
    if max_n < 2:
        raise InputError("max_n must be at least 2")
    report = MainTheoremReport(max_n)

    def clock(start):
        return round((time.perf_counter() - start) * 1000) if timings else None

    for case, lam in positive_cases(max_n):
        if progress:
            progress(f"scan n={lam.n} {case} lambda={lam}")
        start = time.perf_counter()
        M = weight_system(lam)
        count = subset_count(M)
        if count > subset_cap:
            report.records.append(_record(
                lam.n, lam, case, "skipped", "saturated", 0, None,
                f"{count} pair-free subsets exceed the cap of {subset_cap}", clock(start),
            ))
            continue
        verdict = check_all_subsets(M, subset_cap=subset_cap, workers=workers)
        s = verdict.summary
        detail = positive_reason(lam) if verdict.saturated else verdict.witness.provenance
        report.records.append(_record(
            lam.n, lam, case, "saturated" if verdict.saturated else "not-saturated", "saturated",
            s.subsets_enumerated, s.pruned, detail, clock(start),
        ))

    negatives = [QuasiWeight([a, 0]) for a in (5, 6)]
    for n in range(7, max_n + 1):
        for k in range(2, n - 1):
            negatives.append(QuasiWeight([1] * k + [0] * (n - k)))
    for lam in negatives:
        if progress:
            progress(f"certify n={lam.n} lambda={lam}")
        start = time.perf_counter()
        try:
            cert = negative_certificate(lam)
            verdict, detail = "not-saturated", cert.provenance
        except (SaturatedCase, CertificateError) as exc:
            verdict, detail = "failed", str(exc)
        report.records.append(_record(
            lam.n, lam, "fundamental" if is_fundamental(lam) else "n=2 sample",
            verdict, "not-saturated", None, None, detail, clock(start),
        ))
    return report
