from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricsat import classifier
from toricsat.classifier import (
    check_all_subsets,
    classify,
    subset_count,
    verify_main_theorem,
)
from toricsat.errors import InputError, ResourceLimitError
from toricsat.forge import verify_enss
from toricsat.weights import QuasiWeight, adjoint_weight, dual_weight, fundamental_weight, weight_system


def test_classify_examples():
    v = classify(fundamental_weight(2, 5))
    assert v.all_normal and v.positive_reason == "exceptional-table-row"
    v = classify(fundamental_weight(2, 7), 7)
    assert not v.all_normal
    assert v.negative_certificate.provenance.startswith("Example 1")
    assert verify_enss(v.negative_certificate, fundamental_weight(2, 7)).ok
    assert classify(QuasiWeight([4, 0])).all_normal  # (a, -a) with a = 2
    assert classify(QuasiWeight([2, 2, 0])).positive_reason == "dual-of-positive"
    assert classify(adjoint_weight(9)).positive_reason == "adjoint"
    assert classify(fundamental_weight(1, 9)).positive_reason == "tautological"


def test_classify_trivial_module():
    v = classify(QuasiWeight([0, 0, 0]))
    assert v.all_normal and v.positive_reason == "trivial"


def test_classify_rejects_bad_input():
    with pytest.raises(InputError):
        classify(QuasiWeight([0, 1, 2]))
    with pytest.raises(InputError):
        classify(QuasiWeight([1, 0]), n=3)
    with pytest.raises(InputError):
        classify(QuasiWeight([0]))


def test_classify_exhaustive_attaches_scan():
    v = classify(fundamental_weight(2, 4), exhaustive=True)
    assert v.exhaustive_proof is not None and v.exhaustive_proof.orbits > 0


dominant = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.integers(0, 4), min_size=n - 1, max_size=n - 1).map(
        lambda head: QuasiWeight(sorted(head, reverse=True) + [0])))


@settings(max_examples=60, deadline=None)
@given(dominant)
def test_duality_invariance(lam):
    assert classify(lam).all_normal == classify(dual_weight(lam)).all_normal


@settings(max_examples=40, deadline=None)
@given(dominant)
def test_negative_certificates_fit_context(lam):
    v = classify(lam)
    if not v.all_normal:
        c = v.negative_certificate
        assert verify_enss(c, lam).ok
        M = weight_system(lam)
        assert all(g in M for g in c.generator_weights())


# -- scans -----------------------------------------------------------------------


@pytest.mark.parametrize("n", range(2, 9))
def test_tautological_saturated(n):
    assert check_all_subsets(weight_system(fundamental_weight(1, n))).saturated


def test_adjoint_four_saturated():
    v = check_all_subsets(weight_system(adjoint_weight(4)))
    assert v.saturated and v.summary.subsets_enumerated == 3**6


def test_scan_finds_verified_witness():
    lam = fundamental_weight(2, 7)
    v = check_all_subsets(weight_system(lam))
    assert not v.saturated
    assert verify_enss(v.witness, lam).ok
    assert v.witness.highest_weight == lam


def test_pruned_and_unpruned_agree_adjoint_three():
    M = weight_system(adjoint_weight(3))
    a = check_all_subsets(M)
    b = check_all_subsets(M, prune=False)
    assert a.saturated == b.saturated is True
    assert b.summary.subsets_enumerated == 2**7 and b.summary.pruned == 0
    assert a.summary.subsets_enumerated == 3**3


def test_subset_cap():
    M = weight_system(adjoint_weight(6))
    assert subset_count(M) == 3**15
    with pytest.raises(ResourceLimitError):
        check_all_subsets(M)
    with pytest.raises(ResourceLimitError):
        check_all_subsets(weight_system(adjoint_weight(3)), subset_cap=10)


def test_canonical_masks_are_orbit_minima():
    import numpy as np

    weights = list(weight_system(fundamental_weight(2, 4)))
    images = classifier._symmetry(weights)
    masks = np.arange(2 ** len(weights), dtype=np.int64)
    canon = classifier._canonical(masks, images, len(weights))
    for mask in range(2 ** len(weights)):
        orbit = {sum(1 << int(img[i]) for i in range(len(weights)) if mask >> i & 1) for img in images}
        assert canon[mask] == min(orbit)


def test_scan_deterministic_across_workers(monkeypatch):
    monkeypatch.setattr(classifier, "CHUNK", 16)
    M = weight_system(fundamental_weight(2, 7))
    one = check_all_subsets(M, workers=1)
    four = check_all_subsets(M, workers=4)
    assert one.witness == four.witness
    assert one.summary == four.summary
    M = weight_system(adjoint_weight(4))
    assert check_all_subsets(M, workers=1).summary == check_all_subsets(M, workers=3).summary


def test_progress_callback():
    seen = []
    check_all_subsets(weight_system(adjoint_weight(4)), progress=lambda d, t: seen.append((d, t)))
    assert seen and seen[-1][0] == seen[-1][1]


# -- audit -----------------------------------------------------------------------


def test_main_theorem_two():
    r = verify_main_theorem(2)
    assert r.ok
    cases = {(rec["lambda"], rec["verdict"]) for rec in r.records}
    assert ("3 0", "saturated") in cases and ("4 0", "saturated") in cases
    assert ("5 0", "not-saturated") in cases and ("6 0", "not-saturated") in cases


def test_main_theorem_eight_negatives():
    r = verify_main_theorem(8, subset_cap=10**5)
    assert r.ok
    neg = {(rec["n"], rec["lambda"]) for rec in r.records if rec["case"] == "fundamental"}
    for n, k in [(7, 2), (7, 3), (8, 2), (8, 3)]:
        assert (n, " ".join(["1"] * k + ["0"] * (n - k))) in neg
    for line in r.to_jsonl().splitlines():
        rec = json.loads(line)
        assert "wall_time_ms" not in rec
        assert list(rec)[:3] == ["n", "lambda", "case"]


def test_main_theorem_timings_opt_in():
    r = verify_main_theorem(3, timings=True)
    assert all("wall_time_ms" in rec for rec in r.records)
    with pytest.raises(InputError):
        verify_main_theorem(1)
