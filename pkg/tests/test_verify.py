import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from czcs.construct import build_set, enumerate_params, validate
from czcs.gbf import ConstructionParams
from czcs.seqcore import DomainError, ZqSequence
from czcs.verify import (
    aacs,
    accs_adjacent,
    c1_from_positive_shifts,
    cs_pairing_check,
    is_golay_pair,
    lemma1_check,
    lemma2_check,
    lemma3_check,
    lemma4_check,
    max_zcz_width,
    tail_cross_check,
    verify_cs,
    verify_czcp,
    verify_czcs,
    verify_zcp,
)

from conftest import example_params, float_accf


def float_sums(seqs, q):
    """Brute-force set sums for every shift, as complex floats."""
    n, M = len(seqs[0]), len(seqs)
    auto = {t: sum(float_accf(s, s, t, q) for s in seqs) for t in range(-n + 1, n)}
    cross = {t: sum(float_accf(seqs[i], seqs[(i + 1) % M], t, q) for i in range(M))
             for t in range(-n + 1, n)}
    return auto, cross


def float_max_zcz(seqs, q):
    n = len(seqs[0])
    auto, cross = float_sums(seqs, q)
    for Z in range(n - 1, 0, -1):
        z1 = set(range(1, Z + 1)) | set(range(n - Z, n))
        z2 = set(range(n - Z, n))
        if all(abs(auto[s * t]) < 1e-9 for t in z1 for s in (1, -1)) and \
           all(abs(cross[s * t]) < 1e-9 for t in z2 for s in (1, -1)):
            return Z
    return 0


@pytest.fixture(scope="module")
def fam3():
    return build_set(example_params(3)).sequences


def test_aacs_examples(fam3):
    assert aacs(fam3, 0) == 192
    assert all(aacs(fam3, t).is_zero() for t in range(1, 24))
    u = fam3[0]
    assert aacs([u], 0) == 24


def test_accs_examples(fam3):
    # tabulated with the reversed shift direction
    assert accs_adjacent(fam3, -5) == 36
    assert accs_adjacent(fam3, -2) == -8
    assert all(accs_adjacent(fam3, -t).is_zero() for t in range(8, 24))
    _, cross = float_sums([s.values for s in fam3], 4)
    for t in range(-23, 24):
        assert abs(accs_adjacent(fam3, t).to_complex() - cross[t]) < 1e-9
    assert accs_adjacent(fam3, 5) == -36


def test_mixed_sets_rejected():
    with pytest.raises(DomainError):
        aacs([ZqSequence(4, (0, 1)), ZqSequence(4, (0,))], 0)
    with pytest.raises(DomainError):
        aacs([], 0)
    with pytest.raises(DomainError):
        accs_adjacent([ZqSequence(4, (0, 1)), ZqSequence(2, (0, 1))], 0)


def test_verify_czcs_examples(fam3):
    assert verify_czcs(fam3, 16).passed
    fam2 = build_set(example_params(2)).sequences
    assert verify_czcs(fam2, 12).passed
    r = verify_czcs(fam3, 17)
    assert r.c1_ok and not r.c2_ok
    assert ("C2", 7) in r.failing_shifts and ("C2", -7) in r.failing_shifts
    with pytest.raises(DomainError):
        verify_czcs(fam3, 24)
    with pytest.raises(DomainError):
        verify_czcs(fam3, -1)


def test_report_dict(fam3):
    d = verify_czcs(fam3, 16).to_dict()
    assert d == {"M": 8, "N": 24, "tested_Z": 16, "c1_ok": True, "c2_ok": True, "cs_ok": True,
                 "max_zcz": 16, "zcz_ratio": "2/3", "failing_shifts": []}


def test_max_zcz_examples(fam3):
    assert max_zcz_width(fam3) == 16
    assert max_zcz_width(build_set(example_params(0)).sequences) >= 9
    zero = ZqSequence(4, (0, 0))
    assert max_zcz_width([zero, zero]) == 0


def test_max_zcz_against_float_oracle():
    rng = random.Random(7)
    for _ in range(25):
        q = rng.choice([2, 4])
        n = rng.randint(2, 7)
        M = rng.randint(2, 4)
        raw = [[rng.randrange(q) for _ in range(n)] for _ in range(M)]
        seqs = [ZqSequence(q, r) for r in raw]
        assert max_zcz_width(seqs) == float_max_zcz(raw, q)
    for delta in range(4):
        fam = build_set(example_params(delta)).sequences
        assert max_zcz_width(fam) == float_max_zcz([s.values for s in fam], 4)


def test_verify_cs_examples(fam3):
    assert verify_cs(fam3)
    assert verify_cs(build_set(example_params(1)).sequences)
    assert not verify_cs([ZqSequence(4, (0, 1, 2))])


def test_verify_zcp_examples():
    u, v = ZqSequence(4, (0, 0, 0, 2)), ZqSequence(4, (0, 0, 2, 0))
    auto = [float_accf(u.values, u.values, t, 4) + float_accf(v.values, v.values, t, 4) for t in range(1, 4)]
    assert all(abs(a) < 1e-9 for a in auto)
    assert verify_zcp(u, v, 4) and is_golay_pair(u, v)
    z = ZqSequence(4, (0, 0))
    assert not verify_zcp(z, z, 2)
    assert verify_zcp(ZqSequence(4, (1, 3, 0)), ZqSequence(4, (2, 2, 1)), 1)
    with pytest.raises(DomainError):
        verify_zcp(u, ZqSequence(4, (0, 0)), 1)


def test_verify_czcp_examples(fam3):
    assert verify_czcp(ZqSequence(4, (1, 3, 0)), ZqSequence(4, (2, 2, 1)), 0).passed
    r = verify_czcp(fam3[0], fam3[1], 16)
    assert (r.M, r.N, r.tested_Z) == (2, 24, 16)
    auto, _ = float_sums([fam3[0].values, fam3[1].values], 4)
    assert r.c1_ok == all(abs(auto[t]) < 1e-9 for t in set(range(1, 17)) | set(range(8, 24)))
    u = ZqSequence(4, (0, 1, 3, 2))
    r2 = verify_czcp(u, u, 1)
    assert not r2.c1_ok and ("C1", 3) in r2.failing_shifts


def test_negative_shift_consistency():
    for p in list(enumerate_params(5, 4))[::11]:
        fam = build_set(p)
        for Z in (0, 1, fam.shape.Z, fam.shape.N - 1):
            assert verify_czcs(fam.sequences, Z).c1_ok == c1_from_positive_shifts(fam.sequences, Z)
        for t in range(1, fam.shape.N):
            assert aacs(fam.sequences, -t).counts == aacs(fam.sequences, t).conjugate().counts


@st.composite
def small_sets(draw):
    q = draw(st.sampled_from([2, 4]))
    n = draw(st.integers(2, 8))
    M = draw(st.integers(1, 4))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=M, max_size=M))
    return [ZqSequence(q, r) for r in rows]


@given(small_sets())
@settings(max_examples=150, deadline=None)
def test_monotone_and_cs_implies_c1(seqs):
    n = len(seqs[0])
    best = max_zcz_width(seqs)
    for Z in range(n):
        assert verify_czcs(seqs, Z).passed == (Z <= best or Z == 0)
    if verify_cs(seqs):
        assert all(verify_czcs(seqs, Z).c1_ok for Z in range(n))
    assert aacs(seqs, 0) == len(seqs) * n


def test_q6_and_q8_families_pass():
    for q in (6, 8):
        for blocks in ([[1, 2, 3], [4]], [[2, 3], [1, 4]], [[1], [3, 2], [4]]):
            for delta in range(4):
                p = ConstructionParams(5, q, delta, blocks)
                if validate(p):
                    continue
                fam = build_set(p)
                r = verify_czcs(fam.sequences, fam.shape.Z)
                assert r.passed and r.cs_ok


# ---------------------------------------------------------------------------
# oracles

def test_lemma1_examples():
    r, s = 1, 5
    assert (r & 3) == (s & 3) and s - r == 4
    assert lemma1_check(4, 2)
    assert lemma1_check(5, 1)
    assert lemma1_check(10, 4)
    with pytest.raises(DomainError):
        lemma1_check(4, 0)


def test_lemma2_examples():
    assert 16 <= (16 ^ 1) < 24
    assert lemma2_check(5, 3)
    assert lemma2_check(8, 5)
    with pytest.raises(DomainError):
        lemma2_check(5, 5)


def test_lemma3_examples():
    assert lemma3_check(example_params(3))
    assert lemma3_check(ConstructionParams(4, 2, 0, [[1, 2, 3]]))
    assert lemma3_check(ConstructionParams(4, 4, 0, [[3], [1, 2]]))


def test_lemma4_examples():
    out = lemma4_check(example_params(3))
    assert out.ok and out.checked > 0
    rng = random.Random(3)
    lam = tuple(rng.randrange(2) for _ in range(4))
    assert lemma4_check(ConstructionParams(4, 2, 0, [[1, 2, 3]], lam))
    assert lemma4_check(ConstructionParams(4, 6, 0, [[2, 3], [1]]))


def test_lemma4_detects_broken_function():
    # a q/2 coefficient that is not a path breaks the second-difference identity
    import czcs.verify as v

    p = ConstructionParams(4, 4, 0, [[1, 2, 3]])
    original = v.eval_h
    try:
        v.eval_h = lambda params, x: (original(params, x) + 2 * x[0] * x[2]) % 4
        assert not lemma4_check(p)
    finally:
        v.eval_h = original


def test_lemma_sweeps():
    for m in range(2, 10):
        for d in range(1, m):
            assert lemma1_check(m, d)
            assert lemma2_check(m, d)


def test_pairing_oracles_on_example():
    for delta in range(4):
        p = example_params(delta)
        assert cs_pairing_check(p)
        assert tail_cross_check(p)
