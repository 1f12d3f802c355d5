"""Exact verification of complementary-set and cross Z-complementary properties.

An ordered set ``a_0 .. a_{M-1}`` of length-N sequences is an (M, N, Z) CZCS when

* C1: the autocorrelation sum vanishes for every ``|tau|`` in ``T1 | T2``, and
* C2: the adjacent cross-correlation sum ``sum_i C(a_i, a_{i+1})`` (indices mod
  M) vanishes for every ``|tau|`` in ``T2``,

with ``T1 = {1..Z}`` and ``T2 = {N-Z..N-1}``.  Both signs of tau are evaluated
directly; nothing is inferred from symmetry.

The ``lemma*_check`` functions are brute-force oracles for the combinatorial
facts the construction relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .construct import build_full, build_set, validate
from .gbf import ConstructionParams, eval_h
from .seqcore import (
    CorrelationProfile,
    CorrelationValue,
    DomainError,
    ZqSequence,
    accf,
    bit_decompose,
    profile,
)


def _as_list(seqs: Iterable[ZqSequence]) -> list[ZqSequence]:
    seqs = list(seqs)
    if not seqs:
        raise DomainError("sequence set is empty")
    q, n = seqs[0].q, len(seqs[0])
    for i, s in enumerate(seqs):
        if s.q != q:
            raise DomainError(f"sequence {i} has modulus {s.q}, expected {q}")
        if len(s) != n:
            raise DomainError(f"sequence {i} has length {len(s)}, expected {n}")
    return seqs


def aacs(seqs: Iterable[ZqSequence], tau: int) -> CorrelationValue:
    seqs = _as_list(seqs)
    total = CorrelationValue.zero(seqs[0].q)
    for s in seqs:
        total = total + accf(s, s, tau)
    return total


def accs_adjacent(seqs: Iterable[ZqSequence], tau: int) -> CorrelationValue:
    """Cyclic adjacent cross-correlation sum; ``a_M`` wraps to ``a_0``."""
    seqs = _as_list(seqs)
    M = len(seqs)
    total = CorrelationValue.zero(seqs[0].q)
    for i in range(M):
        total = total + accf(seqs[i], seqs[(i + 1) % M], tau)
    return total


def aacs_profile(seqs: Iterable[ZqSequence]) -> CorrelationProfile:
    seqs = _as_list(seqs)
    out = profile(seqs[0], seqs[0])
    for s in seqs[1:]:
        out = out + profile(s, s)
    return out


def accs_profile(seqs: Iterable[ZqSequence]) -> CorrelationProfile:
    seqs = _as_list(seqs)
    M = len(seqs)
    out = profile(seqs[0], seqs[1 % M])
    for i in range(1, M):
        out = out + profile(seqs[i], seqs[(i + 1) % M])
    return out


# ---------------------------------------------------------------------------
# reports

@dataclass
class VerificationReport:
    M: int
    N: int
    tested_Z: int
    c1_ok: bool
    c2_ok: bool
    cs_ok: bool
    max_zcz: int
    failing_shifts: list[tuple[str, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.c1_ok and self.c2_ok

    @property
    def zcz_ratio(self) -> Fraction:
        return Fraction(self.max_zcz, self.N)

    def to_dict(self) -> dict:
        r = self.zcz_ratio
        return {
            "M": self.M,
            "N": self.N,
            "tested_Z": self.tested_Z,
            "c1_ok": self.c1_ok,
            "c2_ok": self.c2_ok,
            "cs_ok": self.cs_ok,
            "max_zcz": self.max_zcz,
            "zcz_ratio": f"{r.numerator}/{r.denominator}",
            "failing_shifts": [{"cond": c, "tau": t} for c, t in self.failing_shifts],
        }


class _ZeroTable:
    """Exact zero flags of the set-level sums for every shift."""

    def __init__(self, seqs: list[ZqSequence]):
        self.N = len(seqs[0])
        self.auto = aacs_profile(seqs)
        self.cross = accs_profile(seqs)
        self.auto_zero = {t: v.is_zero() for t, v in self.auto.items()}
        self.cross_zero = {t: v.is_zero() for t, v in self.cross.items()}

    def failures(self, Z: int) -> list[tuple[str, int]]:
        N = self.N
        zone1 = set(range(1, Z + 1)) if Z else set()
        zone2 = set(range(N - Z, N)) if Z else set()
        out = []
        for t in sorted(zone1 | zone2):
            for s in (t, -t):
                if not self.auto_zero[s]:
                    out.append(("C1", s))
        for t in sorted(zone2):
            for s in (t, -t):
                if not self.cross_zero[s]:
                    out.append(("C2", s))
        return out

    def cs_ok(self) -> bool:
        return all(self.auto_zero[t] for t in range(1, self.N))

    def max_zcz(self) -> int:
        for Z in range(self.N - 1, 0, -1):
            if not self.failures(Z):
                return Z
        return 0


def verify_czcs(seqs: Iterable[ZqSequence], Z: int) -> VerificationReport:
    seqs = _as_list(seqs)
    N = len(seqs[0])
    if not 0 <= Z <= N - 1:
        raise DomainError(f"ZCZ width {Z} outside 0..{N - 1}")
    table = _ZeroTable(seqs)
    fails = table.failures(Z)
    return VerificationReport(
        M=len(seqs),
        N=N,
        tested_Z=Z,
        c1_ok=not any(c == "C1" for c, _ in fails),
        c2_ok=not any(c == "C2" for c, _ in fails),
        cs_ok=table.cs_ok(),
        max_zcz=table.max_zcz(),
        failing_shifts=fails,
    )


def c1_from_positive_shifts(seqs: Iterable[ZqSequence], Z: int) -> bool:
    """C1 decided from ``tau > 0`` only, taking negative shifts as conjugates.

    Independent of :func:`verify_czcs`, which evaluates both signs.
    """
    seqs = _as_list(seqs)
    N = len(seqs[0])
    zone = set(range(1, Z + 1)) | set(range(N - Z, N)) if Z else set()
    for t in zone:
        v = aacs(seqs, t)
        if not v.is_zero() or not v.conjugate().is_zero():
            return False
    return True


def max_zcz_width(seqs: Iterable[ZqSequence]) -> int:
    return _ZeroTable(_as_list(seqs)).max_zcz()


def verify_cs(seqs: Iterable[ZqSequence]) -> bool:
    seqs = _as_list(seqs)
    return all(aacs(seqs, t).is_zero() for t in range(1, len(seqs[0])))


def verify_zcp(u: ZqSequence, v: ZqSequence, Z: int) -> bool:
    """Autocorrelation sum of the pair vanishes for ``0 < tau < Z``; ``Z = N`` means Golay."""
    seqs = _as_list([u, v])
    N = len(u)
    if not 0 <= Z <= N:
        raise DomainError(f"ZCZ width {Z} outside 0..{N}")
    return all(aacs(seqs, t).is_zero() for t in range(1, Z))


def is_golay_pair(u: ZqSequence, v: ZqSequence) -> bool:
    return verify_zcp(u, v, len(u))


def verify_czcp(u: ZqSequence, v: ZqSequence, Z: int) -> VerificationReport:
    return verify_czcs([u, v], Z)


def verify_params(params: ConstructionParams) -> VerificationReport:
    """Build the family for ``params`` and verify it at its predicted width."""
    fam = build_set(params)
    return verify_czcs(fam.sequences, fam.shape.Z)


# ---------------------------------------------------------------------------
# brute-force oracles

@dataclass
class LemmaOutcome:
    ok: bool
    checked: int
    skipped: int = 0
    first_failure: tuple | None = None

    def __bool__(self):
        return self.ok


@lru_cache(maxsize=None)
def _cancels(a: int, b: int, q: int) -> bool:
    # w**a + w**b == 0, decided exactly
    return CorrelationValue.from_exponents((a, b), q).is_zero()


def lemma1_check(m: int, delta: int) -> bool:
    """Integers agreeing on their lowest ``delta`` bits are at least ``2**delta`` apart."""
    if not 1 <= delta <= m - 1:
        raise DomainError(f"need 1 <= delta <= m-1, got m={m}, delta={delta}")
    size = 1 << m
    low = [bit_decompose(r, m)[:delta] for r in range(size)]
    for r in range(size):
        for s in range(r + 1, size):
            if low[s] == low[r] and s < r + (1 << delta):
                return False
    return True


def lemma2_check(m: int, delta: int) -> bool:
    """Flipping one of the lowest ``delta`` bits keeps r in ``[2**(m-1), 2**(m-1)+2**delta)``."""
    if m < 2 or not 1 <= delta <= m - 1:
        raise DomainError(f"need m >= 2 and 1 <= delta <= m-1, got m={m}, delta={delta}")
    lo, hi = 1 << (m - 1), (1 << (m - 1)) + (1 << delta)
    for r in range(lo, hi):
        bits = list(bit_decompose(r, m))
        for alpha in range(1, delta + 1):
            flipped = bits.copy()
            flipped[alpha - 1] ^= 1
            r2 = sum(b << i for i, b in enumerate(flipped))
            if not lo <= r2 < hi:
                return False
    return True


def _require_valid(params: ConstructionParams):
    problems = validate(params)
    if problems:
        raise DomainError("; ".join(problems))


def lemma3_check(params: ConstructionParams) -> LemmaOutcome:
    """For r, s differing at a block head (or at x_m), toggling that variable
    in a member yields another member whose term cancels the original's."""
    _require_valid(params)
    m, q = params.m, params.q
    full = [s.values for s in build_full(params)]
    members = set(full)
    half = q // 2
    positions = list(params.partition.heads()) + [m]
    size = 1 << m
    bits = [bit_decompose(r, m) for r in range(size)]
    toggled = {}
    for sig, a in enumerate(full):
        for p in positions:
            toggled[sig, p] = tuple((a[r] + half * bits[r][p - 1]) % q for r in range(size))
    checked = 0
    for sig, a in enumerate(full):
        for p in positions:
            a2 = toggled[sig, p]
            if a2 not in members:
                return LemmaOutcome(False, checked, 0, (sig, p, "toggled member missing"))
            for r in range(size):
                for s in range(r + 1, size):
                    if bits[r][p - 1] == bits[s][p - 1]:
                        continue
                    checked += 1
                    if not _cancels(a[r] - a[s], a2[r] - a2[s], q):
                        return LemmaOutcome(False, checked, 0, (sig, p, r, s))
    return LemmaOutcome(True, checked)


def _first_split(params: ConstructionParams, rb: Sequence[int], sb: Sequence[int]):
    """First block where r and s disagree and the first disagreeing position in it."""
    for block in params.partition.blocks:
        for g, idx in enumerate(block, start=1):
            if rb[idx - 1] != sb[idx - 1]:
                return block, g
    return None, None


def lemma4_check(params: ConstructionParams) -> LemmaOutcome:
    """Second difference of h across the flip before the first disagreement is q/2.

    Pairs whose first disagreement sits at a block head have no preceding
    position; they are counted in ``skipped``.
    """
    _require_valid(params)
    n, q = params.m - 1, params.q
    heads = params.partition.heads()
    size = 1 << n
    bits = [bit_decompose(r, n) for r in range(size)]
    h = [eval_h(params, b) for b in bits]
    checked = skipped = 0
    for r in range(size):
        rb = bits[r]
        for s in range(size):
            sb = bits[s]
            if r == s or any(rb[i - 1] != sb[i - 1] for i in heads):
                continue
            block, g = _first_split(params, rb, sb)
            if g == 1:
                skipped += 1
                continue
            flip = 1 << (block[g - 2] - 1)
            r2, s2 = r ^ flip, s ^ flip
            checked += 1
            if (h[r] - h[s] - h[r2] + h[s2]) % q != q // 2:
                return LemmaOutcome(False, checked, skipped, (r, s))
    return LemmaOutcome(True, checked, skipped)


def cs_pairing_check(params: ConstructionParams) -> LemmaOutcome:
    """Term-level cancellation behind the complementary-set property.

    For every shift tau and index pair (r, s = r + tau) inside the truncated
    length: if r and s differ at a block head or at x_m, the sum over members
    of ``w**(a_r - a_s)`` vanishes on its own; otherwise flipping both indices
    at the position just before their first disagreement gives a partner pair
    that stays in range and cancels member by member.
    """
    fam = build_set(params)
    m, q = params.m, params.q
    N = fam.shape.N
    A = [s.values for s in fam]
    heads = params.partition.heads()
    checked = 0
    for tau in range(1, N):
        for r in range(N - tau):
            s = r + tau
            rb, sb = bit_decompose(r, m), bit_decompose(s, m)
            checked += 1
            if rb[m - 1] != sb[m - 1] or any(rb[i - 1] != sb[i - 1] for i in heads):
                total = CorrelationValue.from_exponents((a[r] - a[s] for a in A), q)
                if not total.is_zero():
                    return LemmaOutcome(False, checked, 0, (tau, r, "split"))
                continue
            block, g = _first_split(params, rb[: m - 1], sb[: m - 1])
            flip = 1 << (block[g - 2] - 1)
            r2, s2 = r ^ flip, s ^ flip
            if s2 - r2 != tau or s2 >= N:
                return LemmaOutcome(False, checked, 0, (tau, r, "partner out of range"))
            for a in A:
                if not _cancels(a[r] - a[s], a[r2] - a[s2], q):
                    return LemmaOutcome(False, checked, 0, (tau, r, "no cancellation"))
    return LemmaOutcome(True, checked)


def tail_cross_check(params: ConstructionParams) -> LemmaOutcome:
    """Term-level vanishing of the adjacent cross sum on the tail zone.

    For ``tau >= N - Z`` and every in-range pair (r, r + tau), the sum over
    members of ``w**(a_sigma[r] - a_{sigma+1}[r + tau])`` is zero.  Pairs that
    agree at both the last block head and x_m only occur at ``tau = N - Z``.
    """
    fam = build_set(params)
    m, q = params.m, params.q
    M, N, Z = fam.shape
    A = [s.values for s in fam]
    last_head = params.partition.blocks[-1][0]
    checked = 0
    for tau in range(N - Z, N):
        for r in range(N - tau):
            s = r + tau
            checked += 1
            rb, sb = bit_decompose(r, m), bit_decompose(s, m)
            if rb[last_head - 1] == sb[last_head - 1] and rb[m - 1] == sb[m - 1] and tau != N - Z:
                return LemmaOutcome(False, checked, 0, (tau, r, "unexpected agreement"))
            total = CorrelationValue.from_exponents(
                (A[i][r] - A[(i + 1) % M][s] for i in range(M)), q)
            if not total.is_zero():
                return LemmaOutcome(False, checked, 0, (tau, r, "nonzero"))
    return LemmaOutcome(True, checked)
