"""Build the ordered family of 2**(k+1) truncated GBF sequences.

Member sigma (bits ``s_1..s_{k+1}``, LSB first) is

    f + (q/2) * (s_1 x_{head(1)} + ... + s_k x_{head(k)} + s_{k+1} x_m)

where ``head(b)`` is the first index of block b.  Every member is cut to
``N = 2**(m-1) + 2**delta`` entries, and the family is a cross Z-complementary
set with ``Z = 2**(head(k)-1) + 2**delta``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence

from .gbf import (
    AffineOffset,
    ConstructionParams,
    OrderedPartition,
    partition_violations,
    sequence_from_function,
    truncate,
)
from .seqcore import DomainError, ZqSequence, bit_decompose


class FamilyShape(NamedTuple):
    M: int
    N: int
    Z: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.Z, self.N)


def prefix_condition(partition: OrderedPartition, delta: int) -> bool:
    """True when the first ``delta`` entries of block 1 are exactly ``{1..delta}``."""
    if delta == 0:
        return True
    if not partition.blocks or len(partition.blocks[0]) < delta:
        return False
    return set(partition.blocks[0][:delta]) == set(range(1, delta + 1))


def validate(params: ConstructionParams) -> list[str]:
    """Return every violated requirement; an empty list means the params are usable."""
    out = []
    m, q, delta = params.m, params.q, params.delta
    if m < 4:
        out.append(f"m must be >= 4, got {m}")
    if q < 2 or q % 2:
        out.append(f"q must be an even integer >= 2, got {q}")
    if m >= 2:
        out.extend(partition_violations(params.partition, m - 1))
    if not 0 <= delta < m - 1:
        out.append(f"delta must satisfy 0 <= delta < m-1 = {m - 1}, got {delta}")
    elif not prefix_condition(params.partition, delta):
        out.append(
            f"prefix condition fails: first {delta} entries of block 1 must be {{1..{delta}}}"
        )
    if len(params.lam) != m:
        out.append(f"lambda must have m = {m} entries, got {len(params.lam)}")
    elif q >= 2 and any(not 0 <= c < q for c in params.lam):
        out.append(f"lambda entries must lie in [0, {q})")
    return out


def _require_valid(params: ConstructionParams):
    problems = validate(params)
    if problems:
        raise DomainError("; ".join(problems))


def derived_params(params: ConstructionParams) -> FamilyShape:
    _require_valid(params)
    k = params.partition.k
    last_head = params.partition.blocks[-1][0]
    return FamilyShape(
        M=2 ** (k + 1),
        N=2 ** (params.m - 1) + 2 ** params.delta,
        Z=2 ** (last_head - 1) + 2 ** params.delta,
    )


def member_offset(params: ConstructionParams, sigma: int) -> AffineOffset:
    """The q/2-scaled linear offset that turns f into member ``sigma``."""
    m, k = params.m, params.partition.k
    bits = bit_decompose(sigma, k + 1)
    half = params.q // 2
    coeffs = [0] * m
    for b, head in enumerate(params.partition.heads()):
        coeffs[head - 1] += half * bits[b]
    coeffs[m - 1] += half * bits[k]
    return AffineOffset(tuple(coeffs), 0)


def build_full(params: ConstructionParams) -> list[ZqSequence]:
    """Untruncated length-``2**m`` members, in family order."""
    _require_valid(params)
    M = 2 ** (params.partition.k + 1)
    return [sequence_from_function(params, member_offset(params, s)) for s in range(M)]


@dataclass(frozen=True)
class CzcsFamily:
    params: ConstructionParams
    sequences: tuple[ZqSequence, ...]
    shape: FamilyShape

    def __len__(self):
        return len(self.sequences)

    def __iter__(self):
        return iter(self.sequences)

    def __getitem__(self, i):
        return self.sequences[i]


def build_set(params: ConstructionParams) -> CzcsFamily:
    shape = derived_params(params)
    seqs = tuple(truncate(s, shape.N) for s in build_full(params))
    return CzcsFamily(params, seqs, shape)


# ---------------------------------------------------------------------------
# enumeration

def ordered_set_partitions(items: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All ordered set partitions (block order significant, blocks as sorted tuples)."""
    items = sorted(items)
    if not items:
        yield ()
        return
    for size in range(1, len(items) + 1):
        for first in itertools.combinations(items, size):
            rest = [i for i in items if i not in first]
            for tail in ordered_set_partitions(rest):
                yield (first,) + tail


def ordered_partitions(n: int) -> list[OrderedPartition]:
    """Every ordered partition of ``{1..n}`` with every within-block ordering.

    Sorted by number of blocks, then lexicographically by blocks.  There are
    ``n! * 2**(n-1)`` of them.
    """
    out = []
    for osp in ordered_set_partitions(range(1, n + 1)):
        for perms in itertools.product(*(itertools.permutations(b) for b in osp)):
            out.append(OrderedPartition(perms))
    out.sort(key=lambda p: (p.k, p.blocks))
    return out


def enumerate_params(
    m: int,
    q: int,
    delta_filter: Iterable[int] | None = None,
    lambda_set: Iterable[Sequence[int]] | None = None,
) -> Iterator[ConstructionParams]:
    if m < 4 or q < 2 or q % 2:
        raise DomainError(f"need m >= 4 and even q >= 2, got m={m}, q={q}")
    deltas = range(m - 1) if delta_filter is None else sorted(set(delta_filter))
    lams = [tuple(l) for l in lambda_set] if lambda_set is not None else [(0,) * m]
    for part in ordered_partitions(m - 1):
        for delta in deltas:
            if not 0 <= delta < m - 1 or not prefix_condition(part, delta):
                continue
            for lam in lams:
                yield ConstructionParams(m, q, delta, part, lam)
