"""Generalized Boolean functions of the quadratic-path form and their sequences.

Variables are numbered 1..m.  A GBF ``f: {0,1}^m -> Z_q`` becomes the length
``2**m`` sequence whose r-th entry is ``f`` at the LSB-first bits of r.

The quadratic part is built from an ordered partition of ``{1, ..., m-1}``:
each block is a path ``x_{p1} x_{p2} + x_{p2} x_{p3} + ...`` scaled by q/2.
The full function switches on ``x_m``: the reflected quadratic (evaluated at
the complemented bits) when ``x_m = 0`` and the plain one when ``x_m = 1``,
plus an affine part ``sum lambda_l x_l + lambda_0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .seqcore import DomainError, ZqSequence, bit_decompose


@dataclass(frozen=True)
class OrderedPartition:
    """Ordered blocks of distinct variable indices.

    ``blocks[b][g]`` is the (g+1)-th vertex of path b+1, so the first entry of
    each block is the variable that receives the q/2 offsets.  No invariants
    are enforced here; see :func:`partition_violations`.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(int(i) for i in b) for b in self.blocks))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def heads(self) -> tuple[int, ...]:
        return tuple(b[0] for b in self.blocks if b)

    def to_lists(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    def __str__(self):
        return "|".join(" ".join(map(str, b)) for b in self.blocks)


def partition_violations(partition: OrderedPartition, n: int) -> list[str]:
    """Reasons ``partition`` is not an ordered partition of ``{1, ..., n}``."""
    out = []
    if not 1 <= partition.k <= max(n, 1):
        out.append(f"partition must have between 1 and {n} blocks, got {partition.k}")
    seen: dict[int, int] = {}
    for b, block in enumerate(partition.blocks, start=1):
        if not block:
            out.append(f"block {b} is empty")
        for i in block:
            if not 1 <= i <= n:
                out.append(f"index {i} in block {b} is outside 1..{n}")
            elif i in seen:
                out.append(f"index {i} appears in blocks {seen[i]} and {b}")
            else:
                seen[i] = b
    missing = sorted(set(range(1, n + 1)) - set(seen))
    if missing:
        out.append(f"partition does not cover indices {missing}")
    return out


@dataclass(frozen=True)
class ConstructionParams:
    """Everything that determines one constructed family.

    ``lam[0]`` is the constant term and ``lam[l]`` the coefficient of ``x_l``
    for ``l = 1..m-1``.  Validity is checked by ``construct.validate``.
    """

    m: int
    q: int
    delta: int
    partition: OrderedPartition
    lam: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.partition, OrderedPartition):
            object.__setattr__(self, "partition", OrderedPartition(self.partition))
        lam = tuple(int(x) for x in self.lam) if self.lam else (0,) * self.m
        object.__setattr__(self, "lam", lam)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "q": self.q,
            "delta": self.delta,
            "partition": self.partition.to_lists(),
            "lambda": list(self.lam),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ConstructionParams":
        try:
            m = int(obj["m"])
            return cls(
                m=m,
                q=int(obj["q"]),
                delta=int(obj["delta"]),
                partition=OrderedPartition(obj["partition"]),
                lam=tuple(obj.get("lambda") or (0,) * m),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed parameter object: {exc}") from exc


class AffineOffset(NamedTuple):
    """Linear GBF ``sum coeffs[i-1] * x_i + const``."""

    coeffs: tuple[int, ...]
    const: int = 0

    @classmethod
    def zero(cls, m: int) -> "AffineOffset":
        return cls((0,) * m, 0)

    @classmethod
    def single(cls, m: int, var: int, c: int) -> "AffineOffset":
        coeffs = [0] * m
        coeffs[var - 1] = c
        return cls(tuple(coeffs), 0)

    def __add__(self, other):  # type: ignore[override]
        return AffineOffset(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                            self.const + other.const)


def eval_g(partition: OrderedPartition, x: Sequence[int], q: int) -> int:
    """Quadratic path form at ``x`` (bits of variables 1..m-1)."""
    n = len(x)
    if any(i > n for b in partition.blocks for i in b):
        raise DomainError(f"partition references a variable beyond the {n} supplied bits")
    total = 0
    for block in partition.blocks:
        for a, b in zip(block, block[1:]):
            total += x[a - 1] * x[b - 1]
    return (q // 2) * total % q


def eval_g_reflected(partition: OrderedPartition, x: Sequence[int], q: int) -> int:
    return eval_g(partition, [1 - b for b in x], q)


def _affine(lam: Sequence[int], x: Sequence[int]) -> int:
    return lam[0] + sum(lam[l] * x[l - 1] for l in range(1, len(lam)))


def eval_f(params: ConstructionParams, x: Sequence[int]) -> int:
    m, q = params.m, params.q
    if len(x) != m:
        raise DomainError(f"expected {m} bits, got {len(x)}")
    head = x[: m - 1]
    quad = eval_g(params.partition, head, q) if x[m - 1] else eval_g_reflected(params.partition, head, q)
    return (quad + _affine(params.lam, head)) % q


def eval_h(params: ConstructionParams, x: Sequence[int]) -> int:
    """``g + sum lambda_l x_l + lambda_0`` on the first m-1 variables."""
    if len(x) != params.m - 1:
        raise DomainError(f"expected {params.m - 1} bits, got {len(x)}")
    return (eval_g(params.partition, x, params.q) + _affine(params.lam, x)) % params.q


def sequence_from_function(params: ConstructionParams, offset: AffineOffset | None = None) -> ZqSequence:
    """Full length-``2**m`` sequence of ``f + offset``."""
    m = params.m
    if offset is None:
        offset = AffineOffset.zero(m)
    if len(offset.coeffs) != m:
        raise DomainError(f"offset needs {m} coefficients, got {len(offset.coeffs)}")
    vals = []
    for r in range(1 << m):
        x = bit_decompose(r, m)
        lin = offset.const + sum(c * b for c, b in zip(offset.coeffs, x))
        vals.append(eval_f(params, x) + lin)
    return ZqSequence.reduce(vals, params.q)


def truncate(s: ZqSequence, length: int) -> ZqSequence:
    if not 1 <= length <= len(s):
        raise DomainError(f"truncation length {length} outside 1..{len(s)}")
    return ZqSequence(s.q, s.values[:length])
