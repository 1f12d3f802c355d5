"""Residue sequences over Z_q and exact aperiodic correlation arithmetic.

Correlation values are sums of q-th roots of unity.  They are stored as
exponent-count vectors ``(n_0, ..., n_{q-1})`` meaning ``sum n_j * w**j`` with
``w = exp(2*pi*i/q)`` and are compared by reducing modulo the q-th cyclotomic
polynomial, so zero tests never depend on a floating point threshold.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class DomainError(ValueError):
    """Raised when an argument falls outside an operation's domain."""


# ---------------------------------------------------------------------------
# bit conventions

def bit_decompose(r: int, m: int) -> tuple[int, ...]:
    """Return ``(r_1, ..., r_m)`` with ``r = sum r_i 2**(i-1)`` (r_1 is the LSB)."""
    if m < 0 or not 0 <= r < (1 << m):
        raise DomainError(f"integer {r} does not fit in {m} bits")
    return tuple((r >> i) & 1 for i in range(m))


def bits_to_int(bits: Iterable[int]) -> int:
    r = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise DomainError(f"bit {i + 1} has value {b}, expected 0 or 1")
        r |= b << i
    return r


# ---------------------------------------------------------------------------
# cyclotomic polynomials

def _poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    # coefficient lists are lowest degree first; den must be monic
    num = list(num)
    dd = len(den) - 1
    if den[-1] != 1:
        raise DomainError("divisor must be monic")
    if len(num) <= dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return quot, num[:dd]


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(q: int) -> tuple[int, ...]:
    """Coefficients of the q-th cyclotomic polynomial, lowest degree first.

    Computed as ``(x**q - 1) / prod(Phi_d for proper divisors d of q)`` with
    exact integer division.

    >>> cyclotomic_poly(6)
    (1, -1, 1)
    """
    if q < 1:
        raise DomainError(f"cyclotomic index must be >= 1, got {q}")
    xq_minus_1 = [-1] + [0] * (q - 1) + [1]
    den = [1]
    for d in range(1, q):
        if q % d == 0:
            den = _poly_mul(den, cyclotomic_poly(d))
    quot, rem = _poly_divmod(xq_minus_1, den)
    if any(rem):
        raise ArithmeticError(f"inexact division computing Phi_{q}")
    return tuple(quot)


# ---------------------------------------------------------------------------
# values

@dataclass(frozen=True, eq=False)
class CorrelationValue:
    """Exact element of Z[w], ``sum counts[j] * w**j``."""

    q: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.q < 1:
            raise DomainError(f"modulus must be >= 1, got {self.q}")
        if len(self.counts) != self.q:
            raise DomainError(f"expected {self.q} counts, got {len(self.counts)}")

    @classmethod
    def zero(cls, q: int) -> "CorrelationValue":
        return cls(q, (0,) * q)

    @classmethod
    def from_int(cls, n: int, q: int) -> "CorrelationValue":
        return cls(q, (n,) + (0,) * (q - 1))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int], q: int) -> "CorrelationValue":
        counts = [0] * q
        for e in exponents:
            counts[e % q] += 1
        return cls(q, tuple(counts))

    def reduced(self) -> tuple[int, ...]:
        """Canonical coordinates in the basis ``1, w, ..., w**(phi(q)-1)``."""
        phi = cyclotomic_poly(self.q)
        _, rem = _poly_divmod(self.counts, phi)
        rem = list(rem) + [0] * (len(phi) - 1 - len(rem))
        return tuple(rem)

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def conjugate(self) -> "CorrelationValue":
        q = self.q
        return CorrelationValue(q, tuple(self.counts[(q - j) % q] for j in range(q)))

    def to_complex(self) -> complex:
        q = self.q
        return sum(n * cmath.exp(2j * cmath.pi * j / q) for j, n in enumerate(self.counts) if n) + 0j

    def to_int(self) -> int:
        """Return the value as an integer, or raise if it is not a rational integer."""
        red = self.reduced()
        if any(red[1:]):
            raise ValueError(f"value {self.to_complex():.6g} is not an integer")
        return red[0]

    def _coerce(self, other) -> "CorrelationValue":
        if isinstance(other, CorrelationValue):
            if other.q != self.q:
                raise DomainError(f"moduli differ: {self.q} vs {other.q}")
            return other
        if isinstance(other, int):
            return CorrelationValue.from_int(other, self.q)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CorrelationValue(self.q, tuple(a + b for a, b in zip(self.counts, other.counts)))

    __radd__ = __add__

    def __neg__(self):
        return CorrelationValue(self.q, tuple(-a for a in self.counts))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.q, self.reduced()))

    def __repr__(self):
        return f"CorrelationValue(q={self.q}, counts={self.counts})"


def is_zero(x: CorrelationValue) -> bool:
    return x.is_zero()


# ---------------------------------------------------------------------------
# sequences

@dataclass(frozen=True)
class ZqSequence:
    """Finite sequence of phases, each a residue modulo an even ``q``."""

    q: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.q < 2 or self.q % 2:
            raise DomainError(f"modulus must be an even integer >= 2, got {self.q}")
        if not self.values:
            raise DomainError("sequence must be non-empty")
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        for i, v in enumerate(self.values):
            if not 0 <= v < self.q:
                raise DomainError(f"entry {i} = {v} is outside [0, {self.q})")

    @classmethod
    def reduce(cls, values: Iterable[int], q: int) -> "ZqSequence":
        """Build a sequence from arbitrary integers, reducing each modulo q."""
        return cls(q, tuple(v % q for v in values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def shift_phase(self, c: int) -> "ZqSequence":
        return ZqSequence.reduce((v + c for v in self.values), self.q)

    def to_complex(self) -> list[complex]:
        return [cmath.exp(2j * cmath.pi * v / self.q) for v in self.values]


def _check_pair(u: ZqSequence, v: ZqSequence):
    if u.q != v.q:
        raise DomainError(f"moduli differ: {u.q} vs {v.q}")
    if len(u) != len(v):
        raise DomainError(f"lengths differ: {len(u)} vs {len(v)}")


def accf(u: ZqSequence, v: ZqSequence, tau: int) -> CorrelationValue:
    """Aperiodic cross-correlation ``C(u, v)(tau)``.

    For ``tau >= 0`` this is ``sum_i w**(u_i - v_{i+tau})``, for ``tau < 0``
    ``sum_i w**(u_{i-tau} - v_i)``, and zero once ``|tau| >= N``.
    """
    _check_pair(u, v)
    q, n = u.q, len(u)
    counts = [0] * q
    a, b = u.values, v.values
    if 0 <= tau < n:
        for i in range(n - tau):
            counts[(a[i] - b[i + tau]) % q] += 1
    elif -n < tau < 0:
        for i in range(n + tau):
            counts[(a[i - tau] - b[i]) % q] += 1
    return CorrelationValue(q, tuple(counts))


def aacf(u: ZqSequence, tau: int) -> CorrelationValue:
    return accf(u, u, tau)


@dataclass(frozen=True)
class CorrelationProfile:
    """Correlation values for every shift ``-(N-1) .. N-1``.

    ``values[tau + N - 1]`` holds the value at ``tau``; indexing the profile
    directly by ``tau`` returns zero outside the stored range.
    """

    q: int
    length: int
    values: tuple[CorrelationValue, ...]

    @property
    def shifts(self) -> range:
        return range(-(self.length - 1), self.length)

    def __getitem__(self, tau: int) -> CorrelationValue:
        if abs(tau) >= self.length:
            return CorrelationValue.zero(self.q)
        return self.values[tau + self.length - 1]

    def __add__(self, other: "CorrelationProfile") -> "CorrelationProfile":
        if (self.q, self.length) != (other.q, other.length):
            raise DomainError("profiles must share modulus and length")
        return CorrelationProfile(self.q, self.length,
                                  tuple(a + b for a, b in zip(self.values, other.values)))

    def items(self):
        return zip(self.shifts, self.values)


def profile(u: ZqSequence, v: ZqSequence) -> CorrelationProfile:
    _check_pair(u, v)
    n = len(u)
    return CorrelationProfile(u.q, n, tuple(accf(u, v, t) for t in range(-(n - 1), n)))
