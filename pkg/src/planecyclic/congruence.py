"""Exact modular arithmetic used by the enumeration.

Everything here works with plain machine integers; the moduli that occur for
a plane curve of degree d are bounded by d*(d-1), so an exhaustive O(m^2)
scan over residue pairs is both simple and fast.  The degree is capped (see
``MAX_DEGREE``) so that the scans stay bounded.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

# Degrees above this would make the m^2 residue scans unreasonably large.
MAX_DEGREE = 1000


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending (1 and n included)."""
    if n < 1:
        raise ValueError(f"divisors() needs a positive integer, got {n}")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def check_degree(d: int) -> None:
    if d < 4:
        raise ValueError(f"degree must be at least 4, got {d}")
    if d > MAX_DEGREE:
        raise ValueError(f"degree {d} exceeds the supported cap {MAX_DEGREE}")


def divisor_candidates(d: int) -> set[int]:
    """The six integers whose divisors exhaust all cyclic automorphism orders.

    A non-trivial cyclic group acting on a smooth plane curve of degree d
    has order dividing one of d-1, d, d^2-3d+3, (d-1)^2, d(d-2), d(d-1).
    """
    check_degree(d)
    return {d - 1, d, d * d - 3 * d + 3, (d - 1) ** 2, d * (d - 2), d * (d - 1)}


@dataclass(frozen=True)
class Residue:
    """A residue class value mod modulus, normalized to 0 <= value < modulus."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)


class GammaFilter(enum.Enum):
    """Domain over which a congruence system in (a, b) is solved.

    COPRIME_PAIRS is the generator-eligible grid: 1 <= a != b <= m-1 with
    gcd(a, b) = 1.  ZERO_A is the homology convention: a = 0 and
    gcd(b, m) = 1, so that (0, b) still generates a group of order m.
    """

    COPRIME_PAIRS = "coprime-pairs"
    ZERO_A = "zero-a"


@dataclass(frozen=True)
class CongruenceSystem:
    """A list of constraints coefA*a + coefB*b == rhs (mod modulus).

    Coefficients are reduced mod the modulus at construction time.
    """

    modulus: int
    constraints: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        m = self.modulus
        reduced = tuple((ca % m, cb % m, rhs % m) for ca, cb, rhs in self.constraints)
        object.__setattr__(self, "constraints", reduced)

    def satisfied_by(self, a: int, b: int) -> bool:
        m = self.modulus
        return all((ca * a + cb * b - rhs) % m == 0 for ca, cb, rhs in self.constraints)


def solve_system(system: CongruenceSystem, domain: GammaFilter) -> list[tuple[int, int]]:
    """All (a, b) in the requested domain satisfying every constraint.

    The scan is exhaustive over the m x m residue grid and the result is in
    lexicographic order, so callers get deterministic output.  An empty list
    is a valid result (for m = 2 the coprime-pair domain is already empty).
    """
    m = system.modulus
    if m < 2:
        raise ValueError(f"solve_system needs modulus >= 2, got {m}")
    out = []
    if domain is GammaFilter.ZERO_A:
        for b in range(1, m):
            if math.gcd(b, m) == 1 and system.satisfied_by(0, b):
                out.append((0, b))
        return out
    for a in range(1, m):
        for b in range(1, m):
            if a == b or math.gcd(a, b) != 1:
                continue
            if system.satisfied_by(a, b):
                out.append((a, b))
    return out
