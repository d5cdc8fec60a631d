"""Enumeration of the cyclic action types admissible on a smooth plane curve.

A diagonal action (x : y : z) -> (x : w^a y : w^b z), with w a primitive m-th
root of unity, is recorded as the type m,(a,b).  For a fixed degree d the
admissible types fall into eight cases, distinguished by which of the three
reference points (1:0:0), (0:1:0), (0:0:1) lie on the curve and whether the
action is a homology (a = 0).  Each case pins m to a divisor of one of the
six integers of :func:`planecyclic.congruence.divisor_candidates` and imposes
a linear congruence system on (a, b).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .congruence import (
    CongruenceSystem,
    GammaFilter,
    check_degree,
    divisors,
    solve_system,
)


class CaseId(enum.Enum):
    """The eight enumeration cases.

    C1/C2 are the homology cases (a = 0); the center (0:0:1) lies on the
    curve for C1 and off it for C2.  C3 has all three reference points on
    the curve, C41/C42/C43 exactly two, C5 exactly one, C6 none.
    """

    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C41 = "C41"
    C42 = "C42"
    C43 = "C43"
    C5 = "C5"
    C6 = "C6"

    def divisor_value(self, d: int) -> int:
        """The integer whose divisors are the admissible orders for this case."""
        check_degree(d)
        return {
            CaseId.C1: d - 1,
            CaseId.C2: d,
            CaseId.C3: d * d - 3 * d + 3,
            CaseId.C41: d * (d - 2),
            CaseId.C42: (d - 1) ** 2,
            CaseId.C43: d - 1,
            CaseId.C5: d * (d - 1),
            CaseId.C6: d,
        }[self]

    @property
    def is_homology(self) -> bool:
        return self in (CaseId.C1, CaseId.C2)

    @property
    def symmetry(self) -> str:
        """Coordinate permutations preserving the case's normal-form shape.

        The shape anchored at X^d with the pair Y^{d-1}Z, YZ^{d-1} (C41) or
        the pair XZ^{d-1}, XY^{d-1} (C43) tolerates the Y<->Z swap; the
        three-vertex shape (C3) tolerates the cyclic rotations; the Fermat
        shape (C6) tolerates every permutation; C42 and C5 distinguish all
        three coordinates.  Homology cases only ever carry the pair (0, 1).
        """
        return {
            CaseId.C1: "none",
            CaseId.C2: "none",
            CaseId.C3: "cyclic",
            CaseId.C41: "swap",
            CaseId.C42: "none",
            CaseId.C43: "swap",
            CaseId.C5: "none",
            CaseId.C6: "full",
        }[self]


CASE_ORDER = (
    CaseId.C1,
    CaseId.C2,
    CaseId.C3,
    CaseId.C41,
    CaseId.C42,
    CaseId.C43,
    CaseId.C5,
    CaseId.C6,
)


@dataclass(frozen=True, order=True)
class CyclicType:
    """A diagonal projective transformation of exact order m.

    The pair (a, b) reads off the eigenvalue exponents on Y and Z once the
    X-eigenvalue is scaled to 1.  Conventions: a != b, and the element
    really has order m (gcd(a, b, m) = 1; for a = 0 this is gcd(b, m) = 1).
    """

    m: int
    a: int
    b: int

    def __post_init__(self):
        m, a, b = self.m, self.a, self.b
        if m < 2:
            raise ValueError(f"order must be >= 2, got {m}")
        if not (0 <= a < m and 0 <= b < m):
            raise ValueError(f"exponents must lie in [0, {m}), got ({a}, {b})")
        if a == b:
            raise ValueError(f"exponents must differ, got ({a}, {b}) mod {m}")
        if math.gcd(a, b, m) != 1:
            raise ValueError(f"type {m},({a},{b}) has order < {m}")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def in_gamma(self) -> bool:
        """Whether (a, b) lies in the coprime-pair grid (a*b != 0, gcd 1)."""
        return self.a != 0 and self.b != 0 and math.gcd(self.a, self.b) == 1

    def __repr__(self):
        return f"{self.m},({self.a},{self.b})"


@dataclass(frozen=True)
class TypeCandidate:
    """A type together with the case whose congruence system it solves."""

    case: CaseId
    ctype: CyclicType
    degree: int

    def __repr__(self):
        return f"<{self.case.value}: {self.ctype!r} deg {self.degree}>"


def case_system(case: CaseId, d: int, m: int) -> CongruenceSystem:
    """The congruence system a type m,(a,b) must satisfy in the given case.

    Constraints are triples (coefA, coefB, rhs) meaning
    coefA*a + coefB*b == rhs (mod m).  The homology cases carry the empty
    system: they are solved over the a = 0 domain with generator (0, 1).
    Raises if m does not divide the case's integer or if m < 2 (the trivial
    group is excluded everywhere).
    """
    check_degree(d)
    if m < 2:
        raise ValueError(f"cyclic order must be >= 2 (non-trivial), got {m}")
    value = case.divisor_value(d)
    if value % m != 0:
        raise ValueError(
            f"case {case.value} at degree {d} needs m | {value}, got m = {m}"
        )
    if case.is_homology:
        constraints: tuple[tuple[int, int, int], ...] = ()
    elif case is CaseId.C3:
        # The three anchors X^{d-1}Y, Y^{d-1}Z, Z^{d-1}X must share one
        # character: a == (d-1)a + b == (d-1)b (mod m), written as two
        # homogeneous constraints.
        constraints = ((d - 2, 1, 0), (1, -(d - 1), 0))
    elif case is CaseId.C41:
        constraints = ((d - 1, 1, 0), (1, d - 1, 0))
    elif case is CaseId.C42:
        constraints = ((d - 1, 1, 0), (0, d - 1, 0))
    elif case is CaseId.C43:
        constraints = ((0, d - 1, 0), (d - 1, 0, 0))
    elif case is CaseId.C5:
        constraints = ((d, 0, 0), (0, d - 1, 0))
    else:  # C6
        constraints = ((d, 0, 0), (0, d, 0))
    return CongruenceSystem(modulus=m, constraints=constraints)


def case_solutions(case: CaseId, d: int, m: int) -> list[CyclicType]:
    """All types solving the case system at (d, m), in lexicographic order.

    For the homology cases only the conventional generator (0, 1) is
    emitted; every other a = 0 solution is a power of it.
    """
    system = case_system(case, d, m)
    if case.is_homology:
        return [CyclicType(m, 0, 1)]
    pairs = solve_system(system, GammaFilter.COPRIME_PAIRS)
    return [CyclicType(m, a, b) for a, b in pairs]


def enumerate_candidates(d: int) -> list[TypeCandidate]:
    """Every candidate (case, m, (a, b)) for degree d.

    Cases are visited in declaration order, divisors ascending, pairs
    lexicographic, so the output order is stable.  The same (m, a, b) may
    appear under two cases; deduplication happens later.
    """
    check_degree(d)
    out = []
    for case in CASE_ORDER:
        for m in divisors(case.divisor_value(d)):
            if m < 2:
                continue
            for ctype in case_solutions(case, d, m):
                out.append(TypeCandidate(case=case, ctype=ctype, degree=d))
    return out
