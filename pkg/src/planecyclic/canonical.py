"""Orbit normalization of cyclic types and deduplication of candidates.

Two operations identify types without changing the locus of curves they cut
out: replacing the generator by another generator of the same group
(multiplying both exponents by a unit mod m), and permuting the coordinates
followed by rescaling the first eigenvalue back to 1.  Arbitrary coordinate
permutations conjugate the group but may move a normal form out of its
case's shape, so deduplication uses only the permutations each case shape
tolerates (identity, the Y<->Z swap, the cyclic rotations, or all six); see
:attr:`planecyclic.types_enum.CaseId.symmetry`.  The full closure is still
available through :func:`canonicalize`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .types_enum import CASE_ORDER, CaseId, CyclicType, TypeCandidate

# Symmetry labels, from no permutations at all to the full symmetric group.
SYMMETRIES = ("none", "swap", "cyclic", "full")


def _units(m: int) -> list[int]:
    return [u for u in range(1, m) if math.gcd(u, m) == 1]


def _perm_moves(m: int, a: int, b: int, symmetry: str) -> list[tuple[int, int]]:
    """Images of (a, b) under the allowed coordinate permutations.

    A permutation rearranges the eigenvalue exponent vector (0, a, b); the
    new pair is read off after subtracting the entry moved into first place.
    Images with equal entries are skipped: they correspond to putting the
    repeated eigenvalue of a homology on the last two coordinates, and such
    elements are already represented with a = 0 by another image.
    """
    if symmetry == "none":
        return []
    if symmetry == "swap":
        images = [(b, a)]
    elif symmetry == "cyclic":
        images = [((b - a) % m, (-a) % m), ((-b) % m, (a - b) % m)]
    elif symmetry == "full":
        images = [
            (b, a),
            ((-a) % m, (b - a) % m),
            ((b - a) % m, (-a) % m),
            ((-b) % m, (a - b) % m),
            ((a - b) % m, (-b) % m),
        ]
    else:
        raise ValueError(f"unknown symmetry {symmetry!r}")
    return [(x, y) for x, y in images if x != y]


@lru_cache(maxsize=None)
def _orbit_pairs(m: int, a: int, b: int, symmetry: str) -> frozenset[tuple[int, int]]:
    """Closure of (a, b) mod m under unit multiples and allowed permutations.

    Works on raw pairs: unit multiplication can leave the coprime-pair grid
    (gcd(a, b) > 1 while gcd(a, b, m) = 1 still holds), and those
    intermediate pairs are needed to make the closure a genuine orbit.
    """
    units = _units(m)
    seen = {(a, b)}
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        nxt = [((u * x) % m, (u * y) % m) for u in units]
        nxt += _perm_moves(m, x, y, symmetry)
        for pair in nxt:
            if pair not in seen:
                seen.add(pair)
                stack.append(pair)
    return frozenset(seen)


def _valid_members(m: int, pairs: frozenset[tuple[int, int]]) -> frozenset[CyclicType]:
    """Keep the orbit members that are well-formed types of exact order m.

    Unit multiplication can produce pairs whose entries share a factor
    (coprime to m); those are still order-m generators and stay in the
    orbit.  Only pairs with equal entries (re-representable with a = 0 by
    another member) or deficient order are dropped.
    """
    members = set()
    for a, b in pairs:
        if a == b or math.gcd(a, b, m) != 1:
            continue
        members.add(CyclicType(m, a, b))
    return frozenset(members)


def unit_orbit(t: CyclicType) -> set[CyclicType]:
    """All generators of the group generated by t, as types.

    This is the orbit of (a, b) under multiplication by units mod m; every
    member is again a generator, though its entries need not stay coprime
    to each other.
    """
    m = t.m
    pairs = frozenset(((u * t.a) % m, (u * t.b) % m) for u in _units(m))
    return set(_valid_members(m, pairs))


def permutation_images(t: CyclicType) -> set[CyclicType]:
    """The images of t under all six coordinate permutations (with rescale)."""
    pairs = frozenset([(t.a, t.b)] + _perm_moves(t.m, t.a, t.b, "full"))
    return set(_valid_members(t.m, pairs))


def orbit(t: CyclicType, symmetry: str = "full") -> frozenset[CyclicType]:
    """Closure of t under unit multiples and the allowed permutations."""
    return _valid_members(t.m, _orbit_pairs(t.m, t.a, t.b, symmetry))


def canonicalize(t: CyclicType) -> CyclicType:
    """Lexicographically least member of the full orbit of t.

    Idempotent: the minimum of an orbit has the same orbit.
    """
    return min(orbit(t, "full"))


@dataclass(frozen=True)
class TypeOrbit:
    """An equivalence class of types with the cases that produced it."""

    representative: CyclicType
    members: frozenset[CyclicType]
    provenance: frozenset[CaseId]
    degree: int

    @property
    def m(self) -> int:
        return self.representative.m

    def __repr__(self):
        cases = "+".join(c.value for c in CASE_ORDER if c in self.provenance)
        return f"<orbit {self.representative!r} [{cases}] deg {self.degree}>"


def dedupe(candidates: list[TypeCandidate]) -> list[TypeOrbit]:
    """Merge candidates into one orbit per equivalence class.

    Each candidate is closed under its own case's shape-preserving
    symmetries; classes from different cases merge when they share a type
    (this happens for m = 3 when 3 | d, where the same types solve both the
    three-vertex and the Fermat-shape systems).  Output is sorted by m
    descending, homology classes after the others, then by representative.
    """
    degrees = {c.degree for c in candidates}
    if len(degrees) > 1:
        raise ValueError(f"candidates span several degrees: {sorted(degrees)}")

    # records: list of [members(set of CyclicType), provenance(set of CaseId)]
    records: list[list] = []
    index: dict[tuple[int, CyclicType], int] = {}
    for cand in candidates:
        t = cand.ctype
        members = orbit(t, cand.case.symmetry)
        hits = sorted({index[(t.m, mem)] for mem in members if (t.m, mem) in index})
        if not hits:
            records.append([set(members), {cand.case}])
            rec_id = len(records) - 1
        else:
            rec_id = hits[0]
            rec = records[rec_id]
            for other in hits[1:]:
                rec[0] |= records[other][0]
                rec[1] |= records[other][1]
                records[other] = rec
            rec[0] |= members
            rec[1].add(cand.case)
        for mem in records[rec_id][0]:
            index[(t.m, mem)] = rec_id

    unique = []
    seen_ids = set()
    for rec in records:
        if id(rec) in seen_ids:
            continue
        seen_ids.add(id(rec))
        unique.append(rec)

    degree = degrees.pop() if degrees else 0
    orbits = [
        TypeOrbit(
            representative=min(members),
            members=frozenset(members),
            provenance=frozenset(provenance),
            degree=degree,
        )
        for members, provenance in unique
    ]
    orbits.sort(key=lambda o: (-o.m, o.representative.a == 0, o.representative.pair))
    return orbits
