"""Acceptance suite.

One test per acceptance criterion; each prints a single PASS line with its
measured runtime.  Budgets follow the stated expectations: the golden
regression under 5 s, the divisor bound under 5 s, invariance/completeness
under 10 s, the group closures under 60 s, the exceptional groups under
10 s, the smoothness fixtures under 120 s, the symmetry-oracle loop under
30 s.
"""

import math
import time

import pytest

from planecyclic.canonical import canonicalize, dedupe, orbit
from planecyclic.congruence import divisor_candidates
from planecyclic.groups import (
    GroupDescriptor,
    anchor_specialization,
    closure,
    diag,
    large_locus,
    preserves_curve,
    root_of_unity,
    subs_matrix,
    verify_presentation,
    very_large_records,
)
from planecyclic.normal_form import Monomial, build_form, character, expected_support, support
from planecyclic.tables import GoldenRow, classify, golden, golden_check
from planecyclic.types_enum import CaseId, CyclicType, TypeCandidate, enumerate_candidates
from planecyclic.verification import (
    LocusStatus,
    SpecializedCurve,
    diagonal_automorphisms,
    is_smooth,
    locus_nonempty,
    sample_specialization,
)

DEGREES = range(4, 10)


def report(n, text, t0, budget):
    elapsed = time.time() - t0
    print(f"ACCEPTANCE {n}: PASS ({elapsed:.2f}s) - {text}")
    assert elapsed < budget, f"criterion {n} exceeded its {budget}s budget"


def test_criterion_1_golden_regression():
    t0 = time.time()
    for d in DEGREES:
        rep = golden_check(d, primes=(211,), trials=20, seed=0)
        assert rep.ok, str(rep)
    kept4 = [r for r in classify(4) if not r.suppressed]
    assert len(kept4) == 10
    report(1, "golden tables reproduced for degrees 4..9 (10 classes at d=4)", t0, 5)


def test_criterion_2_divisor_bound():
    t0 = time.time()
    for d in range(4, 21):
        targets = divisor_candidates(d)
        for cand in enumerate_candidates(d):
            assert any(v % cand.ctype.m == 0 for v in targets), (d, cand)
    report(2, "every enumerated order divides one of the six integers (d=4..20)", t0, 5)


def test_criterion_3_invariance_and_completeness():
    t0 = time.time()
    total = 0
    for d in DEGREES:
        for cand in enumerate_candidates(d):
            nf = build_form(cand)
            t = nf.ctype
            c = character(nf)
            for mo in support(nf):
                assert (t.a * mo.j + t.b * mo.k - c) % t.m == 0
            assert support(nf) == expected_support(nf)
            total += 1
    report(3, f"character invariance and completeness for {total} forms", t0, 10)


def test_criterion_4_very_large_closures():
    t0 = time.time()
    expected = {
        4: [12, 9, 96, 168],
        5: [20, 16, 30, 39],
        6: [30, 25, 144, 63],
        7: [42, 36, 70, 93],
        8: [56, 49, 96, 129],
        9: [72, 64, 126, 171],
    }
    for d in DEGREES:
        recs = very_large_records(d)
        orders = []
        for rec in recs:
            group = closure([m for _, m in rec.group.generators], rec.group.prime, cap=400)
            orders.append(len(group))
            sample = anchor_specialization(rec.curve, rec.group.prime)
            assert is_smooth(sample), (d, rec.kind)
            for el in group:
                assert preserves_curve(el, sample), (d, rec.kind)
        assert orders == expected[d], (d, orders)
    report(4, "maximal-order groups close to the right orders and act", t0, 60)


def test_criterion_5_exceptional_small_groups():
    t0 = time.time()
    for args, order in (((6, 2, "d-2"), 16), ((10, 2, "d-2"), 32), ((10, 5, "d-2"), 80)):
        rec = large_locus(*args)
        assert rec.group.order == order
        assert verify_presentation(rec.group), args
        sample = anchor_specialization(rec.curve, rec.group.prime, params_nonzero=True)
        for _, g in rec.group.generators:
            assert preserves_curve(g, sample)
    report(5, "exceptional groups of orders 16, 32, 80 verified with relations", t0, 10)


def test_criterion_6_smoothness_fixtures():
    t0 = time.time()
    primes = (1009, 2003, 3001)
    fixtures = {
        "fermat": lambda d: {(d, 0, 0): 1, (0, d, 0): 1, (0, 0, d): 1},
        "three-vertex": lambda d: {(d - 1, 1, 0): 1, (0, d - 1, 1): 1, (1, 0, d - 1): 1},
        "two-vertex-x": lambda d: {(d, 0, 0): 1, (0, d - 1, 1): 1, (1, 0, d - 1): 1},
        "one-vertex": lambda d: {(d, 0, 0): 1, (0, d, 0): 1, (1, 0, d - 1): 1},
        "two-vertex-yz": lambda d: {(d, 0, 0): 1, (0, d - 1, 1): 1, (0, 1, d - 1): 1},
    }
    for name, mk in fixtures.items():
        for d in DEGREES:
            for p in primes:
                c = SpecializedCurve(degree=d, p=p,
                                     coeffs={Monomial(*mo): v for mo, v in mk(d).items()})
                assert is_smooth(c), (name, d, p)
    report(6, "5 fixture families smooth over 3 primes for degrees 4..9", t0, 120)


def test_criterion_7_oracle_loop():
    t0 = time.time()
    checked = 0
    for d in DEGREES:
        kept = [r for r in classify(d) if not r.suppressed]
        for gold in golden(d):
            row = next(r for r in kept
                       if r.orbit.m == gold.m and gold.ctype in r.orbit.members)
            nf = build_form(TypeCandidate(case=row.case, ctype=gold.ctype, degree=d))
            verdict = locus_nonempty(nf, trials=20, primes=(211,), seed=0)
            assert verdict.status is LocusStatus.SMOOTH_WITNESS_FOUND, gold
            auts = diagonal_automorphisms(verdict.witness, d * (d - 1))
            assert gold.ctype in auts, gold
            checked += 1
    report(7, f"diagonal-symmetry oracle recovers all {checked} reference types", t0, 30)


def _valid_pairs(m):
    for a in range(m):
        for b in range(m):
            if a == b or math.gcd(a, math.gcd(b, m)) != 1:
                continue
            yield a, b


def test_criterion_8_property_suites():
    t0 = time.time()

    # canonicalize is idempotent over every type of order <= 72: each class
    # is swept once, its minimum is checked as a fixed point, and sampled
    # members confirm the function is constant on the class
    for m in range(2, 73):
        seen = set()
        for a, b in _valid_pairs(m):
            if (a, b) in seen:
                continue
            t = CyclicType(m, a, b)
            members = orbit(t, "full")
            rep = min(members)
            assert canonicalize(rep) == rep
            assert canonicalize(t) == rep
            pairs = {mem.pair for mem in members}
            assert (a, b) in pairs
            sample = sorted(pairs)[len(pairs) // 2]
            assert canonicalize(CyclicType(m, *sample)) == rep
            seen |= pairs

    # dedupe partitions its candidate input
    for d in (4, 6, 9):
        cands = enumerate_candidates(d)
        orbits = dedupe(cands)
        for cand in cands:
            holders = [o for o in orbits
                       if o.m == cand.ctype.m and cand.ctype in o.members]
            assert len(holders) == 1

    # seeded sampling is deterministic and keeps the alpha slot nonzero
    nf = build_form(TypeCandidate(CaseId.C42, CyclicType(8, 1, 4), 5))
    assert sample_specialization(nf, 211, seed=9).coeffs == \
        sample_specialization(nf, 211, seed=9).coeffs
    for seed in range(10000):
        assert sample_specialization(nf, 101, seed=seed).coeffs[nf.alpha] != 0

    # negative controls: a mutated reference row is flagged, and a wrong
    # relation fails presentation checking
    import planecyclic.tables as tables_mod
    rows = golden(4)
    bad = [GoldenRow(rows[0].degree, rows[0].m, rows[0].a, rows[0].b,
                     frozenset(list(rows[0].support)[1:]))] + rows[1:]
    real = tables_mod.golden
    try:
        tables_mod.golden = lambda d: bad
        rep = golden_check(4, sample_loci=False)
        assert [e.kind for e in rep.entries] == ["support"]
    finally:
        tables_mod.golden = real

    p = 31
    w = root_of_unity(p, 15)
    wrong = GroupDescriptor(
        name="wrong", order=30, prime=p,
        generators=(("s", diag(p, 1, w, pow(w, 11, p))), ("t", subs_matrix("XZY"))),
        relations=((("t", 1), ("s", 1), ("t", 1), ("s", -1)),),
    )
    assert not verify_presentation(wrong)

    report(8, "canonical idempotence (m <= 72), partition, determinism, controls", t0, 120)
