import pytest

import planecyclic.tables as tables
from planecyclic.canonical import canonicalize
from planecyclic.normal_form import Monomial
from planecyclic.tables import GoldenRow, classify, dump_rows, golden, golden_check
from planecyclic.types_enum import CaseId


EXPECTED_COUNTS = {4: 10, 5: 12, 6: 17, 7: 20, 8: 21, 9: 24}


@pytest.mark.parametrize("d,count", sorted(EXPECTED_COUNTS.items()))
def test_golden_row_counts(d, count):
    assert len(golden(d)) == count


def test_golden_rejects_out_of_range():
    with pytest.raises(ValueError):
        golden(10)


def test_golden_quartics_first_row():
    rows = golden(4)
    first = rows[0]
    assert (first.m, first.a, first.b) == (12, 3, 4)
    assert first.support == frozenset(
        {Monomial(4, 0, 0), Monomial(0, 4, 0), Monomial(1, 0, 3)}
    )


def test_golden_sample_rows():
    row30 = next(r for r in golden(6) if (r.m, r.a, r.b) == (30, 5, 6))
    assert row30.support == frozenset(
        {Monomial(6, 0, 0), Monomial(0, 6, 0), Monomial(1, 0, 5)}
    )
    row7 = next(r for r in golden(8) if (r.m, r.a, r.b) == (7, 1, 6))
    assert len(row7.support) == 7


@pytest.mark.parametrize("d", range(4, 10))
def test_golden_rows_internally_consistent(d):
    for row in golden(d):
        monos = sorted(row.support)
        c = (row.a * monos[0].j + row.b * monos[0].k) % row.m
        for mo in monos:
            assert mo.degree == d
            assert (row.a * mo.j + row.b * mo.k - c) % row.m == 0


@pytest.mark.parametrize("d", range(4, 10))
def test_golden_rows_order_matches_layout(d):
    keys = [(-r.m, r.a == 0, (r.a, r.b)) for r in golden(d)]
    assert keys == sorted(keys)


def test_dump_rows_roundtrips_data_file():
    from importlib import resources

    text = resources.files("planecyclic").joinpath("data/golden_tables.txt").read_text()
    data_lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    dumped = []
    for d in range(4, 10):
        dumped += dump_rows(golden(d)).splitlines()
    assert data_lines == dumped


@pytest.mark.parametrize("d", range(4, 10))
def test_classify_kept_counts_match_golden(d):
    rows = classify(d)
    assert sum(1 for r in rows if not r.suppressed) == EXPECTED_COUNTS[d]


def test_classify_suppressions_d9():
    suppressed = {
        (r.representative.m, r.representative.pair): r.reasons
        for r in classify(9)
        if r.suppressed
    }
    assert set(suppressed) == {
        (19, (1, 12)), (8, (1, 3)), (8, (1, 5)), (8, (1, 7)), (4, (1, 3)), (3, (1, 2)),
    }
    assert any("reducible" in rs for rs in suppressed[(4, (1, 3))])
    assert any("maximal" in rs for rs in suppressed[(19, (1, 12))])


def test_classify_shared_class_has_two_forms():
    row = next(r for r in classify(6) if r.orbit.m == 3 and r.representative.a != 0)
    assert row.suppressed
    assert row.orbit.provenance == frozenset({CaseId.C3, CaseId.C6})


@pytest.mark.parametrize("d", range(4, 10))
def test_golden_check_passes(d):
    report = golden_check(d)
    assert report.ok, str(report)
    assert report.checked == EXPECTED_COUNTS[d]


def test_golden_rows_canonicalize_into_computed_orbits():
    for d in range(4, 10):
        kept = [r for r in classify(d) if not r.suppressed]
        for gold in golden(d):
            matches = [
                r for r in kept
                if r.orbit.m == gold.m and gold.ctype in r.orbit.members
            ]
            assert len(matches) == 1
            assert canonicalize(gold.ctype) == canonicalize(matches[0].representative)


def test_golden_check_negative_controls(monkeypatch):
    base = golden(4)

    def mutate(rows):
        def fake(d):
            assert d == 4
            return rows
        return fake

    # drop one monomial from one row: exactly one support discrepancy
    weaker = list(base)
    row = weaker[0]
    weaker[0] = GoldenRow(row.degree, row.m, row.a, row.b,
                          frozenset(list(row.support)[1:]))
    monkeypatch.setattr(tables, "golden", mutate(weaker))
    report = golden_check(4, sample_loci=False)
    assert [e.kind for e in report.entries] == ["support"]

    # remove a row entirely: the computed class goes unmatched
    monkeypatch.setattr(tables, "golden", mutate(base[1:]))
    report = golden_check(4, sample_loci=False)
    assert [e.kind for e in report.entries] == ["unexpected"]

    # add an alien row: reported missing
    alien = GoldenRow(4, 11, 1, 2, frozenset({Monomial(4, 0, 0)}))
    monkeypatch.setattr(tables, "golden", mutate(base + [alien]))
    report = golden_check(4, sample_loci=False)
    assert [e.kind for e in report.entries] == ["missing"]
