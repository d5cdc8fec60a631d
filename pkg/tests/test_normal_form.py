import json

import pytest

from planecyclic.normal_form import (
    Monomial,
    NormalForm,
    SSetKind,
    build_form,
    character,
    expected_support,
    invariant_monomials,
    render,
    s_set,
    support,
    to_json_dict,
)
from planecyclic.types_enum import CaseId, CyclicType, TypeCandidate, enumerate_candidates


def form(case, d, m, a, b):
    return build_form(TypeCandidate(case=case, ctype=CyclicType(m, a, b), degree=d))


def test_s_sets_empty_for_maximal_orders():
    # top cyclic order d(d-1): no free slots anywhere
    d, m, a, b = 6, 30, 5, 6
    for j in range(2, d - 1):
        assert s_set(SSetKind.S2_JX, d, m, a, b, j=j) == set()
    assert s_set(SSetKind.SU_DX, d, m, a, b, u=1) == set()
    # order (d-1)^2: the pure Y^iZ^(d-i) slots are empty
    d, m, a, b = 5, 16, 1, 12
    assert s_set(SSetKind.SU_DX, d, m, a, b, u=2) == set()


def test_s_sets_for_doubled_two_vertex_order():
    # order 2(d-2) with generator (1, d-3): odd tails vanish, even tails
    # concentrate on the middle monomial (when the multiplier condition holds)
    d = 8
    m, a, b = 12, 1, 5
    for j in (3, 5, 7):
        assert s_set(SSetKind.S2_JX, d, m, a, b, j=j) == set()
    assert s_set(SSetKind.S2_JX, d, m, a, b, j=4) == {2}
    assert s_set(SSetKind.S2_JX, d, m, a, b, j=2) == set()


def test_build_form_reference_examples():
    nf = form(CaseId.C42, 5, 16, 1, 12)
    assert support(nf) == frozenset(
        {Monomial(5, 0, 0), Monomial(0, 4, 1), Monomial(1, 0, 4)}
    )
    assert not nf.params

    nf = form(CaseId.C41, 6, 8, 1, 3)
    assert Monomial(2, 2, 2) in {mo for _, mo in nf.params}

    nf = form(CaseId.C43, 4, 3, 1, 2)
    assert support(nf) == frozenset(
        {Monomial(4, 0, 0), Monomial(1, 0, 3), Monomial(1, 3, 0),
         Monomial(2, 1, 1), Monomial(0, 2, 2)}
    )


def test_build_form_rejects_invalid_candidate():
    with pytest.raises(ValueError):
        form(CaseId.C41, 4, 8, 1, 3)  # (1,3) does not solve the system
    with pytest.raises(ValueError):
        form(CaseId.C1, 4, 3, 0, 2)  # homology cases pin the generator (0,1)


def test_support_examples():
    bare = NormalForm(
        degree=6, ctype=CyclicType(6, 1, 2), case=CaseId.C6,
        fixed=(Monomial(6, 0, 0), Monomial(0, 6, 0), Monomial(0, 0, 6)),
        alpha=None, params=(), generic=(),
    )
    assert support(bare) == frozenset(
        {Monomial(6, 0, 0), Monomial(0, 6, 0), Monomial(0, 0, 6)}
    )
    klein5 = form(CaseId.C3, 5, 13, 1, 10)
    assert support(klein5) == frozenset(
        {Monomial(4, 1, 0), Monomial(0, 4, 1), Monomial(1, 0, 4)}
    )
    hom = form(CaseId.C2, 6, 6, 0, 1)
    assert support(hom) == frozenset(
        mo for mo in invariant_monomials(6, 6, 0, 1, 0) if mo.k % 6 == 0
    )
    assert all(mo.k % 6 == 0 for mo in support(hom))


def test_render_matches_reference_cells():
    assert render(form(CaseId.C5, 4, 12, 3, 4), "latex") == "X^4+Y^4+\\alpha XZ^3"
    assert render(form(CaseId.C5, 7, 42, 6, 7), "latex") == "X^7+Y^7+\\alpha XZ^6"
    latex = render(form(CaseId.C3, 4, 7, 1, 5), "latex")
    assert not latex.endswith("+")
    as_json = render(form(CaseId.C5, 4, 12, 3, 4), "json")
    assert json.loads(as_json)["m"] == 12
    with pytest.raises(ValueError):
        render(form(CaseId.C5, 4, 12, 3, 4), "html")


def test_render_alpha_normalization():
    assert render(form(CaseId.C5, 4, 12, 3, 4), "latex", normalize_alpha=True) == "X^4+Y^4+XZ^3"


@pytest.mark.parametrize("d", range(4, 10))
def test_character_invariance_and_completeness(d):
    for cand in enumerate_candidates(d):
        nf = build_form(cand)
        c = character(nf)
        t = nf.ctype
        for mo in support(nf):
            assert (t.a * mo.j + t.b * mo.k - c) % t.m == 0
            assert mo.degree == d
        assert support(nf) == expected_support(nf)


@pytest.mark.parametrize("d", range(4, 10))
def test_parameter_names_injective_and_monomials_unique(d):
    for cand in enumerate_candidates(d):
        nf = build_form(cand)
        names = [name for name, _ in nf.params]
        assert len(names) == len(set(names))
        listed = list(nf.fixed) + [mo for _, mo in nf.params]
        if nf.alpha is not None:
            listed.append(nf.alpha)
        assert len(listed) == len(set(listed))


def test_c3_midpoint_monomials_assigned_once():
    # even degree: the degree-d/2 tails of the three-vertex case overlap at
    # the corner monomials; each may enter only once
    nf = form(CaseId.C3, 6, 3, 1, 2)
    listed = list(nf.fixed) + [mo for _, mo in nf.params] + [nf.alpha]
    assert len(listed) == len(set(listed))


def test_json_schema_field_order_and_roundtrip():
    nf = form(CaseId.C41, 6, 8, 1, 3)
    payload = to_json_dict(nf)
    assert list(payload) == [
        "degree", "m", "a", "b", "case", "fixed", "alpha", "params", "generic",
    ]
    again = json.loads(json.dumps(payload))
    assert again == payload
    assert again["case"] == "C41"
    assert again["alpha"] == [0, 1, 5]


@pytest.mark.parametrize("d", range(4, 10))
def test_non_singularity_anchors_present(d):
    # the anchors each case needs for smoothness at the reference points
    from planecyclic.types_enum import enumerate_candidates

    for cand in enumerate_candidates(d):
        supp = support(build_form(cand))
        if cand.case is CaseId.C42:
            assert Monomial(1, 0, d - 1) in supp
        elif cand.case is CaseId.C43:
            assert Monomial(1, 0, d - 1) in supp and Monomial(1, d - 1, 0) in supp
        elif cand.case is CaseId.C41:
            assert Monomial(0, d - 1, 1) in supp and Monomial(0, 1, d - 1) in supp
        elif cand.case is CaseId.C5:
            assert Monomial(1, 0, d - 1) in supp
