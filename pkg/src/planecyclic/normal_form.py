"""Parameterized normal forms for curves admitting a given cyclic type.

For a type m,(a,b) acting as diag(1, w^a, w^b) the monomial X^i Y^j Z^k is
scaled by w^(a*j + b*k); an invariant polynomial must concentrate on one
residue class a*j + b*k == c (mod m) (its character).  Each enumeration case
contributes a handful of anchor monomials, forced with coefficient 1 (or a
nonzero coefficient named alpha), and the remaining invariant monomials
enter with free parameters.  The index sets of those free slots are
described by a small family of congruence-defined integer sets; see
:func:`s_set`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .types_enum import CaseId, CyclicType, TypeCandidate, case_system


class Monomial(NamedTuple):
    """Exponent triple (i, j, k) for X^i Y^j Z^k."""

    i: int
    j: int
    k: int

    @property
    def degree(self) -> int:
        return self.i + self.j + self.k


class SSetKind(enum.Enum):
    """The congruence-defined index sets used by the normal-form templates.

    With a type m,(a,b) and degree d fixed:

    - REF_MOD:   {j : u <= j <= d-1, d - j == 0 (mod m)}          (u, no type)
    - S1_JX:     {i : 0 <= i <= j, a*i + (j-i)*b == a (mod m)}
    - S2_JX:     {i : 0 <= i <= j, a*i + (j-i)*b == 0 (mod m)}
    - S_JY:      {i : 0 <= i <= j, b*i + (d-j)*a == a (mod m)}
    - S_JZ:      {i : 0 <= i <= j, a*i + (d-j)*b == a (mod m)}
    - SU_DX:     {i : u <= i <= d-u, a*i + (d-i)*b == 0 (mod m)}
    - SU_DM1X:   {i : 1 <= i <= d-u, a*i + (d-1-i)*b == 0 (mod m)}
    """

    REF_MOD = "ref-mod"
    S1_JX = "s1-jx"
    S2_JX = "s2-jx"
    S_JY = "s-jy"
    S_JZ = "s-jz"
    SU_DX = "su-dx"
    SU_DM1X = "su-dm1x"


def s_set(
    kind: SSetKind,
    d: int,
    m: int,
    a: int = 0,
    b: int = 0,
    *,
    u: int | None = None,
    j: int | None = None,
) -> set[int]:
    """Evaluate one of the index sets from :class:`SSetKind`."""
    if kind is SSetKind.REF_MOD:
        if u is None:
            raise ValueError("REF_MOD needs the lower bound u")
        return {jj for jj in range(u, d) if (d - jj) % m == 0}
    if kind is SSetKind.S1_JX:
        if j is None:
            raise ValueError("S1_JX needs j")
        return {i for i in range(j + 1) if (a * i + (j - i) * b - a) % m == 0}
    if kind is SSetKind.S2_JX:
        if j is None:
            raise ValueError("S2_JX needs j")
        return {i for i in range(j + 1) if (a * i + (j - i) * b) % m == 0}
    if kind is SSetKind.S_JY:
        if j is None:
            raise ValueError("S_JY needs j")
        return {i for i in range(j + 1) if (b * i + (d - j) * a - a) % m == 0}
    if kind is SSetKind.S_JZ:
        if j is None:
            raise ValueError("S_JZ needs j")
        return {i for i in range(j + 1) if (a * i + (d - j) * b - a) % m == 0}
    if kind is SSetKind.SU_DX:
        if u is None:
            raise ValueError("SU_DX needs u")
        return {i for i in range(u, d - u + 1) if (a * i + (d - i) * b) % m == 0}
    if kind is SSetKind.SU_DM1X:
        if u is None:
            raise ValueError("SU_DM1X needs u")
        return {i for i in range(1, d - u + 1) if (a * i + (d - 1 - i) * b) % m == 0}
    raise ValueError(f"unknown S-set kind {kind!r}")


@dataclass(frozen=True)
class NormalForm:
    """A parameterized equation whose specializations fill one locus.

    - ``fixed``: anchor monomials with coefficient 1;
    - ``alpha``: an anchor whose coefficient is only constrained nonzero;
    - ``params``: (name, monomial) slots with unconstrained coefficients;
    - ``generic``: (z_exponent, degree) slots standing for Z^z * (a generic
      homogeneous polynomial of that degree in X and Y), used by the
      homology cases.
    """

    degree: int
    ctype: CyclicType
    case: CaseId
    fixed: tuple[Monomial, ...]
    alpha: Monomial | None
    params: tuple[tuple[str, Monomial], ...]
    generic: tuple[tuple[int, int], ...]

    def __repr__(self):
        return f"<form {self.case.value} {self.ctype!r} deg {self.degree}>"


def _expand_generic(zexp: int, deg: int) -> list[Monomial]:
    return [Monomial(x, deg - x, zexp) for x in range(deg, -1, -1)]


def support(nf: NormalForm) -> frozenset[Monomial]:
    """Every monomial that can occur in a specialization of the form."""
    monos = set(nf.fixed)
    if nf.alpha is not None:
        monos.add(nf.alpha)
    monos.update(mono for _, mono in nf.params)
    for zexp, deg in nf.generic:
        monos.update(_expand_generic(zexp, deg))
    return frozenset(monos)


def character(nf: NormalForm) -> int:
    """The common residue a*j + b*k (mod m) of the form's monomials."""
    t = nf.ctype
    monos = sorted(support(nf))
    return (t.a * monos[0].j + t.b * monos[0].k) % t.m


def invariant_monomials(d: int, m: int, a: int, b: int, c: int) -> set[Monomial]:
    """All degree-d monomials with character c for the type m,(a,b)."""
    out = set()
    for i in range(d + 1):
        for j in range(d - i + 1):
            k = d - i - j
            if (a * j + b * k - c) % m == 0:
                out.add(Monomial(i, j, k))
    return out


def expected_support(nf: NormalForm) -> frozenset[Monomial]:
    """The support the completeness property predicts for this form.

    For the anchored cases the support is exactly the set of invariant
    monomials for the form's character.  The three-vertex case (C3) writes
    its equation through homogeneous tails of degree at most d/2 on each
    vertex, so monomials whose largest exponent is below ceil(d/2) are
    structurally absent even when invariant.
    """
    d, t = nf.degree, nf.ctype
    inv = invariant_monomials(d, t.m, t.a, t.b, character(nf))
    if nf.case is CaseId.C3:
        lo = d - d // 2
        inv = {mo for mo in inv if max(mo) >= lo}
    return frozenset(inv)


def _beta(j: int, i: int) -> str:
    return f"beta_{{{j},{i}}}"


def build_form(cand: TypeCandidate) -> NormalForm:
    """Assemble the normal form of a validated candidate.

    Raises if the candidate's type does not solve its case system.  Each
    monomial enters once even when two index sets overlap (for even d the
    C3 tails of degree d/2 share corner monomials); the first slot wins.
    """
    d, case, t = cand.degree, cand.case, cand.ctype
    m, a, b = t.m, t.a, t.b
    if not case.is_homology and not case_system(case, d, m).satisfied_by(a, b):
        raise ValueError(f"{t!r} does not satisfy the {case.value} system at degree {d}")
    if case.is_homology and (a, b) != (0, 1):
        raise ValueError(f"homology cases use the generator (0, 1), got {t!r}")

    fixed: list[Monomial] = []
    alpha: Monomial | None = None
    params: list[tuple[str, Monomial]] = []
    generic: list[tuple[int, int]] = []
    taken: set[Monomial] = set()

    def put(mono: Monomial, name: str | None):
        if mono in taken:
            return
        taken.add(mono)
        if name is None:
            fixed.append(mono)
        else:
            params.append((name, mono))

    def put_alpha(mono: Monomial):
        nonlocal alpha
        taken.add(mono)
        alpha = mono

    if case is CaseId.C1:
        # Z^{d-1}*(linear in X,Y) + invariant middle slots + pure X,Y part.
        generic.append((d - 1, 1))
        for j in sorted(s_set(SSetKind.REF_MOD, d, m, u=2)):
            generic.append((d - j, j))
        generic.append((0, d))
    elif case is CaseId.C2:
        put(Monomial(0, 0, d), None)
        for j in sorted(s_set(SSetKind.REF_MOD, d, m, u=1)):
            generic.append((d - j, j))
        generic.append((0, d))
    elif case is CaseId.C3:
        put(Monomial(d - 1, 1, 0), None)
        put(Monomial(0, d - 1, 1), None)
        put_alpha(Monomial(1, 0, d - 1))
        for j in range(2, d // 2 + 1):
            for i in sorted(s_set(SSetKind.S1_JX, d, m, a, b, j=j)):
                put(Monomial(d - j, i, j - i), _beta(j, i))
            for i in sorted(s_set(SSetKind.S_JY, d, m, a, b, j=j)):
                put(Monomial(j - i, d - j, i), f"alpha_{{{j},{i}}}")
            for i in sorted(s_set(SSetKind.S_JZ, d, m, a, b, j=j)):
                put(Monomial(j - i, i, d - j), f"gamma_{{{j},{i}}}")
    elif case is CaseId.C41:
        put(Monomial(d, 0, 0), None)
        put(Monomial(0, d - 1, 1), None)
        put_alpha(Monomial(0, 1, d - 1))
        for j in range(2, d):
            for i in sorted(s_set(SSetKind.S2_JX, d, m, a, b, j=j)):
                put(Monomial(d - j, i, j - i), _beta(j, i))
        for i in sorted(s_set(SSetKind.SU_DX, d, m, a, b, u=2)):
            put(Monomial(0, i, d - i), _beta(d, i))
    elif case is CaseId.C42:
        put(Monomial(d, 0, 0), None)
        put(Monomial(0, d - 1, 1), None)
        put_alpha(Monomial(1, 0, d - 1))
        for j in range(2, d - 1):
            for i in sorted(s_set(SSetKind.S2_JX, d, m, a, b, j=j)):
                put(Monomial(d - j, i, j - i), _beta(j, i))
        for i in sorted(s_set(SSetKind.SU_DM1X, d, m, a, b, u=1)):
            put(Monomial(1, i, d - 1 - i), _beta(d - 1, i))
        for i in sorted(s_set(SSetKind.SU_DX, d, m, a, b, u=2)):
            put(Monomial(0, i, d - i), _beta(d, i))
    elif case is CaseId.C43:
        put(Monomial(d, 0, 0), None)
        put(Monomial(1, 0, d - 1), None)
        put_alpha(Monomial(1, d - 1, 0))
        for j in range(2, d - 1):
            for i in sorted(s_set(SSetKind.S2_JX, d, m, a, b, j=j)):
                put(Monomial(d - j, i, j - i), _beta(j, i))
        for i in sorted(s_set(SSetKind.SU_DX, d, m, a, b, u=2)):
            put(Monomial(0, i, d - i), _beta(d, i))
        for i in sorted(s_set(SSetKind.SU_DM1X, d, m, a, b, u=2)):
            put(Monomial(1, i, d - 1 - i), _beta(d - 1, i))
    elif case is CaseId.C5:
        put(Monomial(d, 0, 0), None)
        put(Monomial(0, d, 0), None)
        put_alpha(Monomial(1, 0, d - 1))
        for j in range(2, d - 1):
            for i in sorted(s_set(SSetKind.S2_JX, d, m, a, b, j=j)):
                put(Monomial(d - j, i, j - i), _beta(j, i))
        for i in sorted(s_set(SSetKind.SU_DX, d, m, a, b, u=1)):
            put(Monomial(0, i, d - i), _beta(d, i))
        for i in sorted(s_set(SSetKind.SU_DM1X, d, m, a, b, u=1)):
            put(Monomial(1, i, d - 1 - i), _beta(d - 1, i))
    elif case is CaseId.C6:
        put(Monomial(d, 0, 0), None)
        put(Monomial(0, d, 0), None)
        put(Monomial(0, 0, d), None)
        for j in range(2, d):
            for i in sorted(s_set(SSetKind.S2_JX, d, m, a, b, j=j)):
                put(Monomial(d - j, i, j - i), _beta(j, i))
        for i in sorted(s_set(SSetKind.SU_DX, d, m, a, b, u=1)):
            put(Monomial(0, i, d - i), _beta(d, i))
    else:
        raise ValueError(f"unknown case {case!r}")

    return NormalForm(
        degree=d,
        ctype=t,
        case=case,
        fixed=tuple(fixed),
        alpha=alpha,
        params=tuple(params),
        generic=tuple(generic),
    )


_VARS = ("X", "Y", "Z")


def _mono_text(mono: Monomial, *, latex: bool) -> str:
    parts = []
    for var, e in zip(_VARS, mono):
        if e == 0:
            continue
        if e == 1:
            parts.append(var)
        elif e < 10:
            parts.append(f"{var}^{e}")
        else:
            parts.append(f"{var}^{{{e}}}" if latex else f"{var}^{e}")
    return "".join(parts) if parts else "1"


def _param_text(name: str, *, latex: bool) -> str:
    if latex:
        return "\\" + name
    return name


def render(nf: NormalForm, fmt: str = "plain", *, normalize_alpha: bool = False) -> str:
    """Deterministic text for the form: ``plain``, ``latex`` or ``json``.

    The anchor terms come first, then the alpha term, then the parameter
    slots in template order, then the generic slots.  With
    ``normalize_alpha`` the alpha coefficient is printed as 1 (it can
    always be scaled away by a coordinate change).
    """
    if fmt == "json":
        import json

        return json.dumps(to_json_dict(nf))
    if fmt not in ("plain", "latex"):
        raise ValueError(f"unknown format {fmt!r} (expected plain, latex or json)")
    latex = fmt == "latex"
    sep = "+" if latex else " + "
    terms = [_mono_text(mo, latex=latex) for mo in nf.fixed]
    if nf.alpha is not None:
        mono = _mono_text(nf.alpha, latex=latex)
        if normalize_alpha:
            terms.append(mono)
        else:
            terms.append(("\\alpha " if latex else "alpha ") + mono)
    for name, mono in nf.params:
        terms.append(_param_text(name, latex=latex) + _mono_text(mono, latex=latex))
    for zexp, deg in nf.generic:
        z = "" if zexp == 0 else _mono_text(Monomial(0, 0, zexp), latex=latex)
        terms.append(f"{z}L_{{{deg},Z}}")
    return sep.join(terms)


def to_json_dict(nf: NormalForm) -> dict:
    """JSON-friendly dict with a fixed field order for byte-stable output."""
    return {
        "degree": nf.degree,
        "m": nf.ctype.m,
        "a": nf.ctype.a,
        "b": nf.ctype.b,
        "case": nf.case.value,
        "fixed": [list(mo) for mo in nf.fixed],
        "alpha": list(nf.alpha) if nf.alpha is not None else None,
        "params": [{"name": name, "monomial": list(mo)} for name, mo in nf.params],
        "generic": [{"zexp": zexp, "deg": deg} for zexp, deg in nf.generic],
    }
