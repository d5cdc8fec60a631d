"""Finite-field oracles: smoothness, locus sampling, and symmetry detection.

Smoothness of a plane curve F = 0 is tested with the Jacobian criterion: no
projective point may annihilate all three partial derivatives.  Over a prime
field this is decidable by a full sweep of the p^2 + p + 1 rational points,
vectorized with numpy.  Singular points defined over an extension field are
covered exactly on the three coordinate lines (a gcd of the restricted
partials detects common roots over the algebraic closure) and, for small p,
by an additional sweep over the quadratic extension.

A smooth specialization over F_p is evidence, not proof, that a locus has
smooth members in characteristic zero, so the negative verdict is reported
as "presumed empty" rather than "empty".
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass

import numpy as np

from .normal_form import Monomial, NormalForm, support, _expand_generic
from .types_enum import CyclicType

_SWEEP_CHUNK = 1 << 19
# Quadratic-extension sweeps cost ~p^4 evaluations; keep them for small p.
_EXTENSION_SWEEP_MAX_P = 31


@dataclass(frozen=True)
class SpecializedCurve:
    """A degree-d plane curve over F_p, stored as monomial -> coefficient."""

    degree: int
    p: int
    coeffs: dict  # Monomial -> int in [1, p-1]

    def __post_init__(self):
        clean = {}
        for mono, c in self.coeffs.items():
            c %= self.p
            if c == 0:
                continue
            mono = Monomial(*mono)
            if mono.degree != self.degree:
                raise ValueError(f"monomial {mono} has degree != {self.degree}")
            clean[mono] = c
        if not clean:
            raise ValueError("zero polynomial does not define a curve")
        object.__setattr__(self, "coeffs", clean)

    def support(self) -> frozenset[Monomial]:
        return frozenset(self.coeffs)


class LocusStatus(enum.Enum):
    SMOOTH_WITNESS_FOUND = "smooth-witness-found"
    PRESUMED_EMPTY = "presumed-empty"
    REDUCIBLE_ALWAYS = "reducible-always"


@dataclass(frozen=True)
class LocusVerdict:
    status: LocusStatus
    witness: SpecializedCurve | None
    trials: int
    note: str = ""


def divisible_variable(monomials) -> int | None:
    """Index of a variable dividing every monomial, or None.

    If some variable divides every monomial of the support then every
    specialization factors through that variable, hence is singular.
    """
    monos = list(monomials)
    for axis in range(3):
        if all(mo[axis] > 0 for mo in monos):
            return axis
    return None


def partial_derivatives(curve: SpecializedCurve) -> list[dict]:
    p = curve.p
    parts = []
    for axis in range(3):
        part: dict[Monomial, int] = {}
        for mono, c in curve.coeffs.items():
            e = mono[axis]
            if e == 0:
                continue
            lowered = list(mono)
            lowered[axis] -= 1
            val = (c * e) % p
            if val:
                part[Monomial(*lowered)] = val
        parts.append(part)
    return parts


def _eval_poly(poly: dict, xs, ys, zs, p: int):
    """Evaluate a monomial dict on numpy arrays of coordinates mod p.

    Power tables are shared across monomials; entries stay below p so the
    int64 products cannot overflow, and the final sum of reduced terms is
    reduced once.
    """
    pows: dict[tuple[int, int], np.ndarray] = {}

    def power(tag, base, e):
        key = (tag, e)
        got = pows.get(key)
        if got is None:
            got = base % p if e == 1 else (power(tag, base, e - 1) * base) % p
            pows[key] = got
        return got

    total = np.zeros(xs.shape, dtype=np.int64)
    for (i, j, k), c in poly.items():
        term = None
        for tag, base, e in ((0, xs, i), (1, ys, j), (2, zs, k)):
            if e == 0:
                continue
            pe = power(tag, base, e)
            term = pe if term is None else (term * pe) % p
        if term is None:
            total += c % p
        else:
            total += (term * c) % p
    return total % p


def _common_zero_rational(parts: list[dict], p: int) -> bool:
    """Does some point of P^2(F_p) kill all three polynomials?

    The first polynomial is evaluated on the full chart; the others only on
    its zero set, which has O(p) points.
    """
    parts = sorted(parts, key=len)
    span = np.arange(p, dtype=np.int64)
    rows = max(1, _SWEEP_CHUNK // p)
    # Affine chart X = 1: points (1 : y : z).
    for start in range(0, p, rows):
        ys = np.repeat(span[start : start + rows], p)
        zs = np.tile(span, len(ys) // p)
        xs = np.ones_like(ys)
        mask = _eval_poly(parts[0], xs, ys, zs, p) == 0
        if not mask.any():
            continue
        xs, ys, zs = xs[mask], ys[mask], zs[mask]
        keep = np.ones(xs.shape, dtype=bool)
        for poly in parts[1:]:
            keep &= _eval_poly(poly, xs, ys, zs, p) == 0
            if not keep.any():
                break
        if keep.any():
            return True
    # Chart X = 0, Y = 1: points (0 : 1 : z); then the point (0 : 0 : 1).
    zs = np.arange(p + 1, dtype=np.int64)
    xs = np.zeros_like(zs)
    ys = np.ones_like(zs)
    ys[p] = 0
    zs[p] = 1
    mask = np.ones(zs.shape, dtype=bool)
    for poly in parts:
        mask &= _eval_poly(poly, xs, ys, zs, p) == 0
    return bool(mask.any())


def _restrict_to_line(poly: dict, axis: int) -> list[int]:
    """Coefficients of the binary form obtained by setting one variable to 0.

    The remaining two variables keep their cyclic order; the returned list
    is indexed by the exponent of the first of them.
    """
    keep = [t for t in range(3) if t != axis]
    out: dict[int, int] = {}
    deg = -1
    for mono, c in poly.items():
        if mono[axis] != 0:
            continue
        e = mono[keep[0]]
        deg = max(deg, e + mono[keep[1]])
        out[e] = c
    if deg < 0:
        return []
    return [out.get(e, 0) for e in range(deg + 1)]


def _poly_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    """Monic gcd of univariate coefficient lists over F_p."""

    def trim(h):
        while h and h[-1] % p == 0:
            h.pop()
        return h

    f, g = trim(list(f)), trim(list(g))
    while g:
        inv = pow(g[-1], p - 2, p)
        # Reduce f mod g in place.
        while len(f) >= len(g):
            factor = (f[-1] * inv) % p
            shift = len(f) - len(g)
            for t, ge in enumerate(g):
                f[shift + t] = (f[shift + t] - factor * ge) % p
            trim(f)
            if not f:
                break
        f, g = g, f
    return f


def _binary_common_root(forms: list[list[int]], p: int) -> bool:
    """Do the binary forms share a projective root over the closure of F_p?

    Each form is a coefficient list in the line coordinates (u, v), entry e
    multiplying u^e v^(deg-e); identically zero forms impose no condition.
    A common root at (0:1) or (1:0) shows up as shared vanishing first or
    last coefficients; common roots elsewhere reduce to a univariate gcd.
    """
    forms = [[c % p for c in f] for f in forms]
    forms = [f for f in forms if any(f)]
    if not forms:
        return True  # every restriction vanishes: the whole line is singular
    if len(forms) == 1:
        return True  # a nonzero binary form of positive degree always has roots
    if all(f[0] == 0 for f in forms):
        return True
    if all(f[-1] == 0 for f in forms):
        return True
    g = forms[0]
    for f in forms[1:]:
        g = _poly_gcd(g, f, p)
        if len(g) <= 1:
            return False
    # Discard powers of t (the root t = 0 was handled above).
    lo = 0
    while lo < len(g) and g[lo] == 0:
        lo += 1
    return len(g) - lo > 1


def _common_zero_on_lines(parts: list[dict], p: int) -> bool:
    """Exact closure test for singular points on the coordinate lines."""
    for axis in range(3):
        forms = [_restrict_to_line(poly, axis) for poly in parts]
        if _binary_common_root(forms, p):
            return True
    return False


def _common_zero_quadratic(parts: list[dict], p: int) -> bool:
    """Sweep P^2(F_{p^2}) for a common zero; only sensible for small p.

    F_{p^2} is realized as F_p[w]/(w^2 - r) with r a quadratic nonresidue;
    elements are coefficient pairs, vectorized as two numpy arrays.
    """
    r = next(v for v in range(2, p) if pow(v, (p - 1) // 2, p) == p - 1)
    q = p * p
    span = np.arange(q, dtype=np.int64)
    e0, e1 = span % p, span // p  # all field elements as pairs

    def eval_at(poly, x0, x1, y0, y1, z0, z1):
        tot0 = np.zeros(x0.shape, dtype=np.int64)
        tot1 = np.zeros(x0.shape, dtype=np.int64)
        for (i, j, k), c in poly.items():
            t0, t1 = np.full(x0.shape, c % p, dtype=np.int64), np.zeros(x0.shape, dtype=np.int64)
            for (b0, b1), e in (((x0, x1), i), ((y0, y1), j), ((z0, z1), k)):
                for _ in range(e):
                    n0 = (t0 * b0 + r * t1 * b1) % p
                    n1 = (t0 * b1 + t1 * b0) % p
                    t0, t1 = n0, n1
            tot0 = (tot0 + t0) % p
            tot1 = (tot1 + t1) % p
        return tot0, tot1

    # Chart (1 : y : z), y and z ranging over F_{p^2}.
    chunk = max(1, _SWEEP_CHUNK // q)
    for start in range(0, q, chunk):
        sel = slice(start, min(start + chunk, q))
        y0 = np.repeat(e0[sel], q)
        y1 = np.repeat(e1[sel], q)
        z0 = np.tile(e0, len(y0) // q)
        z1 = np.tile(e1, len(y0) // q)
        ones = np.ones_like(y0)
        zeros = np.zeros_like(y0)
        mask = np.ones(y0.shape, dtype=bool)
        for poly in parts:
            v0, v1 = eval_at(poly, ones, zeros, y0, y1, z0, z1)
            mask &= (v0 == 0) & (v1 == 0)
            if not mask.any():
                break
        if mask.any():
            return True
    # Chart (0 : 1 : z) plus the point (0 : 0 : 1).
    z0 = np.concatenate([e0, [0]])
    z1 = np.concatenate([e1, [0]])
    y0 = np.ones_like(z0)
    y1 = np.zeros_like(z0)
    y0[-1] = 0
    z0[-1] = 1
    x0 = np.zeros_like(z0)
    mask = np.ones(z0.shape, dtype=bool)
    for poly in parts:
        v0, v1 = eval_at(poly, x0, x0, y0, y1, z0, z1)
        mask &= (v0 == 0) & (v1 == 0)
    return bool(mask.any())


def is_smooth(curve: SpecializedCurve, *, extension_bound: int = 2) -> bool:
    """Jacobian smoothness over F_p (and F_{p^2} where feasible).

    Requires p coprime to the degree so the three partials characterize
    singular points.  The rational sweep is exhaustive; singular points on
    the coordinate lines are detected over the full algebraic closure via
    gcds of the restricted partials.  With ``extension_bound`` >= 2 and
    small p the quadratic extension is swept as well; off-line singular
    points of higher degree over large fields are outside this oracle.
    """
    p, d = curve.p, curve.degree
    if d % p == 0:
        raise ValueError(f"prime {p} divides the degree {d}")
    if divisible_variable(curve.support()) is not None:
        return False
    parts = partial_derivatives(curve)
    if any(not part for part in parts):
        return False
    if _common_zero_rational(parts, p):
        return False
    if _common_zero_on_lines(parts, p):
        return False
    if extension_bound >= 2 and p <= _EXTENSION_SWEEP_MAX_P:
        if _common_zero_quadratic(parts, p):
            return False
    return True


def _form_key(nf: NormalForm) -> str:
    t = nf.ctype
    return f"{nf.case.value}:{nf.degree}:{t.m}:{t.a}:{t.b}"


def sample_specialization(nf: NormalForm, p: int, seed: int = 0) -> SpecializedCurve:
    """A random member of the form's family over F_p, deterministic in seed.

    Anchors get coefficient 1, the alpha slot a uniformly random nonzero
    value, every parameter and every expanded generic-slot coefficient a
    uniformly random value (zero allowed).
    """
    rng = random.Random(f"{seed}|{p}|{_form_key(nf)}")
    coeffs: dict[Monomial, int] = {mo: 1 for mo in nf.fixed}
    if nf.alpha is not None:
        coeffs[nf.alpha] = rng.randrange(1, p)
    for _, mono in nf.params:
        val = rng.randrange(p)
        if val:
            coeffs[mono] = val
    for zexp, deg in nf.generic:
        for mono in _expand_generic(zexp, deg):
            val = rng.randrange(p)
            if val:
                coeffs[mono] = (coeffs.get(mono, 0) + val) % p
    return SpecializedCurve(degree=nf.degree, p=p, coeffs=coeffs)


def locus_nonempty(
    nf: NormalForm,
    trials: int = 20,
    primes: tuple[int, ...] = (1009, 2003, 10007),
    seed: int = 0,
) -> LocusVerdict:
    """Search for a smooth member of the form's family.

    Returns REDUCIBLE_ALWAYS when a variable divides the whole support
    (decided without sampling), SMOOTH_WITNESS_FOUND on the first smooth
    sample, and PRESUMED_EMPTY once all trials are spent.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    supp = support(nf)
    axis = divisible_variable(supp)
    if axis is not None:
        var = "XYZ"[axis]
        return LocusVerdict(
            status=LocusStatus.REDUCIBLE_ALWAYS,
            witness=None,
            trials=0,
            note=f"{var} divides every member of the family",
        )
    used = 0
    for p in primes:
        if math.gcd(p, nf.degree) != 1:
            raise ValueError(f"prime {p} divides the degree {nf.degree}")
        for t in range(trials):
            used += 1
            curve = sample_specialization(nf, p, seed=seed + t)
            if is_smooth(curve):
                return LocusVerdict(
                    status=LocusStatus.SMOOTH_WITNESS_FOUND, witness=curve, trials=used
                )
    return LocusVerdict(status=LocusStatus.PRESUMED_EMPTY, witness=None, trials=used)


def diagonal_automorphisms(curve, max_order: int) -> list[CyclicType]:
    """All diagonal symmetries of the support, up to the given order.

    A type m,(a,b) preserves the polynomial up to scalar exactly when all
    support monomials share one character a*j + b*k (mod m); this is pure
    exponent arithmetic, independent of the coefficients and of the field.
    Returned in (m, a, b) lexicographic order.
    """
    monos = sorted(curve.support() if isinstance(curve, SpecializedCurve) else curve)
    if not monos:
        raise ValueError("empty support")
    j0, k0 = monos[0].j, monos[0].k
    dj = np.array([mo.j - j0 for mo in monos], dtype=np.int64)
    dk = np.array([mo.k - k0 for mo in monos], dtype=np.int64)
    out = []
    for m in range(2, max_order + 1):
        a = np.arange(m).reshape(m, 1, 1)
        b = np.arange(m).reshape(1, m, 1)
        ok = ((a * dj + b * dk) % m == 0).all(axis=2)
        for aa, bb in zip(*np.nonzero(ok)):
            aa, bb = int(aa), int(bb)
            if aa == bb or math.gcd(aa, math.gcd(bb, m)) != 1:
                continue
            out.append(CyclicType(m, aa, bb))
    return out
