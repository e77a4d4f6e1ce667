"""Truncation curves of the hook-type cosets.

Each coset C^psi(n, m) is, as a one-parameter vertex algebra, a quotient
of the universal even-spin algebra parametrized by (c, lambda).  The
kernel ideal is described by a plane curve: a pair of rational functions
(c(psi), lambda(psi)).  This module holds the explicit parametrization
for the 2B family, derives the other seven families from it by exact
substitutions, verifies the triality identities, and finds rational
intersection points of two curves by resultant elimination.

All arithmetic is exact; the master-curve polynomials are entered once,
verbatim, and guarded by value checks in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .exact import (
    MultiPoly,
    PoleError,
    RatFunc,
    UniPoly,
    ZeroDenominatorError,
    parse_ratfunc,
    poly_gcd,
    rational_roots,
    resultant,
)
from .liedata import HookFamily

__all__ = [
    "TruncationCurve",
    "CurvePoint",
    "IdentityCheck",
    "Intersection",
    "IntersectionReport",
    "phi_2B",
    "phi_family",
    "phi",
    "verify_trialities",
    "known_point_2B_sp",
    "intersect",
    "curve_json",
    "intersection_json",
    "compose_cleared",
    "on_generic_domain",
    "DEGENERATE_CHARGES",
]

# Central charges at which the even-spin algebra degenerates; coincidences
# there need not come from curve intersections.
DEGENERATE_CHARGES = (
    Fraction(0),
    Fraction(1),
    Fraction(-24),
    Fraction(-22, 5),
    Fraction(1, 2),
)


@dataclass(frozen=True)
class TruncationCurve:
    """A truncation curve: central charge and lambda as functions of psi.

    Both components are canonical rational functions of psi; any of n, m,
    r may remain as residual symbols.  ``source`` records the derivation
    route ("2B" for the master curve, "1B<-1O<-2B" for a derived one).

    ``lam`` is None on the isolated parameter slices where the coset is a
    free-field orbifold: the central charge is constant there and the
    lambda denominator vanishes identically, so the curve collapses to a
    point with no finite weight-four datum.
    """

    c: RatFunc
    lam: Optional[RatFunc]
    source: str
    symbols: Tuple[str, ...]


@dataclass(frozen=True)
class CurvePoint:
    """A point (c, lambda), possibly with residual symbols."""

    c: RatFunc
    lam: RatFunc


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one curve identity: name, verdict, offending difference."""

    name: str
    holds: bool
    c_difference: Optional[RatFunc]
    lambda_difference: Optional[RatFunc]


@dataclass(frozen=True)
class Intersection:
    """One rational intersection point of two curves."""

    psi1: Fraction
    psi2: Fraction
    c: Fraction
    lam: Fraction
    degenerate: bool


@dataclass(frozen=True)
class IntersectionReport:
    """All rational intersections, plus what could not be enumerated.

    ``identity_component``: the two curves share a whole component (a
    one-parameter family of intersections), which is reported as a flag
    rather than as points.  ``residual_degree``: degree of the eliminant
    factor without rational roots; its roots, if any, are irrational.
    """

    points: Tuple[Intersection, ...]
    identity_component: bool
    residual_degree: int


# ---------------------------------------------------------------------------
# The 2B master curve.  The three polynomials below are transcribed term by
# term from the explicit parametrization; tests pin spot values of each.
# ---------------------------------------------------------------------------

_F_2B = """
-19*m + 80*m^3 - 16*m^5 + 19*n - 240*m^2*n + 80*m^4*n + 240*m*n^2
- 160*m^3*n^2 - 80*n^3
+ 160*m^2*n^3 - 80*m*n^4 + 16*n^5 + 49*psi
+ 114*m*psi - 364*m^2*psi - 640*m^3*psi + 160*m^5*psi - 76*n*psi
+ 728*m*n*psi + 1440*m^2*n*psi - 640*m^4*n*psi - 364*n^2*psi
- 960*m*n^2*psi + 960*m^3*n^2*psi + 160*n^3*psi
- 640*m^2*n^3*psi + 160*m*n^4*psi - 196*psi^2 - 380*m*psi^2
+ 2184*m^2*psi^2 + 2240*m^3*psi^2 - 640*m^5*psi^2
+ 228*n*psi^2 - 2912*m*n*psi^2 - 3840*m^2*n*psi^2 + 1920*m^4*n*psi^2
+ 728*n^2*psi^2 + 1920*m*n^2*psi^2
- 1920*m^3*n^2*psi^2 - 320*n^3*psi^2 + 640*m^2*n^3*psi^2
+ 392*psi^3 + 760*m*psi^3 - 4368*m^2*psi^3 - 4480*m^3*psi^3
+ 1280*m^5*psi^3 - 304*n*psi^3 + 2912*m*n*psi^3 + 5760*m^2*n*psi^3
- 2560*m^4*n*psi^3 - 1920*m*n^2*psi^3
+ 1280*m^3*n^2*psi^3 - 392*psi^4 - 912*m*psi^4 + 2912*m^2*psi^4
+ 5120*m^3*psi^4 - 1280*m^5*psi^4 + 304*n*psi^4
- 3840*m^2*n*psi^4 + 1280*m^4*n*psi^4 + 608*m*psi^5
- 2560*m^3*psi^5 + 512*m^5*psi^5
"""

_G_2B = """
-7 + 4*m^2 - 8*m*n + 4*n^2 + 14*psi - 16*m^2*psi + 16*m*n*psi
- 28*psi^2 + 16*m^2*psi^2
"""

_H_2B = """
5*m - 20*m^3 - 5*n + 60*m^2*n - 60*m*n^2 + 20*n^3 + 49*psi - 20*m*psi
+ 120*m^3*psi + 10*n*psi
- 240*m^2*n*psi + 120*m*n^2*psi - 98*psi^2 + 40*m*psi^2
- 240*m^3*psi^2 - 20*n*psi^2 + 240*m^2*n*psi^2 - 40*m*psi^3
+ 160*m^3*psi^3
"""

_MASTER_CACHE: dict = {}


def _master_2B() -> Tuple[RatFunc, RatFunc]:
    """The symbolic 2B curve in the three variables psi, n, m."""
    cached = _MASTER_CACHE.get("2B")
    if cached is not None:
        return cached
    psi = RatFunc.var("psi")
    n = RatFunc.var("n")
    m = RatFunc.var("m")
    c = -(
        (-m + n - psi + 2 * m * psi)
        * (1 - 2 * m + 2 * n + 4 * m * psi)
        * (-1 - 2 * m + 2 * n + 2 * psi + 4 * m * psi)
    ) / (2 * psi * (2 * psi - 1))
    f = parse_ratfunc(_F_2B)
    g = parse_ratfunc(_G_2B)
    h = parse_ratfunc(_H_2B)
    lam = -(2 * psi * (2 * psi - 1) * f) / (
        7
        * (-m + n + psi + 2 * m * psi)
        * (-1 - 2 * m + 2 * n + 4 * m * psi)
        * (1 - 2 * m + 2 * n - 2 * psi + 4 * m * psi)
        * g
        * h
    )
    _MASTER_CACHE["2B"] = (c, lam)
    return c, lam


def _master_domain_factors() -> Tuple[MultiPoly, ...]:
    """Every printed denominator factor of the master curve, in psi, n, m."""
    cached = _MASTER_CACHE.get("domain")
    if cached is None:
        psi = RatFunc.var("psi")
        n = RatFunc.var("n")
        m = RatFunc.var("m")
        factors = (
            2 * psi,
            2 * psi - 1,
            -m + n + psi + 2 * m * psi,
            -1 - 2 * m + 2 * n + 4 * m * psi,
            1 - 2 * m + 2 * n - 2 * psi + 4 * m * psi,
            parse_ratfunc(_G_2B),
            parse_ratfunc(_H_2B),
        )
        cached = tuple(f.num for f in factors)
        _MASTER_CACHE["domain"] = cached
    return cached


# How each family's (n, m, psi) sits inside the master curve's coordinates.
# The last entry marks routes that invert psi, which excludes psi = 0.
_INNER_COORDS = {
    "1B": (Fraction(0), Fraction(1, 2), True, "n", Fraction(1, 2)),
    "1C": (Fraction(1, 2), Fraction(1, 2), False, "", Fraction(1, 2)),
    "1D": (Fraction(-1, 2), Fraction(0), True, "n", Fraction(1, 2)),
    "1O": (Fraction(0), Fraction(1, 2), False, "", Fraction(1, 2)),
    "2B": (Fraction(0), Fraction(0), False, "", Fraction(1)),
    "2C": (Fraction(1, 2), Fraction(1, 2), True, "n", Fraction(1, 4)),
    "2D": (Fraction(-1, 2), Fraction(0), False, "", Fraction(1)),
    "2O": (Fraction(0), Fraction(0), True, "n", Fraction(1, 4)),
}


def on_generic_domain(fam_or_tag, n, m, psi) -> bool:
    """Whether (n, m, psi) avoids every printed denominator of the curve.

    The c and lambda formulas are quotients of polynomials; specializing a
    symbolic identity to a point is legitimate only where neither side's
    denominator vanishes.  On the excluded loci the curve is defined as a
    limit and individual printed values carry no content.
    """
    tag = getattr(fam_or_tag, "tag", fam_or_tag)
    if tag not in _INNER_COORDS:
        raise ValueError("unknown family tag %r" % (tag,))
    n = Fraction(n)
    m = Fraction(m)
    psi = Fraction(psi)
    dn, dm, inverts, m_shift, scale = _INNER_COORDS[tag]
    if inverts:
        if psi == 0:
            return False
        psi_in = scale / psi
    else:
        psi_in = scale * psi
    n_in = n + dn
    m_in = m + dm + (n if m_shift == "n" else 0)
    point = {"psi": psi_in, "n": n_in, "m": m_in}
    return all(f.eval(point) != 0 for f in _master_domain_factors())


def _coerce_param(value):
    if isinstance(value, RatFunc):
        return value
    return Fraction(value)


_TEMP_VARS = ("psi1", "psi2", "s")


def _subst_scalars(expr: RatFunc, scalars: dict) -> RatFunc:
    """Substitute scalar values one variable at a time, in a viable order.

    On a slice where the denominator vanishes identically, the curve is
    the limit along the remaining parameters: canonical cancellation after
    an earlier substitution removes the offending factor, so the orders
    are tried until one goes through.
    """
    from itertools import permutations

    last = None
    for order in permutations(scalars):
        result = expr
        try:
            for var in order:
                result = result.substitute(var, scalars[var])
            return result
        except ZeroDenominatorError as exc:
            last = exc
    raise ZeroDenominatorError(
        "curve degenerates at this parameter slice in every substitution order"
    ) from last


def _subst_simultaneous(expr: RatFunc, mapping: dict) -> RatFunc:
    """Substitute several variables at once, without capture.

    Scalar values commute with everything and are substituted directly.
    Symbolic values (which may mention the very variables being replaced,
    as in an n <-> m swap) are routed through unused temporary variables.
    """
    symbolic = {}
    scalars = {}
    for var, value in mapping.items():
        if isinstance(value, RatFunc):
            if value == RatFunc.var(var):
                continue
            symbolic[var] = value
        else:
            scalars[var] = value
    if scalars:
        expr = _subst_scalars(expr, scalars)
    if not symbolic:
        return expr
    if len(symbolic) > len(_TEMP_VARS):
        raise ValueError("too many simultaneous symbolic substitutions")
    forbidden = set(expr.variables())
    for value in symbolic.values():
        forbidden |= value.variables()
    temps = []
    for tmp in _TEMP_VARS:
        if tmp not in forbidden:
            temps.append(tmp)
    if len(temps) < len(symbolic):
        raise ValueError("no free temporary variables for substitution")
    items = list(symbolic.items())
    for (var, _), tmp in zip(items, temps):
        expr = expr.substitute(var, RatFunc.var(tmp))
    for (_, value), tmp in zip(items, temps):
        expr = expr.substitute(tmp, value)
    return expr


def _residual_symbols(c: RatFunc, lam: Optional[RatFunc]) -> Tuple[str, ...]:
    names = set(c.variables())
    if lam is not None:
        names |= lam.variables()
    return tuple(sorted(names - {"psi"}))


def _curve(c: RatFunc, lam: Optional[RatFunc], source: str) -> TruncationCurve:
    return TruncationCurve(c=c, lam=lam, source=source, symbols=_residual_symbols(c, lam))


def phi_2B(n, m) -> TruncationCurve:
    """The 2B curve at parameters n, m (rationals or symbolic expressions).

    Half-integer and negative parameters are meaningful: the other seven
    families are this curve at shifted arguments.  On the slices where
    the lambda denominator vanishes identically (the free-field orbifold
    cosets) the lambda component is None.
    """
    n = _coerce_param(n)
    m = _coerce_param(m)
    c, lam = _master_2B()
    mapping = {"n": n, "m": m}
    c_out = _subst_simultaneous(c, mapping)
    try:
        lam_out = _subst_simultaneous(lam, mapping)
    except ZeroDenominatorError:
        lam_out = None
    return _curve(c_out, lam_out, "2B")


def _compose_psi(curve: TruncationCurve, w: RatFunc, source: str) -> TruncationCurve:
    lam = None if curve.lam is None else curve.lam.substitute("psi", w)
    return _curve(curve.c.substitute("psi", w), lam, source)


_HALF = Fraction(1, 2)


def phi_family(tag: str, n, m) -> TruncationCurve:
    """Truncation curve of any of the eight families, one fixed route each.

    The 2B curve is the master; 1O, 2D, 1C are half-integer shifts of it,
    and 1B, 1D, 2C, 2O are obtained from those by the degree-one psi
    substitutions of the triality group.  n and m may be any rationals
    (the internal shifts leave the lattice) or symbolic expressions.
    """
    psi = RatFunc.var("psi")
    if tag == "2B":
        return phi_2B(n, m)
    if tag == "1O":
        inner = phi_2B(n, m + _HALF)
        return _compose_psi(inner, psi / 2, "1O<-2B")
    if tag == "2D":
        inner = phi_2B(n - _HALF, m)
        return _curve(inner.c, inner.lam, "2D<-2B")
    if tag == "1C":
        inner = phi_2B(n + _HALF, m + _HALF)
        return _compose_psi(inner, psi / 2, "1C<-2B")
    if tag == "1B":
        inner = phi_family("1O", n, m + n)
        return _compose_psi(inner, 1 / psi, "1B<-1O<-2B")
    if tag == "1D":
        inner = phi_family("2D", n, m + n)
        return _compose_psi(inner, 1 / (2 * psi), "1D<-2D<-2B")
    if tag == "2C":
        inner = phi_family("1C", n, m + n)
        return _compose_psi(inner, 1 / (2 * psi), "2C<-1C<-2B")
    if tag == "2O":
        inner = phi_2B(n, m + n)
        return _compose_psi(inner, 1 / (4 * psi), "2O<-2B")
    raise ValueError(f"unknown family {tag!r}")


def phi(fam: HookFamily) -> TruncationCurve:
    """Truncation curve of a hook family at its (integer) parameters."""
    return phi_family(fam.tag, fam.n, fam.m)


# ---------------------------------------------------------------------------
# Triality identities.
# ---------------------------------------------------------------------------


def _identity_specs(n, m):
    """The eight pairwise identities: (name, left curve, right curve)."""
    psi = RatFunc.var("psi")
    quarter_inv = 1 / (4 * psi)
    half_inv = 1 / (2 * psi)
    inv = 1 / psi
    moebius_2 = psi / (2 * psi - 1)
    moebius_1 = psi / (psi - 1)
    moebius_2d = 2 * psi / (2 * psi - 1)
    moebius_half = psi / (2 * (psi - 1))

    def at(tag, a, b, w, label):
        return (label, _compose_psi(phi_family(tag, a, b), w, tag))

    specs = []
    left = phi_family("2B", n, m)
    specs.append(("2B(n,m) = 2O(n,m-n) o 1/(4psi)", left, at("2O", n, m - n, quarter_inv, "")[1]))
    specs.append(("2B(n,m) = 2B(m,n) o psi/(2psi-1)", left, at("2B", m, n, moebius_2, "")[1]))
    left = phi_family("1C", n, m)
    specs.append(("1C(n,m) = 2C(n,m-n) o 1/(2psi)", left, at("2C", n, m - n, half_inv, "")[1]))
    specs.append(("1C(n,m) = 1C(m,n) o psi/(psi-1)", left, at("1C", m, n, moebius_1, "")[1]))
    left = phi_family("2D", n, m)
    specs.append(("2D(n,m) = 1D(n,m-n) o 1/(2psi)", left, at("1D", n, m - n, half_inv, "")[1]))
    specs.append(("2D(n,m) = 1O(m,n-1) o 2psi/(2psi-1)", left, at("1O", m, n - 1, moebius_2d, "")[1]))
    left = phi_family("1O", n, m)
    specs.append(("1O(n,m) = 1B(n,m-n) o 1/psi", left, at("1B", n, m - n, inv, "")[1]))
    specs.append(("1O(n,m) = 2D(m+1,n) o psi/(2(psi-1))", left, at("2D", m + 1, n, moebius_half, "")[1]))
    return specs


def verify_trialities(n, m) -> Tuple[IdentityCheck, ...]:
    """Check the eight triality identities at (n, m), numeric or symbolic.

    For numeric parameters the precondition m >= n >= 0, n + m >= 1 is
    enforced; symbolic parameters are checked as multivariate identities.
    Each result carries the (c, lambda) differences when the identity
    fails.
    """
    numeric = not (isinstance(n, RatFunc) or isinstance(m, RatFunc))
    if numeric:
        n = Fraction(n)
        m = Fraction(m)
        if not (m >= n >= 0 and n + m >= 1):
            raise ValueError(f"need m >= n >= 0 and n + m >= 1, got n={n}, m={m}")
    checks = []
    for name, left, right in _identity_specs(n, m):
        if left.lam is None or right.lam is None:
            raise ValueError(f"identity {name!r} involves a curve with no finite lambda")
        dc = left.c - right.c
        dl = left.lam - right.lam
        holds = dc.num.is_zero() and dl.num.is_zero()
        checks.append(
            IdentityCheck(
                name=name,
                holds=holds,
                c_difference=None if holds else dc,
                lambda_difference=None if holds else dl,
            )
        )
    return tuple(checks)


# ---------------------------------------------------------------------------
# The printed intersection with the type-C principal curve.
# ---------------------------------------------------------------------------

_F_POINT = """
-68*n - 408*m*n - 816*m^2*n - 544*m^3*n + 136*n^2 + 544*m*n^2
+ 544*m^2*n^2 + 96*n^3 + 192*m*n^3
- 49*r - 256*m*r - 360*m^2*r + 64*m^3*r + 304*m^4*r - 212*n*r
- 1000*m*n*r - 1456*m^2*n*r
- 608*m^3*n*r + 92*n^2*r - 1296*m*n^2*r - 2960*m^2*n^2*r + 1824*n^3*r
+ 3264*m*n^3*r - 576*n^4*r - 196*r^2
- 632*m*r^2 - 176*m^2*r^2 + 608*m^3*r^2 - 772*n*r^2 - 3000*m*n*r^2
- 496*m^2*n*r^2 + 4832*m^3*n*r^2
+ 640*n^2*r^2 - 5792*m*n^2*r^2 - 9664*m^2*n^2*r^2 + 4176*n^3*r^2
+ 6432*m*n^3*r^2 - 1600*n^4*r^2 - 392*r^3
- 328*m*r^3 + 2368*m^2*r^3 + 2272*m^3*r^3 - 1280*m^4*r^3 - 1544*n*r^3
- 5824*m*n*r^3 + 928*m^2*n*r^3
+ 3840*m^3*n*r^3 + 2240*n^2*r^3 - 4512*m*n^2*r^3 - 4480*m^2*n^2*r^3
+ 1312*n^3*r^3 + 2560*m*n^3*r^3 - 640*n^4*r^3
- 392*r^4 + 608*m*r^4 + 2912*m^2*r^4 - 1280*m^3*r^4 - 912*n*r^4
- 2784*m*n*r^4 + 1600*m^2*n*r^4
- 640*m^3*n*r^4 - 128*n^2*r^4 + 640*m*n^2*r^4 + 1920*m^2*n^2*r^4
- 960*n^3*r^4 - 1920*m*n^3*r^4 + 640*n^4*r^4
+ 608*m*r^5 - 1216*m^2*r^5 - 128*m^3*r^5 + 256*m^4*r^5 - 608*n*r^5
+ 2432*m*n*r^5 + 384*m^2*n*r^5
- 1024*m^3*n*r^5 - 1216*n^2*r^5 - 384*m*n^2*r^5 + 1536*m^2*n^2*r^5
+ 128*n^3*r^5 - 1024*m*n^3*r^5 + 256*n^4*r^5
"""

_G_POINT = """
-7 - 28*m - 28*m^2 + 14*n + 28*m*n - 24*n^2 - 14*r - 28*m*r - 28*n*r
- 16*m*n*r + 16*n^2*r
- 28*r^2 + 16*m^2*r^2 - 32*m*n*r^2 + 16*n^2*r^2
"""

_H_POINT = """
-44*n - 88*m*n - 49*r - 108*m*r - 20*m^2*r - 78*n*r + 20*m*n*r
+ 40*n^2*r - 98*r^2 - 20*m*r^2
+ 40*n*r^2 - 120*m*n*r^2 + 120*n^2*r^2 - 40*m*r^3 + 80*m^2*r^3
+ 40*n*r^3 - 160*m*n*r^3 + 80*n^2*r^3
"""


def _printed_point() -> Tuple[RatFunc, RatFunc]:
    cached = _MASTER_CACHE.get("point")
    if cached is not None:
        return cached
    n = RatFunc.var("n")
    m = RatFunc.var("m")
    r = RatFunc.var("r")
    c = -(
        r
        * (-1 - 2 * m + 4 * n - 4 * m * r + 4 * n * r)
        * (1 + 2 * m + 2 * n + 2 * r - 4 * m * r + 4 * n * r)
    ) / (2 * (n + r) * (1 + 2 * m + 2 * r))
    f = parse_ratfunc(_F_POINT)
    g = parse_ratfunc(_G_POINT)
    h = parse_ratfunc(_H_POINT)
    lam = -(2 * (n + r) * (1 + 2 * m + 2 * r) * f) / (
        7
        * (1 + 2 * r)
        * (2 * n + r - 2 * m * r + 2 * n * r)
        * (1 + 2 * m - 4 * m * r + 4 * n * r)
        * g
        * h
    )
    _MASTER_CACHE["point"] = (c, lam)
    return c, lam


def compose_cleared(rf: RatFunc, psi_value: RatFunc) -> Tuple[MultiPoly, MultiPoly]:
    """rf(psi := psi_value) as an uncanonicalized (num, den) polynomial pair.

    Composing and canonicalizing first would force large multivariate gcd
    computations; the cleared pair supports cross-multiplied equality
    checks without them.  The denominator entry is identically zero
    exactly when the composition is a pole.
    """
    p_num, p_den = psi_value.num, psi_value.den
    deg_num = rf.num.degree("psi")
    deg_den = rf.den.degree("psi")

    def cleared(poly: MultiPoly, deg: int) -> MultiPoly:
        # poly(psi := p_num/p_den) * p_den**deg, by Horner.
        acc = poly.coefficient_of("psi", deg)
        q_pow = MultiPoly.one()
        for k in range(deg - 1, -1, -1):
            q_pow = q_pow * p_den
            acc = acc * p_num + poly.coefficient_of("psi", k) * q_pow
        return acc

    num_star = cleared(rf.num, deg_num)
    den_star = cleared(rf.den, deg_den)
    # Restore the common clearing power so num/den is the composed value.
    if deg_den > deg_num:
        num_star = num_star * p_den ** (deg_den - deg_num)
    elif deg_num > deg_den:
        den_star = den_star * p_den ** (deg_num - deg_den)
    return num_star, den_star


def _composed_equals(rf: RatFunc, psi_value: RatFunc, target: RatFunc) -> bool:
    """Whether rf(psi := psi_value) == target, by cross-multiplication."""
    num_star, den_star = compose_cleared(rf, psi_value)
    if den_star.is_zero():
        raise ValueError("psi value is a pole of the curve")
    return (num_star * target.den - den_star * target.num).is_zero()


def known_point_2B_sp(n, m, r) -> CurvePoint:
    """The printed intersection of the 2B curve with a type-C principal curve.

    Returns the printed (c, lambda), after asserting that the 2B curve at
    psi* = (1 + 2m - 2n) / (2 (1 + 2m + 2r)) actually passes through it.
    Arguments may be numeric or symbolic; with all three symbolic the
    assertion is a trivariate identity.
    """
    n = _coerce_param(n)
    m = _coerce_param(m)
    r = _coerce_param(r)
    c_raw, lam_raw = _printed_point()
    mapping = {"n": n, "m": m, "r": r}
    c_pt = _subst_simultaneous(c_raw, mapping)
    lam_pt = _subst_simultaneous(lam_raw, mapping)
    curve = phi_2B(n, m)
    psi_star = (1 + 2 * m - 2 * n) / (2 * (1 + 2 * m + 2 * r))
    if not isinstance(psi_star, RatFunc):
        psi_star = RatFunc.const(psi_star)
    failures = []
    if not _composed_equals(curve.c, psi_star, c_pt):
        failures.append("c")
    if not _composed_equals(curve.lam, psi_star, lam_pt):
        failures.append("lambda")
    if failures:
        raise ValueError(
            "curve does not pass through the printed point: "
            f"mismatch in {', '.join(failures)} at psi* = {psi_star.to_text()}"
        )
    return CurvePoint(c=c_pt, lam=lam_pt)


# ---------------------------------------------------------------------------
# Rational intersection points.
# ---------------------------------------------------------------------------


def _as_quotient(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    # Exact division p / q, validated.
    quot = RatFunc(p, q)
    if quot.den != 1:
        raise ValueError("inexact polynomial division in intersection pipeline")
    return quot.num


def _deflate(poly: UniPoly, root: Fraction) -> Tuple[UniPoly, int]:
    """Divide out (x - root) to full multiplicity; return (quotient, mult)."""
    coeffs = list(poly.coeffs)
    mult = 0
    while len(coeffs) > 1:
        # Synthetic division by (x - root).
        quot = [Fraction(0)] * (len(coeffs) - 1)
        acc = Fraction(0)
        for i in range(len(coeffs) - 1, 0, -1):
            acc = coeffs[i] + acc * root
            quot[i - 1] = acc
        remainder = coeffs[0] + acc * root
        if remainder != 0:
            break
        coeffs = quot
        mult += 1
    return UniPoly(poly.var, coeffs), mult


def _curve_value(curve: TruncationCurve, psi: Fraction):
    """(c, lambda) at psi, or None at a pole of either component."""
    try:
        c = curve.c.eval({"psi": psi})
        lam = curve.lam.eval({"psi": psi})
    except PoleError:
        return None
    return c, lam


def _root_candidates(spec_c: MultiPoly, spec_l: MultiPoly, var: str):
    """Common rational roots of two specializations; None marks a free line."""
    polys = []
    for p in (spec_c, spec_l):
        if p.is_zero():
            continue
        if p.degree(var) < 1:
            return set()  # a nonzero constant: no solutions at this slice
        polys.append(p)
    if not polys:
        return None
    roots = rational_roots(UniPoly.from_multipoly(polys[0], var))
    for p in polys[1:]:
        roots &= rational_roots(UniPoly.from_multipoly(p, var))
    return roots


def intersect(A: TruncationCurve, B: TruncationCurve) -> IntersectionReport:
    """All rational points where curve A meets curve B.

    The two copies of psi become psi1 (on A) and psi2 (on B).  Common
    components of the two difference equations are split off and flagged
    as an identity component; the rest is eliminated by a resultant in
    psi1, rational roots are extracted in psi2, back-substituted, and
    every candidate pair is verified by exact evaluation on the original
    curves.  Candidates at poles are discarded.  Points with degenerate
    central charge are flagged, not dropped.
    """
    for curve in (A, B):
        if curve.symbols:
            raise ValueError(
                f"curve has residual symbols {curve.symbols}; "
                "intersection needs fully numeric curves"
            )
    if A.lam is None or B.lam is None:
        # A curve with no finite lambda meets nothing in the (c, lambda)
        # plane; two such curves coincide iff their constant charges do.
        both = A.lam is None and B.lam is None
        same = both and (A.c - B.c).num.is_zero()
        return IntersectionReport(points=(), identity_component=same, residual_degree=0)
    c1 = A.c.substitute("psi", RatFunc.var("psi1"))
    l1 = A.lam.substitute("psi", RatFunc.var("psi1"))
    c2 = B.c.substitute("psi", RatFunc.var("psi2"))
    l2 = B.lam.substitute("psi", RatFunc.var("psi2"))

    ec = (c1 - c2).num
    el = (l1 - l2).num

    identity = False
    if ec.is_zero() and el.is_zero():
        return IntersectionReport(points=(), identity_component=True, residual_degree=0)
    if ec.is_zero() or el.is_zero():
        # One equation is trivial: the other one's zero locus is a whole
        # family of intersections, not isolated points.
        return IntersectionReport(points=(), identity_component=True, residual_degree=0)

    common = poly_gcd(ec, el)
    if common.total_degree() > 0:
        identity = True
        ec = _as_quotient(ec, common)
        el = _as_quotient(el, common)

    deg_c = ec.degree("psi1")
    deg_l = el.degree("psi1")
    if deg_c >= 1 and deg_l >= 1:
        eliminant = resultant(ec, el, "psi1")
    elif deg_c == 0 and deg_l == 0:
        # Neither residual equation involves psi1: common psi2 roots would
        # give vertical lines, which are identity components.
        shared = _root_candidates(ec, el, "psi2")
        if shared:
            identity = True
        return IntersectionReport(points=(), identity_component=identity, residual_degree=0)
    else:
        eliminant = ec if deg_c == 0 else el

    if eliminant.is_zero():
        raise ValueError("eliminant vanished identically after component removal")

    uni = UniPoly.from_multipoly(eliminant, "psi2")
    residual = uni.degree()
    psi2_roots = sorted(rational_roots(uni))
    for b in psi2_roots:
        uni, mult = _deflate(uni, b)
        residual -= mult

    points = []
    for b in psi2_roots:
        value_b = _curve_value(B, b)
        if value_b is None:
            continue
        spec_c = ec.substitute("psi2", b)
        spec_l = el.substitute("psi2", b)
        candidates = _root_candidates(spec_c, spec_l, "psi1")
        if candidates is None:
            # Both equations vanish along psi2 = b: a free line of
            # solutions in psi1.
            identity = True
            continue
        for a in sorted(candidates):
            value_a = _curve_value(A, a)
            if value_a is None:
                continue
            if value_a != value_b:
                continue
            c_val, lam_val = value_a
            points.append(
                Intersection(
                    psi1=a,
                    psi2=b,
                    c=c_val,
                    lam=lam_val,
                    degenerate=c_val in DEGENERATE_CHARGES,
                )
            )
    points.sort(key=lambda p: (p.psi1, p.psi2))
    return IntersectionReport(
        points=tuple(points),
        identity_component=identity,
        residual_degree=residual,
    )


# ---------------------------------------------------------------------------
# JSON forms.
# ---------------------------------------------------------------------------


def curve_json(fam: HookFamily, curve: Optional[TruncationCurve] = None) -> dict:
    """The curve of a family as a JSON-ready mapping with exact text fields."""
    if curve is None:
        curve = phi(fam)
    return {
        "family": fam.tag,
        "n": str(fam.n),
        "m": str(fam.m),
        "c": curve.c.to_text(),
        "lambda": None if curve.lam is None else curve.lam.to_text(),
    }


def intersection_json(report: IntersectionReport) -> list:
    """Intersection points as a JSON-ready array of exact-text mappings."""
    return [
        {
            "psi1": str(p.psi1),
            "psi2": str(p.psi2),
            "c": str(p.c),
            "lambda": str(p.lam),
            "degenerate": p.degenerate,
        }
        for p in report.points
    ]
