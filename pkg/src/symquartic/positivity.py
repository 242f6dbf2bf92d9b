"""Nonnegativity decisions for symmetric quartics.

Finite n: by the half-degree principle a symmetric quartic is nonnegative
iff the binary quartic Phi_f(w, x, y) is nonnegative for every weight pair
w in the grid W_n.

Limit cone: f is in the limit nonnegativity cone iff Phi^alpha(x, y) =
Phi_f(alpha, 1-alpha, x, y) is nonnegative for every alpha in [0, 1].  The
nonnegativity status can only change across finitely many critical alpha
values; the decision isolates them exactly, samples one rational alpha per
open subinterval, and tests the endpoints as scalars.  Boundary status is
certified by exact real-root detection at algebraic critical values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraicField,
    RatFunc,
    UniPoly,
    binary_quartic_negative_point,
    binary_quartic_nonneg,
    binary_quartic_strictly_positive,
    count_real_roots,
    count_roots_open,
    disc_binary_quartic,
    irreducible_factors,
    isolate_real_roots,
    refine_root_interval,
    resultant,
    simplest_rational_between,
    squarefree_part_field,
    yun_decomposition,
)
from .partitions import w_grid
from .symfunc import LIMIT, SymFormP, phi_alpha_coeffs, restrict_alpha

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class NonnegVerdict:
    """IN/OUT verdict; when OUT, ``witness`` is a pair (w, (x, y)) such that
    Phi_f(w, x, y) < 0 exactly (w is a weight pair; in the limit case it is
    (alpha, 1-alpha))."""

    status: str  # "IN" | "OUT"
    witness: tuple | None = None


@dataclass(frozen=True)
class BoundaryVerdict:
    """INTERIOR / BOUNDARY / OUTSIDE relative to the limit cone; BOUNDARY
    carries an isolating interval for an alpha in (0,1) at which Phi^alpha
    has a repeated real projective root."""

    status: str  # "INTERIOR" | "BOUNDARY" | "OUTSIDE"
    alpha_witness: tuple[Fraction, Fraction] | None = None


# ---------------------------------------------------------------------------
# finite n
# ---------------------------------------------------------------------------


def is_nonneg(f: SymFormP) -> NonnegVerdict:
    """Half-degree-principle decision over the grid W_n (numeric scope)."""
    if f.scope is LIMIT:
        raise ValueError("use is_nonneg_limit for LIMIT-scope forms")
    if f.degree != 4:
        raise ValueError("decision implemented for degree 4")
    n = f.scope
    for w in w_grid(n, 2):
        h = restrict_alpha(f, w[0])
        if not binary_quartic_nonneg(h):
            point = binary_quartic_negative_point(h)
            return NonnegVerdict("OUT", (w, point))
    return NonnegVerdict("IN")


def is_strictly_positive(f: SymFormP) -> bool:
    """True iff f > 0 away from the origin (numeric scope).

    At interior grid weights this is strict positivity of the binary
    quartic; at the two zero-weight endpoints the binary form degenerates
    to a scalar times y^4 (the x variable carries weight zero), so only the
    scalar sum of coefficients must be positive.
    """
    if f.scope is LIMIT:
        raise ValueError("strict positivity test requires a numeric scope")
    n = f.scope
    total = sum(f.coeffs, _ZERO)
    if total <= 0:
        return False
    for w in w_grid(n, 2):
        if w[0] == 0 or w[1] == 0:
            continue  # covered by the scalar test above
        if not binary_quartic_strictly_positive(restrict_alpha(f, w[0])):
            return False
    return True


# ---------------------------------------------------------------------------
# limit cone: critical alpha values and cells
# ---------------------------------------------------------------------------


def _phi_x_poly(f: SymFormP) -> tuple[UniPoly, tuple[UniPoly, ...]]:
    """Phi^alpha(x, 1) as a polynomial in x over Q(alpha), together with the
    raw alpha-polynomial coefficients (descending x-order)."""
    cs = phi_alpha_coeffs(f)  # descending x-order, UniPoly in alpha
    p = UniPoly([RatFunc(c) for c in reversed(cs)])
    return p, cs


def _critical_polys(f: SymFormP) -> list[UniPoly]:
    """Polynomials in alpha whose roots in (0,1) delimit the cells on which
    the sign/root structure of Phi^alpha is constant.

    Generic case: the alpha-discriminant and the leading coefficient.  When
    either vanishes identically, fall back to a complete decomposition from
    the squarefree (Yun) structure of Phi^alpha(x,1) over Q(alpha): leading
    coefficients and discriminants of the squarefree factors, their
    pairwise resultants, the factor-coefficient denominators, and all raw
    coefficient polynomials.
    """
    p, cs = _phi_x_poly(f)
    lead = cs[0]
    delta = disc_binary_quartic(cs)  # UniPoly in alpha
    out: list[UniPoly] = []

    def add(poly: UniPoly) -> None:
        if not poly.is_zero() and poly.degree > 0:
            out.append(poly)

    if not delta.is_zero() and not lead.is_zero():
        add(delta)
        add(lead)
        return out

    # degenerate family: complete decomposition
    for c in cs:
        add(c)
    if p.is_zero():
        return out
    factors = [fac for fac, _k in yun_decomposition(p)]
    for fac in factors:
        for coef in fac.coeffs:
            add(coef.den)
            # numerators of non-lead coefficients are not structural, skip
        if fac.degree >= 1:
            # roots of the discriminant of the factor (real/complex changes)
            if fac.degree >= 2:
                d = resultant(fac, fac.derivative())
                if isinstance(d, RatFunc):
                    add(d.num)
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            r = resultant(factors[i], factors[j])
            if isinstance(r, RatFunc):
                add(r.num)
    return out


def _cells(f: SymFormP):
    """Breakpoints (isolating intervals in (0,1)) and open-cell sample points.

    Returns (breakpoints, samples): breakpoints is a sorted list of
    (lo, hi) isolating intervals of the critical alpha values in (0, 1),
    refined until strictly separated from 0, 1 and from each other;
    samples is one rational alpha strictly inside each of the k+1 open
    cells delimited by the k critical values.
    """
    polys = _critical_polys(f)
    if not polys:
        return [], [Fraction(1, 2)]
    product = UniPoly([_ONE])
    for q in polys:
        product = product * squarefree_part_field(q)
    product = squarefree_part_field(product)
    brk = isolate_real_roots(product, _ZERO, _ONE)

    # roots at exactly 0 or 1 do not subdivide (0, 1) but would confuse
    # interval refinement when they coincide with an interval endpoint
    interior = product
    for r in (_ZERO, _ONE):
        if interior(r) == 0:
            interior = interior.exact_div(UniPoly([-r, _ONE]))

    # refine so every non-point interval sits strictly inside (0, 1) and
    # strictly to the right of the previous interval; the roots themselves
    # are strictly interior, so repeated halving always terminates
    refined = []
    prev_hi = _ZERO
    for lo, hi in brk:
        while lo != hi and (lo <= prev_hi or hi >= 1):
            lo, hi = refine_root_interval(interior, lo, hi, (hi - lo) / 2)
        refined.append((lo, hi))
        prev_hi = hi
    brk = refined

    def middle(a: Fraction, b: Fraction) -> Fraction:
        return simplest_rational_between((3 * a + b) / 4, (a + 3 * b) / 4)

    samples = []
    prev_hi = _ZERO
    for lo, hi in brk:
        # sample the cell left of this root: after refinement prev_hi < lo
        # for point intervals (lo == hi is the root itself, stay below it),
        # and lo itself is a non-root strictly between the roots otherwise
        samples.append(middle(prev_hi, lo) if lo == hi else lo)
        prev_hi = hi
    samples.append(middle(prev_hi, _ONE))
    return brk, samples


def is_nonneg_limit(f: SymFormP) -> NonnegVerdict:
    """Membership in the limit nonnegativity cone (LIMIT scope)."""
    if f.degree != 4:
        raise ValueError("decision implemented for degree 4")
    if f.is_zero():
        return NonnegVerdict("IN")
    total = sum(f.coeffs, _ZERO)  # Phi^{1/2}(1,1); the alpha in {0,1} test
    if total < 0:
        return NonnegVerdict("OUT", ((_ZERO, _ONE), (_ZERO, _ONE)))
    _, samples = _cells(f)
    for alpha in samples:
        h = restrict_alpha(f, alpha)
        if not binary_quartic_nonneg(h):
            point = binary_quartic_negative_point(h)
            return NonnegVerdict("OUT", ((alpha, 1 - alpha), point))
    return NonnegVerdict("IN")


# ---------------------------------------------------------------------------
# boundary certification in the limit cone
# ---------------------------------------------------------------------------


def _has_real_projective_zero(h: tuple[Fraction, ...]) -> bool:
    """Real projective zero of a rational binary quartic (possibly zero)."""
    p = UniPoly(list(reversed([Fraction(c) for c in h])))
    if p.is_zero():
        return True
    if h[0] == 0:
        return True  # zero at (1, 0)
    if p.degree < 1:
        return False
    return count_real_roots(p) > 0


def _real_zero_at_algebraic(f: SymFormP, minpoly: UniPoly, lo, hi) -> bool:
    """Does Phi^{alpha*} have a real projective zero, alpha* the root of the
    irreducible minpoly isolated by (lo, hi)?  Fully exact."""
    cs = phi_alpha_coeffs(f)
    if minpoly.degree == 1:
        alpha = -minpoly.coeffs[0] / minpoly.coeffs[1]
        return _has_real_projective_zero(tuple(c(alpha) for c in cs))
    field = AlgebraicField(minpoly, lo, hi)
    elems = [field.elem(c % minpoly) for c in cs]
    if all(not e for e in elems):
        return True
    if not elems[0]:
        return True  # leading coefficient vanishes: zero at infinity
    p = UniPoly(list(reversed(elems)))
    if p.degree < 1:
        return False
    return count_real_roots(p) > 0


def boundary_status_limit(f: SymFormP) -> BoundaryVerdict:
    """INTERIOR/BOUNDARY/OUTSIDE status relative to the limit cone.

    A nonnegative quartic family lies on the boundary iff some alpha in
    (0, 1) gives Phi^alpha a repeated real projective root; since a
    nonnegative binary quartic vanishes to even order at every real zero,
    this is equivalent to Phi^alpha having any real projective zero.
    """
    if f.is_zero():
        raise ValueError("boundary status of the zero form is undefined")
    verdict = is_nonneg_limit(f)
    if verdict.status == "OUT":
        return BoundaryVerdict("OUTSIDE")
    cs = phi_alpha_coeffs(f)
    if cs[0].is_zero():
        # the x^4 coefficient vanishes identically: a real projective zero
        # at (1, 0) for every alpha
        return BoundaryVerdict("BOUNDARY", (Fraction(1, 2), Fraction(1, 2)))
    brk, samples = _cells(f)
    for alpha in samples:
        if _has_real_projective_zero(restrict_alpha(f, alpha)):
            return BoundaryVerdict("BOUNDARY", (alpha, alpha))
    if brk:
        product = UniPoly([_ONE])
        for q in _critical_polys(f):
            product = product * squarefree_part_field(q)
        factors = [
            fac
            for fac in irreducible_factors(squarefree_part_field(product))
            if fac.degree >= 1
        ]
        for lo, hi in brk:
            # identify the irreducible factor owning this root; interval
            # endpoints are non-roots of the product unless lo == hi
            for fac in factors:
                if lo == hi:
                    owns = fac(lo) == 0
                else:
                    owns = count_roots_open(fac, lo, hi) >= 1
                if owns and _real_zero_at_algebraic(f, fac, lo, hi):
                    return BoundaryVerdict("BOUNDARY", (lo, hi))
    return BoundaryVerdict("INTERIOR")
