"""Membership in the symmetric-SOS cones with rational block certificates.

A symmetric quartic is a symmetric sum of squares exactly when its five
coefficients (canonical order ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``)
can be matched by the block decomposition

    f = a11 p_(1^4) + 2 a12 p_(2,1^2) + a22 p_(2^2)
        + b11 (p_(2,1^2) - p_(1^4)) + 2 b12 (p_(3,1) - p_(2,1^2))
        + b22 (p_(4) - p_(2^2))
        + gamma ( 1/2 p_(1^4) - p_(2,1^2) + ((n^2-3n+3)/(2n^2)) p_(2^2)
                  + ((2n-2)/n^2) p_(3,1) + ((1-n)/(2n^2)) p_(4) )

with the alpha-block [[a11, a12], [a12, a22]] and the beta-block
[[b11, b12], [b12, b22]] both PSD and gamma >= 0.  In the limit cone the
scalar-block generator degenerates to (1/2)(p_2 - p_1^2)^2, which already
lies in the span of the alpha-block, so gamma = 0 is forced there.

The matching equations leave two free parameters (gamma and b11 = u); for
fixed gamma the PSD constraints on u are linear lower bounds intersected
with one concave-quadratic condition, so feasibility is decided exactly by
a one-dimensional analysis, and feasibility over gamma by isolating the
roots of the finitely many polynomials (in gamma) at which the
one-dimensional answer can change.  The feasible (gamma, u) region is
convex (the blocks are affine in (gamma, u)), hence the feasible gamma
values form one closed interval and a scan over exact rational candidates
is complete up to the single-irrational-point degeneracy, which is handled
by exact arithmetic in the algebraic field of the breakpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraicField,
    SymMat2,
    UniPoly,
    count_roots_open,
    irreducible_factors,
    isolate_real_roots,
    psd2,
    simplest_rational_between,
    squarefree_part_field,
)
from .symfunc import LIMIT, SymFormP

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SosCertificate:
    """Block data (A, B, gamma) of a symmetric-SOS decomposition.

    ``A`` is the alpha-block over (p_1^2, p_2) products, ``B`` the
    beta-block over the hook generators, ``gamma`` the coefficient of the
    scalar-block generator.  Valid certificates have both blocks PSD and
    gamma >= 0 (gamma = 0 under LIMIT scope).
    """

    A: SymMat2
    B: SymMat2
    gamma: Fraction
    scope: object

    def is_valid(self) -> bool:
        return psd2(self.A) and psd2(self.B) and self.gamma >= 0 and (
            self.scope is not LIMIT or self.gamma == 0
        )


@dataclass(frozen=True)
class SosVerdict:
    """IN/OUT verdict.  IN normally carries a verified rational
    certificate; ``note`` flags the degenerate case where the only
    feasible decomposition sits at a single irrational gamma and no
    rational certificate exists in this parametrization.  OUT may carry a
    separating dual functional (see ``find_separating_functional``)."""

    status: str  # "IN" | "OUT"
    certificate: SosCertificate | None = None
    separator: object | None = None
    note: str | None = None


def _gamma_gen_coeffs(scope) -> tuple[Fraction, ...]:
    """Canonical-order coefficients of the scalar-block generator."""
    if scope is LIMIT:
        return (_ZERO, _ZERO, _HALF, Fraction(-1), _HALF)
    n = scope
    return (
        Fraction(1 - n, 2 * n * n),
        Fraction(2 * n - 2, n * n),
        Fraction(n * n - 3 * n + 3, 2 * n * n),
        Fraction(-1),
        _HALF,
    )


def expand_certificate(cert: SosCertificate) -> SymFormP:
    """The exact coefficient vector of the block decomposition."""
    scope = cert.scope
    if scope is LIMIT:
        if cert.gamma != 0:
            raise ValueError("LIMIT certificates require gamma = 0")
    elif not isinstance(scope, int) or scope < 4:
        raise ValueError("certificate scope must be an integer >= 4 or LIMIT")
    A, B, g = cert.A, cert.B, cert.gamma
    g4, g31, g22, g211, g1111 = _gamma_gen_coeffs(scope)
    return SymFormP(
        4,
        (
            B.m22 + g * g4,
            2 * B.m12 + g * g31,
            A.m22 - B.m22 + g * g22,
            2 * A.m12 + B.m11 - 2 * B.m12 + g * g211,
            A.m11 - B.m11 + g * g1111,
        ),
        scope,
    )


# ---------------------------------------------------------------------------
# one-dimensional feasibility at fixed gamma
# ---------------------------------------------------------------------------


def _sign(x) -> int:
    """Exact sign of a Fraction or of an algebraic-field element."""
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    return x.sign()


def _u_feasible(c, scope, gamma):
    """Feasibility of the free parameter u = b11 at a fixed gamma.

    ``gamma`` may be a Fraction or an algebraic-field element; all tests
    are exact sign evaluations.  Returns (feasible, u) where u is a
    witness value (the smallest rational one when gamma is rational:
    either the binding lower bound or the vertex of the concave
    determinant quadratic).
    """
    c4, c31, c22, c211, c1111 = c
    if scope is LIMIT:
        w1 = w2 = w3 = _ZERO  # gamma multipliers vanish at gamma = 0
    else:
        n = scope
        w1 = Fraction(n - 1, 2 * n * n)  # b22 slope
        w2 = Fraction(n - 1, n * n)  # -b12 slope
        w3 = Fraction((n - 2) * (n - 2), 2 * n * n)  # -a22 slope
    b22 = c4 + gamma * w1
    b12 = c31 / 2 - gamma * w2
    a22 = c22 + c4 - gamma * w3
    s_b22 = _sign(b22)
    if s_b22 < 0 or _sign(a22) < 0:
        return False, None
    if s_b22 == 0 and _sign(b12) != 0:
        return False, None
    # lower bounds on u
    lower = gamma / 2 - c1111  # a11 >= 0
    if _sign(lower) < 0:
        lower = _ZERO  # u >= 0
    if s_b22 > 0:
        hook = b12 * b12 / b22  # u * b22 >= b12^2
        if _sign(hook - lower) > 0:
            lower = hook
    # concave quadratic Q(u) = a11 a22 - a12^2 = -u^2/4 + q1 u + q0
    s = c211 + 2 * b12 + gamma
    q1 = a22 + s / 2
    q0 = (c1111 - gamma / 2) * a22 - s * s / 4
    q_at_lower = -lower * lower / 4 + q1 * lower + q0
    if _sign(q_at_lower) >= 0:
        return True, lower
    vertex = 2 * q1
    disc = q1 * q1 + q0  # Q(vertex)
    if _sign(disc) >= 0 and _sign(vertex - lower) > 0:
        return True, vertex
    return False, None


def _assemble(f: SymFormP, gamma: Fraction, u: Fraction) -> SosCertificate:
    c4, c31, c22, c211, c1111 = f.coeffs
    if f.scope is LIMIT:
        b22, b12, a22 = c4, c31 / 2, c22 + c4
    else:
        n = f.scope
        b22 = c4 + gamma * Fraction(n - 1, 2 * n * n)
        b12 = c31 / 2 - gamma * Fraction(n - 1, n * n)
        a22 = c22 + c4 - gamma * Fraction((n - 2) * (n - 2), 2 * n * n)
    s = c211 + 2 * b12 + gamma
    cert = SosCertificate(
        SymMat2(c1111 + u - gamma / 2, (s - u) / 2, a22),
        SymMat2(u, b12, b22),
        gamma,
        f.scope,
    )
    if not cert.is_valid() or expand_certificate(cert) != f:
        raise AssertionError("internal error: certificate failed verification")
    return cert


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------


def sos_membership_limit(f: SymFormP) -> SosVerdict:
    """Membership in the limit SOS cone (LIMIT scope; gamma = 0 forced)."""
    if f.degree != 4:
        raise ValueError("decision implemented for degree 4")
    if f.scope is not LIMIT:
        raise ValueError("use sos_membership for numeric scopes")
    ok, u = _u_feasible(f.coeffs, LIMIT, _ZERO)
    if not ok:
        return SosVerdict("OUT")
    return SosVerdict("IN", certificate=_assemble(f, _ZERO, u))


def _breakpoint_polys(f: SymFormP) -> list[UniPoly]:
    """Polynomials in gamma across whose roots u-feasibility can change."""
    c4, c31, c22, c211, c1111 = f.coeffs
    n = f.scope
    w1 = Fraction(n - 1, 2 * n * n)
    w2 = Fraction(n - 1, n * n)
    w3 = Fraction((n - 2) * (n - 2), 2 * n * n)
    b22 = UniPoly([c4, w1])
    b12 = UniPoly([c31 / 2, -w2])
    a22 = UniPoly([c22 + c4, -w3])
    s = UniPoly([c211 + c31, 1 - 2 * w2])
    cp = UniPoly([c1111, -_HALF])  # c1111 - gamma/2
    l1 = -cp  # lower bound a11 >= 0
    q1 = a22 + s.scale(_HALF)
    q0 = a22 * cp - (s * s).scale(Fraction(1, 4))
    disc = q1 * q1 + q0
    b12sq = b12 * b12
    polys = [
        b22,
        b12,
        a22,
        disc,
        q0,  # Q at u = 0
        (l1 * l1).scale(Fraction(-1, 4)) + q1 * l1 + q0,  # Q at u = l1
        (b12sq * b12sq).scale(Fraction(-1, 4))
        + q1 * b12sq * b22
        + q0 * b22 * b22,  # Q at u = b12^2/b22, cleared by b22^2
        q1,  # vertex vs 0
        q1.scale(Fraction(2)) - l1,  # vertex vs l1
        q1.scale(Fraction(2)) * b22 - b12sq,  # vertex vs b12^2/b22, cleared
    ]
    return [p for p in polys if not p.is_zero() and p.degree > 0]


def sos_membership(f: SymFormP) -> SosVerdict:
    """Membership in the symmetric-SOS cone at the form's numeric scope."""
    if f.degree != 4:
        raise ValueError("decision implemented for degree 4")
    if f.scope is LIMIT:
        raise ValueError("use sos_membership_limit for LIMIT-scope forms")
    n = f.scope
    if n < 4:
        raise ValueError("scope must be at least 4")
    c4, c31, c22, c211, c1111 = f.coeffs
    # admissible gamma range from b22 >= 0 (increasing) and a22 >= 0
    # (strictly decreasing in gamma)
    lo = _ZERO if c4 >= 0 else Fraction(-c4) * Fraction(2 * n * n, n - 1)
    if c22 + c4 < 0:
        return SosVerdict("OUT")
    hi = (c22 + c4) * Fraction(2 * n * n, (n - 2) * (n - 2))
    if lo > hi:
        return SosVerdict("OUT")

    product = UniPoly([_ONE])
    for q in _breakpoint_polys(f):
        product = product * squarefree_part_field(q)
    product = squarefree_part_field(product)
    intervals = isolate_real_roots(product, lo, hi)

    candidates = {lo, hi}
    prev = lo
    for a, b in intervals:
        if a == b:
            candidates.add(a)
        if a > prev:
            candidates.add(simplest_rational_between((3 * prev + a) / 4, (prev + 3 * a) / 4))
        prev = max(prev, b)
    if prev < hi:
        candidates.add(simplest_rational_between((3 * prev + hi) / 4, (prev + 3 * hi) / 4))
    for gamma in sorted(candidates):
        if gamma < lo or gamma > hi:
            continue
        ok, u = _u_feasible(f.coeffs, n, gamma)
        if ok:
            return SosVerdict("IN", certificate=_assemble(f, gamma, u))

    # remaining possibility: feasibility only at an irrational breakpoint
    factors = [p for p in irreducible_factors(product) if p.degree >= 2]
    for a, b in intervals:
        if a == b:
            continue
        for fac in factors:
            if count_roots_open(fac, a, b) >= 1:
                field = AlgebraicField(fac, a, b)
                gamma_star = field.elem(UniPoly([_ZERO, _ONE]))
                if _sign(gamma_star) >= 0 and _u_feasible(f.coeffs, n, gamma_star)[0]:
                    return SosVerdict(
                        "IN",
                        note=(
                            "feasible only at a single irrational gamma "
                            f"isolated by ({a}, {b}); no rational certificate "
                            "exists in this parametrization"
                        ),
                    )
                break
    return SosVerdict("OUT")


# ---------------------------------------------------------------------------
# best-effort dual separator for OUT verdicts
# ---------------------------------------------------------------------------


def find_separating_functional(f: SymFormP, n: int | None = None):
    """A dual functional ell with PSD blocks and ell(f) < 0, if the search
    finds one (the form should be outside the SOS cone at scope n).

    Searches, in order: point evaluations at two-value points
    (t, ..., t, u, ..., u); the boundary-family functionals built from a
    rational (a, b, c, d) grid; the special functional (1,0,1,0,0).
    Returns None if nothing in the search space separates.
    """
    from .dualcone import (
        DualFunctional,
        boundary_family_functional,
        dual_membership,
        pair,
        point_eval_functional,
    )

    if n is None:
        n = f.scope
    if n is LIMIT or not isinstance(n, int) or n < 4:
        raise ValueError("separator search requires a numeric scope >= 4")

    small = [Fraction(v) for v in (1, -1, 2, -2)] + [
        Fraction(s, 2) for s in (1, -1, 3, -3)
    ]
    for k in range(1, n + 1):
        for t in small:
            for u in small + [_ZERO]:
                v = [t] * k + [u] * (n - k)
                ell = point_eval_functional(v)
                if pair(ell, f) < 0 and dual_membership(ell, n):
                    return ell

    grid = [Fraction(p, q) for q in (1, 2, 4, 5, 10) for p in range(-8, 9) if p]
    for a in (Fraction(1),):
        for c in (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2)):
            for b in grid:
                for d in grid:
                    ell = boundary_family_functional(a, b, c, d)
                    if pair(ell, f) < 0 and dual_membership(ell, n):
                        return ell

    ell = DualFunctional(_ONE, _ZERO, _ONE, _ZERO, _ZERO)
    if pair(ell, f) < 0 and dual_membership(ell, n):
        return ell
    return None
