"""Closed-form identities for the boundary family of limit quartics.

The two-parameter-pair family

    f = a^2 p_(4) + 2ab p_(3,1) + (c^2 - a^2) p_(2^2)
        + (2cd + b^2 - 2ab) p_(2,1^2) + (d^2 - b^2) p_(1^4)

has an alpha-discriminant delta_f(alpha) that factors in closed form:

    delta_f = 16 (alpha - 1)^3 (c + d)^2 alpha^3 Q1(alpha) Q2(alpha)^2

with Q1 = G1 alpha^2 - G1 alpha - 16 a^2 (c + d)^2,
     G1 = (4cd - 8ad + 4a^2 + 4ab + b^2 - 8ca + 4c^2)
          (4cd + 8ad + 4a^2 + 4ab + b^2 + 8ca + 4c^2),
and  Q2 = G2 alpha^2 - G2 alpha + a^2 (c + d),
     G2 = 4a^2 d - b^2 c - 4abc.

This module verifies these identities symbolically on demand; the decision
procedures never assume them, so they serve purely as an executable
regression suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import UniPoly, disc_binary_quartic
from .symfunc import LIMIT, SymFormP, phi_alpha_coeffs, restrict_alpha

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class BoundaryParams:
    """Parameters (a, b, c, d) of the boundary family; the pairs (a, b) and
    (c, d) must each be nonzero."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a == 0 and self.b == 0:
            raise ValueError("(a, b) must not both be zero")
        if self.c == 0 and self.d == 0:
            raise ValueError("(c, d) must not both be zero")


def boundary_family_form(p: BoundaryParams) -> SymFormP:
    """The family member for parameters p, as a limit-scope form.

    Requires a != 0 (the quartic leading structure degenerates otherwise).
    """
    a, b, c, d = p.a, p.b, p.c, p.d
    if a == 0:
        raise ValueError("boundary_family_form requires a != 0")
    return SymFormP(
        4,
        (
            a * a,
            2 * a * b,
            c * c - a * a,
            2 * c * d + b * b - 2 * a * b,
            d * d - b * b,
        ),
        LIMIT,
    )


def q1_poly(p: BoundaryParams) -> UniPoly:
    """Q1(alpha) = G1 alpha^2 - G1 alpha - 16 a^2 (c+d)^2."""
    a, b, c, d = p.a, p.b, p.c, p.d
    g1 = (4 * c * d - 8 * a * d + 4 * a * a + 4 * a * b + b * b - 8 * c * a + 4 * c * c) * (
        4 * c * d + 8 * a * d + 4 * a * a + 4 * a * b + b * b + 8 * c * a + 4 * c * c
    )
    return UniPoly([-16 * a * a * (c + d) ** 2, -g1, g1])


def q2_poly(p: BoundaryParams) -> UniPoly:
    """Q2(alpha) = G2 alpha^2 - G2 alpha + a^2 (c+d)."""
    a, b, c, d = p.a, p.b, p.c, p.d
    g2 = 4 * a * a * d - b * b * c - 4 * a * b * c
    return UniPoly([a * a * (c + d), -g2, g2])


def disc_poly(p: BoundaryParams) -> UniPoly:
    """delta_f(alpha) computed from scratch: the discriminant of
    Phi^alpha(x, 1) with coefficients polynomial in alpha."""
    return disc_binary_quartic(phi_alpha_coeffs(boundary_family_form(p)))


def verify_disc_factorization(p: BoundaryParams) -> bool:
    """Exact polynomial identity delta_f = 16 (alpha-1)^3 (c+d)^2 alpha^3
    Q1 Q2^2, plus the punctual Q1/Q2 identities."""
    a, b, c, d = p.a, p.b, p.c, p.d
    q1 = q1_poly(p)
    q2 = q2_poly(p)
    alpha = UniPoly([_ZERO, _ONE])
    rhs = (
        (alpha - 1) ** 3
        * alpha**3
        * q1
        * q2
        * q2
        * (16 * (c + d) ** 2)
    )
    if disc_poly(p) != rhs:
        return False
    checks = [
        q1(Fraction(1, 3)) == q1(Fraction(2, 3)),  # Q1(alpha) = Q1(1-alpha)
        q1(Fraction(1, 5)) == q1(Fraction(4, 5)),
        q1(_ZERO) == -16 * a * a * (c + d) ** 2,
        q1(_HALF) == -Fraction(1, 4) * (4 * a * a + 4 * a * b + 4 * c * d + 4 * c * c + b * b) ** 2,
        q2(_ZERO) == a * a * (c + d),
        q2(_ONE) == a * a * (c + d),
        q2(_HALF) == Fraction(1, 4) * c * (2 * a + b) ** 2,
    ]
    return all(checks)


def second_case_form(a, blocks) -> SymFormP:
    """The second boundary family: f = a^2 p_(1^4) + b11 (p_(2,1^2) - p_(1^4))
    + 2 b12 (p_(3,1) - p_(2,1^2)) + b22 (p_(4) - p_(2^2)), limit scope."""
    a = Fraction(a)
    b11, b12, b22 = (Fraction(t) for t in blocks)
    return SymFormP(
        4,
        (b22, 2 * b12, -b22, b11 - 2 * b12, a * a - b11),
        LIMIT,
    )


def verify_second_case_double_root(samples=None) -> bool:
    """For samples (a, (b11, b12, b22)) with a != 0 and the 2x2 block
    positive definite, Phi^{1/2} of the second-family form has a double
    root at (x, y) = (1, -1): both the value and the x-derivative vanish.
    Samples violating the preconditions are skipped."""
    if samples is None:
        samples = [
            (1, (1, 0, 1)),
            (2, (2, 1, 2)),
            (Fraction(1, 2), (3, -1, 1)),
            (3, (Fraction(5, 2), Fraction(1, 3), 2)),
            (-1, (1, Fraction(-1, 2), 4)),
        ]
    checked = 0
    for a, (b11, b12, b22) in samples:
        a, b11, b12, b22 = (Fraction(t) for t in (a, b11, b12, b22))
        if a == 0 or b11 <= 0 or b11 * b22 - b12 * b12 <= 0:
            continue
        h = restrict_alpha(second_case_form(a, (b11, b12, b22)), _HALF)
        # h is (h4, h3, h2, h1, h0), descending in x
        value = h[0] - h[1] + h[2] - h[3] + h[4]
        deriv = 4 * h[0] - 3 * h[1] + 2 * h[2] - h[3]
        if value != 0 or deriv != 0:
            return False
        checked += 1
    return checked > 0
