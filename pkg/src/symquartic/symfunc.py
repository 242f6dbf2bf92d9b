"""Symmetric forms in the power-sum and weighted-monomial bases.

Two representations are used:

* ``SymFormP`` -- a homogeneous symmetric form of degree k given by its
  exact rational coefficient vector over the partitions of k in canonical
  (reverse-lexicographic) order with respect to the normalized power sums
  ``p_i = (1/n)(x_1^i + ... + x_n^i)``, together with a scope: a concrete
  variable count ``n`` or the marker ``LIMIT`` (the cone of coefficient
  sequences obtained as n grows).

* ``SymFuncM`` -- a symmetric function written in the weighted monomial
  basis ``m_mu = Sym(x_1^{mu_1} ... x_r^{mu_r})`` (orbit average), with
  coefficients that are exact rational functions of the symbol ``n``
  (``RatFunc``).  This single internal representation serves every numeric
  n and the n -> infinity limit: specialization is evaluation, the limit is
  a degree comparison.

The m <-> p transition is computed by exact linear algebra over the field
of rational functions in n, never by a combinatorial closed formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .algebra import (
    MultiPoly,
    NoLimitError,
    RatFunc,
    UniPoly,
    ratfunc_falling_factorial,
)
from .partitions import Partition, is_partition, partitions_of


class _Limit:
    """Sentinel for the n -> infinity scope."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "LIMIT"


LIMIT = _Limit()

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _check_scope(scope):
    if scope is LIMIT:
        return scope
    if isinstance(scope, int) and scope >= 1:
        return scope
    raise ValueError(f"scope must be a positive integer or LIMIT, got {scope!r}")


# ---------------------------------------------------------------------------
# SymFormP
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymFormP:
    """Coefficient vector over partitions of ``degree`` in the p basis."""

    degree: int
    coeffs: tuple[Fraction, ...]
    scope: object  # int n or LIMIT

    def __post_init__(self):
        plist = partitions_of(self.degree)
        if len(self.coeffs) != len(plist):
            raise ValueError(
                f"need {len(plist)} coefficients for degree {self.degree}"
            )
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        _check_scope(self.scope)
        if self.scope is not LIMIT and self.scope < self.degree:
            raise ValueError("variable count must be at least the degree")

    def coeff(self, parts: Partition) -> Fraction:
        return self.coeffs[partitions_of(self.degree).index(tuple(parts))]

    def with_scope(self, scope) -> "SymFormP":
        return SymFormP(self.degree, self.coeffs, scope)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "SymFormP") -> "SymFormP":
        if self.degree != other.degree or self.scope != other.scope:
            raise ValueError("degree/scope mismatch")
        return SymFormP(
            self.degree,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            self.scope,
        )

    def __sub__(self, other: "SymFormP") -> "SymFormP":
        return self + other.scale(-1)

    def scale(self, s) -> "SymFormP":
        s = Fraction(s)
        return SymFormP(self.degree, tuple(c * s for c in self.coeffs), self.scope)


def form_from_dict(degree: int, coeffs: dict, scope) -> SymFormP:
    """Build a SymFormP from a {partition: coefficient} mapping."""
    plist = partitions_of(degree)
    vec = [_ZERO] * len(plist)
    for parts, c in coeffs.items():
        parts = tuple(parts)
        if parts not in plist:
            raise ValueError(f"{parts} is not a partition of {degree}")
        vec[plist.index(parts)] = Fraction(c)
    return SymFormP(degree, tuple(vec), scope)


# ---------------------------------------------------------------------------
# SymFuncM
# ---------------------------------------------------------------------------

#: engineering bound on tracked degree (products of two degree-4 functions)
DEGREE_BOUND = 8


def _mults_factorial(parts: Partition) -> int:
    """Product of factorials of the multiplicities of the parts."""
    out = 1
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        out *= factorial(j - i)
        i = j
    return out


@lru_cache(maxsize=None)
def _weight_ratfunc(parts: Partition) -> RatFunc:
    """W(mu, n) with m_mu = W(mu, n) * mbar_mu (classical monomial sum)."""
    r = len(parts)
    return RatFunc(Fraction(_mults_factorial(parts))) / ratfunc_falling_factorial(r)


class SymFuncM:
    """Symmetric function in the weighted monomial basis, coefficients in Q(n)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean: dict[Partition, RatFunc] = {}
        if terms:
            for parts, c in terms.items():
                parts = tuple(parts)
                if not is_partition(parts):
                    raise ValueError(f"invalid partition {parts}")
                if sum(parts) > DEGREE_BOUND:
                    raise ValueError("degree overflow beyond the tracked bound")
                if not isinstance(c, RatFunc):
                    c = RatFunc(Fraction(c))
                if c:
                    clean[parts] = c
        self.terms = clean

    def degree(self) -> int:
        return max((sum(p) for p in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SymFuncM):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"SymFuncM({self.terms!r})"

    def __add__(self, other: "SymFuncM") -> "SymFuncM":
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, RatFunc(0)) + c
        return SymFuncM(terms)

    def __sub__(self, other: "SymFuncM") -> "SymFuncM":
        return self + other.scale(RatFunc(-1))

    def scale(self, s) -> "SymFuncM":
        if not isinstance(s, RatFunc):
            s = RatFunc(Fraction(s))
        return SymFuncM({p: c * s for p, c in self.terms.items()})

    def specialize(self, n: int) -> dict[Partition, Fraction]:
        """Coefficients at a concrete n; partitions with more than n parts
        vanish identically and are dropped before evaluation."""
        out = {}
        for parts, c in self.terms.items():
            if len(parts) > n:
                continue
            v = c.at(n)
            if v:
                out[parts] = v
        return out

    def limit(self) -> dict[Partition, Fraction]:
        """Entrywise limit as n -> infinity; raises NoLimitError if any
        coefficient diverges."""
        out = {}
        for parts, c in self.terms.items():
            v = c.limit_at_infinity()
            if v:
                out[parts] = v
        return out

    def evaluate(self, point, n: int) -> Fraction:
        """Exact value at a rational point with n coordinates."""
        total = _ZERO
        for parts, c in self.terms.items():
            if len(parts) > n:
                continue
            total += c.at(n) * _mbar_value(parts, point) * _weight_ratfunc(parts).at(n)
        return total


def _mbar_value(parts: Partition, point) -> Fraction:
    """Value of the classical monomial symmetric polynomial mbar_mu."""
    pt = [Fraction(x) for x in point]
    n = len(pt)
    r = len(parts)
    if r > n:
        return _ZERO
    total = _ZERO
    seen = set()
    for positions in permutations(range(n), r):
        key = positions
        # distinct monomials: avoid double counting permutations that fix the
        # monomial (equal exponents on swapped positions)
        mono = tuple(sorted(zip(positions, parts)))
        if mono in seen:
            continue
        seen.add(mono)
        v = _ONE
        for pos, e in zip(positions, parts):
            v *= pt[pos] ** e
        total += v
    return total


# ---------------------------------------------------------------------------
# multiplication in the m basis
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _m_product_single(mu: Partition, nu: Partition) -> tuple:
    """Structure constants: m_mu * m_nu = sum_rho c_rho(n) m_rho.

    Returns a tuple of (rho, RatFunc) pairs.  The count N^rho_{mu nu} is the
    number of ways a fixed monomial of shape rho splits as a shape-mu times
    a shape-nu monomial; it does not depend on n.  The n-dependence enters
    only through the basis weights W(mu, n).
    """
    if not mu:
        return ((nu, RatFunc(1)),)
    if not nu:
        return ((mu, RatFunc(1)),)
    lmu, lnu = len(mu), len(nu)

    # candidate shapes rho: overlay nu onto mu with any overlap pattern
    candidates: set[Partition] = set()
    slots = lmu + lnu
    for assign in permutations(range(slots), lnu):
        expo = list(mu) + [0] * lnu
        for part, pos in zip(nu, assign):
            expo[pos] += part
        candidates.add(tuple(sorted((e for e in expo if e > 0), reverse=True)))

    out = []
    for rho in sorted(candidates, reverse=True):
        count = _split_count(rho, mu, nu)
        if count == 0:
            continue
        wr = (
            _weight_ratfunc(mu)
            * _weight_ratfunc(nu)
            / _weight_ratfunc(rho)
        )
        out.append((rho, wr * RatFunc(Fraction(count))))
    return tuple(out)


def _split_count(rho: Partition, mu: Partition, nu: Partition) -> int:
    """Number of exponent vectors a with a <= rho (entrywise), positive part
    shape(a) = mu and shape(rho - a) = nu."""
    r = len(rho)
    count = 0
    seen: set[tuple[int, ...]] = set()
    for positions in permutations(range(r), len(mu)):
        vec = [0] * r
        ok = True
        for part, pos in zip(mu, positions):
            vec[pos] += part
            if vec[pos] > rho[pos]:
                ok = False
                break
        if not ok:
            continue
        tvec = tuple(vec)
        if tvec in seen:
            continue
        seen.add(tvec)
        rest = tuple(
            sorted((rho[i] - tvec[i] for i in range(r) if rho[i] > tvec[i]), reverse=True)
        )
        if rest == nu and all(tvec[i] <= rho[i] for i in range(r)):
            count += 1
    return count


def multiply_m(f: SymFuncM, g: SymFuncM) -> SymFuncM:
    """Exact product in the weighted monomial basis (degree bound 8)."""
    if f.degree() + g.degree() > DEGREE_BOUND and not (f.is_zero() or g.is_zero()):
        raise ValueError("degree overflow beyond the tracked bound")
    terms: dict[Partition, RatFunc] = {}
    for mu, cf in f.terms.items():
        for nu, cg in g.terms.items():
            scale = cf * cg
            for rho, c in _m_product_single(mu, nu):
                terms[rho] = terms.get(rho, RatFunc(0)) + scale * c
    return SymFuncM(terms)


# ---------------------------------------------------------------------------
# the p basis and the transition
# ---------------------------------------------------------------------------


def power_sum(i: int, scope=None) -> SymFuncM:
    """The normalized power sum p_i = (1/n) sum x_j^i, as m_{(i)}."""
    if i < 1:
        raise ValueError("power sums are indexed by positive integers")
    return SymFuncM({(i,): RatFunc(1)})


@lru_cache(maxsize=None)
def _p_lambda_in_m(parts: Partition) -> SymFuncM:
    """p_lambda = prod p_{lambda_i} expanded in the m basis over Q(n)."""
    out = SymFuncM({(): RatFunc(1)})
    for a in parts:
        out = multiply_m(out, power_sum(a))
    return out


def p_to_m(f: SymFormP) -> SymFuncM:
    """Exact expansion of sum c_lambda p_lambda in the m basis."""
    if f.degree > DEGREE_BOUND:
        raise ValueError("degree beyond the engineering bound")
    total = SymFuncM()
    for parts, c in zip(partitions_of(f.degree), f.coeffs):
        if c:
            total = total + _p_lambda_in_m(parts).scale(RatFunc(c))
    return total


@lru_cache(maxsize=None)
def _m_to_p_matrix(weight: int) -> dict[Partition, dict[Partition, RatFunc]]:
    """For each mu |- weight: m_mu = sum_nu B[mu][nu] p_nu over Q(n),
    obtained by inverting the p -> m expansion by Gaussian elimination."""
    plist = partitions_of(weight)
    k = len(plist)
    # A[i][j] = coefficient of m_{plist[i]} in p_{plist[j]}
    cols = [_p_lambda_in_m(nu) for nu in plist]
    a = [[cols[j].terms.get(plist[i], RatFunc(0)) for j in range(k)] for i in range(k)]
    # augment with identity, invert over Q(n)
    aug = [row[:] + [RatFunc(1 if i == j else 0) for j in range(k)]
           for i, row in enumerate(a)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = RatFunc(1) / aug[col][col]
        aug[col] = [c * inv for c in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [cr - factor * cc for cr, cc in zip(aug[r], aug[col])]
    # p_j = sum_i A[i][j] m_i, so the m -> p matrix is the transpose of the
    # inverse: column i of A^{-1} expresses m_{plist[i]} in the p basis
    return {
        plist[i]: {plist[j]: aug[j][k + i] for j in range(k) if aug[j][k + i]}
        for i in range(k)
    }


def m_to_p(g: SymFuncM, scope) -> SymFormP:
    """Convert a homogeneous m-basis function to the p basis.

    ``scope`` is a numeric n (>= the degree) or ``LIMIT``; in the limit the
    coefficients are the n -> infinity limits (asymptotically m_mu -> p_mu),
    and a divergent coefficient raises ``NoLimitError("no limit")``.
    """
    _check_scope(scope)
    if g.is_zero():
        raise ValueError("cannot infer the degree of the zero function")
    weights = {sum(p) for p in g.terms}
    if len(weights) > 1:
        raise ValueError("m_to_p requires a homogeneous input")
    weight = weights.pop()
    if scope is not LIMIT and scope < weight:
        raise ValueError("variable count must be at least the degree")
    table = _m_to_p_matrix(weight)
    plist = partitions_of(weight)
    acc: dict[Partition, RatFunc] = {}
    for mu, c in g.terms.items():
        for nu, b in table[mu].items():
            acc[nu] = acc.get(nu, RatFunc(0)) + c * b
    vec = []
    for nu in plist:
        c = acc.get(nu, RatFunc(0))
        if scope is LIMIT:
            try:
                vec.append(c.limit_at_infinity())
            except NoLimitError:
                raise NoLimitError("no limit")
        else:
            vec.append(c.at(scope))
    return SymFormP(weight, tuple(vec), scope)


# ---------------------------------------------------------------------------
# evaluation and the Phi construction
# ---------------------------------------------------------------------------


def evaluate(f: SymFormP, point) -> Fraction:
    """Exact value of sum c_lambda p_lambda at a rational point.

    Requires a numeric scope; the point must have n coordinates.
    """
    if f.scope is LIMIT:
        raise ValueError("cannot evaluate a LIMIT-scope form at a point")
    n = f.scope
    pt = [Fraction(x) for x in point]
    if len(pt) != n:
        raise ValueError(f"point must have {n} coordinates")
    psums = {}

    def p_val(i: int) -> Fraction:
        if i not in psums:
            psums[i] = sum((x**i for x in pt), _ZERO) / n
        return psums[i]

    total = _ZERO
    for parts, c in zip(partitions_of(f.degree), f.coeffs):
        if c:
            v = c
            for a in parts:
                v *= p_val(a)
            total += v
    return total


def phi_form(f: SymFormP, d: int | None = None) -> MultiPoly:
    """The test form Phi_f(s_1..s_d, t_1..t_d) = sum c_lambda prod_i
    (s_1 t_1^{lambda_i} + ... + s_d t_d^{lambda_i}).

    Variables are ordered s_1..s_d, t_1..t_d.  For degree 2d the default is
    d = degree/2.
    """
    if d is None:
        if f.degree % 2:
            raise ValueError("degree must be even to infer d")
        d = f.degree // 2
    nv = 2 * d
    total = MultiPoly(nv)
    for parts, c in zip(partitions_of(f.degree), f.coeffs):
        if not c:
            continue
        prod = MultiPoly.const(c, nv)
        for a in parts:
            factor = MultiPoly(nv)
            for i in range(d):
                factor = factor + MultiPoly.var(i, nv) * MultiPoly.var(d + i, nv, a)
            prod = prod * factor
        total = total + prod
    return total


def phi_alpha_coeffs(f: SymFormP) -> tuple[UniPoly, ...]:
    """Coefficients of Phi_f(alpha, 1-alpha, x, y) as a binary quartic whose
    coefficients are polynomials in alpha.

    Returns a 5-tuple in descending x-order: entry i is the UniPoly (in
    alpha) coefficient of x^{4-i} y^i.
    """
    if f.degree != 4:
        raise ValueError("Phi^alpha is defined for quartics")
    alpha = UniPoly([_ZERO, _ONE])
    one_minus = UniPoly([_ONE, -_ONE])
    zero = UniPoly()
    total = [zero] * 5  # index = x-degree 0..4
    for parts, c in zip(partitions_of(4), f.coeffs):
        if not c:
            continue
        prod = [UniPoly([c])]  # degree-0 binary form
        for a in parts:
            factor = [one_minus] + [zero] * (a - 1) + [alpha]
            new = [zero] * (len(prod) + a)
            for i, u in enumerate(prod):
                if u.is_zero():
                    continue
                new[i] = new[i] + u * factor[0]
                new[i + a] = new[i + a] + u * factor[a]
            prod = new
        for i in range(5):
            total[i] = total[i] + prod[i]
    return tuple(total[4 - i] for i in range(5))


def restrict_alpha(f: SymFormP, alpha) -> tuple[Fraction, ...]:
    """The binary quartic Phi_f^alpha(x, y), five coefficients in descending
    x-order, for a rational alpha in [0, 1]."""
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must lie in [0, 1]")
    return tuple(u(alpha) for u in phi_alpha_coeffs(f))
