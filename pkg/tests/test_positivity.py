import random
from fractions import Fraction

import pytest

from symquartic.positivity import (
    boundary_status_limit,
    is_nonneg,
    is_nonneg_limit,
    is_strictly_positive,
)
from symquartic.symfunc import LIMIT, SymFormP, evaluate, form_from_dict, restrict_alpha

from conftest import random_form


def witness_value(f, verdict):
    """Exact value of the binary quartic at the witness point."""
    (w, point) = verdict.witness
    h = restrict_alpha(f.with_scope(LIMIT) if f.scope is LIMIT else f, w[0])
    x, y = point
    return sum(c * x ** (4 - i) * y**i for i, c in enumerate(h))


class TestFiniteN:
    def test_negative_p4_out(self):
        f = form_from_dict(4, {(4,): -1}, 4)
        verdict = is_nonneg(f)
        assert verdict.status == "OUT"
        assert witness_value(f, verdict) < 0

    def test_power_mean_examples(self):
        # p_2^2 >= p_1^4 and p_4 >= p_2^2 on every point set
        for n in (4, 6):
            assert is_nonneg(form_from_dict(4, {(2, 2): 1, (1, 1, 1, 1): -1}, n)).status == "IN"
            assert is_nonneg(form_from_dict(4, {(4,): 1, (2, 2): -1}, n)).status == "IN"
            assert is_nonneg(form_from_dict(4, {(2, 2): 1, (4,): -1}, n)).status == "OUT"

    def test_witness_soundness_random(self):
        rng = random.Random(23)
        outs = 0
        for _ in range(60):
            f = random_form(rng, 4)
            verdict = is_nonneg(f)
            if verdict.status == "OUT":
                outs += 1
                assert witness_value(f, verdict) < 0
        assert outs > 0

    def test_agrees_with_grid_sampling(self):
        rng = random.Random(31)
        grid = [Fraction(k, 2) for k in range(-4, 5)]
        for _ in range(25):
            f = random_form(rng, 4, bound=2, den=2)
            verdict = is_nonneg(f)
            if verdict.status == "IN":
                for pt in _sample_points(rng, grid, 40):
                    assert evaluate(f, pt) >= 0
            else:
                assert witness_value(f, verdict) < 0

    def test_downward_closure(self):
        rng = random.Random(41)
        seen = 0
        for _ in range(30):
            f = random_form(rng, 8)
            if is_nonneg(f).status == "IN":
                seen += 1
                assert is_nonneg(f.with_scope(4)).status == "IN"
        assert seen > 0

    def test_limit_scope_rejected(self):
        with pytest.raises(ValueError):
            is_nonneg(form_from_dict(4, {(4,): 1}, LIMIT))


def _sample_points(rng, grid, count):
    for _ in range(count):
        yield tuple(rng.choice(grid) for _ in range(4))


class TestStrictPositivity:
    def test_sum_of_fourth_powers(self):
        assert is_strictly_positive(form_from_dict(4, {(4,): 1}, 4))

    def test_nonneg_with_zero_not_strict(self):
        # p_4 - p_(2,2) vanishes at the all-ones point
        f = form_from_dict(4, {(4,): 1, (2, 2): -1}, 4)
        assert is_nonneg(f).status == "IN"
        assert not is_strictly_positive(f)

    def test_negative_not_strict(self):
        assert not is_strictly_positive(form_from_dict(4, {(4,): -1}, 4))


class TestLimitCone:
    def test_p22_in(self):
        assert is_nonneg_limit(form_from_dict(4, {(2, 2): 1}, LIMIT)).status == "IN"

    def test_p4_minus_p22_in(self):
        f = form_from_dict(4, {(4,): 1, (2, 2): -1}, LIMIT)
        assert is_nonneg_limit(f).status == "IN"

    def test_p22_minus_p4_out_with_witness(self):
        f = form_from_dict(4, {(2, 2): 1, (4,): -1}, LIMIT)
        verdict = is_nonneg_limit(f)
        assert verdict.status == "OUT"
        assert witness_value(f, verdict) < 0

    def test_zero_form_in(self):
        assert is_nonneg_limit(SymFormP(4, (0,) * 5, LIMIT)).status == "IN"

    def test_negative_total_out(self):
        f = form_from_dict(4, {(1, 1, 1, 1): -1}, LIMIT)
        assert is_nonneg_limit(f).status == "OUT"

    def test_regression_cell_inside_isolating_interval(self):
        # this form is negative only on a thin alpha-window near 0.03 that
        # sits inside an isolating interval of the critical polynomial; a
        # sampler visiting only gaps between intervals misses it
        f = SymFormP(4, (0, 1, 1, -2, Fraction(3, 2)), LIMIT)
        verdict = is_nonneg_limit(f)
        assert verdict.status == "OUT"
        assert witness_value(f, verdict) < 0
        assert is_nonneg(f.with_scope(20)).status == "OUT"

    def test_limit_implies_every_finite_n(self):
        rng = random.Random(53)
        hits = 0
        for _ in range(25):
            f = random_form(rng, LIMIT)
            if is_nonneg_limit(f).status == "IN":
                hits += 1
                for n in (4, 7, 11):
                    assert is_nonneg(f.with_scope(n)).status == "IN"
        assert hits > 0

    def test_limit_agrees_with_dense_alpha_sampling(self):
        rng = random.Random(59)
        alphas = [Fraction(k, 97) for k in range(98)]
        xs = [Fraction(k, 3) for k in range(-9, 10)]
        for _ in range(20):
            f = random_form(rng, LIMIT)
            verdict = is_nonneg_limit(f)
            sampled_negative = False
            for alpha in alphas:
                h = restrict_alpha(f, alpha)
                for x in xs:
                    if sum(c * x ** (4 - i) for i, c in enumerate(h)) < 0 or h[4] < 0:
                        sampled_negative = True
                        break
                if sampled_negative:
                    break
            if verdict.status == "IN":
                assert not sampled_negative
            else:
                assert witness_value(f, verdict) < 0


class TestBoundaryStatus:
    def test_p22_interior(self):
        f = form_from_dict(4, {(2, 2): 1}, LIMIT)
        assert boundary_status_limit(f).status == "INTERIOR"

    def test_p1111_boundary(self):
        f = form_from_dict(4, {(1, 1, 1, 1): 1}, LIMIT)
        assert boundary_status_limit(f).status == "BOUNDARY"

    def test_outside(self):
        f = form_from_dict(4, {(4,): -1}, LIMIT)
        assert boundary_status_limit(f).status == "OUTSIDE"

    def test_zero_form_rejected(self):
        with pytest.raises(ValueError):
            boundary_status_limit(SymFormP(4, (0,) * 5, LIMIT))

    def test_example_boundary_witness(self):
        # the known double roots sit at 1/2 +- (7/298) sqrt(149)
        f = SymFormP(
            4,
            (1, Fraction(-13, 5), 0, Fraction(179, 100), Fraction(-51, 400)),
            LIMIT,
        )
        verdict = boundary_status_limit(f)
        assert verdict.status == "BOUNDARY"
        lo, hi = verdict.alpha_witness
        root_sq = Fraction(149) * Fraction(7, 298) ** 2
        matched = False
        for sign in (-1, 1):
            # check (candidate - 1/2)^2 == root_sq for some value in [lo, hi]
            a, b = sorted(((lo - Fraction(1, 2)) * sign, (hi - Fraction(1, 2)) * sign))
            if a * abs(a) <= root_sq <= b * abs(b):
                matched = True
        assert matched
