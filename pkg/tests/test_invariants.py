import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elliptic_calc.invariants import homotopy_poincare, poincare, report
from elliptic_calc.poly import Polynomial
from elliptic_calc.space import from_literal, point, power, product, sphere

from oracles import convolve
from strategies import sphere_products


class TestPolynomials:
    def test_homotopy_poincare(self):
        assert homotopy_poincare(sphere(5)) == Polynomial({5: 1})
        assert homotopy_poincare(sphere(2)) == Polynomial({3: 1, 2: 1})
        assert homotopy_poincare(point()).is_zero()

    def test_poincare(self):
        assert poincare(sphere(5)) == Polynomial({5: 1, 0: 1})
        assert poincare(point()) == Polynomial.one()

    def test_poincare_of_product(self):
        frozen = {6: 1, 4: 1, 2: 1, 0: 1}
        assert convolve({2: 1, 0: 1}, {4: 1, 0: 1}) == frozen
        assert poincare(product([sphere(2), sphere(4)])) == Polynomial(frozen)

    @given(sphere_products)
    def test_no_constant_homotopy_term(self, x):
        assert homotopy_poincare(x).coeff(0) == 0
        assert poincare(x).coeff(0) == 1


class TestReport:
    def test_odd_sphere(self):
        r = report(sphere(3))
        assert (r.pi_total, r.h_total, r.chi, r.chi_pi) == (1, 2, 0, -1)
        assert r.hilali_strict and r.mirror_holds and r.dichotomy_consistent

    def test_even_sphere(self):
        r = report(sphere(2))
        assert (r.pi_total, r.h_total, r.chi, r.chi_pi) == (2, 2, 2, 0)
        assert r.hilali_holds and not r.hilali_strict

    def test_s2_cubed(self):
        r = report(power(sphere(2), 3))
        assert (r.pi_total, r.h_total) == (6, 8)
        assert r.hilali_strict

    def test_point(self):
        r = report(point())
        assert (r.pi_total, r.h_total, r.chi, r.chi_pi) == (0, 1, 1, 0)
        assert r.ratio == 0

    def test_ratio_lowest_terms(self):
        r = report(product([sphere(2), sphere(2), sphere(3)]))
        assert r.ratio == Fraction(5, 8)
        assert (r.ratio.numerator, r.ratio.denominator) == (5, 8)

    def test_literal_violations_are_reported(self):
        with pytest.warns(UserWarning):
            x = from_literal({2: 9}, {0: 1, 2: 1}, "permissive")
        r = report(x)
        assert not r.hilali_holds and not r.mirror_holds and not r.dichotomy_consistent

    def test_non_simply_connected_flag(self):
        assert report(product([sphere(1), sphere(2)])).simply_connected is False

    def test_json_order_and_types(self):
        obj = report(sphere(2)).to_json()
        assert list(obj) == [
            "label", "homotopy_poincare", "poincare", "pi_total", "h_total", "chi", "chi_pi",
            "hilali_holds", "hilali_strict", "mirror_holds", "dichotomy_consistent", "ratio",
            "simply_connected",
        ]
        assert obj["poincare"] == {"2": "1", "0": "1"}
        assert obj["ratio"] == {"num": "1", "den": "1"}
        assert obj["h_total"] == "2"

    @given(sphere_products)
    def test_report_fields_consistent(self, x):
        r = report(x)
        assert r.pi_total == r.homotopy_poincare(1)
        assert r.h_total == r.poincare(1)
        assert r.chi == r.poincare(-1)
        assert r.chi_pi == r.homotopy_poincare(-1)
        assert r.h_total >= 1
        assert not r.hilali_strict or r.hilali_holds


class TestInequalities:
    @settings(max_examples=500)
    @given(sphere_products)
    def test_products_of_spheres(self, x):
        r = report(x)
        assert r.hilali_holds
        assert r.mirror_holds
        assert r.dichotomy_consistent

    @given(sphere_products)
    def test_ratio_in_unit_interval(self, x):
        r = report(x)
        assert r.ratio >= 0
        assert r.hilali_holds == (r.ratio <= 1)

    @given(st.lists(st.tuples(st.integers(1, 30), st.integers(1, 30)), min_size=1, max_size=5))
    def test_ratio_vs_hilali_on_literals(self, pairs):
        # arbitrary (a, b) totals, b >= 2, placed in even degrees
        for a, b in pairs:
            b = max(b, 2)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                x = from_literal({2: a}, {0: 1, 2: b - 1}, "permissive")
            r = report(x)
            assert r.hilali_holds == (r.ratio <= 1)
            assert r.ratio == Fraction(a, b)

    @settings(max_examples=200)
    @given(st.lists(st.tuples(st.integers(0, 20), st.integers(1, 19)), min_size=1, max_size=4))
    def test_products_preserve_hilali(self, specs):
        # each factor: homotopy total a <= homology total b, b >= 2
        factors = []
        for a, extra in specs:
            b = extra + 1
            a = min(a, b)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                factors.append(from_literal({3: a}, {0: 1, 4: extra}))
        assert all(report(f).hilali_holds for f in factors)
        assert report(product(factors)).hilali_holds


def test_sum_bounded_by_product():
    rng = random.Random(32)
    for _ in range(1000):
        n = rng.randint(1, 8)
        b = [rng.randint(2, 50) for _ in range(n)]
        a = [rng.randint(0, bi) for bi in b]
        prod = 1
        for bi in b:
            prod *= bi
        assert sum(a) <= prod
        assert sum(b) <= prod
