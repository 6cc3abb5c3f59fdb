import json
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elliptic_calc.space import (
    DEGREE_CAP,
    EllipticRanks,
    InvalidRanksError,
    LiteralError,
    MirrorWarning,
    Strictness,
    from_literal,
    point,
    power,
    product,
    sphere,
)

from oracles import convolve, repeated
from strategies import small_sphere_products


def totals(x):
    return x.pi_total, x.h_total


def assert_valid(x: EllipticRanks):
    assert x.homology_ranks.get(0) == 1
    assert all(r > 0 for r in x.homotopy_ranks.values())
    assert all(r > 0 for r in x.homology_ranks.values())
    assert all(d >= 1 for d in x.homotopy_ranks)
    assert all(d >= 0 for d in x.homology_ranks)
    if x.h_total == 1:
        assert x.pi_total == 0


class TestSphere:
    @pytest.mark.parametrize("n, pi, h", [
        (3, {3: 1}, {0: 1, 3: 1}),
        (2, {2: 1, 3: 1}, {0: 1, 2: 1}),
        (4, {4: 1, 7: 1}, {0: 1, 4: 1}),
        (1, {1: 1}, {0: 1, 1: 1}),
    ])
    def test_ranks(self, n, pi, h):
        s = sphere(n)
        assert dict(s.homotopy_ranks) == pi
        assert dict(s.homology_ranks) == h
        assert_valid(s)

    @pytest.mark.parametrize("n", [0, -1, -7])
    def test_rejects_nonpositive(self, n):
        with pytest.raises(InvalidRanksError):
            sphere(n)

    def test_simply_connected_flag(self):
        assert not sphere(1).simply_connected
        assert sphere(2).simply_connected


class TestPoint:
    def test_tables(self):
        pt = point()
        assert dict(pt.homotopy_ranks) == {}
        assert dict(pt.homology_ranks) == {0: 1}
        assert totals(pt) == (0, 1)

    def test_product_identity(self):
        assert product([point(), sphere(3)]) == sphere(3)

    def test_power_idempotent(self):
        assert power(point(), 5) == point()


class TestProduct:
    def test_s2_s4(self):
        assert totals(product([sphere(2), sphere(4)])) == (4, 4)

    def test_singleton(self):
        x = sphere(6)
        assert product([x]) is x

    def test_three_s2(self):
        assert totals(product([sphere(2)] * 3)) == (6, 8)

    def test_empty(self):
        with pytest.raises(ValueError):
            product([])

    @given(small_sphere_products, small_sphere_products)
    def test_additive_and_multiplicative(self, x, y):
        xy = product([x, y])
        assert xy.pi_total == x.pi_total + y.pi_total
        assert dict(xy.homology_ranks) == convolve(dict(x.homology_ranks), dict(y.homology_ranks))
        assert_valid(xy)

    @given(small_sphere_products, small_sphere_products, small_sphere_products)
    def test_associative_commutative(self, x, y, z):
        assert product([x, y]) == product([y, x])
        assert product([product([x, y]), z]) == product([x, product([y, z])]) == product([x, y, z])


class TestPower:
    def test_s2_squared(self):
        assert totals(power(sphere(2), 2)) == (4, 4)

    def test_identity(self):
        x = product([sphere(2), sphere(5)])
        assert power(x, 1) == x

    def test_s3_fourth(self):
        # additivity: 4 * 1; multiplicativity: expand (t^3 + 1)^4 by the oracle
        expanded = repeated({3: 1, 0: 1}, 4)
        assert sum(expanded.values()) == 16
        x = power(sphere(3), 4)
        assert totals(x) == (4, 16)
        assert dict(x.homology_ranks) == expanded

    def test_zero(self):
        assert power(sphere(4), 0) == point()

    def test_negative(self):
        with pytest.raises(ValueError):
            power(sphere(2), -1)

    @given(small_sphere_products, st.integers(0, 4), st.integers(0, 4))
    def test_exponent_additive(self, x, m, n):
        assert power(x, m + n) == product([power(x, m), power(x, n)])

    @given(small_sphere_products, st.integers(0, 6))
    def test_totals(self, x, n):
        p = power(x, n)
        assert p.pi_total == n * x.pi_total
        assert p.h_total == x.h_total**n


class TestLiteral:
    def test_equals_sphere(self):
        assert from_literal({3: 1}, {0: 1, 3: 1}) == sphere(3)

    def test_point(self):
        assert from_literal({}, {0: 1}) == point()

    def test_forced_vanishing(self):
        with pytest.raises(LiteralError, match="H-rank 1 forces π-rank 0"):
            from_literal({2: 5}, {0: 1})

    def test_forced_vanishing_permissive(self):
        with pytest.raises(LiteralError, match="H-rank 1 forces π-rank 0"):
            from_literal({2: 5}, {0: 1}, Strictness.PERMISSIVE)

    @pytest.mark.parametrize("h", [{}, {2: 1}, {0: 2, 2: 1}, {0: 0, 3: 1}])
    def test_not_path_connected(self, h):
        with pytest.raises(LiteralError, match="degree 0"):
            from_literal({3: 1}, h, Strictness.PERMISSIVE)

    def test_zero_entries_dropped(self):
        x = from_literal({3: 1, 5: 0}, {0: 1, 3: 1, 7: 0})
        assert x == sphere(3)
        assert 5 not in x.homotopy_ranks

    def test_negative_rank(self):
        with pytest.raises(LiteralError):
            from_literal({3: -1}, {0: 1, 3: 1}, "permissive")

    def test_homotopy_degree_zero(self):
        with pytest.raises(LiteralError):
            from_literal({0: 1}, {0: 1, 3: 1}, "permissive")

    def test_degree_cap(self):
        with pytest.raises(LiteralError, match="cap"):
            from_literal({DEGREE_CAP + 1: 1}, {0: 1, 3: 1}, "permissive")
        from_literal({DEGREE_CAP - 1: 1}, {0: 1, DEGREE_CAP - 1: 1}, "permissive")

    def test_pi1_strict(self):
        with pytest.raises(LiteralError, match="abelian"):
            from_literal({1: 1}, {0: 1, 1: 1})
        x = from_literal({1: 1}, {0: 1, 1: 1}, abelian_pi1=True)
        assert x == sphere(1)
        assert not x.simply_connected
        assert from_literal({1: 1}, {0: 1, 1: 1}, "permissive") == sphere(1)

    def test_hilali_violating_needs_permissive(self):
        with pytest.raises(LiteralError, match="permissive"):
            from_literal({2: 9}, {0: 1, 2: 1})
        with pytest.warns(MirrorWarning):
            x = from_literal({2: 9}, {0: 1, 2: 1}, "permissive")
        assert totals(x) == (9, 2)

    def test_mirror_warning_not_error(self):
        # chi_pi = 2 > 0 although homotopy <= homology
        with pytest.warns(MirrorWarning):
            x = from_literal({2: 2}, {0: 1, 2: 2, 4: 1})
        assert totals(x) == (2, 4)

    def test_no_warning_for_sphere_table(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            from_literal({4: 1, 7: 1}, {0: 1, 4: 1})

    def test_label(self):
        assert from_literal({3: 1}, {0: 1, 3: 1}, label="S3").label == "S3"

    def test_label_ignored_by_equality(self):
        assert from_literal({3: 1}, {0: 1, 3: 1}, label="anything") == sphere(3)


class TestJson:
    def test_round_trip(self):
        x = product([sphere(2), sphere(3)])
        obj = json.loads(json.dumps(x.to_json()))
        assert EllipticRanks.from_json(obj) == x

    def test_documented_form(self):
        obj = {"pi": {"3": 1}, "h": {"0": 1, "3": 1}, "label": "S3"}
        x = EllipticRanks.from_json(obj)
        assert x == sphere(3)
        assert x.label == "S3"
        assert sphere(3).to_json() == obj

    def test_zero_rank_rejected(self):
        with pytest.raises(LiteralError, match="omitted"):
            EllipticRanks.from_json({"pi": {"3": 1, "5": 0}, "h": {"0": 1, "3": 1}})

    def test_malformed(self):
        with pytest.raises(LiteralError):
            EllipticRanks.from_json({"pi": {"x": 1}, "h": {"0": 1}})


@settings(max_examples=300)
@given(st.lists(st.integers(1, 10), min_size=1, max_size=5), st.integers(0, 3))
def test_constructors_preserve_invariants(dims, n):
    x = product([sphere(d) for d in dims])
    for y in (x, power(x, n), product([x, point()])):
        assert_valid(y)
