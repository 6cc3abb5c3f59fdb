"""Hypothesis strategies for spaces."""

from hypothesis import strategies as st

from elliptic_calc.space import product, sphere

sphere_dims = st.lists(st.integers(1, 10), min_size=1, max_size=6)
sphere_products = sphere_dims.map(lambda dims: product([sphere(d) for d in dims]))
small_sphere_products = st.lists(st.integers(1, 10), min_size=1, max_size=5).map(
    lambda dims: product([sphere(d) for d in dims])
)
