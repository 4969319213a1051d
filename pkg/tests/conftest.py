"""Shared strategies and helpers for the property suite."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from veroav.linalg import random_unimodular
from veroav.polynomial import Polynomial, iter_monomials

coefficients = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
).filter(lambda c: c != 0)


@st.composite
def polynomials(draw, nvars=st.integers(2, 3), max_degree=4, max_terms=6):
    n = draw(nvars)
    monos = st.tuples(*([st.integers(0, max_degree)] * n))
    terms = draw(
        st.dictionaries(monos, coefficients, min_size=0, max_size=max_terms)
    )
    return Polynomial(n, {m: Fraction(c) for m, c in terms.items()})


@st.composite
def homogeneous_polynomials(draw, nvars=st.integers(2, 3), degrees=st.integers(1, 5),
                            max_terms=6):
    n = draw(nvars)
    d = draw(degrees)
    basis = list(iter_monomials(n, d))
    chosen = draw(
        st.lists(st.sampled_from(basis), min_size=1, max_size=max_terms, unique=True)
    )
    coeffs = draw(
        st.lists(coefficients, min_size=len(chosen), max_size=len(chosen))
    )
    return Polynomial(n, dict(zip(chosen, coeffs)))


@st.composite
def unimodular_matrices(draw, n: int):
    seed = draw(st.integers(0, 2**32 - 1))
    steps = draw(st.integers(3, 8))
    return random_unimodular(n, random.Random(seed), steps)
