"""Graded-ring utilities on top of the sparse polynomial core.

The fixed basis order for graded pieces (and for printing) is graded lex
with x1 > x2 > ..., which for R_2 in three variables yields
x^2, xy, xz, y^2, yz, z^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from veroav.orders import GRLEX
from veroav.polynomial import Monomial, Polynomial, iter_monomials


class SingularMatrixError(ValueError):
    """Raised when a coordinate change matrix is not invertible."""


@lru_cache(maxsize=None)
def graded_basis(nvars: int, degree: int) -> tuple[Monomial, ...]:
    """Monomials of R_degree in descending graded-lex order."""
    monos = list(iter_monomials(nvars, degree))
    monos.sort(key=GRLEX.key, reverse=True)
    return tuple(monos)


def dim_graded(nvars: int, degree: int) -> int:
    """dim R_degree = C(nvars + degree - 1, degree)."""
    if degree < 0:
        return 0
    return math.comb(nvars + degree - 1, degree)


def coefficient_vector(p: Polynomial, degree: int) -> tuple[Fraction, ...]:
    """Coordinates of a homogeneous polynomial in the graded basis."""
    if not p.is_homogeneous() or (not p.is_zero() and p.homogeneous_degree() != degree):
        raise ValueError(f"polynomial is not homogeneous of degree {degree}")
    return tuple(p.coeff(m) for m in graded_basis(p.nvars, degree))


def from_coefficient_vector(nvars: int, degree: int, vec: Sequence) -> Polynomial:
    basis = graded_basis(nvars, degree)
    if len(vec) != len(basis):
        raise ValueError("vector length does not match the graded basis")
    return Polynomial(nvars, {m: Fraction(c) for m, c in zip(basis, vec)})


@dataclass(frozen=True)
class GradedPiece:
    """A subspace of R_degree given by spanning coefficient vectors."""

    nvars: int
    degree: int
    basis: tuple[Monomial, ...]
    rows: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_polys(cls, polys: Sequence[Polynomial], nvars: int, degree: int) -> "GradedPiece":
        rows = tuple(coefficient_vector(p, degree) for p in polys)
        return cls(nvars, degree, graded_basis(nvars, degree), rows)


def substitute_linear(p: Polynomial, matrix: Sequence[Sequence]) -> Polynomial:
    """p(A x): substitute x_i -> sum_j A[i][j] x_j for an invertible A."""
    from veroav.linalg import MatrixQ, determinant

    n = p.nvars
    A = MatrixQ.from_rows(matrix)
    if A.rows != n or A.cols != n:
        raise ValueError("matrix shape does not match the variable count")
    if determinant(A) == 0:
        raise SingularMatrixError("coordinate change matrix is singular")
    assignment = {
        i: Polynomial(n, {tuple(1 if k == j else 0 for k in range(n)): A.entries[i][j]
                          for j in range(n) if A.entries[i][j]})
        for i in range(n)
    }
    return p.substitute(assignment)


def resultant_univariate(p: Polynomial, q: Polynomial) -> Fraction:
    """Sylvester resultant of univariate p, q: deg(q) rows of p's coefficients
    first, then deg(p) rows of q's."""
    from veroav.linalg import MatrixQ, determinant

    if p.nvars != 1 or q.nvars != 1:
        raise ValueError("resultant requires univariate polynomials")
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    dp, dq = p.degree(), q.degree()
    pc = [p.coeff((dp - i,)) for i in range(dp + 1)]  # descending
    qc = [q.coeff((dq - i,)) for i in range(dq + 1)]
    size = dp + dq
    rows = []
    for shift in range(dq):
        rows.append([Fraction(0)] * shift + pc + [Fraction(0)] * (size - shift - dp - 1))
    for shift in range(dp):
        rows.append([Fraction(0)] * shift + qc + [Fraction(0)] * (size - shift - dq - 1))
    if not rows:  # both constants
        return Fraction(1)
    return determinant(MatrixQ.from_rows(rows))


def hessian_matrix(p: Polynomial) -> list[list[Polynomial]]:
    grads = p.gradient()
    return [[grads[i].partial(j) for j in range(p.nvars)] for i in range(p.nvars)]


def hessian_det(p: Polynomial) -> Polynomial:
    """Determinant of the matrix of second partials (Leibniz expansion;
    variable counts stay small here)."""
    if p.nvars < 2:
        raise ValueError("hessian determinant needs at least two variables")
    H = hessian_matrix(p)
    n = p.nvars
    total = Polynomial.zero(n)
    import itertools

    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        prod = Polynomial.constant(n, sign)
        for i in range(n):
            prod = prod * H[i][perm[i]]
            if prod.is_zero():
                break
        total = total + prod
    return total


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, cycle = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def power_linear_form_symbolic(nvars: int, degree: int) -> tuple[tuple[Monomial, int], ...]:
    """Multinomial expansion data for (a_1 x_1 + ... + a_n x_n)^degree.

    Returns, aligned with graded_basis(nvars, degree), pairs (alpha, m!/alpha!)
    so that the x^alpha coefficient of the power is the given multinomial times
    a^alpha.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    fact = math.factorial(degree)
    out = []
    for alpha in graded_basis(nvars, degree):
        denom = 1
        for e in alpha:
            denom *= math.factorial(e)
        out.append((alpha, fact // denom))
    return tuple(out)


def linear_form(coeffs: Sequence) -> Polynomial:
    """The linear form with the given coefficient vector."""
    n = len(coeffs)
    return Polynomial(
        n,
        {tuple(1 if j == i else 0 for j in range(n)): Fraction(c)
         for i, c in enumerate(coeffs) if Fraction(c)},
    )
