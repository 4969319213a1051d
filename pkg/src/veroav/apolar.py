"""Apolarity: the differentiation action of R on its dual ring, Macaulay
inverse systems of smooth Milnor algebras, the dual smoothness criterion,
and the Hessian socle check.

The action is plain differentiation, h(d/dy_1, ..., d/dy_n) F, so the
pairing matrix of the degree-e monomial bases is diagonal with entries
alpha!; the inverse system is the one-dimensional kernel of that weighted
pairing against (J_f)_T.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from veroav.groebner import buchberger, normal_form, projective_empty
from veroav.linalg import MatrixQ, kernel_basis
from veroav.milnor import InternalDefectError, gb_jacobian, is_smooth, jacobian_rref, validate_input
from veroav.polynomial import Monomial, Polynomial, iter_monomials, mono_div
from veroav.polyring import graded_basis, hessian_det


class NotSmoothError(ValueError):
    pass


def apolar_action(h: Polynomial, F: Polynomial) -> Polynomial:
    """h acting on F by differentiation: h(d/dy_1,...,d/dy_n) F."""
    if h.nvars != F.nvars:
        raise ValueError("polynomials live in different rings")
    out: dict[Monomial, Fraction] = {}
    for beta, c in h.terms.items():
        for gamma, e in F.terms.items():
            diff = mono_div(gamma, beta)
            if diff is None:
                continue
            factor = 1
            for g, b in zip(gamma, beta):
                if b:
                    factor *= math.factorial(g) // math.factorial(g - b)
            v = out.get(diff, Fraction(0)) + c * e * factor
            if v:
                out[diff] = v
            else:
                del out[diff]
    return Polynomial(h.nvars, out)


@dataclass(frozen=True)
class InverseSystem:
    """Degree-T dual generator F with Ann(F) = J_f, normalized to primitive
    integer coefficients with positive leading coefficient."""

    F: Polynomial
    socle_degree: int


def inverse_system(f: Polynomial) -> InverseSystem:
    """Macaulay inverse system of the Milnor algebra of a smooth hypersurface.

    F spans the kernel of the apolar pairing against (J_f)_T; the kernel must
    be one-dimensional, and the annihilation of every Jacobian generator (and
    of its monomial multiples up to degree T) is re-verified directly.
    """
    hi = validate_input(f)
    if not is_smooth(f):
        raise NotSmoothError("the inverse system is computed for smooth hypersurfaces")
    T = hi.T
    L = jacobian_rref(f, T)
    basis_T = graded_basis(hi.n, T)
    weights = []
    for mono in basis_T:
        w = 1
        for e in mono:
            w *= math.factorial(e)
        weights.append(w)
    pairing_rows = [
        [row[j] * weights[j] for j in range(len(basis_T))] for row in L.matrix
    ]
    kernel = kernel_basis(MatrixQ.from_rows(pairing_rows))
    if len(kernel) != 1:
        raise InternalDefectError(
            f"apolar kernel has dimension {len(kernel)}, expected 1"
        )
    F = Polynomial(hi.n, dict(zip(basis_T, kernel[0]))).normalized_primitive()
    for g in f.gradient():
        if not apolar_action(g, F).is_zero():
            raise InternalDefectError("a Jacobian generator fails to annihilate F")
        for extra in range(T - (hi.d - 1) + 1):
            for mono in iter_monomials(hi.n, extra):
                h = Polynomial.monomial(mono) * g
                if not apolar_action(h, F).is_zero():
                    raise InternalDefectError(
                        "a multiple of a Jacobian generator fails to annihilate F"
                    )
    return InverseSystem(F, T)


def smoothness(F: Polynomial) -> bool:
    """Is V(F) smooth, i.e. is the gradient ideal projectively empty?"""
    if F.is_zero() or not F.is_homogeneous():
        raise ValueError("requires a nonzero homogeneous polynomial")
    return projective_empty(buchberger(F.gradient()))


def va_via_inverse_system(f: Polynomial) -> bool:
    """Veronese avoidance through the dual: for smooth f the verdict equals
    the smoothness of the inverse system."""
    return smoothness(inverse_system(f).F)


def hessian_socle_check(f: Polynomial) -> bool:
    """The Hessian determinant represents a nonzero socle element of the
    Milnor algebra in degree T (smooth input)."""
    validate_input(f)
    if not is_smooth(f):
        raise NotSmoothError("the Hessian socle check applies to smooth hypersurfaces")
    return not normal_form(hessian_det(f), gb_jacobian(f)).is_zero()
