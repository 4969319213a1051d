"""Jacobian-ideal analytics: input validation, the multiplication-by-partials
matrix, the gradient-generic condition, and the Hilbert-function invariants of
the Milnor algebra (total Tjurina number, degree-one defect, coincidence
threshold, Jacobian module dimensions).

The per-polynomial Groebner bases are memoized, so the operations of one
analysis run share a single basis computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from veroav.groebner import (
    GroebnerBasis,
    buchberger,
    hilbert_value,
    krull_dim_quotient,
    projective_empty,
    saturate_irrelevant,
)
from veroav.linalg import MatrixQ, RrefResult, rref
from veroav.polynomial import Polynomial, iter_monomials
from veroav.polyring import coefficient_vector, dim_graded


class ScopeError(ValueError):
    """Input falls outside the supported scope (CLI exit code 2)."""


class NotHomogeneousError(ScopeError):
    pass


class DegreeTooSmallError(ScopeError):
    pass


class NonIsolatedSingularitiesError(ScopeError):
    def __init__(self, projective_dim: int):
        super().__init__(
            f"singular locus has projective dimension {projective_dim}; "
            "only isolated singularities are supported"
        )
        self.projective_dim = projective_dim


class InternalDefectError(RuntimeError):
    """An internal consistency check failed (CLI exit code 3)."""


@dataclass(frozen=True)
class HypersurfaceInput:
    f: Polynomial
    n: int
    d: int
    T: int


@dataclass(frozen=True)
class ConditionIReport:
    dim_milnor_top_minus_one: int
    holds: bool
    dim_jacobian_piece: int


@lru_cache(maxsize=256)
def gb_jacobian(f: Polynomial) -> GroebnerBasis:
    return buchberger(f.gradient())


@lru_cache(maxsize=256)
def gb_jacobian_saturation(f: Polynomial) -> GroebnerBasis:
    return saturate_irrelevant(f.gradient())


def is_smooth(f: Polynomial) -> bool:
    return projective_empty(gb_jacobian(f))


def validate_input(f: Polynomial) -> HypersurfaceInput:
    """Check homogeneity, degree >= 3 and isolated singularities.

    Within this scope a non-reduced polynomial is impossible (a repeated
    factor forces a positive-dimensional singular locus), so reducedness
    needs no separate test.
    """
    if f.is_zero():
        raise NotHomogeneousError("the zero polynomial does not define a hypersurface")
    if not f.is_homogeneous():
        raise NotHomogeneousError("polynomial is not homogeneous")
    d = f.homogeneous_degree()
    if d < 3:
        raise DegreeTooSmallError(f"degree {d} < 3")
    n = f.nvars
    affine_dim = krull_dim_quotient(gb_jacobian(f))
    if affine_dim > 1:
        raise NonIsolatedSingularitiesError(affine_dim - 1)
    return HypersurfaceInput(f, n, d, n * (d - 2))


def jacobian_degree_matrix(f: Polynomial, m: int) -> MatrixQ:
    """Matrix of mu_f into degree m: rows are monomial multiples of the
    partials, columns the graded basis of R_m; the row space is (J_f)_m."""
    n = f.nvars
    d = f.homogeneous_degree()
    cols = dim_graded(n, m)
    shift = m - (d - 1)
    if shift < 0:
        return MatrixQ(0, cols, ())
    grads = f.gradient()
    rows = []
    for mono in sorted(iter_monomials(n, shift)):
        mp = Polynomial.monomial(mono)
        for g in grads:
            rows.append(coefficient_vector(mp * g, m))
    return MatrixQ.from_rows(rows)


@lru_cache(maxsize=256)
def jacobian_rref(f: Polynomial, m: int) -> RrefResult:
    return rref(jacobian_degree_matrix(f, m))


def condition_I(f: Polynomial) -> ConditionIReport:
    """Gradient-generic condition: dim (M_f)_{T-1} must equal n."""
    hi = validate_input(f)
    m = hi.T - 1
    rk = jacobian_rref(f, m).rank
    dim_m = dim_graded(hi.n, m) - rk
    return ConditionIReport(dim_m, dim_m == hi.n, rk)


@lru_cache(maxsize=None)
def _smooth_reference_coeffs(n: int, d: int) -> tuple[int, ...]:
    # coefficients of (1 + t + ... + t^(d-2))^n
    block = [1] * (d - 1)
    coeffs = [1]
    for _ in range(n):
        out = [0] * (len(coeffs) + len(block) - 1)
        for i, a in enumerate(coeffs):
            for j, b in enumerate(block):
                out[i + j] += a * b
        coeffs = out
    return tuple(coeffs)


def smooth_reference_hf(n: int, d: int, i: int) -> int:
    """Hilbert function of the Milnor algebra of any smooth degree-d
    hypersurface: coefficient of t^i in (1 + t + ... + t^(d-2))^n."""
    if i < 0:
        raise ValueError("degree must be nonnegative")
    coeffs = _smooth_reference_coeffs(n, d)
    return coeffs[i] if i < len(coeffs) else 0


def tjurina_total(f: Polynomial) -> int:
    """Total Tjurina number: the stabilized Hilbert value of R/J^sat,
    scanned from degree T until two consecutive values agree."""
    hi = validate_input(f)
    if is_smooth(f):
        return 0
    gb_sat = gb_jacobian_saturation(f)
    prev = hilbert_value(gb_sat, hi.T)
    q = hi.T + 1
    while True:
        cur = hilbert_value(gb_sat, q)
        if cur == prev:
            return cur
        prev = cur
        q += 1


def defect1(f: Polynomial) -> int:
    """Degree-one defect of the singular subscheme:
    tau(X) - n + dim (J^sat)_1; zero for smooth input."""
    hi = validate_input(f)
    if is_smooth(f):
        return 0
    gb_sat = gb_jacobian_saturation(f)
    dim_sat_1 = hi.n - hilbert_value(gb_sat, 1)
    return tjurina_total(f) - hi.n + dim_sat_1


def coincidence_threshold(f: Polynomial) -> int:
    """Largest q through which the Milnor-algebra Hilbert function matches
    the smooth reference.  Smooth input returns the sentinel T + 1, meaning
    the comparison holds through T vacuously."""
    hi = validate_input(f)
    if is_smooth(f):
        return hi.T + 1
    gbj = gb_jacobian(f)
    for i in range(hi.T + 2):
        if hilbert_value(gbj, i) != smooth_reference_hf(hi.n, hi.d, i):
            return i - 1
    raise InternalDefectError(
        "singular input matched the smooth Hilbert function beyond degree T"
    )


def jacobian_module_dims(f: Polynomial, q: int) -> int:
    """dim N(f)_q where N(f) = J^sat/J_f."""
    validate_input(f)
    if is_smooth(f):
        return 0
    return hilbert_value(gb_jacobian(f), q) - hilbert_value(gb_jacobian_saturation(f), q)
