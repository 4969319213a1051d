"""The degree-(T-1) Veronese avoidance machinery and the top-level verdict.

Condition (II) is decided in the n coefficient parameters of a symbolic
linear form: the quotient coordinates of l^(T-1) modulo (J_f)_{T-1} give n
forms whose common projective zero locus is exactly the set of offending
linear forms.  Emptiness is certified by a Groebner basis with a pure-power
leading monomial in every parameter; non-emptiness is witnessed, when a
rational witness exists, by an exact membership check.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from veroav.groebner import GroebnerBasis, buchberger, hilbert_value, projective_empty
from veroav.linalg import (
    MatrixQ,
    RrefResult,
    determinant,
    kernel_basis,
    quotient_coords,
    quotient_matrix,
    rank,
)
from veroav.milnor import (
    ConditionIReport,
    HypersurfaceInput,
    InternalDefectError,
    condition_I,
    gb_jacobian,
    is_smooth,
    jacobian_module_dims,
    jacobian_rref,
    coincidence_threshold,
    defect1,
    smooth_reference_hf,
    validate_input,
)
from veroav.polynomial import Polynomial
from veroav.polyring import (
    coefficient_vector,
    graded_basis,
    linear_form,
    power_linear_form_symbolic,
)


# ---------------------------------------------------------------------------
# catalecticants


def catalecticant_rank_at(v: Sequence, nvars: int, m: int) -> int:
    """Rank of the first-derivative flattening of the degree-m form with
    coefficient vector v: rank 1 iff v is a power of a linear form (up to
    scalar), rank 0 iff v = 0."""
    if m < 2:
        raise ValueError("catalecticant needs degree at least 2")
    vec = [Fraction(x) for x in v]
    basis_m = graded_basis(nvars, m)
    if len(vec) != len(basis_m):
        raise ValueError("coefficient vector has wrong length")
    index = {mono: i for i, mono in enumerate(basis_m)}
    rows = []
    for i in range(nvars):
        row = []
        for beta in graded_basis(nvars, m - 1):
            alpha = beta[:i] + (beta[i] + 1,) + beta[i + 1 :]
            row.append(vec[index[alpha]] * (beta[i] + 1))
        rows.append(row)
    return rank(MatrixQ.from_rows(rows))


def catalecticant_symbolic_indices(nvars: int, m: int) -> list[list[int]]:
    """Index matrix of the symmetric-style catalecticant: entry (i, beta) is
    the graded-basis position of x_i * x^beta.  (Mapping positions to
    coordinate variables z_1.. reproduces the classical symmetric matrix of
    a quadric; the rank-one locus of powers uses the derivative flattening
    above, whose diagonal carries extra integer weights.)"""
    basis_m = graded_basis(nvars, m)
    index = {mono: i for i, mono in enumerate(basis_m)}
    out = []
    for i in range(nvars):
        row = []
        for beta in graded_basis(nvars, m - 1):
            alpha = beta[:i] + (beta[i] + 1,) + beta[i + 1 :]
            row.append(index[alpha])
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# condition (II)


@dataclass(frozen=True)
class ConditionIIReport:
    evaluated: bool
    empty: bool | None
    witness: tuple[Fraction, ...] | None
    certificate: GroebnerBasis | None
    note: str = ""


class ConditionIIPreconditionError(ValueError):
    """Condition (II) is only defined once condition (I) holds."""


def _power_quotient_forms(f: Polynomial, m: int, L: RrefResult) -> list[Polynomial]:
    """Quotient coordinates of the symbolic power (a_1 x_1 + ...)^m as
    polynomials in the coefficient parameters a_1..a_n."""
    n = f.nvars
    Q = quotient_matrix(L)
    expansion = power_linear_form_symbolic(n, m)
    forms = []
    for row in Q:
        terms = {}
        for j, (alpha, mult) in enumerate(expansion):
            c = row[j] * mult
            if c:
                terms[alpha] = c
        forms.append(Polynomial(n, terms))
    return forms


def _projective_candidates(n: int) -> list[tuple[int, ...]]:
    """Deterministic finite search order: coordinate directions last-variable
    first, then the remaining sign patterns of 0/1 vectors."""
    candidates = []
    for i in range(n - 1, -1, -1):
        candidates.append(tuple(1 if j == i else 0 for j in range(n)))
    seen = set(candidates)
    for pattern in itertools.product((0, 1, -1), repeat=n):
        if not any(pattern):
            continue
        first = next(x for x in pattern if x)
        if first < 0:
            continue  # projective duplicate of its negative
        if pattern not in seen:
            seen.add(pattern)
            candidates.append(pattern)
    return candidates


def _verify_witness(
    f: Polynomial, m: int, L: RrefResult, coeffs: Sequence[Fraction]
) -> bool:
    ell = linear_form([Fraction(c) for c in coeffs])
    if ell.is_zero():
        return False
    power = ell**m
    return all(x == 0 for x in quotient_coords(coefficient_vector(power, m), L))


def _normalize_projective(vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    vals = [Fraction(v) for v in vec]
    last = max(i for i, v in enumerate(vals) if v)
    scale = vals[last]
    return tuple(v / scale for v in vals)


def condition_II(f: Polynomial, degree_cap: int | None = None) -> ConditionIIReport:
    """Veronese-avoidance condition: no nonzero linear form l has
    l^(T-1) in (J_f)_{T-1}."""
    hi = validate_input(f)
    cond1 = condition_I(f)
    if not cond1.holds:
        raise ConditionIIPreconditionError(
            "condition (II) is evaluated only when condition (I) holds"
        )
    m = hi.T - 1
    L = jacobian_rref(f, m)
    forms = _power_quotient_forms(f, m, L)
    certificate = buchberger(forms, degree_cap=degree_cap)
    if projective_empty(certificate):
        return ConditionIIReport(True, True, None, certificate)
    # non-empty: hunt for a rational witness
    for cand in _projective_candidates(hi.n):
        if all(g.evaluate(cand) == 0 for g in forms):
            if _verify_witness(f, m, L, [Fraction(c) for c in cand]):
                return ConditionIIReport(
                    True, False, _normalize_projective(cand), certificate
                )
    from veroav.ratpoints import rational_projective_points

    points, _complete = rational_projective_points(forms, degree_cap)
    for pt in points:
        if _verify_witness(f, m, L, pt):
            return ConditionIIReport(True, False, _normalize_projective(pt), certificate)
    return ConditionIIReport(
        True, False, None, certificate, note="nonempty, no rational witness found"
    )


# ---------------------------------------------------------------------------
# the verdict


@dataclass(frozen=True)
class VACertificate:
    n: int
    d: int
    T: int
    reduced_scope: bool
    condition_i: ConditionIReport
    condition_ii: ConditionIIReport
    verdict: bool
    cross_checks: tuple[tuple[str, bool], ...]
    timings_ms: dict[str, float] = field(default_factory=dict)


def check_va(f: Polynomial, degree_cap: int | None = None) -> VACertificate:
    """Full Veronese-avoidance verdict with cross-checks."""
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    hi = validate_input(f)
    timings["validate"] = (time.perf_counter() - t0) * 1000

    t0 = time.perf_counter()
    cond1 = condition_I(f)
    timings["condition_I"] = (time.perf_counter() - t0) * 1000

    if cond1.holds:
        t0 = time.perf_counter()
        cond2 = condition_II(f, degree_cap)
        timings["condition_II"] = (time.perf_counter() - t0) * 1000
    else:
        cond2 = ConditionIIReport(False, None, None, None, note="not evaluated")

    t0 = time.perf_counter()
    checks = list(_cross_checks(f, hi, cond1, cond2))
    timings["cross_checks"] = (time.perf_counter() - t0) * 1000

    verdict = cond1.holds and cond2.empty is True
    return VACertificate(
        hi.n,
        hi.d,
        hi.T,
        True,
        cond1,
        cond2,
        verdict,
        tuple(checks),
        timings,
    )


def _cross_checks(f, hi: HypersurfaceInput, cond1, cond2):
    smooth = is_smooth(f)
    # rank route vs Groebner route for dim (M_f)_{T-1}
    yield (
        "rank_hilbert_agreement",
        hilbert_value(gb_jacobian(f), hi.T - 1) == cond1.dim_milnor_top_minus_one,
    )
    # condition (I) <=> zero degree-one defect <=> coincidence through T-1.
    # The threshold is T-1, not T: the degree-zero defect tau - 1 shifts the
    # Milnor Hilbert function away from the smooth reference at degree T
    # whenever tau >= 2, while degrees <= T-1 are governed by the degree-one
    # defect alone.
    d1 = defect1(f)
    ct = coincidence_threshold(f)
    yield (
        "threeway_equivalence",
        (cond1.holds == (d1 == 0)) and (cond1.holds == (ct >= hi.T - 1)),
    )
    if smooth:
        gbj = gb_jacobian(f)
        profile_ok = all(
            hilbert_value(gbj, i) == smooth_reference_hf(hi.n, hi.d, i)
            for i in range(hi.T + 2)
        )
        yield ("smooth_hilbert_profile", profile_ok)
    else:
        duality_ok = all(
            jacobian_module_dims(f, q) == jacobian_module_dims(f, hi.T - q)
            for q in range(hi.T + 1)
        )
        yield ("jacobian_module_self_duality", duality_ok)
    if cond2.evaluated and cond2.witness is not None:
        m = hi.T - 1
        yield (
            "witness_soundness",
            _verify_witness(f, m, jacobian_rref(f, m), cond2.witness),
        )
    if cond2.evaluated and cond2.empty:
        yield ("emptiness_certificate", projective_empty(cond2.certificate))


# ---------------------------------------------------------------------------
# the base-locus criterion for r < n nodes


class DependentConditionsError(ValueError):
    pass


@dataclass(frozen=True)
class PhiBaseLocusReport:
    vanishing_linear_forms: tuple[tuple[Fraction, ...], ...]  # basis of I(Gamma)_1
    dim_linear_system: int
    dim_jacobian_module_top: int
    empty: bool
    base_points: tuple[tuple[Fraction, ...], ...]  # offending linear forms
    certificate: GroebnerBasis


def phi_base_locus(
    f: Polynomial,
    points: Sequence[Sequence[Fraction]],
    degree_cap: int | None = None,
) -> PhiBaseLocusReport:
    """Base locus of [l] -> [l^(T-1) mod (J_f)_{T-1}] restricted to the
    linear forms vanishing on the given singular points."""
    hi = validate_input(f)
    n, m = hi.n, hi.T - 1
    r = len(points)
    if r == 0 or r >= n:
        raise ValueError("requires 0 < r < n singular points")
    point_matrix = MatrixQ.from_rows([list(p) for p in points])
    if rank(point_matrix) != r:
        raise DependentConditionsError(
            "singular points do not impose independent linear conditions"
        )
    i1_basis = kernel_basis(point_matrix)  # coefficient vectors of I(Gamma)_1
    k = len(i1_basis)
    dim_n_top = jacobian_module_dims(f, m)
    if k != n - r or dim_n_top != n - r:
        raise InternalDefectError(
            f"expected dim I_1 = dim N(f)_{m} = {n - r}, got {k} and {dim_n_top}"
        )
    cond1 = condition_I(f)
    if not cond1.holds:
        raise ConditionIIPreconditionError("gradient-generic condition fails")
    L = jacobian_rref(f, m)
    Q = quotient_matrix(L)
    # substitute l = sum_j s_j * (b_j . x) into the symbolic power expansion
    lin_in_s = [
        Polynomial(k, {tuple(1 if t == j else 0 for t in range(k)): i1_basis[j][i]
                       for j in range(k) if i1_basis[j][i]})
        for i in range(n)
    ]
    expansion = power_linear_form_symbolic(n, m)
    coeff_polys = []
    for alpha, mult in expansion:
        prod = Polynomial.constant(k, mult)
        for i, e in enumerate(alpha):
            if e:
                prod = prod * lin_in_s[i] ** e
            if prod.is_zero():
                break
        coeff_polys.append(prod)
    forms = []
    for row in Q:
        total = Polynomial.zero(k)
        for j, c in enumerate(row):
            if c:
                total = total + coeff_polys[j].scale(c)
        forms.append(total)
    certificate = buchberger(forms, degree_cap=degree_cap)
    if projective_empty(certificate):
        return PhiBaseLocusReport(
            tuple(i1_basis), k, dim_n_top, True, (), certificate
        )
    base_points: list[tuple[Fraction, ...]] = []

    def to_linear_form(svec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        coeffs = [Fraction(0)] * n
        for j, s in enumerate(svec):
            for i in range(n):
                coeffs[i] += Fraction(s) * i1_basis[j][i]
        return _normalize_projective(coeffs)

    for cand in _projective_candidates(k):
        if all(g.evaluate(cand) == 0 for g in forms):
            ell = to_linear_form(cand)
            if _verify_witness(f, m, L, ell) and ell not in base_points:
                base_points.append(ell)
    if not base_points:
        from veroav.ratpoints import rational_projective_points

        pts, _ = rational_projective_points(forms, degree_cap)
        for pt in pts:
            ell = to_linear_form(pt)
            if _verify_witness(f, m, L, ell) and ell not in base_points:
                base_points.append(ell)
    return PhiBaseLocusReport(
        tuple(i1_basis), k, dim_n_top, False, tuple(base_points), certificate
    )


# ---------------------------------------------------------------------------
# the Lefschetz rank check


@dataclass(frozen=True)
class LefschetzReport:
    seed: int
    trials: int
    coeff_bound: int
    success: bool
    witness: tuple[int, ...] | None
    determinants: tuple[Fraction, ...]


def lefschetz_degree_one(
    f: Polynomial, seed: int = 0, trials: int = 5, coeff_bound: int = 50
) -> LefschetzReport:
    """Seeded search for a linear form l with l^(T-2): (M_f)_1 -> (M_f)_{T-1}
    an isomorphism; each trial draws integer coefficients independently (the
    generator is split per trial index, so results are order-independent)."""
    hi = validate_input(f)
    cond1 = condition_I(f)
    if not cond1.holds:
        raise ConditionIIPreconditionError(
            "the Lefschetz rank check needs both spaces of dimension n"
        )
    n, m = hi.n, hi.T - 1
    L = jacobian_rref(f, m)
    dets: list[Fraction] = []
    witness = None
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        while True:
            coeffs = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(n))
            if any(coeffs):
                break
        ell = linear_form(coeffs)
        power = ell ** (hi.T - 2)
        cols = []
        for i in range(n):
            xi = Polynomial.variable(i, n)
            cols.append(quotient_coords(coefficient_vector(power * xi, m), L))
        M = MatrixQ.from_rows([[cols[j][i] for j in range(n)] for i in range(n)])
        det = determinant(M)
        dets.append(det)
        if det != 0:
            witness = coeffs
            break
    return LefschetzReport(seed, trials, coeff_bound, witness is not None, witness, tuple(dets))


# ---------------------------------------------------------------------------
# the distinguished nodal forms and dimension formulas


def f0_form(n: int, d: int) -> Polynomial:
    """The auxiliary form with the n coordinate points as its only (nodal)
    singularities: sum of squarefree cubic monomials for d = 3, else
    sum over i < j of x_i^(d-2) x_j^2 + x_i^2 x_j^(d-2)."""
    if n < 3 or d < 3:
        raise ValueError("requires n >= 3 and d >= 3")
    total = Polynomial.zero(n)
    if d == 3:
        for combo in itertools.combinations(range(n), 3):
            mono = tuple(1 if i in combo else 0 for i in range(n))
            total = total + Polynomial.monomial(mono)
    else:
        for i, j in itertools.combinations(range(n), 2):
            a = tuple((d - 2) if t == i else (2 if t == j else 0) for t in range(n))
            b = tuple(2 if t == i else ((d - 2) if t == j else 0) for t in range(n))
            total = total + Polynomial.monomial(a) + Polynomial.monomial(b)
    return total


def stratum_dims(n: int, d: int) -> dict[str, int]:
    """Dimension bookkeeping for the space of degree-d hypersurfaces:
    N_d = C(n+d-1, d) - 1, the nodal stratum N_d - n, and the linear system
    through n general double points N_d - n^2."""
    if n < 3 or d < 3:
        raise ValueError("requires n >= 3 and d >= 3")
    nd = math.comb(n + d - 1, d) - 1
    return {"N_d": nd, "nodal_dim": nd - n, "linear_system_dim": nd - n * n}
