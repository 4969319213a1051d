"""Singular-point analysis: rational singular points, local Milnor and
Tjurina numbers by truncation stabilization, node detection, general linear
position, and the classification dispatch that predicts the avoidance
verdict from singularity data alone where a theorem applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from veroav.groebner import buchberger
from veroav.linalg import MatrixQ, rank
from veroav.milnor import (
    InternalDefectError,
    ScopeError,
    gb_jacobian_saturation,
    is_smooth,
    validate_input,
)
from veroav.polynomial import Polynomial, iter_monomials
from veroav.ratpoints import rational_projective_points

_LOCAL_TRUNCATION_CAP = 40


@dataclass(frozen=True)
class ProjPoint:
    """Point of P^{n-1}, normalized so the last nonzero coordinate is 1."""

    coords: tuple[Fraction, ...]

    @classmethod
    def normalize(cls, coords: Sequence) -> "ProjPoint":
        vals = [Fraction(c) for c in coords]
        nonzero = [i for i, v in enumerate(vals) if v]
        if not nonzero:
            raise ValueError("projective point needs a nonzero coordinate")
        scale = vals[nonzero[-1]]
        return cls(tuple(v / scale for v in vals))

    def chart(self) -> int:
        return max(i for i, v in enumerate(self.coords) if v)

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class LocalSingularity:
    point: ProjPoint
    tjurina: int
    milnor: int
    is_node: bool
    quadratic_rank: int


@dataclass(frozen=True)
class SingularReport:
    points: tuple[LocalSingularity, ...]
    complete: bool
    total_tjurina_local: int


class NotSingularAtPointError(ValueError):
    pass


def singular_points_rational(f: Polynomial) -> tuple[list[ProjPoint], bool]:
    """Rational points of the singular locus V(J_f^sat); the flag is False
    when an eliminant failed to split rationally (irrational points exist)."""
    validate_input(f)
    if is_smooth(f):
        return [], True
    gb_sat = gb_jacobian_saturation(f)
    raw, complete = rational_projective_points(gb_sat.generators)
    return [ProjPoint.normalize(p) for p in raw], complete


def _dehomogenize_at(f: Polynomial, p: ProjPoint) -> tuple[Polynomial, int]:
    """Affine local equation at p: chart of the last nonzero coordinate,
    translated so p sits at the origin.  Returns (G, chart index); G lives
    in n-1 variables."""
    n = f.nvars
    c = p.chart()
    assignment = {}
    for i in range(n):
        if i == c:
            assignment[i] = Polynomial.constant(n, 1)
        else:
            assignment[i] = Polynomial.variable(i, n) + Polynomial.constant(n, p.coords[i])
    g = f.substitute(assignment)
    keep = [i for i in range(n) if i != c]
    return g.drop_vars(keep), c


def _local_colength(gens: list[Polynomial], k: int) -> int:
    """dim_k A/(I + m^N) stabilized over N; the colength of I at the origin
    when the origin is an isolated point of V(I)."""
    prev = None
    for N in range(2, _LOCAL_TRUNCATION_CAP + 1):
        trunc = list(gens) + [
            Polynomial.monomial(m) for m in iter_monomials(k, N)
        ]
        gb = buchberger(trunc)
        dim = 0
        for deg in range(N):
            for mono in iter_monomials(k, deg):
                if all(
                    any(a < b for a, b in zip(mono, lm))
                    for lm in gb.leading_monomials
                ):
                    dim += 1
        if dim == prev:
            return dim
        prev = dim
    raise ScopeError(
        f"local colength did not stabilize below truncation order {_LOCAL_TRUNCATION_CAP}; "
        "the point is not an isolated zero"
    )


def local_invariants(f: Polynomial, p: ProjPoint) -> LocalSingularity:
    """Local data at a singular point: Tjurina and Milnor numbers by
    truncation stabilization, quadratic rank, and the node flag (the two
    node characterizations are cross-checked)."""
    n = f.nvars
    G, _ = _dehomogenize_at(f, p)
    k = n - 1
    if G.coeff((0,) * k) != 0:
        raise NotSingularAtPointError("point does not lie on the hypersurface")
    for i in range(k):
        e1 = tuple(1 if j == i else 0 for j in range(k))
        if G.coeff(e1) != 0:
            raise NotSingularAtPointError("point is not singular (linear part nonzero)")
    quad = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            mono = tuple(
                (2 if i == j else 1) if t in (i, j) else 0 for t in range(k)
            )
            quad[i][j] = G.coeff(mono) * (2 if i == j else 1)
    qrank = rank(MatrixQ.from_rows(quad))
    grads = G.gradient()
    tjurina = _local_colength([G] + grads, k)
    milnor = _local_colength(grads, k)
    node = tjurina == 1
    if node != (qrank == k):
        raise InternalDefectError(
            "node characterizations disagree (tjurina vs quadratic rank)"
        )
    return LocalSingularity(p, tjurina, milnor, node, qrank)


def singular_report(f: Polynomial) -> SingularReport:
    points, complete = singular_points_rational(f)
    locals_ = tuple(local_invariants(f, p) for p in points)
    return SingularReport(locals_, complete, sum(s.tjurina for s in locals_))


def general_linear_position(points: Sequence[ProjPoint]) -> tuple[bool, int]:
    """(independent, defect): r points impose independent linear conditions
    iff the coordinate matrix has rank r; the defect is |Gamma| - rank."""
    if not points:
        raise ValueError("needs a nonempty point list")
    M = MatrixQ.from_rows([list(p.coords) for p in points])
    r = rank(M)
    count = len(points)
    n = len(points[0].coords)
    return r == count, count - n + (n - r)


@dataclass(frozen=True)
class ClassifyRecord:
    applicable: tuple[str, ...]
    predicted_va: bool | None
    reason: str


def classify(f: Polynomial, report: SingularReport | None = None) -> ClassifyRecord:
    """Predict the avoidance verdict from singular data where a theorem
    applies: (nodal-cubic) reduced singular plane cubics are avoiding iff
    nodal; (n-points) exactly n singular points are avoiding iff n nodes in
    general position; (few-nodes) r < n independent nodes are avoiding iff
    the power map on their linear system is base-point free."""
    hi = validate_input(f)
    if report is None:
        report = singular_report(f)
    if not report.points and report.complete:
        return ClassifyRecord((), None, "smooth: no singular classification applies")
    if not report.complete:
        return ClassifyRecord((), None, "no prediction: irrational singular points")
    predictions: list[tuple[str, bool]] = []
    n = hi.n
    all_nodes = all(s.is_node for s in report.points)
    pts = [s.point for s in report.points]
    if hi.n == 3 and hi.d == 3:
        predictions.append(("nodal-cubic", all_nodes))
    if len(pts) == n:
        independent, _ = general_linear_position(pts)
        predictions.append(("n-points", all_nodes and independent))
    elif 0 < len(pts) < n and all_nodes:
        independent, _ = general_linear_position(pts)
        if independent:
            from veroav.veronese import phi_base_locus

            base = phi_base_locus(f, [p.coords for p in pts])
            predictions.append(("few-nodes", base.empty))
    if not predictions:
        return ClassifyRecord((), None, "outside classified range")
    values = {v for _, v in predictions}
    if len(values) > 1:
        raise InternalDefectError("applicable classifications disagree")
    return ClassifyRecord(
        tuple(name for name, _ in predictions),
        values.pop(),
        "predicted from singular data",
    )
