import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import unimodular_matrices
from veroav.groebner import projective_empty
from veroav.linalg import MatrixQ, determinant, quotient_coords, rref
from veroav.milnor import condition_I, jacobian_rref, validate_input
from veroav.parsing import parse_poly, render_poly
from veroav.polynomial import Polynomial
from veroav.polyring import (
    coefficient_vector,
    linear_form,
    substitute_linear,
)
from veroav.veronese import (
    ConditionIIPreconditionError,
    catalecticant_rank_at,
    catalecticant_symbolic_indices,
    check_va,
    condition_II,
    f0_form,
    lefschetz_degree_one,
    phi_base_locus,
    stratum_dims,
)

X3 = lambda s: parse_poly(s, 3)  # noqa: E731


def test_catalecticant_ranks():
    z2 = coefficient_vector(X3("z^2"), 2)
    assert catalecticant_rank_at(z2, 3, 2) == 1
    xy = coefficient_vector(X3("x*y"), 2)
    assert catalecticant_rank_at(xy, 3, 2) == 2
    zero = (0,) * 6
    assert catalecticant_rank_at(zero, 3, 2) == 0


def test_catalecticant_symbolic_matches_symmetric_matrix():
    # positions of z1..z6 in the classical symmetric matrix of a quadric
    assert catalecticant_symbolic_indices(3, 2) == [
        [0, 1, 2],
        [1, 3, 4],
        [2, 4, 5],
    ]


def test_catalecticant_rank_one_on_random_powers():
    rng = random.Random(99)
    for m in range(2, 6):
        for _ in range(50):
            while True:
                coeffs = [rng.randint(-5, 5) for _ in range(3)]
                if any(coeffs):
                    break
            ell = linear_form(coeffs)
            v = coefficient_vector(ell**m, m)
            assert catalecticant_rank_at(v, 3, m) == 1


def test_condition_II_fermat_witness():
    rep = condition_II(X3("x^3 + y^3 + z^3"))
    assert rep.evaluated and rep.empty is False
    assert rep.witness == (0, 0, 1)  # coordinate directions probed z, y, x


def test_condition_II_family_cubic_empty():
    rep = condition_II(X3("x*y*z + x^3 + y^3"))
    assert rep.empty is True
    assert projective_empty(rep.certificate)
    # certificate leading monomials include a pure power of every parameter
    for i in range(3):
        assert any(
            lm[i] and sum(lm) == lm[i] for lm in rep.certificate.leading_monomials
        )


def test_condition_II_one_node_quartic_witness_y():
    rep = condition_II(X3("x*y*z^2 + x^4 + y^4"))
    assert rep.empty is False
    assert rep.witness == (0, 1, 0)


def test_condition_II_requires_condition_I():
    # three concurrent lines: the gradient-generic condition fails
    f = X3("x*y*(x+y)")
    assert not condition_I(f).holds
    with pytest.raises(ConditionIIPreconditionError):
        condition_II(f)


def test_check_va_condition_I_failure_short_circuits():
    cert = check_va(X3("x*y*(x+y)"))
    assert cert.verdict is False
    assert cert.condition_ii.evaluated is False
    assert cert.condition_ii.note == "not evaluated"


def test_condition_II_elimination_witness_fallback():
    """A coordinate change pushes every witness of the diagonal cubic out of
    the 0/1 search box, forcing the lex-elimination extraction; the first
    chart and smallest eliminant root give a deterministic witness."""
    f = X3("x^3 + y^3 + z^3")
    g = substitute_linear(f, [[1, 2, 3], [2, 1, 4], [3, 5, 1]])
    rep = condition_II(g)
    assert rep.empty is False
    assert rep.witness == (Fraction(1, 3), Fraction(2, 3), 1)
    assert check_va(g).verdict is False


def test_check_va_verdicts():
    assert check_va(X3("x*y*z + x^3 + y^3")).verdict is True
    assert check_va(X3("x*y*z^2 + x^4 + y^4 + x^3*z")).verdict is True
    assert check_va(X3("x*y*z^3 + x^5 + y^5 + x^4*z")).verdict is True
    assert check_va(X3("z*(x*y - z^2)")).verdict is True
    assert check_va(X3("x*y*z")).verdict is True
    assert check_va(X3("x^3 + y^3 + z^3")).verdict is False
    assert check_va(X3("x^4 + y^4 + z^4")).verdict is False


def test_check_va_cross_checks_all_pass():
    for src in ("x*y*z + x^3 + y^3", "x^3 + y^3 + z^3", "x*y*z",
                "x*y*z^2 + x^4 + y^4", "z*y^2 - x^3"):
        cert = check_va(X3(src))
        assert all(ok for _, ok in cert.cross_checks), cert.cross_checks


def test_witness_soundness_exact():
    cert = check_va(X3("x^4 + y^4 + z^4"))
    w = cert.condition_ii.witness
    assert w is not None
    hi = validate_input(X3("x^4 + y^4 + z^4"))
    m = hi.T - 1
    ell = linear_form(w)
    L = jacobian_rref(X3("x^4 + y^4 + z^4"), m)
    assert all(
        c == 0 for c in quotient_coords(coefficient_vector(ell**m, m), L)
    )


def test_phi_base_locus_one_node_quartics():
    g4 = X3("x*y*z^2 + x^4 + y^4 + x^3*z")
    from veroav.singlocus import singular_report

    rep = singular_report(g4)
    base = phi_base_locus(g4, [s.point.coords for s in rep.points])
    assert base.empty
    assert base.dim_linear_system == 2 and base.dim_jacobian_module_top == 2
    i1 = {render_poly(linear_form(b)) for b in base.vanishing_linear_forms}
    assert i1 == {"x", "y"}

    f4 = X3("x*y*z^2 + x^4 + y^4")
    rep4 = singular_report(f4)
    base4 = phi_base_locus(f4, [s.point.coords for s in rep4.points])
    assert not base4.empty
    found = {render_poly(linear_form(b)) for b in base4.base_points}
    assert found == {"x", "y"}


def test_phi_base_locus_hyperplane_collapse():
    # r = n - 1 nodes: the criterion reduces to one membership test for the
    # unique hyperplane through the nodes
    f = X3("z*(x*y - z^2)")
    from veroav.singlocus import singular_report

    rep = singular_report(f)
    assert len(rep.points) == 2
    base = phi_base_locus(f, [s.point.coords for s in rep.points])
    assert base.dim_linear_system == 1
    assert base.empty  # z^2 is not in the degree-2 gradient piece


def test_phi_base_locus_rejects_dependent_points():
    from veroav.veronese import DependentConditionsError

    f = X3("x*y*z^2 + x^4 + y^4 + x^3*z")
    with pytest.raises(DependentConditionsError):
        phi_base_locus(f, [(0, 0, 1), (0, 0, 1)])


def test_lefschetz_nodal_cubic():
    rep = lefschetz_degree_one(X3("x*y*z"), seed=0)
    assert rep.success
    assert rep.determinants[-1] != 0


def test_lefschetz_fermat_coordinate_form_fails():
    """The map for l = x on the diagonal cubic is singular: an individual
    trial may fail even though a general form succeeds."""
    f = X3("x^3 + y^3 + z^3")
    hi = validate_input(f)
    m = hi.T - 1
    L = jacobian_rref(f, m)
    ell = linear_form([1, 0, 0])
    power = ell ** (hi.T - 2)
    cols = [
        quotient_coords(coefficient_vector(power * Polynomial.variable(i, 3), m), L)
        for i in range(3)
    ]
    M = MatrixQ.from_rows([[cols[j][i] for j in range(3)] for i in range(3)])
    assert determinant(M) == 0


def test_lefschetz_deterministic_per_seed():
    a = lefschetz_degree_one(X3("x*y*z"), seed=123)
    b = lefschetz_degree_one(X3("x*y*z"), seed=123)
    assert a == b


def test_f0_forms():
    assert f0_form(3, 3) == X3("x*y*z")
    assert f0_form(3, 4) == X3("2*x^2*y^2 + 2*x^2*z^2 + 2*y^2*z^2")
    f043 = f0_form(4, 3)
    assert f043 == parse_poly("x*y*z + x*y*w + x*z*w + y*z*w", 4)


def test_f0_forms_are_avoiding():
    for n, d in ((3, 3), (3, 4), (4, 3)):
        assert check_va(f0_form(n, d)).verdict is True


def test_stratum_dims():
    assert stratum_dims(3, 3) == {"N_d": 9, "nodal_dim": 6, "linear_system_dim": 0}
    for n, d in ((3, 3), (3, 4), (4, 3), (4, 4)):
        dims = stratum_dims(n, d)
        nd = math.comb(n + d - 1, d) - 1
        assert dims["N_d"] == nd
        assert dims["nodal_dim"] == nd - n
        assert dims["linear_system_dim"] == nd - n * n


@pytest.mark.parametrize(
    "src,n",
    [
        ("x*y*z + x^3 + y^3", 3),
        ("x^3 + y^3 + z^3", 3),
        ("x*y*z", 3),
        ("x*y*z^2 + x^4 + y^4", 3),
    ],
)
@given(A=st.data())
@settings(max_examples=5, deadline=None)
def test_pgl_invariance(src, n, A):
    f = parse_poly(src, n)
    matrix = A.draw(unimodular_matrices(n))
    g = substitute_linear(f, matrix)
    assert check_va(g).verdict == check_va(f).verdict
