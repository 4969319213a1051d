import pytest

from veroav.groebner import hilbert_value
from veroav.linalg import rank
from veroav.milnor import (
    DegreeTooSmallError,
    NonIsolatedSingularitiesError,
    NotHomogeneousError,
    coincidence_threshold,
    condition_I,
    defect1,
    gb_jacobian,
    is_smooth,
    jacobian_degree_matrix,
    jacobian_module_dims,
    smooth_reference_hf,
    tjurina_total,
    validate_input,
)
from veroav.parsing import parse_poly
from veroav.polyring import dim_graded

X3 = lambda s: parse_poly(s, 3)  # noqa: E731

FAMILY_CUBIC = X3("x*y*z + x^3 + y^3")
G4 = X3("x*y*z^2 + x^4 + y^4 + x^3*z")
XYZ = X3("x*y*z")


def test_validate_accepts_smooth():
    hi = validate_input(X3("x^3 + y^3 + z^3"))
    assert (hi.n, hi.d, hi.T) == (3, 3, 3)
    assert is_smooth(hi.f)


def test_validate_rejects_positive_dimensional_singular_locus():
    with pytest.raises(NonIsolatedSingularitiesError) as info:
        validate_input(X3("x^2*y*z"))
    assert info.value.projective_dim == 1


def test_validate_rejects_low_degree_and_inhomogeneous():
    with pytest.raises(DegreeTooSmallError):
        validate_input(parse_poly("x*y", 2))
    with pytest.raises(NotHomogeneousError):
        validate_input(X3("x^3 + y^2"))
    with pytest.raises(NotHomogeneousError):
        validate_input(X3("0"))


def test_jacobian_matrix_family_cubic_matches_span():
    M = jacobian_degree_matrix(FAMILY_CUBIC, 2)
    # rows span the same space as the explicit coefficient matrix
    assert M.rows == 3 and M.cols == 6
    assert rank(M) == 3


def test_jacobian_matrix_fermat():
    f = X3("x^3 + y^3 + z^3")
    M = jacobian_degree_matrix(f, 2)
    assert rank(M) == 3


def test_jacobian_matrix_below_generation_degree():
    M = jacobian_degree_matrix(G4, 2)  # generators live in degree 3
    assert M.rows == 0 and M.cols == dim_graded(3, 2)


def test_condition_I_examples():
    fermat4 = X3("x^4 + y^4 + z^4")
    rep = condition_I(fermat4)
    assert rep.dim_milnor_top_minus_one == 3 and rep.holds

    rep = condition_I(FAMILY_CUBIC)
    assert rep.dim_milnor_top_minus_one == 3 and rep.holds

    rep = condition_I(G4)
    assert rep.dim_milnor_top_minus_one == 3 and rep.holds


def test_condition_I_rank_equals_hilbert_route():
    for f in (FAMILY_CUBIC, G4, XYZ, X3("x^4+y^4+z^4")):
        hi = validate_input(f)
        rep = condition_I(f)
        assert rep.dim_milnor_top_minus_one == hilbert_value(gb_jacobian(f), hi.T - 1)


def test_tjurina_and_defect():
    assert tjurina_total(G4) == 1
    assert defect1(G4) == 0
    assert tjurina_total(XYZ) == 3
    assert defect1(XYZ) == 0
    assert tjurina_total(X3("x^3+y^3+z^3")) == 0


def test_coincidence_threshold():
    # tau = 1: coincidence holds through T itself
    assert coincidence_threshold(G4) == 6
    # tau = 3: the degree-zero defect shifts degree T, so the threshold is T-1
    assert coincidence_threshold(XYZ) == 2
    # smooth sentinel: T + 1 means "holds vacuously"
    assert coincidence_threshold(X3("x^3+y^3+z^3")) == 4


def test_jacobian_module_dims_one_node_quartic():
    assert jacobian_module_dims(G4, 1) == 2
    assert jacobian_module_dims(G4, 5) == 2
    assert jacobian_module_dims(X3("x^3+y^3+z^3"), 1) == 0


def test_self_duality_on_singular_entries():
    for f in (G4, XYZ, X3("z*y^2 - x^3"), X3("x*y*z^2 + x^4 + y^4")):
        hi = validate_input(f)
        for q in range(hi.T + 1):
            assert jacobian_module_dims(f, q) == jacobian_module_dims(f, hi.T - q)


def test_smooth_reference_profile():
    assert smooth_reference_hf(3, 3, 1) == 3
    assert [smooth_reference_hf(3, 4, i) for i in range(7)] == [1, 3, 6, 7, 6, 3, 1]
    assert smooth_reference_hf(3, 4, 5) == 3
    assert smooth_reference_hf(3, 4, 7) == 0


@pytest.mark.parametrize("n,d", [(3, 3), (3, 4), (3, 5), (4, 3), (4, 4)])
def test_smooth_reference_symmetry_and_socle(n, d):
    T = n * (d - 2)
    assert smooth_reference_hf(n, d, T) == 1
    for i in range(T + 1):
        assert smooth_reference_hf(n, d, i) == smooth_reference_hf(n, d, T - i)
    assert smooth_reference_hf(n, d, T + 1) == 0


def test_smooth_hilbert_matches_reference():
    for src, n in (("x^3+y^3+z^3", 3), ("x^4+y^4+z^4", 3),
                   ("x^4+y^4+z^4+4*x*y*z*(x+y+z)", 3)):
        f = parse_poly(src, n)
        hi = validate_input(f)
        gbj = gb_jacobian(f)
        for i in range(hi.T + 2):
            assert hilbert_value(gbj, i) == smooth_reference_hf(n, hi.d, i)


def test_hilbert_stabilizes_at_tjurina():
    for f in (XYZ, G4, X3("z*y^2 - x^3"), X3("x*y*z^3 + x^5 + y^5")):
        hi = validate_input(f)
        gbj = gb_jacobian(f)
        tau = tjurina_total(f)
        values = [hilbert_value(gbj, i) for i in range(hi.T, 3 * hi.T + 1)]
        assert values[-1] == tau
        assert values[-2] == tau
