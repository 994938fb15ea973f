import pytest

from braided_casimir import linalg
from braided_casimir.central import (
    DegenerateSamplesError,
    HCImagePoly,
    braided_casimir,
    casimir_action,
    charpoly_interpolate,
    conjecture_scan,
    gl2_hc_formula,
    minimal_poly,
    normalized_annihilator,
    on_product_element,
    on_product_hc,
    shifted_determinant,
    sln_casimir_dual_basis,
    sln_casimir_element,
    verify_annihilation,
)
from braided_casimir.irreps import build_rep, gl2_rep
from braided_casimir.noncomm import UEAMatrix
from braided_casimir.pbw import UEAElement
from braided_casimir.polynomial import Polynomial

import oracle_tools as oracle


def test_braided_casimir_of_vector_representation():
    omega = braided_casimir(gl2_rep((1, 0)))
    e = lambda i, j: UEAElement.gen(2, i, j)  # noqa: E731
    assert omega == UEAMatrix(2, [[e(1, 1), e(2, 1)], [e(1, 2), e(2, 2)]])


def test_vector_shifted_determinant_is_the_capelli_determinant():
    D = shifted_determinant(gl2_rep((1, 0)))
    assert D.all_central()
    mu1, mu2 = (Polynomial.variable(3, k) for k in (1, 2))
    u = Polynomial.variable(3, 0)
    assert D.hc().as_polynomial() == (u + mu1) * (u + mu2 - 1)


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (1, -1), (3, 1)])
def test_hc_image_of_D_matches_action_on_irreducibles(lam):
    D = shifted_determinant(gl2_rep(lam))
    chi = D.hc()
    for mu in [(0, 0), (1, 0), (2, 1), (3, -1), (4, 4)]:
        rep = gl2_rep(mu)
        for deg, coeff in D.poly.coeffs.items():
            assert oracle.scalar_action(rep, coeff) == chi.coefficient(deg).evaluate(mu)


def test_hc_image_of_D_for_gl3_vector_matches_action():
    D = shifted_determinant(build_rep((1, 0, 0)))
    assert D.all_central()
    chi = D.hc()
    for mu in [(1, 0, 0), (2, 1, 0), (1, 1, -1)]:
        rep = build_rep(mu)
        for deg, coeff in D.poly.coeffs.items():
            assert oracle.scalar_action(rep, coeff) == chi.coefficient(deg).evaluate(mu)


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (2, 1), (3, 0), (4, -1)])
def test_gl2_closed_form_for_D(lam):
    D = shifted_determinant(gl2_rep(lam))
    assert D.all_central()
    assert D.hc() == gl2_hc_formula("D", lam)


def test_gl2_formula_text_example():
    # lambda = (2, 0): (u + 2 mu1)(u + mu1 + mu2 - 1)(u + 2 mu2 - 2)
    u, mu1, mu2 = (Polynomial.variable(3, k) for k in range(3))
    want = (u + mu1 * 2) * (u + mu1 + mu2 - 1) * (u + mu2 * 2 - 2)
    assert gl2_hc_formula("D", (2, 0)).as_polynomial() == want
    p_want = (-u + mu1 * 2) * (-u + mu1 + mu2 - 2) * (-u + mu2 * 2 - 2)
    assert gl2_hc_formula("P", (2, 0)).as_polynomial() == p_want


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (2, 1)])
def test_charpoly_annihilates_casimir_action(lam):
    res = charpoly_interpolate(lam)
    rep = gl2_rep(lam)
    for mu in [(3, 0), (5, 2), (1, -4)]:
        assert verify_annihilation(lam, mu, res.hc, rep)
    lead = res.hc.coefficient(res.hc.degree())
    # P is normalized up to sign against the closed form
    formula = gl2_hc_formula("P", lam)
    assert res.hc == formula or res.hc == formula.scale(-1)
    assert lead.degree() == 0


def test_casimir_action_minimal_polynomial_degree():
    rep = gl2_rep((2, 0))
    M = casimir_action((5, 1), rep)
    coeffs = minimal_poly(M)
    assert len(coeffs) - 1 == 3
    assert linalg.is_zero(linalg.poly_of_matrix(coeffs, M))
    assert normalized_annihilator((5, 1), rep) is not None


def test_degenerate_samples_raise():
    with pytest.raises(DegenerateSamplesError):
        charpoly_interpolate((1, 0), mu_samples=[(2, 0), (2, 0), (2, 0)])


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (3, 1), (4, 0)])
def test_square_root_product_form(lam):
    assert on_product_hc(lam) == gl2_hc_formula("D", lam).as_polynomial()
    assert on_product_element(lam) == shifted_determinant(gl2_rep(lam), check=False).poly


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (1, 1, 0)])
def test_sln_casimir_two_constructions_agree(lam):
    rep = build_rep(lam)
    assert sln_casimir_element(rep) == sln_casimir_dual_basis(rep)


def test_hc_poly_json_roundtrip_and_reflect():
    f = gl2_hc_formula("D", (2, 1))
    assert HCImagePoly.from_json(2, f.to_json()) == f
    assert f.reflect().reflect() == f


def test_conjecture_scan_report_shape():
    report = conjecture_scan((1, 1, 0), 3)
    assert report["experimental"] is True
    assert report["dim"] == 3
    assert set(report["default_basis"]) == {"0", "1", "2", "3"}


def test_conjecture_scan_permutations_small():
    report = conjecture_scan((1, 0), 2, permute=True)
    assert report["permutation_scan"]["tried"] == 2
    assert [0, 1] in report["permutation_scan"]["central_orders"]

