import pytest

from braided_casimir.capelli import (
    RationalFunctionMatrix,
    capelli_centrality,
    capelli_poly,
    p_sum_check,
    evaluation_entry,
    fusion_check,
    omega_star_vector_check,
    qdet_ev,
    qdet_ev_check,
    rtt_check,
    s_lambda,
    small_generic_weights,
    transpose_relation_check,
)
from braided_casimir.central import upoly_hc_image
from braided_casimir.irreps import TensorBoundExceeded, build_rep, young_symmetrizer
from braided_casimir.mixed import (
    Compressor,
    MixedOperator,
    WorkBoundExceeded,
    trace_shifted_S_product,
)
from braided_casimir.noncomm import UPoly
from braided_casimir.pbw import UEAElement, delta1, is_central
from braided_casimir.polynomial import Polynomial
from braided_casimir.tensor import TensorOperator

import oracle_tools as oracle


def test_S_and_P_on_one_leg():
    S = MixedOperator.S(2, 1, 0)
    P = MixedOperator.P(2, 1, 0)
    for r in range(2):
        for c in range(2):
            assert S.entry(r, c) == UPoly.const(2, UEAElement.gen(2, r + 1, c + 1))
            assert P.entry(r, c) == UPoly.const(2, UEAElement.gen(2, c + 1, r + 1))
    assert S.trace() == UPoly.const(2, delta1(2))


def test_S_on_different_legs_commute_up_to_flip():
    # [S_1, S_2] = (S_1 - S_2) P_12 is the standard exchange relation
    n, legs = 2, 2
    S1, S2 = MixedOperator.S(n, legs, 0), MixedOperator.S(n, legs, 1)
    flip = TensorOperator.permutation(n, (1, 0))
    lhs = S1 @ S2 - S2 @ S1
    rhs = (S1 - S2) @ flip
    assert lhs == rhs


def test_compressor_rejects_non_invariant_span():
    comp = Compressor([{0: 1}], 2)
    op = TensorOperator.from_dense(2, 1, [[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        comp.compress(op)
    assert comp.compress(TensorOperator.identity(2, 1)) == [[1]]


@pytest.mark.parametrize("lam,n", [((1,), 2), ((2,), 2), ((1, 1), 2), ((2, 1), 2), ((1,), 3), ((1, 1), 3)])
def test_trace_kernel_matches_materialized_product(lam, n):
    assert s_lambda(lam, n).trace() == capelli_poly(lam, n)


def test_capelli_small_values():
    u = UPoly.u(2)
    assert capelli_poly((1,), 2) == UPoly.const(2, delta1(2)) - u * 2
    chi = upoly_hc_image(capelli_poly((1, 1), 2)).as_polynomial()
    U, mu1, mu2 = (Polynomial.variable(3, k) for k in range(3))
    assert chi == (U - mu1 - 1) * (U - mu2)


@pytest.mark.parametrize("lam,n", [((2,), 2), ((1, 1), 2), ((2, 1), 2), ((3,), 2), ((2,), 3), ((1, 1, 1), 3)])
def test_capelli_coefficients_are_central(lam, n):
    assert all(capelli_centrality(lam, n).values())


@pytest.mark.parametrize("lam,n", [((2,), 2), ((1, 1), 2), ((2, 1), 3)])
def test_capelli_hc_matches_action(lam, n):
    c = capelli_poly(lam, n)
    chi = upoly_hc_image(c)
    weights = [(2, 0), (3, 1), (0, -1)] if n == 2 else [(1, 0, 0), (2, 1, 0)]
    for mu in weights:
        rep = build_rep(mu)
        for deg, coeff in c.coeffs.items():
            assert oracle.scalar_action(rep, coeff) == chi.coefficient(deg).evaluate(mu)


def test_trace_kernel_validates_arguments():
    G = TensorOperator.identity(2, 2)
    with pytest.raises(ValueError):
        trace_shifted_S_product(2, 2, [(0, 0), (0, 1)], G)
    with pytest.raises(ValueError):
        trace_shifted_S_product(3, 2, [(0, 0)], G)
    with pytest.raises(WorkBoundExceeded):
        trace_shifted_S_product(2, 2, [(0, 0), (1, 0)], G, work_bound=10)


def test_young_guard_stops_large_symmetrizers():
    with pytest.raises(TensorBoundExceeded):
        young_symmetrizer((9,), 2, bound=10 ** 9)


@pytest.mark.parametrize("lam,n", [((1,), 2), ((2,), 2), ((1, 1), 2), ((2, 1), 2), ((1,), 3), ((1, 1), 3)])
def test_fusion(lam, n):
    assert fusion_check(lam, n).passed


@pytest.mark.parametrize("lam,n", [((1,), 2), ((2,), 2), ((1, 1), 2), ((2, 1), 2), ((1,), 3), ((2,), 3)])
def test_compressed_P_sum_is_braided_casimir(lam, n):
    assert p_sum_check(lam, n).passed


@pytest.mark.parametrize("lam,n", [((1,), 2), ((2,), 2), ((1, 1), 2), ((3,), 2), ((2, 1), 2), ((2,), 3)])
def test_reversed_product_form_on_tensor_legs(lam, n):
    assert omega_star_vector_check(lam, n, corrected=True).passed


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (3, 0), (2, -1)])
def test_transpose_relation(lam):
    res = transpose_relation_check(lam)
    assert res.passed
    assert res.notes["intertwiner_shape"] == "diagonal"


@pytest.mark.parametrize("kind", ["unit", "ev", "evcheck"])
def test_rtt_gl2(kind):
    assert rtt_check(2, kind).passed


def test_rtt_rejects_unknown_map():
    with pytest.raises(ValueError):
        evaluation_entry(2, "bogus", 0, 0, 1, 0)


def test_rational_matrix_requires_square_input():
    with pytest.raises(ValueError):
        RationalFunctionMatrix([[1, 2]], Polynomial.constant(1, 1))
    with pytest.raises(ZeroDivisionError):
        RationalFunctionMatrix([[1]], Polynomial(1))


def test_qdet_gl2():
    num, den = qdet_ev(2)
    assert den == Polynomial.linear(1, [1], 0) * Polynomial.linear(1, [1], -1)
    assert qdet_ev_check(2).passed


def test_small_generic_weights_are_strictly_dominant():
    ws = small_generic_weights(3)
    assert len(ws) == 12
    assert all(a > b > c for a, b, c in ws)


def test_check_result_json_keys():
    res = fusion_check((1,), 2)
    assert set(res.to_json()) == {"check", "params", "pass", "witness"}
    assert bool(res) is True
    assert is_central(delta1(2))
