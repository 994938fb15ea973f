from fractions import Fraction

import pytest

from braided_casimir import linalg
from braided_casimir.irreps import (
    DominantWeight,
    NotDominantError,
    TensorBoundExceeded,
    antisymmetrizer,
    antisymmetrizer_rank,
    as_weight,
    build_rep,
    contents,
    dual_star,
    find_intertwiner,
    gl2_rep,
    irrep,
    standard_tableaux_count,
    weyl_dimension,
    young_symmetrizer,
)
from braided_casimir.suites import partitions

import oracle_tools as oracle

SHAPES = [(lam, n) for n in (2, 3) for M in range(1, 5) for lam in partitions(M, n)]


@pytest.mark.parametrize("lam,n", SHAPES)
def test_weyl_dimension_counts_semistandard_tableaux(lam, n):
    padded = tuple(lam) + (0,) * (n - len(lam))
    assert weyl_dimension(padded) == oracle.semistandard_count(lam, n)


@pytest.mark.parametrize("lam", [(1,), (2, 1), (3, 1), (2, 2), (3, 2, 1), (4, 1, 1)])
def test_hook_length_formula(lam):
    assert standard_tableaux_count(lam) == oracle.standard_count(lam)


@pytest.mark.parametrize("lam,n", SHAPES)
def test_young_symmetrizer_is_idempotent_with_weyl_rank(lam, n):
    F = young_symmetrizer(lam, n)
    assert F.is_idempotent()
    padded = tuple(lam) + (0,) * (n - len(lam))
    assert F.rank() == weyl_dimension(padded)


def test_antisymmetrizer_rank_is_binomial():
    for n in (2, 3):
        for s in range(1, 4):
            A = antisymmetrizer(s, n)
            assert A.is_idempotent()
            assert A.rank() == antisymmetrizer_rank(s, n)
    assert antisymmetrizer_rank(2, 3) == 3 and antisymmetrizer_rank(3, 2) == 0


def test_contents_row_filling():
    assert contents((2, 1)) == [0, 1, -1]
    assert contents((3, 2)) == [0, 1, 2, -1, 0]


WEIGHTS = [(1, 0), (2, 0), (1, 1), (3, 1), (1, -1), (0, -2), (1, 0, 0), (1, 1, 0), (2, 1, 0), (2, 0, -1), (1, 0, 0, 0), (1, 1, 0, 0)]


@pytest.mark.parametrize("lam", WEIGHTS)
def test_built_representations_satisfy_relations(lam):
    rep = build_rep(lam)
    assert rep.dim == weyl_dimension(lam)
    assert rep.check_brackets()
    assert rep.check_invariants()
    # the first basis vector has the highest weight
    assert tuple(rep.basis_weights[0]) == tuple(lam)


@pytest.mark.parametrize("lam", [(0, 0), (1, 0), (2, 0), (3, 1), (4, 0), (2, -2), (-1, -3)])
def test_gl2_closed_form_is_isomorphic_to_tensor_realization(lam):
    rep = gl2_rep(lam)
    assert rep.check_invariants()
    other = build_rep(lam)
    T = find_intertwiner(other, rep)
    assert T is not None
    for key, mat in rep.matrices.items():
        assert linalg.matmul(T, other.matrices[key]) == linalg.matmul(mat, T)


@pytest.mark.parametrize("lam", [(1, 0), (2, 1), (2, 1, 0)])
def test_dual_star_is_a_representation(lam):
    rep = irrep(lam)
    star = dual_star(rep)
    assert star.check_brackets()
    assert star.dim == rep.dim


def test_gl2_rep_diagonal_entries_are_weights():
    rep = gl2_rep((3, 1))
    for k in range(rep.dim):
        assert rep.matrices[(1, 1)][k][k] == 3 - k
        assert rep.matrices[(2, 2)][k][k] == 1 + k


def test_weight_validation():
    with pytest.raises(NotDominantError):
        DominantWeight((1, 2))
    with pytest.raises(ValueError):
        as_weight((1, 0, 0), 2)
    assert DominantWeight.parse("3,1").components == (3, 1)
    w = as_weight((4, 1))
    assert (w.m, w.d, w.n) == (3, 5, 2)


def test_tensor_bound():
    with pytest.raises(TensorBoundExceeded):
        build_rep((6, 0, 0), bound=100)


def test_representation_json_roundtrip():
    from braided_casimir.irreps import Representation

    rep = build_rep((2, 1, 0))
    back = Representation.from_json(rep.to_json())
    assert back.matrices == rep.matrices and back.weight == rep.weight


def test_numeric_entries_are_exact():
    rep = build_rep((2, 1, 0))
    for mat in rep.matrices.values():
        assert all(isinstance(v, Fraction) for row in mat for v in row)
