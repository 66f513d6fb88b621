"""Kernel modulo image of square-zero odd operators and its functoriality."""

import random

import pytest

from superds.dsfunctor import (
    SquareZeroOddOperator,
    complex_as_operator,
    direct_sum_operator,
    ds,
    dual_operator,
    induced_map,
    random_operator,
    tensor_operator,
)
from superds.errors import DoesNotCommute, NotOdd, NotSquareZero
from superds.fields import PrimeField
from superds.linalg import GradedLinearMap, SuperVectorSpace

F3 = PrimeField(3)


def pair_space(m, n, field=F3):
    labels = [f"e{i}" for i in range(m)] + [f"o{i}" for i in range(n)]
    return SuperVectorSpace(tuple(labels), [0] * m + [1] * n, field)


def test_operator_must_be_odd_and_square_zero():
    v = pair_space(1, 1)
    with pytest.raises(NotOdd):
        SquareZeroOddOperator(v, [[1, 0], [0, 0]])
    w = pair_space(2, 2)
    # e0 -> o0 -> e1 -> o1 does not square to zero
    bad = [
        [0, 0, 0, 0],
        [0, 0, 1, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 0],
    ]
    with pytest.raises(NotSquareZero):
        SquareZeroOddOperator(w, bad)


def test_classes_of_a_pairing_operator():
    """One matched pair plus one even and one odd survivor."""
    v = pair_space(2, 2)
    matrix = [
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 0],
    ]
    x = SquareZeroOddOperator(v, matrix)
    result = ds(x)
    assert result.rank == 1
    assert result.dim == 2
    assert sorted(result.cohomology.parity) == [0, 1]
    # the matched pair vanishes in the classes
    assert result.project([0, 0, 1, 0]) == [0, 0]


def test_zero_operator_keeps_everything():
    v = pair_space(2, 1)
    x = SquareZeroOddOperator(v, [[0] * 3 for _ in range(3)])
    result = ds(x)
    assert result.dim == 3
    assert result.rank == 0


def test_dimension_law_on_random_instances():
    rng = random.Random(3)
    for _ in range(50):
        field = PrimeField(rng.choice((3, 5)))
        x = random_operator(rng, field, rng.randint(0, 5), rng.randint(0, 5))
        result = ds(x)
        assert result.dim == x.space.dim - 2 * result.rank


def test_graded_dimension_laws():
    """Sum, tensor, and dual interact with the classes dimensionwise."""
    rng = random.Random(4)

    def dims(result):
        parity = result.cohomology.parity
        return parity.count(0), parity.count(1)

    for _ in range(40):
        field = PrimeField(rng.choice((3, 5)))
        x = random_operator(rng, field, rng.randint(0, 4), rng.randint(0, 4))
        y = random_operator(rng, field, rng.randint(0, 3), rng.randint(0, 3))
        ae, ao = dims(ds(x))
        be, bo = dims(ds(y))
        assert dims(ds(direct_sum_operator(x, y))) == (ae + be, ao + bo)
        assert dims(ds(tensor_operator(x, y))) == (
            ae * be + ao * bo,
            ae * bo + ao * be,
        )
        assert dims(ds(dual_operator(x))) == (ae, ao)


def test_tensor_operator_squares_to_zero_by_construction():
    rng = random.Random(5)
    x = random_operator(rng, F3, 3, 3)
    y = random_operator(rng, F3, 2, 2)
    t = tensor_operator(x, y)
    assert t.action.compose(t.action).is_zero()


def test_induced_map_respects_composition():
    v = pair_space(2, 2)
    matrix = [
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 0],
    ]
    x = SquareZeroOddOperator(v, matrix)
    result = ds(x)
    # an even automorphism commuting with x: scale the matched pair by 2
    f = GradedLinearMap(
        v,
        v,
        [
            [2, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 2, 0],
            [0, 0, 0, 1],
        ],
        0,
    )
    g = induced_map(f, result, result)
    h = induced_map(f.compose(f), result, result)
    for r in range(result.dim):
        for c in range(result.dim):
            lhs = h.matrix[r][c]
            rhs = sum(
                g.matrix[r][k] * g.matrix[k][c] for k in range(result.dim)
            ) % 3
            assert lhs == rhs


def test_induced_map_requires_commutation():
    v = pair_space(2, 2)
    matrix = [
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 0],
    ]
    x = SquareZeroOddOperator(v, matrix)
    result = ds(x)
    f = GradedLinearMap(
        v,
        v,
        [
            [0, 1, 0, 0],
            [0, 0, 0, 0],
            [0, 0, 0, 0],
            [0, 0, 0, 0],
        ],
        0,
    )
    with pytest.raises(DoesNotCommute):
        induced_map(f, result, result)


def test_complex_as_operator_recovers_cohomology():
    """A two step complex with one dimensional middle cohomology."""
    field = F3
    p0 = SuperVectorSpace(("a",), [0], field)
    p1 = SuperVectorSpace(("b", "c"), [1, 1], field)
    p2 = SuperVectorSpace(("d",), [0], field)
    d0 = GradedLinearMap(p0, p1, [[1], [0]], 1)
    d1 = GradedLinearMap(p1, p2, [[0, 1]], 1)

    class K:
        pieces = [p0, p1, p2]
        differentials = [d0, d1]

    x = complex_as_operator(K)
    result = ds(x)
    assert result.dim == 0
    p2_free = SuperVectorSpace(("d",), [0], field)
    d1_zero = GradedLinearMap(p1, p2_free, [[0, 0]], 1)

    class K2:
        pieces = [p0, p1, p2_free]
        differentials = [d0, d1_zero]

    result = ds(complex_as_operator(K2))
    assert result.dim == 2
