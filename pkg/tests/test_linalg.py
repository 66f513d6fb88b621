"""Super vector spaces, graded maps, echelon subspaces, and quotients."""

import pytest

from superds.errors import BadShape, NotASubspace, NotHomogeneous, NotOdd
from superds.fields import PrimeField
from superds.linalg import (
    GradedLinearMap,
    Subspace,
    SuperVectorSpace,
    dual_space,
    quotient_with_section,
    rank_kernel_image,
    rref,
    solve_linear,
    tensor_space,
)

F3 = PrimeField(3)


def vspace(labels="ab", parity=(0, 1)):
    return SuperVectorSpace(tuple(labels), list(parity), F3)


def test_space_basics():
    v = vspace("abc", (0, 1, 0))
    assert v.dim == 3
    assert v.basis_vector("b") == [0, 1, 0]
    assert v.vector_parity(v.basis_vector("b")) == 1
    # mixed and zero vectors have no parity
    assert v.vector_parity([1, 1, 0]) is None
    assert v.vector_parity([0, 0, 0]) is None


def test_space_rejects_mismatched_lengths():
    with pytest.raises(BadShape):
        SuperVectorSpace(("a", "b"), [0], F3)


def test_graded_map_parity_blocks():
    v = vspace()
    # an even map may not connect parities, an odd map must
    GradedLinearMap(v, v, [[1, 0], [0, 2]], 0)
    GradedLinearMap(v, v, [[0, 1], [1, 0]], 1)
    with pytest.raises(BadShape):
        GradedLinearMap(v, v, [[0, 1], [0, 0]], 0)
    with pytest.raises(NotOdd):
        GradedLinearMap(v, v, [[1, 0], [0, 0]], 1)


def test_compose_apply_agree():
    v = vspace("abcd", (0, 0, 1, 1))
    f = GradedLinearMap(
        v, v, [[0, 0, 1, 2], [0, 0, 0, 1], [1, 0, 0, 0], [2, 1, 0, 0]], 1
    )
    g = f.compose(f)
    for lab in v.labels:
        e = v.basis_vector(lab)
        assert g.apply(e) == f.apply(f.apply(e))


def test_rref_pivots_and_consistency():
    """Row reduction of a rank two list of row vectors."""
    rows = [[1, 2, 0], [2, 1, 1], [0, 0, 0]]
    echelon, pivots = rref(F3, rows)
    # (2,1,1) - 2(1,2,0) = (0,0,1) mod 3, so the pivots sit in columns 0, 2
    assert list(pivots) == [0, 2]
    assert echelon == [[1, 2, 0], [0, 0, 1]]
    for p_row, p_col in enumerate(pivots):
        assert echelon[p_row][p_col] == 1
        for other in range(len(pivots)):
            if other != p_row:
                assert echelon[other][p_col] == 0


def test_subspace_membership_and_coefficients():
    v = vspace("abcd", (0, 0, 1, 1))
    sub = Subspace(v, [[1, 1, 0, 0], [0, 0, 1, 2]])
    assert sub.dim == 2
    assert sub.contains([2, 2, 0, 0])
    assert not sub.contains([1, 0, 0, 0])
    coeffs = sub.coefficients([2, 2, 2, 4 % 3])
    rebuilt = [0, 0, 0, 0]
    for c, row in zip(coeffs, sub.rows):
        for k, val in enumerate(row):
            rebuilt[k] = F3.add(rebuilt[k], F3.mul(c, val))
    assert rebuilt == [2, 2, 2, 1]


def test_subspace_requires_homogeneous_spans():
    v = vspace("ab", (0, 1))
    with pytest.raises(NotHomogeneous):
        Subspace(v, [[1, 1]])


def test_rank_kernel_image_dimensions():
    v = vspace("abcd", (0, 0, 1, 1))
    f = GradedLinearMap(
        v, v, [[0, 0, 1, 0], [0, 0, 1, 0], [1, 2, 0, 0], [0, 0, 0, 0]], 1
    )
    rank, kernel, image = rank_kernel_image(f)
    assert rank == 2
    assert kernel.dim == 2
    assert image.dim == 2
    for row in kernel.rows:
        assert all(F3.is_zero(c) for c in f.apply(list(row)))


def test_quotient_projection_and_section():
    v = vspace("abc", (0, 0, 0))
    kernel = Subspace(v, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    image = Subspace(v, [[1, 2, 0]])
    q = quotient_with_section(kernel, image)
    assert q.space.dim == 2
    # the class of an image vector is zero
    assert q.project([2, 1, 0]) == [0, 0]
    # representatives project to the standard basis
    for k, rep in enumerate(q.representatives):
        coords = q.project(list(rep))
        expected = [0] * q.space.dim
        expected[k] = 1
        assert coords == expected
    with pytest.raises(NotASubspace):
        bigger = vspace("abc", (0, 0, 0))
        small_kernel = Subspace(bigger, [[1, 0, 0]])
        quotient_with_section(small_kernel, Subspace(bigger, [[0, 1, 0]]))


def test_solve_linear_finds_particular_solution():
    matrix = [[1, 2], [2, 2]]
    sol = solve_linear(F3, matrix, [1, 1])
    out = [
        F3.add(F3.mul(matrix[r][0], sol[0]), F3.mul(matrix[r][1], sol[1]))
        for r in range(2)
    ]
    assert out == [1, 1]
    # singular and inconsistent: columns (1,2) and (2,1) cannot reach (1,0)
    assert solve_linear(F3, [[1, 2], [2, 1]], [1, 0]) is None


def test_tensor_space_parity_and_labels():
    v = vspace("ab", (0, 1))
    w = vspace("xy", (0, 1))
    t = tensor_space(v, w)
    assert t.dim == 4
    assert t.vector_parity(t.basis_vector(("a", "y"))) == 1
    assert t.vector_parity(t.basis_vector(("b", "y"))) == 0


def test_dual_space_keeps_parity():
    v = vspace("ab", (0, 1))
    d = dual_space(v)
    assert d.dim == 2
    assert list(d.parity) == [0, 1]


def test_extension_field_subspace():
    """Echelon reduction must work over an extension, not just a prime field."""
    from superds.fields import FieldExtension

    big = FieldExtension(3, 2)
    v = SuperVectorSpace(("a", "b", "c"), [0, 0, 0], big)
    t = big.gen()
    sub = Subspace(v, [[t, big.one, big.zero], [big.one, t, big.zero]])
    assert sub.dim == 2
    combo = [big.add(t, big.one), big.add(big.one, t), big.zero]
    assert sub.contains(combo)
