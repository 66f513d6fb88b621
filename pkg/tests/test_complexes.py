"""Truncated differential forms, strand slices, and symmetric algebra classes."""

import pytest

from superds.complexes import (
    cartier_map,
    cohomology,
    divided_power_class,
    expected_de_rham_dims,
    koszul_strand,
    p_restricted_de_rham,
    r_prime_subcomplex,
    sym_ds_graded_dims,
)
from superds.dsfunctor import SquareZeroOddOperator
from superds.errors import BadParams, CutoffTooSmall, NotASubspace
from superds.fields import PrimeField
from superds.linalg import Subspace, SuperVectorSpace


def poly_vector(piece, poly):
    v = [piece.field.zero] * piece.dim
    for mono, coeff in poly.terms.items():
        v[piece.index(mono)] = coeff
    return v


def subsets(s):
    out = [[]]
    for i in range(s):
        out += [sub + [i] for sub in out]
    return [tuple(sub) for sub in out]


def test_truncated_de_rham_dimensions():
    for p in (3, 5):
        for s in (1, 2):
            complex_ = p_restricted_de_rham(s, p)
            assert sum(piece.dim for piece in complex_.pieces) == (p ** s) * (2 ** s)
            dims = [h.dim for h in cohomology(complex_)]
            assert dims == expected_de_rham_dims(s)
            assert sum(dims) == 2 ** s


def test_divided_power_forms_are_a_class_basis():
    p, s = 3, 3
    complex_ = p_restricted_de_rham(s, p)
    pieces_h = cohomology(complex_)
    by_size = {}
    for J in subsets(s):
        by_size.setdefault(len(J), []).append(J)
    for q in range(s + 1):
        projected = []
        for J in by_size[q]:
            form = divided_power_class(complex_.ring, s, J)
            v = poly_vector(complex_.pieces[q], form)
            projected.append(pieces_h[q].project(v))
        space = pieces_h[q].quotient.space
        assert Subspace(space, projected).dim == pieces_h[q].dim


def test_twist_map_images_are_cocycles_everywhere():
    """The twisted image of any source form is killed by the differential."""
    cartier = cartier_map(2, 3)
    for k, J in cartier.source_forms(3):
        image = cartier.image_of(k, J)
        assert cartier.derivation.apply(image).is_zero()


def test_twist_map_classes_match_class_counts():
    p, s = 3, 2
    complex_ = p_restricted_de_rham(s, p)
    pieces_h = cohomology(complex_)
    cartier = cartier_map(s, p)
    zero = (0,) * s
    by_size = {}
    for J in subsets(s):
        by_size.setdefault(len(J), []).append(J)
    for q in range(s + 1):
        projected = []
        for J in by_size[q]:
            image = cartier.image_of(zero, J)
            v = poly_vector(complex_.pieces[q], image)
            projected.append(pieces_h[q].project(v))
        space = pieces_h[q].quotient.space
        assert Subspace(space, projected).dim == pieces_h[q].dim


def test_complement_subcomplex_is_acyclic():
    for p in (3, 5):
        for s in (1, 2):
            k = r_prime_subcomplex(s, p)
            assert all(h.dim == 0 for h in cohomology(k))
            truncated_total = (p ** s) * (2 ** s)
            assert sum(piece.dim for piece in k.pieces) == truncated_total - 2 ** s


def test_strand_slices_are_exact_above_zero():
    field = PrimeField(3)
    for t in (1, 2, 3):
        for d in range(0, 5):
            k = koszul_strand(t, d, field)
            dims = [h.dim for h in cohomology(k)]
            if d == 0:
                assert dims == [1]
            else:
                assert dims == [0] * len(dims)


def test_strand_rejects_no_generators():
    with pytest.raises(BadParams):
        koszul_strand(0, 1, PrimeField(3))


def rank_one_pairing_space(p):
    field = PrimeField(p)
    space = SuperVectorSpace(("e", "o"), [0, 1], field)
    x = SquareZeroOddOperator(space, [[0, 0], [1, 0]])
    return space, x


def test_symmetric_classes_match_product_series():
    """A matched pair leaves classes only in degrees divisible by p."""
    space, x = rank_one_pairing_space(3)
    lhs, rhs = sym_ds_graded_dims(space, x, 9)
    assert lhs == rhs
    assert lhs[0] == 1 and lhs[3] == 2 and lhs[6] == 2 and lhs[9] == 2
    assert lhs[1] == lhs[2] == lhs[4] == 0


def test_symmetric_classes_rational_mode():
    space, x = rank_one_pairing_space(3)
    lhs, rhs = sym_ds_graded_dims(space, x, 5, rational_mode=True)
    assert lhs == rhs == [1, 0, 0, 0, 0, 0]


def test_symmetric_classes_cutoff_guard():
    space, x = rank_one_pairing_space(5)
    with pytest.raises(CutoffTooSmall):
        sym_ds_graded_dims(space, x, 3)


def test_symmetric_classes_with_surviving_generators():
    """A free odd generator contributes the factor (1 + t)."""
    field = PrimeField(3)
    space = SuperVectorSpace(("e", "o", "f"), [0, 1, 1], field)
    x = SquareZeroOddOperator(space, [[0, 0, 0], [1, 0, 0], [0, 0, 0]])
    lhs, rhs = sym_ds_graded_dims(space, x, 6)
    assert lhs == rhs
    # (1 + t) * (1 + 2 t^3 + 2 t^6 + ...)
    assert lhs[:7] == [1, 1, 0, 2, 2, 0, 2]
