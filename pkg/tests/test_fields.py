"""Field arithmetic, extensions, embeddings, and eigenvalue search."""

import random

import pytest

from superds.errors import BadParams, FieldMismatch
from superds.fields import (
    FieldExtension,
    PrimeField,
    berkowitz_charpoly,
    eigenvalue_over_extension,
    embedding,
    field_from_meta,
    min_degree_irreducible_factor,
    pol_eval,
    pol_mul,
    poly_roots,
    standard_modulus,
)


def test_prime_field_rejects_non_odd_primes():
    for bad in (0, 1, 2, 4, 9, 15):
        with pytest.raises(BadParams):
            PrimeField(bad)


def test_prime_field_arithmetic_roundtrip():
    f = PrimeField(5)
    for a in f.elements():
        if f.is_zero(a):
            continue
        assert f.mul(a, f.inv(a)) == f.one
        assert f.is_zero(f.add(a, f.neg(a)))
    assert f.of_int(7) == 2
    assert f.pow(f.of_int(2), 4) == 1


def test_extension_field_is_a_field():
    """Every nonzero element of F_9 and F_27 must be invertible."""
    for k in (2, 3):
        big = FieldExtension(3, k)
        assert big.order == 3 ** k
        count = 0
        for a in big.elements():
            count += 1
            if big.is_zero(a):
                continue
            assert big.mul(a, big.inv(a)) == big.one
        assert count == 3 ** k


def test_standard_modulus_is_irreducible_and_first():
    assert standard_modulus(3, 2) == (1, 0, 1)
    f = PrimeField(3)
    for x in f.elements():
        assert not f.is_zero(pol_eval(f, list(standard_modulus(3, 2)), x))
    # degree three: t^3 + 2t + 1 is the first irreducible in counting order
    mod3 = standard_modulus(3, 3)
    assert len(mod3) == 4 and mod3[-1] == 1
    assert all(not f.is_zero(pol_eval(f, list(mod3), x)) for x in f.elements())


def test_from_int_to_int_bijection():
    big = FieldExtension(5, 2)
    seen = set()
    for n in range(25):
        a = big.from_int(n)
        assert big.to_int(a) == n
        seen.add(a)
    assert len(seen) == 25


def test_embedding_preserves_arithmetic():
    small = FieldExtension(3, 2)
    big = FieldExtension(3, 4)
    emb = embedding(small, big)
    rng = random.Random(1)
    for _ in range(40):
        a, b = small.random(rng), small.random(rng)
        assert emb(small.add(a, b)) == big.add(emb(a), emb(b))
        assert emb(small.mul(a, b)) == big.mul(emb(a), emb(b))
    assert emb(small.one) == big.one


def test_embedding_requires_dividing_degree():
    with pytest.raises(BadParams):
        embedding(FieldExtension(3, 2), FieldExtension(3, 3))
    with pytest.raises(FieldMismatch):
        embedding(PrimeField(3), PrimeField(5))


def test_prime_field_embeds_into_extension():
    f = PrimeField(3)
    big = FieldExtension(3, 2)
    emb = embedding(f, big)
    assert emb(2) == big.of_base(2)


def test_charpoly_matches_direct_expansion():
    """Coefficients come leading term first, here for (x - 2)(x - 3)."""
    f = PrimeField(7)
    a = [[f.of_int(2), f.of_int(1)], [f.of_int(0), f.of_int(3)]]
    char = berkowitz_charpoly(f, a)
    expect = pol_mul(f, [f.neg(f.of_int(2)), f.one], [f.neg(f.of_int(3)), f.one])
    assert list(char) == list(reversed(expect))


def test_poly_roots_and_min_factor():
    f = PrimeField(3)
    # x^2 + 1 has no roots mod 3, so its least factor keeps degree 2
    poly = [f.one, f.zero, f.one]
    assert poly_roots(f, poly) == []
    degree, factor = min_degree_irreducible_factor(f, poly)
    assert degree == 2 and factor == [1, 0, 1]
    # x^2 - 1 splits
    poly = [f.neg(f.one), f.zero, f.one]
    assert sorted(poly_roots(f, poly)) == [1, 2]


def test_eigenvalue_search_stays_in_base_when_possible():
    f = PrimeField(3)
    a = [[f.of_int(1), f.of_int(1)], [f.of_int(0), f.of_int(1)]]
    result = eigenvalue_over_extension(a, f)
    assert result.factor_degree == 1
    assert result.field.degree == 1
    assert result.value == 1
    v = result.vector
    image = [
        f.add(f.mul(a[r][0], v[0]), f.mul(a[r][1], v[1])) for r in range(2)
    ]
    assert image == [f.mul(result.value, c) for c in v]


def test_eigenvalue_search_extends_when_forced():
    """The companion matrix of x^2 + 1 over F_3 needs the quadratic extension."""
    f = PrimeField(3)
    a = [[f.zero, f.neg(f.one)], [f.one, f.zero]]
    result = eigenvalue_over_extension(a, f)
    big = result.field
    assert big.degree == 2
    assert big.is_zero(big.add(big.mul(result.value, result.value), big.one))
    v = result.vector
    emb = result.embed
    image = [
        big.add(big.mul(emb(a[r][0]), v[0]), big.mul(emb(a[r][1]), v[1]))
        for r in range(2)
    ]
    assert image == [big.mul(result.value, c) for c in v]
    assert any(not big.is_zero(c) for c in v)


def test_field_from_meta_degree_one_is_prime_field():
    assert field_from_meta(5, 1) == PrimeField(5)
    assert field_from_meta(5, 2).degree == 2
