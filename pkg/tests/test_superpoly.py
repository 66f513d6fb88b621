"""Supercommutative polynomial rings, derivations, and tensor squares."""

import pytest

from superds.errors import ExponentTooLarge, NotHomogeneous
from superds.fields import PrimeField
from superds.superpoly import (
    RingMorphism,
    SuperDerivation,
    SuperPolyRing,
    SuperPolynomial,
    divided_power_monomial,
    tensor_square,
)

F3 = PrimeField(3)
F5 = PrimeField(5)


def mixed_ring(field=F3):
    return SuperPolyRing([("y", 0), ("z", 0), ("u", 1), ("v", 1)], field)


def test_odd_generators_square_to_zero():
    ring = mixed_ring()
    u = ring.gen("u")
    assert (u * u).is_zero()
    assert ring.monomial([("u", 2)]).is_zero()


def test_koszul_sign_on_odd_swap():
    ring = mixed_ring()
    u, v, y = ring.gen("u"), ring.gen("v"), ring.gen("y")
    assert u * v == -(v * u)
    assert y * u == u * y
    assert y * ring.gen("z") == ring.gen("z") * y


def test_multiplication_is_associative_and_distributive():
    ring = mixed_ring(F5)
    y, z, u, v = (ring.gen(lab) for lab in ("y", "z", "u", "v"))
    a = y * y + u * v
    b = z + y * u
    c = v + ring.one()
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_parity_of_polynomials():
    ring = mixed_ring()
    y, u, v = ring.gen("y"), ring.gen("u"), ring.gen("v")
    assert (y * u).parity() == 1
    assert (u * v).parity() == 0
    assert (y + u * v).parity() == 0
    assert (y + u).parity() is None


def test_derivation_graded_leibniz():
    """x(fg) = x(f) g + (-1)^|f| f x(g) on homogeneous samples."""
    ring = mixed_ring()
    y, z, u, v = (ring.gen(lab) for lab in ("y", "z", "u", "v"))
    x = SuperDerivation(
        ring, {"y": u, "z": v, "u": ring.zero(), "v": ring.zero()}
    )
    samples = [(y, z), (y * z, u), (u, v), (y * u, v), (u * v, y)]
    for f, g in samples:
        lhs = x.apply(f * g)
        sign = -1 if f.parity() == 1 else 1
        rhs = x.apply(f) * g + (f * x.apply(g) if sign > 0 else -(f * x.apply(g)))
        assert lhs == rhs, (f, g)
    assert x.is_square_zero_on_generators()
    assert x.preserves_degree()


def test_derivation_rejects_wrong_parity_image():
    ring = mixed_ring()
    with pytest.raises(NotHomogeneous):
        SuperDerivation(ring, {"y": ring.gen("z")})


def test_tensor_square_sign_rule():
    """(1 x b)(c x 1) = (-1)^(|b||c|) (c x b)."""
    ring = mixed_ring()
    tsq = tensor_square(ring)
    u, v, y = ring.gen("u"), ring.gen("v"), ring.gen("y")
    one = ring.one()
    left = tsq.pure(one, u) * tsq.pure(v, one)
    assert left == -tsq.pure(v, u)
    left = tsq.pure(one, u) * tsq.pure(y, one)
    assert left == tsq.pure(y, u)


def test_tensor_square_leg_split():
    ring = mixed_ring()
    tsq = tensor_square(ring)
    elem = tsq.pure(ring.gen("y"), ring.gen("u") * ring.gen("v"))
    ((mono, _),) = elem.terms.items()
    left, right = tsq.legs_of_mono(mono)
    assert left == ((ring.index["y"], 1),)
    assert right == tuple(sorted([(ring.index["u"], 1), (ring.index["v"], 1)]))


def test_divided_power_coefficients():
    ring = mixed_ring()
    half = F3.inv(F3.of_int(2))
    poly = divided_power_monomial(ring, [("y", 2)])
    ((_, coeff),) = poly.terms.items()
    assert coeff == half
    with pytest.raises(ExponentTooLarge):
        divided_power_monomial(ring, [("y", 3)])


def test_ring_morphism_is_multiplicative():
    ring = mixed_ring()
    target = SuperPolyRing([("a", 0), ("b", 1)], F3)
    phi = RingMorphism(
        ring,
        target,
        {
            "y": target.gen("a") * target.gen("a"),
            "z": target.gen("a"),
            "u": target.gen("b"),
            "v": target.gen("a") * target.gen("b"),
        },
    )
    y, z, u, v = (ring.gen(lab) for lab in ("y", "z", "u", "v"))
    for f, g in [(y, u), (y * z, v), (u, v), (y + u * v, z * u)]:
        assert phi.apply(f * g) == phi.apply(f) * phi.apply(g)
        assert phi.apply(f + g) == phi.apply(f) + phi.apply(g)


def test_scalar_and_power_operations():
    ring = mixed_ring(F5)
    y, u = ring.gen("y"), ring.gen("u")
    assert (y + u) ** 1 == y + u
    assert y ** 4 == ring.monomial([("y", 4)])
    assert (y * u).scale(F5.of_int(2)) == ring.monomial([("y", 1), ("u", 1)], F5.of_int(2))
