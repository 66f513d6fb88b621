"""Structured reduction of classes in symmetric algebras.

Given a square-zero odd derivation whose generator space splits into a
complement with zero action, even generators y with odd partner x(y), and
odd generators u with even partner x(u), the symmetric algebra is a tensor
product of per-generator complexes. Classes then have unique
representatives spanned by "pattern" monomials:

  - free generators may appear with any exponent,
  - each pair (y, eta = x(y)) appears as y^(ap) or y^(ap + p - 1) eta,
  - each pair (u, w = x(u)) does not appear at all.

Dropping all non-pattern monomials of a cocycle is exactly the projection
onto these representatives, because the complement of the pattern span is
a direct sum of acyclic subcomplexes spanned by the other monomials. The
same argument applies verbatim to tensor squares with the diagonal
operator, where the filter acts on both legs at once.

The adapted coordinates may differ from the original generators by a
triangular substitution (some original generator is rewritten as a
combination involving a new partner generator), so the reduction carries
an invertible change of variables with it.
"""

from __future__ import annotations

from .errors import BadShape, NotSquareZero
from .superpoly import (
    RingMorphism,
    SuperPolynomial,
    tensor_square,
)


class AdaptedReduction:
    """Class projection for a derivation in adapted coordinates.

    Parameters give the original ring with its derivation, the adapted
    ring, generator images of the change of variables in both directions,
    and the classification of adapted generators into free ones (zero
    image), even pair leaders (u0) and odd pair leaders (u1). Partners and
    signs are derived from the conjugated derivation and validated: the
    image of each leader must be a single signed partner generator, and
    partners must have zero image themselves.
    """

    def __init__(self, ring, derivation, adapted_ring, to_adapted_images,
                 from_adapted_images, free, even_leaders, odd_leaders):
        self.ring = ring
        self.derivation = derivation
        self.adapted = adapted_ring
        self.to_adapted = RingMorphism(ring, adapted_ring, to_adapted_images)
        self.from_adapted = RingMorphism(adapted_ring, ring, from_adapted_images)
        for lab in ring.labels:
            roundtrip = self.from_adapted.apply(self.to_adapted.apply(ring.gen(lab)))
            if roundtrip != ring.gen(lab):
                raise BadShape(f"change of variables is not invertible on {lab!r}")
        for lab in adapted_ring.labels:
            roundtrip = self.to_adapted.apply(self.from_adapted.apply(adapted_ring.gen(lab)))
            if roundtrip != adapted_ring.gen(lab):
                raise BadShape(f"change of variables is not invertible on {lab!r}")

        self.free = tuple(free)
        self.even_leaders = tuple(even_leaders)
        self.odd_leaders = tuple(odd_leaders)

        def conjugated(lab):
            pre = self.from_adapted.apply(adapted_ring.gen(lab))
            return self.to_adapted.apply(derivation.apply(pre))

        self.partner = {}
        self.partner_sign = {}
        partners = []
        field = ring.field
        for lab in self.free:
            if not conjugated(lab).is_zero():
                raise BadShape(f"free generator {lab!r} has nonzero image")
        for lab in self.even_leaders + self.odd_leaders:
            img = conjugated(lab)
            if len(img.terms) != 1:
                raise BadShape(f"leader {lab!r} image is not a single term")
            (mono, coeff), = img.terms.items()
            if len(mono) != 1 or mono[0][1] != 1:
                raise BadShape(f"leader {lab!r} image is not a single generator")
            plab = adapted_ring.labels[mono[0][0]]
            if coeff == field.one:
                sign = 1
            elif coeff == field.neg(field.one):
                sign = -1
            else:
                raise BadShape(f"leader {lab!r} image has coefficient other than +-1")
            self.partner[lab] = plab
            self.partner_sign[lab] = sign
            partners.append(plab)
        classified = set(self.free) | set(self.even_leaders) | set(self.odd_leaders)
        if len(partners) != len(set(partners)) or classified & set(partners):
            raise BadShape("partner generators are not distinct from leaders")
        for plab in partners:
            if not conjugated(plab).is_zero():
                raise BadShape(f"partner {plab!r} has nonzero image")
        if classified | set(partners) != set(adapted_ring.labels):
            raise BadShape("classification does not cover the adapted generators")

        self.even_pairs = [(y, self.partner[y]) for y in self.even_leaders]
        self.odd_pairs = [(u, self.partner[u]) for u in self.odd_leaders]
        self._even_idx = [
            (adapted_ring.index[y], adapted_ring.index[eta]) for y, eta in self.even_pairs
        ]
        self._odd_idx = [
            (adapted_ring.index[u], adapted_ring.index[w]) for u, w in self.odd_pairs
        ]
        self._tensor = None

    def lambda_generator(self, leader):
        """The canonical class y^(p-1) x(y) attached to an even leader."""
        p = self.ring.field.char
        y = self.adapted.gen(leader)
        eta = self.adapted.gen(self.partner[leader])
        lam = (y ** (p - 1)) * eta
        if self.partner_sign[leader] < 0:
            lam = -lam
        return lam

    def is_representative_monomial(self, mono):
        p = self.ring.field.char
        exps = dict(mono)
        for uy, uw in self._odd_idx:
            if exps.get(uy, 0) or exps.get(uw, 0):
                return False
        for ey, eeta in self._even_idx:
            e_y = exps.get(ey, 0)
            e_eta = exps.get(eeta, 0)
            if e_eta == 0:
                if e_y % p != 0:
                    return False
            elif e_eta == 1:
                if e_y % p != p - 1:
                    return False
            else:
                return False
        return True

    def filter_adapted(self, g):
        terms = {
            m: c for m, c in g.terms.items() if self.is_representative_monomial(m)
        }
        return SuperPolynomial(self.adapted, terms)

    def reduce(self, f, check_cocycle=True):
        """Canonical representative of the class of a cocycle."""
        if check_cocycle and not self.derivation.apply(f).is_zero():
            raise NotSquareZero("polynomial is not in the kernel of the derivation")
        return self.filter_adapted(self.to_adapted.apply(f))

    @property
    def tensor(self):
        if self._tensor is None:
            self._tensor = _TensorReduction(self)
        return self._tensor

    def reduce_tensor(self, big, check_cocycle=True):
        """Class projection in the tensor square, both legs filtered."""
        return self.tensor.reduce(big, check_cocycle=check_cocycle)


class _TensorReduction:
    """The induced reduction on tensor squares of the original ring."""

    def __init__(self, base):
        self.base = base
        self.source = tensor_square(base.ring)
        self.target = tensor_square(base.adapted)
        images = {}
        for lab in base.ring.labels:
            img = base.to_adapted.apply(base.ring.gen(lab))
            images[("l", lab)] = self.target.embed_left.apply(img)
            images[("r", lab)] = self.target.embed_right.apply(img)
        self.to_adapted = RingMorphism(self.source.ring, self.target.ring, images)
        self.operator = self.source.operator(base.derivation)

    def is_representative_monomial(self, mono):
        left, right = self.target.legs_of_mono(mono)
        return self.base.is_representative_monomial(
            left
        ) and self.base.is_representative_monomial(right)

    def reduce(self, big, check_cocycle=True):
        if check_cocycle and not self.operator.apply(big).is_zero():
            raise NotSquareZero("tensor element is not in the kernel")
        g = self.to_adapted.apply(big)
        terms = {
            m: c for m, c in g.terms.items() if self.is_representative_monomial(m)
        }
        return SuperPolynomial(self.target.ring, terms)

    def split_terms(self, reduced):
        """Reduced tensor polynomial as a list of (left, right, coeff)."""
        out = []
        base = self.base.adapted
        for mono, coeff in reduced.terms.items():
            left, right = self.target.legs_of_mono(mono)
            out.append((left, right, coeff))

        def key(item):
            return (item[0], item[1])

        return sorted(out, key=key)


def identity_adapted_images(ring):
    """Generator images for an identity change of variables."""
    return {lab: ring.gen(lab) for lab in ring.labels}
