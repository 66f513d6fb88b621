"""Sparse supercommutative polynomial algebra with odd derivations.

Monomials are tuples of (generator index, exponent) pairs sorted by index.
Multiplication reorders generators with the Koszul sign rule: swapping two
odd generators costs a factor of -1, and the square of an odd generator is
zero. Everything downstream (coordinate rings of supergroups, de Rham and
Koszul complexes, comodule coactions) is built from this module.
"""

from __future__ import annotations

from .errors import (
    BadShape,
    ExponentTooLarge,
    NotDegreePreserving,
    NotHomogeneous,
    RingMismatch,
    UndefinedOnGenerator,
)


class SuperPolyRing:
    """A free supercommutative algebra on labeled generators."""

    def __init__(self, generators, field):
        labels = []
        parity = []
        for lab, par in generators:
            labels.append(lab)
            parity.append(int(par) % 2)
        if len(set(labels)) != len(labels):
            raise BadShape("generator labels must be distinct")
        self.labels = tuple(labels)
        self.parity = tuple(parity)
        self.field = field
        self.index = {lab: i for i, lab in enumerate(labels)}

    @property
    def ngens(self):
        return len(self.labels)

    def zero(self):
        return SuperPolynomial(self, {})

    def one(self):
        return SuperPolynomial(self, {(): self.field.one})

    def const(self, c):
        if self.field.is_zero(c):
            return self.zero()
        return SuperPolynomial(self, {(): c})

    def gen(self, label):
        if label not in self.index:
            raise UndefinedOnGenerator(f"no generator {label!r} in this ring")
        return SuperPolynomial(self, {((self.index[label], 1),): self.field.one})

    def monomial(self, pairs, coeff=None):
        """Polynomial with one term, pairs being (label, exponent) items."""
        coeff = self.field.one if coeff is None else coeff
        mono = []
        for lab, e in pairs:
            if e < 0:
                raise BadShape("negative exponent")
            if e == 0:
                continue
            idx = self.index[lab]
            if self.parity[idx] == 1 and e > 1:
                return self.zero()
            mono.append((idx, e))
        mono.sort()
        for a, b in zip(mono, mono[1:]):
            if a[0] == b[0]:
                raise BadShape("repeated generator in monomial spec")
        return SuperPolynomial(self, {tuple(mono): coeff})

    def mono_parity(self, mono):
        return sum(e * self.parity[g] for g, e in mono) % 2

    def mono_degree(self, mono):
        return sum(e for _, e in mono)

    def mono_mul(self, m1, m2):
        """Merged monomial and Koszul sign, or (None, 0) when it vanishes."""
        odd1 = [g for g, e in m1 if self.parity[g] == 1]
        swaps = 0
        for g, e in m2:
            if self.parity[g] == 1:
                bigger = 0
                for h in odd1:
                    if h > g:
                        bigger += 1
                    elif h == g:
                        return None, 0
                swaps += bigger
        merged = {}
        for g, e in m1:
            merged[g] = e
        for g, e in m2:
            merged[g] = merged.get(g, 0) + e
        mono = tuple(sorted(merged.items()))
        return mono, (-1) ** (swaps % 2)

    def mono_str(self, mono):
        if not mono:
            return "1"
        parts = []
        for g, e in mono:
            lab = self.labels[g]
            parts.append(str(lab) if e == 1 else f"{lab}^{e}")
        return "*".join(parts)

    def __eq__(self, other):
        return (
            isinstance(other, SuperPolyRing)
            and other.labels == self.labels
            and other.parity == self.parity
            and other.field == self.field
        )

    def __repr__(self):
        return f"SuperPolyRing({len(self.labels)} gens over {self.field})"


class SuperPolynomial:
    """An element of a SuperPolyRing, stored as monomial -> coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        field = ring.field
        self.terms = {m: c for m, c in terms.items() if not field.is_zero(c)}

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Largest total degree among the terms, or -1 for zero."""
        if not self.terms:
            return -1
        return max(self.ring.mono_degree(m) for m in self.terms)

    def is_homogeneous(self, d=None):
        degs = {self.ring.mono_degree(m) for m in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return d is None or degs == {d}

    def parity(self):
        """Parity of a homogeneous element, None for zero or mixed."""
        pars = {self.ring.mono_parity(m) for m in self.terms}
        if len(pars) == 1:
            return pars.pop()
        return None

    def coefficient(self, mono):
        return self.terms.get(mono, self.ring.field.zero)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch("polynomials belong to different rings")

    def __add__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        self._check(other)
        field = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = field.add(out.get(m, field.zero), c)
        return SuperPolynomial(self.ring, out)

    def __sub__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        self._check(other)
        field = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = field.sub(out.get(m, field.zero), c)
        return SuperPolynomial(self.ring, out)

    def __neg__(self):
        field = self.ring.field
        return SuperPolynomial(self.ring, {m: field.neg(c) for m, c in self.terms.items()})

    def scale(self, c):
        field = self.ring.field
        return SuperPolynomial(
            self.ring, {m: field.mul(c, v) for m, v in self.terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        self._check(other)
        ring = self.ring
        field = ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono, sign = ring.mono_mul(m1, m2)
                if mono is None:
                    continue
                c = field.mul(c1, c2)
                if sign < 0:
                    c = field.neg(c)
                out[mono] = field.add(out.get(mono, field.zero), c)
        return SuperPolynomial(ring, out)

    def __pow__(self, e):
        if e < 0:
            raise BadShape("negative polynomial power")
        result = self.ring.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            if e > 1:
                base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, SuperPolynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        field = ring.field
        parts = []
        for m in sorted(self.terms, key=lambda mm: (ring.mono_degree(mm), mm)):
            c = self.terms[m]
            cs = str(field.to_int(c)) if hasattr(field, "to_int") else str(c)
            parts.append(f"{cs}*{ring.mono_str(m)}" if m else cs)
        return " + ".join(parts)


def multiply(f, g):
    return f * g


class SuperDerivation:
    """An odd derivation of a SuperPolyRing, given by generator images.

    Images must be parity homogeneous of parity opposite to the generator.
    Applying the derivation uses the graded Leibniz rule; the sign in front
    of the i-th term is the parity of the monomial prefix it skipped over.
    """

    parity = 1

    def __init__(self, ring, images):
        self.ring = ring
        self.images = {}
        for lab, img in images.items():
            if lab not in ring.index:
                raise UndefinedOnGenerator(f"image given for unknown generator {lab!r}")
            if img.ring != ring:
                raise RingMismatch("derivation image lies in a different ring")
            par = img.parity()
            want = (ring.parity[ring.index[lab]] + 1) % 2
            if par is not None and par != want:
                raise NotHomogeneous(
                    f"image of {lab!r} must have parity {want}"
                )
            self.images[lab] = img

    def image_of(self, label):
        if label not in self.images:
            raise UndefinedOnGenerator(f"derivation undefined on {label!r}")
        return self.images[label]

    def apply(self, f):
        ring = self.ring
        if f.ring != ring:
            raise RingMismatch("polynomial belongs to a different ring")
        field = ring.field
        total = ring.zero()
        for mono, coeff in f.terms.items():
            prefix_parity = 0
            for i, (g, e) in enumerate(mono):
                lab = ring.labels[g]
                img = self.image_of(lab)
                if not img.is_zero():
                    left = list(mono[:i])
                    if e > 1:
                        left.append((g, e - 1))
                    right = mono[i + 1 :]
                    c = field.mul(coeff, field.of_int(e))
                    if prefix_parity % 2 == 1:
                        c = field.neg(c)
                    if not field.is_zero(c):
                        piece = SuperPolynomial(ring, {tuple(left): c})
                        piece = piece * img
                        piece = piece * SuperPolynomial(ring, {right: field.one})
                        total = total + piece
                prefix_parity += e * ring.parity[g]
        return total

    def is_square_zero_on_generators(self):
        for lab in self.ring.labels:
            img = self.images.get(lab)
            if img is None:
                raise UndefinedOnGenerator(f"derivation undefined on {lab!r}")
            if not self.apply(img).is_zero():
                return False
        return True

    def preserves_degree(self):
        for img in self.images.values():
            if not img.is_zero() and not img.is_homogeneous(1):
                return False
        return True


def apply_derivation(x, f):
    return x.apply(f)


class RingMorphism:
    """A parity preserving algebra map determined by generator images."""

    def __init__(self, source, target, images):
        if source.field != target.field:
            raise RingMismatch("morphism endpoints use different fields")
        self.source = source
        self.target = target
        self.images = {}
        for lab in source.labels:
            if lab not in images:
                raise UndefinedOnGenerator(f"morphism undefined on {lab!r}")
            img = images[lab]
            if img.ring != target:
                raise RingMismatch("morphism image lies outside the target ring")
            par = img.parity()
            want = source.parity[source.index[lab]]
            if par is not None and par != want:
                raise NotHomogeneous(f"image of {lab!r} must have parity {want}")
            self.images[lab] = img
        self._power_cache = {}

    def _gen_power(self, g, e):
        key = (g, e)
        cached = self._power_cache.get(key)
        if cached is not None:
            return cached
        img = self.images[self.source.labels[g]]
        if e == 1:
            result = img
        else:
            half = self._gen_power(g, e // 2)
            result = half * half
            if e % 2:
                result = result * img
        self._power_cache[key] = result
        return result

    def apply(self, f):
        if f.ring != self.source:
            raise RingMismatch("polynomial belongs to a different ring")
        total = self.target.zero()
        for mono, coeff in f.terms.items():
            if mono == ():
                total = total + self.target.const(coeff)
                continue
            piece = self.target.one()
            for g, e in mono:
                piece = piece * self._gen_power(g, e)
            total = total + piece.scale(coeff)
        return total


class TensorSquare:
    """The tensor square of a ring, modeled as one ring with doubled gens.

    Left leg generators come before right leg generators, so the internal
    supercommutative multiplication reproduces the sign rule
    (a x b)(c x d) = (-1)^(|b||c|) ac x bd on the nose.
    """

    def __init__(self, ring):
        gens = [(("l", lab), par) for lab, par in zip(ring.labels, ring.parity)]
        gens += [(("r", lab), par) for lab, par in zip(ring.labels, ring.parity)]
        self.base = ring
        self.ring = SuperPolyRing(gens, ring.field)
        self.embed_left = RingMorphism(
            ring, self.ring, {lab: self.ring.gen(("l", lab)) for lab in ring.labels}
        )
        self.embed_right = RingMorphism(
            ring, self.ring, {lab: self.ring.gen(("r", lab)) for lab in ring.labels}
        )

    def pure(self, f, g):
        return self.embed_left.apply(f) * self.embed_right.apply(g)

    def legs_of_mono(self, mono):
        """Split a tensor ring monomial into (left mono, right mono)."""
        left = []
        right = []
        for g, e in mono:
            side, lab = self.ring.labels[g]
            if side == "l":
                left.append((self.base.index[lab], e))
            else:
                right.append((self.base.index[lab], e))
        return tuple(sorted(left)), tuple(sorted(right))

    def operator(self, x):
        """The derivation x(x)1 + sign(x)x on the tensor square."""
        images = {}
        for lab in self.base.labels:
            img = x.image_of(lab)
            images[("l", lab)] = self.embed_left.apply(img)
            images[("r", lab)] = self.embed_right.apply(img)
        return SuperDerivation(self.ring, images)


def tensor_square(ring):
    return TensorSquare(ring)


def divided_power_monomial(ring, pairs):
    """The monomial with divided power normalization on even generators.

    For exponent k on an even generator the coefficient picks up 1/k!, so
    k must stay below the field characteristic.
    """
    field = ring.field
    p = field.char
    coeff = field.one
    for lab, e in pairs:
        idx = ring.index[lab]
        if ring.parity[idx] == 0:
            if e >= p:
                raise ExponentTooLarge(f"divided power exponent {e} >= {p}")
            fact = field.one
            for t in range(2, e + 1):
                fact = field.mul(fact, field.of_int(t))
            coeff = field.mul(coeff, field.inv(fact))
    return ring.monomial(pairs, coeff)


class BialgebraPresentation:
    """A supercommutative bialgebra given on generators.

    coproduct maps each generator label to an element of the tensor square
    ring, counit maps labels to scalars. The antipode, when present, is a
    table label -> (numerator, power) over the designated denominator.
    Designated group-like elements satisfy the group-like axioms exactly;
    localization denominators that are not group-like are carried in
    `denominator` and never enter `group_likes`.
    """

    def __init__(
        self,
        ring,
        coproduct,
        counit,
        antipode=None,
        group_likes=(),
        denominator=None,
        meta=None,
        check=True,
    ):
        self.ring = ring
        self.tsq = tensor_square(ring)
        self.coproduct = dict(coproduct)
        self.counit = dict(counit)
        self.antipode = dict(antipode) if antipode else None
        self.group_likes = list(group_likes)
        self.denominator = denominator
        self.meta = dict(meta or {})
        for lab in ring.labels:
            if lab not in self.coproduct:
                raise UndefinedOnGenerator(f"coproduct undefined on {lab!r}")
            if lab not in self.counit:
                raise UndefinedOnGenerator(f"counit undefined on {lab!r}")
        self._delta = RingMorphism(ring, self.tsq.ring, {
            lab: self.coproduct[lab] for lab in ring.labels
        })
        if check:
            self.check_counit()
            self.check_coassociativity()
            self.check_group_likes()

    def delta(self, f):
        return self._delta.apply(f)

    def counit_morphism(self):
        images = {
            lab: self.ring.const(self.counit[lab]) for lab in self.ring.labels
        }
        return RingMorphism(self.ring, self.ring, images)

    def check_counit(self):
        ring = self.ring
        t = self.tsq
        eps_left = RingMorphism(
            t.ring,
            ring,
            {
                **{("l", lab): ring.const(self.counit[lab]) for lab in ring.labels},
                **{("r", lab): ring.gen(lab) for lab in ring.labels},
            },
        )
        eps_right = RingMorphism(
            t.ring,
            ring,
            {
                **{("l", lab): ring.gen(lab) for lab in ring.labels},
                **{("r", lab): ring.const(self.counit[lab]) for lab in ring.labels},
            },
        )
        for lab in ring.labels:
            g = ring.gen(lab)
            d = self.coproduct[lab]
            if eps_left.apply(d) != g or eps_right.apply(d) != g:
                raise BadShape(f"counit axiom fails on generator {lab!r}")

    def check_coassociativity(self):
        ring = self.ring
        gens3 = [((leg, lab), par) for leg in ("1", "2", "3")
                 for lab, par in zip(ring.labels, ring.parity)]
        triple = SuperPolyRing(gens3, ring.field)
        leg = {
            i: RingMorphism(
                ring, triple, {lab: triple.gen((i, lab)) for lab in ring.labels}
            )
            for i in ("1", "2", "3")
        }

        def spread(i, j):
            images = {}
            for lab in ring.labels:
                d = self.coproduct[lab]
                total = triple.zero()
                for mono, coeff in d.terms.items():
                    lm, rm = self.tsq.legs_of_mono(mono)
                    lp = leg[i].apply(SuperPolynomial(ring, {lm: ring.field.one}))
                    rp = leg[j].apply(SuperPolynomial(ring, {rm: ring.field.one}))
                    total = total + (lp * rp).scale(coeff)
                images[lab] = total
            return images

        d12 = spread("1", "2")
        d23 = spread("2", "3")
        left = RingMorphism(
            self.tsq.ring,
            triple,
            {
                **{("l", lab): d12[lab] for lab in ring.labels},
                **{("r", lab): leg["3"].apply(ring.gen(lab)) for lab in ring.labels},
            },
        )
        right = RingMorphism(
            self.tsq.ring,
            triple,
            {
                **{("l", lab): leg["1"].apply(ring.gen(lab)) for lab in ring.labels},
                **{("r", lab): d23[lab] for lab in ring.labels},
            },
        )
        for lab in ring.labels:
            d = self.coproduct[lab]
            if left.apply(d) != right.apply(d):
                raise BadShape(f"coassociativity fails on generator {lab!r}")

    def check_group_likes(self):
        eps = self.counit_morphism()
        for g in self.group_likes:
            if self.delta(g) != self.tsq.pure(g, g):
                raise BadShape("designated element is not group-like")
            if eps.apply(g) != self.ring.one():
                raise BadShape("designated group-like has counit other than 1")


def coproduct_of(f, presentation):
    return presentation.delta(f)


class GradedComponent:
    """All monomials of one total degree, with a basis-labeled space."""

    def __init__(self, ring, degree):
        from .linalg import SuperVectorSpace

        self.ring = ring
        self.degree = degree
        monos = sorted(_monomials_of_degree(ring, degree))
        self.monomials = tuple(monos)
        parity = [ring.mono_parity(m) for m in monos]
        self.space = SuperVectorSpace(self.monomials, parity, ring.field)

    def vector_of(self, f):
        if not f.is_homogeneous(self.degree):
            raise NotHomogeneous(f"polynomial is not homogeneous of degree {self.degree}")
        v = self.space.zero_vector()
        for mono, coeff in f.terms.items():
            v[self.space.index(mono)] = coeff
        return v

    def polynomial_of(self, v):
        terms = {}
        for mono, coeff in zip(self.monomials, v):
            if not self.ring.field.is_zero(coeff):
                terms[mono] = coeff
        return SuperPolynomial(self.ring, terms)


def _monomials_of_degree(ring, degree):
    n = ring.ngens
    out = []

    def rec(i, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if i == n:
            return
        cap = 1 if ring.parity[i] == 1 else remaining
        for e in range(cap, 0, -1):
            acc.append((i, e))
            rec(i + 1, remaining - e, acc)
            acc.pop()
        rec(i + 1, remaining, acc)

    rec(0, degree, [])
    return out


def degree_slice_matrix(x, degree, component=None):
    """The matrix of an odd degree-preserving derivation on one slice."""
    from .linalg import GradedLinearMap

    if not x.preserves_degree():
        raise NotDegreePreserving("derivation images must be homogeneous of degree 1")
    ring = x.ring
    comp = component if component is not None else GradedComponent(ring, degree)
    field = ring.field
    matrix = [[field.zero] * len(comp.monomials) for _ in range(len(comp.monomials))]
    for c, mono in enumerate(comp.monomials):
        img = x.apply(SuperPolynomial(ring, {mono: field.one}))
        for m, coeff in img.terms.items():
            matrix[comp.space.index(m)][c] = coeff
    return comp, GradedLinearMap(comp.space, comp.space, matrix, 1)


def reduce_mod_image(f, x, degree, slice_cache=None):
    """Canonical representative of f modulo the image of the derivation.

    The echelon basis of the image inside the degree slice is eliminated
    from f; the result is idempotent under further reduction. A cache dict
    may be supplied to reuse slice computations across calls.
    """
    from .linalg import rank_kernel_image

    if not f.is_homogeneous(degree):
        raise NotHomogeneous(f"polynomial is not homogeneous of degree {degree}")
    key = (id(x), degree)
    if slice_cache is not None and key in slice_cache:
        comp, image = slice_cache[key]
    else:
        comp, mat = degree_slice_matrix(x, degree)
        _, _, image = rank_kernel_image(mat)
        if slice_cache is not None:
            slice_cache[key] = (comp, image)
    v = comp.vector_of(f)
    return comp.polynomial_of(image.reduce(v))
