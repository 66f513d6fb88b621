"""Finite complexes built from polynomial data, and their cohomology.

Contains the two families that control the local structure of classes of
square-zero operators on symmetric algebras: acyclic two-variable strands
(even target, odd source) and the truncated de Rham complex in which all
even exponents stay below p. The twist-by-p map sends untruncated forms
into cocycles of p times the degree, with divided power normalization on
the new p-1 exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import BadParams, CutoffTooSmall, NotAComplex
from .fields import PrimeField
from .linalg import (
    GradedLinearMap,
    SuperVectorSpace,
    quotient_with_section,
    rank_kernel_image,
)
from .superpoly import (
    SuperDerivation,
    SuperPolynomial,
    SuperPolyRing,
    divided_power_monomial,
)


class FiniteComplex:
    """Graded pieces connected by differentials that compose to zero."""

    def __init__(self, pieces, differentials):
        if len(differentials) != max(0, len(pieces) - 1):
            raise NotAComplex("need one differential between consecutive pieces")
        for i, d in enumerate(differentials):
            if d.domain != pieces[i] or d.codomain != pieces[i + 1]:
                raise NotAComplex(f"differential {i} does not match its pieces")
        for i in range(len(differentials) - 1):
            if not differentials[i + 1].compose(differentials[i]).is_zero():
                raise NotAComplex(f"d_{i + 1} after d_{i} is nonzero")
        self.pieces = list(pieces)
        self.differentials = list(differentials)

    @property
    def length(self):
        return len(self.pieces)

    def __repr__(self):
        dims = [p.dim for p in self.pieces]
        return f"FiniteComplex(dims {dims})"


@dataclass
class PieceCohomology:
    """Cohomology of one piece with canonical representatives."""

    dim: int
    representatives: list
    quotient: object

    def project(self, v):
        return self.quotient.project(v)


def cohomology(k):
    """Per-piece cohomology of a finite complex, with representatives."""
    out = []
    for i, piece in enumerate(k.pieces):
        if i < len(k.differentials):
            _, kernel, _ = rank_kernel_image(k.differentials[i])
        else:
            from .linalg import Subspace

            kernel = Subspace(piece, [piece.basis_vector(lab) for lab in piece.labels])
        if i > 0:
            _, _, image = rank_kernel_image(k.differentials[i - 1])
        else:
            from .linalg import Subspace

            image = Subspace(piece, [])
        q = quotient_with_section(kernel, image)
        out.append(
            PieceCohomology(
                dim=q.space.dim,
                representatives=[list(r) for r in q.representatives],
                quotient=q,
            )
        )
    return out


def _slice_by_odd_count(ring, degree):
    """Monomials of one total degree, grouped by their odd generator count."""
    from .superpoly import _monomials_of_degree

    groups = {}
    for mono in sorted(_monomials_of_degree(ring, degree)):
        q = sum(e for g, e in mono if ring.parity[g] == 1)
        groups.setdefault(q, []).append(mono)
    return groups


def _complex_from_groups(ring, x, groups, order):
    """Assemble a FiniteComplex whose pieces are the listed monomial groups."""
    field = ring.field
    pieces = []
    for q in order:
        monos = groups.get(q, [])
        parity = [ring.mono_parity(m) for m in monos]
        pieces.append(SuperVectorSpace(tuple(monos), parity, field))
    diffs = []
    for step in range(len(order) - 1):
        src = pieces[step]
        dst = pieces[step + 1]
        matrix = [[field.zero] * src.dim for _ in range(dst.dim)]
        for c, mono in enumerate(src.labels):
            img = x.apply(SuperPolynomial(ring, {mono: field.one}))
            for m, coeff in img.terms.items():
                matrix[dst.index(m)][c] = coeff
        diffs.append(GradedLinearMap(src, dst, matrix, 1))
    return FiniteComplex(pieces, diffs)


def koszul_strand(t, degree, field):
    """Degree slice of the free strand algebra on t even/odd pairs.

    Generators are even w_1..w_t and odd u_1..u_t with x(u_i) = w_i. The
    pieces are indexed by decreasing odd count, so the differential runs
    left to right. The strand is exact except in degree zero.
    """
    if t < 1:
        raise BadParams("need at least one pair of generators")
    gens = [(f"w{i}", 0) for i in range(1, t + 1)]
    gens += [(f"u{i}", 1) for i in range(1, t + 1)]
    ring = SuperPolyRing(gens, field)
    images = {f"w{i}": ring.zero() for i in range(1, t + 1)}
    images.update({f"u{i}": ring.gen(f"w{i}") for i in range(1, t + 1)})
    x = SuperDerivation(ring, images)
    groups = _slice_by_odd_count(ring, degree)
    order = sorted(groups.keys(), reverse=True)
    if not order:
        order = [0]
    k = _complex_from_groups(ring, x, groups, order)
    k.ring = ring
    k.derivation = x
    k.odd_counts = order
    return k


def _truncated_monomials(s, p, q_exact=None):
    """Monomials y^k dy_J with every k_i < p, optionally with |J| fixed."""
    out = []

    def rec_k(i, k):
        if i == s:
            subsets = _subsets(s)
            for J in subsets:
                if q_exact is not None and len(J) != q_exact:
                    continue
                out.append((tuple(k), J))
            return
        for e in range(p):
            k.append(e)
            rec_k(i + 1, k)
            k.pop()

    rec_k(0, [])
    return out


def _subsets(s):
    subsets = [()]
    for i in range(s):
        subsets = subsets + [tup + (i,) for tup in subsets]
    return sorted(subsets, key=lambda t: (len(t), t))


def de_rham_ring(s, field):
    gens = [(f"y{i}", 0) for i in range(1, s + 1)]
    gens += [(f"dy{i}", 1) for i in range(1, s + 1)]
    ring = SuperPolyRing(gens, field)
    images = {f"y{i}": ring.gen(f"dy{i}") for i in range(1, s + 1)}
    images.update({f"dy{i}": ring.zero() for i in range(1, s + 1)})
    return ring, SuperDerivation(ring, images)


def _form_monomial(ring, s, k, J):
    pairs = [(f"y{i + 1}", k[i]) for i in range(s) if k[i] > 0]
    pairs += [(f"dy{i + 1}", 1) for i in J]
    return ring.monomial(pairs)


def p_restricted_de_rham(s, p):
    """Truncated de Rham complex: y exponents below p, pieces by form degree.

    The total dimension is p^s 2^s. Cohomology classes are spanned by the
    divided power forms prod_{i in J} y_i^(p-1) dy_i, one per subset J, so
    the graded class dimensions are binomial(s, q).
    """
    if s < 1:
        raise BadParams("need at least one variable")
    field = PrimeField(p)
    ring, x = de_rham_ring(s, field)
    pieces = []
    for q in range(s + 1):
        monos = []
        for k, J in _truncated_monomials(s, p, q_exact=q):
            mono_poly = _form_monomial(ring, s, k, J)
            monos.append(next(iter(mono_poly.terms)))
        monos.sort()
        parity = [ring.mono_parity(m) for m in monos]
        pieces.append(SuperVectorSpace(tuple(monos), parity, field))
    diffs = []
    for q in range(s):
        src, dst = pieces[q], pieces[q + 1]
        matrix = [[field.zero] * src.dim for _ in range(dst.dim)]
        for c, mono in enumerate(src.labels):
            img = x.apply(SuperPolynomial(ring, {mono: field.one}))
            for m, coeff in img.terms.items():
                matrix[dst.index(m)][c] = coeff
        diffs.append(GradedLinearMap(src, dst, matrix, 1))
    k = FiniteComplex(pieces, diffs)
    k.ring = ring
    k.derivation = x
    k.p = p
    k.s = s
    return k


def divided_power_class(ring, s, J):
    """The form prod_{i in J} y_i^(p-1) dy_i with divided power coefficients."""
    p = ring.field.char
    pairs = [(f"y{i + 1}", p - 1) for i in J]
    pairs += [(f"dy{i + 1}", 1) for i in J]
    return divided_power_monomial(ring, pairs)


def expected_de_rham_dims(s):
    return [comb(s, q) for q in range(s + 1)]


def r_prime_subcomplex(s, p):
    """The complement subcomplex spanned by non-class monomials.

    A monomial y^k dy_J is excluded exactly when k_i = p-1 for i in J and
    k_i = 0 otherwise. The span of the rest is closed under the
    differential and has no cohomology at all.
    """
    field = PrimeField(p)
    ring, x = de_rham_ring(s, field)
    pieces = []
    kept = []
    for q in range(s + 1):
        monos = []
        for k, J in _truncated_monomials(s, p, q_exact=q):
            exact = all(
                (k[i] == p - 1 if i in J else k[i] == 0) for i in range(s)
            )
            if exact:
                continue
            mono_poly = _form_monomial(ring, s, k, J)
            monos.append(next(iter(mono_poly.terms)))
        monos.sort()
        kept.append(set(monos))
        parity = [ring.mono_parity(m) for m in monos]
        pieces.append(SuperVectorSpace(tuple(monos), parity, field))
    diffs = []
    for q in range(s):
        src, dst = pieces[q], pieces[q + 1]
        matrix = [[field.zero] * src.dim for _ in range(dst.dim)]
        for c, mono in enumerate(src.labels):
            img = x.apply(SuperPolynomial(ring, {mono: field.one}))
            for m, coeff in img.terms.items():
                if m not in kept[q + 1]:
                    raise NotAComplex("claimed subcomplex is not closed")
                matrix[dst.index(m)][c] = coeff
        diffs.append(GradedLinearMap(src, dst, matrix, 1))
    k = FiniteComplex(pieces, diffs)
    k.ring = ring
    k.derivation = x
    return k


@dataclass
class CartierMap:
    """The twist-by-p map on untruncated forms.

    A basis form y^k dy_J goes to y^(pk) prod_{i in J} y_i^(p-1) dy_J with
    divided power normalization, which contributes (-1)^|J| on the plain
    monomial basis by Wilson's theorem.
    """

    s: int
    p: int
    ring: SuperPolyRing
    derivation: SuperDerivation

    def image_of(self, k, J):
        s, p = self.s, self.p
        if len(k) != s:
            raise BadParams("exponent vector has the wrong length")
        pairs = [(f"y{i + 1}", p * k[i] + (p - 1 if i in J else 0)) for i in range(s)]
        pairs = [pr for pr in pairs if pr[1] > 0]
        pairs += [(f"dy{i + 1}", 1) for i in J]
        sign_pow = len(J) % 2
        poly = self.ring.monomial(pairs)
        return -poly if sign_pow else poly

    def source_forms(self, max_degree):
        """All (k, J) with |k| + |J| at most the given degree."""
        out = []

        def rec(i, remaining, acc):
            if i == self.s:
                for J in _subsets(self.s):
                    if len(J) <= remaining:
                        out.append((tuple(acc), J))
                return
            for e in range(remaining + 1):
                acc.append(e)
                rec(i + 1, remaining - e, acc)
                acc.pop()

        rec(0, max_degree, [])
        return out


def cartier_map(s, p):
    field = PrimeField(p)
    ring, x = de_rham_ring(s, field)
    return CartierMap(s=s, p=p, ring=ring, derivation=x)


def _series_mul(a, b, cutoff):
    out = [0] * (cutoff + 1)
    for i, x in enumerate(a):
        if x == 0 or i > cutoff:
            continue
        for j, y in enumerate(b):
            if i + j > cutoff:
                break
            out[i + j] += x * y
    return out


def _geometric(step, cutoff):
    out = [0] * (cutoff + 1)
    for i in range(0, cutoff + 1, step):
        out[i] = 1
    return out


def sym_ds_graded_dims(space, x, cutoff, rational_mode=False):
    """Graded class dimensions of Sym(V) against the product formula.

    Returns (lhs, rhs): lhs[d] is dim slice_d - 2 rank(x on slice_d)
    computed from the symmetric algebra, rhs[d] is the coefficient of the
    factored generating function. In rational mode the computation runs
    over a prime larger than the cutoff and the predicted side keeps only
    the classes-of-V factor.
    """
    from .superpoly import degree_slice_matrix

    field = space.field
    p = field.char
    if not rational_mode and cutoff < p:
        raise CutoffTooSmall(f"cutoff {cutoff} is below the characteristic {p}")
    rank, kernel, image = rank_kernel_image(x.action)
    q = quotient_with_section(kernel, image)
    vx_even = sum(1 for par in q.space.parity if par == 0)
    vx_odd = sum(1 for par in q.space.parity if par == 1)
    u_even = space.dim_even - sum(1 for par in kernel.basis_parities() if par == 0)

    work_field = field
    if rational_mode:
        candidate = cutoff + 1
        while True:
            try:
                work_field = PrimeField(candidate)
                break
            except BadParams:
                candidate += 1
        if work_field.p <= cutoff:
            raise CutoffTooSmall("failed to pick a prime above the cutoff")

    gens = [(lab, par) for lab, par in zip(space.labels, space.parity)]
    ring = SuperPolyRing(gens, work_field)
    images = {}
    for c, lab in enumerate(space.labels):
        col = [row[c] for row in x.action.matrix]
        total = ring.zero()
        for r, coeff in enumerate(col):
            if not field.is_zero(coeff):
                total = total + ring.gen(space.labels[r]).scale(
                    work_field.of_int(field.to_int(coeff))
                )
        images[lab] = total
    deriv = SuperDerivation(ring, images)

    lhs = []
    for d in range(cutoff + 1):
        comp, mat = degree_slice_matrix(deriv, d)
        r, _, _ = rank_kernel_image(mat)
        lhs.append(len(comp.monomials) - 2 * r)

    series = [1] + [0] * cutoff
    for _ in range(vx_even):
        series = _series_mul(series, _geometric(1, cutoff), cutoff)
    for _ in range(vx_odd):
        series = _series_mul(series, [1, 1] + [0] * (cutoff - 1), cutoff)
    if not rational_mode:
        for _ in range(u_even):
            series = _series_mul(series, _geometric(p, cutoff), cutoff)
            bump = [0] * (cutoff + 1)
            bump[0] = 1
            if p <= cutoff:
                bump[p] = 1
            series = _series_mul(series, bump, cutoff)
    return lhs, series
