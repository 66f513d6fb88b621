"""Matrix supergroup catalogs: Lie data, coordinate bialgebras, adapted splits.

The general linear catalog uses the basis e_kl that corresponds to the
matrix unit E_kl twisted by (-1)^((|k|+|l>)|k|); with this normalization
the pairing against coordinate generators is e_kl(t_uv) = delta_ku
delta_lv and the conjugation action on generators takes the closed form

    x . t_kl = delta_ik t_jl - (-1)^(|t_ki|) delta_jl t_ki    (x = e_ij odd).

The queer catalog realizes its basis inside 2n x 2n matrices, with even
part e_kl dual to s_kl and odd part e'_kl dual to s'_kl.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import (
    BadIndices,
    BadParams,
    BadShape,
    LieAlgebraMismatch,
    NotOdd,
    NotSquareZero,
)
from ..linalg import (
    Subspace,
    SuperVectorSpace,
    quotient_with_section,
    rank_kernel_image,
)
from ..dsfunctor import SquareZeroOddOperator
from ..reduction import AdaptedReduction
from ..superpoly import BialgebraPresentation, SuperDerivation, SuperPolyRing


class LieSuperAlgebra:
    """A finite dimensional Lie superalgebra with explicit brackets.

    brackets[(a, b)] maps pairs of basis labels to {label: coefficient}
    dictionaries over the prime field. Missing pairs mean zero.
    """

    def __init__(self, labels, parity, field, brackets, meta=None):
        self.space = SuperVectorSpace(labels, parity, field)
        self.field = field
        self.brackets = brackets
        self.meta = dict(meta or {})

    @property
    def labels(self):
        return self.space.labels

    @property
    def parity(self):
        return self.space.parity

    def bracket_basis(self, a, b):
        return self.brackets.get((a, b), {})

    def bracket_vectors(self, v, w):
        """Bracket of two coordinate vectors."""
        field = self.field
        out = [field.zero] * self.space.dim
        for ia, ca in enumerate(v):
            if field.is_zero(ca):
                continue
            for ib, cb in enumerate(w):
                if field.is_zero(cb):
                    continue
                table = self.bracket_basis(self.labels[ia], self.labels[ib])
                c = field.mul(ca, cb)
                for lab, coeff in table.items():
                    k = self.space.index(lab)
                    out[k] = field.add(out[k], field.mul(c, coeff))
        return out


def _gl_parity(k, m):
    return 0 if k <= m else 1


def _gl_twist(k, l, m):
    return -1 if ((_gl_parity(k, m) + _gl_parity(l, m)) * _gl_parity(k, m)) % 2 else 1


def gl_lie(m, n, field):
    """The general linear Lie superalgebra on m even and n odd labels."""
    if m < 0 or n < 0 or m + n < 1:
        raise BadParams("need at least one basis direction")
    N = m + n
    labels = [f"e_{k}_{l}" for k in range(1, N + 1) for l in range(1, N + 1)]
    parity = [
        (_gl_parity(k, m) + _gl_parity(l, m)) % 2
        for k in range(1, N + 1)
        for l in range(1, N + 1)
    ]
    brackets = {}
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            for c in range(1, N + 1):
                for d in range(1, N + 1):
                    table = {}
                    p_ab = (_gl_parity(a, m) + _gl_parity(b, m)) % 2
                    p_cd = (_gl_parity(c, m) + _gl_parity(d, m)) % 2
                    front = _gl_twist(a, b, m) * _gl_twist(c, d, m)
                    if b == c:
                        coeff = front * _gl_twist(a, d, m)
                        table[f"e_{a}_{d}"] = field.of_int(coeff)
                    if d == a:
                        coeff = -front * _gl_twist(c, b, m)
                        if p_ab * p_cd:
                            coeff = -coeff
                        lab = f"e_{c}_{b}"
                        prev = table.get(lab, field.zero)
                        table[lab] = field.add(prev, field.of_int(coeff))
                    table = {k: v for k, v in table.items() if not field.is_zero(v)}
                    if table:
                        brackets[(f"e_{a}_{b}", f"e_{c}_{d}")] = table
    return LieSuperAlgebra(
        labels, parity, field, brackets, meta={"kind": "gl", "m": m, "n": n}
    )


def q_lie(n, field):
    """The queer Lie superalgebra realized inside 2n x 2n matrices."""
    if n < 1:
        raise BadParams("need n >= 1")
    labels = [f"e_{k}_{l}" for k in range(1, n + 1) for l in range(1, n + 1)]
    labels += [f"ep_{k}_{l}" for k in range(1, n + 1) for l in range(1, n + 1)]
    parity = [0] * (n * n) + [1] * (n * n)

    def matrix_of(lab):
        kind, k, l = _parse_label(lab)
        k, l = int(k), int(l)
        out = {}
        if kind == "e":
            out[(k, l)] = 1
            out[(k + n, l + n)] = 1
        else:
            out[(k + n, l)] = 1
            out[(k, l + n)] = 1
        return out

    def decompose(mat):
        """Write a 2n x 2n matrix back in the q basis."""
        out = {}
        for (r, c), v in mat.items():
            if v % field.p == 0:
                continue
            if r <= n and c <= n:
                out[f"e_{r}_{c}"] = out.get(f"e_{r}_{c}", 0) + v
            elif r > n and c > n:
                pass
            elif r > n and c <= n:
                out[f"ep_{r - n}_{c}"] = out.get(f"ep_{r - n}_{c}", 0) + v
            else:
                pass
        return {k: field.of_int(v) for k, v in out.items() if v % field.p}

    brackets = {}
    for la in labels:
        for lb in labels:
            pa = parity[labels.index(la)]
            pb = parity[labels.index(lb)]
            A = matrix_of(la)
            B = matrix_of(lb)
            prod1 = _sparse_mul(A, B)
            prod2 = _sparse_mul(B, A)
            sign = -1 if (pa and pb) else 1
            comm = dict(prod1)
            for key, v in prod2.items():
                comm[key] = comm.get(key, 0) - sign * v
            table = decompose(comm)
            if table:
                brackets[(la, lb)] = table
    return LieSuperAlgebra(labels, parity, field, brackets, meta={"kind": "q", "n": n})


def _sparse_mul(a, b):
    out = {}
    by_row = {}
    for (r, c), v in b.items():
        by_row.setdefault(r, []).append((c, v))
    for (r, c), v in a.items():
        for c2, v2 in by_row.get(c, []):
            out[(r, c2)] = out.get((r, c2), 0) + v * v2
    return out


def _parse_label(lab):
    parts = lab.split("_")
    return parts[0], parts[1], parts[2]


class OddSquareZero:
    """An odd element of a catalog Lie superalgebra with [x, x] = 0."""

    def __init__(self, algebra, coefficients):
        self.algebra = algebra
        field = algebra.field
        vec = [field.zero] * algebra.space.dim
        for lab, c in coefficients.items():
            idx = algebra.space.index(lab)
            if algebra.parity[idx] != 1 and not field.is_zero(c):
                raise NotOdd(f"component {lab!r} is even")
            vec[idx] = field.of_int(c) if isinstance(c, int) else c
        self.vector = vec
        self.coefficients = {
            lab: vec[algebra.space.index(lab)]
            for lab in algebra.labels
            if not field.is_zero(vec[algebra.space.index(lab)])
        }
        sq = algebra.bracket_vectors(vec, vec)
        if any(not field.is_zero(c) for c in sq):
            raise NotSquareZero("[x, x] is nonzero")

    def pairing(self, coordinate_label):
        """Value of the tangent functional on a coordinate generator."""
        algebra = self.algebra
        field = algebra.field
        kind = algebra.meta.get("kind")
        if kind == "gl":
            _, k, l = _parse_label(coordinate_label)
            lab = f"e_{k}_{l}"
        elif kind == "q":
            head, k, l = _parse_label(coordinate_label)
            lab = ("e" if head == "s" else "ep") + f"_{k}_{l}"
        else:
            raise LieAlgebraMismatch("unknown catalog kind")
        if lab not in algebra.space._index:
            return field.zero
        return self.vector[algebra.space.index(lab)]


def gl_rank_one_element(algebra, i, j):
    m, n = algebra.meta["m"], algebra.meta["n"]
    if not (1 <= i <= m < j <= m + n):
        raise BadIndices(f"need 1 <= i <= {m} < j <= {m + n}")
    return OddSquareZero(algebra, {f"e_{i}_{j}": 1})


def gl_maxrank_element(algebra):
    m, n = algebra.meta["m"], algebra.meta["n"]
    if m != n:
        raise BadIndices("maximal rank element needs equal even and odd sizes")
    return OddSquareZero(algebra, {f"e_{k}_{n + k}": 1 for k in range(1, n + 1)})


def q_odd_element(algebra, i, j):
    n = algebra.meta["n"]
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise BadIndices("need distinct i, j in range")
    return OddSquareZero(algebra, {f"ep_{i}_{j}": 1})


def det_commuting(ring, entries):
    """Determinant of a square matrix of commuting even polynomials."""
    size = len(entries)
    total = ring.zero()
    for perm in itertools.permutations(range(size)):
        sign = _perm_sign(perm)
        prod = ring.one()
        for r in range(size):
            prod = prod * entries[r][perm[r]]
        total = total + (prod if sign > 0 else -prod)
    return total


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def gl_bialgebra(m, n, field):
    """Coordinate bialgebra of the general linear supergroup.

    Generators t_k_l with parity |k| + |l|, matrix coproduct and counit.
    The determinant product of the two even diagonal blocks is stored as
    the localization denominator; it is designated group-like only in the
    purely even or purely odd case, where that property actually holds.
    """
    N = m + n
    if N < 1:
        raise BadParams("need at least one index")
    gens = [
        (f"t_{k}_{l}", (_gl_parity(k, m) + _gl_parity(l, m)) % 2)
        for k in range(1, N + 1)
        for l in range(1, N + 1)
    ]
    ring = SuperPolyRing(gens, field)
    from ..superpoly import tensor_square

    tsq = tensor_square(ring)
    coproduct = {}
    for k in range(1, N + 1):
        for l in range(1, N + 1):
            total = tsq.ring.zero()
            for s in range(1, N + 1):
                total = total + tsq.pure(ring.gen(f"t_{k}_{s}"), ring.gen(f"t_{s}_{l}"))
            coproduct[f"t_{k}_{l}"] = total
    counit = {
        f"t_{k}_{l}": field.one if k == l else field.zero
        for k in range(1, N + 1)
        for l in range(1, N + 1)
    }
    block_a = [[ring.gen(f"t_{k}_{l}") for l in range(1, m + 1)] for k in range(1, m + 1)]
    block_d = [
        [ring.gen(f"t_{k}_{l}") for l in range(m + 1, N + 1)]
        for k in range(m + 1, N + 1)
    ]
    det_a = det_commuting(ring, block_a) if m else ring.one()
    det_d = det_commuting(ring, block_d) if n else ring.one()
    denominator = det_a * det_d
    group_likes = [denominator] if (m == 0 or n == 0) else []
    return BialgebraPresentation(
        ring,
        coproduct,
        counit,
        group_likes=group_likes,
        denominator=denominator,
        meta={"kind": "gl", "m": m, "n": n},
    )


def q_bialgebra(n, field):
    """Coordinate bialgebra of the queer supergroup.

    Generators s_k_l (even) and sp_k_l (odd); the coproduct mixes the two
    families with a sign on the odd-odd part of the even generators.
    """
    if n < 1:
        raise BadParams("need n >= 1")
    gens = [(f"s_{k}_{l}", 0) for k in range(1, n + 1) for l in range(1, n + 1)]
    gens += [(f"sp_{k}_{l}", 1) for k in range(1, n + 1) for l in range(1, n + 1)]
    ring = SuperPolyRing(gens, field)
    from ..superpoly import tensor_square

    tsq = tensor_square(ring)
    coproduct = {}
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            even_total = tsq.ring.zero()
            odd_total = tsq.ring.zero()
            for t in range(1, n + 1):
                even_total = even_total + tsq.pure(
                    ring.gen(f"s_{k}_{t}"), ring.gen(f"s_{t}_{l}")
                )
                even_total = even_total - tsq.pure(
                    ring.gen(f"sp_{k}_{t}"), ring.gen(f"sp_{t}_{l}")
                )
                odd_total = odd_total + tsq.pure(
                    ring.gen(f"sp_{k}_{t}"), ring.gen(f"s_{t}_{l}")
                )
                odd_total = odd_total + tsq.pure(
                    ring.gen(f"s_{k}_{t}"), ring.gen(f"sp_{t}_{l}")
                )
            coproduct[f"s_{k}_{l}"] = even_total
            coproduct[f"sp_{k}_{l}"] = odd_total
    counit = {}
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            counit[f"s_{k}_{l}"] = field.one if k == l else field.zero
            counit[f"sp_{k}_{l}"] = field.zero
    entries = [[ring.gen(f"s_{k}_{l}") for l in range(1, n + 1)] for k in range(1, n + 1)]
    denominator = det_commuting(ring, entries)
    return BialgebraPresentation(
        ring,
        coproduct,
        counit,
        denominator=denominator,
        meta={"kind": "q", "n": n},
    )


def conjugation_derivation(presentation, x):
    """The odd derivation f -> sum x(f_1) f_2 - (-1)^(|f_1|) f_1 x(f_2).

    The functional x kills constants and evaluates degree one legs through
    the catalog pairing; on longer legs it acts as a tangent vector, one
    factor at a time with counit values elsewhere.
    """
    _check_catalog_match(presentation, x)
    ring = presentation.ring
    field = ring.field
    tsq = presentation.tsq

    def functional(mono):
        total = field.zero
        for idx, (g, e) in enumerate(mono):
            rest = field.one
            for idx2, (g2, e2) in enumerate(mono):
                exp = e2 if idx2 != idx else e2 - 1
                lab2 = ring.labels[g2]
                eps = presentation.counit[lab2]
                for _ in range(exp):
                    rest = field.mul(rest, eps)
            val = x.pairing(ring.labels[g])
            count = field.of_int(e)
            total = field.add(total, field.mul(field.mul(val, count), rest))
        return total

    images = {}
    for lab in ring.labels:
        d = presentation.coproduct[lab]
        total = ring.zero()
        from ..superpoly import SuperPolynomial

        for mono, coeff in d.terms.items():
            left, right = tsq.legs_of_mono(mono)
            left_poly = SuperPolynomial(ring, {left: field.one})
            right_poly = SuperPolynomial(ring, {right: field.one})
            xa = functional(left)
            if not field.is_zero(xa):
                total = total + right_poly.scale(field.mul(coeff, xa))
            xb = functional(right)
            if not field.is_zero(xb):
                c = field.mul(coeff, xb)
                if ring.mono_parity(left) == 0:
                    c = field.neg(c)
                total = total + left_poly.scale(c)
        images[lab] = total
    deriv = SuperDerivation(ring, images)
    if not deriv.is_square_zero_on_generators():
        raise NotSquareZero("conjugation derivation does not square to zero")
    return deriv


def _check_catalog_match(presentation, x):
    pk = presentation.meta.get("kind")
    ak = x.algebra.meta.get("kind")
    if pk != ak:
        raise LieAlgebraMismatch(f"presentation kind {pk!r} vs element kind {ak!r}")
    if pk == "gl":
        same = (
            presentation.meta.get("m") == x.algebra.meta.get("m")
            and presentation.meta.get("n") == x.algebra.meta.get("n")
        )
    else:
        same = presentation.meta.get("n") == x.algebra.meta.get("n")
    if not same:
        raise LieAlgebraMismatch("presentation and element sizes disagree")


@dataclass
class SplitData:
    """Splitting of the generator space under the conjugation action."""

    operator: SquareZeroOddOperator
    free_labels: tuple
    even_leader_labels: tuple
    odd_leader_labels: tuple
    kernel: object
    image: object
    classes_dim: int


def split_generator_space(presentation, x):
    """Compute the kernel/image split of the degree one generator slice."""
    deriv = conjugation_derivation(presentation, x)
    return split_from_derivation(presentation, deriv)


def split_from_derivation(presentation, deriv):
    ring = presentation.ring
    field = ring.field
    space = SuperVectorSpace(ring.labels, ring.parity, field)
    matrix = [[field.zero] * space.dim for _ in range(space.dim)]
    for c, lab in enumerate(ring.labels):
        img = deriv.images[lab]
        for mono, coeff in img.terms.items():
            if len(mono) != 1 or mono[0][1] != 1:
                raise BadShape("conjugation image is not linear in the generators")
            matrix[mono[0][0]][c] = coeff
    op = SquareZeroOddOperator(space, matrix)
    rank, kernel, image = rank_kernel_image(op.action)
    q = quotient_with_section(kernel, image)
    leaders_even = []
    leaders_odd = []
    span = kernel
    for c, lab in enumerate(ring.labels):
        v = space.basis_vector(lab)
        if span.contains(v):
            continue
        span = Subspace(space, list(span.rows) + [v])
        if space.parity[c] == 0:
            leaders_even.append(lab)
        else:
            leaders_odd.append(lab)
    free = [lab for c, lab in enumerate(ring.labels)
            if kernel.contains(space.basis_vector(lab)) and not image.contains(space.basis_vector(lab))]
    return SplitData(
        operator=op,
        free_labels=tuple(free),
        even_leader_labels=tuple(leaders_even),
        odd_leader_labels=tuple(leaders_odd),
        kernel=kernel,
        image=image,
        classes_dim=q.space.dim,
    )


def centralizer_ideal_generators(presentation, x):
    """Echelon basis of the span of all conjugation images of generators."""
    deriv = conjugation_derivation(presentation, x)
    ring = presentation.ring
    field = ring.field
    space = SuperVectorSpace(ring.labels, ring.parity, field)
    vectors = []
    for lab in ring.labels:
        img = deriv.images[lab]
        if img.is_zero():
            continue
        v = space.zero_vector()
        for mono, coeff in img.terms.items():
            v[mono[0][0]] = coeff
        vectors.append(v)
    sub = Subspace(space, vectors)
    polys = []
    for row in sub.rows:
        total = ring.zero()
        for c, coeff in enumerate(row):
            if not field.is_zero(coeff):
                total = total + ring.gen(ring.labels[c]).scale(coeff)
        polys.append(total)
    return sub, polys


def gl_rank_one_adapted(presentation, x, i, j):
    """Adapted reduction data for a rank one odd element of the gl catalog."""
    m, n = presentation.meta["m"], presentation.meta["n"]
    N = m + n
    if not (1 <= i <= m < j <= N):
        raise BadIndices(f"need 1 <= i <= {m} < j <= {N}")
    ring = presentation.ring
    field = ring.field
    deriv = conjugation_derivation(presentation, x)
    gens = []
    for k in range(1, N + 1):
        for l in range(1, N + 1):
            if k == j and l == j:
                gens.append(("w", 0))
            else:
                gens.append((f"t_{k}_{l}", ring.parity[ring.index[f"t_{k}_{l}"]]))
    adapted = SuperPolyRing(gens, field)
    to_images = {}
    for lab in ring.labels:
        if lab == f"t_{j}_{j}":
            to_images[lab] = adapted.gen(f"t_{i}_{i}") - adapted.gen("w")
        else:
            to_images[lab] = adapted.gen(lab)
    from_images = {}
    for lab, _ in gens:
        if lab == "w":
            from_images[lab] = ring.gen(f"t_{i}_{i}") - ring.gen(f"t_{j}_{j}")
        else:
            from_images[lab] = ring.gen(lab)
    free = [
        f"t_{k}_{l}"
        for k in range(1, N + 1)
        for l in range(1, N + 1)
        if k not in (i, j) and l not in (i, j)
    ]
    even_leaders = [f"t_{i}_{l}" for l in range(1, m + 1)]
    even_leaders += [f"t_{k}_{j}" for k in range(m + 1, N + 1) if k != j]
    odd_leaders = [f"t_{i}_{l}" for l in range(m + 1, N + 1)]
    odd_leaders += [f"t_{k}_{j}" for k in range(1, m + 1) if k != i]
    return AdaptedReduction(
        ring, deriv, adapted, to_images, from_images, free, even_leaders, odd_leaders
    )


def gl_maxrank_adapted(presentation, x):
    """Adapted reduction data for the maximal rank odd element on gl(n|n)."""
    m, n = presentation.meta["m"], presentation.meta["n"]
    if m != n:
        raise BadIndices("maximal rank element needs m = n")
    ring = presentation.ring
    field = ring.field
    deriv = conjugation_derivation(presentation, x)
    gens = []
    for k in range(1, 2 * n + 1):
        for l in range(1, 2 * n + 1):
            if k > n and l > n:
                gens.append((f"w_{k - n}_{l - n}", 0))
            else:
                gens.append((f"t_{k}_{l}", ring.parity[ring.index[f"t_{k}_{l}"]]))
    adapted = SuperPolyRing(gens, field)
    to_images = {}
    for lab in ring.labels:
        _, k, l = _parse_label(lab)
        k, l = int(k), int(l)
        if k > n and l > n:
            to_images[lab] = adapted.gen(f"t_{k - n}_{l - n}") - adapted.gen(
                f"w_{k - n}_{l - n}"
            )
        else:
            to_images[lab] = adapted.gen(lab)
    from_images = {}
    for lab, _ in gens:
        head, k, l = _parse_label(lab)
        k, l = int(k), int(l)
        if head == "w":
            from_images[lab] = ring.gen(f"t_{k}_{l}") - ring.gen(f"t_{k + n}_{l + n}")
        else:
            from_images[lab] = ring.gen(lab)
    free = []
    even_leaders = [f"t_{k}_{l}" for k in range(1, n + 1) for l in range(1, n + 1)]
    odd_leaders = [f"t_{k}_{l + n}" for k in range(1, n + 1) for l in range(1, n + 1)]
    return AdaptedReduction(
        ring, deriv, adapted, to_images, from_images, free, even_leaders, odd_leaders
    )


def q_adapted(presentation, x, i, j):
    """Adapted reduction data for the queer catalog at x = e'_ij."""
    n = presentation.meta["n"]
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise BadIndices("need distinct i, j in range")
    ring = presentation.ring
    field = ring.field
    deriv = conjugation_derivation(presentation, x)
    gens = []
    for lab, par in zip(ring.labels, ring.parity):
        head, k, l = _parse_label(lab)
        k, l = int(k), int(l)
        if (k, l) == (j, j):
            gens.append(("we" if head == "s" else "wo", par))
        else:
            gens.append((lab, par))
    adapted = SuperPolyRing(gens, field)
    to_images = {}
    for lab in ring.labels:
        head, k, l = _parse_label(lab)
        k, l = int(k), int(l)
        if (k, l) == (j, j):
            if head == "s":
                to_images[lab] = adapted.gen(f"s_{i}_{i}") + adapted.gen("we")
            else:
                to_images[lab] = adapted.gen("wo") - adapted.gen(f"sp_{i}_{i}")
        else:
            to_images[lab] = adapted.gen(lab)
    from_images = {}
    for lab, _ in gens:
        if lab == "we":
            from_images[lab] = ring.gen(f"s_{j}_{j}") - ring.gen(f"s_{i}_{i}")
        elif lab == "wo":
            from_images[lab] = ring.gen(f"sp_{j}_{j}") + ring.gen(f"sp_{i}_{i}")
        else:
            from_images[lab] = ring.gen(lab)
    free = []
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            if k not in (i, j) and l not in (i, j):
                free.append(f"s_{k}_{l}")
                free.append(f"sp_{k}_{l}")
    even_leaders = [f"s_{i}_{l}" for l in range(1, n + 1)]
    even_leaders += [f"s_{k}_{j}" for k in range(1, n + 1) if k not in (i, j)]
    odd_leaders = [f"sp_{i}_{l}" for l in range(1, n + 1)]
    odd_leaders += [f"sp_{k}_{j}" for k in range(1, n + 1) if k not in (i, j)]
    return AdaptedReduction(
        ring, deriv, adapted, to_images, from_images, free, even_leaders, odd_leaders
    )


@dataclass
class LieQuotient:
    """Centralizer modulo bracket image, with its induced bracket."""

    cent_dim: int
    bracket_image_dim: int
    space: SuperVectorSpace
    representatives: list
    quotient: object
    algebra: LieSuperAlgebra

    def project_label(self, label):
        """Class coordinates of a basis element of the ambient algebra."""
        v = self.algebra.space.basis_vector(label)
        return self.quotient.project(v)

    def bracket_in_quotient(self, va, vb):
        """Bracket of two class vectors through chosen representatives."""
        field = self.algebra.field
        amb_a = self._lift(va)
        amb_b = self._lift(vb)
        return self.quotient.project(self.algebra.bracket_vectors(amb_a, amb_b))

    def _lift(self, coords):
        field = self.algebra.field
        out = [field.zero] * self.algebra.space.dim
        for c, rep in zip(coords, self.representatives):
            if field.is_zero(c):
                continue
            for k, val in enumerate(rep):
                out[k] = field.add(out[k], field.mul(c, val))
        return out


def lie_centralizer_and_bracket(algebra, x):
    """Split the adjoint action of x and install the quotient bracket.

    Returns centralizer dimension, bracket image dimension, and the
    quotient with section representatives via the map a -> [a, x].
    """
    field = algebra.field
    dim = algebra.space.dim
    matrix = [[field.zero] * dim for _ in range(dim)]
    for c, lab in enumerate(algebra.labels):
        img = algebra.bracket_vectors(algebra.space.basis_vector(lab), x.vector)
        for r, coeff in enumerate(img):
            matrix[r][c] = coeff
    op = SquareZeroOddOperator(algebra.space, matrix)
    rank, kernel, image = rank_kernel_image(op.action)
    q = quotient_with_section(kernel, image)
    return LieQuotient(
        cent_dim=kernel.dim,
        bracket_image_dim=image.dim,
        space=q.space,
        representatives=[list(r) for r in q.representatives],
        quotient=q,
        algebra=algebra,
    )
