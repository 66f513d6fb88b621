"""Supermodules over an exterior algebra on odd primitives.

A purely odd unipotent supergroup has coordinate algebra an exterior
algebra, and its distribution algebra is the exterior algebra on r odd
elements z_1, ..., z_r. A supermodule is therefore a super vector space
with r pairwise anticommuting square-zero odd operators. For such modules
injective, projective and free all mean the same thing, and freeness of a
finite dimensional module is detected by the kernel-mod-image functor at
odd points over field extensions.

This module decides freeness by splitting off the maximal free summand,
evaluates the functor at points with coefficients in an extension field,
and searches for a detecting point by the recursive eigenvalue
construction. Every witness the search returns is re-certified by an
independent kernel-mod-image computation before it is reported.
"""

from __future__ import annotations

import math
from collections import namedtuple
from dataclasses import dataclass

from . import dsfunctor
from .dsfunctor import SquareZeroOddOperator
from .errors import (
    AxiomsViolated,
    BadParams,
    BadShape,
    NotASubspace,
    NotOdd,
    NotSquareZero,
    SuperDSError,
)
from .fields import PrimeField, embedding, eigenvalue_over_extension
from .linalg import (
    GradedLinearMap,
    Subspace,
    SuperVectorSpace,
    rank_kernel_image,
    rref,
    solve_linear,
)
from .superpoly import SuperPolyRing, multiply

__all__ = [
    "OddModule",
    "FreeDecomposition",
    "GradedDims",
    "Witness",
    "WitnessSearch",
    "FREE",
    "WITNESS",
    "INCONCLUSIVE",
    "free_decompose",
    "is_injective",
    "ds_at",
    "find_witness",
    "truncated_counterexample",
    "free_module",
    "trivial_module",
    "direct_sum",
    "random_module",
]

FREE = "free"
WITNESS = "witness"
INCONCLUSIVE = "inconclusive"

GradedDims = namedtuple("GradedDims", "even odd")


class OddModule:
    """A super vector space with pairwise anticommuting square-zero odd actions.

    Each action may be given as a SquareZeroOddOperator or as a raw matrix.
    The constructor checks z_i z_j + z_j z_i = 0 for all pairs, squares
    included, and raises AxiomsViolated when the relations fail.
    """

    def __init__(self, space, actions):
        if not actions:
            raise BadParams("an odd module needs at least one action")
        ops = []
        for k, act in enumerate(actions):
            if isinstance(act, SquareZeroOddOperator):
                if act.space != space:
                    raise BadParams(f"action {k} lives on a different space")
                ops.append(act)
                continue
            try:
                ops.append(SquareZeroOddOperator(space, act))
            except (NotOdd, NotSquareZero, BadShape) as exc:
                raise AxiomsViolated(f"action {k}: {exc}") from exc
        for i in range(len(ops)):
            for j in range(i + 1, len(ops)):
                anti = ops[i].action.compose(ops[j].action).add(
                    ops[j].action.compose(ops[i].action)
                )
                if not anti.is_zero():
                    raise AxiomsViolated(
                        f"actions {i} and {j} do not anticommute"
                    )
        self.space = space
        self.operators = tuple(ops)

    @property
    def field(self):
        return self.space.field

    @property
    def dim(self):
        return self.space.dim

    @property
    def r(self):
        return len(self.operators)

    def operator_at(self, coefficients, field=None):
        """The operator sum(c_i z_i), over self.field or a named extension.

        Integer coefficients are reduced into the base field. The result is
        square-zero automatically, so the constructor check never fires for
        a valid module.
        """
        module, op = _operator_at(self, coefficients, field)
        return op

    def extend_field(self, big):
        """The same module with scalars extended along the canonical embedding."""
        if big == self.field:
            return self
        emb = embedding(self.field, big)
        space = SuperVectorSpace(self.space.labels, self.space.parity, big)
        mats = [
            [[emb(x) for x in row] for row in op.action.matrix]
            for op in self.operators
        ]
        return OddModule(space, mats)

    def submodule(self, subspace):
        """The induced module on a stable subspace, in its own coordinates."""
        if subspace.space != self.space:
            raise BadParams("subspace belongs to a different ambient space")
        parities = [par or 0 for par in subspace.basis_parities()]
        labels = [f"s{i}" for i in range(subspace.dim)]
        small = SuperVectorSpace(labels, parities, self.field)
        mats = []
        for op in self.operators:
            cols = []
            for row in subspace.rows:
                coords = subspace.coefficients(op.apply(row))
                if coords is None:
                    raise NotASubspace("subspace is not stable under the actions")
                cols.append(coords)
            mats.append([[cols[c][r] for c in range(len(cols))] for r in range(subspace.dim)])
        return OddModule(small, mats)

    def to_json(self):
        field = self.field
        return {
            "p": field.char,
            "parity": list(self.space.parity),
            "matrices": [
                [[field.to_int(x) for x in row] for row in op.action.matrix]
                for op in self.operators
            ],
        }

    @classmethod
    def from_json(cls, data):
        try:
            p = int(data["p"])
            parity = [int(x) for x in data["parity"]]
            matrices = data["matrices"]
        except (KeyError, TypeError, ValueError) as exc:
            raise BadParams(f"malformed module description: {exc}") from exc
        if not matrices:
            raise BadParams("module description lists no action matrices")
        field = PrimeField(p)
        labels = [f"m{i}" for i in range(len(parity))]
        space = SuperVectorSpace(labels, parity, field)
        mats = []
        for mat in matrices:
            mats.append([[field.of_int(int(x)) for x in row] for row in mat])
        return cls(space, mats)

    def __repr__(self):
        return f"OddModule({self.r} actions on {self.space!r})"


def _operator_at(module, coefficients, field=None):
    """Lift the module if needed and form sum(c_i z_i) as a single operator."""
    field = module.field if field is None else field
    if len(coefficients) != module.r:
        raise BadParams(
            f"expected {module.r} coefficients, got {len(coefficients)}"
        )
    coeffs = [
        field.of_int(c) if isinstance(c, int) else c for c in coefficients
    ]
    lifted = module if field == module.field else module.extend_field(field)
    total = GradedLinearMap.zero(lifted.space, lifted.space, 1)
    for c, op in zip(coeffs, lifted.operators):
        if not field.is_zero(c):
            total = total.add(op.action.scale(c))
    return lifted, SquareZeroOddOperator(lifted.space, total)


def _homogeneous_preimage(space, matrix, target, parity):
    """A preimage of target under the matrix, cut down to one parity block.

    The matrix is parity homogeneous, so the block of a solution lying in
    the stated parity is itself a solution whenever the target is
    homogeneous.
    """
    x = solve_linear(space.field, matrix, target)
    if x is None:
        raise SuperDSError("image vector lost its preimage")
    zero = space.field.zero
    return [
        x[c] if space.parity[c] == parity else zero for c in range(space.dim)
    ]


def _composite_map(module):
    comp = module.operators[0].action
    for op in module.operators[1:]:
        comp = comp.compose(op.action)
    return comp


def _equivariant_projector(module, free):
    """An even projector onto the free summand commuting with all actions.

    Existence is guaranteed because the free summand is injective over the
    exterior algebra, so the linear system below is always consistent.
    """
    space = module.space
    field = space.field
    n = space.dim
    parity = space.parity
    cols = [(a, b) for a in range(n) for b in range(n) if parity[a] == parity[b]]
    col_of = {pair: i for i, pair in enumerate(cols)}
    width = len(cols)
    rows = []
    rhs = []
    for op in module.operators:
        z = op.action.matrix
        for a in range(n):
            for b in range(n):
                if (parity[a] + parity[b]) % 2 == 0:
                    continue
                row = [field.zero] * width
                hit = False
                for c in range(n):
                    if parity[c] == parity[a] and not field.is_zero(z[c][b]):
                        i = col_of[(a, c)]
                        row[i] = field.add(row[i], z[c][b])
                        hit = True
                    if parity[c] == parity[b] and not field.is_zero(z[a][c]):
                        i = col_of[(c, b)]
                        row[i] = field.sub(row[i], z[a][c])
                        hit = True
                if hit:
                    rows.append(row)
                    rhs.append(field.zero)
    pivot_set = set(free.pivots)
    for b in range(n):
        for a in range(n):
            if parity[a] != parity[b] or a in pivot_set:
                continue
            row = [field.zero] * width
            row[col_of[(a, b)]] = field.one
            for frow, piv in zip(free.rows, free.pivots):
                if parity[piv] != parity[b]:
                    continue
                if not field.is_zero(frow[a]):
                    i = col_of[(piv, b)]
                    row[i] = field.sub(row[i], frow[a])
            rows.append(row)
            rhs.append(field.zero)
    for frow in free.rows:
        fpar = space.vector_parity(frow)
        if fpar is None:
            fpar = 0
        for a in range(n):
            if parity[a] != fpar:
                continue
            row = [field.zero] * width
            for b in range(n):
                if parity[b] == fpar and not field.is_zero(frow[b]):
                    row[col_of[(a, b)]] = frow[b]
            rows.append(row)
            rhs.append(frow[a])
    x = solve_linear(field, rows, rhs)
    if x is None:
        raise SuperDSError("projector system is inconsistent")
    matrix = [[field.zero] * n for _ in range(n)]
    for (a, b), i in col_of.items():
        matrix[a][b] = x[i]
    return GradedLinearMap(space, space, matrix, 0)


@dataclass
class FreeDecomposition:
    """A module split as a maximal free summand plus a stable complement.

    generators holds homogeneous module generators of the free summand,
    free and complement are the two stable subspaces, complement_module is
    the complement in its own coordinates, and projector is the even
    equivariant projection onto the free part that produced the split.
    """

    module: OddModule
    generators: list
    free: Subspace
    complement: Subspace
    complement_module: OddModule
    projector: GradedLinearMap

    def change_of_basis(self):
        """Columns are the free basis rows followed by the complement rows."""
        field = self.module.field
        n = self.module.dim
        combined = list(self.free.rows) + list(self.complement.rows)
        return [[combined[c][r] for c in range(n)] for r in range(n)]

    def matrices_in_split_basis(self):
        """Action matrices rewritten in the combined free-plus-complement basis."""
        field = self.module.field
        basis = self.change_of_basis()
        out = []
        for op in self.module.operators:
            cols = []
            for c in range(self.module.dim):
                image = op.apply([basis[r][c] for r in range(self.module.dim)])
                coords = solve_linear(field, basis, image)
                if coords is None:
                    raise SuperDSError("split basis does not span the module")
                cols.append(coords)
            out.append(
                [[cols[c][r] for c in range(len(cols))] for r in range(len(cols))]
            )
        return out


def free_decompose(module):
    """Split M = F + G with F maximal free and the composite killing G.

    The free generators are homogeneous preimages of an echelon basis of
    the image of z_1...z_r. The complement is the kernel of an even
    projector that commutes with every action, so it is a stable submodule
    containing no nonzero free piece.
    """
    space = module.space
    field = space.field
    comp = _composite_map(module)
    rank, _, image = rank_kernel_image(comp)
    generators = []
    for row in image.rows:
        tpar = space.vector_parity(row)
        if tpar is None:
            tpar = 0
        generators.append(
            _homogeneous_preimage(space, comp.matrix, row, (tpar + module.r) % 2)
        )
    vectors = []
    for gen in generators:
        for mask in range(1 << module.r):
            v = list(gen)
            for k in range(module.r - 1, -1, -1):
                if mask >> k & 1:
                    v = module.operators[k].apply(v)
            vectors.append(v)
    free = Subspace(space, vectors)
    if free.dim != (1 << module.r) * rank:
        raise SuperDSError("free summand collapsed, generators are dependent")
    projector = _equivariant_projector(module, free)
    _, kernel, _ = rank_kernel_image(projector)
    complement_module = module.submodule(kernel)
    comp_on_g = _composite_map(complement_module)
    if not comp_on_g.is_zero():
        raise SuperDSError("composite does not vanish on the complement")
    return FreeDecomposition(
        module=module,
        generators=generators,
        free=free,
        complement=kernel,
        complement_module=complement_module,
        projector=projector,
    )


def is_injective(module):
    """Whether the module is free, equivalently injective or projective."""
    return free_decompose(module).complement.dim == 0


def ds_at(module, coefficients, field=None):
    """Graded class dimensions of the module at the point sum(c_i z_i).

    The coefficients live in the base field or in a named extension of it,
    in which case the module is extended first.
    """
    _, op = _operator_at(module, coefficients, field)
    result = dsfunctor.ds(op)
    return GradedDims(result.cohomology.dim_even, result.cohomology.dim_odd)


@dataclass
class Witness:
    """A certified point where the class space of the module is nonzero."""

    field: object
    degree: int
    coefficients: tuple
    class_vector: list
    dims: GradedDims


@dataclass
class WitnessSearch:
    """Outcome of the witness search together with the extension cap used."""

    status: str
    witness: object
    extension_cap: int

    @property
    def found(self):
        return self.status == WITNESS


_NO_ANSWER = object()


def _search(module, cap):
    """None when the module is free, a witness triple otherwise.

    The triple is (field, coefficients, vector). _NO_ANSWER propagates when
    an eigenvalue would need an extension beyond the cap.
    """
    if module.dim == 0:
        return None
    field = module.field
    first = dsfunctor.ds(module.operators[0])
    if first.dim > 0:
        coeffs = tuple([field.one] + [field.zero] * (module.r - 1))
        return field, coeffs, list(first.section[0])
    if module.r == 1:
        return None
    _, _, image = rank_kernel_image(module.operators[0].action)
    inner = _search(
        OddModule(module.space, module.operators[1:]).submodule(image), cap
    )
    if inner is None or inner is _NO_ANSWER:
        return inner
    small, tail, _ = inner
    lifted = module.extend_field(small)
    zprime = GradedLinearMap.zero(lifted.space, lifted.space, 1)
    for c, op in zip(tail, lifted.operators[1:]):
        if not small.is_zero(c):
            zprime = zprime.add(op.action.scale(c))
    pair = OddModule(lifted.space, [lifted.operators[0], zprime])
    split = free_decompose(pair)
    part = split.complement_module
    if part.dim == 0:
        raise SuperDSError("detected module has no non-free part")
    z1 = part.operators[0]
    _, _, img = rank_kernel_image(z1.action)
    gens = []
    for row in img.rows:
        tpar = part.space.vector_parity(row)
        if tpar is None:
            tpar = 0
        gens.append(
            _homogeneous_preimage(part.space, z1.action.matrix, row, (tpar + 1) % 2)
        )
    relation = []
    for gen in gens:
        coords = img.coefficients(part.operators[1].apply(gen))
        if coords is None:
            raise SuperDSError("second action leaves the image of the first")
        relation.append(coords)
    size = len(gens)
    a = [[relation[i][j] for i in range(size)] for j in range(size)]
    eig = eigenvalue_over_extension(a, small)
    big = eig.field
    if big.degree > cap:
        return _NO_ANSWER
    emb = eig.embed
    g_small = [big.zero] * part.dim
    for alpha, gen in zip(eig.vector, gens):
        for c in range(part.dim):
            g_small[c] = big.add(g_small[c], big.mul(alpha, emb(gen[c])))
    vec = [big.zero] * module.dim
    for i, row in enumerate(split.complement.rows):
        for c in range(module.dim):
            vec[c] = big.add(vec[c], big.mul(g_small[i], emb(row[c])))
    coeffs = (eig.value,) + tuple(big.neg(emb(c)) for c in tail)
    return big, coeffs, vec


def find_witness(module, max_extension=None):
    """Search for a point where the class space is nonzero.

    Returns a WitnessSearch whose status is "free" when the module is free,
    "witness" when a certified point was found, and "inconclusive" when the
    eigenvalue chain would need a field extension beyond the cap. The cap
    defaults to the module dimension, which bounds every characteristic
    polynomial degree the search can meet.
    """
    cap = module.dim if max_extension is None else int(max_extension)
    answer = _search(module, cap)
    if answer is _NO_ANSWER:
        return WitnessSearch(INCONCLUSIVE, None, cap)
    if answer is None:
        return WitnessSearch(FREE, None, cap)
    field, coeffs, vec = answer
    lifted, op = _operator_at(module, coeffs, field)
    result = dsfunctor.ds(op)
    if result.dim == 0:
        raise SuperDSError("witness failed certification, classes are zero")
    try:
        coords = result.project(vec)
    except NotASubspace as exc:
        raise SuperDSError("witness class is not a cycle") from exc
    if all(field.is_zero(c) for c in coords):
        raise SuperDSError("witness class is a boundary")
    witness = Witness(
        field=field,
        degree=field.degree,
        coefficients=coeffs,
        class_vector=vec,
        dims=GradedDims(result.cohomology.dim_even, result.cohomology.dim_odd),
    )
    return WitnessSearch(WITNESS, witness, cap)


def truncated_counterexample(length, p=3):
    """The length-N truncation of the classical non-free module with all classes zero.

    Basis v_1..v_N even and w_1..w_N odd, z_1 v_i = w_i and
    z_2 v_i = w_i + w_{i+1} with w_{N+1} read as zero. The infinite version
    has vanishing classes at every point yet is not free; each finite
    truncation is detected by the witness search, which is the reason the
    genuine counterexample has to be infinite dimensional.
    """
    if length < 1:
        raise BadParams("truncation length must be at least 1")
    field = PrimeField(p)
    n = length
    labels = [f"v{i}" for i in range(1, n + 1)] + [f"w{i}" for i in range(1, n + 1)]
    parity = [0] * n + [1] * n
    space = SuperVectorSpace(labels, parity, field)
    z1 = [[field.zero] * (2 * n) for _ in range(2 * n)]
    z2 = [[field.zero] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        z1[n + i][i] = field.one
        z2[n + i][i] = field.one
        if i + 1 < n:
            z2[n + i + 1][i] = field.one
    return OddModule(space, [z1, z2])


def _grassmann_space(field, nvars, degree_cap, flip):
    subsets = []
    for mask in range(1 << nvars):
        bits = tuple(i for i in range(nvars) if mask >> i & 1)
        if len(bits) <= degree_cap:
            subsets.append(bits)
    subsets.sort(key=lambda s: (len(s), s))
    parity = [(len(s) + flip) % 2 for s in subsets]
    labels = [("e" + "".join(str(i) for i in s)) if s else "e" for s in subsets]
    space = SuperVectorSpace(labels, parity, field)
    return space, subsets


def _multiplication_matrix(ring, space, subsets, theta, degree_cap):
    """Left multiplication by an odd element on the truncated exterior basis."""
    field = ring.field
    index = {s: i for i, s in enumerate(subsets)}
    n = len(subsets)
    matrix = [[field.zero] * n for _ in range(n)]
    for c, s in enumerate(subsets):
        base = ring.monomial([(ring.labels[i], 1) for i in s])
        image = multiply(theta, base)
        for mono, coeff in image.terms.items():
            bits = tuple(g for g, _ in mono)
            if len(bits) > degree_cap:
                continue
            matrix[index[bits]][c] = field.add(matrix[index[bits]][c], coeff)
    return matrix


def _grassmann_module(field, nvars, degree_cap, thetas, flip=0):
    """Multiplication by odd elements on a degree-truncated exterior algebra.

    Odd elements of an exterior algebra square to zero and anticommute with
    each other, and left multiplication is strictly triangular for the
    degree flag, so the module axioms hold by construction.
    """
    ring = SuperPolyRing([(f"y{i}", 1) for i in range(nvars)], field)
    space, subsets = _grassmann_space(field, nvars, degree_cap, flip)
    mats = [
        _multiplication_matrix(ring, space, subsets, theta, degree_cap)
        for theta in thetas
    ]
    return ring, OddModule(space, mats)


def free_module(p, r, generator_parities=(0,)):
    """A free module on generators of the stated parities."""
    field = PrimeField(p)
    pieces = []
    for par in generator_parities:
        ring = SuperPolyRing([(f"y{i}", 1) for i in range(r)], field)
        thetas = [ring.gen(f"y{i}") for i in range(r)]
        _, piece = _grassmann_module(field, r, r, thetas, flip=par % 2)
        pieces.append(piece)
    out = pieces[0]
    for piece in pieces[1:]:
        out = direct_sum(out, piece)
    return out


def trivial_module(p, r, even=1, odd=0):
    """A module with all actions zero."""
    field = PrimeField(p)
    n = even + odd
    if n == 0:
        raise BadParams("trivial module needs at least one basis vector")
    labels = [f"t{i}" for i in range(n)]
    space = SuperVectorSpace(labels, [0] * even + [1] * odd, field)
    zero = [[field.zero] * n for _ in range(n)]
    return OddModule(space, [zero] * r)


def direct_sum(left, right):
    """The direct sum, with actions acting blockwise."""
    if left.field != right.field:
        raise BadParams("summands live over different fields")
    if left.r != right.r:
        raise BadParams("summands have different numbers of actions")
    field = left.field
    n, m = left.dim, right.dim
    labels = [f"a{i}" for i in range(n)] + [f"b{i}" for i in range(m)]
    parity = list(left.space.parity) + list(right.space.parity)
    space = SuperVectorSpace(labels, parity, field)
    mats = []
    for lop, rop in zip(left.operators, right.operators):
        mat = [[field.zero] * (n + m) for _ in range(n + m)]
        for a in range(n):
            for b in range(n):
                mat[a][b] = lop.action.matrix[a][b]
        for a in range(m):
            for b in range(m):
                mat[n + a][n + b] = rop.action.matrix[a][b]
        mats.append(mat)
    return OddModule(space, mats)


_SHAPES = [
    (nvars, cap, sum(math.comb(nvars, j) for j in range(cap + 1)))
    for nvars in range(1, 5)
    for cap in range(1, nvars + 1)
]


def _random_invertible(rng, field, n):
    if n == 0:
        return []
    while True:
        mat = [[field.random(rng) for _ in range(n)] for _ in range(n)]
        _, pivots = rref(field, mat)
        if len(pivots) == n:
            return mat


def _random_even_change_of_basis(rng, space):
    field = space.field
    even = [i for i, par in enumerate(space.parity) if par == 0]
    odd = [i for i, par in enumerate(space.parity) if par == 1]
    n = space.dim
    q = [[field.zero] * n for _ in range(n)]
    for block in (even, odd):
        small = _random_invertible(rng, field, len(block))
        for a, ra in enumerate(block):
            for b, rb in enumerate(block):
                q[ra][rb] = small[a][b]
    return q


def _conjugate(module, q):
    field = module.field
    n = module.dim
    qinv = []
    unit = [field.zero] * n
    for c in range(n):
        rhs = list(unit)
        rhs[c] = field.one
        col = solve_linear(field, q, rhs)
        qinv.append(col)
    qinv = [[qinv[c][r] for c in range(n)] for r in range(n)]

    def matmul(a, b):
        return [
            [
                _dot(field, a[i], [b[k][j] for k in range(n)])
                for j in range(n)
            ]
            for i in range(n)
        ]

    mats = [
        matmul(matmul(q, op.action.matrix), qinv) for op in module.operators
    ]
    return OddModule(module.space, mats)


def _dot(field, xs, ys):
    s = field.zero
    for x, y in zip(xs, ys):
        if not field.is_zero(x) and not field.is_zero(y):
            s = field.add(s, field.mul(x, y))
    return s


def random_module(rng, p=3, r=2, dim_cap=12):
    """A random valid module of dimension at most dim_cap.

    The actions start out as multiplications by random odd elements of a
    degree-truncated exterior algebra, which are strictly upper triangular
    odd matrices for the common degree flag and anticommute for free. A
    random even change of basis then hides the monomial structure.
    """
    shapes = [s for s in _SHAPES if s[2] <= dim_cap]
    if not shapes:
        raise BadParams(f"no module shape fits inside dimension {dim_cap}")
    field = PrimeField(p)
    nvars, cap, _ = shapes[rng.randrange(len(shapes))]
    ring = SuperPolyRing([(f"y{i}", 1) for i in range(nvars)], field)
    thetas = []
    for _ in range(r):
        theta = ring.zero()
        for mask in range(1, 1 << nvars):
            bits = [i for i in range(nvars) if mask >> i & 1]
            if len(bits) % 2 == 0:
                continue
            coeff = field.random(rng)
            if not field.is_zero(coeff):
                theta = theta + ring.monomial(
                    [(f"y{i}", 1) for i in bits], coeff
                )
        thetas.append(theta)
    flip = rng.randrange(2)
    _, module = _grassmann_module(field, nvars, cap, thetas, flip=flip)
    q = _random_even_change_of_basis(rng, module.space)
    return _conjugate(module, q)
