"""Kernel modulo image of a square-zero odd operator, functorially.

For an odd operator x with x*x = 0 on a super vector space M, the functor
sends M to ker(x)/im(x) with a canonical echelon section, and sends a map
commuting with the operators in the graded sense to the induced map on
classes. Tensor products and duals of operators follow the sign rules

    x(m tensor n) = xm tensor n + (-1)^|m| m tensor xn
    (x f)(m)      = (-1)^|f| f(xm)

and a finite complex can be collapsed to a single operator whose classes
recover the cohomology of the complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .errors import (
    DoesNotCommute,
    NotOdd,
    NotSquareZero,
    NotSquareZeroDifferential,
)
from .linalg import (
    GradedLinearMap,
    SuperVectorSpace,
    dual_space,
    quotient_with_section,
    rank_kernel_image,
    rref,
    solve_linear,
    tensor_space,
)


class SquareZeroOddOperator:
    """An odd endomorphism squaring to zero."""

    def __init__(self, space, action):
        if not isinstance(action, GradedLinearMap):
            action = GradedLinearMap(space, space, action, 1)
        if action.domain != space or action.codomain != space:
            action = GradedLinearMap(space, space, action.matrix, 1)
        if action.map_parity != 1:
            raise NotOdd("operator must be odd")
        if not action.compose(action).is_zero():
            raise NotSquareZero("operator does not square to zero")
        self.space = space
        self.action = action

    @property
    def field(self):
        return self.space.field

    def apply(self, v):
        return self.action.apply(v)

    def __repr__(self):
        return f"SquareZeroOddOperator on {self.space!r}"


@dataclass
class DSResult:
    """Classes of a square-zero odd operator with a canonical section.

    cohomology carries one basis label per class, section holds the
    echelon representatives in ambient coordinates, and free_part pairs
    each vector u with xu for an echelon basis of the image.
    """

    operator: SquareZeroOddOperator
    cohomology: SuperVectorSpace
    section: list
    free_part: list
    rank: int
    _quotient: object = dataclass_field(repr=False, default=None)

    def project(self, v):
        """Coordinates of the class of a kernel vector."""
        return self._quotient.project(v)

    @property
    def dim(self):
        return self.cohomology.dim


def ds(operator):
    """ker(x)/im(x) with canonical representatives.

    The dimension always equals dim M - 2 rank(x), which is asserted on
    every call.
    """
    rank, kernel, image = rank_kernel_image(operator.action)
    quotient = quotient_with_section(kernel, image)
    space = operator.space
    field = space.field
    free_part = []
    for b in image.rows:
        u = solve_linear(field, operator.action.matrix, b)
        if u is None:
            raise NotSquareZero("image vector has no preimage, matrix is inconsistent")
        free_part.append((u, b))
    labels = [f"h{i}" for i in range(quotient.space.dim)]
    cohomology = SuperVectorSpace(labels, quotient.space.parity, field)
    if cohomology.dim != space.dim - 2 * rank:
        raise NotSquareZero("class count disagrees with dim M - 2 rank(x)")
    return DSResult(
        operator=operator,
        cohomology=cohomology,
        section=[list(r) for r in quotient.representatives],
        free_part=free_part,
        rank=rank,
        _quotient=quotient,
    )


def induced_map(f, ds_m, ds_n):
    """The map on classes induced by f.

    Requires the graded commutation f x_M = (-1)^|f| x_N f; otherwise the
    recipe project(f(section)) would not be well defined.
    """
    x_m = ds_m.operator
    x_n = ds_n.operator
    left = f.compose(x_m.action)
    right = x_n.action.compose(f)
    if f.map_parity == 1:
        right = right.scale(f.field.neg(f.field.one))
    diff_zero = all(
        f.field.is_zero(f.field.sub(a, b))
        for r1, r2 in zip(left.matrix, right.matrix)
        for a, b in zip(r1, r2)
    )
    if not diff_zero:
        raise DoesNotCommute("map does not graded-commute with the operators")
    field = f.field
    cols = []
    for rep in ds_m.section:
        img = f.apply(rep)
        cols.append(ds_n.project(img))
    matrix = [
        [cols[c][r] for c in range(len(cols))] for r in range(ds_n.cohomology.dim)
    ]
    if not cols:
        matrix = [[] for _ in range(ds_n.cohomology.dim)]
    return GradedLinearMap(ds_m.cohomology, ds_n.cohomology, matrix, f.map_parity)


def tensor_operator(x_m, x_n):
    """The operator on M tensor N with the Koszul sign on the second leg."""
    space = tensor_space(x_m.space, x_n.space)
    field = space.field
    m_dim = x_m.space.dim
    n_dim = x_n.space.dim
    matrix = [[field.zero] * space.dim for _ in range(space.dim)]
    xm = x_m.action.matrix
    xn = x_n.action.matrix
    for a in range(m_dim):
        for b in range(n_dim):
            col = a * n_dim + b
            for r in range(m_dim):
                c = xm[r][a]
                if not field.is_zero(c):
                    matrix[r * n_dim + b][col] = field.add(
                        matrix[r * n_dim + b][col], c
                    )
            sign = -1 if x_m.space.parity[a] == 1 else 1
            for s in range(n_dim):
                c = xn[s][b]
                if not field.is_zero(c):
                    if sign < 0:
                        c = field.neg(c)
                    matrix[a * n_dim + s][col] = field.add(
                        matrix[a * n_dim + s][col], c
                    )
    return SquareZeroOddOperator(space, matrix)


def dual_operator(x_m):
    """The operator on the dual space, (x f)(m) = (-1)^|f| f(xm)."""
    space = dual_space(x_m.space)
    field = space.field
    n = space.dim
    xm = x_m.action.matrix
    matrix = [[field.zero] * n for _ in range(n)]
    for k in range(n):
        sign = -1 if x_m.space.parity[k] == 1 else 1
        for l in range(n):
            c = xm[k][l]
            if not field.is_zero(c):
                matrix[l][k] = field.neg(c) if sign < 0 else c
    return SquareZeroOddOperator(space, matrix)


def direct_sum_operator(x_m, x_n):
    """The block diagonal operator on M + N, labels tagged by side."""
    field = x_m.field
    labels = [(0, lab) for lab in x_m.space.labels]
    labels += [(1, lab) for lab in x_n.space.labels]
    parity = list(x_m.space.parity) + list(x_n.space.parity)
    space = SuperVectorSpace(labels, parity, field)
    m = x_m.space.dim
    total = space.dim
    matrix = [[field.zero] * total for _ in range(total)]
    for r, row in enumerate(x_m.action.matrix):
        for c, val in enumerate(row):
            matrix[r][c] = val
    for r, row in enumerate(x_n.action.matrix):
        for c, val in enumerate(row):
            matrix[m + r][m + c] = val
    return SquareZeroOddOperator(space, matrix)


def _random_invertible(rng, field, n):
    if n == 0:
        return []
    while True:
        mat = [[field.random(rng) for _ in range(n)] for _ in range(n)]
        _, pivots = rref(field, mat)
        if len(pivots) == n:
            return mat


def random_operator(rng, field, dim_even, dim_odd):
    """A random square-zero odd operator on a space of shape (even|odd).

    Any such operator pairs some even vectors with odd ones and kills the
    rest, so a draw picks a random rank profile, builds the corresponding
    pair-matching matrix, and conjugates it by a random even automorphism.
    """
    labels = [f"e{i}" for i in range(dim_even)]
    labels += [f"o{i}" for i in range(dim_odd)]
    parity = [0] * dim_even + [1] * dim_odd
    space = SuperVectorSpace(labels, parity, field)
    bound = min(dim_even, dim_odd)
    r = rng.randint(0, bound)
    s = rng.randint(0, bound - r)
    total = space.dim
    matrix = [[field.zero] * total for _ in range(total)]
    for i in range(r):
        matrix[dim_even + i][i] = field.one
    for k in range(s):
        matrix[r + k][dim_even + r + k] = field.one
    blocks = [
        list(range(dim_even)),
        list(range(dim_even, total)),
    ]
    q = [[field.zero] * total for _ in range(total)]
    for block in blocks:
        small = _random_invertible(rng, field, len(block))
        for a, ra in enumerate(block):
            for b, rb in enumerate(block):
                q[ra][rb] = small[a][b]
    qinv = []
    for c in range(total):
        rhs = [field.zero] * total
        rhs[c] = field.one
        qinv.append(solve_linear(field, q, rhs))
    qinv = [[qinv[c][r] for c in range(total)] for r in range(total)]

    def matmul(a, b):
        out = [[field.zero] * total for _ in range(total)]
        for i in range(total):
            for k in range(total):
                aik = a[i][k]
                if field.is_zero(aik):
                    continue
                for j in range(total):
                    out[i][j] = field.add(out[i][j], field.mul(aik, b[k][j]))
        return out

    return SquareZeroOddOperator(space, matmul(matmul(q, matrix), qinv))


def complex_as_operator(k):
    """Collapse a finite complex into one square-zero odd operator.

    Basis labels become (degree, original label) and the parity of a basis
    vector is its homological degree mod 2. Classes of the result match the
    cohomology of the complex degree by degree.
    """
    pieces = k.pieces
    diffs = k.differentials
    field = pieces[0].field if pieces else None
    for i in range(len(diffs) - 1):
        if not diffs[i + 1].compose(diffs[i]).is_zero():
            raise NotSquareZeroDifferential(f"d_{i + 1} after d_{i} is nonzero")
    labels = []
    parity = []
    offsets = []
    total = 0
    for i, piece in enumerate(pieces):
        offsets.append(total)
        for lab in piece.labels:
            labels.append((i, lab))
            parity.append(i % 2)
        total += piece.dim
    space = SuperVectorSpace(labels, parity, field)
    matrix = [[field.zero] * total for _ in range(total)]
    for i, d in enumerate(diffs):
        src = offsets[i]
        dst = offsets[i + 1]
        for r, row in enumerate(d.matrix):
            for c, val in enumerate(row):
                if not field.is_zero(val):
                    matrix[dst + r][src + c] = val
    return SquareZeroOddOperator(space, matrix)
