"""Super vector spaces, parity-graded linear maps, and exact echelon algebra.

Vectors are lists of field elements in the basis order of their space.
Row reduction has two code paths: a vectorized numpy path for prime fields
(entries stay far below the int64 overflow line for p <= 5 or any p in the
thousands) and a pure Python path that works over extension fields.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadShape,
    FieldMismatch,
    NotASubspace,
    NotHomogeneous,
    NotOdd,
)
from .fields import PrimeField


class SuperVectorSpace:
    """A finite dimensional Z/2-graded vector space with labeled basis."""

    def __init__(self, labels, parity, field):
        labels = tuple(labels)
        parity = tuple(int(x) % 2 for x in parity)
        if len(labels) != len(parity):
            raise BadShape("labels and parity lists differ in length")
        if len(set(labels)) != len(labels):
            raise BadShape("basis labels must be distinct")
        self.labels = labels
        self.parity = parity
        self.field = field
        self._index = {lab: i for i, lab in enumerate(labels)}

    @property
    def dim(self):
        return len(self.labels)

    @property
    def dim_even(self):
        return sum(1 for x in self.parity if x == 0)

    @property
    def dim_odd(self):
        return sum(1 for x in self.parity if x == 1)

    def index(self, label):
        return self._index[label]

    def zero_vector(self):
        return [self.field.zero] * self.dim

    def basis_vector(self, label):
        v = self.zero_vector()
        v[self._index[label]] = self.field.one
        return v

    def parity_shift(self):
        return SuperVectorSpace(self.labels, [1 - x for x in self.parity], self.field)

    def vector_parity(self, v):
        """Parity of a homogeneous vector, or None for zero or mixed."""
        seen = None
        for i, c in enumerate(v):
            if not self.field.is_zero(c):
                if seen is None:
                    seen = self.parity[i]
                elif seen != self.parity[i]:
                    return None
        return seen

    def __eq__(self, other):
        return (
            isinstance(other, SuperVectorSpace)
            and other.labels == self.labels
            and other.parity == self.parity
            and other.field == self.field
        )

    def __repr__(self):
        return f"SuperVectorSpace(dim {self.dim_even}|{self.dim_odd} over {self.field})"


def tensor_space(v, w):
    if v.field != w.field:
        raise FieldMismatch("tensor factors live over different fields")
    labels = [(a, b) for a in v.labels for b in w.labels]
    parity = [
        (v.parity[i] + w.parity[j]) % 2
        for i in range(v.dim)
        for j in range(w.dim)
    ]
    return SuperVectorSpace(labels, parity, v.field)


def dual_space(v):
    labels = [("dual", lab) for lab in v.labels]
    return SuperVectorSpace(labels, v.parity, v.field)


class GradedLinearMap:
    """A parity homogeneous linear map stored as a dense matrix.

    matrix[r][c] is the coefficient of codomain basis vector r in the image
    of domain basis vector c. Nonzero entries must connect bases whose
    parities differ by map_parity.
    """

    def __init__(self, domain, codomain, matrix, map_parity):
        if domain.field != codomain.field:
            raise FieldMismatch("domain and codomain fields differ")
        map_parity = int(map_parity) % 2
        field = domain.field
        if len(matrix) != codomain.dim:
            raise BadShape(f"expected {codomain.dim} rows, got {len(matrix)}")
        for r, row in enumerate(matrix):
            if len(row) != domain.dim:
                raise BadShape(f"row {r} has {len(row)} entries, expected {domain.dim}")
            for c, entry in enumerate(row):
                if field.is_zero(entry):
                    continue
                if (codomain.parity[r] - domain.parity[c]) % 2 != map_parity:
                    if map_parity == 1:
                        raise NotOdd(
                            f"entry ({r},{c}) breaks the odd block structure"
                        )
                    raise BadShape(f"entry ({r},{c}) breaks the even block structure")
        self.domain = domain
        self.codomain = codomain
        self.matrix = [list(row) for row in matrix]
        self.map_parity = map_parity

    @property
    def field(self):
        return self.domain.field

    def apply(self, v):
        field = self.field
        if len(v) != self.domain.dim:
            raise BadShape("vector length does not match the domain")
        out = []
        for row in self.matrix:
            s = field.zero
            for a, b in zip(row, v):
                if not field.is_zero(a) and not field.is_zero(b):
                    s = field.add(s, field.mul(a, b))
            out.append(s)
        return out

    def compose(self, other):
        """self after other."""
        if other.codomain != self.domain:
            raise BadShape("composition shapes do not match")
        field = self.field
        cols = [other.column(c) for c in range(other.domain.dim)]
        matrix = [[field.zero] * other.domain.dim for _ in range(self.codomain.dim)]
        for c, col in enumerate(cols):
            img = self.apply(col)
            for r, val in enumerate(img):
                matrix[r][c] = val
        return GradedLinearMap(
            other.domain,
            self.codomain,
            matrix,
            (self.map_parity + other.map_parity) % 2,
        )

    def column(self, c):
        return [row[c] for row in self.matrix]

    def add(self, other):
        if (
            other.domain != self.domain
            or other.codomain != self.codomain
            or other.map_parity != self.map_parity
        ):
            raise BadShape("maps are not addable")
        field = self.field
        matrix = [
            [field.add(a, b) for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.matrix, other.matrix)
        ]
        return GradedLinearMap(self.domain, self.codomain, matrix, self.map_parity)

    def scale(self, c):
        field = self.field
        matrix = [[field.mul(c, a) for a in row] for row in self.matrix]
        return GradedLinearMap(self.domain, self.codomain, matrix, self.map_parity)

    def is_zero(self):
        field = self.field
        return all(field.is_zero(a) for row in self.matrix for a in row)

    @staticmethod
    def zero(domain, codomain, map_parity):
        matrix = [[domain.field.zero] * domain.dim for _ in range(codomain.dim)]
        return GradedLinearMap(domain, codomain, matrix, map_parity)

    @staticmethod
    def identity(space):
        field = space.field
        matrix = [
            [field.one if r == c else field.zero for c in range(space.dim)]
            for r in range(space.dim)
        ]
        return GradedLinearMap(space, space, matrix, 0)


def _np_rref(p, rows):
    a = np.array(rows, dtype=np.int64) % p
    if a.size == 0:
        return [], []
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        pivots.append(c)
        r += 1
    return [list(map(int, row)) for row in a[:r]], pivots


def _generic_rref(field, rows):
    a = [list(row) for row in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        pivot = None
        for rr in range(r, len(a)):
            if not field.is_zero(a[rr][c]):
                pivot = rr
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(inv, x) for x in a[r]]
        for rr in range(len(a)):
            if rr != r and not field.is_zero(a[rr][c]):
                f = a[rr][c]
                a[rr] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[rr], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rref(field, rows):
    """Reduced row echelon form, returning (rows, pivot columns)."""
    if isinstance(field, PrimeField) and rows:
        return _np_rref(field.p, rows)
    return _generic_rref(field, rows)


class Subspace:
    """An echelonized subspace of a SuperVectorSpace.

    Basis rows are kept in reduced row echelon form and each row is parity
    homogeneous. Echelon reduction preserves homogeneity here because rows
    of different parity have disjoint supports.
    """

    def __init__(self, space, vectors, _trusted=None):
        self.space = space
        if _trusted is not None:
            self.rows, self.pivots = _trusted
        else:
            for v in vectors:
                if len(v) != space.dim:
                    raise BadShape("vector length does not match the ambient space")
                if v and space.vector_parity(v) is None and any(
                    not space.field.is_zero(c) for c in v
                ):
                    raise NotHomogeneous("subspace basis vectors must be homogeneous")
            self.rows, self.pivots = rref(space.field, list(vectors))

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        """Residual of v after eliminating all pivot coordinates."""
        field = self.space.field
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not field.is_zero(c):
                v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
        return v

    def coefficients(self, v):
        """Coordinates of v in the echelon basis, or None if outside."""
        field = self.space.field
        v = list(v)
        coeffs = []
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            coeffs.append(c)
            if not field.is_zero(c):
                v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
        if any(not field.is_zero(x) for x in v):
            return None
        return coeffs

    def contains(self, v):
        field = self.space.field
        return all(field.is_zero(x) for x in self.reduce(v))

    def contains_subspace(self, other):
        return all(self.contains(row) for row in other.rows)

    def basis_parities(self):
        return [self.space.vector_parity(row) for row in self.rows]

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.space.dim})"


def rank_kernel_image(f):
    """Rank, kernel subspace, and image subspace of a graded map.

    The parity block structure makes every returned basis vector parity
    homogeneous automatically.
    """
    field = f.field
    rows = f.matrix
    ech, pivots = rref(field, rows) if rows else ([], [])
    rank = len(pivots)
    pivot_set = set(pivots)
    free = [c for c in range(f.domain.dim) if c not in pivot_set]
    kernel_vectors = []
    for c in free:
        v = [field.zero] * f.domain.dim
        v[c] = field.one
        for row, p in zip(ech, pivots):
            if not field.is_zero(row[c]):
                v[p] = field.neg(row[c])
        kernel_vectors.append(v)
    kernel = Subspace(f.domain, kernel_vectors)
    image_vectors = [f.column(c) for c in pivots]
    image = Subspace(f.codomain, image_vectors)
    return rank, kernel, image


@dataclass
class QuotientResult:
    """A quotient space with canonical section representatives."""

    space: SuperVectorSpace
    representatives: list
    sub: Subspace
    total: Subspace

    def project(self, v):
        """Coordinates of the class of v in the quotient basis."""
        field = self.space.field
        v = self.sub.reduce(v)
        coords = []
        rep_rows = self.representatives
        pivots = self._rep_pivots
        for row, p in zip(rep_rows, pivots):
            c = v[p]
            coords.append(c)
            if not field.is_zero(c):
                v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
        if any(not field.is_zero(x) for x in v):
            raise NotASubspace("vector does not lie in the subspace being quotiented")
        return coords


def quotient_with_section(w, u):
    """Quotient w / u with echelon complement representatives.

    Both arguments are Subspace objects in the same ambient space and u
    must be contained in w. The representatives are canonical: they are
    the reduced row echelon form of w's basis after eliminating u.
    """
    if w.space != u.space:
        raise NotASubspace("subspaces live in different ambient spaces")
    if not w.contains_subspace(u):
        raise NotASubspace("the second space is not contained in the first")
    field = w.space.field
    residuals = [u.reduce(row) for row in w.rows]
    rep_rows, rep_pivots = rref(field, residuals)
    parities = []
    for row in rep_rows:
        par = w.space.vector_parity(row)
        parities.append(0 if par is None else par)
    labels = [f"q{i}" for i in range(len(rep_rows))]
    qspace = SuperVectorSpace(labels, parities, field)
    result = QuotientResult(
        space=qspace, representatives=rep_rows, sub=u, total=w
    )
    result._rep_pivots = rep_pivots
    return result


def solve_linear(field, rows, rhs):
    """One solution x of (rows) x = rhs, or None if inconsistent."""
    if not rows:
        return [] if all(field.is_zero(b) for b in rhs) else None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ech, pivots = rref(field, aug)
    x = [field.zero] * ncols
    for row, p in zip(ech, pivots):
        if p == ncols:
            return None
        x[p] = row[ncols]
    return x


def matrix_of_vectors(vectors):
    return [list(v) for v in vectors]


def space_to_json(space):
    field = space.field
    data = {
        "p": field.char,
        "labels": [str(lab) for lab in space.labels],
        "parity": list(space.parity),
    }
    if field.degree > 1:
        data["modulus"] = list(field.modulus)
    return data


def map_rows_to_json(f):
    field = f.field
    return [[field.to_int(x) for x in row] for row in f.matrix]
