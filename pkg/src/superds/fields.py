"""Exact arithmetic over small prime fields and their extensions.

Prime field elements are plain Python ints in [0, p). Extension field
elements are tuples of ints of fixed length k, the coefficients of
1, t, ..., t^(k-1) modulo a fixed monic irreducible modulus. Every modulus
is chosen deterministically (first irreducible in base-p counting order),
so serialized data is reproducible across runs and machines.

The module also provides division-free characteristic polynomials
(Berkowitz), univariate factorization (distinct-degree plus
Cantor-Zassenhaus with a fixed seed), and eigenvalue extraction over the
smallest extension that contains one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import BadParams, BadShape, FieldMismatch

_MAX_MODULUS_DEGREE = 6


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field F_p for an odd prime p, with int elements."""

    def __init__(self, p):
        if not _is_prime(p) or p < 3:
            raise BadParams(f"characteristic must be an odd prime >= 3, got {p}")
        self.p = p
        self.char = p
        self.degree = 1
        self.order = p
        self.zero = 0
        self.one = 1

    def of_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e):
        if e < 0:
            return self.inv(pow(a, -e, self.p))
        return pow(a, e, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def to_int(self, a):
        return a % self.p

    def from_int(self, n):
        if not 0 <= n < self.p:
            raise BadParams(f"encoded element {n} out of range for F_{self.p}")
        return n

    def random(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"F_{self.p}"


# Polynomials over an abstract field are lists of elements, lowest degree
# first, with no trailing zeros.


def pol_trim(field, f):
    while f and field.is_zero(f[-1]):
        f.pop()
    return f


def pol_add(field, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else field.zero
        b = g[i] if i < len(g) else field.zero
        out.append(field.add(a, b))
    return pol_trim(field, out)


def pol_sub(field, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else field.zero
        b = g[i] if i < len(g) else field.zero
        out.append(field.sub(a, b))
    return pol_trim(field, out)


def pol_scale(field, f, c):
    if field.is_zero(c):
        return []
    return [field.mul(a, c) for a in f]


def pol_mul(field, f, g):
    if not f or not g:
        return []
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if field.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = field.add(out[i + j], field.mul(a, b))
    return pol_trim(field, out)


def pol_divmod(field, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    q = [field.zero] * max(0, len(f) - len(g) + 1)
    inv_lead = field.inv(g[-1])
    while len(f) >= len(g):
        c = field.mul(f[-1], inv_lead)
        shift = len(f) - len(g)
        if not field.is_zero(c):
            q[shift] = c
            for i, b in enumerate(g):
                f[shift + i] = field.sub(f[shift + i], field.mul(c, b))
        f.pop()
    return pol_trim(field, q), pol_trim(field, f)


def pol_mod(field, f, g):
    return pol_divmod(field, f, g)[1]


def pol_monic(field, f):
    if not f:
        return []
    return pol_scale(field, f, field.inv(f[-1]))


def pol_gcd(field, f, g):
    f, g = list(f), list(g)
    while g:
        f, g = g, pol_mod(field, f, g)
    return pol_monic(field, f)


def pol_powmod(field, f, e, m):
    result = [field.one]
    base = pol_mod(field, f, m)
    while e > 0:
        if e & 1:
            result = pol_mod(field, pol_mul(field, result, base), m)
        base = pol_mod(field, pol_mul(field, base, base), m)
        e >>= 1
    return result


def pol_deriv(field, f):
    out = []
    for i in range(1, len(f)):
        c = f[i]
        cc = field.zero
        for _ in range(i % field.char):
            cc = field.add(cc, c)
        out.append(cc)
    return pol_trim(field, out)


def pol_eval(field, f, x):
    acc = field.zero
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def _rabin_irreducible(p, coeffs):
    """Test irreducibility of a monic polynomial over F_p."""
    field = PrimeField(p)
    f = list(coeffs)
    k = len(f) - 1
    x = [0, 1]
    xq = pol_powmod(field, x, p**k, f)
    if pol_sub(field, xq, x):
        return False
    d = k
    primes = set()
    t = 2
    while t * t <= d:
        if d % t == 0:
            primes.add(t)
            while d % t == 0:
                d //= t
        t += 1
    if d > 1:
        primes.add(d)
    for q in primes:
        xe = pol_powmod(field, x, p ** (k // q), f)
        if len(pol_gcd(field, pol_sub(field, xe, x), f)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def standard_modulus(p, k):
    """First monic irreducible of degree k over F_p in base-p counting order.

    The constant coefficients (c_0, ..., c_{k-1}) are scanned in order of
    the integer sum(c_i * p^i), which makes the table reproducible.
    """
    if k < 1 or k > _MAX_MODULUS_DEGREE:
        raise BadParams(f"extension degree {k} outside supported range 1..{_MAX_MODULUS_DEGREE}")
    if k == 1:
        return (0, 1)
    for m in range(p**k):
        coeffs = []
        mm = m
        for _ in range(k):
            coeffs.append(mm % p)
            mm //= p
        coeffs.append(1)
        if _rabin_irreducible(p, tuple(coeffs)):
            return tuple(coeffs)
    raise BadParams(f"no irreducible of degree {k} over F_{p}")


class FieldExtension:
    """F_p[t] / (modulus), a single-level extension of degree k.

    Elements are tuples of length k holding the coefficients of
    1, t, ..., t^(k-1). Integer encodings are sum(c_i * p^i).
    """

    def __init__(self, p, k, modulus=None):
        base = PrimeField(p)
        if modulus is None:
            modulus = standard_modulus(p, k)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise BadParams("modulus must be monic of degree k")
        self.base = base
        self.p = p
        self.char = p
        self.degree = k
        self.order = p**k
        self.modulus = modulus
        self.zero = (0,) * k
        self.one = ((1,) + (0,) * (k - 1)) if k > 1 else (1,)

    def of_base(self, n):
        return ((n % self.p),) + (0,) * (self.degree - 1)

    def of_int(self, n):
        return self.of_base(n)

    def gen(self):
        if self.degree == 1:
            raise BadParams("degree 1 extension has no generator beyond the base")
        return (0, 1) + (0,) * (self.degree - 2)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        p = self.p
        k = self.degree
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(k):
                    prod[d - k + i] = (prod[d - k + i] - c * mod[i]) % p
        return tuple(prod[:k])

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        base = self.base
        f = pol_trim(base, list(a))
        g = list(self.modulus)
        r0, r1 = g, f
        s0, s1 = [], [base.one]
        while r1:
            q, r = pol_divmod(base, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, pol_sub(base, s0, pol_mul(base, q, s1))
        c = base.inv(r0[0])
        s0 = pol_scale(base, s0, c)
        s0 = s0 + [0] * (self.degree - len(s0))
        return tuple(s0[: self.degree])

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e > 0:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def is_zero(self, a):
        return all(x % self.p == 0 for x in a)

    def to_int(self, a):
        n = 0
        for c in reversed(a):
            n = n * self.p + (c % self.p)
        return n

    def from_int(self, n):
        if not 0 <= n < self.order:
            raise BadParams(f"encoded element {n} out of range")
        coeffs = []
        for _ in range(self.degree):
            coeffs.append(n % self.p)
            n //= self.p
        return tuple(coeffs)

    def random(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.degree))

    def elements(self):
        return (self.from_int(n) for n in range(self.order))

    def __eq__(self, other):
        return (
            isinstance(other, FieldExtension)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("FieldExtension", self.p, self.modulus))

    def __repr__(self):
        return f"F_{self.p}^{self.degree}"


def field_from_meta(p, degree):
    """Field object for F_{p^degree} with the standard modulus."""
    if degree == 1:
        return PrimeField(p)
    return FieldExtension(p, degree)


def embed_base(field, n):
    """Send an int (an F_p value) into the given field."""
    if isinstance(field, PrimeField):
        return n % field.p
    return field.of_base(n)


@lru_cache(maxsize=None)
def _embedding_root(p, small_degree, big_degree):
    small = FieldExtension(p, small_degree)
    big = field_from_meta(p, big_degree)
    mod_poly = [embed_base(big, c) for c in small.modulus]
    roots = poly_roots(big, mod_poly)
    if not roots:
        raise BadParams(
            f"degree {small_degree} modulus has no root in degree {big_degree} extension"
        )
    return min(roots, key=big.to_int)


def embedding(small, big):
    """Field embedding small -> big as a callable, both over the same p.

    Requires small.degree to divide big.degree. The image of the small
    generator is the root of the small modulus with least integer encoding,
    which pins the embedding down uniquely per (p, degrees) pair.
    """
    if small.char != big.char:
        raise FieldMismatch(f"cannot embed {small} into {big}")
    if big.degree % small.degree != 0:
        raise BadParams(f"{small} does not embed into {big}")
    if isinstance(small, PrimeField):
        return lambda a: embed_base(big, a)
    if small.degree == big.degree:
        if small != big:
            raise BadParams("same-degree embedding requires identical moduli")
        return lambda a: a
    theta = _embedding_root(small.char, small.degree, big.degree)

    def embed(a):
        acc = big.zero
        power = big.one
        for c in a:
            acc = big.add(acc, big.mul(embed_base(big, c), power))
            power = big.mul(power, theta)
        return acc

    return embed


def _cz_seed(field, f):
    data = (field.char, field.degree, tuple(field.to_int(c) for c in f))
    return hash(data) & 0x7FFFFFFF


def _equal_degree_split(field, f, d, rng):
    """One nontrivial factor of f, a product of irreducibles of degree d."""
    q = field.order
    while True:
        a = pol_trim(field, [field.random(rng) for _ in range(len(f) - 1)])
        if not a:
            continue
        g = pol_gcd(field, a, f)
        if 1 < len(g) < len(f):
            return g
        e = (q**d - 1) // 2
        b = pol_powmod(field, a, e, f)
        b = pol_sub(field, b, [field.one])
        g = pol_gcd(field, b, f)
        if 1 < len(g) < len(f):
            return g


def _irreducible_factor_of_equal_degree(field, f, d, rng):
    while len(f) - 1 > d:
        g = _equal_degree_split(field, f, d, rng)
        f = g if len(g) - 1 >= d else pol_divmod(field, f, g)[0]
        if (len(f) - 1) % d != 0:
            raise BadShape("equal degree splitting produced a bad factor")
    return pol_monic(field, f)


def pol_pth_root(field, f):
    """p-th root of a polynomial in x^p over a perfect field."""
    p = field.char
    out = []
    for i in range(0, len(f), p):
        c = f[i]
        root = c
        for _ in range(field.degree - 1):
            root = field.pow(root, p)
        out.append(root)
    return pol_trim(field, out)


def squarefree_part(field, f):
    f = pol_monic(field, f)
    while True:
        df = pol_deriv(field, f)
        if df:
            g = pol_gcd(field, f, df)
            return pol_divmod(field, f, g)[0]
        if len(f) <= 1:
            return f
        f = pol_pth_root(field, f)


def min_degree_irreducible_factor(field, f):
    """(d, u): an irreducible factor u of least degree d of nonconstant f."""
    if len(f) < 2:
        raise BadParams("need a nonconstant polynomial")
    rng = random.Random(_cz_seed(field, f))
    h = squarefree_part(field, f)
    q = field.order
    x = [field.zero, field.one]
    frob = pol_powmod(field, x, q, h)
    power = frob
    d = 1
    while True:
        g = pol_gcd(field, pol_sub(field, power, x), h)
        if len(g) > 1:
            return d, _irreducible_factor_of_equal_degree(field, g, d, rng)
        d += 1
        if d > len(h) - 1:
            return len(h) - 1, pol_monic(field, h)
        power = pol_powmod(field, power, q, h)


def poly_roots(field, f):
    """All roots of f in the field, via gcd with x^q - x then splitting."""
    f = pol_monic(field, squarefree_part(field, f))
    x = [field.zero, field.one]
    xq = pol_powmod(field, x, field.order, f)
    lin = pol_gcd(field, pol_sub(field, xq, x), f)
    roots = []
    rng = random.Random(_cz_seed(field, f) ^ 0x9E3779B9)
    stack = [lin]
    while stack:
        g = stack.pop()
        if len(g) <= 1:
            continue
        if len(g) == 2:
            roots.append(field.neg(field.mul(g[0], field.inv(g[1]))))
            continue
        h = _equal_degree_split(field, pol_monic(field, g), 1, rng)
        stack.append(h)
        stack.append(pol_divmod(field, g, h)[0])
    return roots


def berkowitz_charpoly(field, a):
    """Coefficients of det(xI - A), highest power first, division free."""
    n = len(a)
    for row in a:
        if len(row) != n:
            raise BadShape("characteristic polynomial needs a square matrix")
    c = [field.one]
    for k in range(1, n + 1):
        m = [row[: k - 1] for row in a[: k - 1]]
        row = a[k - 1][: k - 1]
        col = [a[i][k - 1] for i in range(k - 1)]
        v = [field.one, field.neg(a[k - 1][k - 1])]
        cur = col
        for _ in range(k - 1):
            s = field.zero
            for x, y in zip(row, cur):
                s = field.add(s, field.mul(x, y))
            v.append(field.neg(s))
            cur = [
                _dot(field, mrow, cur) for mrow in m
            ]
        new = [field.zero] * (k + 1)
        for i in range(k + 1):
            for j in range(len(c)):
                if 0 <= i - j < len(v):
                    new[i] = field.add(new[i], field.mul(v[i - j], c[j]))
        c = new
    return c


def _dot(field, xs, ys):
    s = field.zero
    for x, y in zip(xs, ys):
        s = field.add(s, field.mul(x, y))
    return s


@dataclass
class EigenResult:
    """An eigenvalue together with the field it was found in."""

    field: object
    value: object
    vector: list
    factor_degree: int
    embed: object


def eigenvalue_over_extension(a, field):
    """Eigenvalue of least algebraic degree, with an eigenvector.

    The matrix lives over `field` (F_p or a single-level extension). The
    characteristic polynomial is factored and an irreducible factor of
    minimal degree d is selected; the eigenvalue is returned inside
    F_{p^(field.degree * d)} together with the embedding used to move the
    matrix there.
    """
    charpoly = berkowitz_charpoly(field, a)
    rev = list(reversed(charpoly))
    d, u = min_degree_irreducible_factor(field, rev)
    if d == 1:
        big = field

        def emb(x):
            return x

    else:
        big_degree = field.degree * d
        big = field_from_meta(field.char, big_degree)
        emb = embedding(field, big)
    u_big = [emb(c) for c in u]
    roots = poly_roots(big, u_big)
    if not roots:
        raise BadShape("irreducible factor failed to split in its root field")
    value = min(roots, key=big.to_int)
    a_big = [[emb(x) for x in row] for row in a]
    n = len(a)
    shifted = [
        [big.sub(a_big[r][c], value if r == c else big.zero) for c in range(n)]
        for r in range(n)
    ]
    vector = _kernel_vector(big, shifted)
    return EigenResult(field=big, value=value, vector=vector, factor_degree=d, embed=emb)


def _kernel_vector(field, m):
    n = len(m)
    rows = [list(r) for r in m]
    pivots = {}
    r = 0
    for c in range(n):
        pivot = None
        for rr in range(r, n):
            if not field.is_zero(rows[rr][c]):
                pivot = rr
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for rr in range(n):
            if rr != r and not field.is_zero(rows[rr][c]):
                f = rows[rr][c]
                rows[rr] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[rr], rows[r])]
        pivots[c] = r
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        raise BadShape("matrix has trivial kernel, no eigenvector exists")
    c0 = free[0]
    v = [field.zero] * n
    v[c0] = field.one
    for c, r in pivots.items():
        v[c] = field.neg(rows[r][c0])
    return v
