"""Fractions over the catalog denominator and antipode tables.

An element of the localized coordinate algebra is stored as a numerator
polynomial together with a power of the designated denominator d. No
cancellation is attempted; equality is decided by cross multiplication.
The antipode of the general linear catalog is assembled from the block
inverse of the generic matrix, with the odd off-diagonal blocks handled
by a terminating Neumann series. The queer antipode is pulled back along
the realization inside the general linear catalog of doubled size.
"""

from __future__ import annotations

from ..errors import BadParams, BadShape
from ..superpoly import RingMorphism, SuperPolyRing
from .catalogs import det_commuting, gl_bialgebra


class LocalizedElement:
    """numerator / d**power for the owning presentation's denominator."""

    def __init__(self, presentation, numerator, power=0):
        if power < 0:
            raise BadShape("denominator power must be nonnegative")
        self.presentation = presentation
        self.numerator = numerator
        self.power = power

    @property
    def ring(self):
        return self.presentation.ring

    def with_power(self, power):
        """Rewrite with a larger denominator power."""
        if power < self.power:
            raise BadShape("cannot lower the denominator power")
        if power == self.power:
            return self
        num = self.numerator * denominator_power(self.presentation, power - self.power)
        return LocalizedElement(self.presentation, num, power)

    def __add__(self, other):
        power = max(self.power, other.power)
        a = self.with_power(power)
        b = other.with_power(power)
        return LocalizedElement(self.presentation, a.numerator + b.numerator, power)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LocalizedElement(self.presentation, -self.numerator, self.power)

    def __mul__(self, other):
        if isinstance(other, LocalizedElement):
            return LocalizedElement(
                self.presentation,
                self.numerator * other.numerator,
                self.power + other.power,
            )
        return LocalizedElement(self.presentation, self.numerator * other, self.power)

    def scale(self, c):
        return LocalizedElement(self.presentation, self.numerator.scale(c), self.power)

    def __eq__(self, other):
        if not isinstance(other, LocalizedElement):
            return NotImplemented
        power = max(self.power, other.power)
        return self.with_power(power).numerator == other.with_power(power).numerator

    def is_zero(self):
        return self.numerator.is_zero()

    def __pow__(self, e):
        out = LocalizedElement(self.presentation, self.ring.one(), 0)
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self):
        return f"({self.numerator}) / d^{self.power}"


def denominator_power(presentation, k):
    """d**k with a per-presentation cache (repeated squaring not needed)."""
    cache = getattr(presentation, "_dpower_cache", None)
    if cache is None:
        cache = [presentation.ring.one()]
        presentation._dpower_cache = cache
    while len(cache) <= k:
        cache.append(cache[-1] * presentation.denominator)
    return cache[k]


def localized_constant(presentation, c):
    return LocalizedElement(presentation, presentation.ring.const(c), 0)


def localized_of(presentation, poly):
    return LocalizedElement(presentation, poly, 0)


def _adjugate(ring, entries):
    """Adjugate of a matrix of commuting even polynomials."""
    size = len(entries)
    if size == 0:
        return []
    adj = [[ring.zero() for _ in range(size)] for _ in range(size)]
    for r in range(size):
        for c in range(size):
            minor = [
                [entries[rr][cc] for cc in range(size) if cc != c]
                for rr in range(size)
                if rr != r
            ]
            cof = det_commuting(ring, minor) if minor else ring.one()
            if (r + c) % 2:
                cof = -cof
            adj[c][r] = cof
    return adj


def _mat_mul(x, y):
    rows, inner, cols = len(x), len(y), len(y[0]) if y else 0
    out = []
    for r in range(rows):
        row = []
        for c in range(cols):
            total = None
            for s in range(inner):
                term = x[r][s] * y[s][c]
                total = term if total is None else total + term
            row.append(total)
        out.append(row)
    return out


def _mat_add(x, y):
    return [[a + b for a, b in zip(rx, ry)] for rx, ry in zip(x, y)]


def _mat_neg(x):
    return [[-a for a in row] for row in x]


def _loc_matrix(presentation, entries, power=0):
    return [
        [LocalizedElement(presentation, e, power) for e in row] for row in entries
    ]


def gl_antipode(presentation):
    """Antipode values S(t_kl) of the general linear catalog.

    Returns a dict from generator label to LocalizedElement over the
    denominator d = det(A) det(D). The two-sided matrix inverse identity
    is verified, cleared of denominators.
    """
    meta = presentation.meta
    if meta.get("kind") != "gl":
        raise BadParams("antipode table is for the general linear catalog")
    m, n = meta["m"], meta["n"]
    ring = presentation.ring
    N = m + n

    def t(k, l):
        return ring.gen(f"t_{k}_{l}")

    block_a = [[t(k, l) for l in range(1, m + 1)] for k in range(1, m + 1)]
    block_b = [[t(k, l) for l in range(m + 1, N + 1)] for k in range(1, m + 1)]
    block_c = [[t(k, l) for l in range(1, m + 1)] for k in range(m + 1, N + 1)]
    block_d = [[t(k, l) for l in range(m + 1, N + 1)] for k in range(m + 1, N + 1)]

    det_a = det_commuting(ring, block_a) if m else ring.one()
    det_d = det_commuting(ring, block_d) if n else ring.one()
    adj_a = _adjugate(ring, block_a)
    adj_d = _adjugate(ring, block_d)

    # A^{-1} = adjA detD / d and D^{-1} = adjD detA / d, both at power 1.
    inv_a = _loc_matrix(presentation, [[e * det_d for e in row] for row in adj_a], 1)
    inv_d = _loc_matrix(presentation, [[e * det_a for e in row] for row in adj_d], 1)
    loc_b = _loc_matrix(presentation, block_b, 0)
    loc_c = _loc_matrix(presentation, block_c, 0)

    if m and n:
        kmat = _mat_mul(_mat_mul(inv_d, loc_c), _mat_mul(inv_a, loc_b))
        acc = [
            [localized_constant(presentation, ring.field.one if r == c else ring.field.zero)
             for c in range(n)]
            for r in range(n)
        ]
        power = [[e for e in row] for row in acc]
        for _ in range(m * n):
            power = _mat_mul(power, kmat)
            if all(e.is_zero() for row in power for e in row):
                break
            acc = _mat_add(acc, power)
        inv_schur = _mat_mul(acc, inv_d)
        top_left = _mat_add(
            inv_a,
            _mat_mul(_mat_mul(inv_a, loc_b), _mat_mul(inv_schur, _mat_mul(loc_c, inv_a))),
        )
        top_right = _mat_neg(_mat_mul(_mat_mul(inv_a, loc_b), inv_schur))
        bot_left = _mat_neg(_mat_mul(inv_schur, _mat_mul(loc_c, inv_a)))
        bot_right = inv_schur
    elif m:
        top_left, top_right, bot_left, bot_right = inv_a, [], [], []
    else:
        top_left, top_right, bot_left = [], [], []
        bot_right = inv_d

    values = {}
    for k in range(1, N + 1):
        for l in range(1, N + 1):
            if k <= m and l <= m:
                values[f"t_{k}_{l}"] = top_left[k - 1][l - 1]
            elif k <= m:
                values[f"t_{k}_{l}"] = top_right[k - 1][l - m - 1]
            elif l <= m:
                values[f"t_{k}_{l}"] = bot_left[k - m - 1][l - 1]
            else:
                values[f"t_{k}_{l}"] = bot_right[k - m - 1][l - m - 1]

    _check_inverse(presentation, values)
    return values


def _check_inverse(presentation, values):
    ring = presentation.ring
    field = ring.field
    labels = ring.labels
    size = int(len(labels) ** 0.5)
    names = [[labels[r * size + c] for c in range(size)] for r in range(size)]
    power = max(values[lab].power for lab in labels)
    dpow = denominator_power(presentation, power)
    for k in range(size):
        for l in range(size):
            left = ring.zero()
            right = ring.zero()
            for s in range(size):
                left = left + values[names[k][s]].with_power(power).numerator * ring.gen(names[s][l])
                right = right + ring.gen(names[k][s]) * values[names[s][l]].with_power(power).numerator
            target = dpow if k == l else ring.zero()
            if left != target or right != target:
                raise BadShape("antipode table fails the inverse identity")


def gl_to_q_realization(q_presentation):
    """The algebra map from the doubled general linear catalog.

    Sends the four blocks of the generic 2n by 2n matrix to s, -s', s', s
    and intertwines the coproducts.
    """
    n = q_presentation.meta["n"]
    field = q_presentation.ring.field
    big = gl_bialgebra(n, n, field)
    images = {}
    for k in range(1, 2 * n + 1):
        for l in range(1, 2 * n + 1):
            kk = k if k <= n else k - n
            ll = l if l <= n else l - n
            if (k <= n) == (l <= n):
                img = q_presentation.ring.gen(f"s_{kk}_{ll}")
            elif k <= n:
                img = -q_presentation.ring.gen(f"sp_{kk}_{ll}")
            else:
                img = q_presentation.ring.gen(f"sp_{kk}_{ll}")
            images[f"t_{k}_{l}"] = img
    return big, RingMorphism(big.ring, q_presentation.ring, images)


def q_antipode(presentation):
    """Antipode values for the queer catalog via the doubled realization.

    Powers are measured against the queer denominator det(s); the doubled
    denominator maps to its square.
    """
    if presentation.meta.get("kind") != "q":
        raise BadParams("expected the queer catalog")
    n = presentation.meta["n"]
    big, phi = gl_to_q_realization(presentation)
    big_values = gl_antipode(big)
    values = {}
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            even = big_values[f"t_{k}_{l}"]
            odd = big_values[f"t_{k}_{l + n}"]
            values[f"s_{k}_{l}"] = LocalizedElement(
                presentation, phi.apply(even.numerator), 2 * even.power
            )
            values[f"sp_{k}_{l}"] = LocalizedElement(
                presentation, -phi.apply(odd.numerator), 2 * odd.power
            )
    _check_q_axiom(presentation, values)
    return values


def _check_q_axiom(presentation, values):
    ring = presentation.ring
    n = presentation.meta["n"]
    power = max(v.power for v in values.values())
    dpow = denominator_power(presentation, power)
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            even_side = ring.zero()
            odd_side = ring.zero()
            for t in range(1, n + 1):
                se = values[f"s_{k}_{t}"].with_power(power).numerator
                so = values[f"sp_{k}_{t}"].with_power(power).numerator
                even_side = even_side + se * ring.gen(f"s_{t}_{l}")
                even_side = even_side - so * ring.gen(f"sp_{t}_{l}")
                odd_side = odd_side + so * ring.gen(f"s_{t}_{l}")
                odd_side = odd_side + se * ring.gen(f"sp_{t}_{l}")
            target = dpow if k == l else ring.zero()
            if even_side != target or not odd_side.is_zero():
                raise BadShape("queer antipode fails the inverse identity")


def antipode_on_poly(presentation, values, poly):
    """Multiplicative extension of the antipode table to a polynomial."""
    ring = presentation.ring
    out = localized_constant(presentation, ring.field.zero)
    for mono, coeff in poly.terms.items():
        term = localized_constant(presentation, coeff)
        for g, e in mono:
            lab = ring.labels[g]
            for _ in range(e):
                term = term * values[lab]
        out = out + term
    return out
