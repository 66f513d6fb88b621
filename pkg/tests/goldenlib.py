"""Hand-entered expected tables behind the stored verification data.

Each builder returns the stored-data dictionary for one parameter set,
typed out term by term from the closed-form reduced coproduct and
coaction tables. The builders share nothing with the library code that
computes reduced coproducts, so agreement between the two is a real
check. A regeneration test compares the stored JSON files against these
tables and fails on any drift.

Serialization conventions match the stored files: a monomial is a list
of [label, exponent] pairs (the empty list is 1), a polynomial is a
list of [monomial, coefficient] pairs, and a tensor is a list of
[left monomial, right monomial, coefficient] triples.
"""

from __future__ import annotations

GL_CASES = [
    (1, 1, 1, 2),
    (2, 1, 1, 3),
    (2, 1, 2, 3),
    (1, 2, 1, 2),
    (1, 2, 1, 3),
    (2, 2, 1, 3),
    (2, 2, 1, 4),
    (2, 2, 2, 3),
    (2, 2, 2, 4),
]
GLMAX_CASES = [1, 2]
Q_CASES = [(2, 1, 2), (3, 1, 2)]
FAITHFUL_CASES = [(1, 1, 1, 2), (2, 1, 1, 3)]

ONE = []


def _m(*pairs):
    return [[lab, e] for lab, e in pairs]


def gl_golden(m, n, i, j, p):
    """Tables for the general linear catalog with one moved row and column.

    The class algebra is generated by the untouched matrix block, the
    p-th powers of the row i and column j generators, and the mixed
    classes y^(p-1) (x.y); the off-diagonal p-th powers of the moved
    rows reduce to the diagonal one, which stays group-like.
    """
    N = m + n
    others = [k for k in range(1, N + 1) if k not in (i, j)]
    even_cols = list(range(1, m + 1))
    odd_rows = [k for k in range(m + 1, N + 1) if k != j]

    def t(k, l):
        return f"t_{k}_{l}"

    def pw(k, l):
        return _m((t(k, l), p))

    def lam(k, l):
        if k == i:
            return _m((t(i, l), p - 1), (t(j, l), 1))
        return _m((t(k, i), 1), (t(k, j), p - 1))

    formulas = []
    for k in others:
        for l in others:
            formulas.append(
                {
                    "id": f"vx:{t(k, l)}",
                    "family": "vx",
                    "generator": [[_m((t(k, l), 1)), 1]],
                    "expected": [
                        [_m((t(k, s), 1)), _m((t(s, l), 1)), 1] for s in others
                    ],
                }
            )
    formulas.append(
        {
            "id": f"ypower:{t(i, i)}",
            "family": "ypower",
            "generator": [[pw(i, i), 1]],
            "expected": [[pw(i, i), pw(i, i), 1]],
        }
    )
    for l in even_cols:
        if l == i:
            continue
        formulas.append(
            {
                "id": f"ypower:{t(i, l)}",
                "family": "ypower",
                "generator": [[pw(i, l), 1]],
                "expected": [[pw(i, s), pw(s, l), 1] for s in even_cols],
            }
        )
    for k in odd_rows:
        formulas.append(
            {
                "id": f"ypower:{t(k, j)}",
                "family": "ypower",
                "generator": [[pw(k, j), 1]],
                "expected": [[pw(k, j), pw(i, i), 1]]
                + [[pw(k, s), pw(s, j), 1] for s in odd_rows],
            }
        )
    formulas.append(
        {
            "id": f"lambda:{t(i, i)}",
            "family": "lambda",
            "generator": [[lam(i, i), 1]],
            "expected": [
                [lam(i, i), pw(i, i), 1],
                [pw(i, i), lam(i, i), 1],
            ],
        }
    )
    for l in even_cols:
        if l == i:
            continue
        formulas.append(
            {
                "id": f"lambda:{t(i, l)}",
                "family": "lambda",
                "generator": [[lam(i, l), 1]],
                "expected": [[pw(i, i), lam(i, l), 1]]
                + [[lam(i, s), pw(s, l), 1] for s in even_cols],
            }
        )
    for k in odd_rows:
        formulas.append(
            {
                "id": f"lambda:{t(k, j)}",
                "family": "lambda",
                "generator": [[lam(k, j), 1]],
                "expected": [
                    [lam(k, j), pw(i, i), 1],
                    [pw(k, j), lam(i, i), 1],
                ]
                + [[pw(k, s), lam(s, j), 1] for s in odd_rows],
            }
        )

    split = {
        "vx": [t(k, l) for k in others for l in others],
        "u": [t(i, l) for l in range(1, N + 1)] + [t(k, j) for k in others],
        "xu": [[[_m((t(j, l), 1)), 1]] for l in range(1, N + 1) if l != j]
        + [[[_m((t(k, i), 1)), 1]] for k in others]
        + [[[_m((t(i, i), 1)), 1], [_m((t(j, j), 1)), -1]]],
    }

    def P(k, l):
        return f"P:{t(k, l)}"

    def L(k, l):
        return f"L:{t(k, l)}"

    r_items = [
        {
            "id": f"r:{P(i, i)}",
            "symbol": P(i, i),
            "expected": [[_m((P(i, i), 1)), _m((P(i, i), 1)), 1]],
        },
        {
            "id": f"r:{L(i, i)}",
            "symbol": L(i, i),
            "expected": [
                [_m((L(i, i), 1)), _m((P(i, i), 1)), 1],
                [_m((P(i, i), 1)), _m((L(i, i), 1)), 1],
            ],
        },
    ]
    s_items = [
        {
            "id": f"s:{L(i, i)}",
            "symbol": L(i, i),
            "expected": [
                [_m((L(i, i), 1)), ONE, 1],
                [ONE, _m((L(i, i), 1)), 1],
            ],
        }
    ]
    for l in even_cols:
        if l == i:
            continue
        r_items.append(
            {
                "id": f"r:{P(i, l)}",
                "symbol": P(i, l),
                "expected": [
                    [_m((P(i, i), 1)), _m((P(i, l), 1)), 1],
                    [_m((P(i, l), 1)), ONE, 1],
                ],
            }
        )
        r_items.append(
            {
                "id": f"r:{L(i, l)}",
                "symbol": L(i, l),
                "expected": [
                    [_m((P(i, i), 1)), _m((L(i, l), 1)), 1],
                    [_m((L(i, i), 1)), _m((P(i, l), 1)), 1],
                    [_m((L(i, l), 1)), ONE, 1],
                ],
            }
        )
        s_items.append(
            {
                "id": f"s:{P(i, l)}",
                "symbol": P(i, l),
                "expected": [
                    [_m((P(i, l), 1)), ONE, 1],
                    [ONE, _m((P(i, l), 1)), 1],
                ],
            }
        )
        s_items.append(
            {
                "id": f"s:{L(i, l)}",
                "symbol": L(i, l),
                "expected": [
                    [_m((L(i, l), 1)), ONE, 1],
                    [ONE, _m((L(i, l), 1)), 1],
                    [_m((L(i, i), 1)), _m((P(i, l), 1)), 1],
                ],
            }
        )
    for k in odd_rows:
        r_items.append(
            {
                "id": f"r:{P(k, j)}",
                "symbol": P(k, j),
                "expected": [
                    [_m((P(k, j), 1)), _m((P(i, i), 1)), 1],
                    [ONE, _m((P(k, j), 1)), 1],
                ],
            }
        )
        r_items.append(
            {
                "id": f"r:{L(k, j)}",
                "symbol": L(k, j),
                "expected": [
                    [_m((L(k, j), 1)), _m((P(i, i), 1)), 1],
                    [_m((P(k, j), 1)), _m((L(i, i), 1)), 1],
                    [ONE, _m((L(k, j), 1)), 1],
                ],
            }
        )
        s_items.append(
            {
                "id": f"s:{P(k, j)}",
                "symbol": P(k, j),
                "expected": [
                    [_m((P(k, j), 1)), ONE, 1],
                    [ONE, _m((P(k, j), 1)), 1],
                ],
            }
        )
        s_items.append(
            {
                "id": f"s:{L(k, j)}",
                "symbol": L(k, j),
                "expected": [
                    [_m((L(k, j), 1)), ONE, 1],
                    [ONE, _m((L(k, j), 1)), 1],
                    [_m((P(k, j), 1)), _m((L(i, i), 1)), 1],
                ],
            }
        )
    return {
        "case": f"gl_m{m}n{n}_i{i}j{j}_p{p}",
        "params": {"m": m, "n": n, "i": i, "j": j, "p": p},
        "formulas": formulas,
        "split": split,
        "presentations": {"r": r_items, "s": s_items},
    }


def glmax_golden(n, p):
    """Tables for the square catalog with the odd element of full rank.

    Nothing is fixed by the conjugation, so the class algebra has no
    block part: it is generated by the p-th powers of the upper rows
    and the mixed classes, whose reduced coproducts follow a plain
    matrix pattern in the symbols.
    """

    def t(k, l):
        return f"t_{k}_{l}"

    def pw(k, l):
        return _m((t(k, l), p))

    def lam(k, l):
        return _m((t(k, l), p - 1), (t(k + n, l), 1))

    rng = range(1, n + 1)
    formulas = []
    for k in rng:
        for l in rng:
            formulas.append(
                {
                    "id": f"ypower:{t(k, l)}",
                    "family": "ypower",
                    "generator": [[pw(k, l), 1]],
                    "expected": [[pw(k, s), pw(s, l), 1] for s in rng],
                }
            )
    for k in rng:
        for l in rng:
            formulas.append(
                {
                    "id": f"lambda:{t(k, l)}",
                    "family": "lambda",
                    "generator": [[lam(k, l), 1]],
                    "expected": [[lam(k, s), pw(s, l), 1] for s in rng]
                    + [[pw(k, s), lam(s, l), 1] for s in rng],
                }
            )
    split = {
        "vx": [],
        "u": [t(k, l) for k in rng for l in range(1, 2 * n + 1)],
        "xu": [[[_m((t(k + n, l), 1)), 1]] for k in rng for l in rng]
        + [
            [[_m((t(k, l), 1)), 1], [_m((t(k + n, l + n), 1)), -1]]
            for k in rng
            for l in rng
        ],
    }
    cent = []
    for k in rng:
        for l in rng:
            cent.append(
                {
                    "id": f"cent:P:{t(k, l)}",
                    "symbol": f"P:{t(k, l)}",
                    "expected": [
                        [_m((f"P:{t(k, s)}", 1)), _m((f"P:{t(s, l)}", 1)), 1]
                        for s in rng
                    ],
                }
            )
            cent.append(
                {
                    "id": f"cent:L:{t(k, l)}",
                    "symbol": f"L:{t(k, l)}",
                    "expected": [
                        [_m((f"L:{t(k, s)}", 1)), _m((f"P:{t(s, l)}", 1)), 1]
                        for s in rng
                    ]
                    + [
                        [_m((f"P:{t(k, s)}", 1)), _m((f"L:{t(s, l)}", 1)), 1]
                        for s in rng
                    ],
                }
            )
    return {
        "case": f"glmax_n{n}_p{p}",
        "params": {"n": n, "p": p},
        "formulas": formulas,
        "split": split,
        "presentations": {"cent": cent},
    }


def q_golden(n, i, j, p):
    """Tables for the queer catalog at the odd element moving row i to j.

    The even leaders are the s generators of row i and of column j. The
    partner of s_ij is the odd combination wo = sp_jj + sp_ii, so the
    class of s_ij^(p-1) wo plays the role the diagonal mixed class plays
    for the other leaders; its reduced coproduct carries companion terms
    on both tensor legs.
    """
    others = [k for k in range(1, n + 1) if k not in (i, j)]
    nonj = [v for v in range(1, n + 1) if v != j]

    def s(k, l):
        return f"s_{k}_{l}"

    def sp(k, l):
        return f"sp_{k}_{l}"

    def pw(k, l):
        return _m((s(k, l), p))

    def lam(k, l):
        if (k, l) == (i, j):
            return _m((s(i, j), p - 1), ("wo", 1))
        if k == i:
            return _m((s(i, l), p - 1), (sp(j, l), 1))
        return _m((s(k, j), p - 1), (sp(k, i), 1))

    formulas = []
    for k in others:
        for l in others:
            formulas.append(
                {
                    "id": f"vx:{s(k, l)}",
                    "family": "vx",
                    "generator": [[_m((s(k, l), 1)), 1]],
                    "expected": [
                        [_m((s(k, v), 1)), _m((s(v, l), 1)), 1] for v in others
                    ]
                    + [
                        [_m((sp(k, v), 1)), _m((sp(v, l), 1)), -1] for v in others
                    ],
                }
            )
            formulas.append(
                {
                    "id": f"vx:{sp(k, l)}",
                    "family": "vx",
                    "generator": [[_m((sp(k, l), 1)), 1]],
                    "expected": [
                        [_m((sp(k, v), 1)), _m((s(v, l), 1)), 1] for v in others
                    ]
                    + [
                        [_m((s(k, v), 1)), _m((sp(v, l), 1)), 1] for v in others
                    ],
                }
            )
    formulas.append(
        {
            "id": f"ypower:{s(i, i)}",
            "family": "ypower",
            "generator": [[pw(i, i), 1]],
            "expected": [[pw(i, i), pw(i, i), 1]],
        }
    )
    formulas.append(
        {
            "id": f"ypower:{s(i, j)}",
            "family": "ypower",
            "generator": [[pw(i, j), 1]],
            "expected": [
                [pw(i, i), pw(i, j), 1],
                [pw(i, j), pw(i, i), 1],
            ]
            + [[pw(i, v), pw(v, j), 1] for v in others],
        }
    )
    for l in others:
        formulas.append(
            {
                "id": f"ypower:{s(i, l)}",
                "family": "ypower",
                "generator": [[pw(i, l), 1]],
                "expected": [[pw(i, v), pw(v, l), 1] for v in nonj],
            }
        )
    for k in others:
        formulas.append(
            {
                "id": f"ypower:{s(k, j)}",
                "family": "ypower",
                "generator": [[pw(k, j), 1]],
                "expected": [[pw(k, j), pw(i, i), 1]]
                + [[pw(k, v), pw(v, j), 1] for v in others],
            }
        )
    formulas.append(
        {
            "id": f"lambda:{s(i, i)}",
            "family": "lambda",
            "generator": [[lam(i, i), 1]],
            "expected": [
                [lam(i, i), pw(i, i), 1],
                [pw(i, i), lam(i, i), 1],
            ],
        }
    )
    for l in others:
        formulas.append(
            {
                "id": f"lambda:{s(i, l)}",
                "family": "lambda",
                "generator": [[lam(i, l), 1]],
                "expected": [[lam(i, v), pw(v, l), 1] for v in nonj]
                + [[pw(i, i), lam(i, l), 1]],
            }
        )
    for k in others:
        formulas.append(
            {
                "id": f"lambda:{s(k, j)}",
                "family": "lambda",
                "generator": [[lam(k, j), 1]],
                "expected": [
                    [lam(k, j), pw(i, i), 1],
                    [pw(k, j), lam(i, i), 1],
                ]
                + [[pw(k, v), lam(v, j), 1] for v in others],
            }
        )
    formulas.append(
        {
            "id": f"lambda:{s(i, j)}",
            "family": "lambda",
            "generator": [
                [_m((s(i, j), p - 1), (sp(j, j), 1)), 1],
                [_m((s(i, j), p - 1), (sp(i, i), 1)), 1],
            ],
            "expected": [[lam(i, v), pw(v, j), 1] for v in nonj]
            + [
                [lam(i, j), pw(i, i), 1],
                [pw(i, i), lam(i, j), 1],
                [pw(i, j), lam(i, i), 1],
            ]
            + [[pw(i, v), lam(v, j), 1] for v in others],
        }
    )

    split = {
        "vx": [s(k, l) for k in others for l in others]
        + [sp(k, l) for k in others for l in others],
        "u": [s(i, l) for l in range(1, n + 1)]
        + [sp(i, l) for l in range(1, n + 1)]
        + [s(k, j) for k in others]
        + [sp(k, j) for k in others],
        "xu": [[[_m((sp(j, l), 1)), 1]] for l in range(1, n + 1) if l != j]
        + [[[_m((s(j, l), 1)), 1]] for l in range(1, n + 1) if l != j]
        + [[[_m((sp(k, i), 1)), 1]] for k in others]
        + [[[_m((s(k, i), 1)), 1]] for k in others]
        + [
            [[_m((sp(j, j), 1)), 1], [_m((sp(i, i), 1)), 1]],
            [[_m((s(j, j), 1)), 1], [_m((s(i, i), 1)), -1]],
        ],
    }

    def P(k, l):
        return f"P:{s(k, l)}"

    def L(k, l):
        return f"L:{s(k, l)}"

    r_items = [
        {
            "id": f"r:{P(i, i)}",
            "symbol": P(i, i),
            "expected": [[_m((P(i, i), 1)), _m((P(i, i), 1)), 1]],
        },
        {
            "id": f"r:{P(i, j)}",
            "symbol": P(i, j),
            "expected": [
                [_m((P(i, i), 1)), _m((P(i, j), 1)), 1],
                [_m((P(i, j), 1)), _m((P(i, i), 1)), 1],
            ]
            + [[_m((P(i, v), 1)), _m((P(v, j), 1)), 1] for v in others],
        },
        {
            "id": f"r:{L(i, i)}",
            "symbol": L(i, i),
            "expected": [
                [_m((L(i, i), 1)), _m((P(i, i), 1)), 1],
                [_m((P(i, i), 1)), _m((L(i, i), 1)), 1],
            ],
        },
        {
            "id": f"r:{L(i, j)}",
            "symbol": L(i, j),
            "expected": [[_m((L(i, i), 1)), _m((P(i, j), 1)), 1]]
            + [[_m((L(i, v), 1)), _m((P(v, j), 1)), 1] for v in others]
            + [
                [_m((L(i, j), 1)), _m((P(i, i), 1)), 1],
                [_m((P(i, i), 1)), _m((L(i, j), 1)), 1],
                [_m((P(i, j), 1)), _m((L(i, i), 1)), 1],
            ]
            + [[_m((P(i, v), 1)), _m((L(v, j), 1)), 1] for v in others],
        },
    ]
    m_items = [
        {
            "id": f"m:{P(i, j)}",
            "symbol": P(i, j),
            "expected": [
                [_m((P(i, j), 1)), ONE, 1],
                [ONE, _m((P(i, j), 1)), 1],
            ]
            + [[_m((P(i, v), 1)), _m((P(v, j), 1)), 1] for v in others],
        },
        {
            "id": f"m:{L(i, i)}",
            "symbol": L(i, i),
            "expected": [
                [_m((L(i, i), 1)), ONE, 1],
                [ONE, _m((L(i, i), 1)), 1],
            ],
        },
        {
            "id": f"m:{L(i, j)}",
            "symbol": L(i, j),
            "expected": [
                [_m((L(i, j), 1)), ONE, 1],
                [ONE, _m((L(i, j), 1)), 1],
                [_m((L(i, i), 1)), _m((P(i, j), 1)), 1],
            ]
            + [[_m((L(i, v), 1)), _m((P(v, j), 1)), 1] for v in others]
            + [[_m((P(i, j), 1)), _m((L(i, i), 1)), 1]]
            + [[_m((P(i, v), 1)), _m((L(v, j), 1)), 1] for v in others],
        },
    ]
    for l in others:
        r_items.append(
            {
                "id": f"r:{P(i, l)}",
                "symbol": P(i, l),
                "expected": [
                    [_m((P(i, l), 1)), ONE, 1],
                    [_m((P(i, i), 1)), _m((P(i, l), 1)), 1],
                ],
            }
        )
        r_items.append(
            {
                "id": f"r:{L(i, l)}",
                "symbol": L(i, l),
                "expected": [
                    [_m((L(i, l), 1)), ONE, 1],
                    [_m((P(i, i), 1)), _m((L(i, l), 1)), 1],
                    [_m((L(i, i), 1)), _m((P(i, l), 1)), 1],
                ],
            }
        )
        m_items.append(
            {
                "id": f"m:{P(i, l)}",
                "symbol": P(i, l),
                "expected": [
                    [_m((P(i, l), 1)), ONE, 1],
                    [ONE, _m((P(i, l), 1)), 1],
                ],
            }
        )
        m_items.append(
            {
                "id": f"m:{L(i, l)}",
                "symbol": L(i, l),
                "expected": [
                    [_m((L(i, l), 1)), ONE, 1],
                    [ONE, _m((L(i, l), 1)), 1],
                    [_m((L(i, i), 1)), _m((P(i, l), 1)), 1],
                ],
            }
        )
    for k in others:
        r_items.append(
            {
                "id": f"r:{P(k, j)}",
                "symbol": P(k, j),
                "expected": [
                    [ONE, _m((P(k, j), 1)), 1],
                    [_m((P(k, j), 1)), _m((P(i, i), 1)), 1],
                ],
            }
        )
        r_items.append(
            {
                "id": f"r:{L(k, j)}",
                "symbol": L(k, j),
                "expected": [
                    [_m((L(k, j), 1)), _m((P(i, i), 1)), 1],
                    [_m((P(k, j), 1)), _m((L(i, i), 1)), 1],
                    [ONE, _m((L(k, j), 1)), 1],
                ],
            }
        )
        m_items.append(
            {
                "id": f"m:{P(k, j)}",
                "symbol": P(k, j),
                "expected": [
                    [_m((P(k, j), 1)), ONE, 1],
                    [ONE, _m((P(k, j), 1)), 1],
                ],
            }
        )
        m_items.append(
            {
                "id": f"m:{L(k, j)}",
                "symbol": L(k, j),
                "expected": [
                    [_m((L(k, j), 1)), ONE, 1],
                    [ONE, _m((L(k, j), 1)), 1],
                    [_m((P(k, j), 1)), _m((L(i, i), 1)), 1],
                ],
            }
        )
    return {
        "case": f"q_n{n}_i{i}j{j}_p{p}",
        "params": {"n": n, "i": i, "j": j, "p": p},
        "formulas": formulas,
        "split": split,
        "presentations": {"r": r_items, "m": m_items},
    }


def faithful_golden(m, n, i, j, p):
    """Coaction coefficient tables for both truncated comodule sides.

    Natural side rows are plain reduced values. Dual side rows carry
    symbolic right hand coefficients: antipode entries of a single
    generator, of a p-th power, or of a mixed class, and the inverse of
    the group-like diagonal p-th power.
    """
    N = m + n
    others = [k for k in range(1, N + 1) if k not in (i, j)]
    odd_rows = [k for k in range(m + 1, N + 1) if k != j]

    def t(k, l):
        return f"t_{k}_{l}"

    w_items = []
    for l in others:
        w_items.append(
            {
                "id": f"wcoact:free:e_{l}",
                "module": [[_m((f"e_{l}", 1)), 1]],
                "entries": [
                    [_m((f"e_{k}", 1)), ["mono", _m((t(k, l), 1))], 1]
                    for k in others
                ],
            }
        )
    w_items.append(
        {
            "id": "wcoact:pth",
            "module": [[_m((f"e_{j}", p)), 1]],
            "entries": [[_m((f"e_{j}", p)), ["mono", _m((t(i, i), p))], 1]]
            + [
                [_m((f"e_{k}", p)), ["mono", _m((t(k, j), p))], 1]
                for k in odd_rows
            ],
        }
    )
    w_items.append(
        {
            "id": "wcoact:lambda",
            "module": [[_m((f"e_{i}", 1), (f"e_{j}", p - 1)), 1]],
            "entries": [
                [
                    _m((f"e_{k}", p)),
                    ["mono", _m((t(k, i), 1), (t(k, j), p - 1))],
                    1,
                ]
                for k in odd_rows
            ]
            + [
                [
                    _m((f"e_{i}", 1), (f"e_{j}", p - 1)),
                    ["mono", _m((t(i, i), p))],
                    1,
                ],
                [
                    _m((f"e_{j}", p)),
                    ["mono", _m((t(i, i), p - 1), (t(j, i), 1))],
                    1,
                ],
            ],
        }
    )
    s_items = []
    for l in others:
        s_items.append(
            {
                "id": f"scoact:free:f_{l}",
                "module": [[_m((f"f_{l}", 1)), 1]],
                "entries": [
                    [_m((f"f_{k}", 1)), ["S", l, k], _dual_sign(m, l, k)]
                    for k in others
                ],
            }
        )
    s_items.append(
        {
            "id": "scoact:pth",
            "module": [[_m((f"f_{i}", p)), 1]],
            "entries": [[_m((f"f_{i}", p)), ["tinv"], 1]]
            + [
                [_m((f"f_{k}", p)), ["Spow", k], 1]
                for k in range(1, m + 1)
                if k != i
            ],
        }
    )
    s_items.append(
        {
            "id": "scoact:lambda",
            "module": [[_m((f"f_{i}", p - 1), (f"f_{j}", 1)), 1]],
            "entries": [
                [_m((f"f_{k}", p)), ["Slam", k], 1] for k in range(1, m + 1)
            ]
            + [[_m((f"f_{i}", p - 1), (f"f_{j}", 1)), ["tinv"], 1]],
        }
    )
    return {
        "case": f"faithful_m{m}n{n}_i{i}j{j}_p{p}",
        "params": {"m": m, "n": n, "i": i, "j": j, "p": p},
        "w": w_items,
        "s": s_items,
    }


def _dual_sign(m, l, k):
    pk = 0 if k <= m else 1
    pl = 0 if l <= m else 1
    return -1 if pk * (pk + pl) % 2 else 1


def all_goldens(p=3):
    """Every stored case keyed by its identifier."""
    out = {}
    for m, n, i, j in GL_CASES:
        g = gl_golden(m, n, i, j, p)
        out[g["case"]] = g
    for n in GLMAX_CASES:
        g = glmax_golden(n, p)
        out[g["case"]] = g
    for n, i, j in Q_CASES:
        g = q_golden(n, i, j, p)
        out[g["case"]] = g
    for m, n, i, j in FAITHFUL_CASES:
        g = faithful_golden(m, n, i, j, p)
        out[g["case"]] = g
    return out
