"""Verification reports and the suite registry behind the command line.

A report is a flat list of check records. Each record carries a formula
identifier, the source of its expected value (stored golden data or an
independent derivation), the computed value, and exactly one verdict out
of pass, fail, inconclusive. Serialization is canonical: sorted keys, no
timestamps, stable check order, so identical parameters and seed produce
identical bytes. Wall-clock time lives on the in-memory object only.

Expected values never come from the code path that produced the computed
value: they are stored tables, closed-form counts, or an independent
algorithm for the same question.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dataclass_field

from . import weights
from .complexes import (
    cartier_map,
    cohomology,
    divided_power_class,
    expected_de_rham_dims,
    koszul_strand,
    p_restricted_de_rham,
    r_prime_subcomplex,
)
from .dsfunctor import (
    direct_sum_operator,
    ds,
    dual_operator,
    random_operator,
    tensor_operator,
)
from .errors import BadParams, NotASubspace, SuperDSError, UnknownSuite
from .fields import PrimeField
from .linalg import Subspace
from .oddmodules import INCONCLUSIVE, OddModule, find_witness
from .supergroups.catalogs import (
    gl_bialgebra,
    gl_lie,
    gl_maxrank_element,
    gl_rank_one_element,
    lie_centralizer_and_bracket,
    q_bialgebra,
    split_generator_space,
)
from .supergroups.faithful import faithful_module_coefficients
from .supergroups.gtilde import (
    gl_gtilde_presentation,
    gl_maxrank_check,
    q_gtilde_formulas,
)
from .supergroups.localized import gl_antipode, gl_to_q_realization, q_antipode
from .superpoly import RingMorphism

__all__ = [
    "CheckRecord",
    "VerificationReport",
    "run_suite",
    "available_suites",
    "PASS",
    "FAIL",
    "INCONCLUSIVE_VERDICT",
]

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE_VERDICT = "inconclusive"
_VERDICTS = (PASS, FAIL, INCONCLUSIVE_VERDICT)


def _plain(value):
    """Normalize a value into JSON-serializable plain data."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return value
    return str(value)


@dataclass(frozen=True)
class CheckRecord:
    """One verified claim inside a report."""

    formula: str
    source: str
    expected: object
    computed: object
    verdict: str

    def __post_init__(self):
        if self.verdict not in _VERDICTS:
            raise BadParams(f"verdict must be one of {_VERDICTS}")

    def to_dict(self):
        return {
            "formula": self.formula,
            "source": self.source,
            "expected": _plain(self.expected),
            "computed": _plain(self.computed),
            "verdict": self.verdict,
        }


def _record(formula, source, expected, computed, ok=None):
    if ok is None:
        ok = _plain(expected) == _plain(computed)
    return CheckRecord(
        formula=formula,
        source=source,
        expected=expected,
        computed=computed,
        verdict=PASS if ok else FAIL,
    )


def _from_table(table):
    """Flatten a formula table into check records, order preserved."""
    out = []
    for check in table.checks:
        out.append(
            CheckRecord(
                formula=check.formula_id,
                source=check.expected_source,
                expected=check.expected,
                computed=check.computed,
                verdict=PASS if check.passed else FAIL,
            )
        )
    return out


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    checks: list
    seed: object = None
    elapsed: float = 0.0

    @property
    def passed(self):
        return all(c.verdict != FAIL for c in self.checks)

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def summary(self):
        counts = {v: 0 for v in _VERDICTS}
        for c in self.checks:
            counts[c.verdict] += 1
        return counts

    def to_dict(self):
        return {
            "suite": self.suite,
            "parameters": _plain(self.parameters),
            "seed": self.seed,
            "summary": self.summary(),
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json_bytes(self):
        text = json.dumps(self.to_dict(), sort_keys=True, indent=2)
        return (text + "\n").encode("utf-8")

    def to_markdown(self):
        lines = [f"# suite {self.suite}"]
        rendered = []
        for k, v in sorted(self.parameters.items()):
            text = f"{k}={_plain(v)}"
            if len(text) > 72:
                text = text[:69] + "..."
            rendered.append(text)
        lines.append(f"parameters: {', '.join(rendered) or 'none'}")
        lines.append(f"seed: {self.seed}")
        counts = self.summary()
        lines.append(
            "verdicts: {pass} pass, {fail} fail, {inconclusive} inconclusive".format(
                **counts
            )
        )
        lines.append("")
        lines.append("| check | source | verdict |")
        lines.append("| --- | --- | --- |")
        for c in self.checks:
            lines.append(f"| {c.formula} | {c.source} | {c.verdict} |")
        failures = [c for c in self.checks if c.verdict == FAIL]
        if failures:
            lines.append("")
            lines.append("## diffs")
            for c in failures:
                lines.append(f"### {c.formula}")
                lines.append("expected:")
                lines.append("```")
                lines.append(json.dumps(_plain(c.expected), sort_keys=True, indent=2))
                lines.append("```")
                lines.append("computed:")
                lines.append("```")
                lines.append(json.dumps(_plain(c.computed), sort_keys=True, indent=2))
                lines.append("```")
        return "\n".join(lines) + "\n"


def _is_odd_prime(p):
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _take_int(params, key, low=None, high=None, default=_plain):
    if key not in params:
        if default is not _plain:
            return default
        raise BadParams(f"missing parameter {key!r}")
    value = params[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise BadParams(f"parameter {key!r} must be an integer")
    if low is not None and value < low:
        raise BadParams(f"parameter {key!r} must be at least {low}")
    if high is not None and value > high:
        raise BadParams(f"parameter {key!r} must be at most {high}")
    return value


def _take_prime(params, key="p"):
    p = _take_int(params, key, low=3)
    if not _is_odd_prime(p):
        raise BadParams(f"parameter {key!r} must be an odd prime")
    return p


def _take_weight(params, key):
    if key not in params:
        raise BadParams(f"missing parameter {key!r}")
    value = params[key]
    if not isinstance(value, (list, tuple)) or not value:
        raise BadParams(f"parameter {key!r} must be a nonempty integer vector")
    out = []
    for x in value:
        if isinstance(x, bool) or not isinstance(x, int):
            raise BadParams(f"parameter {key!r} must contain integers only")
        out.append(x)
    return tuple(out)


def _reject_extra(params, allowed):
    extra = set(params) - set(allowed)
    if extra:
        raise BadParams(f"unknown parameters {sorted(extra)}")


def _poly_vector(piece, poly):
    v = [piece.field.zero] * piece.dim
    for mono, coeff in poly.terms.items():
        v[piece.index(mono)] = coeff
    return v


def _projected_rank(piece_cohomology, vectors):
    space = piece_cohomology.quotient.space
    return Subspace(space, vectors).dim


def _subsets_of(s):
    out = [[]]
    for i in range(s):
        out += [sub + [i] for sub in out]
    return [tuple(sub) for sub in out]


def _suite_derham(params, seed):
    _reject_extra(params, {"p", "s"})
    p = _take_prime(params)
    s = _take_int(params, "s", low=1, high=6)
    complex_ = p_restricted_de_rham(s, p)
    pieces_h = cohomology(complex_)
    dims = [h.dim for h in pieces_h]
    checks = [
        _record("derham:graded_dims", "derived", expected_de_rham_dims(s), dims),
        _record("derham:total_dim", "derived", 2 ** s, sum(dims)),
    ]

    by_size = {}
    for J in _subsets_of(s):
        by_size.setdefault(len(J), []).append(J)
    ranks = []
    cocycles = True
    for q in range(s + 1):
        projected = []
        for J in by_size.get(q, []):
            form = divided_power_class(complex_.ring, s, J)
            v = _poly_vector(complex_.pieces[q], form)
            try:
                projected.append(pieces_h[q].project(v))
            except NotASubspace:
                cocycles = False
        ranks.append(_projected_rank(pieces_h[q], projected))
    checks.append(
        _record(
            "derham:divided_power_basis",
            "derived",
            {"cocycles": True, "ranks": expected_de_rham_dims(s)},
            {"cocycles": cocycles, "ranks": ranks},
        )
    )

    cartier = cartier_map(s, p)
    zero = tuple([0] * s)
    twist_ranks = []
    twist_cocycles = True
    for q in range(s + 1):
        projected = []
        for J in by_size.get(q, []):
            image = cartier.image_of(zero, J)
            v = _poly_vector(complex_.pieces[q], image)
            try:
                projected.append(pieces_h[q].project(v))
            except NotASubspace:
                twist_cocycles = False
        twist_ranks.append(_projected_rank(pieces_h[q], projected))
    checks.append(
        _record(
            "cartier:image_classes",
            "derived",
            {"cocycles": True, "ranks": dims},
            {"cocycles": twist_cocycles, "ranks": twist_ranks},
        )
    )

    prime_dims = [h.dim for h in cohomology(r_prime_subcomplex(s, p))]
    checks.append(
        _record("rprime:acyclic", "derived", [0] * (s + 1), prime_dims)
    )
    return checks


def _suite_koszul(params, seed):
    _reject_extra(params, {"p", "t", "dmax"})
    p = _take_prime(params)
    t = _take_int(params, "t", low=1, high=4)
    dmax = _take_int(params, "dmax", low=0, high=8)
    field = PrimeField(p)
    checks = []
    for d in range(dmax + 1):
        strand = koszul_strand(t, d, field)
        dims = [h.dim for h in cohomology(strand)]
        expected = [1] if d == 0 else [0] * len(dims)
        checks.append(
            _record(f"koszul:strand_degree_{d}", "derived", expected, dims)
        )
    return checks


def _suite_hopf(params, seed):
    _reject_extra(params, {"p", "m", "n"})
    p = _take_prime(params)
    n = _take_int(params, "n", low=0, high=4)
    m = _take_int(params, "m", low=0, high=4, default=None)
    field = PrimeField(p)
    checks = []
    if m is None:
        if n < 1:
            raise BadParams("the queer catalog needs n >= 1")
        try:
            presentation = q_bialgebra(n, field)
            checks.append(
                _record("bialgebra:axioms", "derived", "hold", "hold", ok=True)
            )
        except SuperDSError as exc:
            checks.append(_record("bialgebra:axioms", "derived", "hold", str(exc), ok=False))
            return checks
        try:
            q_antipode(presentation)
            checks.append(
                _record("antipode:two_sided_inverse", "derived", "hold", "hold", ok=True)
            )
        except SuperDSError as exc:
            checks.append(
                _record("antipode:two_sided_inverse", "derived", "hold", str(exc), ok=False)
            )
        big, phi = gl_to_q_realization(presentation)
        tsq_small = presentation.tsq
        legs = {}
        for lab in big.ring.labels:
            image = phi.apply(big.ring.gen(lab))
            legs[("l", lab)] = tsq_small.embed_left.apply(image)
            legs[("r", lab)] = tsq_small.embed_right.apply(image)
        both = RingMorphism(big.tsq.ring, tsq_small.ring, legs)
        mismatches = [
            lab
            for lab in big.ring.labels
            if both.apply(big.coproduct[lab])
            != presentation.delta(phi.apply(big.ring.gen(lab)))
        ]
        checks.append(
            _record("realization:coproduct_intertwines", "derived", [], mismatches)
        )
        return checks
    if m + n < 1:
        raise BadParams("need at least one index")
    try:
        presentation = gl_bialgebra(m, n, field)
        checks.append(_record("bialgebra:axioms", "derived", "hold", "hold", ok=True))
    except SuperDSError as exc:
        checks.append(_record("bialgebra:axioms", "derived", "hold", str(exc), ok=False))
        return checks
    try:
        gl_antipode(presentation)
        checks.append(
            _record("antipode:two_sided_inverse", "derived", "hold", "hold", ok=True)
        )
    except SuperDSError as exc:
        checks.append(
            _record("antipode:two_sided_inverse", "derived", "hold", str(exc), ok=False)
        )
    return checks


def _suite_gl(params, seed):
    _reject_extra(params, {"p", "m", "n", "i", "j"})
    p = _take_prime(params)
    m = _take_int(params, "m", low=1, high=3)
    n = _take_int(params, "n", low=1, high=3)
    i = _take_int(params, "i", low=1, high=m)
    j = _take_int(params, "j", low=m + 1, high=m + n)
    _, table = gl_gtilde_presentation(m, n, i, j, p)
    return _from_table(table)


def _suite_gl_maxrank(params, seed):
    _reject_extra(params, {"p", "n"})
    p = _take_prime(params)
    n = _take_int(params, "n", low=1, high=2)
    return _from_table(gl_maxrank_check(n, p))


def _suite_q(params, seed):
    _reject_extra(params, {"p", "n", "i", "j"})
    p = _take_prime(params)
    n = _take_int(params, "n", low=2, high=3)
    i = _take_int(params, "i", low=1, high=n)
    j = _take_int(params, "j", low=1, high=n)
    if i == j:
        raise BadParams("need two distinct indices")
    return _from_table(q_gtilde_formulas(n, i, j, p))


def _suite_faithful(params, seed):
    _reject_extra(params, {"p", "m", "n", "i", "j"})
    p = _take_prime(params)
    m = _take_int(params, "m", low=1, high=3)
    n = _take_int(params, "n", low=1, high=3)
    i = _take_int(params, "i", low=1, high=m)
    j = _take_int(params, "j", low=m + 1, high=m + n)
    return _from_table(faithful_module_coefficients(m, n, i, j, p))


def _graded_dims(result):
    parity = result.cohomology.parity
    return (parity.count(0), parity.count(1))


def _suite_ds(params, seed):
    _reject_extra(params, {"p", "m", "n", "t"})
    p = _take_prime(params)
    m = _take_int(params, "m", low=0, high=6)
    n = _take_int(params, "n", low=0, high=6)
    trials = _take_int(params, "t", low=1, high=2000)
    field = PrimeField(p)
    rng = random.Random(seed)
    violations = {"rank_dimension": 0, "direct_sum": 0, "tensor": 0, "dual": 0}
    for _ in range(trials):
        x_m = random_operator(rng, field, rng.randint(0, m), rng.randint(0, n))
        x_n = random_operator(rng, field, rng.randint(0, m), rng.randint(0, n))
        d_m, d_n = ds(x_m), ds(x_n)
        if d_m.dim != x_m.space.dim - 2 * d_m.rank:
            violations["rank_dimension"] += 1
        a_e, a_o = _graded_dims(d_m)
        b_e, b_o = _graded_dims(d_n)
        if _graded_dims(ds(direct_sum_operator(x_m, x_n))) != (a_e + b_e, a_o + b_o):
            violations["direct_sum"] += 1
        expected_tensor = (a_e * b_e + a_o * b_o, a_e * b_o + a_o * b_e)
        if _graded_dims(ds(tensor_operator(x_m, x_n))) != expected_tensor:
            violations["tensor"] += 1
        if _graded_dims(ds(dual_operator(x_m))) != (a_e, a_o):
            violations["dual"] += 1
    checks = []
    for law in ("rank_dimension", "direct_sum", "tensor", "dual"):
        checks.append(
            _record(
                f"law:{law}",
                "derived",
                {"trials": trials, "violations": 0},
                {"trials": trials, "violations": violations[law]},
            )
        )
    return checks


def _deletion_map(m, n, i, j):
    """Old index -> new index once row/column i and j are removed."""
    keep = [k for k in range(1, m + n + 1) if k not in (i, j)]
    return {old: new for new, old in enumerate(keep, start=1)}


def _suite_lie(params, seed):
    _reject_extra(params, {"p", "m", "n", "i", "j"})
    p = _take_prime(params)
    m = _take_int(params, "m", low=1, high=3)
    n = _take_int(params, "n", low=1, high=3)
    i = _take_int(params, "i", low=1, high=m, default=None)
    j = _take_int(params, "j", low=m + 1, high=m + n, default=None)
    if (i is None) != (j is None):
        raise BadParams("give both indices or neither")
    field = PrimeField(p)
    algebra = gl_lie(m, n, field)
    presentation = gl_bialgebra(m, n, field)
    if i is None:
        if m != n:
            raise BadParams("the maximal rank element needs a square shape")
        x = gl_maxrank_element(algebra)
    else:
        x = gl_rank_one_element(algebra, i, j)
    quotient = lie_centralizer_and_bracket(algebra, x)
    split = split_generator_space(presentation, x)
    checks = [
        _record(
            "lie:bracket_image_dim",
            "derived",
            split.image.dim,
            quotient.bracket_image_dim,
        ),
        _record(
            "lie:classes_dim", "derived", split.classes_dim, quotient.space.dim
        ),
    ]
    if i is None:
        checks.append(_record("lie:maxrank_trivial", "derived", 0, quotient.space.dim))
        return checks
    if m + n == 2:
        checks.append(_record("lie:deletion_trivial", "derived", 0, quotient.space.dim))
        return checks
    small = gl_lie(m - 1, n - 1, field)
    relabel = _deletion_map(m, n, i, j)
    keep = sorted(relabel)
    classes = {}
    vectors = []
    for k in keep:
        for l in keep:
            cls = quotient.project_label(f"e_{k}_{l}")
            classes[(k, l)] = cls
            vectors.append(cls)
    iso_rank = Subspace(quotient.space, vectors).dim
    checks.append(
        _record("lie:deletion_spans", "derived", quotient.space.dim, iso_rank)
    )
    mismatches = 0
    pairs = 0
    for ka in keep:
        for la in keep:
            for kb in keep:
                for lb in keep:
                    pairs += 1
                    got = quotient.bracket_in_quotient(
                        classes[(ka, la)], classes[(kb, lb)]
                    )
                    table = small.bracket_basis(
                        f"e_{relabel[ka]}_{relabel[la]}",
                        f"e_{relabel[kb]}_{relabel[lb]}",
                    )
                    want = [field.zero] * quotient.space.dim
                    for lab, coeff in table.items():
                        _, sk, sl = lab.split("_")
                        back_k = keep[int(sk) - 1]
                        back_l = keep[int(sl) - 1]
                        cls = classes[(back_k, back_l)]
                        for idx, c in enumerate(cls):
                            want[idx] = field.add(want[idx], field.mul(coeff, c))
                    if got != want:
                        mismatches += 1
    checks.append(
        _record(
            "lie:deletion_structure_constants",
            "derived",
            {"pairs": pairs, "mismatches": 0},
            {"pairs": pairs, "mismatches": mismatches},
        )
    )
    return checks


def _witness_payload(result):
    if result.witness is None:
        return None
    w = result.witness
    return {
        "field_degree": getattr(w.field, "degree", 1),
        "degree": w.degree,
        "coefficients": [_plain(c) for c in w.coefficients],
        "class_vector": [_plain(c) for c in w.class_vector],
        "dims": [w.dims.even, w.dims.odd],
    }


def _suite_inject(params, seed):
    _reject_extra(params, {"module", "max_ext"})
    if "module" not in params:
        raise BadParams("missing parameter 'module'")
    max_ext = _take_int(params, "max_ext", low=0, default=None)
    try:
        module = OddModule.from_json(params["module"])
    except SuperDSError as exc:
        raise BadParams(f"module data rejected: {exc}")
    result = find_witness(module, max_extension=max_ext)
    payload = {
        "status": result.status,
        "dim": module.dim,
        "operators": module.r,
        "witness": _witness_payload(result),
    }
    if result.status == INCONCLUSIVE:
        verdict = INCONCLUSIVE_VERDICT
    else:
        verdict = PASS
    return [
        CheckRecord(
            formula="inject:decision",
            source="derived",
            expected={"status": "free or witness"},
            computed=payload,
            verdict=verdict,
        )
    ]


def _suite_weights_leq(params, seed):
    _reject_extra(params, {"mu", "lam"})
    mu = _take_weight(params, "mu")
    lam = _take_weight(params, "lam")
    if len(mu) != len(lam):
        raise BadParams("weight vectors must have equal length")
    fast = weights.leq(mu, lam)
    slow = weights.bfs_leq(mu, lam)
    return [
        _record("order:leq", "derived", {"leq": slow}, {"leq": fast}),
    ]


def _suite_weights_interval(params, seed):
    _reject_extra(params, {"mu", "lam", "dominant"})
    mu = _take_weight(params, "mu")
    lam = _take_weight(params, "lam")
    if len(mu) != len(lam):
        raise BadParams("weight vectors must have equal length")
    dominant = params.get("dominant", False)
    if not isinstance(dominant, bool):
        raise BadParams("parameter 'dominant' must be a boolean")
    if not weights.leq(mu, lam):
        raise BadParams(f"{mu} is not below {lam}, the interval is undefined")
    elements = weights.interval(mu, lam, dominant_only=dominant)
    ordered = all(
        weights.leq(mu, pi) and weights.leq(pi, lam) for pi in elements
    )
    endpoints = True
    if not dominant or weights.is_dominant(mu):
        endpoints = endpoints and mu in elements
    if not dominant or weights.is_dominant(lam):
        endpoints = endpoints and lam in elements
    checks = [
        _record(
            "interval:order_filter",
            "derived",
            {"ordered": True, "endpoints": True},
            {"ordered": ordered, "endpoints": endpoints},
        ),
        CheckRecord(
            formula="interval:elements",
            source="derived",
            expected={"finite": True},
            computed={"size": len(elements), "elements": [list(pi) for pi in elements]},
            verdict=PASS,
        ),
    ]
    drop = weights.ell(mu, lam)
    box_ok = all(
        pi[0] <= lam[0] + drop and pi[-1] >= lam[-1]
        for pi in elements
        if weights.is_dominant(pi)
    )
    checks.append(
        _record(
            "interval:dominant_box",
            "derived",
            {"within": True},
            {"within": box_ok},
        )
    )
    return checks


_SUITES = {
    "derham": _suite_derham,
    "koszul": _suite_koszul,
    "hopf": _suite_hopf,
    "gl": _suite_gl,
    "gl-maxrank": _suite_gl_maxrank,
    "q": _suite_q,
    "faithful": _suite_faithful,
    "ds": _suite_ds,
    "lie-dsquotient": _suite_lie,
    "inject": _suite_inject,
    "weights-leq": _suite_weights_leq,
    "weights-interval": _suite_weights_interval,
}


def available_suites():
    return sorted(_SUITES)


def run_suite(name, params, seed=None):
    """Run one registered suite and assemble its report."""
    if name not in _SUITES:
        raise UnknownSuite(f"no suite named {name!r}")
    if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
        raise BadParams("seed must be an integer")
    params = dict(params or {})
    started = time.perf_counter()
    checks = _SUITES[name](params, 0 if seed is None else seed)
    elapsed = time.perf_counter() - started
    return VerificationReport(
        suite=name,
        parameters=params,
        checks=list(checks),
        seed=seed,
        elapsed=elapsed,
    )
