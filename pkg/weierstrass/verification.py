"""Exhaustive and randomized property scans over curves, points, changes and norms."""

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Dict, Iterator, List, Tuple

from weierstrass.coordring import CoordinateRing, PolyMatrix2, smith_decomposition
from weierstrass.curve import VariableChange, WeierstrassCurve, random_curve, short_weierstrass
from weierstrass.exceptions import DomainError, SamplingExhausted
from weierstrass.fields import Field, FieldSpec, make_field
from weierstrass.logger import Logger
from weierstrass.points import (
    Point,
    addition_table,
    enumerate_points,
    map_point,
    neg,
    sample_point,
)
from weierstrass.poly import derivative_x, derivative_y

MAX_EXAMPLES = 5

# Fields of the default exhaustive group-law scan.
DEFAULT_SCAN_FIELDS: Tuple[FieldSpec, ...] = (
    FieldSpec.prime(2),
    FieldSpec.prime(3),
    FieldSpec.extension(2, 2),
    FieldSpec.prime(5),
)


@dataclass
class ScanResult:
    """Tally of one property scan; merges by summing."""

    name: str
    field: str
    curves: int = 0
    checks: int = 0
    failures: int = 0
    examples: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, condition: bool, detail: str) -> bool:
        """Count one check; keep the first few failure details."""
        self.checks += 1
        if not condition:
            self.failures += 1
            if len(self.examples) < MAX_EXAMPLES:
                self.examples.append(detail)
        return condition

    def merge(self, other: "ScanResult") -> "ScanResult":
        examples = (self.examples + other.examples)[:MAX_EXAMPLES]
        return ScanResult(self.name, self.field, self.curves + other.curves,
                          self.checks + other.checks, self.failures + other.failures, examples)

    def to_dict(self) -> Dict[str, object]:
        return {
            "scan": self.name,
            "field": self.field,
            "curves": self.curves,
            "checks": self.checks,
            "failures": self.failures,
            "examples": list(self.examples),
        }


def all_curves(fld: Field, a1_values=None) -> Iterator[WeierstrassCurve]:
    """Every Weierstrass curve over a finite field, optionally restricted in a1."""
    elements = fld.elements()
    for a1 in (elements if a1_values is None else a1_values):
        for rest in itertools.product(elements, repeat=4):
            yield WeierstrassCurve(a1, *rest)


def all_changes(fld: Field) -> Iterator[VariableChange]:
    elements = fld.elements()
    for u in elements:
        if u.is_zero():
            continue
        for r, s, t in itertools.product(elements, repeat=3):
            yield VariableChange(u, r, s, t)


# Per-curve checks. Each records into the ScanResult it is given.

def check_group_law(curve: WeierstrassCurve, result: ScanResult):
    """Closure, identity, inverses, commutativity, associativity and -(-P) = P."""
    points = enumerate_points(curve)
    try:
        table = addition_table(points)
    except DomainError as e:
        result.check(False, f"{curve!r}: closure: {e}")
        return
    n = len(points)
    index = {p: i for i, p in enumerate(points)}
    result.checks += n * n
    for i, p in enumerate(points):
        result.check(table[(0, i)] == i and table[(i, 0)] == i, f"{curve!r}: O + {p} != {p}")
        minus = neg(curve, p)
        result.check(neg(curve, minus) == p, f"{curve!r}: -(-{p}) != {p}")
        j = index.get(minus)
        result.check(j is not None and table[(j, i)] == 0, f"{curve!r}: -{p} + {p} != O")
    for i in range(n):
        for j in range(i + 1, n):
            result.check(table[(i, j)] == table[(j, i)], f"{curve!r}: {points[i]} + {points[j]} not commutative")
    for i, j, k in itertools.product(range(n), repeat=3):
        if table[(table[(i, j)], k)] != table[(i, table[(j, k)])]:
            result.check(False, f"{curve!r}: ({points[i]} + {points[j]}) + {points[k]} not associative")
        else:
            result.checks += 1


def check_delta_smoothness(curve: WeierstrassCurve, result: ScanResult):
    """Delta != 0 forces every on-curve point to be nonsingular; also the origin criterion."""
    zero = curve.field.zero
    result.check(
        curve.nonsingular_at_origin() == curve.nonsingular(zero, zero),
        f"{curve!r}: origin criterion disagrees with nonsingular(0, 0)",
    )
    if not curve.is_elliptic:
        return
    for x, y in curve.affine_solutions():
        result.check(curve.nonsingular(x, y), f"{curve!r}: delta != 0 but ({x}, {y}) is singular")


def _check_change_invariants(curve: WeierstrassCurve, change: VariableChange, result: ScanResult):
    target = curve.variable_change(change)
    ui = change.u.inverse()
    pairs = (
        ("b2", target.b2, ui ** 2 * curve.b2),
        ("b4", target.b4, ui ** 4 * curve.b4),
        ("b6", target.b6, ui ** 6 * curve.b6),
        ("b8", target.b8, ui ** 8 * curve.b8),
        ("delta", target.delta, ui ** 12 * curve.delta),
    )
    for name, got, want in pairs:
        result.check(got == want, f"{curve!r} under {change}: {name}' = {got}, expected {want}")
    return target


def _check_isomorphism(curve: WeierstrassCurve, change: VariableChange, target: WeierstrassCurve,
                       points: List[Point], result: ScanResult):
    image = [map_point(curve, change, p) for p in points]
    target_points = enumerate_points(target)
    result.check(
        len(set(image)) == len(points) and set(image) == set(target_points),
        f"{curve!r} under {change}: map_point is not a bijection onto the target points",
    )
    for (p, mp), (q, mq) in itertools.product(zip(points, image), repeat=2):
        result.check(map_point(curve, change, p + q) == mp + mq,
                     f"{curve!r} under {change}: map({p} + {q}) != map({p}) + map({q})")


def check_variable_change(curve: WeierstrassCurve, result: ScanResult, map_points: bool = False):
    """b-invariant and discriminant scaling for every change; optionally the point isomorphism."""
    result.check(4 * curve.b8 == curve.b2 * curve.b6 - curve.b4 ** 2,
                 f"{curve!r}: 4 b8 != b2 b6 - b4^2")
    points = enumerate_points(curve) if map_points else None
    for change in all_changes(curve.field):
        target = _check_change_invariants(curve, change, result)
        if map_points:
            _check_isomorphism(curve, change, target, points, result)


def check_isomorphism(curve: WeierstrassCurve, result: ScanResult):
    check_variable_change(curve, result, map_points=True)


def check_partial_derivatives(curve: WeierstrassCurve, result: ScanResult):
    w = curve.polynomial
    result.check(derivative_x(w) == curve.polynomial_x, f"{curve!r}: d/dX W != W_X")
    result.check(derivative_y(w) == curve.polynomial_y, f"{curve!r}: d/dY W != W_Y")


def check_translation(curve: WeierstrassCurve, result: ScanResult):
    """W is nonsingular at (x, y) iff its translate by (1, x, 0, y) is nonsingular at the origin."""
    fld = curve.field
    zero = fld.zero
    for x, y in itertools.product(fld.elements(), repeat=2):
        moved = curve.variable_change(VariableChange(fld.one, x, zero, y))
        result.check(curve.nonsingular(x, y) == moved.nonsingular(zero, zero),
                     f"{curve!r}: nonsingular({x}, {y}) disagrees with the translated curve at the origin")


def check_hasse(curve: WeierstrassCurve, result: ScanResult):
    """|N - (q + 1)| <= 2 sqrt(q) for elliptic curves, as (N - q - 1)^2 <= 4q."""
    if not curve.is_elliptic:
        return
    q = curve.field.order
    n = len(enumerate_points(curve))
    result.check((n - q - 1) ** 2 <= 4 * q, f"{curve!r}: {n} points violates the Hasse bound")


CURVE_CHECKS: Dict[str, Callable[[WeierstrassCurve, ScanResult], None]] = {
    "group_law": check_group_law,
    "delta_smoothness": check_delta_smoothness,
    "variable_change": check_variable_change,
    "isomorphism": check_isomorphism,
    "hasse": check_hasse,
    "derivatives": check_partial_derivatives,
    "translation": check_translation,
}


def _scan_chunk(name: str, spec: FieldSpec, a1_index: int, stride: int) -> ScanResult:
    fld = make_field(spec)
    result = ScanResult(name, fld.label)
    a1 = fld.elements()[a1_index]
    order = fld.order
    for n, curve in enumerate(all_curves(fld, [a1])):
        if (a1_index * order ** 4 + n) % stride:
            continue
        result.curves += 1
        CURVE_CHECKS[name](curve, result)
    return result


def _scan_chunk_args(args) -> ScanResult:
    return _scan_chunk(*args)


def scan_curves(name: str, spec: FieldSpec, workers: int = 1, stride: int = 1) -> ScanResult:
    """
    Run a per-curve check over every curve of a finite field.

    The curve space is partitioned by the value of a1; with workers > 1 the
    parts run in separate processes and the results are merged in a1 order.

    Args:
        name: Key of CURVE_CHECKS.
        spec: Field to scan.
        workers: Worker processes.
        stride: Check only every stride-th curve in enumeration order.

    Raises:
        DomainError: If the check name is unknown.
        InfiniteField: If the field is the rationals.
    """
    if name not in CURVE_CHECKS:
        raise DomainError(f"Unknown scan: {name}. Available: {', '.join(CURVE_CHECKS)}")
    fld = make_field(spec)
    args = [(name, fld.spec, i, stride) for i in range(len(fld.elements()))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk_args, args))
    else:
        parts = [_scan_chunk_args(a) for a in args]
    result = reduce(ScanResult.merge, parts)
    _log_scan(result)
    return result


def _log_scan(result: ScanResult):
    logger = Logger()
    logger.info(f"Scan {result.name} over {result.field}: {result.curves} curves, "
                f"{result.checks} checks, {result.failures} failures")
    for example in result.examples:
        logger.warning(f"Scan {result.name} over {result.field} failed: {example}")


def group_law_scan(spec: FieldSpec, workers: int = 1) -> ScanResult:
    return scan_curves("group_law", spec, workers)


def delta_smoothness_scan(spec: FieldSpec, workers: int = 1) -> ScanResult:
    return scan_curves("delta_smoothness", spec, workers)


def variable_change_scan(spec: FieldSpec, map_points: bool = False, workers: int = 1,
                         stride: int = 1) -> ScanResult:
    return scan_curves("isomorphism" if map_points else "variable_change", spec, workers, stride)


def hasse_scan(spec: FieldSpec, workers: int = 1, stride: int = 1) -> ScanResult:
    return scan_curves("hasse", spec, workers, stride)


def derivative_scan(spec: FieldSpec, workers: int = 1) -> ScanResult:
    return scan_curves("derivatives", spec, workers)


def translation_scan(spec: FieldSpec, workers: int = 1) -> ScanResult:
    return scan_curves("translation", spec, workers)


# Field-level and randomized scans.

def field_axioms_scan(spec: FieldSpec, samples: int = 1000, seed: int = 1729) -> ScanResult:
    """
    Ring axioms, inverses, characteristic and (in characteristic 2) Frobenius.

    Exhaustive over all triples when the field has at most 16 elements,
    otherwise over `samples` random triples.
    """
    fld = make_field(spec)
    result = ScanResult("field_axioms", fld.label)
    if fld.is_finite and fld.order <= 16:
        elements = fld.elements()
        triples = itertools.product(elements, repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((fld.random_element(rng), fld.random_element(rng), fld.random_element(rng))
                   for _ in range(samples))
    zero, one = fld.zero, fld.one
    for a, b, c in triples:
        result.check((a + b) + c == a + (b + c), f"({a} + {b}) + {c} != {a} + ({b} + {c})")
        result.check((a * b) * c == a * (b * c), f"({a} * {b}) * {c} != {a} * ({b} * {c})")
        result.check(a + b == b + a and a * b == b * a, f"{a}, {b} do not commute")
        result.check(a * (b + c) == a * b + a * c, f"{a} * ({b} + {c}) does not distribute")
        result.check(a + zero == a and a * one == a and a + (-a) == zero, f"identities fail at {a}")
        if not a.is_zero():
            result.check(a * a.inverse() == one, f"{a} * inv({a}) != 1")
        if fld.characteristic == 2:
            result.check((a + b) ** 2 == a ** 2 + b ** 2, f"Frobenius fails at {a}, {b}")
    if fld.characteristic:
        result.check((fld.characteristic * one).is_zero(), f"{fld.characteristic} * 1 != 0")
    _log_scan(result)
    return result


def random_change(fld: Field, rng: random.Random) -> VariableChange:
    u = fld.zero
    while u.is_zero():
        u = fld.random_element(rng)
    return VariableChange(u, fld.random_element(rng), fld.random_element(rng), fld.random_element(rng))


def random_variable_change_scan(p: int = 101, cases: int = 1000, seed: int = 1729,
                                retries: int = 64) -> ScanResult:
    """Invariant scaling and map_point(P + Q) = map_point(P) + map_point(Q) on random data over GF(p)."""
    fld = make_field(FieldSpec.prime(p))
    result = ScanResult("random_variable_change", fld.label)
    rng = random.Random(seed)
    for _ in range(cases):
        curve, change = random_curve(fld, rng), random_change(fld, rng)
        result.curves += 1
        _check_change_invariants(curve, change, result)
        try:
            P, Q = sample_point(curve, rng, retries), sample_point(curve, rng, retries)
        except SamplingExhausted:
            continue
        result.check(map_point(curve, change, P + Q) == map_point(curve, change, P) + map_point(curve, change, Q),
                     f"{curve!r} under {change}: map({P} + {Q}) != map({P}) + map({Q})")
    _log_scan(result)
    return result


def short_weierstrass_scan(p: int = 101, cases: int = 1000, seed: int = 1729,
                           retries: int = 64) -> ScanResult:
    """Completing the square then the cube gives a1 = a2 = a3 = 0 and commutes with addition."""
    fld = make_field(FieldSpec.prime(p))
    result = ScanResult("short_weierstrass", fld.label)
    rng = random.Random(seed)
    for _ in range(cases):
        curve = random_curve(fld, rng)
        result.curves += 1
        short, square, cube = short_weierstrass(curve)
        result.check(short.a1.is_zero() and short.a2.is_zero() and short.a3.is_zero(),
                     f"{curve!r}: short form {short!r} keeps a1, a2 or a3")
        try:
            P, Q = sample_point(curve, rng, retries), sample_point(curve, rng, retries)
        except SamplingExhausted:
            continue
        squared = curve.variable_change(square)

        def carry(point: Point) -> Point:
            return map_point(squared, cube, map_point(curve, square, point))

        result.check(carry(P + Q) == carry(P) + carry(Q),
                     f"{curve!r}: short-form map does not respect {P} + {Q}")
    _log_scan(result)
    return result


def check_norm_case(ring: CoordinateRing, f, g, result: ScanResult):
    """Norm, degree law, multiplication matrix and Smith form checks for one pair."""
    nf, ng = ring.norm(f), ring.norm(g)
    label = f"{ring.curve!r}, f = {f}, g = {g}"
    result.check(nf.degree == ring.expected_norm_degree(f), f"{label}: degree law fails for f")
    result.check(nf.degree != 1, f"{label}: norm of degree one")
    fg = ring.mul(f, g)
    result.check(fg == ring.reduce(f.lift() * g.lift()), f"{label}: crmul disagrees with reduce")
    result.check(ring.norm(fg) == nf * ng, f"{label}: norm is not multiplicative")
    m = ring.mult_matrix(f)
    result.check(m.det() == nf, f"{label}: det(mult_matrix(f)) != norm(f)")
    if f.is_zero():
        return
    result.check(not nf.is_zero(), f"{label}: nonzero f with zero norm")
    if not g.is_zero():
        result.check(not fg.is_zero(), f"{label}: zero divisor")
    form = smith_decomposition(m)
    result.check(form.d1.is_monic() and form.d2.is_monic(), f"{label}: Smith factors not monic")
    result.check(form.d2.euclid_divmod(form.d1)[1].is_zero(), f"{label}: d1 does not divide d2")
    result.check(form.left @ m @ form.right == PolyMatrix2.diagonal(form.d1, form.d2),
                 f"{label}: recorded operations do not diagonalize")
    result.check(form.left.det().nat_degree == 0 and form.right.det().nat_degree == 0
                 and not form.unit.is_zero(), f"{label}: transforms are not unimodular")
    result.check(form.d1 * form.d2 == nf.scale(form.unit), f"{label}: d1 d2 != unit * norm")
    result.check(ring.quotient_dim(f) == nf.nat_degree, f"{label}: quotient_dim != deg norm")


def norm_scan(spec: FieldSpec, cases: int = 1000, seed: int = 1729, max_degree: int = 4) -> ScanResult:
    """Random curves and random residue pairs, with the edge cases p = 0, q = 0 and f = 0 mixed in."""
    fld = make_field(spec)
    result = ScanResult("norm", fld.label)
    rng = random.Random(seed)
    for case in range(cases):
        ring = CoordinateRing(random_curve(fld, rng))
        result.curves += 1
        f, g = ring.random_element(rng, max_degree), ring.random_element(rng, max_degree)
        if case % 10 == 1:
            f = ring.element(f.p)
        elif case % 10 == 2:
            f = ring.element((), f.q)
        elif case % 10 == 3:
            g = ring.zero
        check_norm_case(ring, f, g, result)
    _log_scan(result)
    return result


def hasse_bound(q: int) -> int:
    """floor(2 sqrt(q))."""
    return math.isqrt(4 * q)
