"""Certification of the polynomial identities behind the group law and the norm."""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Union

from weierstrass.curve import WeierstrassCurve, line_polynomial, random_curve
from weierstrass.fields import prime_field
from weierstrass.logger import Logger
from weierstrass.points import add_x, neg_y, sample_point, slope
from weierstrass.poly import UniPoly
from weierstrass.zpoly import ZMultiPoly, symbols

HOLDS = "holds"
HOLDS_UP_TO_SIGN = "holds_up_to_sign"
FAILS = "fails"

SECANT = "secant"
TANGENT = "tangent"
VERTICAL = "vertical"

Residual = Union[ZMultiPoly, UniPoly]

_S = symbols()
a1, a2, a3, a4, a6 = (_S[n] for n in ("a1", "a2", "a3", "a4", "a6"))
x, y, x1, y1, l = (_S[n] for n in ("x", "y", "x1", "y1", "l"))
X, Y = _S["X"], _S["Y"]


# Generic-coefficient versions of the curve quantities.

def w_poly(u: ZMultiPoly, v: ZMultiPoly) -> ZMultiPoly:
    """W(u, v) = v^2 + a1 u v + a3 v - (u^3 + a2 u^2 + a4 u + a6)."""
    return v ** 2 + a1 * u * v + a3 * v - (u ** 3 + a2 * u ** 2 + a4 * u + a6)


def w_x(u: ZMultiPoly, v: ZMultiPoly) -> ZMultiPoly:
    return a1 * v - (3 * u ** 2 + 2 * a2 * u + a4)


def w_y(u: ZMultiPoly, v: ZMultiPoly) -> ZMultiPoly:
    return 2 * v + a1 * u + a3


def sigma(u: ZMultiPoly, v: ZMultiPoly) -> ZMultiPoly:
    return -v - a1 * u - a3


def b2() -> ZMultiPoly:
    return a1 ** 2 + 4 * a2


def b4() -> ZMultiPoly:
    return 2 * a4 + a1 * a3


def b6() -> ZMultiPoly:
    return a3 ** 2 + 4 * a6


def b8() -> ZMultiPoly:
    return a1 ** 2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 ** 2 - a4 ** 2


def discriminant() -> ZMultiPoly:
    return -b2() ** 2 * b8() - 8 * b4() ** 3 - 27 * b6() ** 2 + 9 * b2() * b4() * b6()


def _g(u: ZMultiPoly) -> ZMultiPoly:
    """X^2 + (u + a2) X + (u^2 + a2 u + a4)."""
    return X ** 2 + (u + a2) * X + (u ** 2 + a2 * u + a4)


def _line() -> ZMultiPoly:
    return l * (X - x1) + y1


@dataclass(frozen=True)
class ExactIdentity:
    """lhs = rhs in Z[a1, ..., Y]; `signed` also accepts -lhs = rhs."""

    identity: str
    description: str
    lhs: Callable[[], ZMultiPoly]
    rhs: Callable[[], ZMultiPoly]
    signed: bool = False


EXACT_IDENTITIES: Dict[str, ExactIdentity] = {
    "I0": ExactIdentity(
        "I0", "W(x, sigma_x(y)) = W(x, y)",
        lambda: w_poly(x, sigma(x, y)),
        lambda: w_poly(x, y),
    ),
    "I1": ExactIdentity(
        "I1", "(Y - y)(Y - sigma_x(y)) = (X - x) G + W(X, Y) - W(x, y)",
        lambda: (Y - y) * (Y - sigma(x, y)),
        lambda: (X - x) * (_g(x) - a1 * Y) + w_poly(X, Y) - w_poly(x, y),
    ),
    "I2": ExactIdentity(
        "I2", "W_X(x, y) = -(X + 2x + a2)(X - x) + a1 (Y - y) + G",
        lambda: w_x(x, y),
        lambda: -(X + 2 * x + a2) * (X - x) + a1 * (Y - y) + _g(x) - a1 * Y,
        signed=True,
    ),
    "I3": ExactIdentity(
        "I3", "W_Y(x, y) = -(Y - y) + (Y - sigma_x(y))",
        lambda: w_y(x, y),
        lambda: -(Y - y) + (Y - sigma(x, y)),
    ),
    "I4": ExactIdentity(
        "I4", "(Y - lambda(X))(sigma_X(Y) - lambda(X)) = W(X, lambda(X)) - W(X, Y)",
        lambda: (Y - _line()) * (sigma(X, Y) - _line()),
        lambda: w_poly(X, _line()) - w_poly(X, Y),
    ),
    "I5": ExactIdentity(
        "I5", "W(X, Y) - W(x, y) = (a1 y - G)(X - x) + (y - sigma_X(Y))(Y - y)",
        lambda: w_poly(X, Y) - w_poly(x, y),
        lambda: (a1 * y - _g(x)) * (X - x) + (y - sigma(X, Y)) * (Y - y),
    ),
    "I6": ExactIdentity(
        "I6",
        "(Y - sigma_X(Y))^2 - (y1 - sigma_x1(y1))^2 = "
        "(4X^2 + (4x1 + b2)X + 4x1^2 + b2 x1 + 2b4)(X - x1) + 4(W(X, Y) - W(x1, y1))",
        lambda: (Y - sigma(X, Y)) ** 2 - (y1 - sigma(x1, y1)) ** 2,
        lambda: (4 * X ** 2 + (4 * x1 + b2()) * X + (4 * x1 ** 2 + b2() * x1 + 2 * b4())) * (X - x1)
        + 4 * (w_poly(X, Y) - w_poly(x1, y1)),
    ),
}


@dataclass
class IdentityReport:
    """
    Outcome of one identity check; `residual` is zero whenever the status is not `fails`.

    Exact and cross-engine reports carry a ZMultiPoly residual, randomized
    reports a UniPoly over GF(p) (R1 as a constant).
    """

    identity: str
    status: str
    residual: Residual
    note: str = ""
    seed: Optional[int] = None
    trials: Optional[int] = None
    failures: int = 0
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status != FAILS

    def to_dict(self) -> Dict[str, object]:
        return {
            "identity": self.identity,
            "status": self.status,
            "residual": str(self.residual),
            "note": self.note,
            "seed": self.seed,
            "trials": self.trials,
            "failures": self.failures,
            "counterexample": self.counterexample,
        }


def check_identity(identity: ExactIdentity) -> IdentityReport:
    """Expand lhs - rhs exactly; a signed identity retries with -lhs."""
    lhs, rhs = identity.lhs(), identity.rhs()
    residual = lhs - rhs
    if residual.is_zero():
        return IdentityReport(identity.identity, HOLDS, residual, identity.description)
    if identity.signed:
        flipped = -lhs - rhs
        if flipped.is_zero():
            note = f"{identity.description}; holds with the left side negated (sign -1)"
            return IdentityReport(identity.identity, HOLDS_UP_TO_SIGN, flipped, note)
    Logger().warning(f"Identity {identity.identity} fails: {identity.description}; residual {residual}")
    return IdentityReport(identity.identity, FAILS, residual, identity.description, failures=1)


def check_exact_suite() -> List[IdentityReport]:
    """Check every identity in EXACT_IDENTITIES, in id order."""
    reports = [check_identity(identity) for identity in EXACT_IDENTITIES.values()]
    Logger().info(f"Exact identity suite: {sum(r.passed for r in reports)}/{len(reports)} passed")
    return reports


# Randomized, on-curve identities over GF(p).

def trial_rng(seed: int, trial: int) -> random.Random:
    """The PRNG stream owned by one trial."""
    return random.Random(seed * 1_000_003 + trial)


@dataclass
class TrialOutcome:
    trial: int
    case: str
    residuals: Dict[str, Residual] = field(default_factory=dict)
    context: str = ""


def run_trial(p: int, seed: int, trial: int, retries: int = 64) -> TrialOutcome:
    """
    One randomized trial: a random curve, two sampled points, and R1-R3.

    Even trials use two independent points (normally a secant), odd trials
    double one point (a tangent). Vertical configurations are recorded and
    skipped.

    Raises:
        SamplingExhausted: If no point is found on the sampled curve.
    """
    rng = trial_rng(seed, trial)
    gf = prime_field(p)
    curve = random_curve(gf, rng)
    p1 = sample_point(curve, rng, retries)
    p2 = sample_point(curve, rng, retries) if trial % 2 == 0 else p1
    px1, py1, px2, py2 = p1.x, p1.y, p2.x, p2.y
    context = f"curve={curve.to_dict()} P1=({px1}, {py1}) P2=({px2}, {py2})"

    if px1 == px2:
        if py1 == neg_y(curve, px2, py2):
            return TrialOutcome(trial, VERTICAL, context=context)
        case = TANGENT
    else:
        case = SECANT

    ell = slope(curve, px1, px2, py1, py2)
    px3 = add_x(curve, px1, px2, ell)
    lam = line_polynomial(px1, py1, ell)
    var = UniPoly.x(gf)
    f1, f2, f3 = var - px1, var - px2, var - px3

    r1 = lam.eval(px1) - py1
    if r1.is_zero() and case == SECANT:
        r1 = lam.eval(px2) - py2
    r1 = UniPoly.const(r1)
    r2 = curve.add_polynomial(px1, py1, ell) + f1 * f2 * f3
    r3 = (
        curve.polynomial_x.eval_y(lam)
        + curve.polynomial_y.eval_y(lam).scale(ell)
        + f1 * f2 + f1 * f3 + f2 * f3
    )
    return TrialOutcome(trial, case, {"R1": r1, "R2": r2, "R3": r3}, f"{context} slope={ell}")


def _run_trial_args(args) -> TrialOutcome:
    return run_trial(*args)


RANDOMIZED_IDENTITIES = {
    "R1": "lambda(x1) = y1, and lambda(x2) = y2 for a secant",
    "R2": "W(X, lambda(X)) + (X - x1)(X - x2)(X - x3) = 0",
    "R3": "W_X(X, lambda(X)) + l W_Y(X, lambda(X)) + (X - x1)(X - x2) + (X - x1)(X - x3) + (X - x2)(X - x3) = 0",
}


def check_randomized_suite(p: int, trials: int, seed: int, retries: int = 64,
                           workers: int = 1) -> List[IdentityReport]:
    """
    Check R1-R3 on sampled on-curve data over GF(p).

    Args:
        p: Prime for the base field; 2^31 - 1 keeps false passes negligible.
        trials: Number of trials, each with its own PRNG stream.
        seed: Recorded in every report.
        retries: x-values tried per point before SamplingExhausted.
        workers: Worker processes; outcomes are merged in trial order.

    Returns:
        One report per identity, in id order.
    """
    gf = prime_field(p)
    args = [(p, seed, t, retries) for t in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_trial_args, args, chunksize=max(1, trials // (4 * workers))))
    else:
        outcomes = [_run_trial_args(a) for a in args]

    counts = {case: sum(o.case == case for o in outcomes) for case in (SECANT, TANGENT, VERTICAL)}
    note = ", ".join(f"{case}={n}" for case, n in counts.items())

    reports = []
    for identity, description in RANDOMIZED_IDENTITIES.items():
        failing = [o for o in outcomes if identity in o.residuals and not o.residuals[identity].is_zero()]
        if failing:
            first = failing[0]
            counterexample = f"trial={first.trial} case={first.case} {first.context}"
            Logger().warning(
                f"Identity {identity} fails in {len(failing)}/{trials} trials (seed {seed}); "
                f"first: {counterexample}; residual {first.residuals[identity]}"
            )
            reports.append(IdentityReport(
                identity, FAILS, first.residuals[identity], f"{description}; {note}",
                seed, trials, len(failing), counterexample,
            ))
        else:
            reports.append(IdentityReport(
                identity, HOLDS, UniPoly.zero(gf), f"{description}; {note}", seed, trials,
            ))
    Logger().info(f"Randomized identity suite over GF({p}): {trials} trials, seed {seed}, {note}")
    return reports


def check_cross_engine(p: int, samples: int, seed: int) -> IdentityReport:
    """
    Compare the symbolic engine, specialized at random integers and reduced
    mod p, with direct evaluation in GF(p).

    Covers W, W_X, W_Y, sigma, the discriminant and W(X, lambda(X)) against
    the curve objects, and both sides of every exact identity against each
    other (with the left side negated for a signed identity).
    """
    gf = prime_field(p)
    checks = {
        "W": (w_poly(x, y), lambda c, e: c.polynomial.eval2(e["x"], e["y"])),
        "W_X": (w_x(x, y), lambda c, e: c.polynomial_x.eval2(e["x"], e["y"])),
        "W_Y": (w_y(x, y), lambda c, e: c.polynomial_y.eval2(e["x"], e["y"])),
        "sigma": (sigma(x, y), lambda c, e: neg_y(c, e["x"], e["y"])),
        "delta": (discriminant(), lambda c, e: c.delta),
        "W(X, lambda)": (w_poly(X, _line()),
                         lambda c, e: c.add_polynomial(e["x1"], e["y1"], e["l"]).eval(e["X"])),
    }
    sides = {name: (ident.lhs(), ident.rhs(), ident.signed) for name, ident in EXACT_IDENTITIES.items()}
    rng = random.Random(seed)
    failures, counterexample, residual = 0, None, ZMultiPoly()
    bound = 10 ** 12
    for _ in range(samples):
        assignment = {name: rng.randint(-bound, bound) for name in _S}
        curve = WeierstrassCurve.of(gf, [assignment[n] for n in ("a1", "a2", "a3", "a4", "a6")])
        elements = {name: gf(value) for name, value in assignment.items()}
        mismatches = []
        for name, (symbolic, direct) in checks.items():
            got, want = symbolic.evaluate(assignment, modulus=p), direct(curve, elements).value
            if got != want:
                mismatches.append((name, got - want))
        for name, (lhs, rhs, signed) in sides.items():
            left, right = lhs.evaluate(assignment, modulus=p), rhs.evaluate(assignment, modulus=p)
            if left != right and not (signed and -left % p == right):
                mismatches.append((name, left - right))
        if mismatches:
            failures += 1
            if counterexample is None:
                name, diff = mismatches[0]
                counterexample = f"{name} at {assignment}"
                residual = ZMultiPoly.const(diff % p)
    if failures:
        Logger().warning(f"Cross-engine check over GF({p}) failed in {failures}/{samples} samples; "
                         f"first: {counterexample}")
        return IdentityReport("cross-engine", FAILS, residual, "", seed, samples, failures, counterexample)
    covered = ", ".join(list(checks) + list(sides))
    return IdentityReport("cross-engine", HOLDS, residual, f"{covered} over GF({p})", seed, samples)
