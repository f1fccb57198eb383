"""Subcommands with a Factory pattern; each maps a request to a library call."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Type

import pandas as pd

from weierstrass.config import WeierstrassConfig
from weierstrass.curve import VariableChange, WeierstrassCurve
from weierstrass.exceptions import ParseError
from weierstrass.fields import Field, make_field
from weierstrass.identities import check_cross_engine, check_exact_suite, check_randomized_suite
from weierstrass.literals import (
    LiteralParser,
    parse_scan_fields,
    point_to_json,
    render_curve,
    render_element,
    render_point,
)
from weierstrass.points import add, enumerate_points, group_structure, map_point, neg, smul
from weierstrass.records import ReportRecord
from weierstrass.verification import DEFAULT_SCAN_FIELDS, group_law_scan, hasse_bound

CROSS_ENGINE_SAMPLES = 100


@dataclass
class CommandRequest:
    """One parsed invocation; literal fields stay as text until a command parses them."""

    subcommand: str
    field: Optional[str] = None
    a: Optional[str] = None
    p: Optional[str] = None
    q: Optional[str] = None
    n: Optional[str] = None
    u: Optional[str] = None
    r: Optional[str] = None
    s: Optional[str] = None
    t: Optional[str] = None
    format: str = "text"
    seed: Optional[int] = None
    trials: Optional[int] = None
    scan: Optional[str] = None
    report_csv: Optional[str] = None


@dataclass
class CommandResult:
    """What a command produced: the JSON body, its text rendering, and report records."""

    command: str
    payload: Dict[str, object]
    text: str
    records: List[ReportRecord] = field(default_factory=list)
    failed: bool = False


def _require(value: Optional[str], flag: str, command: str) -> str:
    if value is None:
        raise ParseError(f"{command} requires {flag}")
    return value


def _key_value_table(rows: Dict[str, object]) -> str:
    frame = pd.DataFrame({"key": list(rows.keys()), "value": [str(v) for v in rows.values()]})
    return frame.to_string(index=False, header=False)


class Command(ABC):
    """Abstract base class for all subcommands."""

    @abstractmethod
    def execute(self, request: CommandRequest, config: WeierstrassConfig) -> CommandResult:
        pass  # pragma: no cover

    @abstractmethod
    def get_name(self) -> str:
        pass  # pragma: no cover

    def field_of(self, request: CommandRequest) -> Field:
        spec = LiteralParser.parse_field_spec(_require(request.field, "--field", self.get_name()))
        return make_field(spec)

    def curve_of(self, request: CommandRequest) -> WeierstrassCurve:
        fld = self.field_of(request)
        return LiteralParser.parse_curve(fld, _require(request.a, "--a", self.get_name()))

    def point_of(self, curve: WeierstrassCurve, text: Optional[str], flag: str):
        return LiteralParser.parse_point(curve, _require(text, flag, self.get_name()))


class InvariantsCommand(Command):
    """b-invariants, discriminant and ellipticity."""

    def execute(self, request, config):
        curve = self.curve_of(request)
        inv = curve.invariants()
        values = {
            "b2": render_element(inv.b2),
            "b4": render_element(inv.b4),
            "b6": render_element(inv.b6),
            "b8": render_element(inv.b8),
            "delta": render_element(inv.delta),
        }
        payload = {"field": curve.field.label, "curve": curve.to_dict(), **values,
                   "is_elliptic": curve.is_elliptic}
        text = _key_value_table({"curve": render_curve(curve), **values,
                                 "is_elliptic": str(curve.is_elliptic).lower()})
        return CommandResult(self.get_name(), payload, text)

    def get_name(self) -> str:
        return "invariants"


class PointsCommand(Command):
    """All points of W(F) over a finite field."""

    def execute(self, request, config):
        curve = self.curve_of(request)
        points = enumerate_points(curve)
        payload = {"field": curve.field.label, "curve": curve.to_dict(), "count": len(points),
                   "points": [point_to_json(p) for p in points]}
        text = "\n".join([f"{len(points)} points"] + [render_point(p) for p in points])
        return CommandResult(self.get_name(), payload, text)

    def get_name(self) -> str:
        return "points"


class GroupCommand(Command):
    """Order and invariant factors of W(F)."""

    def execute(self, request, config):
        curve = self.curve_of(request)
        gs = group_structure(curve)
        q = curve.field.order
        payload = {
            "field": curve.field.label,
            "curve": curve.to_dict(),
            "order": gs.order,
            "invariant_factors": list(gs.invariant_factors),
            "exponent": gs.exponent,
            "is_cyclic": gs.is_cyclic,
            "hasse_bound": hasse_bound(q),
            "within_hasse_bound": abs(gs.order - (q + 1)) <= hasse_bound(q),
        }
        text = _key_value_table({
            "order": gs.order,
            "invariant_factors": ",".join(str(n) for n in gs.invariant_factors),
            "structure": "cyclic" if gs.is_cyclic else "non-cyclic",
            "exponent": gs.exponent,
        })
        return CommandResult(self.get_name(), payload, text)

    def get_name(self) -> str:
        return "group"


class AddCommand(Command):
    def execute(self, request, config):
        curve = self.curve_of(request)
        p = self.point_of(curve, request.p, "--p")
        q = self.point_of(curve, request.q, "--q")
        result = add(curve, p, q)
        return CommandResult(self.get_name(), {"result": point_to_json(result)}, render_point(result))

    def get_name(self) -> str:
        return "add"


class SmulCommand(Command):
    def execute(self, request, config):
        curve = self.curve_of(request)
        n = LiteralParser.parse_integer(_require(request.n, "-n", self.get_name()), "-n")
        p = self.point_of(curve, request.p, "--p")
        result = smul(n, p)
        return CommandResult(self.get_name(), {"n": n, "result": point_to_json(result)}, render_point(result))

    def get_name(self) -> str:
        return "smul"


class NegCommand(Command):
    def execute(self, request, config):
        curve = self.curve_of(request)
        result = neg(curve, self.point_of(curve, request.p, "--p"))
        return CommandResult(self.get_name(), {"result": point_to_json(result)}, render_point(result))

    def get_name(self) -> str:
        return "neg"


class ChangeCommand(Command):
    """Apply (u, r, s, t) to the curve and, with --p, carry a point across."""

    def execute(self, request, config):
        curve = self.curve_of(request)
        fld = curve.field
        parse = LiteralParser.parse_element
        change = VariableChange(
            parse(fld, request.u or "1"),
            parse(fld, request.r or "0"),
            parse(fld, request.s or "0"),
            parse(fld, request.t or "0"),
        )
        target = curve.variable_change(change)
        payload = {"field": fld.label, "curve": target.to_dict(), "delta": render_element(target.delta)}
        lines = [render_curve(target)]
        if request.p is not None:
            image = map_point(curve, change, self.point_of(curve, request.p, "--p"))
            payload["point"] = point_to_json(image)
            lines.append(render_point(image))
        return CommandResult(self.get_name(), payload, "\n".join(lines))

    def get_name(self) -> str:
        return "change"


class VerifyCommand(Command):
    """Exact and randomized identity suites, the cross-engine check and the group-law scans."""

    def execute(self, request, config):
        seed = config.seed if request.seed is None else request.seed
        trials = config.trials if request.trials is None else request.trials
        specs = parse_scan_fields(request.scan) if request.scan else DEFAULT_SCAN_FIELDS
        sample_label = f"q({config.sample_prime})"

        exact = check_exact_suite()
        randomized = check_randomized_suite(config.sample_prime, trials, seed,
                                            config.max_retries, config.workers)
        cross = check_cross_engine(config.sample_prime, CROSS_ENGINE_SAMPLES, seed)
        scans = [group_law_scan(spec, config.workers) for spec in specs]

        records = [ReportRecord.from_identity_report(r) for r in exact]
        records += [ReportRecord.from_identity_report(r, sample_label) for r in randomized + [cross]]
        records += [ReportRecord.from_scan_result(s) for s in scans]
        failed = any(not r.passed for r in records)

        payload = {
            "seed": seed,
            "trials": trials,
            "reports": [r.to_dict() for r in exact + randomized + [cross]],
            "scans": [s.to_dict() for s in scans],
            "passed": not failed,
        }
        frame = pd.DataFrame([
            {"kind": r.kind, "name": r.name, "field": r.field, "status": r.status,
             "checks": r.checks, "failures": r.failures}
            for r in records
        ])
        text = frame.to_string(index=False) + f"\n{'FAILED' if failed else 'PASSED'} (seed {seed})"
        return CommandResult(self.get_name(), payload, text, records, failed)

    def get_name(self) -> str:
        return "verify"


class CommandFactory:
    """Factory class for creating command instances."""

    _commands: Dict[str, Type[Command]] = {
        "invariants": InvariantsCommand,
        "points": PointsCommand,
        "group": GroupCommand,
        "add": AddCommand,
        "smul": SmulCommand,
        "neg": NegCommand,
        "change": ChangeCommand,
        "verify": VerifyCommand,
    }

    @classmethod
    def create_command(cls, name: str) -> Command:
        """
        Raises:
            ParseError: If the command is not registered.
        """
        command_class = cls._commands.get(name)
        if command_class is None:
            raise ParseError(
                f"Unknown command: {name}. Available commands: {', '.join(cls.get_available_commands())}"
            )
        return command_class()

    @classmethod
    def get_available_commands(cls) -> list:
        return list(cls._commands.keys())

    @classmethod
    def register_command(cls, name: str, command_class: Type[Command]):
        cls._commands[name] = command_class
