"""Batch command-line front end with observers and exit codes."""

import argparse
import json
import os
import sys
from abc import ABC, abstractmethod
from typing import List, Optional, TextIO

from colorama import Fore, Style, init

from weierstrass.commands import CommandFactory, CommandRequest, CommandResult
from weierstrass.config import WeierstrassConfig
from weierstrass.exceptions import (
    DomainError,
    ParseError,
    ReportLogError,
    VerificationFailure,
    WeierstrassError,
)
from weierstrass.logger import Logger
from weierstrass.report_log import ReportLog

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_DOMAIN_ERROR = 3

REPORT_FILE = "verify_reports.csv"

VALUE_FLAGS = frozenset({
    "--field", "--a", "--p", "--q", "-n", "--u", "--r", "--s", "--t",
    "--format", "--seed", "--trials", "--scan", "--report-csv",
})

init()


class CommandObserver(ABC):
    """Abstract observer for completed commands."""

    @abstractmethod
    def on_command_completed(self, request: CommandRequest, result: CommandResult):
        pass  # pragma: no cover


class LoggingObserver(CommandObserver):
    def __init__(self, logger: Logger):
        self.logger = logger

    def on_command_completed(self, request: CommandRequest, result: CommandResult):
        self.logger.info(
            f"Command completed: {result.command} field={request.field} a={request.a} "
            f"records={len(result.records)} failed={result.failed}"
        )


class ReportExportObserver(CommandObserver):
    """Appends the report records of a command to a CSV file, keeping earlier runs."""

    def __init__(self, log: ReportLog, file_path: str, encoding: str = "utf-8"):
        self.log = log
        self.file_path = file_path
        self.encoding = encoding
        if os.path.exists(file_path):
            log.load_from_csv(file_path, encoding)

    def on_command_completed(self, request: CommandRequest, result: CommandResult):
        if not result.records:
            return
        self.log.extend(result.records)
        self.log.save_to_csv(self.file_path, self.encoding)
        last = self.log.get_last_record()
        Logger().info(f"Reports saved to {self.file_path}: {len(self.log)} records, "
                      f"{self.log.failures} failures, last {last.kind} {last.name}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weierstrass",
        description="Weierstrass curves over finite fields and the rationals.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser, curve: bool = True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if curve:
            p.add_argument("--field", required=True, help='q(p), q(p^k[,m=c0,...,ck]) or rational')
            p.add_argument("--a", required=True, help='curve coefficients "a1,a2,a3,a4,a6"')

    for name in ("invariants", "points", "group"):
        common(sub.add_parser(name))

    for name in ("add", "neg", "smul"):
        p = sub.add_parser(name)
        common(p)
        p.add_argument("--p", required=True, help='point literal "x,y" or O')
        if name == "add":
            p.add_argument("--q", required=True, help='point literal "x,y" or O')
        if name == "smul":
            p.add_argument("-n", required=True, dest="n")

    p = sub.add_parser("change")
    common(p)
    for flag in ("u", "r", "s", "t"):
        p.add_argument(f"--{flag}", default=None)
    p.add_argument("--p", default=None, help="optional point to carry to the new curve")

    p = sub.add_parser("verify")
    common(p, curve=False)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--scan", default=None, help='fields for the group-law scan, e.g. "q(2);q(3)"')
    p.add_argument("--report-csv", dest="report_csv", default=None)
    return parser


def attach_values(argv: List[str]) -> List[str]:
    """Join a value flag to a following token like "-1,-1" so argparse keeps it as the value."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (token in VALUE_FLAGS and i + 1 < len(argv)
                and argv[i + 1].startswith("-") and not argv[i + 1].startswith("--")):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def parse_request(argv: List[str]) -> CommandRequest:
    """
    Raises:
        ParseError: On unknown flags, missing flags or bad flag values.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(attach_values(argv))
    except SystemExit as e:
        if e.code == 0:
            raise
        raise ParseError(f"Invalid command line: {' '.join(argv)}")
    values = {k: v for k, v in vars(args).items() if k in CommandRequest.__dataclass_fields__}
    request = CommandRequest(**values)
    if request.seed is not None and request.seed < 0:
        raise ParseError("--seed must be non-negative")
    if request.trials is not None and request.trials < 1:
        raise ParseError("--trials must be at least 1")
    return request


def render(result: CommandResult, fmt: str) -> str:
    if fmt == "json":
        body = {"schema": SCHEMA_VERSION, "command": result.command, **result.payload}
        return json.dumps(body, indent=2, ensure_ascii=False)
    return result.text


def _color(stream: TextIO, color: str, text: str) -> str:
    isatty = getattr(stream, "isatty", None)
    if isatty is not None and isatty():
        return f"{color}{text}{Style.RESET_ALL}"
    return text


def run(request: CommandRequest, config: Optional[WeierstrassConfig] = None,
        stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Execute one request and write its output.

    Returns:
        0 on success, 1 if verification failed, 2 on malformed input and 3
        when the input is well-formed but outside an operation's domain.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    logger = Logger()
    try:
        config = config or WeierstrassConfig()
        observers: List[CommandObserver] = [LoggingObserver(logger)]
        csv_path = request.report_csv
        if csv_path is None and config.auto_save:
            csv_path = os.path.join(config.report_dir, REPORT_FILE)
        if csv_path is not None:
            observers.append(ReportExportObserver(ReportLog(config.max_reports), csv_path,
                                                  config.default_encoding))

        command = CommandFactory.create_command(request.subcommand)
        logger.info(f"Dispatching {request.subcommand}")
        logger.debug(f"Request: {request}")
        result = command.execute(request, config)
        for observer in observers:
            observer.on_command_completed(request, result)

        stdout.write(render(result, request.format) + "\n")
        if result.failed:
            raise VerificationFailure("One or more verification checks failed")
        return EXIT_OK
    except WeierstrassError as e:
        logger.error(str(e))
        stderr.write(_color(stderr, Fore.RED, f"Error: {e}") + "\n")
        return _exit_code(e)


def _exit_code(error: WeierstrassError) -> int:
    if isinstance(error, VerificationFailure):
        return EXIT_VERIFICATION_FAILED
    if isinstance(error, ParseError):
        return EXIT_PARSE_ERROR
    if isinstance(error, (DomainError, ReportLogError)):
        return EXIT_DOMAIN_ERROR
    return EXIT_PARSE_ERROR


def main(argv: Optional[List[str]] = None, config: Optional[WeierstrassConfig] = None) -> int:
    """Entry point: parse argv, configure file logging, run."""
    argv = sys.argv[1:] if argv is None else argv
    try:
        request = parse_request(argv)
        config = config or WeierstrassConfig()
        Logger().configure_file_handler(config.log_dir)
    except WeierstrassError as e:
        Logger().error(str(e))
        sys.stderr.write(_color(sys.stderr, Fore.RED, f"Error: {e}") + "\n")
        return _exit_code(e)
    return run(request, config)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
