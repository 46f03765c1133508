from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional, Sequence

from pydantic import ValidationError

from apps.cli.settings import settings
from logger import logger
from packages.core.errors import PartmultError, UsageError
from packages.sets import parse_descriptor

from .cache import CacheManager
from .commands import CommandResult, dispatch
from .config import RunConfig
from .middleware import timed_operation

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERIFICATION_FAILED = 2

COMMANDS = [
    "count",
    "oracle",
    "verify-am",
    "growth",
    "bounds",
    "iterate",
    "schur",
    "construct-f",
    "be-check",
    "monotone",
]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="partmult",
        description="Partitions with restricted multiplicities: tables, bounds and verification runs",
    )
    parser.add_argument("command", nargs="?", choices=COMMANDS, help="Command to run")
    parser.add_argument("--set-a", help="Part set A (JSON descriptor or shorthand such as pow2, 1,2,3)")
    parser.add_argument("--set-m", help="Multiplicity set M (default: naturals)")
    parser.add_argument("--base", type=int, help="Base a for verify-am (A = powers of a, M = non-multiples of a)")
    parser.add_argument("--n-max", type=int, help="Table limit N")
    parser.add_argument("--n", type=int, help="Single n for oracle witness listing")
    parser.add_argument("--k", type=int, default=1, help="Exponent k for iterate and growth witnesses (default: 1)")
    parser.add_argument("--x", type=int, action="append", dest="x_list", default=[], help="x value for bounds (repeatable)")
    parser.add_argument("--rounds", type=int, default=1, help="Witness rounds for iterate (default: 1)")
    parser.add_argument("--from", type=int, default=0, dest="start", help="First n for monotone (default: 0)")
    parser.add_argument("--strict", action="store_true", help="monotone: require strict increase")
    parser.add_argument("--terms", type=int, default=4, help="construct-f: number of breakpoints K (default: 4)")
    parser.add_argument("--bound", type=int, help="be-check/monotone: truncation bound for the gcd condition")
    parser.add_argument("--path", default="auto", choices=["auto", "generic", "ap", "oracle"], help="Engine path")
    parser.add_argument("--search-bound", default="exact", choices=["exact", "proof"], help="iterate: carried bound")
    parser.add_argument("--cap", type=int, help="Oracle enumeration cap")
    parser.add_argument("--format", default="csv", choices=["csv", "json"], help="Output format (default: csv)")
    parser.add_argument("--budget", type=int, help="Engine work ceiling (default: PARTMULT_BUDGET)")
    parser.add_argument("--jobs", type=int, help="Worker processes for bounds")
    parser.add_argument("--deterministic", action="store_true", help="Omit the timestamp from JSON reports")
    parser.add_argument("--output", dest="output_path", help="Write the report here instead of stdout")
    parser.add_argument("--cache", dest="cache_path", help="SQLite table cache (default: PARTMULT_CACHE_DB_PATH)")
    parser.add_argument("--replay", help="Re-run the config embedded in a JSON report")
    return parser


def _descriptor(text: Optional[str]) -> Optional[Dict[str, Any]]:
    if text is None:
        return None
    return parse_descriptor(text).model_dump(mode="json")


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.replay:
        report = json.loads(Path(args.replay).read_text(encoding="utf-8"))
        if not isinstance(report, dict) or "config" not in report:
            raise UsageError(f"{args.replay} has no embedded config")
        data = dict(report["config"])
        data["output_path"] = args.output_path
        return RunConfig.model_validate(data)

    if args.command is None:
        raise UsageError("a command is required (or --replay)")
    data = {
        "command": args.command,
        "set_a": _descriptor(args.set_a),
        "set_m": _descriptor(args.set_m),
        "base": args.base,
        "n_max": args.n_max,
        "n": args.n,
        "k": args.k,
        "x_list": args.x_list,
        "rounds": args.rounds,
        "start": args.start,
        "strict": args.strict,
        "terms": args.terms,
        "bound": args.bound,
        "path": args.path,
        "search_bound": args.search_bound,
        "cap": args.cap if args.cap is not None else settings.oracle_cap,
        "format": args.format,
        "budget": args.budget if args.budget is not None else settings.budget,
        "jobs": args.jobs if args.jobs is not None else settings.jobs,
        "deterministic": args.deterministic,
        "output_path": args.output_path,
    }
    return RunConfig.model_validate(data)


def render(config: RunConfig, result: CommandResult) -> str:
    if config.format == "csv":
        return result.csv
    report: Dict[str, Any] = {"config": config.replayable(), "result": result.payload}
    if not config.deterministic:
        report["generated_at"] = datetime.now(timezone.utc).isoformat()
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def write_report(config: RunConfig, text: str) -> None:
    if config.output_path:
        path = Path(config.output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("Report written to %s", path)
    else:
        sys.stdout.write(text)


def run(config: RunConfig, cache: Optional[CacheManager] = None) -> int:
    with timed_operation(config.command) as op:
        result = dispatch(config, cache)
        write_report(config, render(config, result))
        op["failed"] = result.failed
    if result.summary:
        logger.info("%s: %s", config.command, result.summary)
    return EXIT_VERIFICATION_FAILED if result.failed else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        config = config_from_args(args)
        cache_path = args.cache_path or settings.cache_db_path
        cache = CacheManager(sqlite_db_path=cache_path, budget=config.budget)
        return run(config, cache)
    except ValidationError as exc:
        messages: List[str] = [f"{'.'.join(str(p) for p in e['loc'])}: {e['msg']}" for e in exc.errors()]
        logger.error("Invalid arguments: %s", "; ".join(messages))
        return EXIT_ERROR
    except (PartmultError, ValueError, OSError) as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
