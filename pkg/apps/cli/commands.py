"""One handler per CLI command.

Each handler turns a validated RunConfig into a CommandResult holding the
CSV text, the JSON payload and whether a verification check failed.
"""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from logger import logger
from packages.analysis import (
    be_condition,
    bounds_report,
    bounds_reports,
    growth_exponents,
    iterated_witness_search,
    log_density,
    monotonicity_scan,
    schur_main_term,
    schur_ratio,
    superpoly_witnesses,
    verify_theorem_pair,
)
from packages.analysis.bounds import TableBuilder
from packages.constructions import breakpoint_profile, build_sequence, f_table
from packages.core.errors import UsageError
from packages.core.models import BoundsReport, CountTable
from packages.engine import count_ap_optimized, count_generic, count_oracle, enumerate_partitions
from packages.engine.export import (
    bounds_to_csv,
    bounds_to_json,
    certificate_to_csv,
    certificate_to_json,
    fmt_float,
    growth_to_csv,
    growth_to_json,
    json_float,
    search_to_csv,
    search_to_json,
    sequence_to_json,
    table_to_csv,
    table_to_json,
    to_csv,
    verification_to_csv,
    verification_to_json,
    witnesses_to_csv,
    witnesses_to_json,
)
from packages.sets import SetDescriptor, counting_function, enumerate_up_to, is_finite

from .cache import CacheManager
from .config import RunConfig

CONSTRUCT_F_MAX_ROWS = 10**6


@dataclass(frozen=True)
class CommandResult:
    csv: str
    payload: Any
    failed: bool = False
    summary: str = ""


def engine_builder(path: str, budget: int, cap: int) -> TableBuilder:
    """Table builder for an explicitly requested engine path."""

    def build(parts: SetDescriptor, mults: SetDescriptor, limit: int) -> CountTable:
        if path == "generic":
            return count_generic(parts, mults, limit, budget=budget)
        if path == "ap":
            return count_ap_optimized(parts, mults, limit, budget=budget)
        if path == "oracle":
            return count_oracle(parts, mults, limit, cap=cap)
        raise UsageError(f"unknown engine path {path!r}")

    return build


def table_builder(config: RunConfig, cache: CacheManager) -> TableBuilder:
    # explicit engine paths bypass the cache
    if config.path == "auto":
        return cache.build
    return engine_builder(config.path, config.budget, config.cap)


def _require_limit(config: RunConfig) -> int:
    if config.n_max is None:
        raise UsageError(f"{config.command} needs --n-max")
    return config.n_max


def run_count(config: RunConfig, cache: CacheManager) -> CommandResult:
    table = table_builder(config, cache)(config.parts, config.mults, _require_limit(config))
    return CommandResult(
        csv=table_to_csv(table),
        payload=table_to_json(table),
        summary=f"p(0..{table.limit}) via {table.engine_path.value}",
    )


def run_oracle(config: RunConfig, cache: CacheManager) -> CommandResult:
    if config.n is not None:
        found = enumerate_partitions(config.parts, config.mults, config.n, config.cap)
        payload = {"n": config.n, **witnesses_to_json(found)}
        suffix = " (truncated)" if found.truncated else ""
        return CommandResult(
            csv=witnesses_to_csv(found),
            payload=payload,
            summary=f"{len(found)} partitions of {config.n}{suffix}",
        )
    table = count_oracle(config.parts, config.mults, _require_limit(config), cap=config.cap)
    return CommandResult(csv=table_to_csv(table), payload=table_to_json(table))


def run_verify_am(config: RunConfig, cache: CacheManager) -> CommandResult:
    if config.base is None:
        raise UsageError("verify-am needs --base")
    result, table = verify_theorem_pair(
        config.base, _require_limit(config), builder=table_builder(config, cache)
    )
    return CommandResult(
        csv=verification_to_csv(result, table),
        payload=verification_to_json(result),
        failed=not result.passed,
        summary=(
            f"base {config.base}: p >= 1 on [1, {result.limit}], "
            f"p = 1 at {len(result.powers)} powers"
            if result.passed
            else f"base {config.base}: {len(result.nonpositive)} zeros, "
            f"{len(result.nonunique_powers)} powers with p != 1"
        ),
    )


def run_growth(config: RunConfig, cache: CacheManager) -> CommandResult:
    table = table_builder(config, cache)(config.parts, config.mults, _require_limit(config))
    report = growth_exponents(table)
    witnesses = superpoly_witnesses(table, config.k)
    payload = growth_to_json(report)
    payload.update(k=config.k, superpoly_witnesses=witnesses)
    return CommandResult(
        csv=growth_to_csv(report, witnesses),
        payload=payload,
        summary=(
            f"sup {fmt_float(report.sup)}, inf {fmt_float(report.inf)}, "
            f"{len(witnesses)} n with p(n) > n^{config.k}"
        ),
    )


def _bounds_worker(
    parts: SetDescriptor, mults: SetDescriptor, x: int, path: str, budget: int, cap: int
) -> BoundsReport:
    builder = None if path == "auto" else engine_builder(path, budget, cap)
    return bounds_report(parts, mults, x, budget=budget, builder=builder)


def run_bounds(config: RunConfig, cache: CacheManager) -> CommandResult:
    xs = sorted(set(config.x_list))
    if config.jobs > 1 and len(xs) > 1:
        logger.info("Building %d bounds tables with %d workers", len(xs), config.jobs)
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            futures = [
                pool.submit(
                    _bounds_worker, config.parts, config.mults, x,
                    config.path, config.budget, config.cap,
                )
                for x in xs
            ]
            reports = [f.result() for f in futures]
    else:
        reports = bounds_reports(
            config.parts, config.mults, xs, builder=table_builder(config, cache)
        )

    payload: List[Dict[str, Any]] = bounds_to_json(reports)
    for row, report in zip(payload, reports):
        row["log_density"] = json_float(log_density(config.parts, report.x)) if report.x >= 2 else None
    failing = [r.x for r in reports if not r.all_hold]
    return CommandResult(
        csv=bounds_to_csv(reports),
        payload=payload,
        failed=bool(failing),
        summary=f"inequalities fail at x in {failing}" if failing else f"all hold for x in {xs}",
    )


def run_iterate(config: RunConfig, cache: CacheManager) -> CommandResult:
    if config.jobs > 1:
        logger.info("iterate runs its rounds sequentially; ignoring --jobs %d", config.jobs)
    search = iterated_witness_search(
        config.parts,
        config.mults,
        config.k,
        config.rounds,
        budget=config.budget,
        bound=config.search_bound,
        builder=table_builder(config, cache),
    )
    return CommandResult(csv=search_to_csv(search), payload=search_to_json(search), summary=search.message)


def run_schur(config: RunConfig, cache: CacheManager) -> CommandResult:
    if not is_finite(config.parts):
        raise UsageError("schur needs a finite --set-a")
    elements = enumerate_up_to(config.parts, sys.maxsize)
    table = table_builder(config, cache)(config.parts, config.mults, _require_limit(config))
    ratios = schur_ratio(table, elements)
    rows = [
        (n, str(table[n]), str(schur_main_term(elements, n)), float(r))
        for n, r in ratios
    ]
    payload = {
        "parts": elements,
        "rows": [
            {"n": n, "p": p, "main_term": main, "ratio": json_float(r)}
            for n, p, main, r in rows
        ],
    }
    last = fmt_float(rows[-1][3]) if rows else "-"
    return CommandResult(
        csv=to_csv(["n", "p", "main_term", "ratio"], rows),
        payload=payload,
        summary=f"ratio at n={table.limit}: {last}",
    )


def run_construct_f(config: RunConfig, cache: CacheManager) -> CommandResult:
    seq = build_sequence(config.terms)
    stop = seq.last if config.n_max is None else min(config.n_max + 1, seq.last)
    if stop - 1 > CONSTRUCT_F_MAX_ROWS:
        raise UsageError(
            f"f is defined on [1, {seq.last}); pass --n-max to cap the rows "
            f"(at most {CONSTRUCT_F_MAX_ROWS})"
        )
    rows = f_table(seq, 1, stop)
    increasing = all(b[1] > a[1] for a, b in zip(rows, rows[1:]))
    dominates = all(value >= n for n, value in rows)
    profile = breakpoint_profile(seq)
    payload = {
        "sequence": sequence_to_json(seq),
        "strictly_increasing": increasing,
        "f_at_least_n": dominates,
        "profile": [
            {
                "k": row.k,
                "n_k": str(row.n_k),
                "exponent_at_break": row.exponent_at_break,
                "below_next": str(row.below_next),
                "exponent_below_next": row.exponent_below_next,
                "below_next_bound": json_float(row.below_next_bound),
            }
            for row in profile
        ],
        "rows": [[n, str(value)] for n, value in rows],
    }
    return CommandResult(
        csv=to_csv(["n", "f"], ((n, str(value)) for n, value in rows)),
        payload=payload,
        failed=not (increasing and dominates),
        summary=f"{len(rows)} values over {len(seq)} breakpoints",
    )


def _be_bound(config: RunConfig) -> int:
    bound = config.bound if config.bound is not None else config.n_max
    if bound is None:
        raise UsageError(f"{config.command} needs --bound or --n-max")
    return bound


def run_be_check(config: RunConfig, cache: CacheManager) -> CommandResult:
    cert = be_condition(config.parts, _be_bound(config))
    state = "holds" if cert.holds else "fails"
    return CommandResult(
        csv=certificate_to_csv(cert),
        payload=certificate_to_json(cert),
        summary=f"gcd condition {state} up to {cert.bound}"
        + ("" if cert.definitive else " (provisional)"),
    )


def run_monotone(config: RunConfig, cache: CacheManager) -> CommandResult:
    limit = _require_limit(config)
    if config.start >= limit:
        raise UsageError(f"--from must be below --n-max ({limit})")
    table = table_builder(config, cache)(config.parts, config.mults, limit)
    first_failure = monotonicity_scan(table, config.start, config.strict)
    bound = config.bound if config.bound is not None else limit
    # the gcd certificate needs two elements below the bound
    cert = be_condition(config.parts, bound) if counting_function(config.parts, bound) >= 2 else None
    payload = {
        "start": config.start,
        "strict": config.strict,
        "limit": limit,
        "first_failure": first_failure,
        "be_condition": None if cert is None else certificate_to_json(cert),
    }
    rows: List[Any] = [(config.start, limit, config.strict, "" if first_failure is None else first_failure)]
    return CommandResult(
        csv=to_csv(["from", "n_max", "strict", "first_failure"], rows),
        payload=payload,
        summary=(
            f"monotone on [{config.start}, {limit}]"
            if first_failure is None
            else f"p({first_failure + 1}) does not exceed p({first_failure})"
        ),
    )


HANDLERS: Dict[str, Callable[[RunConfig, CacheManager], CommandResult]] = {
    "count": run_count,
    "oracle": run_oracle,
    "verify-am": run_verify_am,
    "growth": run_growth,
    "bounds": run_bounds,
    "iterate": run_iterate,
    "schur": run_schur,
    "construct-f": run_construct_f,
    "be-check": run_be_check,
    "monotone": run_monotone,
}


def dispatch(config: RunConfig, cache: Optional[CacheManager] = None) -> CommandResult:
    if cache is None:
        cache = CacheManager(budget=config.budget)
    return HANDLERS[config.command](config, cache)
