"""CSV and JSON renderings of tables and reports.

Big integers are written as decimal strings, floats with 15 significant
digits.
"""

from __future__ import annotations

import csv
import io
from typing import Any, Dict, Iterable, List, Sequence

from packages.core.models import (
    AMVerification,
    BECertificate,
    BoundsReport,
    CountTable,
    EnginePath,
    GrowthReport,
    StaircaseSequence,
    WitnessList,
    WitnessSearch,
)
from packages.sets import descriptor_from_json, descriptor_to_json


def fmt_float(value: float) -> str:
    return f"{value:.15g}"


def json_float(value: float) -> float:
    return float(fmt_float(value))


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt_float(v) if isinstance(v, float) else v for v in row])
    return buffer.getvalue()


# Count tables


def table_to_csv(table: CountTable) -> str:
    return to_csv(["n", "p"], ((n, str(p)) for n, p in enumerate(table.values)))


def table_to_json(table: CountTable) -> Dict[str, Any]:
    return {
        "parts": descriptor_to_json(table.parts),
        "mults": descriptor_to_json(table.mults),
        "limit": table.limit,
        "engine_path": table.engine_path.value,
        "values": [str(p) for p in table.values],
    }


def table_from_json(payload: Dict[str, Any]) -> CountTable:
    return CountTable(
        values=tuple(int(p) for p in payload["values"]),
        parts=descriptor_from_json(payload["parts"]),
        mults=descriptor_from_json(payload["mults"]),
        limit=int(payload["limit"]),
        engine_path=EnginePath(payload["engine_path"]),
    )


# Oracle witnesses


def witnesses_to_csv(found: WitnessList) -> str:
    return to_csv(["index", "partition"], ((i, str(w)) for i, w in enumerate(found.witnesses)))


def witnesses_to_json(found: WitnessList) -> Dict[str, Any]:
    return {
        "truncated": found.truncated,
        "count": len(found),
        "witnesses": [{str(a): m for a, m in w.terms.items()} for w in found.witnesses],
    }


# Analysis reports


def growth_to_csv(report: GrowthReport, witnesses: Sequence[int] = ()) -> str:
    hits = set(witnesses)
    rows = (
        (n, r, sup, inf, n in hits)
        for (n, r), sup, inf in zip(report.exponents, report.running_sup, report.running_inf)
    )
    return to_csv(["n", "exponent", "running_sup", "running_inf", "exceeds_n_k"], rows)


def growth_to_json(report: GrowthReport) -> Dict[str, Any]:
    return {
        "exponents": [[n, json_float(r)] for n, r in report.exponents],
        "running_sup": [json_float(v) for v in report.running_sup],
        "running_inf": [json_float(v) for v in report.running_inf],
        "zero_count_indices": list(report.zero_count_indices),
    }


BOUNDS_COLUMNS = [
    "x",
    "A_of_x",
    "M_of_x",
    "upper_lhs",
    "upper_rhs",
    "lower_range",
    "lower_lhs",
    "argmax_n",
    "argmax_value",
    "upper_holds",
    "lower_holds",
    "averaging_holds",
    "floor_holds",
]


def _bounds_row(report: BoundsReport) -> List[Any]:
    return [
        report.x,
        report.A_of_x,
        report.M_of_x,
        str(report.upper_lhs),
        str(report.upper_rhs),
        report.lower_range,
        str(report.lower_lhs),
        report.argmax_n,
        str(report.argmax_value),
        report.upper_holds,
        report.lower_holds,
        report.averaging_holds,
        report.floor_holds,
    ]


def bounds_to_csv(reports: Sequence[BoundsReport]) -> str:
    return to_csv(BOUNDS_COLUMNS, (_bounds_row(r) for r in reports))


def bounds_to_json(reports: Sequence[BoundsReport]) -> List[Dict[str, Any]]:
    return [dict(zip(BOUNDS_COLUMNS, _bounds_row(r))) for r in reports]


def search_to_csv(search: WitnessSearch) -> str:
    return to_csv(["round", "x", "n", "p"], ((i + 1, r.x, r.n, str(r.p)) for i, r in enumerate(search.rounds)))


def search_to_json(search: WitnessSearch) -> Dict[str, Any]:
    return {
        "k": search.k,
        "truncated": search.truncated,
        "message": search.message,
        "rounds": [{"x": r.x, "n": r.n, "p": str(r.p)} for r in search.rounds],
    }


def certificate_to_csv(cert: BECertificate) -> str:
    return to_csv(["element", "gcd_without"], sorted(cert.gcds.items()))


def certificate_to_json(cert: BECertificate) -> Dict[str, Any]:
    return {
        "holds": cert.holds,
        "definitive": cert.definitive,
        "bound": cert.bound,
        "gcds": {str(a): g for a, g in sorted(cert.gcds.items())},
    }


def verification_to_csv(result: AMVerification, table: CountTable) -> str:
    return to_csv(["power", "p"], ((q, str(table[q])) for q in result.powers))


def verification_to_json(result: AMVerification) -> Dict[str, Any]:
    return {
        "base": result.base,
        "limit": result.limit,
        "passed": result.passed,
        "powers_checked": list(result.powers),
        "nonpositive": list(result.nonpositive),
        "nonunique_powers": list(result.nonunique_powers),
    }


def sequence_to_json(seq: StaircaseSequence) -> Dict[str, Any]:
    return {"terms": [str(t) for t in seq.terms]}
