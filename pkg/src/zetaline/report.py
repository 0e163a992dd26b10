"""Report bundles and their JSON / CSV / text serialisations."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

from zetaline import __version__
from zetaline.results import VerificationRecord

SCHEMA_VERSION = 1
CSV_COLUMNS = ["id", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_diff", "tol", "pass", "paper_ref"]


@dataclass(frozen=True)
class RunConfig:
    command: str
    omega: complex | None = None
    tol: float = 1e-9
    seed: int = 42
    format: str = "text"
    output_path: str | None = None
    count: int = 20
    r_max: int = 50
    method: str = "all"
    max_nodes: int = 2**17
    trunc_x: float | None = None
    timestamp: bool = False

    def echo(self) -> dict:
        d = asdict(self)
        d["omega"] = None if self.omega is None else _cplx(self.omega)
        d.pop("timestamp")
        return d


@dataclass
class ReportBundle:
    records: list[VerificationRecord]
    config: dict
    version: str = __version__
    results: list[dict] = field(default_factory=list)
    timestamp: str | None = None

    @property
    def summary(self) -> dict:
        passed = sum(1 for r in self.records if r.passed)
        return {"total": len(self.records), "passed": passed, "failed": len(self.records) - passed}

    @property
    def exit_code(self) -> int:
        return 1 if self.summary["failed"] else 0


def _cplx(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def record_to_dict(r: VerificationRecord) -> dict:
    return {
        "id": r.id,
        "lhs": _cplx(r.lhs),
        "rhs": _cplx(r.rhs),
        "abs_diff": r.abs_diff,
        "tol": r.tol,
        "pass": r.passed,
        "paper_ref": r.paper_ref,
    }


def record_from_dict(d: dict) -> VerificationRecord:
    rec = VerificationRecord(
        d["id"],
        complex(d["lhs"]["re"], d["lhs"]["im"]),
        complex(d["rhs"]["re"], d["rhs"]["im"]),
        d["tol"],
        d["paper_ref"],
        abs_diff=d["abs_diff"],
    )
    if rec.passed != d["pass"]:
        raise ValueError(f"record {d['id']!r}: pass flag inconsistent with abs_diff <= tol")
    return rec


def to_json(bundle: ReportBundle) -> str:
    doc = {
        "version": bundle.version,
        "schema": SCHEMA_VERSION,
        "config": bundle.config,
        "summary": bundle.summary,
        "records": [record_to_dict(r) for r in bundle.records],
    }
    if bundle.results:
        doc["results"] = bundle.results
    if bundle.timestamp is not None:
        doc["timestamp"] = bundle.timestamp
    return json.dumps(doc, indent=2) + "\n"


def from_json(text: str) -> ReportBundle:
    doc = json.loads(text)
    bundle = ReportBundle(
        records=[record_from_dict(r) for r in doc["records"]],
        config=doc["config"],
        version=doc["version"],
        results=doc.get("results", []),
        timestamp=doc.get("timestamp"),
    )
    if bundle.summary != doc["summary"]:
        raise ValueError("summary does not match records")
    return bundle


def to_csv(bundle: ReportBundle) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in bundle.records:
        w.writerow(
            [r.id, repr(r.lhs.real), repr(r.lhs.imag), repr(r.rhs.real), repr(r.rhs.imag),
             repr(r.abs_diff), repr(r.tol), "true" if r.passed else "false", r.paper_ref]
        )
    return buf.getvalue()


def fmt_complex(z) -> str:
    z = complex(z)
    return f"{z.real:.12g}{z.imag:+.12g}i"


def fmt_real(x: float) -> str:
    return f"{x:.12g}"


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines)


def to_text(bundle: ReportBundle) -> str:
    parts = []
    if bundle.results:
        keys = list(bundle.results[0])
        rows = [[_fmt_cell(res[k]) for k in keys] for res in bundle.results]
        parts.append(_table(keys, rows))
    if bundle.records:
        rows = [
            [r.id, fmt_complex(r.lhs), fmt_complex(r.rhs), fmt_real(r.abs_diff), fmt_real(r.tol), "PASS" if r.passed else "FAIL"]
            for r in bundle.records
        ]
        parts.append(_table(["id", "lhs", "rhs", "abs_diff", "tol", "result"], rows))
    s = bundle.summary
    parts.append(f"total {s['total']}  passed {s['passed']}  failed {s['failed']}")
    return "\n\n".join(parts) + "\n"


def _fmt_cell(v) -> str:
    if isinstance(v, dict) and set(v) == {"re", "im"}:
        return fmt_complex(complex(v["re"], v["im"]))
    if isinstance(v, float):
        return fmt_real(v)
    return str(v)


def serialize(bundle: ReportBundle, fmt: str) -> bytes:
    if fmt == "json":
        return to_json(bundle).encode()
    if fmt == "csv":
        return to_csv(bundle).encode()
    if fmt == "text":
        return to_text(bundle).encode()
    raise ValueError(f"unknown format {fmt!r}")
