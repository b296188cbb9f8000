"""Deterministic text / JSON / CSV rendering of audit reports.

Identical inputs must produce byte-identical output, so no timestamps
or environment data appear here, floats are rendered with repr (JSON,
CSV) or %.12g (text tables), and iteration order is the insertion
order the audit functions fixed.
"""

import csv
import io
import json

import numpy as np

from .audit import AuditReport


def _scalar(v):
    """Coerce one value to a JSON-friendly scalar (complex -> re/im)."""
    if isinstance(v, (np.floating,)):
        v = float(v)
    elif isinstance(v, (np.integer,)):
        v = int(v)
    elif isinstance(v, np.bool_):
        v = bool(v)
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return v


def jsonable(v):
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    return _scalar(v)


def report_to_dict(report: AuditReport) -> dict:
    out = {
        "claim_id": report.claim_id,
        "params": jsonable(report.params),
        "metrics": jsonable(report.metrics),
        "verdict": report.verdict,
    }
    if report.series is not None:
        out["series"] = {
            "columns": list(report.series.columns),
            "rows": jsonable([list(r) for r in report.series.rows]),
        }
    if report.notes:
        out["notes"] = list(report.notes)
    return out


def render_json(reports) -> str:
    """One report renders as an object, several as an array."""
    if isinstance(reports, AuditReport):
        payload = report_to_dict(reports)
    else:
        payload = [report_to_dict(r) for r in reports]
    return json.dumps(payload, indent=2) + "\n"


def _flat_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if v is None:
        return ""
    return str(v)


def _flatten_metrics(prefix: str, v, out: dict) -> None:
    v = _scalar(v)
    if isinstance(v, dict) and set(v) == {"re", "im"}:
        out[f"{prefix}_re"] = v["re"]
        out[f"{prefix}_im"] = v["im"]
    elif isinstance(v, dict):
        for k, x in v.items():
            _flatten_metrics(f"{prefix}.{k}", x, out)
    else:
        out[prefix] = v


def render_csv(report: AuditReport) -> str:
    """RFC-4180 table: the series if present, else one metrics row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    if report.series is not None:
        writer.writerow(report.series.columns)
        for row in report.series.rows:
            writer.writerow([_flat_cell(_py(c)) for c in row])
    else:
        flat: dict = {}
        for k, v in report.metrics.items():
            _flatten_metrics(k, v, flat)
        writer.writerow(flat.keys())
        writer.writerow([_flat_cell(v) for v in flat.values()])
    return buf.getvalue()


def _py(v):
    if isinstance(v, (np.floating,)):
        return float(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    return v


def _fmt(v) -> str:
    v = _scalar(v)
    if isinstance(v, dict) and set(v) == {"re", "im"}:
        im = v["im"]
        sign = "+" if im >= 0 else "-"
        return f"{v['re']:.12g}{sign}{abs(im):.12g}i"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_fmt(x)}" for k, x in v.items()) + "}"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def render_text(report: AuditReport) -> str:
    lines = [f"claim: {report.claim_id}", f"verdict: {report.verdict}"]
    if report.params:
        lines.append(
            "params: " + ", ".join(f"{k}={_fmt(v)}" for k, v in report.params.items())
        )
    lines.append("metrics:")
    for k, v in report.metrics.items():
        lines.append(f"  {k} = {_fmt(v)}")
    if report.series is not None:
        lines.append("series: " + ", ".join(report.series.columns))
        for row in report.series.rows:
            lines.append("  " + "  ".join(_fmt(_py(c)) for c in row))
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def render_text_many(reports) -> str:
    return "\n".join(render_text(r) for r in reports)
