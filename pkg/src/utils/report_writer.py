import json
from typing import List

import pandas as pd

from src.core.report import ValidationReport, Violation

FORMATS = ("text", "json", "csv")


def _plural(n: int) -> str:
    return f"{n} violation" if n == 1 else f"{n} violations"


def render_violation(v: Violation) -> str:
    witness = json.dumps(list(v.witness), ensure_ascii=False)
    return f"{v.law} {witness} {v.message}".rstrip()


def render_text(report: ValidationReport) -> str:
    lines: List[str] = [f"{report.status.value.upper()} ({_plural(len(report.violations))})"]
    lines += [render_violation(v) for v in report.violations]
    return "\n".join(lines) + "\n"


def render_json(report: ValidationReport) -> str:
    return json.dumps(report.to_dict(), ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def render_csv(report: ValidationReport) -> str:
    rows = [
        {"status": report.status.value, "law": v.law, "witness": json.dumps(list(v.witness), ensure_ascii=False), "message": v.message}
        for v in report.violations
    ]
    df = pd.DataFrame(rows, columns=["status", "law", "witness", "message"])
    return df.to_csv(index=False, lineterminator="\n")


def write_report(report: ValidationReport, fmt: str = "text") -> str:
    """Render ``report`` deterministically; ``json`` parses back with ``read_report``."""
    if fmt == "text":
        return render_text(report)
    if fmt == "json":
        return render_json(report)
    if fmt == "csv":
        return render_csv(report)
    raise ValueError(f"Unknown report format {fmt!r}; use one of {', '.join(FORMATS)}")


def read_report(text: str) -> ValidationReport:
    return ValidationReport.from_dict(json.loads(text))
