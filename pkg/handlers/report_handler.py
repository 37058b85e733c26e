import csv
import io
import json
import logging
import sys
from dataclasses import fields
from typing import Any, Dict, List, Mapping, Optional

from common.errors import ConfigurationError
from common.models.models import FrameRow, OutputFormat, RunReport

# Configure logging
logger = logging.getLogger("report_handler")

ROW_FIELDS = [f.name for f in fields(FrameRow)]

# Encoded column -> FrameRow attribute, where they differ
COLUMN_ALIASES = {"W_ratio": "w_ratio"}
ROW_COLUMNS = [next((c for c, a in COLUMN_ALIASES.items() if a == name), name) for name in ROW_FIELDS]


def format_number(value: Any, fmt: OutputFormat) -> str:
    """17 significant digits for machine formats, 6 for the human table."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "PASS" if value else "FAIL"
    if isinstance(value, float):
        return f"{value:.6g}" if fmt is OutputFormat.TABLE else f"{value:.17g}"
    return str(value)


def _machine_value(value: Any) -> Any:
    # .17g is a lossless round trip; json then writes the shortest exact repr
    if isinstance(value, float):
        return float(f"{value:.17g}")
    return value


def _summary(report: RunReport) -> Dict[str, Any]:
    return {
        "h_est": report.h_est,
        "max_rel_residual": report.max_rel_residual,
        "calibrated_amplitude": report.calibrated_amplitude,
        "suites": dict(report.suites),
        "passed": report.passed,
    }


def _csv_writer(buffer: io.StringIO):
    return csv.writer(buffer, lineterminator="\n")


def _table(header: List[str], rows: List[List[str]]) -> str:
    widths = [max(len(cell) for cell in column) for column in zip(header, *rows)]
    lines = ["  ".join(cell.rjust(width) for cell, width in zip(line, widths)) for line in [header] + rows]
    return "\n".join(lines) + "\n"


def encode_report(report: RunReport, fmt: OutputFormat) -> str:
    """
    Serialise a run report.

    csv: a header row of column names (W_ratio for FrameRow.w_ratio), one row
    per frame, a blank line, then a key,value block with the summary. json: one object with `rows` and
    `summary`. table: fixed-width text for reading.

    Args:
        report (RunReport): the report
        fmt (OutputFormat): csv, json or table

    Returns:
        str: encoded report, newline terminated
    """
    fmt = OutputFormat(fmt)
    summary = _summary(report)
    if fmt is OutputFormat.JSON:
        payload = {
            "rows": [{column: _machine_value(getattr(row, name)) for column, name in zip(ROW_COLUMNS, ROW_FIELDS)}
                     for row in report.rows],
            "summary": {
                "h_est": _machine_value(summary["h_est"]),
                "max_rel_residual": _machine_value(summary["max_rel_residual"]),
                "calibrated_amplitude": _machine_value(summary["calibrated_amplitude"]),
                "suites": {name: ("PASS" if ok else "FAIL") for name, ok in summary["suites"].items()},
                "passed": summary["passed"],
            },
        }
        return json.dumps(payload, indent=2) + "\n"

    rows = [[format_number(getattr(row, name), fmt) for name in ROW_FIELDS] for row in report.rows]
    summary_rows = [["h_est", format_number(summary["h_est"], fmt)],
                    ["max_rel_residual", format_number(summary["max_rel_residual"], fmt)],
                    ["calibrated_amplitude", format_number(summary["calibrated_amplitude"], fmt)]]
    summary_rows += [[f"suite_{name}", format_number(ok, fmt)] for name, ok in summary["suites"].items()]
    summary_rows.append(["passed", format_number(summary["passed"], fmt)])

    if fmt is OutputFormat.TABLE:
        return _table(ROW_COLUMNS, rows) + "\n" + _table(["key", "value"], summary_rows)

    buffer = io.StringIO()
    writer = _csv_writer(buffer)
    writer.writerow(ROW_COLUMNS)
    writer.writerows(rows)
    writer.writerow([])
    writer.writerow(["key", "value"])
    writer.writerows(summary_rows)
    return buffer.getvalue()


def _optional_float(value: Any) -> Optional[float]:
    return None if value in (None, "") else float(value)


def _frame_row(columns: Mapping[str, Any]) -> FrameRow:
    return FrameRow(**{COLUMN_ALIASES.get(column, column): float(value) for column, value in columns.items()})


def decode_report(text: str, fmt: OutputFormat) -> RunReport:
    """Parse the csv or json produced by encode_report back into a RunReport."""
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        payload = json.loads(text)
        rows = [_frame_row({column: item[column] for column in ROW_COLUMNS}) for item in payload["rows"]]
        summary = payload["summary"]
        suites = {name: value == "PASS" for name, value in summary["suites"].items()}
        return RunReport(rows=rows, h_est=float(summary["h_est"]),
                         max_rel_residual=float(summary["max_rel_residual"]), suites=suites,
                         calibrated_amplitude=_optional_float(summary.get("calibrated_amplitude")))
    if fmt is not OutputFormat.CSV:
        raise ConfigurationError(f"cannot decode {fmt.value} reports")

    lines = list(csv.reader(io.StringIO(text)))
    blank = lines.index([])
    header, body, summary = lines[0], lines[1:blank], lines[blank + 2:]
    rows = [_frame_row(dict(zip(header, line))) for line in body]
    values = dict(summary)
    suites = {key[len("suite_"):]: value == "PASS" for key, value in summary if key.startswith("suite_")}
    return RunReport(rows=rows, h_est=float(values["h_est"]),
                     max_rel_residual=float(values["max_rel_residual"]), suites=suites,
                     calibrated_amplitude=_optional_float(values.get("calibrated_amplitude")))


def encode_record(record: Mapping[str, Any], fmt: OutputFormat) -> str:
    """Serialise one flat result (doppler, boost-field, pulse-energy, fit, wavecheck)."""
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return json.dumps({k: _machine_value(v) for k, v in record.items()}, indent=2) + "\n"
    if fmt is OutputFormat.TABLE:
        return _table(["quantity", "value"], [[k, format_number(v, fmt)] for k, v in record.items()])
    buffer = io.StringIO()
    writer = _csv_writer(buffer)
    writer.writerow(list(record.keys()))
    writer.writerow([format_number(v, fmt) for v in record.values()])
    return buffer.getvalue()


def write_output(text: str, path: Optional[str] = None, stream=None) -> None:
    """
    Write encoded output to a file, or to `stream` (standard output) when no path is given.

    Raises:
        OSError: if the file cannot be written
    """
    if path:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        logger.info(f"Wrote {len(text)} characters to {path}")
        return
    (stream or sys.stdout).write(text)
