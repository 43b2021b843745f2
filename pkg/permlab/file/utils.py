"""Matrix files, scalar formatting and the sweep CSV.

Matrix files are UTF-8 JSON objects ``{"scalar", "rows", "cols", "entries"}``.
Rational entries are strings ``"p/q"`` (or ``"p"``), complex entries are
``[re, im]`` pairs. Parse errors locate the offending entry by 0-based row
and column.
"""

import csv
import io
import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

from permlab.bounds.interfaces import BoundReport
from permlab.exceptions import MatrixFileError, MatrixShapeError
from permlab.file.consts import (
    BOUND_COLUMNS,
    CSV_VERSION_LINE,
    INFINITY_TEXT,
    SIGNIFICANT_DIGITS,
    SWEEP_FIELDS,
)
from permlab.interfaces import Scalar
from permlab.logging import get_logger
from permlab.numerics.ext_real import ExtReal
from permlab.numerics.interfaces import RectMatrix, ScalarDomain

logger = get_logger(__name__)

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def format_real(value: Union[Fraction, float, int]) -> str:
    """Decimal with :data:`SIGNIFICANT_DIGITS` significant digits."""
    return f"{float(value):.{SIGNIFICANT_DIGITS}g}"


def format_ext_real(value: Optional[ExtReal]) -> str:
    """Decimal text, ``"inf"`` for infinity, empty for ``None`` (inapplicable)."""
    if value is None:
        return ""
    if not value.is_finite:
        return INFINITY_TEXT
    return format_real(float(value))


def format_scalar(value: Scalar) -> str:
    """Exact ``"p/q"`` in lowest terms for rationals, ``"re im"`` for complex values."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(Fraction(value))
    z = complex(value)
    return f"{format_real(z.real)} {format_real(z.imag)}"


def real_part(value: Optional[Scalar]) -> str:
    if value is None:
        return ""
    if isinstance(value, (Fraction, int)):
        return format_real(value)
    return format_real(complex(value).real)


def _parse_rational(raw: Any, row: int, col: int) -> Fraction:
    if isinstance(raw, bool):
        raise MatrixFileError(f"boolean entry {raw!r} is not a rational", row=row, col=col)
    if isinstance(raw, int):
        return Fraction(raw)
    if not isinstance(raw, str):
        raise MatrixFileError(
            f"rational entries are 'p/q' strings, got {type(raw).__name__}", row=row, col=col
        )
    match = _RATIONAL_PATTERN.match(raw)
    if match is None:
        raise MatrixFileError(f"malformed rational {raw!r}", row=row, col=col)
    numerator, denominator = match.group(1), match.group(2)
    q = int(denominator) if denominator is not None else 1
    if q == 0:
        raise MatrixFileError(f"zero denominator in {raw!r}", row=row, col=col)
    return Fraction(int(numerator), q)


def _parse_complex(raw: Any, row: int, col: int) -> complex:
    if (
        not isinstance(raw, list)
        or len(raw) != 2
        or any(isinstance(part, bool) or not isinstance(part, (int, float)) for part in raw)
    ):
        raise MatrixFileError(f"complex entries are [re, im] pairs, got {raw!r}", row=row, col=col)
    return complex(float(raw[0]), float(raw[1]))


def parse_matrix(document: Any) -> RectMatrix:
    """Build a matrix from a decoded matrix-file document.

    Raises:
        MatrixFileError: On any structural or entry-level problem.
    """
    if not isinstance(document, dict):
        raise MatrixFileError("a matrix file holds a JSON object")
    missing = [key for key in ("scalar", "rows", "cols", "entries") if key not in document]
    if missing:
        raise MatrixFileError(f"missing keys: {', '.join(missing)}")
    try:
        domain = ScalarDomain(document["scalar"])
    except ValueError:
        raise MatrixFileError(f"unknown scalar kind {document['scalar']!r}") from None
    rows, cols, entries = document["rows"], document["cols"], document["entries"]
    if not isinstance(rows, int) or not isinstance(cols, int):
        raise MatrixFileError("'rows' and 'cols' must be integers")
    if not isinstance(entries, list) or len(entries) != rows:
        raise MatrixFileError(f"'entries' must be a list of {rows} rows")
    parse = _parse_rational if domain is ScalarDomain.RATIONAL else _parse_complex
    parsed: List[List[Scalar]] = []
    for j, line in enumerate(entries):
        if not isinstance(line, list) or len(line) != cols:
            raise MatrixFileError(f"expected {cols} entries", row=j)
        parsed.append([parse(raw, j, r) for r, raw in enumerate(line)])
    try:
        return RectMatrix.from_rows(parsed, domain)
    except MatrixShapeError as e:
        raise MatrixFileError(str(e)) from e


def read_matrix_file(path: Union[str, Path]) -> RectMatrix:
    """Read and parse a matrix file.

    Raises:
        MatrixFileError: If the file is missing, is not JSON, or does not
            describe a valid matrix.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise MatrixFileError(f"cannot read {path}: {e}") from e
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFileError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e
    return parse_matrix(document)


def matrix_to_document(Z: RectMatrix) -> Dict[str, Any]:
    entries: List[List[Any]]
    if Z.domain is ScalarDomain.RATIONAL:
        entries = [[str(v) for v in row] for row in Z.entries]
    else:
        entries = [[[complex(v).real, complex(v).imag] for v in row] for row in Z.entries]
    return {"scalar": Z.domain.value, "rows": Z.N, "cols": Z.n, "entries": entries}


def write_matrix_file(Z: RectMatrix, path: Union[str, Path]) -> Path:
    """Write ``Z`` as a matrix file; reading it back gives an equal matrix."""
    filepath = Path(path)
    filepath.parent.mkdir(parents=True, exist_ok=True)
    with open(filepath, "w", encoding="utf-8") as f:
        json.dump(matrix_to_document(Z), f, ensure_ascii=False, indent=2)
        f.write("\n")
    logger.info(f"Wrote {Z.N}x{Z.n} {Z.domain} matrix to {filepath}")
    return filepath


def flatten_dict(*, d: Dict[str, Any], parent_key: str = "", sep: str = ".") -> Dict[str, Any]:
    """Recursively flattens a nested dictionary using dot notation.

    Example:
        {"a": {"b": 1}} -> {"a.b": 1}
    """
    result: Dict[str, Any] = {}
    for k, v in d.items():
        new_key = f"{parent_key}{sep}{k}" if parent_key else k
        if isinstance(v, dict):
            result.update(flatten_dict(d=v, parent_key=new_key, sep=sep))
        else:
            result[new_key] = v
    return result


def _json_ext_real(value: Optional[ExtReal]) -> Any:
    if value is None:
        return None
    if not value.is_finite:
        return INFINITY_TEXT
    return float(value)


def _json_scalar(value: Optional[Scalar]) -> Any:
    return None if value is None else format_scalar(value)


def bound_report_to_dict(report: BoundReport) -> Dict[str, Any]:
    """JSON-ready view of a report.

    Scalars become exact strings, finite bounds numbers, ``+inf`` the string
    ``"inf"`` and inapplicable bounds ``null``.
    """
    st = report.stats
    document: Dict[str, Any] = {
        "N": st.N,
        "n": st.n,
        "normalized_permanent": _json_scalar(report.normalized_permanent),
        "h1": _json_scalar(report.h1),
        "h2": _json_scalar(report.h2),
        "error": {
            "first": _json_ext_real(report.actual_error_first),
            "second": _json_ext_real(report.actual_error_second),
        },
        "stats": {
            "alpha": _json_ext_real(st.alpha),
            "beta": _json_ext_real(st.beta),
            "gamma1": _json_ext_real(st.gamma()),
            "theta2": _json_ext_real(st.theta2),
            "theta3": _json_ext_real(st.theta3),
            "theta4": _json_ext_real(st.theta4),
            "kappa": {str(nu): _json_ext_real(v) for nu, v in sorted(st.kappa.items())},
            "kappa_tilde": _json_ext_real(st.kappa_tilde),
            "bounded": st.bounded,
            "zero_one": st.zero_one,
        },
    }
    for group in ("first", "second"):
        bounds = getattr(report, group)
        if bounds is not None:
            document[f"bounds_{group}"] = {
                name: _json_ext_real(value) for name, value in bounds.__dict__.items()
            }
    return document


def bound_report_to_text(report: BoundReport) -> str:
    """``key: value`` lines of the flattened JSON view; ``null`` shows as ``-``."""
    flat = flatten_dict(d=bound_report_to_dict(report))
    lines = []
    for key, value in flat.items():
        if value is None:
            text = "-"
        elif isinstance(value, float):
            text = format_real(value)
        else:
            text = str(value)
        lines.append(f"{key}: {text}")
    return "\n".join(lines)


def bound_report_to_row(family: str, report: BoundReport) -> Dict[str, str]:
    """One sweep CSV row. ``h1``/``h2`` carry the real part."""
    st = report.stats
    npm = report.normalized_permanent
    row: Dict[str, str] = {
        "family": family,
        "n": str(st.n),
        "N": str(st.N),
        "norm_perm_re": real_part(npm),
        "norm_perm_im": "" if npm is None else format_real(complex(npm).imag),
        "h1": real_part(report.h1),
        "h2": real_part(report.h2),
        "err1": format_ext_real(report.actual_error_first),
        "err2": format_ext_real(report.actual_error_second),
        "theta2": format_ext_real(st.theta2),
        "theta3": format_ext_real(st.theta3),
        "theta4": format_ext_real(st.theta4),
        "alpha": format_ext_real(st.alpha),
        "beta": format_ext_real(st.beta),
        "gamma1": format_ext_real(st.gamma()),
        "kappa2": format_ext_real(st.kappa.get(2)),
        "kappa_tilde": format_ext_real(st.kappa_tilde),
    }
    for column, (group, attribute) in BOUND_COLUMNS.items():
        bounds = getattr(report, group)
        row[column] = "" if bounds is None else format_ext_real(getattr(bounds, attribute))
    return {field: row[field] for field in SWEEP_FIELDS}


def sweep_csv_text(rows: Iterable[Dict[str, str]]) -> str:
    """The versioned CSV document for ``rows``."""
    buffer = io.StringIO(newline="")
    buffer.write(CSV_VERSION_LINE + "\r\n")
    writer = csv.DictWriter(buffer, fieldnames=SWEEP_FIELDS, lineterminator="\r\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def write_sweep_csv(rows: List[Dict[str, str]], path: Union[str, Path]) -> Path:
    """Write the sweep CSV; equal rows give byte-identical files."""
    filepath = Path(path)
    filepath.parent.mkdir(parents=True, exist_ok=True)
    with open(filepath, mode="w", encoding="utf-8", newline="") as f:
        f.write(sweep_csv_text(rows))
    logger.info(f"Wrote {len(rows)} sweep rows to {filepath}")
    return filepath
