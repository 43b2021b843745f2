"""Matrix files, scalar formatting and the versioned sweep CSV."""

from permlab.file.consts import CSV_VERSION_LINE, SWEEP_FIELDS
from permlab.file.utils import (
    bound_report_to_dict,
    bound_report_to_row,
    bound_report_to_text,
    format_ext_real,
    format_real,
    format_scalar,
    matrix_to_document,
    parse_matrix,
    read_matrix_file,
    sweep_csv_text,
    write_matrix_file,
    write_sweep_csv,
)

__all__ = [
    "CSV_VERSION_LINE",
    "SWEEP_FIELDS",
    "bound_report_to_dict",
    "bound_report_to_row",
    "bound_report_to_text",
    "format_ext_real",
    "format_real",
    "format_scalar",
    "matrix_to_document",
    "parse_matrix",
    "read_matrix_file",
    "sweep_csv_text",
    "write_matrix_file",
    "write_sweep_csv",
]
