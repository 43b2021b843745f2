"""Themed console output for status lines and summary tables."""

from permlab.style.console import console
from permlab.style.messages import (
    print_error,
    print_header,
    print_info,
    print_labeled_info,
    print_success,
    print_warning,
    render_table,
)

__all__ = [
    "console",
    "print_error",
    "print_header",
    "print_info",
    "print_labeled_info",
    "print_success",
    "print_warning",
    "render_table",
]
