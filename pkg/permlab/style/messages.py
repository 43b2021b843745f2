"""Message helpers for human-facing status lines."""

from typing import Any, Iterable, Sequence

from rich.table import Table

from permlab.style.console import console
from permlab.style.styles import (
    ERROR_SYMBOL,
    INFO_SYMBOL,
    MAIN_HEADER_PREFIX,
    MAIN_HEADER_SUFFIX,
    SUCCESS_SYMBOL,
    TABLE_HEADER_STYLE,
    WARNING_SYMBOL,
)


def print_success(message: str) -> None:
    """Print a success message with green checkmark."""
    console.print(f"{SUCCESS_SYMBOL} {message}")


def print_error(message: str) -> None:
    """Print an error message with red X mark."""
    console.print(f"{ERROR_SYMBOL} {message}")


def print_warning(message: str) -> None:
    console.print(f"{WARNING_SYMBOL} {message}")


def print_info(message: str) -> None:
    console.print(f"{INFO_SYMBOL} {message}")


def print_header(title: str) -> None:
    """Print a main header between decorative borders."""
    console.print(f"{MAIN_HEADER_PREFIX} {title} {MAIN_HEADER_SUFFIX}")


def print_labeled_info(label: str, value: Any) -> None:
    """Print ``label: value`` with the label in the accent colour.

    Args:
        label: Descriptive label, followed by a colon.
        value: Associated value.
    """
    console.print(f"[accent]{label}:[/accent] [bright_white]{value}[/bright_white]")


def render_table(title: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> Table:
    """Print a table to the status console and return it.

    Args:
        title: Caption shown above the table.
        columns: Header cells.
        rows: Body rows; cells are converted with ``str``.
    """
    table = Table(title=title, header_style=TABLE_HEADER_STYLE)
    for name in columns:
        table.add_column(name)
    for row in rows:
        table.add_row(*(str(cell) for cell in row))
    console.print(table)
    return table
