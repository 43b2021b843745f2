"""Markup snippets shared by the message helpers."""

SUCCESS_SYMBOL = "[bold green]✓[/bold green]"
"""Rich markup for a bold green checkmark, prefixing success messages."""
ERROR_SYMBOL = "[bold red]✗[/bold red]"
"""Rich markup for a bold red X mark, prefixing error messages."""
WARNING_SYMBOL = "[bold yellow]⚠[/bold yellow]"
INFO_SYMBOL = "[bold blue]ℹ[/bold blue]"

MAIN_HEADER_PREFIX = "[bold cyan]═══[/bold cyan]"
MAIN_HEADER_SUFFIX = "[bold cyan]═══[/bold cyan]"

TABLE_HEADER_STYLE = "bold cyan"
"""Style of table header rows in :func:`permlab.style.messages.render_table`."""
