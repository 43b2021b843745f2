"""Themed Rich console for status output.

The console writes to stderr so that data printed on stdout stays machine
readable.
"""

from rich.console import Console
from rich.theme import Theme

permlab_theme = Theme({
    "primary": "#0EA5E9",      # Sky-500 - Headers, titles
    "accent": "#6366F1",       # Indigo-500 - Highlights
    "muted": "#94A3B8",        # Slate-400 - Secondary text
    "success": "#10B981",      # Emerald-500
    "error": "#EF4444",        # Red-500
    "warning": "#F59E0B",      # Amber-500
    "info": "#3B82F6",         # Blue-500
})

console = Console(theme=permlab_theme, highlight=False, stderr=True)
