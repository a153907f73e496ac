"""Run the command-line interface with ``python -m howe3``."""

from .cli import _entry

_entry()
