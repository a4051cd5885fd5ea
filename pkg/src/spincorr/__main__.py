"""Allow ``python -m spincorr`` to run the command-line interface."""

from .cli import main_entry

main_entry()
