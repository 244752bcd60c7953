"""Command line front end and the text format for certificates."""

from .dsl import ConditionSpec, DSLError, ParsedFile, parse_dsl, parse_file, print_dsl
from .main import build_parser, main, run_command

__all__ = [
    "ConditionSpec", "DSLError", "ParsedFile", "parse_dsl", "parse_file", "print_dsl",
    "build_parser", "main", "run_command",
]
