"""Command line front end and expression parser."""
from .main import build_parser, main, run
from .parser import ParseError, parse, parse_scalar

__all__ = ["ParseError", "build_parser", "main", "parse", "parse_scalar", "run"]
