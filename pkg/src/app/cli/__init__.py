"""Command-line front end: triads, simulate, analyze, sweep."""

from app.cli.main import build_parser, main

__all__ = ["build_parser", "main"]
