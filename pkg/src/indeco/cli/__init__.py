"""
CLI module for indeco.
"""

from indeco.cli.commands import cli

__all__ = ["cli"]
