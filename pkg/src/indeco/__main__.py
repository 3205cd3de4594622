"""Entry point for ``python -m indeco``."""

from indeco.cli import cli

if __name__ == "__main__":
    cli()
