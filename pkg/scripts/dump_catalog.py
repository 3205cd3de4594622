#!/usr/bin/env python3
"""
Regenerate the markdown catalog.

Usage:
    python scripts/dump_catalog.py > docs/catalog.md
    python scripts/dump_catalog.py --max-x-size 9 -o docs/catalog.md
"""

import argparse
import sys
from pathlib import Path


def main() -> int:
    parser = argparse.ArgumentParser(description="Dump the catalog as markdown")
    parser.add_argument(
        "--max-x-size",
        type=int,
        default=7,
        help="Largest family-X member listed",
    )
    parser.add_argument(
        "--max-fence",
        type=int,
        default=6,
        help="Largest fence and V-cover fence length listed",
    )
    parser.add_argument(
        "--output",
        "-o",
        type=Path,
        help="Output file (default: stdout)",
    )
    args = parser.parse_args()

    from indeco.catalog import render_catalog_markdown

    output = render_catalog_markdown(max_x_size=args.max_x_size, max_fence=args.max_fence)

    if args.output:
        args.output.write_text(output, encoding="utf-8")
        print(f"Catalog written to {args.output}", file=sys.stderr)
    else:
        print(output, end="")

    return 0


if __name__ == "__main__":
    sys.exit(main())
