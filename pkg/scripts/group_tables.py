#!/usr/bin/env python3
"""Print the planar, toroidal and order-16 tables plus the super-integrality census."""

import argparse

from commenergy.cli import main as cli_main
from commenergy.cli import TABLES


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--format", choices=("pretty", "csv", "json"), default="pretty")
    args = ap.parse_args()
    for sel in TABLES:
        print(f"## {sel}")
        cli_main(["table", sel, "--format", args.format])
        print()


if __name__ == "__main__":
    main()
