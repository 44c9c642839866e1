#!/usr/bin/env python3
"""Run the built-in inclusion-verification suite and write its reports.

Thin wrapper over `omlab verify --suite`; extra flags are passed through,
e.g.  python scripts/run_verification_suite.py --seed 0 --out reports/
"""

import sys

from omlab.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", "--suite", *sys.argv[1:]]))
