#!/usr/bin/env python3
"""Tabulate ball-indicator norms: closed forms against the grid engines.

Sweeps dimensions 1..3 and dyadic indicator radii for one representative
space per variant, printing a CSV table (engine value, closed form,
relative gap). Useful as a quick end-to-end health check and for eyeballing
how the norms scale with the radius.

    python scripts/char_norm_sweep.py [--out sweep.csv]
"""

import argparse
import sys

from omlab import geometry as geo
from omlab import growth as gr
from omlab import norms
from omlab import young as yf


def representative_specs(n):
    return [
        norms.SpaceSpec("nakai", yf.power(2), gr.power(0.5), n),
        norms.SpaceSpec("sst", yf.power(2), gr.power(0.5), n),
        norms.SpaceSpec("weak-nakai", yf.exp_minus_one(), gr.constant(1), n),
        norms.SpaceSpec("weak-sst", yf.sum_of(yf.power(1), yf.power(2)), gr.power_capped(0.5), n),
        norms.SpaceSpec("guliyev", yf.power(2), gr.inv_power(0.5), n),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", help="write the table here instead of stdout")
    args = parser.parse_args(argv)

    lines = ["variant,n,r0,engine_value,closed_form,rel_gap"]
    for n in (1, 2, 3):
        center = (0.0,) * n
        for spec in representative_specs(n):
            for k in range(-3, 4):
                r0 = 2.0 ** k
                chi = geo.characteristic(center, r0)
                result = norms.global_norm(chi, spec)
                closed = norms.char_norm_closed(spec, r0)
                gap = abs(result.value - closed) / max(1.0, closed)
                lines.append(
                    f"{spec.variant},{n},{r0:.17g},{result.value:.17g},{closed:.17g},{gap:.3e}"
                )
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {len(lines) - 1} rows to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
