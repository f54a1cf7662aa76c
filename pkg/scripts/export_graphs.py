#!/usr/bin/env python3
"""Write the three branching graphs as DOT files.

Usage: export_graphs.py [outdir] [max_level]
"""

import pathlib
import sys
from fractions import Fraction

from rookpart.bratteli import ihat, rhat, rook_tower


def main() -> int:
    outdir = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path("graphs")
    top = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    outdir.mkdir(parents=True, exist_ok=True)
    graphs = {
        "rook_tower": rook_tower(top),
        "tensor_steps": rhat(top, top),
        "propagating_tower": ihat(Fraction(top)),
    }
    for name, graph in graphs.items():
        path = outdir / f"{name}.dot"
        path.write_text(graph.to_dot() + "\n")
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
