#!/usr/bin/env python3
"""Write sample JSON inputs for the toricalc command line.

Creates a directory of polyhedron and action files covering the stock
examples, then prints a few commands to try on them.
"""

import argparse
import json
from pathlib import Path

from toricalc import interval, standard_simplex, unit_cube
from toricalc.jsonio import action_to_json, polyhedron_to_json
from toricalc import linearized_action

POLYTOPES = {
    "interval": interval(0, 1),
    "square": unit_cube(2),
    "cube": unit_cube(3),
    "simplex2": standard_simplex(2),
    "simplex3": standard_simplex(3),
}

ACTIONS = {
    "cp1": linearized_action([[1, 1]], (-1, 0)),
    "square_action": linearized_action([[1, 1, 0, 0], [0, 0, 1, 1]], (-1, 0, -1, 0)),
    "cp2": linearized_action([[1, 1, 1]], (-1, 0, 0)),
    "veronese": linearized_action([[1, 1, 1]], (-2, 0, 0)),
    "weighted": linearized_action([[2, 1]], (-1, 0)),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="inputs", metavar="DIR",
                        help="output directory (default: ./inputs)")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    for name, p in POLYTOPES.items():
        (out / f"{name}.json").write_text(json.dumps(polyhedron_to_json(p), indent=2) + "\n")
    for name, a in ACTIONS.items():
        (out / f"{name}.json").write_text(json.dumps(action_to_json(a), indent=2) + "\n")

    print(f"wrote {len(POLYTOPES) + len(ACTIONS)} files to {out}/")
    print("try:")
    print(f"  toricalc generators --polytope {out}/square.json")
    print(f"  toricalc betti --polytope {out}/cube.json")
    print(f"  toricalc relations --polytope {out}/square.json --bound 2")
    print(f"  toricalc semistable --action {out}/cp1.json --support 1,2")
    print(f"  toricalc unstable --action {out}/square_action.json")
    print(f"  toricalc evaluate --action {out}/square_action.json --point 1,2,3,4 --bound 1")
    print(f"  toricalc delta --action {out}/veronese.json | toricalc hilbert --polytope - --degree 1")


if __name__ == "__main__":
    main()
