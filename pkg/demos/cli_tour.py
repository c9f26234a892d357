"""A quick tour of the command line interface.

Every subcommand takes a JSON document (file path or inline) and prints
a deterministic JSON report.  This script drives the CLI in-process so
the documents stay visible next to the calls.
"""

import json

from gradex import cli

RING = {
    "group": {"free_rank": 1, "torsion": []},
    "field": "Q",
    "basis": [{"degree": [0]}, {"degree": [1]}],
    "mul": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [1, 0, [[1, "1"]]]],
    "unit": ["1", "0"],
}

MODULE = {
    "ring": RING,
    "basis": [{"degree": [0]}],
    "action": [[0, 0, [[0, "1"]]]],
}

PHI_DOUBLING = {"source": {"free_rank": 1, "torsion": []},
                "target": {"free_rank": 1, "torsion": []},
                "matrix": [[2]]}


def show(title, argv):
    print(f"$ gradex {' '.join(a if len(a) < 40 else '<json>' for a in argv)}")
    code = cli.run(argv)
    print(f"  (exit {code})")
    print()


def main():
    ring = json.dumps(RING)
    module = json.dumps(MODULE)
    phi = json.dumps(PHI_DOUBLING)
    show("classify", ["classify", ring])
    show("corestrict", ["corestrict", ring, "--phi", phi])
    show("module", ["module", module])
    show("resolve", ["resolve", module, "--cutoff", "3"])
    show("pd", ["pd", module, "--cutoff", "3"])
    show("validate", ["validate", ring])


if __name__ == "__main__":
    main()
