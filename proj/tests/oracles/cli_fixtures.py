"""Writes the CLI fixtures (inputs and the expected canonical transform output) with sympy.

Run from the repository root:  python3 tests/oracles/cli_fixtures.py tests/cli
"""
import json
import os
import sys

import sympy as sp

sys.path.insert(0, os.path.dirname(__file__))
from goldens import poly_json, x1, x2  # noqa: E402

out_dir = sys.argv[1]


def write(name, obj):
    with open(os.path.join(out_dir, name), "w") as f:
        f.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


write("cubhyp.json", poly_json((x1 * x2 - 1) * (x2 + x1**3), (x1, x2)))
write("lower_ones.json", {"a": [["1", "0"], ["1", "1"]]})
write("cubhyp_transform_expected.json", poly_json(((x1 - 1) * x2 - 1) * ((1 + x1**3) * x2 + x1**3), (x1, x2)))
write("finite.json", poly_json((x1 * x2 - 1) * ((x1 - 1) * x2 - 1) ** 2, (x1, x2)))
write("circle.json", poly_json(x1**2 + x2**2 - 1, (x1, x2)))
write("hyperbola.json", poly_json(x1 * x2 - 1, (x1, x2)))
