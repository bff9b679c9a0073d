"""From an indefinite form to its knot's Alexander polynomial, with a side check.

Usage: python demos/pipeline.py [a b c]
"""

import sys

from modknot import (LorenzSpec, braid_index, burau, burau_lorenz, modular_braid,
                     trip_number)
from modknot.cli import analyze

coeffs = sys.argv[1:4] or ["152", "-600", "-237"]
rep = analyze(form=",".join(coeffs))
for key in ("form", "discriminant", "word_compressed", "spec_text", "tbraid",
            "trip_number", "rademacher", "alexander_text", "genus"):
    print(f"{key:16} {rep[key]}")

# the braid read off the word and the one built from the spec give the same matrix
spec = LorenzSpec.from_json(rep["spec"])
b = modular_braid(rep["word"])
print("strands", b.strands, "crossings", len(b.gens))
print("block formula ok:", burau(b) == burau_lorenz(spec))
print("index", braid_index(rep["word"]), "trip", trip_number(spec))
