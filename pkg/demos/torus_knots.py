"""Torus knots are the modular knots of Christoffel words."""

from math import gcd

from modknot import (LorenzSpec, alexander_of_word, christoffel_lower, spec_from_word,
                     substitute, torus_alexander)

for q in range(3, 9):
    for p in range(2, q):
        if gcd(p, q) != 1:
            continue
        w = substitute(christoffel_lower(p, q), "L", "LR")
        ok = spec_from_word(w) == LorenzSpec.of(p, q)
        ok = ok and alexander_of_word(w) == torus_alexander(p, q)
        print(f"T({p},{q})  {w:24} {'ok' if ok else 'MISMATCH'}")
