"""Count Lorenz knots and distinct Alexander polynomials by degree.

Usage: python demos/degree_table.py [max_n] [jobs]
"""

import sys
import time

from modknot import full_table

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 16
jobs = int(sys.argv[2]) if len(sys.argv) > 2 else 1

start = time.perf_counter()
print(" n  #A_n   k(n)   p(n)")
for n, a, k, p in full_table(max_n, jobs=jobs):
    print(f"{n:2} {a:5} {k:6} {p:6}")
print(f"{time.perf_counter() - start:.1f} s")
