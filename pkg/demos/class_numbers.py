"""Imaginary quadratic class numbers from the continued fraction of sqrt(p)."""

from modknot import hz_class_number, spec_from_word
from modknot.invariants import sqrt_period, sqrt_word

for p in (7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 83):
    s = spec_from_word(sqrt_word(p))
    h = hz_class_number(p)
    # the last pair of the spec carries the same number
    assert s.Q[-1] - s.P[-1] == 3 * h
    print(f"p={p:3}  period={list(sqrt_period(p))}  h(-p)={h}")
