"""Primitive words over {L, R}.

Words are plain ``str`` objects such as ``"LRLRR"``; order is lexicographic
with L < R, which is Python's own string order.  Rotation-based routines
are naive (quadratic or worse in the word length); words met here have at
most a few hundred letters.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import groupby
from math import gcd
from typing import Sequence

from .errors import BadFraction, MonoletterWord, NotLyndon, NotPrimitive, OddPeriod, ParseError

_SWAP = str.maketrans("LR", "RL")


def parse_word(text: str) -> str:
    text = text.strip()
    if not text or set(text) - {"L", "R"}:
        raise ParseError(f"a word is a non-empty string over 'L' and 'R', got {text!r}")
    return text


def expand_powers(text: str) -> str:
    """Expand shorthand like ``"L4R3L4R3LR2"`` to the plain letter string."""
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch not in "LR":
            raise ParseError(f"unexpected {ch!r} in {text!r}")
        j = i + 1
        while j < len(text) and text[j].isdigit():
            j += 1
        out.append(ch * (int(text[i + 1:j]) if j > i + 1 else 1))
        i = j
    return parse_word("".join(out))


def compress(w: str) -> str:
    """Inverse of ``expand_powers``: ``"LLLLRRR"`` -> ``"L4R3"``."""
    return "".join(ch + (str(n) if n > 1 else "") for ch, n in
                   ((ch, len(list(g))) for ch, g in groupby(w)))


def is_primitive(w: str) -> bool:
    """True unless w is a proper power of a shorter word."""
    return w not in (w + w)[1:-1]


def rotations(w: str) -> list:
    return [w[i:] + w[:i] for i in range(len(w))]


def lyndon_canonical(w: str) -> str:
    """Lexicographically least rotation (the Lyndon word of the class)."""
    return min(rotations(w))


def is_lyndon(w: str) -> bool:
    return is_primitive(w) and w == lyndon_canonical(w)


def _require_both_letters(w: str):
    if "L" not in w or "R" not in w:
        raise MonoletterWord(f"{w!r} must contain both L and R")


def word_from_period(period: Sequence[int]) -> str:
    """L^c1 R^c2 ... L^c(2l-1) R^c(2l)."""
    if len(period) % 2:
        raise OddPeriod(f"period {tuple(period)} has odd length")
    if not period or any(c < 1 for c in period):
        raise ValueError("period entries must be positive")
    return "".join(("L" if i % 2 == 0 else "R") * c for i, c in enumerate(period))


def period_from_word(w: str) -> list:
    """Run lengths of the Lyndon rotation, which starts with L and ends with R."""
    _require_both_letters(w)
    return [len(list(g)) for _, g in groupby(lyndon_canonical(w))]


def ranks(w: str) -> list:
    """rank_j = 1-based position of the (j-1)-fold rotation among all rotations."""
    if not is_primitive(w):
        raise NotPrimitive(f"{w!r} is a proper power; its rotations are not distinct")
    rots = rotations(w)
    order = sorted(range(len(w)), key=rots.__getitem__)
    out = [0] * len(w)
    for r, j in enumerate(order, 1):
        out[j] = r
    return out


def max_rotation_index(w: str) -> int:
    """m_W: the j whose rotation cyc^(j-1)(W) is the largest."""
    return ranks(w).index(len(w)) + 1


def markov_left(w: str) -> str:
    if not is_lyndon(w):
        raise NotLyndon(f"{w!r} is not a Lyndon word")
    return "L" + w


def markov_right(w: str) -> str:
    if not is_lyndon(w):
        raise NotLyndon(f"{w!r} is not a Lyndon word")
    m = max_rotation_index(w)
    return w[:m] + "R" + w[m:]


def bernoulli_rational(w: str) -> Fraction:
    """x in (0, 1) whose binary expansion repeats w with L -> 0, R -> 1."""
    _require_both_letters(w)
    v = int(w.translate(str.maketrans("LR", "01")), 2)
    return Fraction(v, 2 ** len(w) - 1)


def christoffel_lower(p: int, q: int) -> str:
    """Lower Christoffel word of slope p/q over {A, B}.

    Length q; the j-th B sits at position ceil(q*j/p) (1-indexed).
    """
    if not (0 < p < q) or gcd(p, q) != 1:
        raise BadFraction(f"need coprime 0 < p < q, got p={p}, q={q}")
    letters = ["A"] * q
    for j in range(1, p + 1):
        letters[-(-q * j // p) - 1] = "B"
    return "".join(letters)


def substitute(w: str, image_a: str, image_b: str) -> str:
    return "".join(image_a if ch == "A" else image_b for ch in w)


def dual_word(w: str) -> str:
    """Read backwards and swap L <-> R (not canonicalized)."""
    return w[::-1].translate(_SWAP)


def flip_word(w: str) -> str:
    """Swap L <-> R, then take the Lyndon rotation."""
    return lyndon_canonical(w.translate(_SWAP))


def trip_count(w: str) -> int:
    """Number of cyclic factors LR, i.e. the number of maximal R-runs."""
    _require_both_letters(w)
    n = len(w)
    return sum(1 for i in range(n) if w[i] == "L" and w[(i + 1) % n] == "R")
