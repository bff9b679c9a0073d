"""Braid words, Lorenz braids and modular braids.

Permutations are tuples ``perm`` with ``perm[i - 1] == pi(i)``: top
position i is joined to bottom position pi(i).  A braid word is read top
to bottom, and sigma_j exchanges the strands at positions j and j + 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NotAKnot, ParseError, PrecondViolated
from .words import _require_both_letters, lyndon_canonical, ranks, trip_count


@dataclass(frozen=True)
class Braid:
    """A word in sigma_1, ..., sigma_(n-1).

    ``gens`` holds signed generator indices: ``+j`` is sigma_j and ``-j``
    its inverse.
    """

    strands: int
    gens: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(int(g) for g in self.gens))
        if self.strands < 1:
            raise IndexOutOfRange("a braid needs at least one strand")
        for g in self.gens:
            if g == 0 or abs(g) >= self.strands:
                raise IndexOutOfRange(f"generator {g} not in B_{self.strands}")

    def __len__(self):
        return len(self.gens)

    def __mul__(self, other: "Braid") -> "Braid":
        if other.strands != self.strands:
            raise IndexOutOfRange("braids on different numbers of strands")
        return Braid(self.strands, self.gens + other.gens)

    def __pow__(self, k: int) -> "Braid":
        if k < 0:
            return self.inverse() ** (-k)
        return Braid(self.strands, self.gens * k)

    def inverse(self) -> "Braid":
        return Braid(self.strands, tuple(-g for g in reversed(self.gens)))

    def is_positive(self) -> bool:
        return all(g > 0 for g in self.gens)

    def permutation(self) -> tuple:
        return braid_permutation(self)

    def __str__(self):
        if not self.gens:
            return f"1 in B_{self.strands}"
        parts = [f"s{g}" if g > 0 else f"s{-g}^-1" for g in self.gens]
        return " ".join(parts) + f" in B_{self.strands}"


def exponent_sum(b: Braid) -> int:
    return sum(1 if g > 0 else -1 for g in b.gens)


def braid_permutation(b: Braid) -> tuple:
    """Image of a braid in the symmetric group."""
    # at[pos] = top position of the strand currently at pos
    at = list(range(b.strands + 1))
    for g in b.gens:
        j = abs(g)
        at[j], at[j + 1] = at[j + 1], at[j]
    perm = [0] * b.strands
    for pos in range(1, b.strands + 1):
        perm[at[pos] - 1] = pos
    return tuple(perm)


def cycles(perm: Sequence[int]) -> list:
    seen = [False] * (len(perm) + 1)
    out = []
    for start in range(1, len(perm) + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = perm[i - 1]
        out.append(cyc)
    return out


def inversions(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def permutation_braid(perm: Sequence[int]) -> Braid:
    """The positive braid realizing ``perm`` in which each pair of strands
    crosses at most once.

    Built by bubble sort on the target positions, always swapping the
    rightmost inverted adjacent pair, so the word is reduced and its length
    is the inversion count.
    """
    n = len(perm)
    target = [perm[i] for i in range(n)]  # target of the strand now at index i
    gens = []
    while True:
        for k in range(n - 2, -1, -1):
            if target[k] > target[k + 1]:
                target[k], target[k + 1] = target[k + 1], target[k]
                gens.append(k + 1)
                break
        else:
            break
    return Braid(max(n, 1), gens)


# -- Lorenz braids ---------------------------------------------------------------


@dataclass(frozen=True)
class LorenzSpec:
    """(p_1, q_1; ...; p_r, q_r), all entries positive."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple((int(p), int(q)) for p, q in self.pairs)
        if not pairs:
            raise ValueError("a Lorenz spec needs at least one pair")
        if any(p < 1 or q < 1 for p, q in pairs):
            raise ValueError(f"entries must be positive: {pairs}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, *flat: int) -> "LorenzSpec":
        """``LorenzSpec.of(2, 4, 1, 2)`` == (2,4; 1,2)."""
        if len(flat) % 2:
            raise ValueError("need an even number of entries")
        return cls(tuple(zip(flat[::2], flat[1::2])))

    @classmethod
    def parse(cls, text: str) -> "LorenzSpec":
        """Parse ``"2,4:1,2:3,1:2,2"``."""
        try:
            pairs = []
            for chunk in text.strip().split(":"):
                p, q = chunk.split(",")
                pairs.append((int(p), int(q)))
            return cls(tuple(pairs))
        except ValueError as e:
            raise ParseError(f"bad Lorenz spec {text!r}: {e}") from None

    @classmethod
    def from_json(cls, data) -> "LorenzSpec":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(tuple(pair) for pair in data))

    def to_json(self) -> list:
        return [list(pair) for pair in self.pairs]

    def __str__(self):
        return ":".join(f"{p},{q}" for p, q in self.pairs)

    @property
    def r(self) -> int:
        return len(self.pairs)

    @property
    def P(self) -> list:
        """Prefix sums P_1, ..., P_r."""
        out, acc = [], 0
        for p, _ in self.pairs:
            acc += p
            out.append(acc)
        return out

    @property
    def Q(self) -> list:
        out, acc = [], 0
        for _, q in self.pairs:
            acc += q
            out.append(acc)
        return out

    @property
    def strands(self) -> int:
        return self.P[-1] + self.Q[-1]

    def crossings(self) -> int:
        """sum_j P_j q_j."""
        return sum(P * q for P, (_, q) in zip(self.P, self.pairs))


def lorenz_permutation(spec: LorenzSpec) -> tuple:
    """Top row: Q_r left points then P_r right points.  Bottom row: blocks
    p_1, q_1, ..., p_r, q_r.  Left points fill the q-blocks in order, right
    points fill the p-blocks in order."""
    p_pos, q_pos = [], []
    pos = 1
    for p, q in spec.pairs:
        p_pos.extend(range(pos, pos + p))
        pos += p
        q_pos.extend(range(pos, pos + q))
        pos += q
    return tuple(q_pos + p_pos)


def components(spec: LorenzSpec) -> int:
    """Number of link components of the closure."""
    return len(cycles(lorenz_permutation(spec)))


def lorenz_braid(spec: LorenzSpec) -> Braid:
    return permutation_braid(lorenz_permutation(spec))


def modular_permutation(w: str) -> tuple:
    rk = ranks(w)
    n = len(w)
    perm = [0] * n
    for j in range(n):
        perm[rk[j] - 1] = rk[(j + 1) % n]
    return tuple(perm)


def modular_braid(w: str) -> Braid:
    """Positive braid joining top rank_j to bottom rank_(j+1)."""
    _require_both_letters(w)
    return permutation_braid(modular_permutation(w))


def spec_from_word(w: str) -> LorenzSpec:
    _require_both_letters(w)
    perm = modular_permutation(w)
    n_left = w.count("L")
    origin = [0] * len(w)
    for top, bottom in enumerate(perm, 1):
        origin[bottom - 1] = top
    kinds = ["q" if o <= n_left else "p" for o in origin]
    blocks = [(k, len(list(g))) for k, g in groupby(kinds)]
    assert blocks[0][0] == "p" and blocks[-1][0] == "q", blocks
    sizes = [size for _, size in blocks]
    return LorenzSpec(tuple(zip(sizes[::2], sizes[1::2])))


def word_from_spec(spec: LorenzSpec) -> str:
    """Follow the orbit of 1 and write L for left top points, R for right."""
    perm = lorenz_permutation(spec)
    if len(cycles(perm)) != 1:
        raise NotAKnot(f"closure of L({spec}) has {len(cycles(perm))} components")
    n_left = spec.Q[-1]
    letters = []
    i = 1
    for _ in range(len(perm)):
        letters.append("L" if i <= n_left else "R")
        i = perm[i - 1]
    return lyndon_canonical("".join(letters))


def tbraid_from_spec(spec: LorenzSpec) -> tuple:
    """Run-length encoded shifts d_i = pi(i) - i of the left top points,
    as ((r_1, s_1), ..., (r_k, s_k))."""
    if spec.pairs[0][0] <= 1 or spec.pairs[-1][1] <= 1:
        raise PrecondViolated(f"need p_1 > 1 and q_r > 1, got L({spec})")
    perm = lorenz_permutation(spec)
    d = [perm[i - 1] - i for i in range(1, spec.Q[-1] + 1)]
    return tuple((r, len(list(g))) for r, g in groupby(d))


def braid_from_tspec(tspec: Iterable[Sequence[int]]) -> Braid:
    """(s_1 ... s_(r_1 - 1))^(s_1) ... (s_1 ... s_(r_k - 1))^(s_k) in B_(r_k)."""
    tspec = [tuple(x) for x in tspec]
    rs = [r for r, _ in tspec]
    if any(r <= 1 for r in rs) or rs != sorted(set(rs)) or any(s < 1 for _, s in tspec):
        raise PrecondViolated(f"invalid T-braid data {tspec}")
    gens = []
    for r, s in tspec:
        gens.extend(list(range(1, r)) * s)
    return Braid(rs[-1], gens)


def trip_number(spec: LorenzSpec) -> int:
    """Strands from a left (L) top point to a bottom point right of Q_r."""
    n_left = spec.Q[-1]
    perm = lorenz_permutation(spec)
    return sum(1 for i in range(1, n_left + 1) if perm[i - 1] > n_left)


def braid_index(w: str) -> int:
    """Braid index of the modular knot: half the minimal even period length."""
    return trip_count(w)
