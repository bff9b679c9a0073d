"""Lorenz knots by Alexander degree.

Tuples (p_1, q_1; ...; p_r, q_r) with p_1, q_r > 1 and
sum_(j<r) (P_j - 1) q_j + (P_r - 1)(q_r - 1) = n are in bijection with the
partitions of n, so they are generated from partitions directly.
"""

from __future__ import annotations

import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .alexander import AlexanderPoly, alexander_of_spec
from .braid import LorenzSpec, components
from .errors import OddDegree, PrecondViolated

SCHEMA = 1
TABLE_CAP = 40
CACHE_ENV = "MODKNOT_CACHE"


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """Number of partitions of n, by Euler's pentagonal recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def _partitions(n: int, smallest: int = 1):
    """Partitions of n as ((value, multiplicity), ...) with increasing values."""
    if n == 0:
        yield ()
        return
    for m in range(smallest, n + 1):
        for d in range(1, n // m + 1):
            for rest in _partitions(n - m * d, m + 1):
                yield ((m, d),) + rest


def spec_from_partition(parts) -> LorenzSpec:
    pairs = []
    prev = 0
    for j, (m, d) in enumerate(parts):
        p = m + 1 if j == 0 else m - prev
        q = d + 1 if j == len(parts) - 1 else d
        pairs.append((p, q))
        prev = m
    return LorenzSpec(tuple(pairs))


def _check_even(n: int):
    if n % 2:
        raise OddDegree(f"no modular knot has odd Alexander degree; got n = {n}")
    if n < 2:
        raise PrecondViolated(f"n must be at least 2, got {n}")


def enumerate_specs(n: int) -> list:
    """All Lorenz tuples of degree n, sorted by their pairs."""
    _check_even(n)
    return sorted((spec_from_partition(parts) for parts in _partitions(n)),
                  key=lambda s: s.pairs)


@dataclass
class DegreeReport:
    n: int
    specs: list
    knot_specs: list
    polynomials: list
    # spec -> polynomial; filled only when the report was computed, not loaded
    by_spec: dict = field(default_factory=dict, repr=False)

    @property
    def a_n(self) -> int:
        return len(self.polynomials)

    @property
    def k_n(self) -> int:
        return len(self.knot_specs)

    @property
    def p_n(self) -> int:
        return len(self.specs)

    def row(self) -> tuple:
        return (self.n, self.a_n, self.k_n, self.p_n)

    def to_json(self) -> dict:
        knots = set(self.knot_specs)
        return {
            "schema": SCHEMA,
            "n": self.n,
            "p_n": self.p_n,
            "k_n": self.k_n,
            "a_n": self.a_n,
            "specs": [s.to_json() for s in self.specs],
            "knots": [s in knots for s in self.specs],
            "polynomials": [list(p.coeffs) for p in self.polynomials],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DegreeReport":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported cache schema {data.get('schema')!r}")
        specs = [LorenzSpec.from_json(s) for s in data["specs"]]
        knot_specs = [s for s, k in zip(specs, data["knots"]) if k]
        polys = [AlexanderPoly(tuple(c)) for c in data["polynomials"]]
        rep = cls(data["n"], specs, knot_specs, polys)
        if rep.row() != (data["n"], data["a_n"], data["k_n"], data["p_n"]):
            raise ValueError("cache counts disagree with its contents")
        return rep


def _worker(pairs) -> tuple:
    return tuple(alexander_of_spec(LorenzSpec(pairs)).coeffs)


def _map(func, items, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [func(x) for x in items]
    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=chunk))


def degree_report(n: int, jobs: int = 1) -> DegreeReport:
    specs = enumerate_specs(n)
    knot_specs = [s for s in specs if components(s) == 1]
    coeffs = _map(_worker, [s.pairs for s in knot_specs], jobs)
    by_spec = {s: AlexanderPoly(c) for s, c in zip(knot_specs, coeffs)}
    polys = sorted(set(by_spec.values()), key=lambda p: p.coeffs)
    return DegreeReport(n, specs, knot_specs, polys, by_spec)


def default_cache_dir():
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def _cache_path(cache_dir, n: int) -> Path:
    return Path(cache_dir) / f"degree_{n}.json"


def load_cached(cache_dir, n: int):
    path = _cache_path(cache_dir, n)
    try:
        with open(path) as fh:
            rep = DegreeReport.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError):
        return None
    return rep if rep.n == n else None


def save_cached(cache_dir, rep: DegreeReport):
    path = _cache_path(cache_dir, rep.n)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(rep.to_json(), fh)
    os.replace(tmp, path)


def cached_report(n: int, jobs: int = 1, cache_dir=None) -> DegreeReport:
    """``degree_report`` through the on-disk cache, if a directory is given."""
    if cache_dir is None:
        cache_dir = default_cache_dir()
    if cache_dir is not None:
        rep = load_cached(cache_dir, n)
        if rep is not None:
            return rep
    rep = degree_report(n, jobs)
    if cache_dir is not None:
        save_cached(cache_dir, rep)
    return rep


def full_table(max_n: int, jobs: int = 1, cache_dir=None, cap: int = TABLE_CAP) -> list:
    """Rows (n, #A_n, k(n), p(n)) for n = 2, 4, ..., max_n."""
    if max_n > cap:
        raise PrecondViolated(f"max_n = {max_n} exceeds the cap {cap}")
    return [cached_report(n, jobs, cache_dir).row() for n in range(2, max_n + 1, 2)]
