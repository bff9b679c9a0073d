import json
import time

import pytest

from modknot.alexander import AlexanderPoly, alexander_degree_formula, alexander_of_spec
from modknot.braid import LorenzSpec, spec_from_word, word_from_spec
from modknot.enumeration import (DegreeReport, cached_report, degree_report, enumerate_specs,
                                 full_table, load_cached, partition_count, spec_from_partition)
from modknot.errors import OddDegree, PrecondViolated
from modknot.words import flip_word

TABLE_P = [2, 5, 11, 22, 42, 77, 135, 231, 385, 627, 1002, 1575, 2436, 3718, 5604]


def specs(*flat_tuples):
    return {LorenzSpec.of(*t) for t in flat_tuples}


def degree_of_tuple(spec):
    P = spec.P
    pairs = spec.pairs
    total = sum((P[j] - 1) * pairs[j][1] for j in range(spec.r - 1))
    return total + (P[-1] - 1) * (pairs[-1][1] - 1)


def test_partition_count():
    assert partition_count(0) == 1
    assert partition_count(2) == 2
    assert partition_count(30) == 5604
    assert [partition_count(n) for n in range(2, 31, 2)] == TABLE_P


def test_bijection_example():
    # 6 = 1 + 1 + 4 -> values (1, 4) with multiplicities (2, 1)
    assert spec_from_partition(((1, 2), (4, 1))) == LorenzSpec.of(2, 2, 3, 2)


def test_enumerate_small():
    assert set(enumerate_specs(2)) == specs((2, 3), (3, 2))
    assert set(enumerate_specs(4)) == specs((2, 5), (3, 3), (5, 2), (2, 1, 2, 2), (2, 2, 1, 2))
    assert set(enumerate_specs(6)) == specs(
        (2, 7), (3, 4), (4, 3), (7, 2), (2, 2, 1, 3), (2, 4, 1, 2), (2, 3, 2, 2), (2, 2, 3, 2),
        (2, 1, 4, 2), (3, 1, 2, 2), (2, 1, 1, 1, 1, 2))


def test_odd_and_small_rejected():
    with pytest.raises(OddDegree):
        enumerate_specs(3)
    with pytest.raises(OddDegree):
        degree_report(5)
    with pytest.raises(PrecondViolated):
        enumerate_specs(0)


@pytest.mark.parametrize("n", range(2, 31, 2))
def test_enumerate_counts_and_constraint(n):
    out = enumerate_specs(n)
    assert len(out) == partition_count(n) == len(set(out))
    for s in out:
        assert s.pairs[0][0] > 1 and s.pairs[-1][1] > 1
        assert degree_of_tuple(s) == n == alexander_degree_formula(s)
    assert out == sorted(out, key=lambda s: s.pairs)


def test_reports_small():
    r2 = degree_report(2)
    assert r2.row() == (2, 1, 2, 2)
    assert r2.polynomials == [AlexanderPoly((1, -1, 1))]
    r4 = degree_report(4)
    assert r4.row() == (4, 1, 4, 5)
    assert r4.polynomials == [AlexanderPoly((1, -1, 1, -1, 1))]
    r6 = degree_report(6)
    assert r6.row() == (6, 2, 9, 11)
    assert set(r6.polynomials) == {AlexanderPoly((1, -1, 1, -1, 1, -1, 1)),
                                   AlexanderPoly((1, -1, 0, 1, 0, -1, 1))}


@pytest.mark.parametrize("n", [8, 10, 12])
def test_report_consistency(n):
    rep = degree_report(n)
    assert rep.a_n <= rep.k_n <= rep.p_n == partition_count(n)
    for s, p in rep.by_spec.items():
        assert p.degree == n
    # swapping L and R conjugates the partition and keeps the polynomial
    for s in rep.knot_specs:
        t = spec_from_word(flip_word(word_from_spec(s)))
        assert t in rep.by_spec
        assert rep.by_spec[t] == rep.by_spec[s]


def test_parallel_matches_serial():
    a = degree_report(12, jobs=1)
    b = degree_report(12, jobs=2)
    assert a.to_json() == b.to_json()


def test_cache_roundtrip(tmp_path):
    rep = cached_report(8, cache_dir=tmp_path)
    path = tmp_path / "degree_8.json"
    data = json.loads(path.read_text())
    assert data["schema"] == 1 and data["n"] == 8
    assert (data["p_n"], data["k_n"], data["a_n"]) == (22, 16, 2)
    assert len(data["specs"]) == 22 and sum(data["knots"]) == 16
    assert all(isinstance(c, int) for p in data["polynomials"] for c in p)
    again = load_cached(tmp_path, 8)
    assert again.row() == rep.row() and again.polynomials == rep.polynomials
    assert DegreeReport.from_json(data).knot_specs == rep.knot_specs


def test_cache_hit_skips_work(tmp_path, monkeypatch):
    cached_report(6, cache_dir=tmp_path)
    import modknot.enumeration as enum
    monkeypatch.setattr(enum, "degree_report", lambda *a, **k: pytest.fail("recomputed"))
    assert cached_report(6, cache_dir=tmp_path).row() == (6, 2, 9, 11)


def test_corrupt_cache_recomputed(tmp_path):
    (tmp_path / "degree_4.json").write_text("{not json")
    assert cached_report(4, cache_dir=tmp_path).row() == (4, 1, 4, 5)
    assert load_cached(tmp_path, 4) is not None


def test_env_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("MODKNOT_CACHE", str(tmp_path))
    cached_report(2)
    assert (tmp_path / "degree_2.json").exists()


def test_full_table_small(tmp_path):
    assert full_table(6, cache_dir=tmp_path) == [(2, 1, 2, 2), (4, 1, 4, 5), (6, 2, 9, 11)]
    with pytest.raises(PrecondViolated):
        full_table(50)


def test_smoke_budget():
    start = time.perf_counter()
    rows = full_table(16)
    assert time.perf_counter() - start < 60
    assert rows[-1] == (16, 9, 134, 231)
