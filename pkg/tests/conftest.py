import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from modknot import LorenzSpec, components, is_primitive

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def _is_knot_word(w):
    return "L" in w and "R" in w and is_primitive(w)


def knot_words(min_size=2, max_size=14):
    """Primitive words containing both letters; every one closes to a knot."""
    return st.text(alphabet="LR", min_size=min_size, max_size=max_size).filter(_is_knot_word)


def lorenz_specs(max_r=4, max_entry=5):
    pair = st.tuples(st.integers(1, max_entry), st.integers(1, max_entry))
    return st.lists(pair, min_size=1, max_size=max_r).map(lambda ps: LorenzSpec(tuple(ps)))


def knot_specs(max_r=4, max_entry=5, max_strands=20):
    return lorenz_specs(max_r, max_entry).filter(
        lambda s: s.strands <= max_strands and components(s) == 1)


def random_knot_words(count, max_len, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_len)
        w = "".join(rng.choice("LR") for _ in range(n))
        if _is_knot_word(w):
            out.append(w)
    return out


@pytest.fixture
def example_word():
    return "LLLLRRRLLLLRRRLRR"


@pytest.fixture
def example_spec():
    return LorenzSpec.of(2, 4, 1, 2, 3, 1, 2, 2)
