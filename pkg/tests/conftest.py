"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from sedf.groups import AbelianGroup, abelian_groups_of_order, make_group
from sedf.verifier import Family, make_family

# factor lists for every abelian group of order 2..12 plus a few larger ones
SMALL_GROUP_FACTORS = [
    g.factors
    for v in range(2, 13)
    for g in abelian_groups_of_order(v)
] + [(3, 9), (2, 2, 5), (5, 5)]


@st.composite
def small_groups(draw) -> AbelianGroup:
    return make_group(draw(st.sampled_from(SMALL_GROUP_FACTORS)))


@st.composite
def group_with_elements(draw, count: int = 2):
    group = draw(small_groups())
    elems = [
        tuple(draw(st.integers(0, n - 1)) for n in group.factors) for _ in range(count)
    ]
    return (group, *elems)


def random_family(rng: random.Random, max_order: int = 27) -> Family:
    """A structurally valid family in a random abelian group of order <= max_order."""
    v = rng.randint(4, max_order)
    group = rng.choice(abelian_groups_of_order(v))
    m = rng.randint(2, min(6, v))
    k = rng.randint(1, max(1, v // m))
    ranks = rng.sample(range(v), m * k)
    sets = [[group.unrank(r) for r in ranks[i * k : (i + 1) * k]] for i in range(m)]
    return make_family(group, sets)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260810)
