"""Shared corpora: exhaustively enumerated small graphs plus seeded
random triangle-free hosts for the density identity tests."""

from __future__ import annotations

import random

import pytest

from chkit import CH3_FORBIDDEN, Orgraph
from chkit.enumeration import levels_up_to


def random_c3_free(n: int, seed: int, keep: float = 0.55) -> Orgraph:
    """Deterministic random triangle-free orgraph via greedy insertion."""
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    rng.shuffle(pairs)
    out = [0] * n
    inc = [0] * n
    for u, v in pairs:
        if rng.random() > keep:
            continue
        if (out[u] >> v) & 1 or (out[v] >> u) & 1:
            continue
        # u->v closes a triangle iff some x has v->x and x->u
        if out[v] & inc[u]:
            continue
        out[u] |= 1 << v
        inc[v] |= 1 << u
    return Orgraph(n, out)


@pytest.fixture(scope="session")
def c3_free_levels() -> dict[int, list[Orgraph]]:
    """Every triangle-free isomorphism class with 1 <= n <= 6."""
    return levels_up_to(6, require_c3_free=True)


@pytest.fixture(scope="session")
def pattern_free_levels() -> dict[int, list[Orgraph]]:
    """Every triangle-free, forbidden-pattern-free class with 1 <= n <= 6."""
    return levels_up_to(6, require_c3_free=True, forbidden_induced=CH3_FORBIDDEN)


@pytest.fixture(scope="session")
def flag_hosts(c3_free_levels) -> list[Orgraph]:
    """At least 100 triangle-free graphs with n <= 10: every class at
    n <= 4 plus deterministic samples of the n=5 level and seeded random
    hosts at 6 <= n <= 10."""
    hosts = [g for n in (2, 3, 4) for g in c3_free_levels[n]]
    hosts.extend(c3_free_levels[5][::8])
    for n in range(6, 11):
        for seed in range(6):
            hosts.append(random_c3_free(n, seed=1000 * n + seed))
    assert len(hosts) >= 100
    return hosts
