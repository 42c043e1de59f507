"""Shared fixtures and deliberately naive reference implementations.

The helpers here use nothing from the package beyond the Group table, so
tests can compare the package against them.
"""

import itertools

import pytest

from regularsets import builtin_group, subgroup_from


def naive_is_subgroup(G, members):
    return G.identity in members and all(G.table[a][b] in members for a in members for b in members)


def naive_is_normal(G, members):
    return all(G.table[G.table[g][h]][G.inverse[g]] in members for g in range(G.order) for h in members)


def naive_normal_subgroups(G):
    """Every normal subgroup by scanning all 2^n subsets (n <= 12)."""
    assert G.order <= 12
    found = []
    for mask in range(1 << G.order):
        members = {x for x in range(G.order) if mask >> x & 1}
        if naive_is_subgroup(G, members) and naive_is_normal(G, members):
            found.append(frozenset(members))
    return found


def naive_counts(G, X, R):
    """Neighbours of every vertex listed edge by edge, then counted in R."""
    edges = {frozenset((g, G.table[g][x])) for g in range(G.order) for x in X}
    counts = {g: 0 for g in range(G.order)}
    for e in edges:
        a, b = tuple(e)
        if b in R:
            counts[a] += 1
        if a in R:
            counts[b] += 1
    return counts


def naive_regular(G, X, R):
    counts = naive_counts(G, X, R)
    inside = {counts[g] for g in R}
    outside = {counts[g] for g in range(G.order) if g not in R}
    if len(inside) > 1 or len(outside) > 1:
        return None
    return (next(iter(inside), None), next(iter(outside), None))


def naive_witnesses(G, R, kappa, tau):
    """All connection sets making R (kappa, tau)-regular, by full enumeration."""
    orbits = sorted({frozenset((x, G.inverse[x])) for x in range(G.order) if x != G.identity},
                    key=min)
    assert len(orbits) <= 12
    hits = []
    for pick in itertools.product((0, 1), repeat=len(orbits)):
        X = set().union(*(o for o, p in zip(orbits, pick) if p))
        if naive_regular(G, X, R) == (kappa, tau):
            hits.append(frozenset(X))
    return hits


def isomorphic(G1, G2):
    """Brute-force isomorphism test over all bijections (small orders only)."""
    if G1.order != G2.order:
        return False
    n = G1.order
    for perm in itertools.permutations(range(n)):
        if perm[G1.identity] != G2.identity:
            continue
        if all(perm[G1.table[a][b]] == G2.table[perm[a]][perm[b]] for a in range(n) for b in range(n)):
            return True
    return False


@pytest.fixture
def c4():
    G = builtin_group("cyclic", 4)
    return G, subgroup_from(G, [0, 2])


@pytest.fixture
def c6():
    return builtin_group("cyclic", 6)


@pytest.fixture
def s3():
    G = builtin_group("symmetric", 3)
    return G, subgroup_from(G, [0, 3, 4])
