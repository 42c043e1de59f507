"""Brute-force ground truth: neighbour counting and exhaustive witness search.

Nothing here relies on the coset machinery or on the constructions in
:mod:`regularsets.witness`; it works straight from the Cayley table so it can
be used to check them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExhausted, NotAConnectionSet, SearchSpaceTooLarge
from .group import ElementSet, Group

DEFAULT_ORBIT_BOUND = 24
DEFAULT_BUDGET = 10_000_000


class ConnectionSet(ElementSet):
    """Inverse-closed, identity-free subset of ``G``; build via :func:`connection_set`."""


def is_inverse_closed(G: Group, X: ElementSet) -> bool:
    """True iff ``X`` avoids the identity and contains the inverse of each member."""
    members = X.members
    return G.identity not in members and all(G.inverse[x] in members for x in members)


def connection_set(G: Group, members) -> ConnectionSet:
    X = ConnectionSet.of(G.order, members)
    if G.identity in X.members:
        raise NotAConnectionSet(f"connection set contains the identity {G.identity}")
    for x in X:
        if G.inverse[x] not in X.members:
            raise NotAConnectionSet(
                f"connection set is not inverse-closed: {x} present, inverse {G.inverse[x]} missing"
            )
    return X


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    observed_counts: dict[int, int]
    first_violation: tuple[int, int, int] | None = None
    kappa: int | None = None
    tau: int | None = None

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def neighbour_counts(G: Group, X: ElementSet, R: ElementSet) -> dict[int, int]:
    """``|gX ∩ R|`` for every vertex ``g``."""
    xs = X.sorted()
    r = R.members
    return {g: sum(1 for x in xs if G.table[g][x] in r) for g in G.elements()}


def regular_set_check(G: Group, X: ElementSet, R: ElementSet) -> VerificationReport:
    """Decide whether ``R`` is a regular set of ``Cay(G, X)``.

    On a pass, ``kappa`` is the common count on ``R`` and ``tau`` the common
    count off ``R``; either is ``None`` when its side is empty (``R = G`` makes
    ``tau`` vacuous).  ``first_violation`` is ``(vertex, expected, observed)``
    where ``expected`` is the count at the first vertex on the same side.
    """
    if not is_inverse_closed(G, X):
        raise NotAConnectionSet("X must be inverse-closed and must not contain the identity")
    counts = neighbour_counts(G, X, R)
    expected: dict[bool, int] = {}
    violation = None
    for g in G.elements():
        side = g in R.members
        if side not in expected:
            expected[side] = counts[g]
        elif counts[g] != expected[side] and violation is None:
            violation = (g, expected[side], counts[g])
    if violation is not None:
        return VerificationReport(False, counts, violation)
    return VerificationReport(True, counts, None, expected.get(True), expected.get(False))


def inversion_orbits(G: Group) -> list[tuple[int, ...]]:
    """``{x, x^-1}`` for every non-identity ``x``, ordered by least member."""
    orbits = []
    for x in G.elements():
        y = G.inverse[x]
        if x == G.identity or y < x:
            continue
        orbits.append((x,) if x == y else (x, y))
    return orbits


def _left_coset_ids(G: Group, H: ElementSet) -> list[int]:
    ids = [-1] * G.order
    hs = H.sorted()
    # H itself gets id 0
    next_id = 0
    for g in [G.identity, *G.elements()]:
        if ids[g] != -1:
            continue
        for h in hs:
            ids[G.table[g][h]] = next_id
        next_id += 1
    return ids


def exhaustive_witness_search(
    G: Group,
    H: ElementSet,
    kappa: int,
    tau: int,
    *,
    budget: int = DEFAULT_BUDGET,
    orbit_bound: int = DEFAULT_ORBIT_BOUND,
) -> ConnectionSet | None:
    """Search every connection set for one making the subgroup ``H`` a
    ``(kappa, tau)``-regular set.

    Candidates are unions of inversion orbits, explored depth-first with the
    orbit taken before it is skipped, so the result is the first hit in a
    fixed order.  Since ``|gX ∩ H| = |X ∩ g^-1 H|``, a candidate works exactly
    when it meets ``H`` in ``kappa`` elements and every other left coset in
    ``tau``; branches that overshoot or can no longer reach those targets are
    cut.  Returns ``None`` only after the whole space is exhausted; raises
    BudgetExhausted if ``budget`` search nodes were not enough.
    """
    orbits = inversion_orbits(G)
    if len(orbits) > orbit_bound:
        raise SearchSpaceTooLarge(f"{len(orbits)} inversion orbits exceed bound {orbit_bound}")
    ids = _left_coset_ids(G, H)
    ncos = max(ids) + 1
    target = [kappa] + [tau] * (ncos - 1)

    contrib = []
    for orb in orbits:
        c = [0] * ncos
        for x in orb:
            c[ids[x]] += 1
        contrib.append(c)
    # capacity[k][c]: what orbits k.. can still add to coset c
    capacity = [[0] * ncos for _ in range(len(orbits) + 1)]
    for k in range(len(orbits) - 1, -1, -1):
        capacity[k] = [a + b for a, b in zip(capacity[k + 1], contrib[k])]
    if any(capacity[0][c] < target[c] for c in range(ncos)):
        return None

    counts = [0] * ncos
    chosen: list[int] = []
    nodes = 0

    def feasible(k: int) -> bool:
        cap = capacity[k]
        return all(counts[c] <= target[c] <= counts[c] + cap[c] for c in range(ncos))

    def dfs(k: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(f"search budget of {budget} nodes exhausted")
        if counts == target:
            return True
        if k == len(orbits):
            return False
        step = contrib[k]
        for c in range(ncos):
            counts[c] += step[c]
        chosen.append(k)
        if feasible(k + 1) and dfs(k + 1):
            return True
        chosen.pop()
        for c in range(ncos):
            counts[c] -= step[c]
        return feasible(k + 1) and dfs(k + 1)

    if not dfs(0):
        return None
    X = connection_set(G, (x for k in chosen for x in orbits[k]))
    report = regular_set_check(G, X, H)
    if not (report.passed and report.kappa == kappa and report.tau in (tau, None)):
        raise AssertionError(f"coset counts matched but neighbour check failed for {X}")
    return X
