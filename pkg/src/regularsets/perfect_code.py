"""Perfect codes of groups: the square-root criterion, code checks, transversals."""

from __future__ import annotations

from dataclasses import dataclass

from .cosets import CosetDecomposition, left_cosets
from .group import ElementSet, Group, require_normal


@dataclass(frozen=True)
class SharpConditionResult:
    """Outcome of :func:`satisfies_sharp_condition`.

    ``witnesses`` maps each scanned ``g`` with ``g^2 in H`` to an ``h`` with
    ``(gh)^2 = 1``; ``failing`` is the first ``g`` for which no ``h`` exists.
    """

    holds: bool
    witnesses: dict[int, int]
    failing: int | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class PerfectCodeCertificate:
    Y: ElementSet
    decomposition: CosetDecomposition

    def check(self, G: Group, H: ElementSet) -> None:
        """Assert the three defining properties of a perfect-code transversal."""
        Y = self.Y.members
        assert G.identity in Y, "Y must contain the identity"
        assert all(G.inverse[y] in Y for y in Y), "Y must be inverse-closed"
        hits = [0] * len(self.decomposition.cosets)
        for y in Y:
            hits[self.decomposition.coset_of[y]] += 1
        assert all(k == 1 for k in hits), f"Y must meet every coset once, got {hits}"
        assert is_code_with_respect_to(G, H, self.Y, 1), "H is not a code w.r.t. Y"


def satisfies_sharp_condition(G: Group, H: ElementSet) -> SharpConditionResult:
    """For every ``g`` with ``g^2 in H``, look for ``h in H`` with ``(gh)^2 = 1``.

    ``gH`` is the same set for every ``g`` in a coset, so only the least
    element of each coset is scanned.  ``H`` must be normal.
    """
    require_normal(G, H)
    e, table = G.identity, G.table
    hs = sorted(H.members)
    seen: set[int] = set()
    witnesses = {}
    for g in G.elements():
        if g in seen:
            continue
        row = table[g]
        seen.update(row[h] for h in hs)
        if table[g][g] not in H.members:
            continue
        for h in hs:
            gh = row[h]
            if table[gh][gh] == e:
                witnesses[g] = h
                break
        else:
            return SharpConditionResult(False, witnesses, g)
    return SharpConditionResult(True, witnesses)


def self_inverse_cosets_have_involutions(dec: CosetDecomposition) -> bool:
    return all(dec.involution_count[i] > 0 for i in dec.self_inverse_positions())


def is_code_with_respect_to(G: Group, C: ElementSet, Y: ElementSet, lam: int) -> bool:
    """True iff every element of ``G`` is ``c*y`` (c in C, y in Y) in exactly ``lam`` ways."""
    counts = [0] * G.order
    for c in C.members:
        row = G.table[c]
        for y in Y.members:
            counts[row[y]] += 1
    ok = all(k == lam for k in counts)
    if ok:
        assert len(C) * len(Y) == lam * G.order
    return ok


def perfect_code_transversal(
    G: Group, H: ElementSet, dec: CosetDecomposition | None = None
) -> PerfectCodeCertificate | None:
    """Pick ``{1, y_1, ..., y_s}`` with one element per coset, inverse-closed.

    Self-inverse cosets contribute their least involution, paired cosets the
    least element and its inverse.  Returns ``None`` when a self-inverse coset
    has no involution, in which case no perfect-code transversal exists.
    """
    if dec is None:
        dec = left_cosets(G, H)
    e = G.identity
    Y = {e}
    for i in dec.self_inverse_positions():
        invs = [x for x in dec.cosets[i] if G.table[x][x] == e]
        if not invs:
            return None
        Y.add(invs[0])
    for i in dec.paired_positions():
        y = dec.cosets[i][0]
        Y.add(y)
        Y.add(G.inverse[y])
    cert = PerfectCodeCertificate(ElementSet.of(G.order, Y), dec)
    cert.check(G, H)
    return cert
