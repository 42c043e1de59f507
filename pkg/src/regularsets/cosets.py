"""Left-coset decomposition of a normal subgroup and the coset-inversion pairing.

Positions in a :class:`CosetDecomposition` run ``0..s``.  Position 0 is ``H``
itself (represented by the identity); positions ``1..s`` are the non-trivial
cosets in canonical order:

* ``1..t``: self-inverse cosets (``(aH)^-1 = aH``);
* ``t+1..t+ell`` and ``t+ell+1..s``: paired cosets, where position ``t+j`` is
  inverted onto ``t+j+ell``.

``sigma`` and ``involution_count`` are tuples indexed by position, so
``sigma[i]`` and ``involution_count[i]`` read directly for ``1 <= i <= s``;
entry 0 describes ``H`` (``sigma[0] == 0``, ``involution_count[0]`` counts the
involutions inside ``H``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TrivialOrFull
from .group import ElementSet, Group, require_normal


@dataclass(frozen=True)
class CosetDecomposition:
    transversal: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]
    coset_of: tuple[int, ...]
    sigma: tuple[int, ...]
    t: int
    ell: int
    involution_count: tuple[int, ...]
    # cosets sorted by their minimum element, before canonical reordering
    discovery_transversal: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.transversal) - 1

    @property
    def subgroup_order(self) -> int:
        return len(self.cosets[0])

    def self_inverse_positions(self) -> range:
        return range(1, self.t + 1)

    def paired_positions(self) -> range:
        """The lower half ``t+1..t+ell`` of the paired block."""
        return range(self.t + 1, self.t + self.ell + 1)


def _inverse_coset(G: Group, coset: tuple[int, ...], coset_of: dict[int, int]) -> int:
    return coset_of[G.inverse[coset[0]]]


def left_cosets(G: Group, H: ElementSet) -> CosetDecomposition:
    """Decompose ``G`` into left cosets of the normal subgroup ``H``.

    Raises TrivialOrFull unless ``1 < |H| < |G|`` and NotNormal when some
    conjugate of ``H`` differs from ``H``.
    """
    if not 1 < len(H) < G.order:
        raise TrivialOrFull(f"|H| = {len(H)} must satisfy 1 < |H| < |G| = {G.order}")
    require_normal(G, H)

    hs = sorted(H.members)
    raw: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for g in G.elements():
        if g in seen:
            continue
        row = G.table[g]
        coset = tuple(sorted(row[h] for h in hs))
        seen.update(coset)
        raw.append(coset)
    # raw[k] has minimum element g, so it is already in discovery order, except
    # that H must sit at position 0 even when the identity is not index 0.
    raw.sort(key=lambda c: (G.identity not in c, c[0]))
    discovery = tuple(G.identity if k == 0 else c[0] for k, c in enumerate(raw))

    raw_of = {x: k for k, c in enumerate(raw) for x in c}
    self_inverse, pairs = [], []
    for k in range(1, len(raw)):
        j = _inverse_coset(G, raw[k], raw_of)
        if j == k:
            self_inverse.append(k)
        elif k < j:
            pairs.append((k, j))
    order = [0] + self_inverse + [a for a, _ in pairs] + [b for _, b in pairs]
    cosets = tuple(raw[k] for k in order)
    transversal = tuple(discovery[k] for k in order)
    coset_of = [0] * G.order
    for pos, c in enumerate(cosets):
        for x in c:
            coset_of[x] = pos

    t, ell = len(self_inverse), len(pairs)
    sigma = [0] * len(cosets)
    for i in range(1, t + 1):
        sigma[i] = i
    for j in range(1, ell + 1):
        sigma[t + j] = t + j + ell
        sigma[t + j + ell] = t + j

    dec = CosetDecomposition(
        transversal=transversal,
        cosets=cosets,
        coset_of=tuple(coset_of),
        sigma=tuple(sigma),
        t=t,
        ell=ell,
        involution_count=(),
        discovery_transversal=discovery,
    )
    object.__setattr__(dec, "involution_count", involution_profile(G, dec))
    return dec


def involution_profile(G: Group, dec: CosetDecomposition) -> tuple[int, ...]:
    """Number of involutions in each coset, indexed by position."""
    e = G.identity
    return tuple(
        sum(1 for x in coset if x != e and G.table[x][x] == e) for coset in dec.cosets
    )
