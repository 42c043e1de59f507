"""Connection sets that make a normal subgroup a (kappa, tau)-regular set.

The pipeline is always: build a ``(0, tau)`` witness ``Y`` coset by coset,
then add an inverse-closed ``Z`` inside ``H`` of size ``kappa``.  For odd
``tau`` a witness exists exactly when ``H`` is a perfect code, and
:func:`extract_perfect_code` recovers the perfect-code transversal from any
odd-``tau`` witness.

Selection is deterministic throughout: involutions are taken in increasing
index order, and inverse pairs as "least ``x`` with ``x < x^-1`` not yet
used, then its inverse".
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cosets import CosetDecomposition, left_cosets
from .errors import (
    GcdViolation,
    InternalDefect,
    KappaOutOfRange,
    NotAWitness,
    TauEven,
    TauOdd,
    TauOutOfRange,
    TrivialOrFull,
    YIntersectsH,
)
from .group import ElementSet, Group, require_normal
from .oracle import ConnectionSet, connection_set, regular_set_check
from .perfect_code import PerfectCodeCertificate, perfect_code_transversal


@dataclass(frozen=True)
class RegularSetCertificate:
    """A connection set ``X`` under which ``R`` is a (kappa, tau)-regular set.

    ``kappa`` and ``tau`` are the values the oracle measured, not the ones
    that were requested.
    """

    X: ConnectionSet
    R: ElementSet
    kappa: int
    tau: int


def check_parameters(h: int, kappa: int, tau: int) -> None:
    """Raise a ParameterViolation subclass naming the first broken clause."""
    if not 0 <= kappa <= h - 1:
        raise KappaOutOfRange(f"kappa={kappa} outside 0 <= kappa <= |H|-1 = {h - 1}")
    if not 1 <= tau <= h:
        raise TauOutOfRange(f"tau={tau} outside 1 <= tau <= |H| = {h}")
    g = math.gcd(2, h - 1)
    if kappa % g:
        raise GcdViolation(f"gcd(2,|H|-1)={g} does not divide kappa={kappa}")


def valid_parameters(h: int) -> list[tuple[int, int]]:
    """Every admissible ``(kappa, tau)`` for a subgroup of order ``h``."""
    step = math.gcd(2, h - 1)
    return [(k, t) for k in range(0, h, step) for t in range(1, h + 1)]


def _check_shape(G: Group, H: ElementSet) -> None:
    if not 1 < len(H) < G.order:
        raise TrivialOrFull(f"|H| = {len(H)} must satisfy 1 < |H| < |G| = {G.order}")
    require_normal(G, H)


def _split(G: Group, pool) -> tuple[list[int], list[int]]:
    """Involutions of ``pool`` and the lesser halves of its inverse pairs."""
    e = G.identity
    invs, lows = [], []
    for x in sorted(pool):
        if x == e:
            continue
        y = G.inverse[x]
        if y == x:
            invs.append(x)
        elif x < y:
            lows.append(x)
    return invs, lows


def _pairs(G: Group, lows: list[int], count: int) -> list[int]:
    if count > len(lows):
        raise InternalDefect(f"need {count} inverse pairs, only {len(lows)} available")
    out = []
    for x in lows[:count]:
        out += [x, G.inverse[x]]
    return out


def _self_inverse_block(G: Group, pool, size: int) -> list[int]:
    """An inverse-closed subset of ``size`` elements from a self-inverse ``pool``.

    These are the three self-inverse-coset rules: all involutions when there
    are enough; else every involution plus pairs; else, when the parity is off,
    one involution fewer and one more pair.
    """
    invs, lows = _split(G, pool)
    n = len(invs)
    if n >= size:
        return invs[:size]
    if (size - n) % 2 == 0:
        return invs + _pairs(G, lows, (size - n) // 2)
    # size even and size - n odd force n odd, so there is an involution to drop
    if n < 1:
        raise InternalDefect(f"odd gap {size - n} with no involution to drop")
    return invs[: n - 1] + _pairs(G, lows, (size + 1 - n) // 2)


def _assemble(G: Group, H: ElementSet, dec: CosetDecomposition, blocks: dict[int, list[int]],
              tau: int) -> ConnectionSet:
    for i in range(dec.t + dec.ell + 1, dec.s + 1):
        blocks[i] = sorted(G.inverse[x] for x in blocks[i - dec.ell])
    for i in range(1, dec.s + 1):
        block = blocks[i]
        if len(set(block)) != tau or any(dec.coset_of[x] != i for x in block):
            raise InternalDefect(f"coset block {i} is {block}, expected {tau} elements of coset {i}")
    X = connection_set(G, (x for i in range(1, dec.s + 1) for x in blocks[i]))
    if X.members & H.members:
        raise InternalDefect("connection set meets H")
    return X


def build_even_tau(G: Group, H: ElementSet, tau: int,
                   dec: CosetDecomposition | None = None) -> ConnectionSet:
    """A connection set making ``H`` a ``(0, tau)``-regular set, ``tau`` even.

    Every non-trivial coset receives exactly ``tau`` elements; paired cosets
    take their ``tau`` least elements and hand the inverses to the partner.
    """
    _check_shape(G, H)
    if tau % 2:
        raise TauOdd(f"tau={tau} is odd")
    if not 2 <= tau <= len(H):
        raise TauOutOfRange(f"tau={tau} outside 2 <= tau <= |H| = {len(H)}")
    if dec is None:
        dec = left_cosets(G, H)
    blocks: dict[int, list[int]] = {}
    for i in dec.self_inverse_positions():
        blocks[i] = _self_inverse_block(G, dec.cosets[i], tau)
    for i in dec.paired_positions():
        if dec.involution_count[i]:
            raise InternalDefect(f"paired coset {i} contains an involution")
        blocks[i] = list(dec.cosets[i][:tau])
    return _assemble(G, H, dec, blocks, tau)


def build_zero_tau_odd(G: Group, H: ElementSet, tau: int,
                       dec: CosetDecomposition | None = None) -> ConnectionSet | None:
    """A ``(0, tau)`` witness for odd ``tau``, or ``None`` if ``H`` is no perfect code.

    Starts from the perfect-code transversal ``y_i``; a self-inverse coset
    then gets ``tau - 1`` more elements by the even rules applied to the rest
    of the coset, a paired coset its ``tau - 1`` least other elements.  The
    result is re-checked by the oracle before it is returned.
    """
    _check_shape(G, H)
    if tau % 2 == 0:
        raise TauEven(f"tau={tau} is even")
    if not 1 <= tau <= len(H):
        raise TauOutOfRange(f"tau={tau} outside 1 <= tau <= |H| = {len(H)}")
    if dec is None:
        dec = left_cosets(G, H)
    code = perfect_code_transversal(G, H, dec)
    if code is None:
        return None
    y = {dec.coset_of[x]: x for x in code.Y.members}
    blocks: dict[int, list[int]] = {}
    for i in dec.self_inverse_positions():
        rest = [x for x in dec.cosets[i] if x != y[i]]
        blocks[i] = [y[i]] + _self_inverse_block(G, rest, tau - 1)
    for i in dec.paired_positions():
        blocks[i] = [y[i]] + [x for x in dec.cosets[i] if x != y[i]][: tau - 1]
    X = _assemble(G, H, dec, blocks, tau)
    report = regular_set_check(G, X, H)
    if not (report.passed and (report.kappa, report.tau) == (0, tau)):
        raise InternalDefect(
            f"odd-tau construction failed verification: X={X.sorted()}, "
            f"tau={tau}, report={report}"
        )
    return X


def subgroup_non_involutions(G: Group, H: ElementSet) -> int:
    """``m``: how many elements of ``H`` have order greater than 2 (always even)."""
    e = G.identity
    m = sum(1 for h in H.members if G.table[h][h] != e)
    if m % 2:
        raise InternalDefect(f"odd number {m} of elements of order > 2 in H")
    return m


def augment_kappa(G: Group, H: ElementSet, Y: ElementSet, kappa: int) -> ConnectionSet:
    """``Y ∪ Z`` for an inverse-closed ``Z ⊆ H \\ {1}`` with ``|Z| = kappa``.

    Pairs of mutually inverse elements are used first; involutions make up an
    odd ``kappa`` or whatever the pairs cannot cover.
    """
    h = len(H)
    if not 0 <= kappa <= h - 1:
        raise KappaOutOfRange(f"kappa={kappa} outside 0 <= kappa <= |H|-1 = {h - 1}")
    if kappa % math.gcd(2, h - 1):
        raise GcdViolation(f"gcd(2,|H|-1)=2 does not divide kappa={kappa}")
    if Y.members & H.members:
        raise YIntersectsH(f"Y meets H in {sorted(Y.members & H.members)}")
    invs, lows = _split(G, H.members)
    m = subgroup_non_involutions(G, H)
    if m >= kappa:
        Z = _pairs(G, lows, kappa // 2) + (invs[:1] if kappa % 2 else [])
    else:
        Z = _pairs(G, lows, m // 2) + invs[: kappa - m]
    if len(set(Z)) != kappa:
        raise InternalDefect(f"subgroup part has {len(set(Z))} elements, wanted {kappa}")
    return connection_set(G, Y.members | set(Z))


def strip_subgroup_part(G: Group, H: ElementSet, X: ElementSet) -> ConnectionSet:
    return connection_set(G, X.members - H.members)


def extract_perfect_code(G: Group, H: ElementSet, X: ElementSet, tau: int) -> PerfectCodeCertificate:
    """Read a perfect-code transversal off a ``(0, tau)`` witness with ``tau`` odd.

    Each coset block ``X ∩ aH`` is either inverted onto another block, in
    which case the lower block donates its least element and the partner the
    inverse, or is its own inverse, in which case its odd size guarantees an
    involution and the least one is taken.
    """
    if tau % 2 == 0:
        raise TauEven(f"tau={tau} is even")
    report = regular_set_check(G, X, H)
    if not (report.passed and (report.kappa, report.tau) == (0, tau)):
        raise NotAWitness(f"X={X.sorted()} does not make H a (0,{tau})-regular set")
    dec = left_cosets(G, H)
    blocks: list[list[int]] = [[] for _ in dec.cosets]
    for x in sorted(X.members):
        blocks[dec.coset_of[x]].append(x)

    e = G.identity
    Y = {e}
    for i in range(1, dec.s + 1):
        j = dec.coset_of[G.inverse[blocks[i][0]]]
        if sorted(G.inverse[x] for x in blocks[i]) != blocks[j]:
            raise InternalDefect(f"block {i} does not invert onto block {j}")
        if j == i:
            invs = [x for x in blocks[i] if G.table[x][x] == e]
            if not invs:
                raise InternalDefect(f"self-inverse block {i} of odd size has no involution")
            Y.add(invs[0])
        elif i < j:
            Y.add(blocks[i][0])
            Y.add(G.inverse[blocks[i][0]])
    cert = PerfectCodeCertificate(ElementSet.of(G.order, Y), dec)
    cert.check(G, H)
    return cert


def build_zero_tau(G: Group, H: ElementSet, tau: int,
                   dec: CosetDecomposition | None = None) -> ConnectionSet | None:
    if tau % 2 == 0:
        return build_even_tau(G, H, tau, dec)
    return build_zero_tau_odd(G, H, tau, dec)


def build_witness(G: Group, H: ElementSet, kappa: int, tau: int) -> RegularSetCertificate | None:
    """Construct a (kappa, tau) witness for the normal subgroup ``H``.

    Even ``tau`` always succeeds.  Odd ``tau`` succeeds exactly when ``H`` is
    a perfect code of ``G``; otherwise ``None`` is returned.  Every
    certificate is verified by neighbour counting before it is handed out.
    """
    check_parameters(len(H), kappa, tau)
    _check_shape(G, H)
    dec = left_cosets(G, H)
    Y = build_zero_tau(G, H, tau, dec)
    if Y is None:
        return None
    X = augment_kappa(G, H, Y, kappa)
    report = regular_set_check(G, X, H)
    if not report.passed or (report.kappa, report.tau) != (kappa, tau):
        raise InternalDefect(
            f"witness for ({kappa},{tau}) failed verification: X={X.sorted()}, report={report}"
        )
    return RegularSetCertificate(X, ElementSet.of(G.order, H.members), report.kappa, report.tau)

