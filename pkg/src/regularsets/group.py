"""Finite groups as multiplication tables, with 0-based element indices.

Every group handled by the package is a :class:`Group`: an ``n x n`` table of
element indices together with the identity and the inverse map.  Builtin
families use a fixed, documented element ordering so that indices given on
the command line mean the same thing on every run:

* ``cyclic(m)``: residues ``0..m-1``.
* ``dihedral(m)`` (order ``2m``): rotations ``r^0..r^(m-1)`` then reflections
  ``s r^0..s r^(m-1)``.
* ``symmetric(m)`` / ``alternating(m)``: permutations of ``0..m-1`` in
  lexicographic one-line order (alternating keeps the even ones).  The
  product ``p*q`` applies ``q`` first.
* ``quaternion``: ``1, -1, i, -i, j, -j, k, -k``.
* ``elementary_abelian(p, k)``: vectors of ``Z_p^k`` in lexicographic order.
* ``direct_product``: lexicographic on component indices.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import (
    IndexOutOfRange,
    MissingIdentity,
    MissingInverse,
    NoIdentity,
    NotAssociative,
    NotClosed,
    NotLatinSquare,
    NotNormal,
    OrderBoundExceeded,
    ParamOutOfRange,
    RegularSetsError,
    UnknownFamily,
)

DEFAULT_SUBGROUP_ORDER_BOUND = 64


@dataclass(frozen=True)
class Group:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    name: str = "G"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"Group({self.name}, order={self.order})"


@dataclass(frozen=True)
class ElementSet:
    """A subset of a group, stored as a frozenset and an ``n``-bit mask."""

    order: int
    members: frozenset[int]
    mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        mask = 0
        for x in self.members:
            if not 0 <= x < self.order:
                raise IndexOutOfRange(f"element {x} outside 0..{self.order - 1}")
            mask |= 1 << x
        object.__setattr__(self, "mask", mask)

    @classmethod
    def of(cls, order: int, members: Iterable[int]):
        return cls(order, frozenset(int(x) for x in members))

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.sorted()})"


class Subgroup(ElementSet):
    """An :class:`ElementSet` known to be closed under product and inverse.

    Build these with :func:`subgroup_from`; the constructor itself does not
    check closure.
    """


def make_group_from_table(
    table: Sequence[Sequence[int]],
    *,
    check_associativity: bool = False,
    labels: Sequence[str] | None = None,
    name: str = "G",
) -> Group:
    """Validate a Cayley table and wrap it in a :class:`Group`.

    The identity is detected rather than assumed to be index 0.  Raises
    NotLatinSquare, NoIdentity, MissingInverse, or NotAssociative (the last
    only when ``check_associativity`` is set, since the scan is cubic).
    """
    n = len(table)
    if n < 1:
        raise NotLatinSquare("table must have at least one row")
    rows = tuple(tuple(int(v) for v in row) for row in table)
    full = set(range(n))
    for a, row in enumerate(rows):
        if len(row) != n:
            raise NotLatinSquare(f"row {a} has {len(row)} entries, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise IndexOutOfRange(f"entry {v} in row {a} outside 0..{n - 1}")
        if set(row) != full:
            raise NotLatinSquare(f"row {a} repeats an element")
    for b in range(n):
        if {rows[a][b] for a in range(n)} != full:
            raise NotLatinSquare(f"column {b} repeats an element")

    identity = None
    for e in range(n):
        if all(rows[e][a] == a == rows[a][e] for a in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity in table")

    inverse = []
    for a in range(n):
        b = rows[a].index(identity)
        if rows[b][a] != identity:
            raise MissingInverse(f"element {a} has no two-sided inverse")
        inverse.append(b)

    if check_associativity:
        for a, b, c in itertools.product(range(n), repeat=3):
            if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                raise NotAssociative((a, b, c))

    if labels is not None and len(labels) != n:
        raise RegularSetsError(f"{len(labels)} labels for {n} elements")
    return Group(
        order=n,
        table=rows,
        identity=identity,
        inverse=tuple(inverse),
        labels=tuple(labels) if labels is not None else None,
        name=name,
    )


# -- builtin families ---------------------------------------------------------

def _from_elements(elements: Sequence, mul, labels: Sequence[str], name: str) -> Group:
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return make_group_from_table(table, labels=labels, name=name)


def cyclic(m: int) -> Group:
    if m < 1:
        raise ParamOutOfRange(f"cyclic({m}): order must be positive")
    return _from_elements(
        range(m), lambda a, b: (a + b) % m, [str(i) for i in range(m)], f"C{m}"
    )


def dihedral(m: int) -> Group:
    """Dihedral group of order ``2m``; ``(f, k)`` stands for ``s^f r^k``."""
    if m < 1:
        raise ParamOutOfRange(f"dihedral({m}): m must be positive")

    def mul(a, b):
        fa, ka = a
        fb, kb = b
        # r^k s = s r^-k
        return ((fa + fb) % 2, ((-ka if fb else ka) + kb) % m)

    elements = [(0, k) for k in range(m)] + [(1, k) for k in range(m)]
    labels = ["e" if k == 0 else ("r" if k == 1 else f"r^{k}") for k in range(m)]
    labels += ["s" if k == 0 else ("sr" if k == 1 else f"sr^{k}") for k in range(m)]
    return _from_elements(elements, mul, labels, f"D{2 * m}")


def _cycle_label(p: tuple[int, ...]) -> str:
    seen = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle = []
        j = start
        while j not in seen:
            seen.add(j)
            cycle.append(j + 1)
            j = p[j]
        cycles.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(cycles) or "()"


def _is_even(p: tuple[int, ...]) -> bool:
    inversions = sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])
    return inversions % 2 == 0


def _permutation_group(m: int, even_only: bool, name: str) -> Group:
    perms = [p for p in itertools.permutations(range(m)) if not even_only or _is_even(p)]
    return _from_elements(
        perms,
        lambda p, q: tuple(p[q[i]] for i in range(m)),
        [_cycle_label(p) for p in perms],
        name,
    )


def symmetric(m: int) -> Group:
    if not 1 <= m <= 5:
        raise ParamOutOfRange(f"symmetric({m}): supported for 1 <= m <= 5")
    return _permutation_group(m, False, f"S{m}")


def alternating(m: int) -> Group:
    if not 1 <= m <= 5:
        raise ParamOutOfRange(f"alternating({m}): supported for 1 <= m <= 5")
    return _permutation_group(m, True, f"A{m}")


_QUAT_UNITS = {  # (unit, unit) -> (sign, unit); units 0=1, 1=i, 2=j, 3=k
    (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
    (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
    (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
    (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
}


def quaternion() -> Group:
    def mul(a, b):
        sign, unit = _QUAT_UNITS[a[1], b[1]]
        return ((a[0] + b[0] + sign) % 2, unit)

    elements = [(s, u) for u in range(4) for s in range(2)]
    labels = [("-" if s else "") + "1ijk"[u] for s, u in elements]
    return _from_elements(elements, mul, labels, "Q8")


def elementary_abelian(p: int, k: int) -> Group:
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ParamOutOfRange(f"elementary_abelian({p}, {k}): p must be prime")
    if k < 1 or p ** k > 4096:
        raise ParamOutOfRange(f"elementary_abelian({p}, {k}): need k >= 1 and p^k <= 4096")
    elements = list(itertools.product(range(p), repeat=k))
    return _from_elements(
        elements,
        lambda a, b: tuple((x + y) % p for x, y in zip(a, b)),
        ["(" + ",".join(map(str, v)) + ")" for v in elements],
        f"E{p}^{k}",
    )


def direct_product(*groups: Group) -> Group:
    if len(groups) < 2:
        raise ParamOutOfRange("direct_product needs at least two factors")
    head, *rest = groups
    if len(rest) > 1:
        rest = [direct_product(*rest)]
    other = rest[0]
    n2 = other.order
    n = head.order * n2
    table = [
        [
            head.table[a // n2][b // n2] * n2 + other.table[a % n2][b % n2]
            for b in range(n)
        ]
        for a in range(n)
    ]
    labels = [f"({head.label(a // n2)},{other.label(a % n2)})" for a in range(n)]
    return make_group_from_table(table, labels=labels, name=f"{head.name}x{other.name}")


_FAMILIES = {
    "cyclic": (cyclic, 1),
    "dihedral": (dihedral, 1),
    "symmetric": (symmetric, 1),
    "alternating": (alternating, 1),
    "quaternion": (quaternion, 0),
    "elementary_abelian": (elementary_abelian, 2),
}

_ALIASES = {
    "c": "cyclic", "cyc": "cyclic",
    "d": "dihedral", "dih": "dihedral",
    "s": "symmetric", "sym": "symmetric",
    "a": "alternating", "alt": "alternating",
    "q": "quaternion", "quat": "quaternion", "q8": "quaternion",
    "ea": "elementary_abelian", "elem": "elementary_abelian",
    "product": "direct_product", "prod": "direct_product",
}


def builtin_group(family: str, *params) -> Group:
    """Build a group from a named family.

    ``direct_product`` takes :class:`Group` instances or ``(family, params)``
    tuples as its parameters, so products nest to any depth.
    """
    fam = _ALIASES.get(family.lower(), family.lower())
    if fam == "direct_product":
        factors = []
        for p in params:
            if isinstance(p, Group):
                factors.append(p)
            else:
                sub_family, *sub_params = p
                factors.append(builtin_group(sub_family, *sub_params))
        return direct_product(*factors)
    if fam not in _FAMILIES:
        raise UnknownFamily(f"unknown group family {family!r}")
    ctor, arity = _FAMILIES[fam]
    if len(params) != arity:
        raise ParamOutOfRange(f"{fam} takes {arity} integer parameter(s), got {len(params)}")
    return ctor(*(int(p) for p in params))


def group_from_spec(spec: str) -> Group:
    """Parse ``family:params`` (``cyclic:6``, ``elementary_abelian:2:3``,
    ``product:cyclic:2,cyclic:4``) or ``@path`` to a table file."""
    spec = spec.strip()
    if spec.startswith("@"):
        return read_group_file(spec[1:])
    family, _, rest = spec.partition(":")
    fam = _ALIASES.get(family.lower(), family.lower())
    if fam == "direct_product":
        parts = [p for p in rest.split(",") if p.strip()]
        group = direct_product(*(group_from_spec(p) for p in parts))
    else:
        try:
            params = [int(p) for p in rest.split(":")] if rest else []
        except ValueError:
            raise ParamOutOfRange(f"non-integer parameter in {spec!r}") from None
        group = builtin_group(family, *params)
    return group


# -- text formats -------------------------------------------------------------

def _strip_comments(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_group_table(text: str, *, check_associativity: bool = True, name: str = "G") -> Group:
    lines = _strip_comments(text)
    if not lines:
        raise RegularSetsError("empty group table")
    try:
        n = int(lines[0])
        rows = [[int(v) for v in line.split()] for line in lines[1:]]
    except ValueError as exc:
        raise RegularSetsError(f"malformed group table: {exc}") from None
    if len(rows) != n:
        raise NotLatinSquare(f"header says {n} rows, found {len(rows)}")
    return make_group_from_table(rows, check_associativity=check_associativity, name=name)


def read_group_file(path: str | Path, *, check_associativity: bool = True) -> Group:
    path = Path(path)
    return parse_group_table(
        path.read_text(encoding="ascii"),
        check_associativity=check_associativity,
        name=path.stem,
    )


def format_group_table(G: Group) -> str:
    width = len(str(G.order - 1))
    lines = [str(G.order)]
    lines += [" ".join(str(v).rjust(width) for v in row) for row in G.table]
    return "\n".join(lines) + "\n"


def parse_index_list(text: str) -> list[int]:
    """Indices separated by commas and/or whitespace; ``#`` starts a comment."""
    body = " ".join(_strip_comments(text))
    try:
        return [int(tok) for tok in re.split(r"[,\s]+", body) if tok]
    except ValueError as exc:
        raise RegularSetsError(f"malformed index list: {exc}") from None


def read_index_file(path: str | Path) -> list[int]:
    return parse_index_list(Path(path).read_text(encoding="ascii"))


# -- element and subgroup queries ---------------------------------------------

def _check_index(G: Group, g: int) -> None:
    if not 0 <= g < G.order:
        raise IndexOutOfRange(f"element {g} outside 0..{G.order - 1}")


def element_order(G: Group, g: int) -> int:
    _check_index(G, g)
    k, x = 1, g
    while x != G.identity:
        x = G.table[x][g]
        k += 1
    return k


def is_involution(G: Group, g: int) -> bool:
    _check_index(G, g)
    return g != G.identity and G.table[g][g] == G.identity


def involutions(G: Group, within: Iterable[int] | None = None) -> list[int]:
    pool = G.elements() if within is None else within
    return sorted(x for x in pool if x != G.identity and G.table[x][x] == G.identity)


def subgroup_from(G: Group, members: Iterable[int]) -> Subgroup:
    """Check closure and return the members as a :class:`Subgroup`."""
    members = frozenset(int(x) for x in members)
    for x in members:
        _check_index(G, x)
    if G.identity not in members:
        raise MissingIdentity(f"identity {G.identity} not in subset")
    for a in sorted(members):
        if G.inverse[a] not in members:
            raise NotClosed((a, a), f"inverse of {a} is {G.inverse[a]}, not in subset")
        for b in sorted(members):
            if G.table[a][b] not in members:
                raise NotClosed((a, b), f"{a}*{b} = {G.table[a][b]} not in subset")
    if G.order % len(members):
        raise AssertionError("subgroup order does not divide group order")
    return Subgroup(G.order, members)


def normality_violation(G: Group, H: ElementSet) -> tuple[int, int, int] | None:
    """First ``(g, h, g h g^-1)`` with the conjugate outside ``H``, if any."""
    for g in G.elements():
        row, ginv = G.table[g], G.inverse[g]
        for h in sorted(H.members):
            c = G.table[row[h]][ginv]
            if c not in H.members:
                return g, h, c
    return None


def is_normal(G: Group, H: ElementSet) -> bool:
    return normality_violation(G, H) is None


def require_normal(G: Group, H: ElementSet) -> None:
    bad = normality_violation(G, H)
    if bad is not None:
        raise NotNormal(*bad)


def closure(G: Group, generators: Iterable[int]) -> frozenset[int]:
    """Subgroup generated by ``generators`` (breadth-first right multiplication)."""
    gens = sorted(set(generators))
    seen = {G.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        row = G.table[x]
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def _as_mask(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


def _lattice_closure(G: Group, atoms: list[frozenset[int]]) -> list[frozenset[int]]:
    """All joins of ``atoms`` (including the empty join), found breadth-first.

    Each join is reached by adding one atom at a time to a smaller one, so a
    subgroup generated by ``k`` atoms appears at depth ``k``; masks dedupe.
    """
    trivial = frozenset({G.identity})
    found = {_as_mask(trivial): trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for S in frontier:
            for A in atoms:
                if A <= S:
                    continue
                T = closure(G, S | A)
                m = _as_mask(T)
                if m not in found:
                    found[m] = T
                    nxt.append(T)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (len(s), sorted(s)))


def list_subgroups(G: Group, *, order_bound: int = DEFAULT_SUBGROUP_ORDER_BOUND) -> list[Subgroup]:
    if G.order > order_bound:
        raise OrderBoundExceeded(f"|G| = {G.order} exceeds bound {order_bound}")
    cyclics = {_as_mask(c): c for c in (closure(G, [g]) for g in G.elements())}
    return [Subgroup(G.order, s) for s in _lattice_closure(G, list(cyclics.values()))]


def conjugacy_class(G: Group, g: int) -> frozenset[int]:
    return frozenset(G.table[G.table[x][g]][G.inverse[x]] for x in G.elements())


def list_normal_subgroups(
    G: Group,
    *,
    proper_nontrivial_only: bool = False,
    order_bound: int = DEFAULT_SUBGROUP_ORDER_BOUND,
) -> list[Subgroup]:
    """Every normal subgroup, ordered by size then members.

    Joins of normal closures of single elements cover all normal subgroups
    and are automatically normal.
    """
    if G.order > order_bound:
        raise OrderBoundExceeded(f"|G| = {G.order} exceeds bound {order_bound}")
    atoms = {}
    for g in G.elements():
        c = closure(G, conjugacy_class(G, g))
        atoms.setdefault(_as_mask(c), c)
    result = [Subgroup(G.order, s) for s in _lattice_closure(G, list(atoms.values()))]
    if proper_nontrivial_only:
        result = [H for H in result if 1 < len(H) < G.order]
    return result
