"""The builtin group catalog swept by ``enumerate`` and the acceptance tests."""

from __future__ import annotations

from typing import Iterator

from .group import Group, Subgroup, group_from_spec, list_normal_subgroups

CATALOG_SPECS: tuple[str, ...] = (
    *(f"cyclic:{m}" for m in range(2, 25)),
    *(f"dihedral:{m}" for m in range(3, 13)),
    "symmetric:3",
    "symmetric:4",
    "alternating:4",
    "quaternion",
    *(f"elementary_abelian:2:{k}" for k in range(2, 5)),
    "elementary_abelian:3:2",
    "product:cyclic:2,cyclic:4",
    "product:cyclic:2,cyclic:6",
)

_ORDERS = {
    "symmetric:3": 6, "symmetric:4": 24, "alternating:4": 12, "quaternion": 8,
    "product:cyclic:2,cyclic:4": 8, "product:cyclic:2,cyclic:6": 12,
    "elementary_abelian:3:2": 9,
}


def spec_order(spec: str) -> int:
    if spec in _ORDERS:
        return _ORDERS[spec]
    family, *params = spec.split(":")
    if family == "cyclic":
        return int(params[0])
    if family == "dihedral":
        return 2 * int(params[0])
    if family == "elementary_abelian":
        return int(params[0]) ** int(params[1])
    raise KeyError(spec)


def catalog(max_order: int = 24) -> list[tuple[str, Group]]:
    """Catalog groups of order at most ``max_order``, in catalog order."""
    return [(s, group_from_spec(s)) for s in CATALOG_SPECS if spec_order(s) <= max_order]


def catalog_instances(max_order: int = 24) -> Iterator[tuple[str, Group, Subgroup]]:
    """Every (group, proper non-trivial normal subgroup) pair in the catalog."""
    for spec, G in catalog(max_order):
        for H in list_normal_subgroups(G, proper_nontrivial_only=True):
            yield spec, G, H
