import itertools

import pytest

from conftest import isomorphic, naive_normal_subgroups
from regularsets import (
    builtin_group,
    element_order,
    is_involution,
    is_normal,
    list_normal_subgroups,
    list_subgroups,
    make_group_from_table,
    subgroup_from,
)
from regularsets.catalog import catalog
from regularsets.errors import (
    IndexOutOfRange,
    MissingIdentity,
    MissingInverse,
    NoIdentity,
    NotAssociative,
    NotClosed,
    NotLatinSquare,
    OrderBoundExceeded,
    ParamOutOfRange,
    UnknownFamily,
)
from regularsets.group import (
    format_group_table,
    group_from_spec,
    involutions,
    parse_group_table,
    parse_index_list,
)

SMALL = [G for _, G in catalog(12)]


def assert_group_invariants(G, associativity=True):
    n, e = G.order, G.identity
    full = set(range(n))
    for a in range(n):
        assert G.table[e][a] == a == G.table[a][e]
        assert G.table[a][G.inverse[a]] == e == G.table[G.inverse[a]][a]
        assert G.inverse[G.inverse[a]] == a
        assert set(G.table[a]) == full
        assert {G.table[b][a] for b in range(n)} == full
    if associativity:
        for a, b, c in itertools.product(range(n), repeat=3):
            assert G.table[G.table[a][b]][c] == G.table[a][G.table[b][c]]


def test_trivial_group():
    G = make_group_from_table([[0]])
    assert (G.order, G.identity) == (1, 0)


def test_cyclic_table():
    G = make_group_from_table([[(i + j) % 4 for j in range(4)] for i in range(4)])
    assert G.identity == 0 and G.inverse[1] == 3


def test_identity_detected_off_zero():
    # Z3 relabelled so that the identity is element 2
    relabel = [2, 0, 1]
    table = [[0] * 3 for _ in range(3)]
    for a in range(3):
        for b in range(3):
            table[relabel[a]][relabel[b]] = relabel[(a + b) % 3]
    G = make_group_from_table(table)
    assert G.identity == 2
    assert_group_invariants(G)


@pytest.mark.parametrize("table, exc", [
    ([[0, 1], [1, 1]], NotLatinSquare),
    ([[0, 1], [1]], NotLatinSquare),
    ([[0, 5], [1, 0]], IndexOutOfRange),
    ([[0, 2, 1], [2, 1, 0], [1, 0, 2]], NoIdentity),  # x*y = -x-y mod 3
])
def test_bad_tables(table, exc):
    with pytest.raises(exc):
        make_group_from_table(table)


def test_missing_inverse():
    # Latin square with identity 0 where 1*2 = 0 but 2*1 != 0
    table = [
        [0, 1, 2, 3, 4],
        [1, 3, 0, 4, 2],
        [2, 4, 3, 0, 1],
        [3, 2, 4, 1, 0],
        [4, 0, 1, 2, 3],
    ]
    with pytest.raises((MissingInverse, NotAssociative)):
        make_group_from_table(table, check_associativity=True)
    with pytest.raises(MissingInverse):
        make_group_from_table(table)


def test_non_associative_loop():
    # a Latin square with identity and two-sided inverses that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    G = make_group_from_table(table)
    assert G.identity == 0
    with pytest.raises(NotAssociative) as info:
        make_group_from_table(table, check_associativity=True)
    a, b, c = info.value.triple
    assert table[table[a][b]][c] != table[a][table[b][c]]


@pytest.mark.parametrize("G", SMALL, ids=lambda G: G.name)
def test_builtin_invariants(G):
    assert_group_invariants(G)


@pytest.mark.parametrize("G", [G for _, G in catalog(24)], ids=lambda G: G.name)
def test_element_orders_divide_group_order(G):
    for g in G.elements():
        assert G.order % element_order(G, g) == 0


def test_cyclic_multiplication():
    G = builtin_group("cyclic", 6)
    assert all(G.mul(i, j) == (i + j) % 6 for i in range(6) for j in range(6))


def test_dihedral3_is_symmetric3():
    assert isomorphic(builtin_group("dihedral", 3), builtin_group("symmetric", 3))


def test_dihedral4_not_quaternion():
    assert not isomorphic(builtin_group("dihedral", 4), builtin_group("quaternion"))


@pytest.mark.parametrize("family, params, count", [
    ("cyclic", (2,), 1),
    ("cyclic", (8,), 1),
    ("cyclic", (12,), 1),
    ("cyclic", (7,), 0),
    ("elementary_abelian", (2, 1), 1),
    ("elementary_abelian", (2, 3), 7),
    ("elementary_abelian", (2, 4), 15),
    ("quaternion", (), 1),
    ("dihedral", (5,), 5),
    ("dihedral", (6,), 7),
    ("symmetric", (4,), 9),
    ("alternating", (4,), 3),
])
def test_involution_counts(family, params, count):
    assert len(involutions(builtin_group(family, *params))) == count


def test_quaternion_involution_has_order_two():
    Q = builtin_group("quaternion")
    (z,) = involutions(Q)
    assert element_order(Q, z) == 2
    assert Q.label(z) == "-1"


def test_symmetric_ordering_is_lexicographic():
    S = builtin_group("symmetric", 3)
    assert S.labels == ("()", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)")


def test_direct_product_ordering():
    P = builtin_group("direct_product", ("cyclic", 2), ("cyclic", 3))
    assert P.order == 6
    # (a, b) sits at index a*3 + b
    assert P.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1
    assert isomorphic(P, builtin_group("cyclic", 6))


def test_nested_direct_product():
    P = builtin_group("direct_product", ("cyclic", 2), ("cyclic", 2), ("cyclic", 2))
    assert isomorphic(P, builtin_group("elementary_abelian", 2, 3))


@pytest.mark.parametrize("family, params, exc", [
    ("symmetric", (6,), ParamOutOfRange),
    ("alternating", (7,), ParamOutOfRange),
    ("cyclic", (0,), ParamOutOfRange),
    ("elementary_abelian", (4, 2), ParamOutOfRange),
    ("cyclic", (), ParamOutOfRange),
    ("mathieu", (11,), UnknownFamily),
])
def test_builtin_errors(family, params, exc):
    with pytest.raises(exc):
        builtin_group(family, *params)


def test_group_from_spec():
    assert group_from_spec("sym:3").name == "S3"
    assert group_from_spec("product:cyclic:2,cyclic:4").order == 8
    assert group_from_spec("elementary_abelian:2:3").order == 8
    assert group_from_spec("quaternion").order == 8


def test_table_text_round_trip(tmp_path):
    G = builtin_group("dihedral", 4)
    path = tmp_path / "d8.txt"
    path.write_text("# dihedral of order 8\n" + format_group_table(G))
    H = group_from_spec(f"@{path}")
    assert H.table == G.table


def test_parse_index_list_comments():
    assert parse_index_list("0, 3 4  # alternating\n") == [0, 3, 4]


def test_table_header_mismatch():
    with pytest.raises(NotLatinSquare):
        parse_group_table("3\n0 1\n1 0\n")


def test_element_order_examples():
    C6 = builtin_group("cyclic", 6)
    assert element_order(C6, 2) == 3
    assert element_order(C6, 0) == 1
    with pytest.raises(IndexOutOfRange):
        element_order(C6, 6)


def test_is_involution_examples():
    C4 = builtin_group("cyclic", 4)
    assert is_involution(C4, 2)
    assert not is_involution(C4, 1)
    assert not is_involution(C4, 0)


def test_subgroup_from_examples():
    C6 = builtin_group("cyclic", 6)
    assert len(subgroup_from(C6, [0, 3])) == 2
    assert subgroup_from(C6, [0, 2, 4]).mask == 0b010101
    with pytest.raises(NotClosed) as info:
        subgroup_from(C6, [0, 1])
    assert info.value.pair == (1, 1)
    with pytest.raises(MissingIdentity):
        subgroup_from(C6, [3])


def test_is_normal_examples():
    S3 = builtin_group("symmetric", 3)
    assert is_normal(S3, subgroup_from(S3, [0, 3, 4]))
    assert not is_normal(S3, subgroup_from(S3, [0, 1]))
    C6 = builtin_group("cyclic", 6)
    assert all(is_normal(C6, H) for H in list_subgroups(C6))


def test_list_normal_subgroups_examples():
    C6 = builtin_group("cyclic", 6)
    assert [H.sorted() for H in list_normal_subgroups(C6)] == [[0], [0, 3], [0, 2, 4], list(range(6))]
    assert [H.sorted() for H in list_normal_subgroups(C6, proper_nontrivial_only=True)] == [[0, 3], [0, 2, 4]]
    S3 = builtin_group("symmetric", 3)
    assert [H.sorted() for H in list_normal_subgroups(S3, proper_nontrivial_only=True)] == [[0, 3, 4]]
    assert list_normal_subgroups(builtin_group("cyclic", 5), proper_nontrivial_only=True) == []


def test_order_bound():
    with pytest.raises(OrderBoundExceeded):
        list_normal_subgroups(builtin_group("symmetric", 4), order_bound=12)


@pytest.mark.parametrize("G", SMALL, ids=lambda G: G.name)
def test_normal_subgroups_match_full_subset_scan(G):
    found = [H.members for H in list_normal_subgroups(G)]
    assert all(is_normal(G, H) for H in list_normal_subgroups(G))
    assert sorted(found, key=sorted) == sorted(naive_normal_subgroups(G), key=sorted)


@pytest.mark.parametrize("G", SMALL, ids=lambda G: G.name)
def test_subgroup_lattice_covers_normal_ones(G):
    normal = {H.members for H in list_normal_subgroups(G)}
    every = [H.members for H in list_subgroups(G)]
    assert len(every) == len(set(every))
    assert normal == {H for H in every if is_normal(G, subgroup_from(G, H))}


def test_subgroup_counts_of_known_groups():
    # S4 has 30 subgroups and 4 normal ones; Q8 has 6 subgroups, all normal
    S4 = builtin_group("symmetric", 4)
    assert len(list_subgroups(S4)) == 30
    assert len(list_normal_subgroups(S4)) == 4
    Q8 = builtin_group("quaternion")
    assert len(list_subgroups(Q8)) == len(list_normal_subgroups(Q8)) == 6
