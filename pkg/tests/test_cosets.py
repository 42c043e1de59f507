import pytest

from regularsets import builtin_group, involution_profile, left_cosets, subgroup_from
from regularsets.catalog import catalog_instances
from regularsets.errors import NotNormal, TrivialOrFull

INSTANCES = list(catalog_instances(24))


def test_c6_order_two(c6):
    dec = left_cosets(c6, subgroup_from(c6, [0, 3]))
    assert dec.s == 2
    assert dec.transversal == (0, 1, 2)
    assert dec.cosets[1:] == ((1, 4), (2, 5))
    assert dec.sigma[1:] == (2, 1)
    assert (dec.t, dec.ell) == (0, 1)
    assert dec.involution_count[1:] == (0, 0)


def test_c4_order_two(c4):
    G, H = c4
    dec = left_cosets(G, H)
    assert dec.s == 1 and dec.cosets[1] == (1, 3)
    assert dec.sigma[1] == 1
    assert (dec.t, dec.ell) == (1, 0)
    assert dec.involution_count[1] == 0


def test_klein_four():
    V = builtin_group("elementary_abelian", 2, 2)
    dec = left_cosets(V, subgroup_from(V, [0, 1]))
    assert (dec.s, dec.t) == (1, 1)
    assert dec.involution_count[1] == 2


def test_profiles(s3):
    G, H = s3
    assert involution_profile(G, left_cosets(G, H))[1:] == (3,)
    Q = builtin_group("quaternion")
    center = subgroup_from(Q, [0, 1])
    assert involution_profile(Q, left_cosets(Q, center))[1:] == (0, 0, 0)


def test_canonical_order_puts_self_inverse_first():
    # Z12 mod {0,6}: cosets {0,6},{1,7},{2,8},{3,9},{4,10},{5,11}; 3 is self-inverse
    G = builtin_group("cyclic", 12)
    dec = left_cosets(G, subgroup_from(G, [0, 6]))
    assert dec.discovery_transversal == (0, 1, 2, 3, 4, 5)
    assert dec.transversal == (0, 3, 1, 2, 5, 4)
    assert (dec.t, dec.ell) == (1, 2)
    assert dec.sigma == (0, 1, 4, 5, 2, 3)


def test_rejections(s3):
    G, _ = s3
    with pytest.raises(NotNormal):
        left_cosets(G, subgroup_from(G, [0, 1]))
    with pytest.raises(TrivialOrFull):
        left_cosets(G, subgroup_from(G, [0]))
    with pytest.raises(TrivialOrFull):
        left_cosets(G, subgroup_from(G, range(6)))


@pytest.mark.parametrize("spec, G, H", INSTANCES,
                         ids=[f"{s}/{H.sorted()}" for s, _, H in INSTANCES])
def test_structural_invariants(spec, G, H):
    dec = left_cosets(G, H)
    h = len(H)
    # partition, with H at position 0 represented by the identity
    assert sum(len(c) for c in dec.cosets) == G.order
    assert all(len(c) == h for c in dec.cosets)
    assert set(dec.cosets[0]) == H.members and dec.transversal[0] == G.identity
    for pos, coset in enumerate(dec.cosets):
        a = dec.transversal[pos]
        assert a in coset
        assert sorted(G.mul(a, x) for x in H) == list(coset)
        assert sorted(G.mul(x, a) for x in H) == list(coset)  # left = right
        for x in coset:
            assert dec.coset_of[x] == pos
    # sigma is the set-inverse map, an involution, in canonical form
    for i in range(1, dec.s + 1):
        inverted = sorted(G.inverse[x] for x in dec.cosets[i])
        assert inverted == list(dec.cosets[dec.sigma[i]])
        assert dec.sigma[dec.sigma[i]] == i
        if i <= dec.t:
            assert dec.sigma[i] == i
            assert (h - dec.involution_count[i]) % 2 == 0
        elif i <= dec.t + dec.ell:
            assert dec.sigma[i] == i + dec.ell
        else:
            assert dec.sigma[i] == i - dec.ell
        if i > dec.t:
            assert dec.involution_count[i] == 0
    assert dec.s - dec.t == 2 * dec.ell
    assert involution_profile(G, dec) == dec.involution_count
    # representatives are coset minima, pairs ordered by the smaller one
    assert all(dec.transversal[i] == min(dec.cosets[i]) for i in range(1, dec.s + 1))
    for j in range(1, dec.ell + 1):
        assert dec.transversal[dec.t + j] < dec.transversal[dec.t + j + dec.ell]
