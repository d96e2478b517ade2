from hopfdeform.groups import (cycle_label, dihedral, dihedral_g, dihedral_h,
                               perm_sign, sign, symmetric)


def test_dihedral_presentation():
    G = dihedral(12)
    assert G.order == 24
    g, h = dihedral_g(G), dihedral_h(G)
    assert G.mul(g, g) == G.identity
    assert G.element_order(h) == 12
    # g h g^-1 = h^-1
    assert G.conj(g, h) == G.inv(h)
    assert G.power(h, 12) == G.identity


def test_dihedral_conjugacy_of_rotations():
    G = dihedral(12)
    h = dihedral_h(G)
    cls = G.conjugacy_class(h)
    assert sorted(cls) == sorted([h, G.inv(h)])


def test_symmetric_group_basics():
    G = symmetric(4)
    assert G.order == 24
    sizes = sorted(len(c) for c in G.conjugacy_classes())
    assert sizes == [1, 3, 6, 6, 8]
    t = G.perms.index((2, 1, 3, 4))
    c4 = G.perms.index((2, 3, 4, 1))
    assert G.element_order(t) == 2 and G.element_order(c4) == 4
    assert sign(G, t) == -1 and sign(G, c4) == -1
    assert sign(G, G.mul(t, c4)) == 1


def test_cycle_labels_and_sign():
    assert cycle_label((2, 1, 3)) == "(12)"
    assert cycle_label((1, 2, 3)) == "e"
    assert cycle_label((2, 3, 4, 1)) == "(1234)"
    assert perm_sign((2, 1, 3)) == -1
    assert perm_sign((2, 3, 1)) == 1


def test_group_axioms_exhaustive_small():
    G = symmetric(3)
    for a in range(G.order):
        assert G.mul(a, G.inv(a)) == G.identity
        for b in range(G.order):
            for c in range(G.order):
                assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
