from hopfdeform.groups import dihedral, dihedral_h


def test_dimensions_and_labels(A16, AS3):
    assert A16.dim == 4 * 24 == 96
    assert AS3.dim == 12 * 6 == 72
    assert A16.label(A16.unit_index()) == "1#e"
    u = A16.unit_index()
    assert A16.counit(u) == A16.one()
    assert A16.product(u, u) == {u: A16.one()}


def test_grouplike_structure(A16):
    G = A16.G
    for g in range(G.order):
        i = A16.grouplike_index(g)
        assert A16.delta(i) == [(i, i, A16.one())]
        assert A16.counit(i) == A16.one()
        assert A16.antipode(i) == {A16.grouplike_index(G.inv(g)): A16.one()}


def test_degree_one_skew_primitive(A16):
    """Delta(x#e) = x#e (x) 1#e + 1#h_x (x) x#e for module generators."""
    G = A16.G
    e = G.identity
    i = A16.index((1, 0), e)
    hx = A16.V.coact[0]
    terms = sorted((a, b) for a, b, _ in A16.delta(i))
    assert terms == sorted([(i, A16.unit_index()),
                            (A16.grouplike_index(hx), i)])


def test_smash_product_relation(A16):
    """(1#h)(x#e) = (h.x)#h."""
    G = A16.G
    h = dihedral_h(G)
    e = G.identity
    for j in range(A16.V.dim):
        x = A16.index((1, j), e)
        t, ex = A16.V.act(h, j)
        want = {A16.index((1, t), h): A16.V.omega(ex)}
        assert A16.product(A16.grouplike_index(h), x) == want


def test_antipode_square_facts(A16):
    """S^2 is the identity on the group algebra and S^4 = id; on a
    degree-1 generator S^2 acts by the diagonal braiding coefficient -1."""
    e = A16.G.identity
    x = A16.index((1, 0), e)
    s2 = A16.apply_linear(A16.antipode, A16.antipode(x))
    assert s2 == {x: -A16.one()}
    for g in range(A16.G.order):
        i = A16.grouplike_index(g)
        assert A16.apply_linear(A16.antipode, A16.antipode(i)) == {i: A16.one()}


def test_grouplikes_are_exactly_the_group(AS3):
    gls = AS3.grouplikes()
    assert len(gls) == AS3.G.order
    for g, a in gls:
        assert a == {AS3.grouplike_index(g): AS3.one()}


def test_skew_primitives_degree_one(A16):
    """The (1, h_x)-skew-primitives contain the module generator line."""
    hx = A16.V.coact[0]
    basis = A16.skew_primitives(hx, A16.G.identity)
    e = A16.G.identity
    x = A16.index((1, 0), e)
    assert any(set(b) == {x} for b in basis)


def test_serialization_roundtrip_shape(A16):
    doc = A16.to_json()
    assert doc["dim"] == 96
    assert len(doc["basis_labels"]) == 96
    assert doc["group"] == A16.G.name
