import networkx as nx
import pytest
from hypothesis import given

from setoidkan.fincat import (CatDiagram, CatOverSet, CategoryError, FinCat, Functor, comma,
                              coproduct, discrete, fibers, from_presentation, grothendieck,
                              identity_functor, ob_discrete, opposite, pi0, point, product,
                              terminal, to_terminal, zigzag_search)

from strategies import preorders


def _undirected_graph(C):
    G = nx.MultiGraph()
    G.add_nodes_from(range(C.n_objects))
    for f, (s, t, _) in enumerate(C.arrows):
        if f != C.ident[s]:
            G.add_edge(s, t)
    return G


def _brute_comma(u, v):
    """Objects and non-identity arrows of (u/v) by enumerating all triples."""
    A, B, Cc = u.dom, v.dom, u.cod
    objs = [(a, b, g) for a in range(A.n_objects) for b in range(B.n_objects)
            for g in range(Cc.n_arrows) if Cc.src(g) == u(a) and Cc.dst(g) == v(b)]
    arrows = 0
    for (a, b, g) in objs:
        for (a2, b2, g2) in objs:
            for f in range(A.n_arrows):
                for k in range(B.n_arrows):
                    if (A.src(f), A.dst(f), B.src(k), B.dst(k)) == (a, a2, b, b2) and \
                            Cc.compose(v.on_arrow(k), g) == Cc.compose(g2, u.on_arrow(f)):
                        arrows += 1
    return len(objs), arrows - len(objs)


# -- construction and validation -------------------------------------------------------

def test_corrupted_composition_names_the_triple():
    with pytest.raises(CategoryError, match="assoc|compos|identity"):
        FinCat(["0", "1"], [(0, 0, "i0"), (1, 1, "i1"), (0, 1, "f")], [0, 1],
               {(0, 0): 0, (1, 1): 1, (2, 0): 0, (1, 2): 2})


def test_presentation_rejects_missing_composite():
    with pytest.raises(CategoryError):
        from_presentation(["0", "1", "2"], [("f", "0", "1"), ("g", "1", "2")], [])


@given(preorders())
def test_preorder_categories_validate_and_double_opposite(P):
    P.validate()
    Q = opposite(opposite(P))
    assert Q.arrows == tuple((s, t, ("op", ("op", lab))) for s, t, lab in P.arrows)
    assert Q.comp == P.comp


@given(preorders(4), preorders(3))
def test_product_and_coproduct_sizes(P, Q):
    assert product(P, Q).n_arrows == P.n_arrows * Q.n_arrows
    S, i, j = coproduct(P, Q)
    assert S.n_objects == P.n_objects + Q.n_objects
    i.validate()
    j.validate()


# -- comma -------------------------------------------------------------------------------

def test_comma_identity_on_one():
    one = terminal()
    K, p, q, cell = comma(identity_functor(one), identity_functor(one))
    assert (K.n_objects, K.n_arrows) == (1, 1)


def test_comma_point_zero_over_arrow(C):
    A = C.categories["ARROW"]
    K, _, _, _ = comma(point(A, "0", terminal()), identity_functor(A))
    assert K.n_objects == 2
    assert K.n_arrows - K.n_objects == 1


def test_comma_pair_over_second_object(C):
    P = C.categories["PAIR"]
    K, _, _, _ = comma(identity_functor(P), point(P, "1", terminal()))
    assert K.n_objects == 3


@pytest.mark.parametrize("un", ["ARROW_PAIR", "PAIR_ARROW", "SQUARE_ARROW", "disc3_disc2", "ARROW_SPAN"])
def test_comma_matches_brute_force(C, un):
    u = C.functors[un]
    for b in range(u.cod.n_objects):
        v = point(u.cod, u.cod.objects[b], terminal())
        K, p, q, cell = comma(u, v)
        cell.validate()
        assert (K.n_objects, K.n_arrows - K.n_objects) == _brute_comma(u, v)
        K2, _, _, _ = comma(v, u)
        assert (K2.n_objects, K2.n_arrows - K2.n_objects) == _brute_comma(v, u)


@given(preorders(4))
def test_comma_of_identities_is_arrow_category(P):
    K, _, _, _ = comma(identity_functor(P), identity_functor(P))
    assert K.n_objects == P.n_arrows


# -- Grothendieck construction -----------------------------------------------------------

def test_grothendieck_over_one_is_fiber(C):
    E = CatDiagram(terminal(), [C.categories["SQUARE"]], [identity_functor(C.categories["SQUARE"])])
    T, p = grothendieck(E)
    assert (T.n_objects, T.n_arrows) == (4, 9)
    assert set(p.obj_map) == {0}


def test_grothendieck_arrow_constant_discrete_two(C):
    A = C.categories["ARROW"]
    D = discrete(2)
    E = CatDiagram(A, [D, D], [identity_functor(D)] * A.n_arrows)
    T, p = grothendieck(E)
    assert T.n_objects == 4
    assert T.n_arrows - T.n_objects == 2
    for f, (s, t, _) in enumerate(T.arrows):
        if f != T.ident[s]:
            assert p(s) != p(t)


def test_grothendieck_pair_constant_one_is_pair(C):
    P, one = C.categories["PAIR"], terminal()
    E = CatDiagram(P, [one, one], [identity_functor(one)] * P.n_arrows)
    T, _ = grothendieck(E)
    assert (T.n_objects, T.n_arrows) == (P.n_objects, P.n_arrows)


# -- components and zigzags --------------------------------------------------------------

@pytest.mark.parametrize("name,size", [("PAIR", 1), ("disc2", 2), ("SQUARE", 1), ("disc3", 3)])
def test_pi0_examples(C, name, size):
    n, _ = pi0(C.categories[name])
    assert len(n) == size


def test_pi0_of_disjoint_union(C):
    S, _, _ = coproduct(C.categories["ARROW"], C.categories["PAIR"])
    assert len(pi0(S)[0]) == 2


@given(preorders())
def test_pi0_matches_networkx(P):
    n, comp = pi0(P)
    G = _undirected_graph(P)
    ours = {frozenset(a for a in range(P.n_objects) if comp[a] == c) for c in range(len(n))}
    theirs = {frozenset(c) for c in nx.connected_components(G)}
    assert ours == theirs


@given(preorders())
def test_zigzag_search_is_shortest(P):
    G = _undirected_graph(P)
    for x in range(P.n_objects):
        for y in range(P.n_objects):
            z = zigzag_search(P, x, y)
            if nx.has_path(G, x, y):
                assert z is not None and z.validate(P)
                assert len(z) == nx.shortest_path_length(G, x, y)
            else:
                assert z is None


def test_zigzag_examples(C):
    P = C.categories["PAIR"]
    assert len(zigzag_search(P, 0, 0)) == 0
    z = zigzag_search(P, 0, 1)
    f = P.arrow("f")
    assert z.steps == ((f, 1),)
    S, _, _ = coproduct(C.categories["ARROW"], C.categories["PAIR"])
    assert zigzag_search(S, 0, 3) is None


def test_ob_discrete(C):
    for name, n in [("ARROW", 2), ("PAIR", 2)]:
        D, incl = ob_discrete(C.categories[name])
        assert D.is_discrete and D.n_objects == n
        incl.validate()
    D, _ = ob_discrete(terminal())
    assert D.n_objects == 1


def test_fibers_examples(C):
    A, P = C.categories["ARROW"], C.categories["PAIR"]
    S, _, _ = coproduct(A, P)
    fs = fibers(CatOverSet(S, 2, [o[0] for o in S.objects]))
    assert [(F.n_objects, F.n_arrows) for F in fs] == [(2, 3), (2, 4)]
    D3 = discrete(3)
    fs = fibers(CatOverSet(D3, 2, [0, 1, 1]))
    assert [F.n_objects for F in fs] == [1, 2]
    fs = fibers(CatOverSet(P, 1, [0, 0]))
    assert (fs[0].n_objects, fs[0].n_arrows) == (P.n_objects, P.n_arrows)


def test_crossing_arrow_rejected(C):
    with pytest.raises(CategoryError):
        CatOverSet(C.categories["ARROW"], 2, [0, 1])


def test_functor_validation_and_composition(C):
    u = C.functors["PAIR_ARROW"]
    w = u.then(to_terminal(u.cod, terminal()))
    assert w == to_terminal(u.dom, terminal())
    with pytest.raises(CategoryError):
        Functor(C.categories["ARROW"], C.categories["disc2"], [0, 1], [0, 1, 0])
