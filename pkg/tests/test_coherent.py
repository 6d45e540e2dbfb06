import pytest

from setoidkan.coherent import (DiagMor, DiagramError, compose_all, compose_diag, constant,
                                diagram_from_tables, embed_setdiagram, equal_diag, identity_diag,
                                induced_diag_mor, is_iso_diag, point_diagram, product_diag,
                                pullback_eex, quotient_functor, restrict, tabulate_diag, whisker)
from setoidkan.fincat import NatTrans, identity_functor, point, terminal
from setoidkan.setoid import discrete_setoid, identity_mor, mor_from_tables


def _arrow(A):
    """The first non-identity arrow."""
    return next(k for k in range(A.n_arrows) if A.src(k) != A.dst(k))


def _collapse(X, T):
    """The pointwise map X -> constant T."""
    return induced_diag_mor(X, T, [lambda x: T.objs[a].X0[0] for a in range(X.shape.n_objects)])


def test_swap_over_pair_is_valid(C):
    P = C.categories["PAIR"]
    swap = {0: 1, 1: 0}
    maps = [swap if P.src(f) != P.dst(f) else {0: 0, 1: 1} for f in range(P.n_arrows)]
    X = embed_setdiagram(P, [[0, 1], [0, 1]], maps)
    X.validate()


def test_embed_rejects_non_functorial_data(C):
    A = C.categories["ARROW"]
    maps = [{0: 0, 1: 1} for _ in range(A.n_arrows)]
    maps[_arrow(A)] = {0: 5, 1: 5}
    with pytest.raises(DiagramError):
        embed_setdiagram(A, [[0, 1], [0, 1]], maps)


def test_constant_along_pair_to_one(C):
    P, X = C.categories["PAIR"], C.setoids["REL3"]
    D = constant(X, P)
    D.validate()
    for f in range(P.n_arrows):
        assert all(D.map0(f, x) == x for x in X.X0)


def test_whisker_single_arrow(C):
    A = C.categories["ARROW"]
    beta = _arrow(A)
    one = terminal()
    u, v = point(A, A.objects[0], one), point(A, A.objects[1], one)
    X = C.diagrams["WIDEN"]
    w = whisker(NatTrans(u, v, [beta]), X)
    w.validate()
    assert all(w.c0[0](x) == X.map0(beta, x) for x in X.objs[0].X0)


def test_whisker_of_identity_is_identity(C):
    X = C.diagrams["CHAIN3_SQUARE"]
    A = X.shape
    ident = identity_functor(A)
    w = whisker(NatTrans(ident, ident, [A.ident[a] for a in range(A.n_objects)]), X)
    w.validate()
    assert equal_diag(w, identity_diag(X)) is not None


def test_composition_is_associative_up_to_witness(C):
    X, T = C.diagrams["CHAIN3_ARROW"], C.diagrams["TERM_ARROW"]
    f = _collapse(X, T)
    i = identity_diag(X)
    j = identity_diag(T)
    left = compose_diag(compose_diag(i, f), j)
    right = compose_diag(i, compose_diag(f, j))
    left.validate()
    right.validate()
    assert equal_diag(left, right) is not None
    compose_all(i, i, f).validate()


def test_equality_ignores_level_one(C):
    X = C.diagrams["REL3_ONE"]
    f = identity_diag(X)
    R = X.objs[0]
    alt = DiagMor(X, X, f.c0, [lambda w: R.related(R.s(w), R.t(w))], f.nat)
    assert equal_diag(f, alt) is not None


def test_maps_into_different_classes_differ(C):
    T, R = C.diagrams["TERM_ONE"], C.diagrams["REL3_ONE"]
    f = induced_diag_mor(T, R, [lambda x: "0"])
    g = induced_diag_mor(T, R, [lambda x: "1"])
    h = induced_diag_mor(T, R, [lambda x: "2"])
    assert equal_diag(f, g) is not None
    assert equal_diag(f, h) is None


def test_pointwise_collapse_is_iso_with_inverse(C):
    X, T = C.diagrams["CHAIN3_ARROW"], C.diagrams["TERM_ARROW"]
    f = _collapse(X, T)
    vd = is_iso_diag(f)
    assert vd
    g = vd.payload["inverse"]
    g.validate()
    assert equal_diag(compose_diag(f, g), identity_diag(X)) is not None
    assert equal_diag(compose_diag(g, f), identity_diag(T)) is not None
    assert not is_iso_diag(_collapse(C.diagrams["REL3_ARROW"], T))


def test_pullback_of_points(C):
    R, T = C.setoids["REL3"], C.setoids["TERM"]
    a = mor_from_tables(T, R, {"*": "0"})
    b = mor_from_tables(T, R, {"*": "1"})
    c = mor_from_tables(T, R, {"*": "2"})
    P, px, py, factor = pullback_eex(a, b)
    assert len(P.X0) == 1 and P.X0[0][2] == ("0", "1")
    px.validate()
    assert len(pullback_eex(a, c)[0].X0) == 0
    k = factor(identity_mor(T), identity_mor(T), lambda w: ("0", "1"))
    k.validate()


def test_product_diag_quotient(C):
    X = C.diagrams["REL3_ONE"]
    XY, p, q = product_diag(X, X)
    assert XY.objs[0].n_classes() == 4
    p.validate()
    q.validate()


def test_product_of_embedded_sets(C):
    P = C.categories["PAIR"]
    idm = {0: 0, 1: 1}
    swap = {0: 1, 1: 0}
    nonid = [f for f in range(P.n_arrows) if P.src(f) != P.dst(f)]
    X = embed_setdiagram(P, [[0, 1], [0, 1]], [swap if f in nonid else idm for f in range(P.n_arrows)])
    Y = embed_setdiagram(P, [[0, 1], [0, 1]], [idm] * P.n_arrows)
    XY, _, _ = product_diag(X, Y)
    pairs = [(x, y) for x in (0, 1) for y in (0, 1)]
    pmaps = [{(x, y): ((swap if f in nonid else idm)[x], y) for x, y in pairs} for f in range(P.n_arrows)]
    Z = embed_setdiagram(P, [pairs, pairs], pmaps)
    assert quotient_functor(XY)[0] == quotient_functor(Z)[0] == [4, 4]
    for f in range(P.n_arrows):
        assert all(XY.map0(f, p) == Z.map0(f, p) for p in pairs)


def test_diagram_from_tables_reports_coordinates(C):
    A = C.categories["ARROW"]
    R = C.setoids["REL3"]
    T = discrete_setoid(["0", "1"])
    f = _arrow(A)
    maps = [{x: x for x in R.X0} for _ in range(A.n_arrows)]
    maps[A.ident[1]] = {"0": "0", "1": "1"}
    maps[f] = {"0": "0", "1": "1", "2": "0"}
    with pytest.raises(DiagramError, match="relatedness"):
        diagram_from_tables(A, [R, T], maps)


def test_tabulate_and_restrict_mor(C):
    f = _collapse(C.diagrams["CHAIN3_SQUARE"], C.diagrams["TERM_SQUARE"])
    tabulate_diag(f).validate()
    u = C.functors["ARROW_PAIR"]
    X = restrict(u, C.diagrams["SWAP"])
    X.validate()
    assert X.shape is u.dom


def test_point_diagram_is_cached(C):
    X = C.setoids["LOOP"]
    assert point_diagram(X) is point_diagram(X)
