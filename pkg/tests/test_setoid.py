import networkx as nx
import pytest
from hypothesis import given

from setoidkan.setoid import (SetoidError, class_members, compose_mor, coproduct_setoid,
                              discrete_setoid, equal_mor, free_extend, free_setoid, full_setoid,
                              identity_mor, induced_mor, is_iso, mor_from_tables, product_setoid,
                              quotient, quotient_map, relational_setoid)

from strategies import free_setoids, relational_setoids


def _check_witness(S, w, x, y):
    assert S.is_x1(w)
    assert (S.s(w), S.t(w)) == (x, y)


# -- examples ------------------------------------------------------------------------

def test_rel3_relation_and_quotient(C):
    R = C.setoids["REL3"]
    assert len(R.enum_x1()) == 5
    assert R.related("0", "2") is None
    assert R.related("0", "1") == ("0", "1")
    assert len(quotient(R)[1]) == 3 and len(quotient(R)[0]) == 2
    assert class_members(R) == [["0", "1"], ["2"]]


def test_full_setoid_on_two_points():
    F = full_setoid(["a", "b"])
    F.validate()
    assert len(F.enum_x1()) == 4
    assert F.n_classes() == 1


@pytest.mark.parametrize("name,classes", [("TERM", 1), ("REL3", 2), ("CHAIN3", 1), ("TWO", 2), ("LOOP", 1)])
def test_corpus_class_counts(C, name, classes):
    assert C.setoids[name].n_classes() == classes


def test_chain_witness_is_shortest(C):
    S = C.setoids["CHAIN3"]
    w = S.related("0", "2")
    _check_witness(S, w, "0", "2")
    assert len(w[1]) == 2
    assert S.related("2", "0") == S.v(w)


def test_loop_has_parallel_witnesses(C):
    L = C.setoids["LOOP"]
    assert len(L.witnesses("p", "p")) >= 2


def test_relational_setoid_rejects_non_equivalence():
    with pytest.raises(SetoidError):
        relational_setoid([0, 1, 2], [(0, 0), (1, 1), (2, 2), (0, 1)])
    with pytest.raises(SetoidError):
        relational_setoid([0, 1, 2], [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2), (2, 1)])


def test_free_setoid_rejects_stray_edge():
    with pytest.raises(SetoidError):
        free_setoid([0, 1], [(0, 5)])


# -- morphisms -----------------------------------------------------------------------

def test_free_extend_sends_empty_word_to_reflexivity(C):
    S, R = C.setoids["CHAIN3"], full_setoid(["a", "b"])
    f0 = {"0": "a", "1": "b", "2": "a"}.__getitem__
    f = free_extend(S, R, f0, lambda e: (f0(S.edges[e][0]), f0(S.edges[e][1])))
    f.validate()
    assert f.f1(("1", ())) == ("b", "b")
    assert f.f1(S.related("0", "2")) == ("a", "a")


def test_free_extend_rejects_misplaced_generator(C):
    S, R = C.setoids["CHAIN3"], full_setoid(["a", "b"])
    with pytest.raises(SetoidError):
        free_extend(S, R, lambda x: "a", lambda e: ("a", "b"))


def test_equal_mor_and_quotient_map(C):
    R, T = C.setoids["REL3"], C.setoids["TWO"]
    f = mor_from_tables(R, R, {"0": "0", "1": "1", "2": "2"})
    g = mor_from_tables(R, R, {"0": "1", "1": "0", "2": "2"})
    h = equal_mor(f, g)
    assert h is not None and h.validate(f, g)
    c = mor_from_tables(R, R, {"0": "2", "1": "2", "2": "2"})
    assert equal_mor(f, c) is None
    assert quotient_map(c) == [1, 1]
    with pytest.raises(SetoidError):
        quotient_map(mor_from_tables(R, T, {"0": "0", "1": "1", "2": "0"}, check=False))


def test_is_iso_examples(C):
    R, S, Tm = C.setoids["REL3"], C.setoids["CHAIN3"], C.setoids["TERM"]
    assert is_iso(induced_mor(S, Tm, lambda x: "*"))
    assert not is_iso(induced_mor(R, Tm, lambda x: "*"))
    two = discrete_setoid(["u", "v"])
    vd = is_iso(induced_mor(R, two, {"0": "u", "1": "u", "2": "v"}.__getitem__))
    assert vd
    g = vd.payload["inverse"]
    f = induced_mor(R, two, {"0": "u", "1": "u", "2": "v"}.__getitem__)
    assert vd.payload["gf_id"].validate(compose_mor(f, g), identity_mor(R))
    assert vd.payload["fg_id"].validate(compose_mor(g, f), identity_mor(two))


def test_product_and_coproduct(C):
    R, S = C.setoids["REL3"], C.setoids["CHAIN3"]
    P = product_setoid([R, R])
    assert len(P.X0) == 9 and P.n_classes() == 4
    Q = coproduct_setoid([R, S])
    assert len(Q.X0) == 6 and Q.n_classes() == 3


# -- invariants ----------------------------------------------------------------------

@given(free_setoids())
def test_free_classes_match_networkx(S):
    G = nx.MultiGraph()
    G.add_nodes_from(S.X0)
    G.add_edges_from(S.edges)
    ours = {frozenset(m) for m in class_members(S)}
    assert ours == {frozenset(c) for c in nx.connected_components(G)}
    for x in S.X0:
        for y in S.X0:
            w = S.related(x, y)
            if nx.has_path(G, x, y):
                _check_witness(S, w, x, y)
                assert len(w[1]) == nx.shortest_path_length(G, x, y)
                _check_witness(S, S.connect(x, y), x, y)
            else:
                assert w is None


@given(free_setoids(max_points=4, max_edges=4))
def test_family_is_closed_under_operations(S):
    fam = S.family(3)
    keys = set(fam)
    for w in fam:
        assert S.is_x1(w)
        assert S.clip_family(S.v(w), 3) in keys
    for x in S.X0:
        assert S.r(x) in keys


@given(relational_setoids())
def test_relational_groupoid_laws(R):
    R.validate()
    for w in R.enum_x1():
        assert R.m(R.r(R.s(w)), w) == w
        assert R.m(w, R.v(w)) == R.r(R.s(w))


@given(relational_setoids(), relational_setoids())
def test_product_class_count_multiplies(R, S):
    assert product_setoid([R, S]).n_classes() == R.n_classes() * S.n_classes()
