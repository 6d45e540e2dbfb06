import pytest

from setoidkan.coherent import DiagMor, DiagramError, constant, identity_diag
from setoidkan.fincat import comma, point, terminal
from setoidkan.kan import (check_der2, check_der3, check_der4, check_mate, check_stripped,
                           colimit, colimit_over, comma_square, distributivity_check,
                           kan_fast_path, left_kan, limit, limit_over, right_kan,
                           verify_derivator_axioms)
from setoidkan.setoid import is_iso


def _qsizes(D):
    return [o.n_classes() for o in D.objs]


# -- limits and colimits -----------------------------------------------------------------

def test_limit_over_disc2_is_product(C):
    L, counit, factor = limit_over(C.categories["disc2"], C.diagrams["REL3_disc2"])
    assert L.n_classes() == 4
    counit.validate()


def test_colimit_of_constant_term_over_pair(C):
    col = colimit(C.diagrams["TERM_PAIR"])
    assert col.C.n_classes() == 1
    col.unit().validate()


@pytest.mark.parametrize("name,size", [("TERM_disc2", 2), ("REL3_disc3", 6), ("CHAIN3_SQUARE", 1),
                                       ("SWAP", 1), ("COLLAPSE", 1), ("SPANX", 1)])
def test_colimit_quotients(C, name, size):
    assert colimit(C.diagrams[name]).C.n_classes() == size


def test_colimit_factorization_through_cocone(C):
    X = C.diagrams["REL3_ARROW"]
    Cc, unit, factor = colimit_over(X.shape, X)
    rep = factor(unit, Cc)
    rep.validate()
    assert all(Cc.same_class(rep.f0(p), p) for p in Cc.X0)


def test_limit_factorization_through_cone(C):
    Y = C.diagrams["CHAIN3_PAIR"]
    lim = limit(Y)
    rep = lim.factor(lim.counit(), lim.L)
    rep.validate()
    assert all(lim.L.same_class(rep.f0(l), l) for l in lim.L.X0)


def test_colimit_over_wrong_shape(C):
    with pytest.raises(DiagramError):
        colimit_over(C.categories["ARROW"], C.diagrams["TERM_PAIR"])


# -- Kan extensions ----------------------------------------------------------------------

def test_right_kan_along_disc2_to_one(C):
    RX = right_kan(C.functors["disc2_ONE"], C.diagrams["REL3_disc2"])
    assert _qsizes(RX) == [4]


def test_right_kan_from_point_one(C):
    RX = right_kan(C.functors["pt1"], C.diagrams["TERM_ONE"])
    RX.validate()
    assert _qsizes(RX)[0] == 1
    K = comma(point(C.categories["ARROW"], "0", terminal()), C.functors["pt1"])[0]
    assert K.n_objects == 1


def test_left_kan_from_point_zero(C):
    LX = left_kan(C.functors["pt0"], C.diagrams["TERM_ONE"])
    LX.validate()
    assert _qsizes(LX) == [1, 1]


def test_left_kan_along_projection_is_colimit(C):
    X = C.diagrams["CHAIN3_SPAN"]
    assert _qsizes(left_kan(C.functors["SPAN_ONE"], X)) == [colimit(X).C.n_classes()]
    assert check_stripped(X)


@pytest.mark.parametrize("un,xn", [("disc2_ONE", "REL3_disc2"), ("disc3_disc2", "CHAIN3_disc3"),
                                   ("SQUARE_ONE", "REL3_SQUARE")])
def test_fast_path_agrees(C, un, xn):
    u, X = C.functors[un], C.diagrams[xn]
    assert kan_fast_path(u, X, "left")
    assert kan_fast_path(u, X, "right")


def test_fast_path_needs_discrete_target(C):
    with pytest.raises(DiagramError):
        kan_fast_path(C.functors["PAIR_ARROW"], C.diagrams["SWAP"])


# -- mates and axioms --------------------------------------------------------------------

@pytest.mark.parametrize("xn", ["TERM_ONE", "REL3_ONE", "CHAIN3_ONE", "LOOP_ONE"])
def test_comma_square_between_ends_has_invertible_mates(C, xn):
    sq = comma_square(C.functors["pt0"], C.functors["pt1"])
    X = C.diagrams[xn]
    assert check_mate(sq, X, "left")
    assert check_mate(sq, X, "right")


@pytest.mark.parametrize("un,xn", [("PAIR_ARROW", "SWAP"), ("ARROW_SPAN", "WIDEN"),
                                   ("SQUARE_ARROW", "CHAIN3_SQUARE")])
def test_pointwise_mates(C, un, xn):
    u = C.functors[un]
    for b in range(u.cod.n_objects):
        assert check_der4(u, b, C.diagrams[xn])


@pytest.mark.parametrize("un,xn,yn", [("PAIR_ARROW", "SWAP", "WIDEN"), ("ARROW_SPAN", "COLLAPSE", "SPANX"),
                                      ("disc2_ONE", "REL3_disc2", "LOOP_ONE")])
def test_triangle_identities(C, un, xn, yn):
    assert check_der3(C.functors[un], C.diagrams[xn], C.diagrams[yn])


def test_derivator_axioms_on_small_corpus(C):
    cats = {k: C.categories[k] for k in ("ONE", "ARROW", "PAIR", "disc2")}
    funs = {k: C.functors[k] for k in ("PAIR_ONE", "pt0", "pt1", "disc2_ONE", "PAIR_ARROW")}
    diags = {k: X for k, X in C.diagrams.items() if C.category_name(X.shape) in cats}
    mors = {k: m for k, m in C.morphisms.items() if C.category_name(m.shape) in cats}
    records = verify_derivator_axioms(cats, diags, funs, mors, C.categories["ARROW"])
    failing = [(c, i, vd.detail) for c, i, vd in records if not vd]
    assert not failing
    assert {c for c, _, _ in records} >= {"der1", "der2", "der3", "der4", "der5"}


def test_corrupted_witness_is_caught(C):
    f = C.morphisms["collapse_to_term"]
    bad = DiagMor(f.dom, f.cod, f.c0, f.c1, [lambda x: ("junk", x)] * len(f.nat), check=False)
    records = verify_derivator_axioms({}, {}, {}, {"bad": bad}, C.categories["ARROW"])
    assert [(c, i, bool(vd)) for c, i, vd in records] == [("validate", "bad", False)]


def test_no_morphism_is_iso_on_objects_only(C):
    for name, f in C.morphisms.items():
        assert check_der2(f), name


@pytest.mark.parametrize("un,xn,yn,sizes", [("PAIR_ONE", "TERM_PAIR", "REL3_ONE", ([2], [2])),
                                            ("disc2_ONE", "REL3_disc2", "CHAIN3_ONE", ([4], [4]))])
def test_distributivity(C, un, xn, yn, sizes):
    vd = distributivity_check(C.diagrams[xn], C.diagrams[yn], C.functors[un])
    assert vd
    assert vd.payload["sizes"] == sizes


def test_identity_has_iso_components(C):
    X = C.diagrams["REL3_SPAN"]
    ident = identity_diag(X)
    assert all(is_iso(ident.component(a)) for a in range(X.shape.n_objects))
    assert constant(C.setoids["TWO"], X.shape).objs[0].n_classes() == 2
