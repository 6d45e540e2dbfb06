import pytest
from hypothesis import given

from setoidkan import truncation
from setoidkan.coherent import point_diagram
from setoidkan.fincat import CategoryError, discrete, identity_functor, pi0, terminal, to_terminal
from setoidkan.setoid import full_setoid
from setoidkan.truncation import (IMPLIES, THEORIES, PosDiagram, asymmetry_search, counit_check,
                                  embed, equiv_check, functor_sum, over_components,
                                  pullback_along, reflect, semantic_equiv_oracle,
                                  set_reflection_commutation, weaker)

from strategies import preorders


def _to_one(A):
    return to_terminal(A, terminal())


def _over_one(C, un):
    u = C.functors[un]
    return u, _to_one(u.cod)


# -- reflections ---------------------------------------------------------------------------

def test_set_reflection_of_chain_is_singleton(C):
    LX, unit = reflect("set", C.diagrams["CHAIN3_ONE"])
    assert LX.sets == [(0,)]
    unit.validate()


def test_reg_reflection_of_chain_is_one_class(C):
    LX, unit = reflect("reg", C.diagrams["CHAIN3_ONE"])
    S = LX.objs[0]
    assert S.kind == "relational" and S.n_classes() == 1
    assert len(S.enum_x1()) == 9
    unit.validate()


def test_pos_reflection_of_full_relation_compares_both_ways():
    X = point_diagram(full_setoid(["a", "b", "c"]))
    LX, unit = reflect("pos", X, cap=2)
    unit.validate()
    assert LX.carriers[0][:3] == ((0, "a"), (0, "b"), (0, "c"))
    assert all(e[0] == 1 for e in LX.carriers[0][3:])
    assert counit_check("pos", LX)


def test_prop_reflection(C):
    LX, _ = reflect("prop", C.diagrams["REL3_SPAN"])
    assert LX.values == [True, True, True]
    assert reflect("contr", C.diagrams["REL3_SPAN"]) == (None, None)


@pytest.mark.parametrize("tag", ["set", "reg", "pos", "prop"])
@pytest.mark.parametrize("xn", ["REL3_ARROW", "CHAIN3_PAIR", "SWAP", "LOOP_ONE", "SPANX"])
def test_counit_is_invertible(C, tag, xn):
    LX, _ = reflect(tag, C.diagrams[xn], cap=3)
    assert counit_check(tag, LX)


def test_counit_on_empty_pos_object(C):
    A = C.categories["ONE"]
    Y = PosDiagram(A, [[]], [{}])
    assert counit_check("pos", Y)
    assert len(embed("pos", Y).objs[0].X0) == 0


# -- the equivalence criterion ----------------------------------------------------------

def test_set_pair_to_one_holds(C):
    assert equiv_check("set", *_over_one(C, "PAIR_ONE"))


def test_set_disc2_to_one_fails_with_sizes(C):
    vd = equiv_check("set", *_over_one(C, "disc2_ONE"))
    assert not vd
    assert "pi0 sizes 2 vs 1" in vd.detail


def test_sex_pair_to_one_has_validated_zigzags(C):
    u, v = _over_one(C, "PAIR_ONE")
    vd = equiv_check("sex", u, v)
    assert vd
    assert truncation.validate_sex_payload(u, vd.payload)
    assert semantic_equiv_oracle("sex", u, v)


@pytest.mark.parametrize("un", ["PAIR_ONE", "ARROW_ONE", "SPAN_ONE", "SQUARE_ONE", "disc2_ONE",
                                "disc3_ONE", "pt0", "pt1", "PAIR_ARROW", "ARROW_PAIR", "ONE_disc2"])
def test_checker_matches_oracle_and_locality(C, un):
    u = C.functors[un]
    v = over_components(u)
    verdicts = {}
    for tag in THEORIES:
        got = equiv_check(tag, u, v)
        verdicts[tag] = bool(got)
        assert bool(got) == bool(semantic_equiv_oracle(tag, u, v)), tag
    for a in THEORIES:
        for b in IMPLIES[a]:
            assert not verdicts[a] or verdicts[b]


def test_weaker_is_transitive_closure():
    assert set(weaker("sex")) == set(THEORIES)
    assert set(weaker("pos")) == {"pos", "prop", "contr"}


@given(preorders())
def test_to_one_set_equivalence_iff_connected(P):
    u = identity_functor(P)
    assert equiv_check("sex", u, over_components(u))
    vd = equiv_check("set", _to_one(P).then(identity_functor(terminal())), identity_functor(terminal()))
    assert bool(vd) == (len(pi0(P)[0]) == 1)
    assert bool(semantic_equiv_oracle("set", _to_one(P), identity_functor(terminal()))) == bool(vd)


@given(preorders(4))
def test_sex_payload_always_validates(P):
    p = _to_one(P)
    vd = equiv_check("sex", p, identity_functor(terminal()))
    if vd:
        assert truncation.validate_sex_payload(p, vd.payload)


# -- stability -----------------------------------------------------------------------------

@pytest.mark.parametrize("tag", THEORIES)
def test_pullback_stability(C, tag):
    u = C.functors["disc3_disc2"]
    v = identity_functor(u.cod)
    f = C.functors["ONE_disc2"]
    before = bool(equiv_check(tag, u, v))
    u2, v2 = pullback_along(u, v, f)
    if before:
        assert equiv_check(tag, u2, v2)


@pytest.mark.parametrize("tag", THEORIES)
def test_coproduct_stability(C, tag):
    u1, v1 = _over_one(C, "PAIR_ONE")
    u2, v2 = _over_one(C, "SQUARE_ONE")
    us, vs = functor_sum(u1, v1, u2, v2)
    both = bool(equiv_check(tag, u1, v1)) and bool(equiv_check(tag, u2, v2))
    assert bool(equiv_check(tag, us, vs)) == both


@pytest.mark.parametrize("tag", ["set", "sex"])
def test_two_out_of_three(C, tag):
    # pt0 : ONE -> ARROW and ARROW -> ONE compose to the identity of ONE
    u, w = C.functors["pt0"], C.functors["ARROW_ONE"]
    one = identity_functor(w.cod)
    uw, vw = u.then(w), one
    assert equiv_check(tag, uw, vw)
    assert equiv_check(tag, w, one)
    assert equiv_check(tag, u, w)


# -- quotients against limits and colimits -------------------------------------------------

@pytest.mark.parametrize("xn", ["REL3_disc2", "CHAIN3_PAIR", "SWAP", "COLLAPSE", "SPANX", "REL3_SQUARE"])
def test_quotient_commutes_with_limits_and_colimits(C, xn):
    vd = set_reflection_commutation(C.diagrams[xn])
    assert vd, vd.detail


def test_set_limit_oracle(C):
    A = C.categories["disc2"]
    assert len(truncation._set_limit(A, [(0, 1), (0, 1, 2)], [{0: 0, 1: 1}, {0: 0, 1: 1, 2: 2}])) == 6


def test_detector_flags_a_wrong_set_limit(C, monkeypatch):
    real = truncation._set_limit
    monkeypatch.setattr(truncation, "_set_limit", lambda A, s, m: real(A, s, m) + [("extra",)])
    vd = set_reflection_commutation(C.diagrams["REL3_disc2"])
    assert not vd and not vd.payload["limit"][0] and vd.payload["colimit"][0]
    assert asymmetry_search({"planted": C.diagrams["REL3_disc2"]})


def test_asymmetry_search_on_corpus_finds_nothing(C):
    vd = asymmetry_search(C.diagrams)
    assert not vd
    assert vd.payload["found"] == []
    assert len(vd.payload["records"]) == len(C.diagrams)


def test_index_must_be_discrete(C):
    with pytest.raises(CategoryError, match="not discrete"):
        equiv_check("set", C.functors["pt0"], identity_functor(C.categories["ARROW"]))
    with pytest.raises(CategoryError):
        equiv_check("set", C.functors["pt0"], identity_functor(discrete(2)))
