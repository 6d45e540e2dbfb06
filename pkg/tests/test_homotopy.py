import pytest

from setoidkan.coherent import DiagramError, equal_diag, induced_diag_mor, point_diagram
from setoidkan.fincat import CatDiagram, discrete, identity_functor, pi0, terminal, to_terminal
from setoidkan.homotopy import (constant_cat, constant_catmap, cocontinuity_check,
                                free_cocompletion_map, homotopy_comp, homotopy_from_witness,
                                homotopy_id, homotopy_quotient_check, odot, odot_fiber_comparison,
                                odot_fiberwise, odot_inverts, omega, omega_coherence,
                                omega_sex_check, path_space, self_odot_iso, self_odot_naturality,
                                tilde, tilde_mor, universality_check, with_cap)
from setoidkan.truncation import terminal_setoid


def _over_one(C):
    one = terminal()
    return CatDiagram(one, [C], [identity_functor(C)])


# -- the strictification ------------------------------------------------------------------

def test_tilde_of_point_is_parallel_pair(C):
    F = tilde(C.diagrams["TERM_ONE"]).fibers[0]
    P = C.categories["PAIR"]
    assert (F.n_objects, F.n_arrows) == (P.n_objects, P.n_arrows)
    assert len(pi0(F)[0]) == 1


def test_tilde_object_count_for_rel3(C):
    X = C.diagrams["REL3_ONE"]
    F = tilde(X).fibers[0]
    S = X.objs[0]
    triples = len(S.X0)
    tuples = sum(1 for x in S.X0 for y in S.X0 if S.related(x, y) is not None)
    assert F.n_objects == triples + tuples == 8


def test_tilde_over_arrow_contains_both_triples(C):
    X = C.diagrams["TERM_ARROW"]
    A = X.shape
    F1 = tilde(X).fibers[1]
    labels = {o[2] for o in F1.objects if o[0] == "p"}
    assert labels == {A.label(k) for k in A.inc[1]}
    assert len(labels) == 2


def test_tilde_of_collapse_is_functorial(C):
    f = C.morphisms["chain_to_term"]
    phi = tilde_mor(f)
    phi.validate()


# -- path spaces and homotopies -----------------------------------------------------------

@pytest.mark.parametrize("xn", ["TERM_ONE", "REL3_ONE", "CHAIN3_ARROW", "SWAP"])
def test_path_space_sections(C, xn):
    P = path_space(C.diagrams[xn])
    assert P.check_sections()
    assert P.rho_sex_check()


def test_homotopy_between_class_mates(C):
    T, R = C.diagrams["TERM_ONE"], C.diagrams["REL3_ONE"]
    f = induced_diag_mor(T, R, [lambda x: "0"])
    g = induced_diag_mor(T, R, [lambda x: "1"])
    H = homotopy_from_witness(f, g, equal_diag(f, g))
    assert H.validate()
    assert homotopy_quotient_check(H, "set")


def test_homotopy_rejects_bad_witness(C):
    T, R = C.diagrams["TERM_ONE"], C.diagrams["REL3_ONE"]
    f = induced_diag_mor(T, R, [lambda x: "0"])
    g = induced_diag_mor(T, R, [lambda x: "1"])
    with pytest.raises(DiagramError, match="witness"):
        homotopy_from_witness(f, g, equal_diag(g, f))


def test_homotopy_comp_and_id(C):
    X, T = C.diagrams["CHAIN3_ONE"], C.diagrams["TERM_ONE"]
    f = induced_diag_mor(X, T, [lambda x: "*"])
    g = induced_diag_mor(T, T, [lambda x: "*"])
    assert homotopy_comp(f, g).validate()
    assert homotopy_id(X).validate()


# -- omega --------------------------------------------------------------------------------

def test_omega_from_point_zero_is_sex_equivalence(C):
    X = C.diagrams["TERM_ARROW"]
    u = C.functors["pt0"]
    omega(X, u).validate()
    assert omega_sex_check(X, u)


def test_omega_pasting_through_arrow(C):
    X = C.diagrams["CHAIN3_ONE"]
    assert omega_coherence(X, C.functors["ARROW_ONE"], C.functors["pt0"])


# -- the self action ------------------------------------------------------------------------

@pytest.mark.parametrize("xn,sizes", [("TERM_ONE", [1]), ("REL3_ONE", [2]), ("TERM_ARROW", [1, 1])])
def test_self_odot(C, xn, sizes):
    X = C.diagrams[xn]
    vd = self_odot_iso(X)
    assert vd
    assert [o.n_classes() for o in vd.payload["h"].cod.objs] == sizes


def test_self_odot_naturality(C):
    assert self_odot_naturality(C.morphisms["collapse_to_term"])


# -- the action -----------------------------------------------------------------------------

def test_odot_pair_with_term(C):
    E = _over_one(C.categories["PAIR"])
    assert odot(E, point_diagram(C.setoids["TERM"])).objs[0].n_classes() == 1
    assert odot_fiberwise(E, C.setoids["TERM"]).objs[0].n_classes() == 1


def test_odot_disc2_with_rel3(C):
    E = _over_one(discrete(2))
    assert odot(E, point_diagram(C.setoids["REL3"])).objs[0].n_classes() == 4
    assert odot_fiber_comparison(E, C.setoids["REL3"])


def test_odot_inverts_pair_to_one(C):
    A = C.categories["ARROW"]
    P, one = C.categories["PAIR"], terminal()
    phi = constant_catmap(to_terminal(P, one), constant_cat(P, A), constant_cat(one, A))
    vd = odot_inverts(phi, C.setoids["TERM"])
    assert vd and vd.payload["iso"] is not None


def test_odot_inverts_makes_no_claim_without_hypothesis(C):
    A = C.categories["ONE"]
    D, one = discrete(2), terminal()
    phi = constant_catmap(to_terminal(D, one), constant_cat(D, A), constant_cat(one, A))
    vd = odot_inverts(phi, C.setoids["REL3"])
    assert not vd.payload["equivalence"]
    assert vd.payload["iso"] is None


# -- cocontinuity and the free cocompletion -------------------------------------------------

@pytest.mark.parametrize("un,xn,sn,sizes", [("PAIR_ONE", "TERM_PAIR", "TERM", [(1, 1)]),
                                            ("disc2_ONE", "TERM_disc2", "REL3", [(4, 4)])])
def test_cocontinuity_examples(C, un, xn, sn, sizes):
    vd = cocontinuity_check(C.functors[un], C.diagrams[xn], C.setoids[sn])
    assert vd, vd.detail
    assert vd.payload["sizes"] == sizes


def test_cocontinuity_is_cap_stable(C):
    vd = with_cap(lambda cap: cocontinuity_check(C.functors["SPAN_ONE"], C.diagrams["CHAIN3_SPAN"],
                                                 cap=cap), caps=(3, 4))
    assert vd and all(vd.payload["verdicts"].values())


def test_free_cocompletion_set_two_chain(C):
    vd = free_cocompletion_map("set", C.setoids["TWO"], C.diagrams["CHAIN3_ONE"])
    assert vd
    assert vd.payload["value"].sets == [(0, 1)]


def test_free_cocompletion_prop(C):
    vd = free_cocompletion_map("prop", terminal_setoid(), C.diagrams["REL3_ONE"])
    assert vd and vd.payload["value"].values == [True]


@pytest.mark.parametrize("tag", ["set", "reg", "pos", "prop"])
def test_universality(C, tag):
    diags = {n: C.diagrams[n] for n in ("TERM_ARROW", "CHAIN3_ARROW", "COLLAPSE", "REL3_ONE")}
    mors = [("collapse_to_term", C.morphisms["collapse_to_term"])]
    recs = universality_check(tag, diags, mors)
    assert len(recs) == 5
    assert all(vd for _, _, vd in recs)
