"""Truncations of the setoid derivator and their equivalence criteria.

Theories, from strongest to weakest: ``sex`` (setoids themselves), ``reg``
(equivalence relations), ``set`` (quotient sets), ``pos`` (bare carriers up
to existence of maps), ``prop`` (inhabitation) and ``contr`` (trivial).

``equiv_check`` evaluates the combinatorial criterion on a functor ``u``
over a discrete ``I``; ``semantic_equiv_oracle`` independently computes the
comparison ``(vu)_!(vu)^* X -> v_! v^* X`` in the theory and tests it for
invertibility.
"""

from .coherent import (DiagramError, constant, diagram_from_tables, embed_setdiagram,
                       identity_diag, induced_diag_mor, restrict)
from .fincat import (CategoryError, FinCat, Functor, UnionFind, Zigzag, ZigzagFinder, coproduct, discrete,
                     full_subcategory, pi0)
from .kan import colim_reindex, left_kan_data
from .setoid import full_setoid, is_iso, quotient_map, relational_setoid
from .verdict import Verdict

THEORIES = ("sex", "reg", "set", "pos", "prop", "contr")
TRUNCATIONS = ("set", "reg", "pos", "prop")
# each theory implies the ones listed
IMPLIES = {"sex": ("reg",), "reg": ("set", "pos"), "set": ("prop",), "pos": ("prop",),
           "prop": ("contr",), "contr": ()}


class Theory:
    def __init__(self, tag):
        if tag not in THEORIES:
            raise ValueError(f"unknown theory {tag!r}; expected one of {', '.join(THEORIES)}")
        self.tag = tag

    def __repr__(self):
        return f"Theory({self.tag!r})"

    def __eq__(self, other):
        return isinstance(other, Theory) and other.tag == self.tag

    def __hash__(self):
        return hash(self.tag)


def _tag(theory):
    return theory.tag if isinstance(theory, Theory) else Theory(theory).tag


def weaker(tag):
    """All theories implied by ``tag``, itself included."""
    out, todo = [], [tag]
    while todo:
        t = todo.pop()
        if t not in out:
            out.append(t)
            todo.extend(IMPLIES[t])
    return out


# -- reflected diagrams ---------------------------------------------------------------------

class SetDiagram:
    """A functor into finite sets: ``sets[a]`` tuples, ``maps[f]`` dicts."""

    def __init__(self, shape, sets, maps):
        self.shape, self.sets, self.maps = shape, [tuple(s) for s in sets], [dict(m) for m in maps]

    def key(self):
        return (tuple(self.sets), tuple(tuple(sorted(m.items())) for m in self.maps))


class PosDiagram:
    """Carriers and maps; morphisms are any families of functions, all equal."""

    def __init__(self, shape, carriers, maps):
        self.shape, self.carriers, self.maps = shape, [tuple(c) for c in carriers], [dict(m) for m in maps]


class PropDiagram:
    """One truth value per object."""

    def __init__(self, shape, values):
        self.shape, self.values = shape, [bool(v) for v in values]


def reflect(theory, X, cap=None):
    """(L X, unit X -> R(L X)); the unit is None for contr."""
    tag = _tag(theory)
    A = X.shape
    if tag == "sex":
        return X, identity_diag(X)
    if tag == "set":
        sets = [tuple(range(X.objs[a].n_classes())) for a in range(A.n_objects)]
        maps = []
        for f in range(A.n_arrows):
            q = quotient_map(X.arrs[f])
            maps.append({c: q[c] for c in range(len(q))})
        LX = SetDiagram(A, sets, maps)
        return LX, induced_diag_mor(X, embed(tag, LX), [X.objs[a].cls for a in range(A.n_objects)])
    if tag == "reg":
        objs = []
        for a in range(A.n_objects):
            S = X.objs[a]
            pairs = [(x, y) for x in S.X0 for y in S.X0 if S.same_class(x, y)]
            objs.append(relational_setoid(S.X0, pairs))
        tables = [{x: X.map0(f, x) for x in X.objs[A.src(f)].X0} for f in range(A.n_arrows)]
        LX = diagram_from_tables(A, objs, tables)
        return LX, induced_diag_mor(X, LX, [(lambda x: x)] * A.n_objects)
    if tag == "pos":
        carriers, maps = [], []
        for a in range(A.n_objects):
            S = X.objs[a]
            carriers.append([(0, x) for x in S.X0] + [(1, w) for w in S.family(cap)])
        for f, (s, t, _) in enumerate(A.arrows):
            T = X.objs[t]
            mp = {}
            for e in carriers[s]:
                mp[e] = (0, X.map0(f, e[1])) if e[0] == 0 else (1, T.clip_family(X.map1(f, e[1]), cap))
            maps.append(mp)
        LX = PosDiagram(A, carriers, maps)
        R = embed(tag, LX)
        return LX, induced_diag_mor(X, R, [(lambda x: (0, x))] * A.n_objects)
    if tag == "prop":
        LX = PropDiagram(A, [len(X.objs[a].X0) > 0 for a in range(A.n_objects)])
        return LX, induced_diag_mor(X, embed(tag, LX), [(lambda x: "*")] * A.n_objects)
    if tag == "contr":
        return None, None
    raise ValueError(tag)


def embed(theory, LX):
    """R: the reflected object as a coherent diagram of setoids."""
    tag = _tag(theory)
    if tag in ("sex", "reg"):
        return LX
    A = LX.shape
    if tag == "set":
        return embed_setdiagram(A, [list(s) for s in LX.sets], LX.maps)
    if tag == "pos":
        objs = [full_setoid(c) for c in LX.carriers]
        return diagram_from_tables(A, objs, LX.maps)
    if tag == "prop":
        objs = [full_setoid(["*"] if v else []) for v in LX.values]
        for f, (s, t, lab) in enumerate(A.arrows):
            if LX.values[s] and not LX.values[t]:
                raise DiagramError(f"arrow {lab!r} goes from an inhabited to an empty value")
        return diagram_from_tables(A, objs, [{"*": "*"} if LX.values[A.src(f)] else {}
                                             for f in range(A.n_arrows)])
    raise ValueError(tag)


def reflect_mor(theory, f, cap=None):
    """L f: per-object functions for set and pos, a representative for reg."""
    tag = _tag(theory)
    A = f.shape
    if tag == "set":
        return [quotient_map(f.component(a)) for a in range(A.n_objects)]
    if tag == "reg":
        LX, _ = reflect(tag, f.dom)
        LY, _ = reflect(tag, f.cod)
        return induced_diag_mor(LX, LY, f.c0)
    if tag == "pos":
        LX, _ = reflect(tag, f.dom, cap)
        out = []
        for a in range(A.n_objects):
            T = f.cod.objs[a]
            out.append({e: (0, f.c0[a](e[1])) if e[0] == 0 else (1, T.clip_family(f.c1[a](e[1]), cap))
                        for e in LX.carriers[a]})
        return out
    if tag == "prop":
        return [True] * A.n_objects
    return None


def counit_check(theory, Y):
    """L(R(Y)) -> Y is invertible in the theory's diagram category."""
    tag = _tag(theory)
    if tag == "contr":
        return Verdict(True)
    RY = embed(tag, Y)
    LRY, _ = reflect(tag, RY)
    A = Y.shape
    if tag == "set":
        # classes of a discrete setoid are its elements, in order
        ok = all(len(LRY.sets[a]) == len(Y.sets[a]) for a in range(A.n_objects))
        counit = [{c: Y.sets[a][c] for c in LRY.sets[a]} for a in range(A.n_objects)]
        ok = ok and all(sorted(counit[a].values()) == sorted(Y.sets[a]) for a in range(A.n_objects))
        ok = ok and all(counit[A.dst(f)][LRY.maps[f][c]] == Y.maps[f][counit[A.src(f)][c]]
                        for f in range(A.n_arrows) for c in LRY.sets[A.src(f)])
        return Verdict(ok, {"counit": counit})
    if tag == "reg":
        ok = all(LRY.objs[a].pairs == Y.objs[a].pairs for a in range(A.n_objects))
        return Verdict(ok, {}, "" if ok else "image of an equivalence relation changed it")
    if tag == "pos":
        # counit (0, p) -> p, (1, (p, q)) -> p; inverse p -> (0, p)
        forth = [{e: (e[1] if e[0] == 0 else e[1][0]) for e in LRY.carriers[a]}
                 for a in range(A.n_objects)]
        back = [{p: (0, p) for p in Y.carriers[a]} for a in range(A.n_objects)]
        ok = all(set(forth[a].values()) <= set(Y.carriers[a]) and
                 set(back[a].values()) <= set(LRY.carriers[a]) for a in range(A.n_objects))
        return Verdict(ok, {"counit": forth, "inverse": back})
    if tag == "prop":
        ok = LRY.values == Y.values
        return Verdict(ok, {"values": LRY.values})
    raise ValueError(tag)


def counit_invertible_check(theory, objects):
    """Run counit_check over named objects of the theory's diagram category."""
    return [(name, counit_check(theory, Y)) for name, Y in objects.items()]


# -- fibers over a discrete index -----------------------------------------------------------

def _check_over(u, v):
    if u.cod is not v.dom:
        raise CategoryError("v must start where u ends")
    if not v.cod.is_discrete:
        raise CategoryError("index category is not discrete")


def _fibers(u, v):
    I = v.cod
    vu = [v(u(a)) for a in range(u.dom.n_objects)]
    A_i = [[a for a in range(u.dom.n_objects) if vu[a] == i] for i in range(I.n_objects)]
    B_i = [[b for b in range(u.cod.n_objects) if v(b) == i] for i in range(I.n_objects)]
    return A_i, B_i


def _component_map(C):
    uf = UnionFind(C.n_objects)
    for s, t, _ in C.arrows:
        uf.union(s, t)
    return uf.classes()


def _section_search(u, v, compA, compB):
    """Least s: ob B -> ob A (lexicographic in B order, then A order) with
    u s b ~ b, s b ~ s b' along arrows, and a ~ s u a.  The conditions only
    see connected components and never cross a component of B, so each
    component is solved on its own."""
    A, B = u.dom, u.cod
    A_i, _ = _fibers(u, v)
    over = {}
    for a in range(A.n_objects):
        over.setdefault(compB[u(a)], set()).add(compA[a])
    s = [None] * B.n_objects
    members = {}
    for b in range(B.n_objects):
        members.setdefault(compB[b], []).append(b)
    for kb, bs in members.items():
        comps = over.get(kb, set())
        # every a over this component must share the component of its s u a
        if len(comps) != 1:
            return None
        (ka,) = comps
        for b in bs:
            s[b] = next(a for a in A_i[v(b)] if compA[a] == ka)
    return s


def sex_tables(u, s):
    """Zigzag tables for a section s, filled by shortest-path search."""
    A, B = u.dom, u.cod
    fa, fb = ZigzagFinder(A), ZigzagFinder(B)
    return {"section": list(s),
            "arrows": {beta: fa(s[b], s[b2]) for beta, (b, b2, _) in enumerate(B.arrows)},
            "b_to_usb": {b: fb(b, u(s[b])) for b in range(B.n_objects)},
            "a_to_sua": {a: fa(a, s[u(a)]) for a in range(A.n_objects)}}


def sex_verdict_for_section(u, s):
    """Verdict for a prescribed section: tables by search, then validated."""
    if any(x is None for x in s):
        return Verdict(False, {"section": list(s)}, "section is partial")
    payload = sex_tables(u, s)
    if not validate_sex_payload(u, payload):
        return Verdict(False, payload, "no zigzags for the given section")
    return Verdict(True, payload)


def lift_zigzag(payload, z):
    """A zigzag in B to one in A between the section's values, by concatenation."""
    s, steps = payload["section"], []
    for beta, d in z.steps:
        w = payload["arrows"][beta]
        steps.extend(w.steps if d == 1 else w.reversed().steps)
    return Zigzag(s[z.start], s[z.end], steps)


def equiv_check(theory, u, v):
    """The combinatorial criterion for u to be an equivalence over I for the theory."""
    tag = _tag(theory)
    _check_over(u, v)
    A, B, I = u.dom, u.cod, v.cod
    A_i, B_i = _fibers(u, v)
    if tag == "contr":
        return Verdict(True, {}, "every functor")
    if tag == "prop":
        fib = [(len(A_i[i]) > 0, len(B_i[i]) > 0) for i in range(I.n_objects)]
        bad = [I.objects[i] for i, (ia, ib) in enumerate(fib) if ib and not ia]
        return Verdict(not bad, {"inhabited": fib},
                       "" if not bad else f"fiber over {bad[0]} is inhabited in B only")
    if tag == "pos":
        bad = [I.objects[i] for i in range(I.n_objects) if B_i[i] and not A_i[i]]
        if bad:
            return Verdict(False, {}, f"no object of A over {bad[0]}")
        section = {B.objects[b]: A.objects[A_i[v(b)][0]] for b in range(B.n_objects)}
        return Verdict(True, {"section": section})
    if tag == "set":
        compA, compB = _component_map(A), _component_map(B)
        fibers = []
        for i in range(I.n_objects):
            ca = sorted({compA[a] for a in A_i[i]})
            cb = sorted({compB[b] for b in B_i[i]})
            m = {}
            for a in A_i[i]:
                m.setdefault(compA[a], compB[u(a)])
            bij = len(set(m.values())) == len(ca) and set(m.values()) == set(cb)
            fibers.append({"components": (len(ca), len(cb)), "map": m, "bijective": bij})
        bad = [i for i, f in enumerate(fibers) if not f["bijective"]]
        detail = "" if not bad else (f"fiber over {I.objects[bad[0]]}: pi0 sizes "
                                     f"{fibers[bad[0]]['components'][0]} vs "
                                     f"{fibers[bad[0]]['components'][1]}")
        return Verdict(not bad, {"fibers": fibers}, detail)
    if tag in ("reg", "sex"):
        compA, compB = _component_map(A), _component_map(B)
        s = _section_search(u, v, compA, compB)
        if s is None:
            return Verdict(False, {}, "no section with the required zigzags")
        if tag == "reg":
            return Verdict(True, {"section": s, "exists": {"arrows": True, "b_to_usb": True,
                                                           "a_to_sua": True}})
        return sex_verdict_for_section(u, s)
    raise ValueError(tag)


def validate_sex_payload(u, payload):
    A, B = u.dom, u.cod
    s = payload["section"]
    for beta, (b, b2, _) in enumerate(B.arrows):
        z = payload["arrows"][beta]
        if z is None or (z.start, z.end) != (s[b], s[b2]) or not z.validate(A):
            return False
    for b, z in payload["b_to_usb"].items():
        if z is None or (z.start, z.end) != (b, u(s[b])) or not z.validate(B):
            return False
    for a, z in payload["a_to_sua"].items():
        if z is None or (z.start, z.end) != (a, s[u(a)]) or not z.validate(A):
            return False
    return True


# -- the semantic oracle --------------------------------------------------------------------

def _set_colimit(K, sets, maps):
    """Colimit of a functor K -> FinSet: (classes of pairs (k, x), class lookup)."""
    elems = [(k, x) for k in range(K.n_objects) for x in sets[k]]
    pos = {e: i for i, e in enumerate(elems)}
    uf = UnionFind(len(elems))
    for f, (s, t, _) in enumerate(K.arrows):
        for x in sets[s]:
            uf.union(pos[(s, x)], pos[(t, maps[f][x])])
    cls = uf.classes()
    return (max(cls) + 1 if cls else 0), {e: cls[pos[e]] for e in elems}


def _comma_functor(u, v, i, Kvu, Kv):
    """(vu/i) -> (v/i): (a, *, g) -> (u a, *, g)."""
    A = u.dom
    B = u.cod

    def ob(o):
        return (B.objects[u(A.index(o[0]))], o[1], o[2])

    def ar(k):
        return (B.label(u.on_arrow(A.arrow(k[0]))), k[1], ob(k[2]), ob(k[3]))

    return Functor.build(Kvu, Kv, ob, ar, check=False)


def _sex_comparison(u, v, X):
    """Per object of I, the representative ((vu)_!(vu)^*X)_i -> (v_!v^*X)_i."""
    vu = u.then(v)
    dvu = left_kan_data(vu, restrict(vu, X))
    dv = left_kan_data(v, restrict(v, X))
    out = []
    for i in range(v.cod.n_objects):
        c = _comma_functor(u, v, i, dvu.commas[i][0], dv.commas[i][0])
        out.append(colim_reindex(c, dv.pieces[i], dvu.pieces[i]))
    return out


def semantic_equiv_oracle(theory, u, v, objects=None):
    """Invertibility of (vu)_!(vu)^* X -> v_! v^* X on the terminal object over I
    and on each given diagram over I (Eex diagrams, reflected into the theory)."""
    tag = _tag(theory)
    _check_over(u, v)
    I = v.cod
    objs = {"terminal": constant(terminal_setoid(), I)}
    objs.update(objects or {})
    A_i, B_i = _fibers(u, v)
    results = {}
    for name, X in objs.items():
        if X.shape is not I:
            raise DiagramError(f"object {name} is not over the index category")
        if tag == "contr":
            results[name] = Verdict(True)
        elif tag in ("sex", "reg"):
            cmps = _sex_comparison(u, v, X)
            vds = [is_iso(c) for c in cmps]
            results[name] = Verdict(all(vds), {"maps": cmps, "verdicts": vds},
                                    "; ".join(vd.detail for vd in vds if not vd))
        elif tag == "set":
            LX, _ = reflect("set", X)
            vds = []
            for i in range(I.n_objects):
                sets = LX.sets[i]
                FA = full_subcategory(u.dom, A_i[i])
                FB = full_subcategory(u.cod, B_i[i])
                ident = lambda C: [{x: x for x in sets}] * C.n_arrows
                na, ca = _set_colimit(FA, [sets] * FA.n_objects, ident(FA))
                nb, cb = _set_colimit(FB, [sets] * FB.n_objects, ident(FB))
                posB = {b: j for j, b in enumerate(B_i[i])}
                image = {}
                for j, a in enumerate(A_i[i]):
                    for x in sets:
                        image.setdefault(ca[(j, x)], cb[(posB[u(a)], x)])
                bij = len(set(image.values())) == na == nb
                vds.append(Verdict(bij, {"sizes": (na, nb)}, f"{na} vs {nb}"))
            results[name] = Verdict(all(vds), {"fibers": vds},
                                    "; ".join(vd.detail for vd in vds if not vd))
        elif tag == "pos":
            LX, _ = reflect("pos", X)
            vds = []
            for i in range(I.n_objects):
                n = len(LX.carriers[i])
                lhs, rhs = len(A_i[i]) * n, len(B_i[i]) * n
                # maps exist both ways between finite sets of these sizes
                ok = (lhs == 0 or rhs > 0) and (rhs == 0 or lhs > 0)
                vds.append(Verdict(ok, {"sizes": (lhs, rhs)}, f"{lhs} vs {rhs}"))
            results[name] = Verdict(all(vds), {"fibers": vds},
                                    "; ".join(vd.detail for vd in vds if not vd))
        elif tag == "prop":
            LX, _ = reflect("prop", X)
            vals = [(bool(A_i[i]) and LX.values[i], bool(B_i[i]) and LX.values[i])
                    for i in range(I.n_objects)]
            ok = all(a == b for a, b in vals)
            results[name] = Verdict(ok, {"values": vals})
    holds = all(results.values())
    bad = [n for n, vd in results.items() if not vd]
    return Verdict(holds, {"objects": results},
                   "" if holds else f"not invertible at {bad[0]}: {results[bad[0]].detail}")


_TERM = []


def terminal_setoid():
    """The one-point setoid used as the terminal coefficient."""
    if not _TERM:
        _TERM.append(relational_setoid(["*"], [("*", "*")], name="TERM"))
    return _TERM[0]


# -- isomorphism and equality in a theory's diagram category --------------------------------

def theory_iso(theory, f):
    """Whether the Eex morphism f becomes invertible after reflection."""
    tag = _tag(theory)
    A = f.shape
    if tag in ("sex",):
        from .coherent import is_iso_diag
        return is_iso_diag(f)
    if tag in ("set", "reg"):
        maps = reflect_mor("set", f)
        bad = [a for a in range(A.n_objects)
               if sorted(maps[a]) != list(range(f.cod.objs[a].n_classes()))]
        return Verdict(not bad, {"maps": maps},
                       "" if not bad else f"not bijective on classes at {A.objects[bad[0]]!r}")
    if tag in ("pos", "prop"):
        inh = [(len(f.dom.objs[a].X0) > 0, len(f.cod.objs[a].X0) > 0) for a in range(A.n_objects)]
        bad = [a for a, (x, y) in enumerate(inh) if x != y]
        return Verdict(not bad, {"inhabited": inh},
                       "" if not bad else f"support differs at {A.objects[bad[0]]!r}")
    return Verdict(True)


def theory_equal(theory, f, g):
    """Whether two parallel Eex morphisms agree after reflection."""
    tag = _tag(theory)
    if tag == "sex":
        from .coherent import equal_diag
        w = equal_diag(f, g)
        return Verdict(w is not None, {"witness": w})
    if tag in ("set", "reg"):
        mf, mg = reflect_mor("set", f), reflect_mor("set", g)
        return Verdict(mf == mg, {"maps": (mf, mg)})
    # preorders and truth values: parallel morphisms are equal
    return Verdict(True)


# -- stability helpers ----------------------------------------------------------------------

def pullback_along(u, v, f):
    """f^*(u) over J for f: J -> I between discrete categories: (u', v')."""
    A, B, I, J = u.dom, u.cod, v.cod, f.dom
    if f.cod is not I or not J.is_discrete:
        raise CategoryError("pullback_along needs a map of discrete index categories into I")
    vu = u.then(v)

    def pull(C, w):
        objs = [(J.objects[j], C.objects[c]) for j in range(J.n_objects)
                for c in range(C.n_objects) if w(c) == f(j)]
        arrs = [((J.objects[j], lab), (J.objects[j], C.objects[s]), (J.objects[j], C.objects[t]))
                for j in range(J.n_objects) for s, t, lab in C.arrows if w(s) == f(j)]
        return FinCat.build(objs, arrs, lambda o: (o[0], C.label(C.ident[C.index(o[1])])),
                            lambda g, h: (h[0], C.label(C.compose(C.arrow(g[1]), C.arrow(h[1])))))

    PA, PB = pull(A, vu), pull(B, v)
    u2 = Functor.build(PA, PB, lambda o: (o[0], B.objects[u(A.index(o[1]))]),
                       lambda k: (k[0], B.label(u.on_arrow(A.arrow(k[1])))))
    v2 = Functor.build(PB, J, lambda o: o[0], lambda k: J.label(J.ident[J.index(k[0])]))
    return u2, v2


def functor_sum(u1, v1, u2, v2):
    """u1 + u2 over I1 + I2."""
    SA, iA1, iA2 = coproduct(u1.dom, u2.dom)
    SB, iB1, iB2 = coproduct(u1.cod, u2.cod)
    SI, _, _ = coproduct(v1.cod, v2.cod)
    us, vs = (u1, u2), (v1, v2)

    def uo(o):
        w = us[o[0]]
        return (o[0], w.cod.objects[w(w.dom.index(o[1]))])

    def ua(k):
        w = us[k[0]]
        return (k[0], w.cod.label(w.on_arrow(w.dom.arrow(k[1]))))

    def vo(o):
        w = vs[o[0]]
        return (o[0], w.cod.objects[w(w.dom.index(o[1]))])

    def va(k):
        w = vs[k[0]]
        return (k[0], w.cod.label(w.on_arrow(w.dom.arrow(k[1]))))

    return Functor.build(SA, SB, uo, ua), Functor.build(SB, SI, vo, va)


def over_components(u):
    """v: cod u -> pi0(cod u), the finest discrete index for u."""
    B = u.cod
    n, comp = pi0(B)
    I = discrete(len(n))
    return Functor(B, I, comp, [I.ident[comp[B.src(k)]] for k in range(B.n_arrows)])


# -- the Set reflection against limits and colimits ------------------------------------------

def _set_limit(A, sets, maps):
    """Compatible families of a functor A -> FinSet."""
    out = [()]
    for a in range(A.n_objects):
        out = [fam + (x,) for fam in out for x in sets[a]]
    return [fam for fam in out
            if all(maps[f][fam[s]] == fam[t] for f, (s, t, _) in enumerate(A.arrows))]


def set_reflection_commutation(X):
    """Compare the quotient of lim X and colim X with the limit and colimit of
    the quotient diagram, computed independently in FinSet.

    Payload: ``limit`` and ``colimit`` entries (commutes, size in setoids,
    size in sets); the verdict holds when both commute."""
    from .kan import colimit, limit
    A = X.shape
    Q, _ = reflect("set", X)
    out = {}
    L = limit(X).L
    fams = _set_limit(A, Q.sets, Q.maps)
    classes = {}
    for l in L.X0:
        classes.setdefault(tuple(X.objs[a].cls(l[0][a]) for a in range(A.n_objects)), set()).add(L.cls(l))
    # the comparison L/~ -> lim(X/~) is a bijection iff every family is hit by exactly one class
    bij = (set(classes) == set(fams) and all(len(c) == 1 for c in classes.values())
           and len(fams) == L.n_classes())
    out["limit"] = (bij, L.n_classes(), len(fams))
    C = colimit(X).C
    n, lookup = _set_colimit(A, Q.sets, Q.maps)
    image = {}
    for p in C.X0:
        image.setdefault(C.cls(p), set()).add(lookup[(p[0], X.objs[p[0]].cls(p[1]))])
    injective = len({next(iter(v)) for v in image.values()}) == len(image)
    bij = all(len(v) == 1 for v in image.values()) and injective and len(image) == n
    out["colimit"] = (bij, C.n_classes(), n)
    ok = out["limit"][0] and out["colimit"][0]
    return Verdict(ok, out, "" if ok else
                   f"limit {out['limit'][1]} vs {out['limit'][2]}, colimit {out['colimit'][1]} vs {out['colimit'][2]}")


def asymmetry_search(diagrams):
    """Instances where the Set reflection fails to commute with the limit
    while commuting with the colimit; returns (found, per-instance records)."""
    records, found = [], []
    for name, X in diagrams.items():
        vd = set_reflection_commutation(X)
        records.append((name, vd))
        if not vd.payload["limit"][0] and vd.payload["colimit"][0]:
            found.append(name)
    return Verdict(bool(found), {"found": found, "records": records},
                   "" if found else f"no instance among {len(records)}: the quotient commutes with both")
