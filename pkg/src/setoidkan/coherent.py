"""Coherent diagrams of setoids over a finite category and their morphisms.

A coherent diagram over ``A`` assigns a setoid to each object and a morphism
representative to each arrow, together with witnesses that identities act as
identities and that composites agree with composition, up to relatedness.
"""

from .fincat import terminal, to_terminal
from .setoid import (EqWitness, FiberedSetoid, MorRep, SetoidError, discrete_setoid,
                     induced_mor, is_iso, product_setoid, quotient_map)
from .verdict import Verdict


class DiagramError(ValueError):
    pass


def tab(fn):
    """Memoize a function; values are computed on first lookup."""
    memo = {}

    def get(x):
        try:
            return memo[x]
        except KeyError:
            out = memo[x] = fn(x)
            return out
    return get


def diagram_key(X):
    """Identity of a diagram's data; wrappers built by restriction along equal
    functors share it."""
    return (id(X.shape), tuple(map(id, X.objs)), tuple(map(id, X.arrs)))


def same_diagram(X, Y):
    return X is Y or diagram_key(X) == diagram_key(Y)


class CoherentDiagram:
    """``objs[a]`` setoids, ``arrs[f]`` MorReps, ``refl[a](x)`` with s = x and
    t = X_{1a,0}(x), ``comp[(f, g)](x)`` with s = X_g X_f x and t = X_{gf} x."""

    def __init__(self, shape, objs, arrs, refl, comp, check=True, name=None):
        self.shape = shape
        self.objs = list(objs)
        self.arrs = list(arrs)
        self.refl = list(refl)
        self.comp = dict(comp)
        self.name = name
        if check:
            self.validate()

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<CoherentDiagram{nm} over {self.shape!r}>"

    def map0(self, f, x):
        return self.arrs[f].f0(x)

    def map1(self, f, w):
        return self.arrs[f].f1(w)

    def validate(self):
        A = self.shape
        if len(self.objs) != A.n_objects or len(self.arrs) != A.n_arrows:
            raise DiagramError("diagram data does not match the shape")
        for f, (s, t, lab) in enumerate(A.arrows):
            X = self.arrs[f]
            if X.dom is not self.objs[s] or X.cod is not self.objs[t]:
                raise DiagramError(f"arrow {lab!r}: representative has the wrong type")
            try:
                X.validate()
            except SetoidError as e:
                raise DiagramError(f"arrow {lab!r}: {e}") from None
        for a in range(A.n_objects):
            Xa, ida = self.objs[a], A.ident[a]
            for x in Xa.X0:
                w = self.refl[a](x)
                if Xa.s(w) != x or Xa.t(w) != self.map0(ida, x):
                    raise DiagramError(f"reflexivity witness at object {A.objects[a]!r}, "
                                       f"element {x!r} has wrong endpoints")
        for f, g in A.composable_pairs():
            gf = A.compose(g, f)
            Xc = self.objs[A.dst(g)]
            wfn = self.comp.get((f, g))
            if wfn is None:
                raise DiagramError(f"missing composition witness for ({A.label(f)!r}, {A.label(g)!r})")
            for x in self.objs[A.src(f)].X0:
                w = wfn(x)
                if Xc.s(w) != self.map0(g, self.map0(f, x)) or Xc.t(w) != self.map0(gf, x):
                    raise DiagramError(f"composition witness for ({A.label(f)!r}, {A.label(g)!r}) "
                                       f"at element {x!r} has wrong endpoints")


class DiagMor:
    """Components ``c0[a]``, ``c1[a]`` and naturality witnesses ``nat[f]``
    with s = Y_f(c0[a] x) and t = c0[a'](X_f x)."""

    def __init__(self, dom, cod, c0, c1, nat, check=True):
        if dom.shape is not cod.shape:
            raise DiagramError("morphism between diagrams of different shapes")
        self.dom, self.cod = dom, cod
        self.c0, self.c1, self.nat = list(c0), list(c1), list(nat)
        if check:
            self.validate()

    @property
    def shape(self):
        return self.dom.shape

    def component(self, a):
        return MorRep(self.dom.objs[a], self.cod.objs[a], self.c0[a], self.c1[a], check=False)

    def validate(self):
        A, X, Y = self.shape, self.dom, self.cod
        for a in range(A.n_objects):
            try:
                self.component(a).validate()
            except SetoidError as e:
                raise DiagramError(f"component at {A.objects[a]!r}: {e}") from None
        for f, (s, t, lab) in enumerate(A.arrows):
            Yt = Y.objs[t]
            for x in X.objs[s].X0:
                w = self.nat[f](x)
                if Yt.s(w) != Y.map0(f, self.c0[s](x)) or Yt.t(w) != self.c0[t](X.map0(f, x)):
                    raise DiagramError(f"naturality witness at {lab!r}, element {x!r} has wrong endpoints")


class DiagEqWitness:
    def __init__(self, h):
        self.h = list(h)

    def __getitem__(self, a):
        return self.h[a]

    def validate(self, f, g):
        return all(EqWitness(self.h[a]).validate(f.component(a), g.component(a))
                   for a in range(f.shape.n_objects))


# -- building diagrams ------------------------------------------------------------------

_POINTS = {}


def point_diagram(X):
    """A setoid as a diagram over the terminal category (the unstripped form)."""
    hit = _POINTS.get(id(X))
    if hit is not None and hit[0] is X:
        return hit[1]
    ident = MorRep(X, X, lambda x: x, lambda w: w, check=False)
    D = CoherentDiagram(terminal(), [X], [ident], [X.r], {(0, 0): X.r}, check=False)
    _POINTS[id(X)] = (X, D)
    return D


def strip(X):
    """The setoid underlying a diagram over the terminal category."""
    if X.shape.n_objects != 1 or X.shape.n_arrows != 1:
        raise DiagramError("strip needs a diagram over the terminal category")
    return X.objs[0]


def constant(C, A):
    """p_A^* C: the constant diagram at a setoid."""
    return restrict(to_terminal(A, terminal()), point_diagram(C))


def embed_setdiagram(A, sets, maps):
    """A plain functor A -> FinSet as a diagram of discrete setoids.

    ``sets[a]`` is a list, ``maps[f]`` a dict; functoriality is validated.
    """
    for a in range(A.n_objects):
        idm = maps[A.ident[a]]
        if any(idm[x] != x for x in sets[a]):
            raise DiagramError(f"identity at {A.objects[a]!r} does not act as identity")
    for f, (s, t, lab) in enumerate(A.arrows):
        if any(maps[f][x] not in set(sets[t]) for x in sets[s]):
            raise DiagramError(f"map for {lab!r} leaves its codomain")
    for (g, f), h in A.comp.items():
        if any(maps[g][maps[f][x]] != maps[h][x] for x in sets[A.src(f)]):
            raise DiagramError(f"not functorial at {A.label(g)!r} . {A.label(f)!r}")
    objs = [discrete_setoid(sets[a]) for a in range(A.n_objects)]
    arrs = []
    for f in range(A.n_arrows):
        mp = dict(maps[f])
        arrs.append(MorRep(objs[A.src(f)], objs[A.dst(f)], mp.__getitem__,
                           lambda w, mp=mp: (mp[w[0]], mp[w[1]]), check=False))
    refl = [X.r for X in objs]
    comp = {}
    for f, g in A.composable_pairs():
        mf, mg = maps[f], maps[g]
        comp[(f, g)] = lambda x, mf=mf, mg=mg: (mg[mf[x]], mg[mf[x]])
    return CoherentDiagram(A, objs, arrs, refl, comp)


def diagram_from_tables(A, objs, maps, name=None):
    """A diagram from level-0 tables; level-1 maps and all witnesses are found
    by relatedness search.  ``maps[f]`` is a dict for every arrow, identities
    included.  Raises with the coordinates of the first failure."""
    for f, (s, t, lab) in enumerate(A.arrows):
        mp = maps[f]
        for x in objs[s].X0:
            if x not in mp:
                raise DiagramError(f"map for {lab!r} is undefined at {x!r}")
            if mp[x] not in objs[t]:
                raise DiagramError(f"map for {lab!r} sends {x!r} outside the codomain")
        for x, y in objs[s].generating_pairs():
            if objs[t].related(mp[x], mp[y]) is None:
                raise DiagramError(f"map for {lab!r} does not preserve relatedness of {x!r}, {y!r}")
    arrs = [induced_mor(objs[A.src(f)], objs[A.dst(f)], dict(maps[f]).__getitem__, check=False)
            for f in range(A.n_arrows)]

    def search(Y, table, where):
        out = {}
        for x, (y1, y2) in table.items():
            w = Y.related(y1, y2)
            if w is None:
                raise DiagramError(f"no witness for {where} at element {x!r}")
            out[x] = w
        return out.__getitem__

    refl = []
    for a in range(A.n_objects):
        idm = maps[A.ident[a]]
        refl.append(search(objs[a], {x: (x, idm[x]) for x in objs[a].X0},
                           f"identity at {A.objects[a]!r}"))
    comp = {}
    for f, g in A.composable_pairs():
        mf, mg, mh = maps[f], maps[g], maps[A.compose(g, f)]
        comp[(f, g)] = search(objs[A.dst(g)], {x: (mg[mf[x]], mh[x]) for x in objs[A.src(f)].X0},
                              f"composite {A.label(g)!r} . {A.label(f)!r}")
    return CoherentDiagram(A, objs, arrs, refl, comp, name=name)


def restrict(u, X):
    """u^* X: strict precomposition with u."""
    if u.cod is not X.shape:
        raise DiagramError("restrict: functor codomain is not the diagram shape")
    A = u.dom
    objs = [X.objs[u(a)] for a in range(A.n_objects)]
    arrs = [X.arrs[u.on_arrow(f)] for f in range(A.n_arrows)]
    refl = [X.refl[u(a)] for a in range(A.n_objects)]
    comp = {(f, g): X.comp[(u.on_arrow(f), u.on_arrow(g))] for f, g in A.composable_pairs()}
    return CoherentDiagram(A, objs, arrs, refl, comp, check=False)


def identity_diag(X):
    A = X.shape
    nat = []
    for f in range(A.n_arrows):
        Yt = X.objs[A.dst(f)]
        nat.append(lambda x, f=f, Yt=Yt: Yt.r(X.map0(f, x)))
    return DiagMor(X, X, [lambda x: x] * A.n_objects, [lambda w: w] * A.n_objects, nat, check=False)


def whisker(mu, X):
    """The morphism u^*X -> v^*X induced by mu: u => v."""
    u, v = mu.u, mu.v
    if u.cod is not X.shape:
        raise DiagramError("whisker: transformation does not land in the diagram shape")
    A = u.dom
    dom, cod = restrict(u, X), restrict(v, X)
    c0 = [X.arrs[mu[a]].f0 for a in range(A.n_objects)]
    c1 = [X.arrs[mu[a]].f1 for a in range(A.n_objects)]
    nat = []
    for f, (s, t, _) in enumerate(A.arrows):
        # X_{v f} X_{mu s} ~ X_{v f . mu s} = X_{mu t . u f} ~ X_{mu t} X_{u f}
        first = X.comp[(mu[s], v.on_arrow(f))]
        second = X.comp[(u.on_arrow(f), mu[t])]
        Xt = X.objs[v(t)]
        nat.append(lambda x, first=first, second=second, Xt=Xt: Xt.m(first(x), Xt.v(second(x))))
    return DiagMor(dom, cod, c0, c1, nat, check=False)


def restrict_mor(u, f):
    """u^* f"""
    A = u.dom
    return DiagMor(restrict(u, f.dom), restrict(u, f.cod), [f.c0[u(a)] for a in range(A.n_objects)],
                   [f.c1[u(a)] for a in range(A.n_objects)],
                   [f.nat[u.on_arrow(k)] for k in range(A.n_arrows)], check=False)


def compose_all(*fs):
    out = fs[0]
    for g in fs[1:]:
        out = compose_diag(out, g)
    return out


def induced_diag_mor(X, Y, c0):
    """A morphism with prescribed level-0 components; level-1 components and
    naturality witnesses are found by relatedness search.  Raises if c0 does
    not preserve relatedness or is not natural up to relatedness."""
    A = X.shape
    c0 = [tab(c0[a]) for a in range(A.n_objects)]

    def lvl1(a):
        Xa, Ya = X.objs[a], Y.objs[a]

        def f1(w):
            out = Ya.related(c0[a](Xa.s(w)), c0[a](Xa.t(w)))
            if out is None:
                raise DiagramError(f"component at {A.objects[a]!r} does not preserve relatedness")
            return out
        return f1

    nat = []
    for k, (s, t, lab) in enumerate(A.arrows):
        Yt = Y.objs[t]
        table = {}
        for x in X.objs[s].X0:
            w = Yt.related(Y.map0(k, c0[s](x)), c0[t](X.map0(k, x)))
            if w is None:
                raise DiagramError(f"components are not natural at {lab!r}")
            table[x] = w
        nat.append(table.__getitem__)
    return DiagMor(X, Y, c0, [lvl1(a) for a in range(A.n_objects)], nat, check=False)


def compose_diag(f, g):
    """g . f, with (gf)_alpha(x) = m(g_alpha(f_a x), g_{a',1}(f_alpha x))."""
    if not same_diagram(f.cod, g.dom):
        raise DiagramError("compose_diag: codomain/domain mismatch")
    A = f.shape
    c0 = [(lambda x, a=a: g.c0[a](f.c0[a](x))) for a in range(A.n_objects)]
    c1 = [(lambda w, a=a: g.c1[a](f.c1[a](w))) for a in range(A.n_objects)]
    nat = []
    for k, (s, t, _) in enumerate(A.arrows):
        Zt = g.cod.objs[t]
        nat.append(lambda x, k=k, s=s, t=t, Zt=Zt: Zt.m(g.nat[k](f.c0[s](x)), g.c1[t](f.nat[k](x))))
    return DiagMor(f.dom, g.cod, c0, c1, nat, check=False)


def tabulate_diag(f):
    """Copy of a morphism with level-0 components and naturality stored as tables."""
    A = f.shape
    c0 = [tab(f.c0[a]) for a in range(A.n_objects)]
    nat = [tab(f.nat[k]) for k in range(A.n_arrows)]
    return DiagMor(f.dom, f.cod, c0, f.c1, nat, check=False)


def equal_diag(f, g):
    """Pointwise witness that f ~ g, or None."""
    if not (same_diagram(f.dom, g.dom) and same_diagram(f.cod, g.cod)):
        raise DiagramError("equal_diag: morphisms are not parallel")
    hs = []
    for a in range(f.shape.n_objects):
        Y = f.cod.objs[a]
        h = {}
        for x in f.dom.objs[a].X0:
            w = Y.related(f.c0[a](x), g.c0[a](x))
            if w is None:
                return None
            h[x] = w
        hs.append(h)
    return DiagEqWitness(hs)


def is_iso_diag(f):
    """Pointwise iso test; when it holds, the inverse carries naturality witnesses
    assembled from the round-trip witnesses of the components."""
    A, X, Y = f.shape, f.dom, f.cod
    comps = []
    for a in range(A.n_objects):
        vd = is_iso(f.component(a))
        if not vd:
            return Verdict(False, {"object": A.objects[a]},
                           f"component at {A.objects[a]!r}: {vd.detail}")
        comps.append(vd.payload)
    g0 = [c["inverse"].f0 for c in comps]
    g1 = [c["inverse"].f1 for c in comps]
    hs = [c["gf_id"] for c in comps]   # g f x ~ x
    ks = [c["fg_id"] for c in comps]   # f g y ~ y
    nat = []
    for k, (s, t, _) in enumerate(A.arrows):
        Xt = X.objs[t]

        def gk(y, k=k, s=s, t=t, Xt=Xt):
            gy = g0[s](y)
            z = X.map0(k, gy)
            # z ~ g f z ~ g(Y_k f g y) ~ g(Y_k y)
            w1 = Xt.v(hs[t](z))
            w2 = g1[t](Y.objs[t].v(f.nat[k](gy)))
            w3 = g1[t](Y.map1(k, ks[s](y)))
            return Xt.m(Xt.m(w1, w2), w3)
        nat.append(gk)
    inv = DiagMor(Y, X, g0, g1, nat, check=False)
    return Verdict(True, {"inverse": inv, "gf_id": DiagEqWitness([h.h for h in hs]),
                          "fg_id": DiagEqWitness([k.h for k in ks])})


def quotient_functor(X):
    """The plain diagram of quotient sets: (class counts, class maps per arrow)."""
    A = X.shape
    sizes = [X.objs[a].n_classes() for a in range(A.n_objects)]
    maps = [quotient_map(X.arrs[f]) for f in range(A.n_arrows)]
    return sizes, maps


def quotient_of_mor(f):
    return [quotient_map(f.component(a)) for a in range(f.shape.n_objects)]


# -- finite limits ------------------------------------------------------------------------

def pullback_eex(f, g):
    """Pullback of f: X -> Z and g: Y -> Z.

    Carrier: triples (x, y, zeta) with zeta a witness from f0 x to g0 y;
    witnesses: pairs of witnesses in X and Y.  Returns the setoid, the two
    projections and a factorizer taking (a: W -> X, b: W -> Y, c) where c(w)
    witnesses f0 a0 w ~ g0 b0 w.
    """
    if f.cod is not g.cod:
        raise SetoidError("pullback_eex: maps have different codomains")
    X, Y, Z = f.dom, g.dom, f.cod
    P0 = [(x, y, z) for x in X.X0 for y in Y.X0 for z in Z.witnesses(f.f0(x), g.f0(y))]
    P = FiberedSetoid(P0, [X, Y], [lambda p: p[0], lambda p: p[1]], name="pullback")
    px = MorRep(P, X, lambda p: p[0], lambda w: w[2][0], check=False)
    py = MorRep(P, Y, lambda p: p[1], lambda w: w[2][1], check=False)

    def factor(a, b, c):
        W = a.dom
        f0 = tab(lambda w: (a.f0(w), b.f0(w), Z.canon(c(w))))
        f1 = lambda w: (f0(W.s(w)), f0(W.t(w)), (a.f1(w), b.f1(w)))
        return MorRep(W, P, f0, f1, check=False)

    return P, px, py, factor


def product_diag(X, Y):
    """Pointwise product with its two projections."""
    if X.shape is not Y.shape:
        raise DiagramError("product_diag: shapes differ")
    A = X.shape
    objs = [product_setoid([X.objs[a], Y.objs[a]]) for a in range(A.n_objects)]
    arrs = []
    for f, (s, t, _) in enumerate(A.arrows):
        P, Q = objs[s], objs[t]
        xf, yf = X.arrs[f], Y.arrs[f]
        arrs.append(MorRep(P, Q, lambda p, xf=xf, yf=yf: (xf.f0(p[0]), yf.f0(p[1])),
                           lambda w, xf=xf, yf=yf: ((xf.f0(w[0][0]), yf.f0(w[0][1])),
                                                    (xf.f0(w[1][0]), yf.f0(w[1][1])),
                                                    (xf.f1(w[2][0]), yf.f1(w[2][1]))),
                           check=False))
    refl = [(lambda p, a=a: (p, (X.map0(A.ident[a], p[0]), Y.map0(A.ident[a], p[1])),
                             (X.refl[a](p[0]), Y.refl[a](p[1]))))
            for a in range(A.n_objects)]
    comp = {}
    for f, g in A.composable_pairs():
        gf = A.compose(g, f)
        cx, cy = X.comp[(f, g)], Y.comp[(f, g)]
        comp[(f, g)] = (lambda p, f=f, g=g, gf=gf, cx=cx, cy=cy:
                        ((X.map0(g, X.map0(f, p[0])), Y.map0(g, Y.map0(f, p[1]))),
                         (X.map0(gf, p[0]), Y.map0(gf, p[1])), (cx(p[0]), cy(p[1]))))
    prod = CoherentDiagram(A, objs, arrs, refl, comp, check=False)
    projs = []
    for side, D in ((0, X), (1, Y)):
        c0 = [lambda p, side=side: p[side]] * A.n_objects
        c1 = [lambda w, side=side: w[2][side]] * A.n_objects
        nat = [(lambda p, f=f, D=D, side=side: D.objs[A.dst(f)].r(D.map0(f, p[side])))
               for f in range(A.n_arrows)]
        projs.append(DiagMor(prod, D, c0, c1, nat, check=False))
    return prod, projs[0], projs[1]


def pair_into_product(f, g, prod):
    """The morphism W -> X x Y with components (f, g)."""
    A = f.shape
    c0 = [(lambda w, a=a: (f.c0[a](w), g.c0[a](w))) for a in range(A.n_objects)]
    c1 = []
    for a in range(A.n_objects):
        W = f.dom.objs[a]
        c1.append(lambda w, a=a, W=W: ((f.c0[a](W.s(w)), g.c0[a](W.s(w))),
                                       (f.c0[a](W.t(w)), g.c0[a](W.t(w))),
                                       (f.c1[a](w), g.c1[a](w))))
    nat = []
    for k, (s, t, _) in enumerate(A.arrows):
        def nk(w, k=k, s=s, t=t):
            src = (f.cod.map0(k, f.c0[s](w)), g.cod.map0(k, g.c0[s](w)))
            dst = (f.c0[t](f.dom.map0(k, w)), g.c0[t](g.dom.map0(k, w)))
            return (src, dst, (f.nat[k](w), g.nat[k](w)))
        nat.append(nk)
    return DiagMor(f.dom, prod, c0, c1, nat, check=False)


def map_product(f, g, XY, XY2):
    """f x g between product diagrams."""
    A = f.shape
    c0 = [(lambda p, a=a: (f.c0[a](p[0]), g.c0[a](p[1]))) for a in range(A.n_objects)]
    c1 = [(lambda w, a=a: ((f.c0[a](w[0][0]), g.c0[a](w[0][1])),
                           (f.c0[a](w[1][0]), g.c0[a](w[1][1])),
                           (f.c1[a](w[2][0]), g.c1[a](w[2][1]))))
          for a in range(A.n_objects)]
    nat = []
    for k, (s, t, _) in enumerate(A.arrows):
        def nk(p, k=k, s=s, t=t):
            src = XY2.map0(k, c0[s](p))
            dst = c0[t](XY.map0(k, p))
            return (src, dst, (f.nat[k](p[0]), g.nat[k](p[1])))
        nat.append(nk)
    return DiagMor(XY, XY2, c0, c1, nat, check=False)


# -- lifting a morphism to a diagram over A x 2 --------------------------------------------

def lift_to_arrow(f, AxI, arrow_cat):
    """A diagram over A x ARROW whose restrictions are dom f, cod f and whose
    underlying morphism is f up to witness.

    Arrows of ``AxI`` are labelled ``(alpha, k)`` with ``k`` an arrow label of
    ``arrow_cat`` (two objects, one non-identity arrow).
    """
    A, X, Y = f.shape, f.dom, f.cod
    I = arrow_cat
    src_obj, dst_obj = I.objects
    e_lab = I.label(I.non_identity()[0])

    def side(o):
        return X if o[1] == src_obj else Y

    objs = [side(o).objs[A.index(o[0])] for o in AxI.objects]

    def rep(k):
        al, kl = AxI.label(k)
        fa = A.arrow(al)
        s = A.src(fa)
        if kl == e_lab:
            Ya = Y.arrs[fa]
            return MorRep(X.objs[s], Y.objs[A.dst(fa)], lambda x: Ya.f0(f.c0[s](x)),
                          lambda w: Ya.f1(f.c1[s](w)), check=False)
        return side(AxI.objects[AxI.src(k)]).arrs[fa]

    arrs = [rep(k) for k in range(AxI.n_arrows)]
    refl = [side(o).refl[A.index(o[0])] for o in AxI.objects]
    comp = {}
    for k1, k2 in AxI.composable_pairs():
        a1, l1 = AxI.label(k1)
        a2, l2 = AxI.label(k2)
        f1, f2 = A.arrow(a1), A.arrow(a2)
        if l1 != e_lab and l2 != e_lab:
            comp[(k1, k2)] = side(AxI.objects[AxI.src(k1)]).comp[(f1, f2)]
        elif l2 == e_lab:
            # (f1 within X) then (f2, e): Y_{f2} f X_{f1} ~ Y_{f2} Y_{f1} f ~ Y_{f2 f1} f
            s = A.src(f1)
            Yt = Y.objs[A.dst(f2)]
            cyy = Y.comp[(f1, f2)]
            comp[(k1, k2)] = (lambda x, f1=f1, f2=f2, s=s, Yt=Yt, cyy=cyy:
                              Yt.m(Yt.v(Y.map1(f2, f.nat[f1](x))), cyy(f.c0[s](x))))
        else:
            # (f1, e) then (f2 within Y): Y_{f2} Y_{f1} f ~ Y_{f2 f1} f
            s = A.src(f1)
            cyy = Y.comp[(f1, f2)]
            comp[(k1, k2)] = lambda x, s=s, cyy=cyy: cyy(f.c0[s](x))
    return CoherentDiagram(AxI, objs, arrs, refl, comp)


def underlying_mor(Z, A, AxI, arrow_cat, X, Y):
    """The morphism X -> Y carried by a diagram over A x ARROW whose two
    restrictions are (identical to) X and Y."""
    src_obj, dst_obj = arrow_cat.objects
    e_lab = arrow_cat.label(arrow_cat.non_identity()[0])
    id0 = arrow_cat.label(arrow_cat.ident[0])
    id1 = arrow_cat.label(arrow_cat.ident[1])
    diag = {}
    for a in range(A.n_objects):
        diag[a] = AxI.arrow((A.label(A.ident[a]), e_lab))
    c0 = [Z.arrs[diag[a]].f0 for a in range(A.n_objects)]
    c1 = [Z.arrs[diag[a]].f1 for a in range(A.n_objects)]
    nat = []
    for k, (s, t, lab) in enumerate(A.arrows):
        k_top = AxI.arrow((lab, id0))
        k_bot = AxI.arrow((lab, id1))
        first = Z.comp[(diag[s], k_bot)]     # Y_k Z_e ~ Z_(k, e)
        second = Z.comp[(k_top, diag[t])]    # Z_e X_k ~ Z_(k, e)
        Yt = Y.objs[t]
        nat.append(lambda x, first=first, second=second, Yt=Yt: Yt.m(first(x), Yt.v(second(x))))
    return DiagMor(X, Y, c0, c1, nat, check=False)
