"""Limits, colimits and pointwise Kan extensions of coherent diagrams.

Colimits have the free setoid on "arrow witnesses" as their witness object;
limits are compatible families with a chosen witness per arrow.  Kan
extensions are limits and colimits over comma categories.  Everything is
memoized by the identity of the input data, so that constructions reached by
different routes (``p^* u^*`` versus ``(u p)^*``) share their results and
morphisms between them compose.
"""

from itertools import product as iproduct

from .coherent import (CoherentDiagram, DiagMor, DiagramError, compose_all, compose_diag,
                       constant, diagram_key, equal_diag, identity_diag, induced_diag_mor,
                       is_iso_diag, lift_to_arrow, product_diag, restrict, restrict_mor,
                       same_diagram, tab, underlying_mor, whisker)
from .fincat import (Functor, comma, coproduct, full_subcategory, identity_functor, ob_discrete,
                     point, product, terminal, to_terminal)
from .setoid import (FiberedSetoid, FreeSetoid, MorRep, coproduct_setoid, free_extend,
                     induced_mor, is_iso, product_setoid)
from .verdict import Verdict


# -- colimits ---------------------------------------------------------------------------

class Colimit:
    """Colimit of a coherent diagram X over A.

    Carrier: pairs ``(a, x)``.  Generators: ``(f, x, x2, w)`` for an arrow
    ``f: a -> a2``, ``x`` in ``X_a`` and ``w`` a witness in ``X_a2`` from
    ``X_f(x)`` to ``x2``.
    """

    def __init__(self, X):
        self.X = X
        A = X.shape
        C0 = [(a, x) for a in range(A.n_objects) for x in X.objs[a].X0]

        def ends(g):
            f = g[0]
            return (A.src(f), g[1]), (A.dst(f), g[2])

        def gens(cap):
            out = []
            for f, (a, a2, _) in enumerate(A.arrows):
                Xa, Xb = X.objs[a], X.objs[a2]
                for x in Xa.X0:
                    y = X.map0(f, x)
                    for x2 in Xb.X0:
                        for w in Xb.witnesses(y, x2):
                            out.append((f, x, x2, w))
            if cap is not None:
                seen = set(out)
                for f, (a, a2, _) in enumerate(A.arrows):
                    Xb = X.objs[a2]
                    by_src = {}
                    for w in Xb.enum_x1(cap):
                        by_src.setdefault(Xb.s(w), []).append(w)
                    for x in X.objs[a].X0:
                        for w in by_src.get(X.map0(f, x), ()):
                            g = (f, x, Xb.t(w), w)
                            if g not in seen:
                                seen.add(g)
                                out.append(g)
            return out

        def is_gen(g):
            if not (isinstance(g, tuple) and len(g) == 4):
                return False
            f, x, x2, w = g
            if not (isinstance(f, int) and 0 <= f < A.n_arrows):
                return False
            Xb = X.objs[A.dst(f)]
            return (x in X.objs[A.src(f)] and Xb.is_x1(w) and Xb.s(w) == X.map0(f, x)
                    and Xb.t(w) == x2)

        self.C = FreeSetoid(C0, ends, gens, is_gen, name="colim")
        self._unit = None

    def unit(self):
        """X -> p^* C."""
        if self._unit is None:
            X, C, A = self.X, self.C, self.X.shape
            c0 = [(lambda x, a=a: (a, x)) for a in range(A.n_objects)]
            c1 = []
            for a in range(A.n_objects):
                Xa, ida, refl = X.objs[a], A.ident[a], X.refl[a]
                c1.append(lambda w, Xa=Xa, ida=ida, refl=refl:
                          C.eta((ida, Xa.s(w), Xa.t(w), Xa.m(Xa.v(refl(Xa.s(w))), w))))
            nat = []
            for f, (a, a2, _) in enumerate(A.arrows):
                Xb = X.objs[a2]
                nat.append(lambda x, f=f, Xb=Xb: C.eta((f, x, X.map0(f, x), Xb.r(X.map0(f, x)))))
            self._unit = DiagMor(X, constant(C, A), c0, c1, nat, check=False)
        return self._unit

    def factor(self, phi, Z=None):
        """The representative C -> Z of a cocone phi: X -> p^* Z."""
        A = self.X.shape
        Z = Z if Z is not None else phi.cod.objs[0]
        f0 = lambda p: phi.c0[p[0]](p[1])
        g = lambda gen: Z.m(phi.nat[gen[0]](gen[1]), phi.c1[A.dst(gen[0])](gen[3]))
        return free_extend(self.C, Z, f0, g, check=False)


_COLIMITS = {}


def colimit(X):
    key = diagram_key(X)
    hit = _COLIMITS.get(key)
    if hit is None:
        hit = (X, Colimit(X))
        _COLIMITS[key] = hit
    return hit[1]


def colimit_over(A, X):
    """(C, unit X -> p^* C, factorizer)."""
    if X.shape is not A:
        raise DiagramError("colimit_over: diagram is not over the given shape")
    col = colimit(X)
    return col.C, col.unit(), col.factor


def colim_map(phi):
    """The representative colim(X) -> colim(X') induced by phi: X -> X'."""
    CX, CY = colimit(phi.dom), colimit(phi.cod)
    A, Y = phi.shape, phi.cod
    f0 = lambda p: (p[0], phi.c0[p[0]](p[1]))

    def gen(g):
        f, x, x2, w = g
        a, a2 = A.src(f), A.dst(f)
        Yb = Y.objs[a2]
        return (f, phi.c0[a](x), phi.c0[a2](x2), Yb.m(phi.nat[f](x), phi.c1[a2](w)))

    f1 = lambda word: (f0(word[0]), tuple((gen(g), d) for g, d in word[1]))
    return MorRep(CX.C, CY.C, f0, f1, check=False)


def colim_reindex(c, X, Xc=None):
    """colim(c^* X) -> colim(X) for a functor c into the shape of X."""
    Xc = Xc if Xc is not None else restrict(c, X)
    src, dst = colimit(Xc), colimit(X)
    f0 = lambda p: (c(p[0]), p[1])
    f1 = lambda word: (f0(word[0]), tuple(((c.on_arrow(g[0]),) + g[1:], d) for g, d in word[1]))
    return MorRep(src.C, dst.C, f0, f1, check=False)


# -- limits -------------------------------------------------------------------------------

class Limit:
    """Limit of a coherent diagram Y over A.

    Carrier: pairs ``(ys, zs)`` with ``ys[a]`` in ``Y_a`` and ``zs[f]`` a
    witness from ``Y_f(ys[a])`` to ``ys[a2]`` for every arrow ``f: a -> a2``,
    drawn from the witness enumeration of ``Y_a2``.  Witnesses are families of
    witnesses, one per object.
    """

    def __init__(self, Y):
        self.Y = Y
        A = Y.shape
        n = A.n_objects
        later = [[] for _ in range(n)]
        for f, (a, b, _) in enumerate(A.arrows):
            later[max(a, b)].append(f)

        def families():
            fams = []

            def rec(j, ys):
                if j == n:
                    fams.append(tuple(ys))
                    return
                for y in Y.objs[j].X0:
                    ys.append(y)
                    if all(Y.objs[A.dst(f)].same_class(Y.map0(f, ys[A.src(f)]), ys[A.dst(f)])
                           for f in later[j]):
                        rec(j + 1, ys)
                    ys.pop()

            rec(0, [])
            return fams

        def carrier():
            L0 = []
            for ys in families():
                lists = [Y.objs[b].witnesses(Y.map0(f, ys[a]), ys[b])
                         for f, (a, b, _) in enumerate(A.arrows)]
                L0.extend((ys, zs) for zs in iproduct(*lists))
            return L0

        def member(l):
            if not (isinstance(l, tuple) and len(l) == 2 and len(l[0]) == n
                    and len(l[1]) == A.n_arrows):
                return False
            ys, zs = l
            if any(y not in Y.objs[a] for a, y in enumerate(ys)):
                return False
            return all(z in Y.objs[b].witnesses(Y.map0(f, ys[a]), ys[b])
                       for f, ((a, b, _), z) in enumerate(zip(A.arrows, zs)))

        proj = [(lambda l, j=j: l[0][j]) for j in range(n)]
        self.L = FiberedSetoid(carrier, Y.objs, proj, name="lim", member=member)
        self._counit = None

    def counit(self):
        """p^* L -> Y (projections)."""
        if self._counit is None:
            A = self.Y.shape
            c0 = [(lambda l, a=a: l[0][a]) for a in range(A.n_objects)]
            c1 = [(lambda w, a=a: w[2][a]) for a in range(A.n_objects)]
            nat = [(lambda l, f=f: l[1][f]) for f in range(A.n_arrows)]
            self._counit = DiagMor(constant(self.L, A), self.Y, c0, c1, nat, check=False)
        return self._counit

    def factor(self, phi, W=None):
        """The representative W -> L of a cone phi: p^* W -> Y."""
        A, Y = self.Y.shape, self.Y
        W = W if W is not None else phi.dom.objs[0]

        def f0(w):
            ys = tuple(phi.c0[a](w) for a in range(A.n_objects))
            zs = tuple(Y.objs[A.dst(f)].canon(phi.nat[f](w)) for f in range(A.n_arrows))
            return (ys, zs)
        f0 = tab(f0)
        f1 = lambda w: (f0(W.s(w)), f0(W.t(w)), tuple(phi.c1[a](w) for a in range(A.n_objects)))
        return MorRep(W, self.L, f0, f1, check=False)


_LIMITS = {}


def limit(Y):
    key = diagram_key(Y)
    hit = _LIMITS.get(key)
    if hit is None:
        hit = (Y, Limit(Y))
        _LIMITS[key] = hit
    return hit[1]


def limit_over(A, Y):
    """(L, counit p^* L -> Y, factorizer)."""
    if Y.shape is not A:
        raise DiagramError("limit_over: diagram is not over the given shape")
    lim = limit(Y)
    return lim.L, lim.counit(), lim.factor


def lim_map(phi):
    """lim(Y) -> lim(Y') induced by phi: Y -> Y'."""
    LX, LY = limit(phi.dom), limit(phi.cod)
    A, Y2 = phi.shape, phi.cod

    def f0(l):
        ys, zs = l
        ys2 = tuple(phi.c0[a](y) for a, y in enumerate(ys))
        zs2 = []
        for f, (a, b, _) in enumerate(A.arrows):
            Yb = Y2.objs[b]
            zs2.append(Yb.canon(Yb.m(phi.nat[f](ys[a]), phi.c1[b](zs[f]))))
        return (ys2, tuple(zs2))
    f0 = tab(f0)
    f1 = lambda w: (f0(w[0]), f0(w[1]), tuple(phi.c1[a](c) for a, c in enumerate(w[2])))
    return MorRep(LX.L, LY.L, f0, f1, check=False)


def lim_reindex(c, Y, Yc=None):
    """lim(Y) -> lim(c^* Y) for a functor c into the shape of Y."""
    Yc = Yc if Yc is not None else restrict(c, Y)
    src, dst = limit(Y), limit(Yc)
    J = c.dom
    f0 = lambda l: (tuple(l[0][c(j)] for j in range(J.n_objects)),
                    tuple(l[1][c.on_arrow(k)] for k in range(J.n_arrows)))
    f1 = lambda w: (f0(w[0]), f0(w[1]), tuple(w[2][c(j)] for j in range(J.n_objects)))
    return MorRep(src.L, dst.L, f0, f1, check=False)


# -- Kan extensions --------------------------------------------------------------------------

class LeftKan:
    """u_! X computed pointwise as colimits over the commas (u/b)."""

    def __init__(self, u, X):
        self.u, self.X = u, X
        A, B = u.dom, u.cod
        one = terminal()
        self.commas = [comma(u, point(B, B.objects[b], one)) for b in range(B.n_objects)]
        self.pieces = [restrict(K[1], X) for K in self.commas]
        cols = [colimit(P) for P in self.pieces]
        self.cols = cols
        arrs, self.moves = [], []
        for beta, (b, b2, _) in enumerate(B.arrows):
            c = self._move(beta)
            self.moves.append(c)
            arrs.append(colim_reindex(c, self.pieces[b2], self.pieces[b]))
        objs = [col.C for col in cols]
        comp = {}
        for f, g in B.composable_pairs():
            T = objs[B.dst(g)]
            comp[(f, g)] = lambda x, f=f, g=g, T=T: T.r(arrs[g].f0(arrs[f].f0(x)))
        self.diagram = CoherentDiagram(B, objs, arrs, [C.r for C in objs], comp, check=False)
        # the object (a, *, 1_{ua}) of (u/ua)
        self.home = []
        for a in range(A.n_objects):
            K = self.commas[u(a)][0]
            self.home.append(K.index((A.objects[a], "*", B.label(B.ident[u(a)]))))

    def _move(self, beta):
        """(u/b) -> (u/b2): postcompose with beta."""
        B = self.u.cod
        b, b2 = B.src(beta), B.dst(beta)
        K, K2 = self.commas[b][0], self.commas[b2][0]

        def ob(o):
            return (o[0], o[1], B.label(B.compose(beta, B.arrow(o[2]))))

        return Functor.build(K, K2, ob, lambda f: (f[0], f[1], ob(f[2]), ob(f[3])), check=False)

    def unit(self):
        """X -> u^* u_! X."""
        u, X = self.u, self.X
        A, B = u.dom, u.cod
        D = self.diagram
        c0 = [(lambda x, a=a: (self.home[a], x)) for a in range(A.n_objects)]
        c1 = []
        for a in range(A.n_objects):
            C, j = self.cols[u(a)].C, self.home[a]
            K = self.commas[u(a)][0]
            Xa, refl = X.objs[a], X.refl[a]
            c1.append(lambda w, C=C, j=j, K=K, Xa=Xa, refl=refl:
                      C.eta((K.ident[j], Xa.s(w), Xa.t(w), Xa.m(Xa.v(refl(Xa.s(w))), w))))
        nat = []
        for f, (a, a2, lab) in enumerate(A.arrows):
            ua2 = u(a2)
            K, C = self.commas[ua2][0], self.cols[ua2].C
            src = (A.objects[a], "*", B.label(u.on_arrow(f)))
            dst = K.objects[self.home[a2]]
            k = K.arrow((lab, "id_*", src, dst))
            Xb = X.objs[a2]
            nat.append(lambda x, k=k, f=f, C=C, Xb=Xb: C.eta((k, x, X.map0(f, x), Xb.r(X.map0(f, x)))))
        return DiagMor(X, restrict(u, D), c0, c1, nat, check=False)


_LEFT = {}


def left_kan_data(u, X):
    key = (u, diagram_key(X))
    hit = _LEFT.get(key)
    if hit is None:
        hit = (u, X, LeftKan(u, X))
        _LEFT[key] = hit
    return hit[2]


def left_kan(u, X):
    """u_! X as a coherent diagram over the codomain of u."""
    if u.dom is not X.shape:
        raise DiagramError("left_kan: functor domain is not the diagram shape")
    return left_kan_data(u, X).diagram


def lk_unit(u, X):
    return left_kan_data(u, X).unit()


def lk_map(u, phi):
    """u_! phi"""
    LX, LY = left_kan_data(u, phi.dom), left_kan_data(u, phi.cod)
    B = u.cod
    c0, c1 = [], []
    for b in range(B.n_objects):
        rep = colim_map(restrict_mor(LX.commas[b][1], phi))
        c0.append(rep.f0)
        c1.append(rep.f1)
    nat = [(lambda z, beta=beta: LY.diagram.objs[B.dst(beta)].r(
        LY.diagram.map0(beta, c0[B.src(beta)](z)))) for beta in range(B.n_arrows)]
    return DiagMor(LX.diagram, LY.diagram, c0, c1, nat, check=False)


def lk_counit(u, Y):
    """u_! u^* Y -> Y."""
    uY = restrict(u, Y)
    LK = left_kan_data(u, uY)
    B = u.cod
    c0, c1 = [], []
    for b in range(B.n_objects):
        K, p = LK.commas[b][0], LK.commas[b][1]
        piece = LK.pieces[b]
        Yb = Y.objs[b]
        gam = [B.arrow(o[2]) for o in K.objects]
        cc0 = [(lambda y, g=g: Y.map0(g, y)) for g in gam]
        cc1 = [(lambda w, g=g: Y.map1(g, w)) for g in gam]
        cnat = []
        for k, (j, j2, _) in enumerate(K.arrows):
            ua = u.on_arrow(p.on_arrow(k))
            wit = Y.comp[(ua, gam[j2])]
            cnat.append(lambda y, wit=wit, Yb=Yb: Yb.v(wit(y)))
        cocone = DiagMor(piece, constant(Yb, K), cc0, cc1, cnat, check=False)
        rep = LK.cols[b].factor(cocone, Yb)
        c0.append(rep.f0)
        c1.append(rep.f1)
    nat = []
    for beta, (b, b2, _) in enumerate(B.arrows):
        K = LK.commas[b][0]
        nat.append(lambda z, beta=beta, K=K: Y.comp[(B.arrow(K.objects[z[0]][2]), beta)](z[1]))
    return DiagMor(LK.diagram, Y, c0, c1, nat, check=False)


class RightKan:
    """u_* X computed pointwise as limits over the commas (b/u)."""

    def __init__(self, u, X):
        self.u, self.X = u, X
        A, B = u.dom, u.cod
        one = terminal()
        self.commas = [comma(point(B, B.objects[b], one), u) for b in range(B.n_objects)]
        self.pieces = [restrict(K[2], X) for K in self.commas]
        self.lims = [limit(P) for P in self.pieces]
        arrs = []
        for beta, (b, b2, _) in enumerate(B.arrows):
            d = self._move(beta)
            arrs.append(lim_reindex(d, self.pieces[b], self.pieces[b2]))
        objs = [lim.L for lim in self.lims]
        comp = {}
        for f, g in B.composable_pairs():
            T = objs[B.dst(g)]
            comp[(f, g)] = lambda x, f=f, g=g, T=T: T.r(arrs[g].f0(arrs[f].f0(x)))
        self.diagram = CoherentDiagram(B, objs, arrs, [L.r for L in objs], comp, check=False)
        self.home = []
        for a in range(A.n_objects):
            K = self.commas[u(a)][0]
            self.home.append(K.index(("*", A.objects[a], B.label(B.ident[u(a)]))))

    def _move(self, beta):
        """(b2/u) -> (b/u): precompose with beta."""
        B = self.u.cod
        b, b2 = B.src(beta), B.dst(beta)
        K, K2 = self.commas[b][0], self.commas[b2][0]

        def ob(o):
            return (o[0], o[1], B.label(B.compose(B.arrow(o[2]), beta)))

        return Functor.build(K2, K, ob, lambda f: (f[0], f[1], ob(f[2]), ob(f[3])), check=False)

    def counit(self):
        """u^* u_* X -> X."""
        u, X = self.u, self.X
        A, B = u.dom, u.cod
        c0 = [(lambda l, a=a: l[0][self.home[a]]) for a in range(A.n_objects)]
        c1 = [(lambda w, a=a: w[2][self.home[a]]) for a in range(A.n_objects)]
        nat = []
        for f, (a, a2, lab) in enumerate(A.arrows):
            K = self.commas[u(a)][0]
            src = K.objects[self.home[a]]
            dst = ("*", A.objects[a2], B.label(u.on_arrow(f)))
            k = K.arrow(("id_*", lab, src, dst))
            nat.append(lambda l, k=k: l[1][k])
        return DiagMor(restrict(u, self.diagram), X, c0, c1, nat, check=False)


_RIGHT = {}


def right_kan_data(u, X):
    key = (u, diagram_key(X))
    hit = _RIGHT.get(key)
    if hit is None:
        hit = (u, X, RightKan(u, X))
        _RIGHT[key] = hit
    return hit[2]


def right_kan(u, X):
    """u_* X as a coherent diagram over the codomain of u."""
    if u.dom is not X.shape:
        raise DiagramError("right_kan: functor domain is not the diagram shape")
    return right_kan_data(u, X).diagram


def rk_counit(u, X):
    return right_kan_data(u, X).counit()


def rk_map(u, phi):
    """u_* phi"""
    RX, RY = right_kan_data(u, phi.dom), right_kan_data(u, phi.cod)
    B = u.cod
    c0, c1 = [], []
    for b in range(B.n_objects):
        rep = lim_map(restrict_mor(RX.commas[b][2], phi))
        c0.append(rep.f0)
        c1.append(rep.f1)
    nat = [(lambda z, beta=beta: RY.diagram.objs[B.dst(beta)].r(
        RY.diagram.map0(beta, c0[B.src(beta)](z)))) for beta in range(B.n_arrows)]
    return DiagMor(RX.diagram, RY.diagram, c0, c1, nat, check=False)


def rk_unit(u, Y):
    """Y -> u_* u^* Y."""
    uY = restrict(u, Y)
    RK = right_kan_data(u, uY)
    B = u.cod
    c0, c1 = [], []
    for b in range(B.n_objects):
        K, q = RK.commas[b][0], RK.commas[b][2]
        Yb = Y.objs[b]
        gam = [B.arrow(o[2]) for o in K.objects]
        cc0 = [(lambda y, g=g: Y.map0(g, y)) for g in gam]
        cc1 = [(lambda w, g=g: Y.map1(g, w)) for g in gam]
        cnat = []
        for k, (j, j2, _) in enumerate(K.arrows):
            ua = u.on_arrow(q.on_arrow(k))
            cnat.append(lambda y, wit=Y.comp[(gam[j], ua)]: wit(y))
        cone = DiagMor(constant(Yb, K), RK.pieces[b], cc0, cc1, cnat, check=False)
        rep = RK.lims[b].factor(cone, Yb)
        c0.append(rep.f0)
        c1.append(rep.f1)
    return _rk_unit_nat(u, Y, RK, c0, c1)


def _rk_unit_nat(u, Y, RK, c0, c1):
    A, B = u.dom, u.cod
    nat = []
    for beta, (b, b2, _) in enumerate(B.arrows):
        K2 = RK.commas[b2][0]

        def nb(y, beta=beta, K2=K2, b=b, b2=b2):
            s = RK.diagram.map0(beta, c0[b](y))
            t = c0[b2](Y.map0(beta, y))
            comps = []
            for o in K2.objects:
                g2 = B.arrow(o[2])
                comps.append(Y.objs[u(A.index(o[1]))].v(Y.comp[(beta, g2)](y)))
            return (s, t, tuple(comps))
        nat.append(nb)
    return DiagMor(Y, RK.diagram, c0, c1, nat, check=False)


# -- mates --------------------------------------------------------------------------------

def _square(square):
    p, q, u, v, cell = square
    if p.cod is not u.dom or q.cod is not v.dom or u.cod is not v.cod or p.dom is not q.dom:
        raise DiagramError("malformed square")
    if cell.u != p.then(u) or cell.v != q.then(v):
        raise DiagramError("square cell does not go from u p to v q")
    return p, q, u, v, cell


def mate_left(square, X):
    """q_! p^* X -> v^* u_! X for a square (p, q, u, v, cell: u p => v q)."""
    p, q, u, v, cell = _square(square)
    LX = left_kan(u, X)
    first = lk_map(q, restrict_mor(p, lk_unit(u, X)))
    second = lk_map(q, whisker(cell, LX))
    third = lk_counit(q, restrict(v, LX))
    return compose_all(first, second, third)


def mate_right(square, Y):
    """u^* v_* Y -> p_* q^* Y for a square (p, q, u, v, cell: u p => v q)."""
    p, q, u, v, cell = _square(square)
    RY = right_kan(v, Y)
    first = rk_unit(p, restrict(u, RY))
    second = rk_map(p, whisker(cell, RY))
    third = rk_map(p, restrict_mor(q, rk_counit(v, Y)))
    return compose_all(first, second, third)


def comma_square(u, v):
    K, p, q, cell = comma(u, v)
    return p, q, u, v, cell


def check_mate(square, X, side="left"):
    m = mate_left(square, X) if side == "left" else mate_right(square, X)
    m.validate()
    vd = is_iso_diag(m)
    return Verdict(vd.holds, {"mate": m, **vd.payload}, vd.detail)


# -- discrete targets --------------------------------------------------------------------

def _fiber(u, i):
    A = u.dom
    objs = [a for a in range(A.n_objects) if u(a) == i]
    F = full_subcategory(A, objs)
    incl = Functor(F, A, objs, [A.arrow(F.label(k)) for k in range(F.n_arrows)], check=False)
    return F, incl


def _fiber_to_comma(u, i, F, incl, K, left):
    """The isomorphism from the fiber of u over i onto the comma (u/i) or (i/u)."""
    B = u.cod
    idl = B.label(B.ident[i])

    def ob(o):
        return (o, "*", idl) if left else ("*", o, idl)

    def ar(f):
        a1, a2 = F.objects[F.src(F.arrow(f))], F.objects[F.dst(F.arrow(f))]
        return (f, "id_*", ob(a1), ob(a2)) if left else ("id_*", f, ob(a1), ob(a2))

    return Functor.build(F, K, ob, ar, check=False)


def kan_fast_path(u, X, side="left"):
    """Per object i of a discrete target: the setoid computed over the fiber
    u^{-1}(i) (a plain coproduct or product when the fiber is discrete), and an
    iso verdict against the pointwise comma computation."""
    B = u.cod
    if not B.is_discrete:
        raise DiagramError("kan_fast_path needs a discrete target")
    data = left_kan_data(u, X) if side == "left" else right_kan_data(u, X)
    out = []
    for i in range(B.n_objects):
        F, incl = _fiber(u, i)
        Xi = restrict(incl, X)
        K = data.commas[i][0]
        c = _fiber_to_comma(u, i, F, incl, K, side == "left")
        piece = data.pieces[i]
        if side == "left":
            target = data.cols[i].C
            if F.is_discrete:
                fast = coproduct_setoid(Xi.objs)

                def f0(p, c=c):
                    return (c(p[0]), p[1])

                def f1(w, c=c, Xi=Xi, target=target, F=F):
                    k, wi = w
                    Xa, refl = Xi.objs[k], Xi.refl[k]
                    return target.eta((data.commas[i][0].ident[c(k)], Xa.s(wi), Xa.t(wi),
                                       Xa.m(Xa.v(refl(Xa.s(wi))), wi)))
                cmp = MorRep(fast, target, f0, f1, check=False)
            else:
                fast = colimit(Xi).C
                cmp = colim_reindex(c, piece, Xi)
        else:
            src = data.lims[i].L
            if F.is_discrete:
                fast = product_setoid(Xi.objs)
                first = {}
                for l in src.X0:
                    first.setdefault(tuple(l[0][c(k)] for k in range(F.n_objects)), l)
                cmp = induced_mor(fast, src, first.__getitem__, check=False)
            else:
                fast = limit(Xi).L
                cmp = lim_reindex(c, piece, Xi)
        cmp.validate()
        vd = is_iso(cmp)
        out.append((fast, cmp, vd))
    holds = all(vd.holds for _, _, vd in out)
    return Verdict(holds, {"fibers": out},
                   "" if holds else "; ".join(f"{B.objects[i]}: {vd.detail}"
                                              for i, (_, _, vd) in enumerate(out) if not vd))


# -- distributivity -----------------------------------------------------------------------

def distributivity_check(X, Y, u):
    """u_!(X x u^*Y) -> u_!X x Y is invertible, for u into a discrete category."""
    I = u.cod
    if not I.is_discrete:
        raise DiagramError("distributivity_check needs a discrete target")
    XY, _, _ = product_diag(X, restrict(u, Y))
    lhs_data = left_kan_data(u, XY)
    lhs = lhs_data.diagram
    LX = left_kan(u, X)
    rhs, _, _ = product_diag(LX, Y)
    c0 = []
    for i in range(I.n_objects):
        K = lhs_data.commas[i][0]

        def f(z, K=K, i=i):
            j, (x, y) = z
            g = I.arrow(K.objects[j][2])
            return ((j, x), Y.map0(g, y))
        c0.append(f)
    phi = induced_diag_mor(lhs, rhs, c0)
    phi.validate()
    vd = is_iso_diag(phi)
    sizes = ([o.n_classes() for o in lhs.objs], [o.n_classes() for o in rhs.objs])
    return Verdict(vd.holds, {"map": phi, "sizes": sizes, **vd.payload},
                   f"classes {sizes[0]} vs {sizes[1]}" + (f"; {vd.detail}" if vd.detail else ""))


# -- the derivator axioms ----------------------------------------------------------------

def glue(S, incA, incB, XA, XB):
    """The diagram over A + B with the given restrictions."""
    parts = (XA, XB)
    objs, arrs, refl, comp = [], [], [], {}
    for o in S.objects:
        D = parts[o[0]]
        a = D.shape.index(o[1])
        objs.append(D.objs[a])
        refl.append(D.refl[a])
    for k in range(S.n_arrows):
        tag, lab = S.label(k)
        D = parts[tag]
        arrs.append(D.arrs[D.shape.arrow(lab)])
    for f, g in S.composable_pairs():
        tag = S.label(f)[0]
        D = parts[tag]
        comp[(f, g)] = D.comp[(D.shape.arrow(S.label(f)[1]), D.shape.arrow(S.label(g)[1]))]
    return CoherentDiagram(S, objs, arrs, refl, comp, check=False)


def glue_mor(S, fA, fB):
    parts = (fA, fB)
    dom = glue(S, None, None, fA.dom, fB.dom)
    cod = glue(S, None, None, fA.cod, fB.cod)
    c0, c1, nat = [], [], []
    for o in S.objects:
        f = parts[o[0]]
        a = f.shape.index(o[1])
        c0.append(f.c0[a])
        c1.append(f.c1[a])
    for k in range(S.n_arrows):
        tag, lab = S.label(k)
        nat.append(parts[tag].nat[parts[tag].shape.arrow(lab)])
    return DiagMor(dom, cod, c0, c1, nat, check=False)


def _same_mor(f, g):
    return (same_diagram(f.dom, g.dom) and same_diagram(f.cod, g.cod)
            and all(x is y for x, y in zip(f.c0, g.c0)) and all(x is y for x, y in zip(f.nat, g.nat)))


def check_der1(A, B, XA, XB, fA=None, fB=None):
    """Eex(A + B) -> Eex(A) x Eex(B) is an equivalence: glueing is a strict
    inverse on objects and on morphisms."""
    S, incA, incB = coproduct(A, B)
    X = glue(S, incA, incB, XA, XB)
    X.validate()
    ok = same_diagram(restrict(incA, X), XA) and same_diagram(restrict(incB, X), XB)
    back = glue(S, incA, incB, restrict(incA, X), restrict(incB, X))
    ok = ok and same_diagram(back, X)
    if fA is not None:
        f = glue_mor(S, fA, fB)
        f.validate()
        ok = ok and _same_mor(restrict_mor(incA, f), fA) and _same_mor(restrict_mor(incB, f), fB)
    return Verdict(ok, {"glued": X}, "" if ok else "glueing is not inverse to restriction")


def check_der2(f):
    """is_iso_diag(f) agrees with isomorphism on underlying objects, and an
    inverse built from components is a genuine inverse."""
    D, incl = ob_discrete(f.shape)
    whole = is_iso_diag(f)
    parts = is_iso_diag(restrict_mor(incl, f))
    if whole.holds != parts.holds:
        return Verdict(False, {}, "conservativity fails")
    if whole.holds:
        g = whole.payload["inverse"]
        g.validate()
        if equal_diag(compose_diag(f, g), identity_diag(f.dom)) is None or \
                equal_diag(compose_diag(g, f), identity_diag(f.cod)) is None:
            return Verdict(False, {}, "constructed inverse is not an inverse")
    return Verdict(True, {"iso": whole.holds})


def check_der3(u, X=None, Y=None):
    """Triangle identities for u_! -| u^* (X over dom u, Y over cod u) and u^* -| u_*."""
    fails = []

    def same(f, D, name):
        f.validate()
        if equal_diag(f, identity_diag(D)) is None:
            fails.append(name)

    if X is not None:
        LX = left_kan(u, X)
        lk_unit(u, X).validate()
        same(compose_diag(lk_map(u, lk_unit(u, X)), lk_counit(u, LX)), LX, "left/outer")
        RX = right_kan(u, X)
        rk_counit(u, X).validate()
        same(compose_diag(rk_unit(u, RX), rk_map(u, rk_counit(u, X))), RX, "right/outer")
    if Y is not None:
        uY = restrict(u, Y)
        lk_counit(u, Y).validate()
        same(compose_diag(lk_unit(u, uY), restrict_mor(u, lk_counit(u, Y))), uY, "left/inner")
        rk_unit(u, Y).validate()
        same(compose_diag(restrict_mor(u, rk_unit(u, Y)), rk_counit(u, uY)), uY, "right/inner")
    return Verdict(not fails, {"failed": fails}, ", ".join(fails))


def check_der4(u, b, X):
    """Mates for the comma squares (u/b) and (b/u) are invertible."""
    B = u.cod
    pt = point(B, B.objects[b], terminal())
    left = check_mate(comma_square(u, pt), X, "left")
    right = check_mate(comma_square(pt, u), X, "right")
    bad = [n for n, vd in (("left", left), ("right", right)) if not vd]
    return Verdict(not bad, {"left": left, "right": right}, ", ".join(bad))


def check_der5(f, arrow_cat):
    """A diagram over A x ARROW with restrictions dom f, cod f and underlying map f."""
    A = f.shape
    AxI = _arrow_product(A, arrow_cat)
    Z = lift_to_arrow(f, AxI, arrow_cat)
    i0 = Functor.build(A, AxI, lambda o: (o, arrow_cat.objects[0]),
                       lambda k: (k, arrow_cat.label(arrow_cat.ident[0])), check=False)
    i1 = Functor.build(A, AxI, lambda o: (o, arrow_cat.objects[1]),
                       lambda k: (k, arrow_cat.label(arrow_cat.ident[1])), check=False)
    ok = same_diagram(restrict(i0, Z), f.dom) and same_diagram(restrict(i1, Z), f.cod)
    g = underlying_mor(Z, A, AxI, arrow_cat, f.dom, f.cod)
    g.validate()
    ok = ok and equal_diag(g, f) is not None
    return Verdict(ok, {"lift": Z}, "" if ok else "lift does not recover the morphism")


_PRODUCTS = {}


def _arrow_product(A, I):
    key = (id(A), id(I))
    hit = _PRODUCTS.get(key)
    if hit is None or hit[0] is not A:
        hit = (A, product(A, I))
        _PRODUCTS[key] = hit
    return hit[1]


def check_stripped(X):
    """Colimit and limit of X agree with the stripped left and right Kan
    extensions along A -> ONE, through explicit comparison isos."""
    A = X.shape
    p = to_terminal(A, terminal())
    verdicts = []
    for left in (True, False):
        data = left_kan_data(p, X) if left else right_kan_data(p, X)
        K = data.commas[0][0]
        c = _fiber_to_comma(p, 0, A, identity_functor(A), K, left)
        cmp = colim_reindex(c, data.pieces[0], X) if left else lim_reindex(c, data.pieces[0], X)
        verdicts.append(is_iso(cmp))
    ok = all(verdicts)
    return Verdict(ok, {"left": verdicts[0], "right": verdicts[1]})


def verify_derivator_axioms(shapes, diagrams, functors, morphisms, arrow_cat, pairs=None):
    """Run Der1-Der5 over a finite corpus.

    ``diagrams`` and ``morphisms`` map names to objects; ``functors`` maps
    names to functors.  Returns a list of (check, instance, Verdict).
    """
    records = []

    def run(check, inst, fn):
        try:
            vd = fn()
        except (DiagramError, ValueError) as e:
            vd = Verdict(False, {}, f"error: {e}")
        records.append((check, inst, vd))
        return vd

    # invalid input is reported first and kept out of the axiom checks
    by_shape, good = {}, {}
    for name, X in diagrams.items():
        if run("validate", name, lambda: (X.validate(), Verdict(True))[1]):
            by_shape.setdefault(id(X.shape), []).append((name, X))
            good[name] = X
    diagrams = good
    valid_mors = {}
    for name, f in morphisms.items():
        if run("validate", name, lambda: (f.validate(), Verdict(True))[1]):
            valid_mors[name] = f
    morphisms = valid_mors

    shape_list = list(shapes.items())
    for (na, A), (nb, B) in (pairs if pairs is not None else
                             [(x, y) for x in shape_list for y in shape_list]):
        xs, ys = by_shape.get(id(A), []), by_shape.get(id(B), [])
        if xs and ys:
            (nx, XA), (ny, XB) = xs[0], ys[-1]
            run("der1", f"{na}+{nb}:{nx},{ny}",
                lambda: check_der1(A, B, XA, XB, identity_diag(XA), identity_diag(XB)))
    for name, f in morphisms.items():
        run("der2", name, lambda: check_der2(f))
    for un, u in functors.items():
        xs = by_shape.get(id(u.dom), [])
        ys = by_shape.get(id(u.cod), [])
        for k in range(max(len(xs), len(ys))):
            X = xs[k][1] if k < len(xs) else None
            Y = ys[k][1] if k < len(ys) else None
            inst = f"{un}:{xs[k][0] if X is not None else '-'},{ys[k][0] if Y is not None else '-'}"
            run("der3", inst, lambda: check_der3(u, X, Y))
        for xn, X in xs:
            for b in range(u.cod.n_objects):
                run("der4", f"{un}@{u.cod.objects[b]}:{xn}", lambda: check_der4(u, b, X))
    for name, f in morphisms.items():
        run("der5", name, lambda: check_der5(f, arrow_cat))
    for name, X in diagrams.items():
        run("stripped", name, lambda: check_stripped(X))
    return records
