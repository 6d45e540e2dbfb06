"""Finite categories given by explicit object, arrow and composition tables.

Objects and arrows are addressed by index.  Every object and arrow also has a
hashable label, which is how constructed categories (commas, Grothendieck
constructions, ...) remember where their cells came from.
"""

from collections import deque


class CategoryError(ValueError):
    pass


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        # keep the least index as root so representatives are canonical
        if rj < ri:
            ri, rj = rj, ri
        self.parent[rj] = ri
        return True

    def classes(self):
        """Component id per element, numbered in order of least member."""
        ids, out = {}, []
        for i in range(len(self.parent)):
            out.append(ids.setdefault(self.find(i), len(ids)))
        return out


class FinSet:
    """The set {0, ..., size-1}, optionally with distinct labels."""

    def __init__(self, size, labels=None):
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != size or len(set(labels)) != size:
                raise CategoryError("labels must be distinct and match size")
        self.size = size
        self.labels = labels

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def __eq__(self, other):
        return isinstance(other, FinSet) and (self.size, self.labels) == (other.size, other.labels)

    def __hash__(self):
        return hash((self.size, self.labels))

    def __repr__(self):
        return f"FinSet({self.size})"


class FinCat:
    """A finite category.

    ``arrows[i] = (src, dst, label)`` with object indices; ``ident[a]`` is the
    identity arrow at ``a``; ``comp[(g, f)]`` is the index of ``g . f`` and is
    defined exactly when ``dst(f) == src(g)``.
    """

    def __init__(self, objects, arrows, ident, comp, name=None, check=True):
        self.objects = tuple(objects)
        self.arrows = tuple(arrows)
        self.ident = tuple(ident)
        self.comp = dict(comp)
        self.name = name
        self._obj_index = {o: i for i, o in enumerate(self.objects)}
        self._arr_index = {a[2]: i for i, a in enumerate(self.arrows)}
        if len(self._obj_index) != len(self.objects):
            raise CategoryError("duplicate object labels")
        if len(self._arr_index) != len(self.arrows):
            raise CategoryError("duplicate arrow labels")
        self.out = [[] for _ in self.objects]
        self.inc = [[] for _ in self.objects]
        self.hom = {}
        for i, (s, t, _) in enumerate(self.arrows):
            self.out[s].append(i)
            self.inc[t].append(i)
            self.hom.setdefault((s, t), []).append(i)
        if check:
            self.validate()

    # -- construction helpers -------------------------------------------------

    @classmethod
    def build(cls, objects, arrows, identity, compose, name=None, check=True):
        """Build from labels.

        ``arrows`` is a list of ``(label, src_label, dst_label)``, ``identity``
        maps an object label to its identity arrow label and ``compose(g, f)``
        returns the label of ``g . f``.
        """
        objects = list(objects)
        oidx = {o: i for i, o in enumerate(objects)}
        arrs = [(oidx[s], oidx[t], lab) for lab, s, t in arrows]
        aidx = {a[2]: i for i, a in enumerate(arrs)}
        ident = [aidx[identity(o)] for o in objects]
        out = [[] for _ in objects]
        for i, (s, _, _) in enumerate(arrs):
            out[s].append(i)
        comp = {}
        for fi, (_, ft, flab) in enumerate(arrs):
            for gi in out[ft]:
                comp[(gi, fi)] = aidx[compose(arrs[gi][2], flab)]
        return cls(objects, arrs, ident, comp, name=name, check=check)

    # -- basic queries --------------------------------------------------------

    @property
    def n_objects(self):
        return len(self.objects)

    @property
    def n_arrows(self):
        return len(self.arrows)

    def index(self, label):
        """Object index of a label."""
        return self._obj_index[label]

    def arrow(self, label):
        """Arrow index of a label."""
        return self._arr_index[label]

    def src(self, f):
        return self.arrows[f][0]

    def dst(self, f):
        return self.arrows[f][1]

    def label(self, f):
        return self.arrows[f][2]

    def compose(self, g, f):
        """Index of g . f (f first)."""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise CategoryError(f"arrows {g}, {f} are not composable") from None

    def is_identity(self, f):
        return self.ident[self.src(f)] == f

    def non_identity(self):
        return [f for f in range(self.n_arrows) if not self.is_identity(f)]

    def composable_pairs(self):
        """All (f, g) with g . f defined, f first."""
        return [(f, g) for f in range(self.n_arrows) for g in self.out[self.dst(f)]]

    @property
    def is_discrete(self):
        return self.n_arrows == self.n_objects

    def validate(self):
        n = len(self.objects)
        for a in range(n):
            i = self.ident[a]
            if self.arrows[i][0] != a or self.arrows[i][1] != a:
                raise CategoryError(f"identity of object {self.objects[a]!r} is not an endo-arrow")
        for f, (s, t, _) in enumerate(self.arrows):
            for g in self.out[t]:
                if (g, f) not in self.comp:
                    raise CategoryError(f"composition undefined on composable pair "
                                        f"({self.label(g)!r}, {self.label(f)!r})")
                h = self.comp[(g, f)]
                if self.arrows[h][0] != s or self.arrows[h][1] != self.arrows[g][1]:
                    raise CategoryError(f"composite of ({self.label(g)!r}, {self.label(f)!r}) "
                                        "has wrong endpoints")
        for (g, f) in self.comp:
            if self.arrows[f][1] != self.arrows[g][0]:
                raise CategoryError(f"composition defined on non-composable pair "
                                    f"({self.label(g)!r}, {self.label(f)!r})")
        for f, (s, t, _) in enumerate(self.arrows):
            if self.comp[(self.ident[t], f)] != f or self.comp[(f, self.ident[s])] != f:
                raise CategoryError(f"identity law fails at arrow {self.label(f)!r}")
        for f, (_, t, _) in enumerate(self.arrows):
            for g in self.out[t]:
                gf = self.comp[(g, f)]
                for h in self.out[self.arrows[g][1]]:
                    if self.comp[(h, gf)] != self.comp[(self.comp[(h, g)], f)]:
                        raise CategoryError("associativity fails at "
                                            f"({self.label(h)!r}, {self.label(g)!r}, {self.label(f)!r})")

    def structure(self):
        """Label-free structural data, for comparing categories."""
        return (len(self.objects), tuple((s, t) for s, t, _ in self.arrows),
                self.ident, tuple(sorted(self.comp.items())))

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<FinCat{nm}: {self.n_objects} objects, {self.n_arrows} arrows>"


# -- small categories -----------------------------------------------------------

def from_presentation(objects, arrows, composites, name=None):
    """A category from non-identity arrows and their composition triples.

    ``arrows``: list of ``(label, src, dst)``; ``composites``: list of
    ``(g, f, h)`` meaning ``g . f = h``.  Identities are added with labels
    ``"id_<object>"``.  Every composable pair of non-identity arrows must be
    covered, otherwise the table is rejected as partial.
    """
    objects = list(objects)
    idl = {o: f"id_{o}" for o in objects}
    ends = {lab: (s, t) for lab, s, t in arrows}
    table = {}
    for g, f, h in composites:
        if g not in ends or f not in ends or h not in ends:
            raise CategoryError(f"composition triple mentions unknown arrow: {g} . {f} = {h}")
        if (g, f) in table:
            raise CategoryError(f"composite {g} . {f} given twice")
        table[(g, f)] = h
    for f, (_, ft) in ends.items():
        for g, (gs, _) in ends.items():
            if gs == ft and (g, f) not in table:
                raise CategoryError(f"partial composition table: {g} . {f} missing")
    for (g, f), h in table.items():
        if ends[f][1] != ends[g][0]:
            raise CategoryError(f"composite {g} . {f} given for non-composable pair")
        if ends[h] != (ends[f][0], ends[g][1]):
            raise CategoryError(f"composite {g} . {f} = {h} has wrong endpoints")
    ids = set(idl.values())

    def compose(g, f):
        if f in ids:
            return g
        if g in ids:
            return f
        return table[(g, f)]

    allarrows = [(idl[o], o, o) for o in objects] + list(arrows)
    return FinCat.build(objects, allarrows, idl.__getitem__, compose, name=name)


def discrete(n, name=None, labels=None):
    labels = list(labels) if labels is not None else [str(i) for i in range(n)]
    return from_presentation(labels, [], [], name=name or f"disc{n}")


_ONE = None


def terminal():
    """The terminal category (a shared instance)."""
    global _ONE
    if _ONE is None:
        _ONE = from_presentation(["*"], [], [], name="ONE")
    return _ONE


def opposite(C):
    arrows = [(t, s, ("op", lab)) for s, t, lab in C.arrows]
    comp = {(f, g): h for (g, f), h in C.comp.items()}
    return FinCat(C.objects, arrows, C.ident, comp, name=f"{C.name}^op" if C.name else None)


def product(A, B, name=None):
    """A x B with objects (a, b) and arrows (alpha, beta) as label pairs."""
    objects = [(a, b) for a in A.objects for b in B.objects]
    arrows = [((A.label(f), B.label(g)), (A.objects[A.src(f)], B.objects[B.src(g)]),
               (A.objects[A.dst(f)], B.objects[B.dst(g)]))
              for f in range(A.n_arrows) for g in range(B.n_arrows)]

    def identity(o):
        return (A.label(A.ident[A.index(o[0])]), B.label(B.ident[B.index(o[1])]))

    def compose(g, f):
        return (A.label(A.compose(A.arrow(g[0]), A.arrow(f[0]))),
                B.label(B.compose(B.arrow(g[1]), B.arrow(f[1]))))

    return FinCat.build(objects, arrows, identity, compose, name=name)


def coproduct(A, B, name=None):
    """A + B with labels tagged 0 and 1; returns the category and both inclusions."""
    objects = [(0, o) for o in A.objects] + [(1, o) for o in B.objects]
    arrows = []
    for tag, C in ((0, A), (1, B)):
        for s, t, lab in C.arrows:
            arrows.append(((tag, lab), (tag, C.objects[s]), (tag, C.objects[t])))
    cats = (A, B)

    def identity(o):
        C = cats[o[0]]
        return (o[0], C.label(C.ident[C.index(o[1])]))

    def compose(g, f):
        C = cats[f[0]]
        return (f[0], C.label(C.compose(C.arrow(g[1]), C.arrow(f[1]))))

    S = FinCat.build(objects, arrows, identity, compose, name=name)
    incA = Functor.build(A, S, lambda o: (0, o), lambda f: (0, f))
    incB = Functor.build(B, S, lambda o: (1, o), lambda f: (1, f))
    return S, incA, incB


def full_subcategory(C, objs, name=None):
    """Full subcategory on the given object indices (order preserved)."""
    keep = list(objs)
    pos = {a: i for i, a in enumerate(keep)}
    arrs, old = [], []
    for f, (s, t, lab) in enumerate(C.arrows):
        if s in pos and t in pos:
            old.append(f)
            arrs.append((pos[s], pos[t], lab))
    new = {f: i for i, f in enumerate(old)}
    ident = [new[C.ident[a]] for a in keep]
    comp = {}
    for f in old:
        for g in C.out[C.dst(f)]:
            if g in new:
                comp[(new[g], new[f])] = new[C.comp[(g, f)]]
    return FinCat([C.objects[a] for a in keep], arrs, ident, comp, name=name, check=False)


# -- functors and transformations -------------------------------------------------

class Functor:
    def __init__(self, dom, cod, obj_map, arr_map, check=True):
        self.dom = dom
        self.cod = cod
        self.obj_map = tuple(obj_map)
        self.arr_map = tuple(arr_map)
        if check:
            self.validate()

    @classmethod
    def build(cls, dom, cod, obj_fn, arr_fn, check=True):
        """From functions on labels."""
        om = [cod.index(obj_fn(o)) for o in dom.objects]
        am = [cod.arrow(arr_fn(lab)) for _, _, lab in dom.arrows]
        return cls(dom, cod, om, am, check=check)

    def __call__(self, a):
        return self.obj_map[a]

    def on_arrow(self, f):
        return self.arr_map[f]

    def validate(self):
        D, C = self.dom, self.cod
        if len(self.obj_map) != D.n_objects or len(self.arr_map) != D.n_arrows:
            raise CategoryError("functor tables have the wrong size")
        for f, (s, t, lab) in enumerate(D.arrows):
            g = self.arr_map[f]
            if C.src(g) != self.obj_map[s] or C.dst(g) != self.obj_map[t]:
                raise CategoryError(f"functor does not preserve endpoints of {lab!r}")
        for a in range(D.n_objects):
            if self.arr_map[D.ident[a]] != C.ident[self.obj_map[a]]:
                raise CategoryError(f"functor does not preserve identity at {D.objects[a]!r}")
        for (g, f), h in D.comp.items():
            if C.comp[(self.arr_map[g], self.arr_map[f])] != self.arr_map[h]:
                raise CategoryError(f"functor does not preserve composite {D.label(g)!r} . {D.label(f)!r}")

    def then(self, other):
        """other . self"""
        if other.dom is not self.cod:
            raise CategoryError("functors are not composable")
        return Functor(self.dom, other.cod, [other.obj_map[b] for b in self.obj_map],
                       [other.arr_map[g] for g in self.arr_map], check=False)

    def __eq__(self, other):
        return (isinstance(other, Functor) and self.dom is other.dom and self.cod is other.cod
                and self.obj_map == other.obj_map and self.arr_map == other.arr_map)

    def __hash__(self):
        return hash((id(self.dom), id(self.cod), self.obj_map, self.arr_map))

    def __repr__(self):
        return f"<Functor {self.dom!r} -> {self.cod!r}>"


def identity_functor(C):
    return Functor(C, C, range(C.n_objects), range(C.n_arrows), check=False)


def to_terminal(C, one):
    return Functor(C, one, [0] * C.n_objects, [one.ident[0]] * C.n_arrows)


def point(C, obj_label, one):
    """The functor ONE -> C picking an object."""
    a = C.index(obj_label)
    return Functor(one, C, [a], [C.ident[a]])


class NatTrans:
    """mu: u => v with component ``comps[a]``: u(a) -> v(a)."""

    def __init__(self, u, v, comps, check=True):
        if u.dom is not v.dom or u.cod is not v.cod:
            raise CategoryError("transformation between functors of different type")
        self.u, self.v, self.comps = u, v, tuple(comps)
        if check:
            self.validate()

    @property
    def dom(self):
        return self.u

    @property
    def cod(self):
        return self.v

    def __getitem__(self, a):
        return self.comps[a]

    def validate(self):
        A, C = self.u.dom, self.u.cod
        for a in range(A.n_objects):
            c = self.comps[a]
            if C.src(c) != self.u(a) or C.dst(c) != self.v(a):
                raise CategoryError(f"component at {A.objects[a]!r} has wrong endpoints")
        for f, (s, t, lab) in enumerate(A.arrows):
            lhs = C.compose(self.comps[t], self.u.on_arrow(f))
            rhs = C.compose(self.v.on_arrow(f), self.comps[s])
            if lhs != rhs:
                raise CategoryError(f"naturality fails at {lab!r}")

    def then(self, other):
        """Vertical composite: self first, then other."""
        C = self.u.cod
        return NatTrans(self.u, other.v, [C.compose(other.comps[a], self.comps[a])
                                          for a in range(self.u.dom.n_objects)])


def identity_trans(u):
    return NatTrans(u, u, [u.cod.ident[b] for b in u.obj_map], check=False)


# -- constructions ----------------------------------------------------------------

def comma(u, v):
    """The comma category (u/v) with projections p, q and the cell u p => v q.

    Objects are labelled ``(a, b, gamma)`` and arrows ``(alpha, beta, src, dst)``
    (all labels of the original categories).
    """
    if u.cod is not v.cod:
        raise CategoryError("comma: functors have different codomains")
    A, B, C = u.dom, v.dom, u.cod
    objs = []
    for a in range(A.n_objects):
        for b in range(B.n_objects):
            for g in C.hom.get((u(a), v(b)), ()):
                objs.append((a, b, g))
    lab = {o: (A.objects[o[0]], B.objects[o[1]], C.label(o[2])) for o in objs}
    arrows = []
    for (a, b, g) in objs:
        for (a2, b2, g2) in objs:
            for f in A.hom.get((a, a2), ()):
                for k in B.hom.get((b, b2), ()):
                    if C.compose(v.on_arrow(k), g) == C.compose(g2, u.on_arrow(f)):
                        arrows.append(((A.label(f), B.label(k), lab[(a, b, g)], lab[(a2, b2, g2)]),
                                       lab[(a, b, g)], lab[(a2, b2, g2)]))

    def identity(o):
        return (A.label(A.ident[A.index(o[0])]), B.label(B.ident[B.index(o[1])]), o, o)

    def compose(g2, f2):
        return (A.label(A.compose(A.arrow(g2[0]), A.arrow(f2[0]))),
                B.label(B.compose(B.arrow(g2[1]), B.arrow(f2[1]))), f2[2], g2[3])

    K = FinCat.build([lab[o] for o in objs], arrows, identity, compose, check=False)
    p = Functor.build(K, A, lambda o: o[0], lambda f: f[0], check=False)
    q = Functor.build(K, B, lambda o: o[1], lambda f: f[1], check=False)
    cell = NatTrans(p.then(u), q.then(v), [C.arrow(o[2]) for o in K.objects], check=False)
    return K, p, q, cell


class CatDiagram:
    """A strict functor A -> Cat: a FinCat per object and a Functor per arrow."""

    def __init__(self, shape, fibers, actions, check=True):
        self.shape = shape
        self.fibers = list(fibers)
        self.actions = list(actions)
        if check:
            self.validate()

    def validate(self):
        A = self.shape
        for f, (s, t, lab) in enumerate(A.arrows):
            F = self.actions[f]
            if F.dom is not self.fibers[s] or F.cod is not self.fibers[t]:
                raise CategoryError(f"action of {lab!r} has the wrong type")
        for a in range(A.n_objects):
            if self.actions[A.ident[a]] != identity_functor(self.fibers[a]):
                raise CategoryError(f"identity at {A.objects[a]!r} does not act as identity")
        for (g, f), h in A.comp.items():
            if self.actions[f].then(self.actions[g]) != self.actions[h]:
                raise CategoryError(f"action not strictly functorial at {A.label(g)!r} . {A.label(f)!r}")


def grothendieck(E):
    """The Grothendieck construction of a strict Cat-valued diagram.

    Objects ``(a, e)``; an arrow ``(a, e) -> (a2, e2)`` is ``(alpha, phi, src)``
    with ``phi: E_alpha(e) -> e2`` in the fiber over ``a2``.  Returns the total
    category and the projection to the shape.
    """
    A = E.shape
    objects = [(A.objects[a], Ea.objects[e]) for a, Ea in enumerate(E.fibers) for e in range(Ea.n_objects)]
    arrows = []
    for f, (a, a2, flab) in enumerate(A.arrows):
        act, Ea, Eb = E.actions[f], E.fibers[a], E.fibers[a2]
        for e in range(Ea.n_objects):
            fe = act(e)
            for phi in Eb.out[fe]:
                arrows.append(((flab, Eb.label(phi), (A.objects[a], Ea.objects[e])),
                               (A.objects[a], Ea.objects[e]), (A.objects[a2], Eb.objects[Eb.dst(phi)])))

    def identity(o):
        a = A.index(o[0])
        Ea = E.fibers[a]
        return (A.label(A.ident[a]), Ea.label(Ea.ident[Ea.index(o[1])]), o)

    def compose(g, f):
        fa = A.arrow(f[0])
        ga = A.arrow(g[0])
        Ec = E.fibers[A.dst(ga)]
        phi_g = Ec.arrow(g[1])
        Eb = E.fibers[A.dst(fa)]
        moved = E.actions[ga].on_arrow(Eb.arrow(f[1]))
        return (A.label(A.compose(ga, fa)), Ec.label(Ec.compose(phi_g, moved)), f[2])

    T = FinCat.build(objects, arrows, identity, compose, check=False)
    proj = Functor.build(T, A, lambda o: o[0], lambda f: f[0], check=False)
    return T, proj


def opcartesian_lift(E, total, f, e):
    """The opcartesian arrow over ``f`` starting at fiber object ``e`` (labels)."""
    A = E.shape
    a, a2 = A.src(f), A.dst(f)
    Ea, Eb = E.fibers[a], E.fibers[a2]
    fe = E.actions[f](Ea.index(e))
    return total.arrow((A.label(f), Eb.label(Eb.ident[fe]), (A.objects[a], e)))


def pi0(C):
    """Connected components: (FinSet of components, component index per object)."""
    uf = UnionFind(C.n_objects)
    for s, t, _ in C.arrows:
        uf.union(s, t)
    comp = uf.classes()
    return FinSet(max(comp) + 1 if comp else 0), comp


def ob_discrete(A):
    """The discrete category on the objects of A, with its inclusion."""
    D = FinCat(A.objects, [(a, a, A.label(A.ident[a])) for a in range(A.n_objects)],
               range(A.n_objects), {(a, a): a for a in range(A.n_objects)},
               name=f"ob({A.name})" if A.name else None, check=False)
    incl = Functor(D, A, range(A.n_objects), A.ident, check=False)
    return D, incl


class Zigzag:
    """A path of arrows each traversed forward (+1) or backward (-1)."""

    def __init__(self, start, end, steps=()):
        self.start, self.end, self.steps = start, end, tuple(steps)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __eq__(self, other):
        return isinstance(other, Zigzag) and (self.start, self.end, self.steps) == (other.start, other.end, other.steps)

    def __hash__(self):
        return hash((self.start, self.end, self.steps))

    def __repr__(self):
        return f"Zigzag({self.start}->{self.end}, {list(self.steps)})"

    def validate(self, C):
        at = self.start
        for f, d in self.steps:
            s, t = C.src(f), C.dst(f)
            if d == 1 and s == at:
                at = t
            elif d == -1 and t == at:
                at = s
            else:
                return False
        return at == self.end

    def reversed(self):
        return Zigzag(self.end, self.start, [(f, -d) for f, d in reversed(self.steps)])

    def mapped(self, F):
        return Zigzag(F(self.start), F(self.end), [(F.on_arrow(f), d) for f, d in self.steps])


def _undirected(C):
    adj = [[] for _ in range(C.n_objects)]
    for f, (s, t, _) in enumerate(C.arrows):
        if s == t and C.ident[s] == f:
            continue
        adj[s].append((f, 1, t))
        adj[t].append((f, -1, s))
    for lst in adj:
        lst.sort(key=lambda e: (e[0], -e[1]))
    return adj


def bfs_distances(adj, root):
    dist = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for _, _, y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def zigzag_search(C, x, y):
    """Shortest zigzag from x to y, lexicographically least by arrow index.

    Returns None when x and y are in different components.
    """
    return ZigzagFinder(C)(x, y)


class ZigzagFinder:
    """Caches the adjacency lists of a category for repeated searches."""

    def __init__(self, C):
        self.C = C
        self.adj = _undirected(C)
        self._dist = {}

    def __call__(self, x, y):
        if y not in self._dist:
            self._dist[y] = bfs_distances(self.adj, y)
        dist = self._dist[y]
        if x not in dist:
            return None
        steps, at = [], x
        while at != y:
            for f, d, nxt in self.adj[at]:
                if dist.get(nxt) == dist[at] - 1:
                    steps.append((f, d))
                    at = nxt
                    break
        return Zigzag(x, y, steps)


class CatOverSet:
    """A category with a projection of its objects to {0..base-1}."""

    def __init__(self, total, base, proj):
        self.total = total
        self.base = base if isinstance(base, FinSet) else FinSet(base)
        self.proj = tuple(proj)
        for s, t, lab in total.arrows:
            if self.proj[s] != self.proj[t]:
                raise CategoryError(f"arrow {lab!r} crosses fibers")

    @classmethod
    def from_functor(cls, v):
        """From a functor into a discrete category."""
        if not v.cod.is_discrete:
            raise CategoryError("base category is not discrete")
        return cls(v.dom, v.cod.n_objects, v.obj_map)

    def fiber_objects(self, i):
        return [a for a in range(self.total.n_objects) if self.proj[a] == i]


def fibers(u):
    """Full subcategory over each base element."""
    return [full_subcategory(u.total, u.fiber_objects(i)) for i in range(len(u.base))]
