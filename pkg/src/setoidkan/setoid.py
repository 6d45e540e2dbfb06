"""Pseudo-equivalence relations on finite carriers and their morphisms.

A setoid has a finite carrier ``X0`` of hashable elements and a (possibly
infinite) object of witnesses ``X1`` with source/target ``s, t``, reflexivity
``r``, symmetry ``v`` and transitivity ``m``.  Four representations share one
interface:

* ``TabularSetoid``: finitely many named witnesses with explicit tables.
* ``RelationalSetoid``: an equivalence relation, witnesses are the pairs.
* ``FreeSetoid``: witnesses are zigzag words over generating edges.
* ``FiberedSetoid``: witnesses are tuples of witnesses of component setoids,
  used for limits, products and pullbacks.

Witnesses are never compared for equality by the morphism layer; they are
only checked to have the right endpoints.
"""

from itertools import product as iproduct

from .fincat import FinSet, UnionFind
from .verdict import Verdict


class SetoidError(ValueError):
    pass


class Setoid:
    kind = "abstract"

    def __init__(self, X0, name=None, member=None):
        """``X0`` is a finite iterable, or a callable producing one on first use;
        ``member`` optionally decides membership without enumerating."""
        self.name = name
        self._classes = None
        self._member = member
        self._X0 = self._idx = None
        if callable(X0):
            self._make = X0
        else:
            self._set(X0)

    def _set(self, X0):
        self._X0 = tuple(X0)
        self._idx = {x: i for i, x in enumerate(self._X0)}
        if len(self._idx) != len(self._X0):
            raise SetoidError("duplicate carrier elements")

    @property
    def X0(self):
        if self._X0 is None:
            self._set(self._make())
        return self._X0

    @property
    def _index(self):
        if self._idx is None:
            self._set(self._make())
        return self._idx

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<{type(self).__name__}{nm}: |X0|={len(self.X0)}>"

    @property
    def carrier(self):
        return FinSet(len(self.X0), self.X0)

    def index(self, x):
        return self._index[x]

    def __contains__(self, x):
        if self._idx is None and self._member is not None:
            return self._member(x)
        return x in self._index

    # structure maps: s, t, r, v, m, is_x1, related, witnesses, canon,
    # enum_x1, clip are provided by subclasses

    def sample_x1(self):
        """A finite family of witnesses used to validate maps out of X."""
        return list(self.enum_x1(2))

    def validate(self):
        """Check the five structure equations on the sampled witnesses."""
        for x in self.X0:
            rx = self.r(x)
            if self.s(rx) != x or self.t(rx) != x:
                raise SetoidError(f"reflexivity witness at {x!r} has wrong endpoints")
        sample = self.sample_x1()
        for w in sample:
            vw = self.v(w)
            if self.s(vw) != self.t(w) or self.t(vw) != self.s(w):
                raise SetoidError(f"symmetry fails at witness {w!r}")
        by_src = {}
        for w in sample:
            by_src.setdefault(self.s(w), []).append(w)
        for w in sample:
            for z in by_src.get(self.t(w), ()):
                c = self.m(w, z)
                if self.s(c) != self.s(w) or self.t(c) != self.t(z):
                    raise SetoidError(f"transitivity fails at {w!r}, {z!r}")

    # -- quotient -------------------------------------------------------------

    def _compute_classes(self):
        uf = UnionFind(len(self.X0))
        for x, y in self.generating_pairs():
            uf.union(self._index[x], self._index[y])
        return uf.classes()

    def classes(self):
        """Class index per carrier position, numbered by least member."""
        if self._classes is None:
            self._classes = self._compute_classes()
        return self._classes

    def cls(self, x):
        return self.classes()[self._index[x]]

    def n_classes(self):
        c = self.classes()
        return max(c) + 1 if c else 0

    def same_class(self, x, y):
        return self.cls(x) == self.cls(y)

    def connect(self, x, y):
        """Some witness from x to y, or None; cheaper than ``related`` where
        a representation has no bounded witness set."""
        return self.related(x, y)

    def family(self, cap=None):
        """Witnesses enumerated by constructions indexed over X1."""
        return self.enum_x1(cap)

    def clip_family(self, w, cap=None):
        """A member of ``family(cap)`` with the same endpoints as w."""
        return self.clip(w, cap)


def quotient(X):
    """(FinSet of classes, class index per carrier position)."""
    c = X.classes()
    return FinSet(max(c) + 1 if c else 0), list(c)


def class_members(X):
    out = {}
    for x, c in zip(X.X0, X.classes()):
        out.setdefault(c, []).append(x)
    return [out[c] for c in sorted(out)]


# -- tabular ------------------------------------------------------------------------

class TabularSetoid(Setoid):
    kind = "tabular"

    def __init__(self, X0, X1, src, tgt, refl, inv, comp, name=None, check=True):
        super().__init__(X0, name)
        self.X1 = tuple(X1)
        self._src, self._tgt = dict(src), dict(tgt)
        self._refl, self._inv, self._comp = dict(refl), dict(inv), dict(comp)
        self._x1set = set(self.X1)
        self._between = {}
        for w in self.X1:
            self._between.setdefault((self._src[w], self._tgt[w]), []).append(w)
        if check:
            self.validate_tables()

    def validate_tables(self):
        for w in self.X1:
            if self._src.get(w) not in self._index or self._tgt.get(w) not in self._index:
                raise SetoidError(f"witness {w!r} has endpoints outside the carrier")
        for x in self.X0:
            if x not in self._refl or self._refl[x] not in self._x1set:
                raise SetoidError(f"missing reflexivity witness at {x!r}")
        for w in self.X1:
            if w not in self._inv:
                raise SetoidError(f"missing symmetry witness for {w!r}")
            for z in self._between_from(self._tgt[w]):
                if (w, z) not in self._comp:
                    raise SetoidError(f"missing composite of ({w!r}, {z!r})")
        self.validate()

    def _between_from(self, x):
        return [w for w in self.X1 if self._src[w] == x]

    def s(self, w):
        return self._src[w]

    def t(self, w):
        return self._tgt[w]

    def r(self, x):
        return self._refl[x]

    def v(self, w):
        return self._inv[w]

    def m(self, w, z):
        return self._comp[(w, z)]

    def is_x1(self, w):
        return w in self._x1set

    def related(self, x, y):
        ws = self._between.get((x, y))
        return ws[0] if ws else None

    def witnesses(self, x, y):
        return list(self._between.get((x, y), ()))

    def canon(self, w):
        return w

    def enum_x1(self, cap=None):
        return list(self.X1)

    def clip(self, w, cap=None):
        return w

    def generating_pairs(self):
        return [(self._src[w], self._tgt[w]) for w in self.X1]

    def sample_x1(self):
        return list(self.X1)


# -- relational ---------------------------------------------------------------------

class RelationalSetoid(Setoid):
    kind = "relational"

    def __init__(self, X0, pairs, name=None):
        super().__init__(X0, name)
        self.pairs = frozenset(pairs)

    def s(self, w):
        return w[0]

    def t(self, w):
        return w[1]

    def r(self, x):
        return (x, x)

    def v(self, w):
        return (w[1], w[0])

    def m(self, w, z):
        return (w[0], z[1])

    def is_x1(self, w):
        return w in self.pairs

    def related(self, x, y):
        return (x, y) if (x, y) in self.pairs else None

    def witnesses(self, x, y):
        return [(x, y)] if (x, y) in self.pairs else []

    def canon(self, w):
        return w

    def enum_x1(self, cap=None):
        return sorted(self.pairs, key=lambda p: (self._index[p[0]], self._index[p[1]]))

    def clip(self, w, cap=None):
        return w

    def generating_pairs(self):
        return list(self.pairs)

    def sample_x1(self):
        return self.enum_x1()


def relational_setoid(X0, pairs, name=None):
    """The setoid whose witnesses are exactly the pairs of an equivalence relation."""
    X0 = tuple(X0)
    rel = set(tuple(p) for p in pairs)
    elems = set(X0)
    for x, y in rel:
        if x not in elems or y not in elems:
            raise SetoidError(f"pair ({x!r}, {y!r}) leaves the carrier")
    for x in X0:
        if (x, x) not in rel:
            raise SetoidError(f"relation is not reflexive at {x!r}")
    for x, y in rel:
        if (y, x) not in rel:
            raise SetoidError(f"relation is not symmetric at ({x!r}, {y!r})")
    succ = {}
    for x, y in rel:
        succ.setdefault(x, []).append(y)
    for x, y in rel:
        for z in succ[y]:
            if (x, z) not in rel:
                raise SetoidError(f"relation is not transitive at ({x!r}, {y!r}, {z!r})")
    return RelationalSetoid(X0, rel, name=name)


def discrete_setoid(X0, name=None):
    return RelationalSetoid(X0, [(x, x) for x in X0], name=name)


class FullSetoid(RelationalSetoid):
    """Every pair related; the relation is kept implicit."""

    def __init__(self, X0, name=None):
        Setoid.__init__(self, X0, name)

    @property
    def pairs(self):
        return frozenset((x, y) for x in self.X0 for y in self.X0)

    def is_x1(self, w):
        return isinstance(w, tuple) and len(w) == 2 and w[0] in self._index and w[1] in self._index

    def related(self, x, y):
        return (x, y) if x in self._index and y in self._index else None

    def witnesses(self, x, y):
        w = self.related(x, y)
        return [w] if w is not None else []

    def enum_x1(self, cap=None):
        return [(x, y) for x in self.X0 for y in self.X0]

    def generating_pairs(self):
        return [(self.X0[0], y) for y in self.X0[1:]]

    def _compute_classes(self):
        return [0] * len(self.X0)

    def sample_x1(self):
        head = self.X0[:1]
        return ([self.r(x) for x in self.X0] + [(h, y) for h in head for y in self.X0]
                + [(y, h) for h in head for y in self.X0])


def full_setoid(X0, name=None):
    return FullSetoid(X0, name=name)


# -- free -----------------------------------------------------------------------------

class FreeSetoid(Setoid):
    """Witnesses are words ``(start, ((gen, +1 | -1), ...))``.

    Generators are described by ``ends(g) -> (src, dst)`` and a membership
    test ``is_gen``; ``gens(cap)`` lists finitely many of them in a fixed
    order.  ``gens(None)`` must already connect every pair of related points,
    which is what relatedness search runs over.
    """

    kind = "free"

    def __init__(self, X0, ends, gens, is_gen, name=None, default_cap=4):
        super().__init__(X0, name)
        self._ends = ends
        self._gens = gens
        self._is_gen = is_gen
        self.default_cap = default_cap
        self._adj = None
        self._search_cache = {}
        self._gen_cache = {}
        self._enum_cache = {}

    def ends(self, g):
        return self._ends(g)

    def gens(self, cap=None):
        if cap not in self._gen_cache:
            self._gen_cache[cap] = list(self._gens(cap))
        return self._gen_cache[cap]

    def is_gen(self, g):
        return self._is_gen(g)

    def end_of(self, word):
        at = word[0]
        for g, d in word[1]:
            a, b = self._ends(g)
            at = b if d == 1 else a
        return at

    def s(self, w):
        return w[0]

    def t(self, w):
        return self.end_of(w)

    def r(self, x):
        return (x, ())

    def v(self, w):
        return (self.end_of(w), tuple((g, -d) for g, d in reversed(w[1])))

    def m(self, w, z):
        return (w[0], w[1] + z[1])

    def is_x1(self, w):
        if not (isinstance(w, tuple) and len(w) == 2 and w[0] in self._index):
            return False
        at = w[0]
        for step in w[1]:
            if len(step) != 2:
                return False
            g, d = step
            if not self._is_gen(g):
                return False
            a, b = self._ends(g)
            if d == 1 and a == at:
                at = b
            elif d == -1 and b == at:
                at = a
            else:
                return False
        return True

    def eta(self, g):
        """The one-letter word of a generator."""
        return (self._ends(g)[0], ((g, 1),))

    def _adjacency(self):
        if self._adj is None:
            adj = {x: [] for x in self.X0}
            for g in self.gens(None):
                a, b = self._ends(g)
                adj[a].append((g, 1, b))
                adj[b].append((g, -1, a))
            self._adj = adj
        return self._adj

    def related(self, x, y):
        """Shortest word from x to y, least in generator order on ties."""
        key = (x, y)
        if key in self._search_cache:
            return self._search_cache[key]
        adj = self._adjacency()
        dist = self._distances(y)
        if x not in dist:
            self._search_cache[key] = None
            return None
        steps, at = [], x
        while at != y:
            for g, d, nxt in adj[at]:
                if dist.get(nxt) == dist[at] - 1:
                    steps.append((g, d))
                    at = nxt
                    break
        word = (x, tuple(steps))
        self._search_cache[key] = word
        return word

    def _distances(self, y):
        cache = self._search_cache.setdefault(("dist", y), None)
        if cache is not None:
            return cache
        adj = self._adjacency()
        dist = {y: 0}
        frontier = [y]
        while frontier:
            nxt = []
            for x in frontier:
                for _, _, z in adj[x]:
                    if z not in dist:
                        dist[z] = dist[x] + 1
                        nxt.append(z)
            frontier = nxt
        self._search_cache[("dist", y)] = dist
        return dist

    def witnesses(self, x, y):
        w = self.related(x, y)
        return [w] if w is not None else []

    def connect(self, x, y):
        """Word through the breadth-first tree rooted at the least member of
        the class, with cancelling letters removed."""
        if not self.same_class(x, y):
            return None
        if x == y:
            return (x, ())
        root = self._tree_root(x)
        dist = self._distances(root)
        up_x = self.related(x, root) if dist[x] else (x, ())
        up_y = self.related(y, root) if dist[y] else (y, ())
        steps = []
        for step in up_x[1] + self.v(up_y)[1]:
            if steps and steps[-1] == (step[0], -step[1]):
                steps.pop()
            else:
                steps.append(step)
        return (x, tuple(steps))

    def _tree_root(self, x):
        c = self.cls(x)
        roots = self._search_cache.setdefault("roots", {})
        if c not in roots:
            roots[c] = next(z for z in self.X0 if self.cls(z) == c)
        return roots[c]

    def canon(self, w):
        return self.related(w[0], self.end_of(w))

    def enum_x1(self, cap=None):
        """All reduced words of length at most ``cap`` over ``gens(cap)``."""
        cap = self.default_cap if cap is None else cap
        if cap in self._enum_cache:
            return self._enum_cache[cap]
        adj = {x: [] for x in self.X0}
        for g in self.gens(cap):
            a, b = self._ends(g)
            adj[a].append((g, 1, b))
            adj[b].append((g, -1, a))
        out = []
        for x in self.X0:
            stack = [(x, (), x)]
            while stack:
                start, steps, at = stack.pop()
                out.append((start, steps))
                if len(steps) == cap:
                    continue
                for g, d, nxt in reversed(adj[at]):
                    if steps and steps[-1] == (g, -d):
                        continue
                    stack.append((start, steps + ((g, d),), nxt))
        # canonical words are the fallback of clip, so they are always listed
        seen = set(out)
        for x in self.X0:
            for y in self.X0:
                w = self.related(x, y)
                if w is not None and w not in seen:
                    seen.add(w)
                    out.append(w)
        self._enum_cache[cap] = out
        return out

    def reduce(self, w):
        out = []
        for step in w[1]:
            if out and out[-1] == (step[0], -step[1]):
                out.pop()
            else:
                out.append(step)
        return (w[0], tuple(out))

    def family(self, cap=None):
        """Reflexivity words, one-letter words over ``gens(cap)`` in both
        directions and the canonical word of every related pair."""
        cap = self.default_cap if cap is None else cap
        key = ("family", cap)
        if key not in self._enum_cache:
            out = [self.r(x) for x in self.X0]
            for g in self.gens(cap):
                a, b = self._ends(g)
                out += [(a, ((g, 1),)), (b, ((g, -1),))]
            seen = set(out)
            for x in self.X0:
                for y in self.X0:
                    w = self.related(x, y)
                    if w is not None and w not in seen:
                        seen.add(w)
                        out.append(w)
            self._enum_cache[key] = out
            self._enum_cache[("family_set", cap)] = seen
        return self._enum_cache[key]

    def clip_family(self, w, cap=None):
        cap = self.default_cap if cap is None else cap
        self.family(cap)
        red = self.reduce(w)
        return red if red in self._enum_cache[("family_set", cap)] else self.canon(w)

    def clip(self, w, cap=None):
        """Reduced form of w if it lies in ``enum_x1(cap)``, else the canonical word."""
        cap = self.default_cap if cap is None else cap
        red = self.reduce(w)
        if len(red[1]) <= cap:
            allowed = self._gen_cache.get(("set", cap))
            if allowed is None:
                allowed = set(self.gens(cap))
                self._gen_cache[("set", cap)] = allowed
            if all(g in allowed for g, _ in red[1]):
                return red
        return self.canon(w)

    def generating_pairs(self):
        return [self._ends(g) for g in self.gens(None)]

    def sample_x1(self):
        out = list(self.enum_x1(2))
        for g in self.gens(None):
            e = self.eta(g)
            out.append(self.m(e, self.v(e)))
        return out


def free_setoid(X0, edges, name=None, default_cap=4):
    """The free setoid on a list of edges ``(src, dst)``; generators are edge indices."""
    X0 = tuple(X0)
    edges = [tuple(e) for e in edges]
    elems = set(X0)
    for a, b in edges:
        if a not in elems or b not in elems:
            raise SetoidError(f"edge ({a!r}, {b!r}) leaves the carrier")
    S = FreeSetoid(X0, lambda g: edges[g], lambda cap: range(len(edges)),
                   lambda g: isinstance(g, int) and 0 <= g < len(edges), name=name,
                   default_cap=default_cap)
    S.edges = edges
    return S


# -- fibered --------------------------------------------------------------------------

class FiberedSetoid(Setoid):
    """Witnesses are ``(x, y, (w_0, ..., w_k))`` with ``w_i`` a witness in
    ``parts[i]`` between ``proj[i](x)`` and ``proj[i](y)``.

    Two points are related exactly when all their projections are.
    """

    kind = "fibered"

    def __init__(self, X0, parts, proj, name=None, member=None):
        super().__init__(X0, name, member)
        self.parts = tuple(parts)
        self.proj = tuple(proj)

    def _p(self, x):
        return [pr(x) for pr in self.proj]

    def s(self, w):
        return w[0]

    def t(self, w):
        return w[1]

    def r(self, x):
        return (x, x, tuple(P.r(px) for P, px in zip(self.parts, self._p(x))))

    def v(self, w):
        return (w[1], w[0], tuple(P.v(c) for P, c in zip(self.parts, w[2])))

    def m(self, w, z):
        return (w[0], z[1], tuple(P.m(c, d) for P, c, d in zip(self.parts, w[2], z[2])))

    def is_x1(self, w):
        if not (isinstance(w, tuple) and len(w) == 3 and w[0] in self and w[1] in self):
            return False
        if len(w[2]) != len(self.parts):
            return False
        for P, c, a, b in zip(self.parts, w[2], self._p(w[0]), self._p(w[1])):
            if not (P.is_x1(c) and P.s(c) == a and P.t(c) == b):
                return False
        return True

    def same_class(self, x, y):
        return all(P.same_class(a, b) for P, a, b in zip(self.parts, self._p(x), self._p(y)))

    def related(self, x, y):
        comps = []
        for P, a, b in zip(self.parts, self._p(x), self._p(y)):
            c = P.related(a, b)
            if c is None:
                return None
            comps.append(c)
        return (x, y, tuple(comps))

    def connect(self, x, y):
        comps = []
        for P, a, b in zip(self.parts, self._p(x), self._p(y)):
            c = P.connect(a, b)
            if c is None:
                return None
            comps.append(c)
        return (x, y, tuple(comps))

    def witnesses(self, x, y):
        lists = [P.witnesses(a, b) for P, a, b in zip(self.parts, self._p(x), self._p(y))]
        return [(x, y, tuple(c)) for c in iproduct(*lists)]

    def canon(self, w):
        return (w[0], w[1], tuple(P.canon(c) for P, c in zip(self.parts, w[2])))

    def enum_x1(self, cap=None):
        return self._product_x1(cap, "enum_x1")

    def family(self, cap=None):
        return self._product_x1(cap, "family")

    def clip_family(self, w, cap=None):
        return (w[0], w[1], tuple(P.clip_family(c, cap) for P, c in zip(self.parts, w[2])))

    def _product_x1(self, cap, method):
        tables = []
        for P in self.parts:
            tab = {}
            for c in getattr(P, method)(cap):
                tab.setdefault((P.s(c), P.t(c)), []).append(c)
            tables.append(tab)
        out = []
        for x in self.X0:
            px = self._p(x)
            for y in self.X0:
                py = self._p(y)
                lists = [tab.get((a, b), []) for tab, a, b in zip(tables, px, py)]
                out.extend((x, y, tuple(c)) for c in iproduct(*lists))
        return out

    def clip(self, w, cap=None):
        return (w[0], w[1], tuple(P.clip(c, cap) for P, c in zip(self.parts, w[2])))

    def _compute_classes(self):
        keyed = {}
        uf = UnionFind(len(self.X0))
        for i, x in enumerate(self.X0):
            key = tuple(P.cls(a) for P, a in zip(self.parts, self._p(x)))
            if key in keyed:
                uf.union(keyed[key], i)
            else:
                keyed[key] = i
        return uf.classes()

    def generating_pairs(self):
        reps = {}
        out = []
        for x, c in zip(self.X0, self.classes()):
            if c in reps:
                out.append((reps[c], x))
            else:
                reps[c] = x
        return out

    def sample_x1(self):
        out = [self.r(x) for x in self.X0]
        reps = {}
        for x, c in zip(self.X0, self.classes()):
            if c in reps:
                w = self.related(reps[c], x)
                out.extend([w, self.v(w)])
            else:
                reps[c] = x
        return out


def product_setoid(parts, name=None):
    """Cartesian product of finitely many setoids; carrier elements are tuples."""
    parts = tuple(parts)
    X0 = list(iproduct(*[P.X0 for P in parts]))
    proj = [(lambda i: (lambda x: x[i]))(i) for i in range(len(parts))]
    return FiberedSetoid(X0, parts, proj, name=name)


def coproduct_setoid(parts, name=None):
    """Disjoint union; carrier elements ``(i, x)``, witnesses ``(i, w)``."""
    parts = tuple(parts)
    return CoproductSetoid(parts, name=name)


class CoproductSetoid(Setoid):
    kind = "coproduct"

    def __init__(self, parts, name=None):
        super().__init__([(i, x) for i, P in enumerate(parts) for x in P.X0], name)
        self.parts = parts

    def s(self, w):
        return (w[0], self.parts[w[0]].s(w[1]))

    def t(self, w):
        return (w[0], self.parts[w[0]].t(w[1]))

    def r(self, x):
        return (x[0], self.parts[x[0]].r(x[1]))

    def v(self, w):
        return (w[0], self.parts[w[0]].v(w[1]))

    def m(self, w, z):
        return (w[0], self.parts[w[0]].m(w[1], z[1]))

    def is_x1(self, w):
        return (isinstance(w, tuple) and len(w) == 2 and isinstance(w[0], int)
                and 0 <= w[0] < len(self.parts) and self.parts[w[0]].is_x1(w[1]))

    def related(self, x, y):
        if x[0] != y[0]:
            return None
        c = self.parts[x[0]].related(x[1], y[1])
        return None if c is None else (x[0], c)

    def connect(self, x, y):
        if x[0] != y[0]:
            return None
        c = self.parts[x[0]].connect(x[1], y[1])
        return None if c is None else (x[0], c)

    def witnesses(self, x, y):
        if x[0] != y[0]:
            return []
        return [(x[0], c) for c in self.parts[x[0]].witnesses(x[1], y[1])]

    def canon(self, w):
        return (w[0], self.parts[w[0]].canon(w[1]))

    def enum_x1(self, cap=None):
        return [(i, c) for i, P in enumerate(self.parts) for c in P.enum_x1(cap)]

    def family(self, cap=None):
        return [(i, c) for i, P in enumerate(self.parts) for c in P.family(cap)]

    def clip_family(self, w, cap=None):
        return (w[0], self.parts[w[0]].clip_family(w[1], cap))

    def clip(self, w, cap=None):
        return (w[0], self.parts[w[0]].clip(w[1], cap))

    def generating_pairs(self):
        return [((i, a), (i, b)) for i, P in enumerate(self.parts) for a, b in P.generating_pairs()]

    def sample_x1(self):
        return [(i, c) for i, P in enumerate(self.parts) for c in P.sample_x1()]


# -- morphisms ----------------------------------------------------------------------

class MorRep:
    """A morphism representative (f0, f1) from ``dom`` to ``cod``.

    ``f0`` and ``f1`` are callables on carrier elements and witnesses.
    """

    def __init__(self, dom, cod, f0, f1, check=True, name=None):
        self.dom, self.cod = dom, cod
        self.f0, self.f1 = f0, f1
        self.name = name
        if check:
            self.validate()

    def validate(self, sample=None):
        X, Y = self.dom, self.cod
        for x in X.X0:
            if self.f0(x) not in Y:
                raise SetoidError(f"f0({x!r}) = {self.f0(x)!r} is not in the codomain carrier")
        for w in (sample if sample is not None else X.sample_x1()):
            fw = self.f1(w)
            if Y.s(fw) != self.f0(X.s(w)) or Y.t(fw) != self.f0(X.t(w)):
                raise SetoidError(f"f1 does not commute with s, t at witness {w!r}")

    def table0(self):
        return tuple(self.f0(x) for x in self.dom.X0)

    def __repr__(self):
        return f"<MorRep {self.dom!r} -> {self.cod!r}>"


class EqWitness:
    """h: X0 -> Y1 with s h = f0 and t h = g0, stored as a table."""

    def __init__(self, h):
        self.h = dict(h)

    def __call__(self, x):
        return self.h[x]

    def validate(self, f, g):
        Y = f.cod
        for x in f.dom.X0:
            w = self.h[x]
            if Y.s(w) != f.f0(x) or Y.t(w) != g.f0(x):
                return False
        return True


def identity_mor(X):
    return MorRep(X, X, lambda x: x, lambda w: w, check=False)


def mor_from_tables(dom, cod, t0, t1=None, check=True):
    """A representative from dictionaries; ``t1`` defaults to one induced via
    relatedness search in the codomain."""
    t0 = dict(t0)
    if t1 is None:
        f1 = lambda w: cod.related(t0[dom.s(w)], t0[dom.t(w)])
    else:
        t1 = dict(t1)
        f1 = t1.__getitem__
    return MorRep(dom, cod, t0.__getitem__, f1, check=check)


def induced_mor(dom, cod, f0, check=True):
    """Representative with the given f0 and witnesses found by search in cod.

    Only valid when f0 preserves relatedness; validation reports otherwise.
    """
    def f1(w):
        out = cod.related(f0(dom.s(w)), f0(dom.t(w)))
        if out is None:
            raise SetoidError("f0 does not preserve relatedness")
        return out
    return MorRep(dom, cod, f0, f1, check=check)


def compose_mor(f, g):
    """g . f"""
    if f.cod is not g.dom:
        raise SetoidError("compose_mor: codomain/domain mismatch")
    f0, f1, g0, g1 = f.f0, f.f1, g.f0, g.f1
    return MorRep(f.dom, g.cod, lambda x: g0(f0(x)), lambda w: g1(f1(w)), check=False)


def free_extend(dom, cod, f0, g, check=True):
    """Extend a map on generators of a free setoid to all words.

    Words map to the left-associated m-composite of generator images, with v
    applied to backward letters; the empty word at x maps to r(f0 x).
    """
    if dom.kind != "free":
        raise SetoidError("free_extend needs a free domain")
    if check:
        for e in dom.gens(None):
            a, b = dom.ends(e)
            w = g(e)
            if cod.s(w) != f0(a) or cod.t(w) != f0(b):
                raise SetoidError(f"generator image of {e!r} does not lie over f0 x f0")
    v_, m_, r_ = cod.v, cod.m, cod.r

    def f1(word):
        steps = word[1]
        if not steps:
            return r_(f0(word[0]))
        acc = None
        for e, d in steps:
            img = g(e) if d == 1 else v_(g(e))
            acc = img if acc is None else m_(acc, img)
        return acc

    return MorRep(dom, cod, f0, f1, check=check)


def related(X, x, y):
    return X.related(x, y)


def equal_mor(f, g):
    """A witness that f ~ g, or None."""
    if f.dom is not g.dom or f.cod is not g.cod:
        raise SetoidError("equal_mor: representatives are not parallel")
    Y = f.cod
    h = {}
    for x in f.dom.X0:
        w = Y.related(f.f0(x), g.f0(x))
        if w is None:
            return None
        h[x] = w
    return EqWitness(h)


def quotient_map(f):
    """The function on classes induced by a representative."""
    X, Y = f.dom, f.cod
    out = {}
    for x in X.X0:
        c, d = X.cls(x), Y.cls(f.f0(x))
        if out.setdefault(c, d) != d:
            raise SetoidError("representative does not respect relatedness")
    return [out[c] for c in range(X.n_classes())]


def is_iso(f):
    """Iso verdict with an explicit inverse and both round-trip witnesses."""
    X, Y = f.dom, f.cod
    qmap = quotient_map(f)
    nx, ny = X.n_classes(), Y.n_classes()
    if len(set(qmap)) != nx or len(qmap) != ny:
        return Verdict(False, {"quotient_map": qmap},
                       f"quotient map {nx} -> {ny} classes is not a bijection")
    # choose the least preimage point of each class of Y
    back = {}
    for x in X.X0:
        back.setdefault(Y.cls(f.f0(x)), x)
    g0 = lambda y: back[Y.cls(y)]
    g1 = lambda w: X.connect(g0(Y.s(w)), g0(Y.t(w)))
    g = MorRep(Y, X, g0, g1, check=False)
    gf = EqWitness({x: X.connect(g0(f.f0(x)), x) for x in X.X0})
    fg = EqWitness({y: Y.connect(f.f0(g0(y)), y) for y in Y.X0})
    return Verdict(True, {"inverse": g, "gf_id": gf, "fg_id": fg})
