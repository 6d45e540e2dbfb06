"""Line-oriented text format for categories, setoids, functors, diagrams and
morphisms.

Each entry is a section opened by ``<kind> <name> ...`` and closed by ``end``;
``#`` starts a comment.  Labels are whitespace-free tokens.

::

    category ARROW
    object 0
    object 1
    arrow f 0 1
    compose g f h        # g . f = h, every composable pair of non-identities
    end

    setoid REL3 relational      # also: free, tabular
    element 0 1 2
    pair 0 1                    # relational: every related pair
    edge 0 1                    # free: generating edges
    witness w 0 1               # tabular: named witnesses and their tables
    refl 0 w
    inverse w w2
    compose w z u               # m(w, z) = u
    end

    functor U PAIR ONE
    object 0 *
    arrow f id_*                # identities may be omitted
    end

    diagram X ARROW
    constant REL3               # or one 'object' line per object
    object 0 REL3
    map f 0 1                   # level-0 table per non-identity arrow
    end

    morphism phi X Y
    map 0 x y                   # level-0 table per object
    end

    note <free text>
"""

from .coherent import DiagramError, constant, diagram_from_tables, induced_diag_mor
from .fincat import CategoryError, FinCat, Functor, from_presentation, terminal
from .setoid import SetoidError, TabularSetoid, free_setoid, relational_setoid


class FormatError(ValueError):
    """The text does not parse."""


class InvariantError(ValueError):
    """The text parses but an entry violates an invariant."""


KINDS = ("category", "setoid", "functor", "diagram", "morphism")


class Corpus:
    """Named, validated entries plus the declarations needed to dump them."""

    def __init__(self):
        self.categories = {}
        self.setoids = {}
        self.functors = {}
        self.diagrams = {}
        self.morphisms = {}
        self.notes = []
        self.decls = {}

    def table(self, kind):
        return {"category": self.categories, "setoid": self.setoids, "functor": self.functors,
                "diagram": self.diagrams, "morphism": self.morphisms}[kind]

    def lookup(self, kind, name):
        try:
            return self.table(kind)[name]
        except KeyError:
            raise KeyError(f"unknown {kind} {name!r}") from None

    def names(self, kind):
        return list(self.table(kind))

    def diagrams_over(self, A):
        return {n: X for n, X in self.diagrams.items() if X.shape is A}

    def category_name(self, A):
        for n, C in self.categories.items():
            if C is A:
                return n
        raise KeyError("category is not in the corpus")


def _sections(text):
    sections, cur = [], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if cur is None:
            if toks[0] == "note":
                sections.append(("note", lineno, [line[4:].strip()], []))
                continue
            if toks[0] not in KINDS:
                raise FormatError(f"line {lineno}: expected a section header, got {toks[0]!r}")
            if len(toks) < 2:
                raise FormatError(f"line {lineno}: section header without a name")
            cur = (toks[0], lineno, toks[1:], [])
        elif toks == ["end"]:
            sections.append(cur)
            cur = None
        else:
            cur[3].append((lineno, toks))
    if cur is not None:
        raise FormatError(f"line {cur[1]}: section {cur[2][0]!r} is not closed")
    if not sections:
        raise FormatError("empty document")
    return sections


def _need(toks, n, lineno):
    if len(toks) != n:
        raise FormatError(f"line {lineno}: expected {n} fields, got {len(toks)}")


def _category(name, body):
    objects, arrows, comps = [], [], []
    for lineno, toks in body:
        if toks[0] == "object":
            _need(toks, 2, lineno)
            objects.append(toks[1])
        elif toks[0] == "arrow":
            _need(toks, 4, lineno)
            arrows.append((toks[1], toks[2], toks[3]))
        elif toks[0] == "compose":
            _need(toks, 4, lineno)
            comps.append((toks[1], toks[2], toks[3]))
        else:
            raise FormatError(f"line {lineno}: unknown category field {toks[0]!r}")
    if objects == ["*"] and not arrows:
        return terminal()
    known = set(objects)
    for lab, s, t in arrows:
        if s not in known or t not in known:
            raise InvariantError(f"category {name}: arrow {lab} has an unknown endpoint")
    try:
        return from_presentation(objects, arrows, comps, name=name)
    except CategoryError as e:
        raise InvariantError(f"category {name}: {e}") from None


def _setoid(name, kind, body):
    elems, pairs, edges = [], [], []
    wit, refl, inv, comp = {}, {}, {}, {}
    for lineno, toks in body:
        head = toks[0]
        if head == "element":
            elems.extend(toks[1:])
        elif head == "pair" and kind == "relational":
            _need(toks, 3, lineno)
            pairs.append((toks[1], toks[2]))
        elif head == "edge" and kind == "free":
            _need(toks, 3, lineno)
            edges.append((toks[1], toks[2]))
        elif head == "witness" and kind == "tabular":
            _need(toks, 4, lineno)
            wit[toks[1]] = (toks[2], toks[3])
        elif head == "refl" and kind == "tabular":
            _need(toks, 3, lineno)
            refl[toks[1]] = toks[2]
        elif head == "inverse" and kind == "tabular":
            _need(toks, 3, lineno)
            inv[toks[1]] = toks[2]
        elif head == "compose" and kind == "tabular":
            _need(toks, 4, lineno)
            comp[(toks[1], toks[2])] = toks[3]
        else:
            raise FormatError(f"line {lineno}: field {head!r} is not valid for a {kind} setoid")
    if len(set(elems)) != len(elems):
        raise InvariantError(f"setoid {name}: duplicate elements")
    try:
        if kind == "relational":
            return relational_setoid(elems, pairs, name=name)
        if kind == "free":
            return free_setoid(elems, edges, name=name)
        if kind == "tabular":
            src = {w: e[0] for w, e in wit.items()}
            tgt = {w: e[1] for w, e in wit.items()}
            return TabularSetoid(elems, list(wit), src, tgt, refl, inv, comp, name=name)
    except SetoidError as e:
        raise InvariantError(f"setoid {name}: {e}") from None
    raise FormatError(f"setoid {name}: unknown representation {kind!r}")


def _functor(name, D, C, body):
    om, am = {}, {}
    for lineno, toks in body:
        if toks[0] == "object":
            _need(toks, 3, lineno)
            om[toks[1]] = toks[2]
        elif toks[0] == "arrow":
            _need(toks, 3, lineno)
            am[toks[1]] = toks[2]
        else:
            raise FormatError(f"line {lineno}: unknown functor field {toks[0]!r}")
    try:
        for o in D.objects:
            if o not in om:
                raise InvariantError(f"functor {name}: object {o} is not mapped")
        for a in range(D.n_objects):
            am.setdefault(D.label(D.ident[a]), C.label(C.ident[C.index(om[D.objects[a]])]))
        for _, _, lab in D.arrows:
            if lab not in am:
                raise InvariantError(f"functor {name}: arrow {lab} is not mapped")
        return Functor.build(D, C, om.__getitem__, am.__getitem__)
    except (CategoryError, KeyError) as e:
        raise InvariantError(f"functor {name}: {e}") from None


def _diagram(name, A, body, corpus):
    const, objs, maps = None, {}, {}
    for lineno, toks in body:
        if toks[0] == "constant":
            _need(toks, 2, lineno)
            const = toks[1]
        elif toks[0] == "object":
            _need(toks, 3, lineno)
            objs[toks[1]] = toks[2]
        elif toks[0] == "map":
            _need(toks, 4, lineno)
            maps.setdefault(toks[1], {})[toks[2]] = toks[3]
        else:
            raise FormatError(f"line {lineno}: unknown diagram field {toks[0]!r}")
    try:
        if const is not None:
            if objs or maps:
                raise FormatError(f"diagram {name}: constant diagrams take no tables")
            return constant(corpus.lookup("setoid", const), A), ("constant", const)
        setoids = [corpus.lookup("setoid", objs[o]) if o in objs else None for o in A.objects]
        if None in setoids:
            raise InvariantError(f"diagram {name}: object {A.objects[setoids.index(None)]} "
                                 "has no setoid")
        tables = []
        for f, (s, t, lab) in enumerate(A.arrows):
            if A.is_identity(f):
                tables.append({x: maps.get(lab, {}).get(x, x) for x in setoids[s].X0})
            else:
                tables.append(dict(maps.get(lab, {})))
        X = diagram_from_tables(A, setoids, tables, name=name)
        return X, ("tables", [objs[o] for o in A.objects], maps)
    except (DiagramError, KeyError) as e:
        raise InvariantError(f"diagram {name}: {e}") from None


def _morphism(name, X, Y, body):
    maps = {}
    for lineno, toks in body:
        if toks[0] != "map":
            raise FormatError(f"line {lineno}: unknown morphism field {toks[0]!r}")
        _need(toks, 4, lineno)
        maps.setdefault(toks[1], {})[toks[2]] = toks[3]
    A = X.shape
    try:
        c0 = []
        for a, o in enumerate(A.objects):
            table = maps.get(o, {})
            for x in X.objs[a].X0:
                if x not in table:
                    raise InvariantError(f"morphism {name}: component at {o} undefined at {x}")
                if table[x] not in Y.objs[a]:
                    raise InvariantError(f"morphism {name}: component at {o} leaves the codomain")
            c0.append(table.__getitem__)
        f = induced_diag_mor(X, Y, c0)
        f.validate()
        return f, maps
    except (DiagramError, SetoidError) as e:
        raise InvariantError(f"morphism {name}: {e}") from None


def parse(text, corpus=None):
    """Parse a document into a (possibly existing) corpus."""
    corpus = corpus if corpus is not None else Corpus()
    for kind, lineno, head, body in _sections(text):
        if kind == "note":
            corpus.notes.append(head[0])
            continue
        name = head[0]
        if name in corpus.table(kind):
            raise InvariantError(f"line {lineno}: duplicate {kind} name {name!r}")
        try:
            if kind == "category":
                _need(head, 1, lineno)
                obj = _category(name, body)
                decl = None
            elif kind == "setoid":
                _need(head, 2, lineno)
                obj = _setoid(name, head[1], body)
                decl = head[1]
            elif kind == "functor":
                _need(head, 3, lineno)
                obj = _functor(name, corpus.lookup("category", head[1]),
                               corpus.lookup("category", head[2]), body)
                decl = (head[1], head[2])
            elif kind == "diagram":
                _need(head, 2, lineno)
                obj, decl = _diagram(name, corpus.lookup("category", head[1]), body, corpus)
                decl = (head[1],) + decl
            else:
                _need(head, 3, lineno)
                obj, maps = _morphism(name, corpus.lookup("diagram", head[1]),
                                      corpus.lookup("diagram", head[2]), body)
                decl = (head[1], head[2], maps)
        except KeyError as e:
            raise InvariantError(f"line {lineno}: {e.args[0]}") from None
        corpus.table(kind)[name] = obj
        corpus.decls[(kind, name)] = decl
    return corpus


def load(path, corpus=None):
    with open(path) as fh:
        return parse(fh.read(), corpus)


# -- dumping ------------------------------------------------------------------------------

def dump_category(name, C):
    lines = [f"category {name}"]
    lines += [f"object {o}" for o in C.objects]
    nonid = C.non_identity()
    for f in nonid:
        lines.append(f"arrow {C.label(f)} {C.objects[C.src(f)]} {C.objects[C.dst(f)]}")
    for f in nonid:
        for g in C.out[C.dst(f)]:
            if not C.is_identity(g):
                lines.append(f"compose {C.label(g)} {C.label(f)} {C.label(C.compose(g, f))}")
    return lines + ["end"]


def dump_setoid(name, X, kind=None):
    kind = kind or X.kind
    lines = [f"setoid {name} {kind}", "element " + " ".join(map(str, X.X0))]
    if kind == "relational":
        lines += [f"pair {a} {b}" for a, b in sorted(X.pairs, key=lambda p: (X.index(p[0]), X.index(p[1])))]
    elif kind == "free":
        lines += [f"edge {a} {b}" for a, b in X.edges]
    elif kind == "tabular":
        lines += [f"witness {w} {X.s(w)} {X.t(w)}" for w in X.X1]
        lines += [f"refl {x} {X.r(x)}" for x in X.X0]
        lines += [f"inverse {w} {X.v(w)}" for w in X.X1]
        lines += [f"compose {w} {z} {X.m(w, z)}" for w in X.X1 for z in X.X1 if X.t(w) == X.s(z)]
    else:
        raise FormatError(f"setoid {name}: representation {kind!r} has no text form")
    return lines + ["end"]


def dump_functor(name, u, dom, cod):
    D, C = u.dom, u.cod
    lines = [f"functor {name} {dom} {cod}"]
    lines += [f"object {o} {C.objects[u(a)]}" for a, o in enumerate(D.objects)]
    lines += [f"arrow {D.label(f)} {C.label(u.on_arrow(f))}" for f in D.non_identity()]
    return lines + ["end"]


def dump_diagram(name, decl):
    shape, mode = decl[0], decl[1]
    lines = [f"diagram {name} {shape}"]
    if mode == "constant":
        lines.append(f"constant {decl[2]}")
    else:
        setoids, maps = decl[2], decl[3]
        lines += [f"object {o} {s}" for o, s in zip(_objects_of(shape), setoids)]
        for lab in sorted(maps):
            lines += [f"map {lab} {x} {y}" for x, y in maps[lab].items()]
    return lines + ["end"]


_SHAPES = {}


def _objects_of(shape):
    return _SHAPES[shape]


def dump(corpus):
    """Text for a whole corpus; parsing it yields structurally identical data."""
    _SHAPES.clear()
    _SHAPES.update({n: C.objects for n, C in corpus.categories.items()})
    out = [f"note {n}" for n in corpus.notes]
    for n, C in corpus.categories.items():
        out += dump_category(n, C)
    for n, X in corpus.setoids.items():
        out += dump_setoid(n, X, corpus.decls.get(("setoid", n)))
    for n, u in corpus.functors.items():
        dom, cod = corpus.decls[("functor", n)]
        out += dump_functor(n, u, dom, cod)
    for n in corpus.diagrams:
        out += dump_diagram(n, corpus.decls[("diagram", n)])
    for n in corpus.morphisms:
        dom, cod, maps = corpus.decls[("morphism", n)]
        out.append(f"morphism {n} {dom} {cod}")
        for o in sorted(maps):
            out += [f"map {o} {x} {y}" for x, y in maps[o].items()]
        out.append("end")
    return "\n".join(out) + "\n"


def structure(corpus):
    """Comparable summary of all entries."""
    cats = {n: C.structure() for n, C in corpus.categories.items()}
    setoids = {}
    for n, X in corpus.setoids.items():
        extra = (tuple(sorted(X.pairs)) if X.kind == "relational" else
                 tuple(X.edges) if X.kind == "free" else
                 tuple((w, X.s(w), X.t(w)) for w in X.X1))
        setoids[n] = (X.kind, tuple(X.X0), extra)
    funs = {n: (u.obj_map, u.arr_map) for n, u in corpus.functors.items()}
    diags = {n: corpus.decls[("diagram", n)] for n in corpus.diagrams}
    mors = {n: corpus.decls[("morphism", n)] for n in corpus.morphisms}
    return cats, setoids, funs, diags, mors


def dump_fincat(C, name=None):
    """A single category in text form (used for constructed categories)."""
    return "\n".join(dump_category(name or C.name or "C", _relabelled(C))) + "\n"


def _relabelled(C):
    """Copy with labels turned into whitespace-free tokens."""
    def tok(x):
        return str(x).replace(" ", "")
    objs = [tok(o) for o in C.objects]
    arrows = [(s, t, tok(lab)) for s, t, lab in C.arrows]
    return FinCat(objs, arrows, C.ident, C.comp, name=C.name, check=False)
