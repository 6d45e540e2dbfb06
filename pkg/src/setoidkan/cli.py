"""Command-line surface and the check suites it runs.

Every suite returns records ``(check, instance, Verdict, reproducer)``; the
report is those records sorted by check and instance, one tab-separated line
each.  Exit codes: 0 all pass, 1 some check fails, 2 input error (parse
failure, unknown name, bad flag), 3 invariant violation in the input.
"""

import argparse
import sys

from .coherent import DiagramError, constant, equal_diag, restrict
from .corpus import default_corpus
from .fincat import (CategoryError, from_presentation, identity_functor, pi0, terminal,
                     to_terminal)
from .formats import FormatError, InvariantError, dump_fincat, load
from .homotopy import (cocontinuity_check, free_cocompletion_map, homotopy_comp,
                       homotopy_from_witness, homotopy_id, odot_fiber_comparison,
                       odot_fiberwise, omega_coherence, omega_sex_check, path_space,
                       self_odot_iso, self_odot_naturality, tilde, universality_check)
from .kan import (colimit, distributivity_check, kan_fast_path, left_kan, limit, right_kan,
                  verify_derivator_axioms)
from .setoid import SetoidError, class_members
from .truncation import (IMPLIES, THEORIES, TRUNCATIONS, asymmetry_search,
                         counit_invertible_check, equiv_check, over_components, reflect,
                         semantic_equiv_oracle, set_reflection_commutation, terminal_setoid)
from .verdict import Verdict

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2, 3
COEFFICIENTS = ("TERM", "REL3")


class InputError(ValueError):
    """Unknown names or flags that do not fit the command."""


# -- helpers ---------------------------------------------------------------------------

def _lookup(corpus, kind, name):
    try:
        return corpus.lookup(kind, name)
    except KeyError as e:
        raise InputError(e.args[0]) from None


def _discrete_target(corpus):
    return {n: u for n, u in corpus.functors.items() if u.cod.is_discrete}


def _arrow_cat(corpus):
    for C in corpus.categories.values():
        if C.n_objects == 2 and C.n_arrows == 3 and not C.is_discrete:
            return C
    return from_presentation(["0", "1"], [("f", "0", "1")], [], name="ARROW")


def _rec(check, instance, vd, repro=""):
    return (check, instance, vd, repro)


def index_pairs(corpus):
    """(label, u, v) for every corpus functor u and v in {cod u -> ONE,
    identity when cod u is discrete, cod u -> pi0(cod u)}."""
    out = []
    for n, u in corpus.functors.items():
        out.append((f"{n}/ONE", u, to_terminal(u.cod, terminal())))
        if u.cod.is_discrete:
            out.append((f"{n}/id", u, identity_functor(u.cod)))
        out.append((f"{n}/pi0", u, over_components(u)))
    return out


# -- suites ----------------------------------------------------------------------------

def suite_axioms(corpus):
    """Der1-Der5, the Kan fast path, the colimit/pi0 law and distributivity."""
    recs = [_rec(c, i, vd, "check-axioms") for c, i, vd in
            verify_derivator_axioms(corpus.categories, corpus.diagrams, corpus.functors,
                                    corpus.morphisms, _arrow_cat(corpus))]
    for un, u in _discrete_target(corpus).items():
        for xn, X in corpus.diagrams_over(u.dom).items():
            for side in ("left", "right"):
                recs.append(_rec(f"fast-path-{side}", f"{un}:{xn}", kan_fast_path(u, X, side),
                                 f"kan --{side} --functor {un} --diagram {xn}"))
            for yn, Y in corpus.diagrams_over(u.cod).items():
                recs.append(_rec("distributivity", f"{un}:{xn},{yn}",
                                 distributivity_check(X, Y, u), "check-axioms"))
    for an, A in corpus.categories.items():
        recs.append(_rec("pi0-law", an, pi0_law(A), f"quotient --category {an}"))
    return recs


def pi0_law(A):
    """The quotient of the colimit of the constant terminal diagram is pi0(A),
    as sizes and as partitions of the objects."""
    C = colimit(constant(terminal_setoid(), A)).C
    n, comp = pi0(A)
    cls = [C.cls((a, "*")) for a in range(A.n_objects)]
    same = all((cls[a] == cls[b]) == (comp[a] == comp[b])
               for a in range(A.n_objects) for b in range(A.n_objects))
    ok = same and C.n_classes() == len(n)
    return Verdict(ok, {"classes": cls, "components": comp},
                   f"{C.n_classes()} classes, {len(n)} components")


def suite_equiv(corpus, theories=THEORIES, functor=None, over=None):
    """Checker verdicts, agreement with the oracle, and the locality chain."""
    if functor is not None:
        u = _lookup(corpus, "functor", functor)
        if over is not None:
            v = _lookup(corpus, "functor", over)
            if v.dom is not u.cod or not v.cod.is_discrete:
                raise InputError(f"--over {over} is not a functor from cod {functor} to a discrete category")
            pairs = [(f"{functor}/{over}", u, v)]
        else:
            pairs = [p for p in index_pairs(corpus) if p[0].split("/")[0] == functor]
    elif over is not None:
        raise InputError("--over needs --functor")
    else:
        pairs = index_pairs(corpus)
    recs = []
    for label, u, v in pairs:
        objs = {n: X for n, X in corpus.diagrams.items() if X.shape is v.cod}
        verdicts = {}
        for th in THEORIES:
            got = equiv_check(th, u, v)
            verdicts[th] = got.holds
            if th not in theories:
                continue
            ref = semantic_equiv_oracle(th, u, v, objs)
            repro = f"check-equiv --theory {th} --functor {label.split('/')[0]}"
            recs.append(_rec(f"equiv-{th}", label, got, repro))
            agree = Verdict(got.holds == ref.holds, {"checker": got, "oracle": ref},
                            f"checker {_pf(got.holds)}, oracle {_pf(ref.holds)}")
            recs.append(_rec(f"oracle-{th}", label, agree, repro))
        bad = [f"{a}=>{b}" for a in THEORIES for b in IMPLIES[a] if verdicts[a] and not verdicts[b]]
        recs.append(_rec("locality", label, Verdict(not bad, {"verdicts": verdicts},
                                                    ", ".join(bad) or "no violation"),
                         f"check-equiv --functor {label.split('/')[0]}"))
    return recs


def suite_strict(corpus, cap=None):
    """Strict equalities: path-space sections, homotopy endpoints, omega
    coherence and the self-action round trips."""
    recs = []
    for n, X in corpus.diagrams.items():
        P = path_space(X, cap)
        recs.append(_rec("path-sections", n, P.check_sections(), f"tilde --diagram {n}"))
        recs.append(_rec("path-rho-sex", n, P.rho_sex_check(), f"tilde --diagram {n}"))
        recs.append(_rec("homotopy-id", n, homotopy_id(X, cap).validate(), f"tilde --diagram {n}"))
        recs.append(_rec("self-odot", n, self_odot_iso(X, cap), f"odot --diagram {n} --setoid TERM"))
    for n, f in corpus.morphisms.items():
        recs.append(_rec("homotopy-witness", n,
                         homotopy_from_witness(f, f, equal_diag(f, f), cap).validate(), "check-homotopy"))
        recs.append(_rec("self-odot-naturality", n, self_odot_naturality(f, cap), "check-homotopy"))
        for m, g in corpus.morphisms.items():
            if g.dom is f.cod:
                recs.append(_rec("homotopy-comp", f"{n};{m}", homotopy_comp(f, g, cap).validate(),
                                 "check-homotopy"))
    for un, u in corpus.functors.items():
        mors = [(m, f) for m, f in corpus.morphisms.items() if f.dom.shape is u.cod]
        for xn, X in corpus.diagrams_over(u.cod).items():
            f = next((g for _, g in mors if g.dom is X), None)
            recs.append(_rec("omega-coherence", f"{un}:{xn}",
                             omega_coherence(X, u, identity_functor(u.dom), f, cap), "check-homotopy"))
            recs.append(_rec("omega-sex", f"{un}:{xn}", omega_sex_check(X, u, cap), "check-homotopy"))
    return recs


def suite_cocontinuity(corpus, cap=None, compare_cap=None, functor=None, coefficients=COEFFICIENTS):
    """cocontinuity_check on every discrete-target functor, diagram over its
    domain and coefficient; with ``compare_cap`` also the verdict at that cap."""
    funcs = _discrete_target(corpus)
    if functor is not None:
        u = _lookup(corpus, "functor", functor)
        if not u.cod.is_discrete:
            raise InputError(f"functor {functor} does not have a discrete target")
        funcs = {functor: u}
    recs = []
    for un, u in funcs.items():
        for xn, X in corpus.diagrams_over(u.dom).items():
            for sn in coefficients:
                S = _lookup(corpus, "setoid", sn)
                inst = f"{un}:{xn}:{sn}"
                repro = f"check-cocontinuity --functor {un}"
                vd = cocontinuity_check(u, X, S, cap)
                recs.append(_rec("cocontinuity", inst, vd, repro))
                recs.append(_rec("odot-fiberwise", f"{xn}:{sn}",
                                 odot_fiber_comparison(tilde(X, cap), S), f"odot --diagram {xn} --setoid {sn}"))
                if compare_cap is not None:
                    other = cocontinuity_check(u, X, S, compare_cap)
                    same = vd.holds == other.holds
                    recs.append(_rec("cap-sensitivity", inst,
                                     Verdict(same, {"verdicts": (vd.holds, other.holds)},
                                             f"cap {cap or 'default'}: {_pf(vd.holds)}, "
                                             f"cap {compare_cap}: {_pf(other.holds)}"),
                                     repro + f" --cap {compare_cap}"))
    return _dedup(recs)


def suite_universality(corpus, theories=TRUNCATIONS, cap=None, coefficients=("TERM", "TWO")):
    """X -> X (.)~ L(*) against L, every naturality square, counit
    invertibility, and the free-cocompletion value checks."""
    recs = []
    for th in theories:
        repro = f"check-universality --theory {th}"
        for kind, name, vd in universality_check(th, corpus.diagrams, list(corpus.morphisms.items()), cap):
            recs.append(_rec(f"universality-{kind}-{th}", name, vd, repro))
        objs = {n: reflect(th, X, cap)[0] for n, X in corpus.diagrams.items()}
        for name, vd in counit_invertible_check(th, objs):
            recs.append(_rec(f"counit-{th}", name, vd, repro))
        for n, X in corpus.diagrams.items():
            for sn in coefficients:
                S = _lookup(corpus, "setoid", sn)
                recs.append(_rec(f"free-cocompletion-{th}", f"{n}:{sn}",
                                 free_cocompletion_map(th, S, X, cap), repro))
    return recs


def suite_asymmetry(corpus):
    """The Set reflection against limits and colimits, over every corpus
    diagram and every restriction of one along a corpus functor."""
    ds = dict(corpus.diagrams)
    for un, u in corpus.functors.items():
        for xn, X in corpus.diagrams_over(u.cod).items():
            ds[f"{un}*{xn}"] = restrict(u, X)
    recs = [_rec("set-reflection", n, set_reflection_commutation(X), f"limit --diagram {n}")
            for n, X in ds.items()]
    recs.append(_rec("asymmetry", "corpus", asymmetry_search(ds), "check-asymmetry"))
    return recs


def _dedup(recs):
    seen, out = set(), []
    for r in recs:
        if (r[0], r[1]) not in seen:
            seen.add((r[0], r[1]))
            out.append(r)
    return out


# -- constructions -----------------------------------------------------------------------

def _summary(S):
    return f"{len(S.X0)} points, {S.n_classes()} classes: " + " ".join(
        "{" + ",".join(str(x) for x in cls) + "}" for cls in class_members(S))


def _per_object(A, D):
    return "; ".join(f"{A.objects[a]}: {_summary(D.objs[a])}" for a in range(A.n_objects))


def run_construction(command, corpus, args, out):
    if command == "kan":
        u = _lookup(corpus, "functor", _need(args, "functor"))
        X = _lookup(corpus, "diagram", _need(args, "diagram"))
        if X.shape is not u.dom:
            raise InputError(f"diagram {args.diagram} is not over the domain of {args.functor}")
        side = "right" if args.right else "left"
        K = right_kan(u, X) if args.right else left_kan(u, X)
        K.validate()
        return [_rec(f"kan-{side}", f"{args.functor}:{args.diagram}",
                     Verdict(True, {}, _per_object(u.cod, K)))]
    if command in ("limit", "colimit"):
        X = _lookup(corpus, "diagram", _need(args, "diagram"))
        S = limit(X).L if command == "limit" else colimit(X).C
        return [_rec(command, args.diagram, Verdict(True, {}, _summary(S)))]
    if command == "quotient":
        if args.category:
            A = _lookup(corpus, "category", args.category)
            return [_rec("pi0-law", args.category, pi0_law(A))]
        if args.setoid:
            S = _lookup(corpus, "setoid", args.setoid)
            return [_rec("quotient", args.setoid, Verdict(True, {}, _summary(S)))]
        X = _lookup(corpus, "diagram", _need(args, "diagram"))
        return [_rec("quotient", args.diagram, Verdict(True, {}, _per_object(X.shape, X)))]
    if command == "tilde":
        X = _lookup(corpus, "diagram", _need(args, "diagram"))
        E = tilde(X, args.cap)
        A = X.shape
        if args.dump:
            for a in range(A.n_objects):
                out.write(dump_fincat(E.fibers[a], f"{args.diagram}~{A.objects[a]}"))
        sizes = "; ".join(f"{A.objects[a]}: {F.n_objects} objects, {F.n_arrows} arrows"
                          for a, F in enumerate(E.fibers))
        return [_rec("tilde", args.diagram, Verdict(True, {}, sizes)),
                _rec("path-sections", args.diagram, path_space(X, args.cap).check_sections())]
    if command == "odot":
        X = _lookup(corpus, "diagram", _need(args, "diagram"))
        S = _lookup(corpus, "setoid", args.setoid or "TERM")
        E = tilde(X, args.cap)
        D = odot_fiberwise(E, S)
        inst = f"{args.diagram}:{args.setoid or 'TERM'}"
        return [_rec("odot", inst, Verdict(True, {}, _per_object(X.shape, D))),
                _rec("odot-fiberwise", inst, odot_fiber_comparison(E, S))]
    raise InputError(f"unknown command {command!r}")


def _need(args, name):
    val = getattr(args, name)
    if val is None:
        raise InputError(f"--{name} is required")
    return val


# -- report ------------------------------------------------------------------------------

def _pf(b):
    return "pass" if b else "fail"


def _clean(s):
    return " ".join(str(s).split())


def format_report(records):
    lines = []
    for check, inst, vd, repro in sorted(records, key=lambda r: (r[0], r[1])):
        detail = _clean(vd.detail)
        if not vd.holds and repro:
            detail = f"{detail} [reproduce: setoidkan {repro}]".strip()
        lines.append("\t".join((check, inst, _pf(vd.holds), detail)))
    return "\n".join(lines) + ("\n" if lines else "")


# -- entry point -------------------------------------------------------------------------

COMMANDS = ("kan", "limit", "colimit", "quotient", "tilde", "odot", "check-axioms", "check-equiv",
            "check-cocontinuity", "check-universality", "check-homotopy", "check-asymmetry")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--corpus", help="corpus file (default: the bundled corpus)")
    common.add_argument("--theory", choices=THEORIES, help="truncation theory")
    common.add_argument("--over", help="functor to a discrete index category")
    common.add_argument("--cap", type=int, help="free-word enumeration cap")
    common.add_argument("--report", help="write the report here instead of stdout")
    common.add_argument("--functor")
    common.add_argument("--diagram")
    common.add_argument("--setoid")
    common.add_argument("--category")
    p = argparse.ArgumentParser(prog="setoidkan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    kan = sub.add_parser("kan", parents=[common], help="left or right Kan extension")
    side = kan.add_mutually_exclusive_group(required=True)
    side.add_argument("--left", action="store_true")
    side.add_argument("--right", action="store_true")
    sub.add_parser("limit", parents=[common], help="limit of a diagram")
    sub.add_parser("colimit", parents=[common], help="colimit of a diagram")
    sub.add_parser("quotient", parents=[common], help="classes of a setoid, diagram or category")
    t = sub.add_parser("tilde", parents=[common], help="strictified diagram")
    t.add_argument("--dump", action="store_true", help="print the fibers in category format")
    sub.add_parser("odot", parents=[common], help="strictified diagram acting on a setoid")
    sub.add_parser("check-axioms", parents=[common], help="derivator axioms and Kan checks")
    sub.add_parser("check-equiv", parents=[common], help="equivalence criteria against the oracle")
    c = sub.add_parser("check-cocontinuity", parents=[common], help="cocontinuity of the action")
    c.add_argument("--compare-cap", type=int, help="also run at this cap and compare verdicts")
    sub.add_parser("check-universality", parents=[common], help="universality per theory")
    sub.add_parser("check-homotopy", parents=[common], help="strict equalities of the action")
    sub.add_parser("check-asymmetry", parents=[common], help="Set reflection against limits")
    return p


def run(command, corpus, args, out=sys.stdout):
    """The records a command produces."""
    theory_ok = {"check-equiv": THEORIES, "check-universality": TRUNCATIONS}
    if args.theory is not None and command not in theory_ok:
        raise InputError(f"--theory does not apply to {command}")
    if args.theory is not None and args.theory not in theory_ok[command]:
        raise InputError(f"--theory {args.theory} does not apply to {command}")
    if args.over is not None and command != "check-equiv":
        raise InputError(f"--over does not apply to {command}")
    if command == "check-axioms":
        return suite_axioms(corpus)
    if command == "check-equiv":
        ths = (args.theory,) if args.theory else THEORIES
        return suite_equiv(corpus, ths, args.functor, args.over)
    if command == "check-cocontinuity":
        return suite_cocontinuity(corpus, args.cap, args.compare_cap, args.functor)
    if command == "check-universality":
        ths = (args.theory,) if args.theory else TRUNCATIONS
        return suite_universality(corpus, ths, args.cap)
    if command == "check-homotopy":
        return suite_strict(corpus, args.cap)
    if command == "check-asymmetry":
        return suite_asymmetry(corpus)
    return run_construction(command, corpus, args, out)


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_PASS
    try:
        corpus = load(args.corpus) if args.corpus else default_corpus()
        records = run(args.command, corpus, args, out)
    except (FormatError, InputError, OSError) as e:
        err.write(f"setoidkan: input error: {e}\n")
        return EXIT_INPUT
    except (InvariantError, DiagramError, SetoidError, CategoryError) as e:
        err.write(f"setoidkan: invariant error: {e}\n")
        return EXIT_INVARIANT
    text = format_report(records)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_PASS if all(r[2].holds for r in records) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
