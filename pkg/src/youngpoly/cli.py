"""Command-line front end: ``youngpoly <subcommand> ...``.

Exit codes: 0 on success, 1 on a usage or input error, 2 when a cross-check
or verification suite fails.
"""

import argparse
import json
import sys

from . import analysis, crystals, generators, operators, schubert, suites
from .core import (
    check_composition,
    check_partition,
    check_weak_composition,
    format_perm,
    parse_index,
    parse_permutation,
    partition_of,
    sorting_word,
)
from .fillings import FAMILIES, enumerate_family
from .polynomial import Polynomial, from_text, to_text
from .tableaux import format_word, knuth_class, schur as schur_poly, ssyt

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- routes -------------------------------------------------------------------------

PERM_BASES = {"sch", "ysch"}

ROUTES = {
    "key": dict(suites.KEY_ROUTES),
    "ykey": dict(suites.YKEY_ROUTES),
    "atom": dict(suites.ATOM_ROUTES),
    "yatom": dict(suites.YATOM_ROUTES),
    "particle": {
        "fillings": lambda a: analysis.basis_poly("particle", a, len(a)),
        "compat": generators.fp_via_flag,
    },
    "sch": {
        "pipedreams": schubert.schubert_pd,
        "ops": operators.schubert_ops,
    },
    "ysch": {
        "pipedreams": schubert.yschubert_pd,
        "ops": operators.yschubert_ops,
        "crystal": crystals.ysch_via_rfyc,
    },
}


def _routes_for(basis, n):
    if basis == "schur":
        return {
            "fillings": lambda lam: schur_poly(lam, n),
            "crystal": lambda lam: crystals.build_crystal(lam, n).character(),
        }
    if basis in ROUTES:
        return ROUTES[basis]
    return {"fillings": lambda idx: analysis.basis_poly(basis, idx, n)}


def _resolve_basis(name):
    if name in PERM_BASES:
        return name
    try:
        return analysis.basis_id(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_weak(text, n=None):
    try:
        a = check_weak_composition(parse_index(text))
    except ValueError as exc:
        raise UsageError(f"bad index {text!r}: {exc}") from None
    if n is not None and n != len(a):
        raise UsageError(f"index {text} has length {len(a)} but --n is {n}")
    return a


def _parse_perm(args, text):
    src = args.perm_list if getattr(args, "perm_list", None) else text
    if src is None:
        raise UsageError("a permutation is required")
    try:
        return parse_permutation(src)
    except ValueError as exc:
        raise UsageError(f"bad permutation {src!r}: {exc}") from None


def _index_for(basis, text, n, args=None):
    """Parse an index according to the kind of basis; returns (index, n)."""
    if basis in PERM_BASES:
        w = _parse_perm(args, text)
        if n is not None and n != len(w):
            raise UsageError(f"permutation has size {len(w)} but --n is {n}")
        return w, len(w)
    kind, _ = analysis.BASES[basis]
    if kind == "weak":
        a = _parse_weak(text, n)
        return a, len(a)
    try:
        idx = parse_index(text)
        idx = check_composition(idx) if kind == "composition" else check_partition(idx)
    except ValueError as exc:
        raise UsageError(f"bad {kind} {text!r}: {exc}") from None
    n = len(idx) if n is None else n
    if len(idx) > n:
        raise UsageError(f"{kind} {text} has more than {n} parts")
    return idx, n


# -- output -------------------------------------------------------------------------


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _poly_obj(p):
    obj = p.to_json_obj()
    obj["text"] = to_text(p)
    return obj


# -- subcommands --------------------------------------------------------------------


def cmd_compute(args):
    basis = _resolve_basis(args.basis)
    index, n = _index_for(basis, args.index, args.n, args)
    routes = _routes_for(basis, n)
    if args.via is None:
        chosen = [next(iter(routes))]
    elif args.via == "all":
        chosen = list(routes)
    elif args.via in routes:
        chosen = [args.via]
    else:
        raise UsageError(f"route {args.via!r} is not available for {basis}; choose from {sorted(routes)} or all")
    values = {r: routes[r](index) for r in chosen}
    distinct = set(values.values())
    agree = len(distinct) == 1
    p = values[chosen[0]]
    if args.format == "json":
        obj = {"basis": basis, "index": list(index), "n": n, "routes": chosen, "agree": agree, "polynomial": _poly_obj(p)}
        if not agree:
            obj["diff"] = {r: _poly_obj(v) for r, v in values.items()}
        _emit(args, json.dumps(obj, indent=2))
    elif agree:
        _emit(args, to_text(p))
    else:
        lines = ["routes disagree:"]
        for r, v in values.items():
            lines.append(f"  {r}: {to_text(v)}")
            lines.append(f"      minus {chosen[0]}: {to_text(v - p)}")
        _emit(args, "\n".join(lines))
    return EXIT_OK if agree else EXIT_FAILED


def _enumerate_items(args):
    """Return (text lines, json objects) for the requested object family."""
    kind = args.family
    if kind in FAMILIES:
        spec = FAMILIES[kind]
        if spec.composition:
            idx = parse_index(args.index)
            try:
                check_composition(idx)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            n = args.n if args.n is not None else len(idx)
        else:
            idx = _parse_weak(args.index, args.n)
            n = len(idx)
        items = enumerate_family(kind, idx, n)
        return [T.to_ascii() for T in items], [T.to_json_obj() for T in items], "\n\n"
    if kind in ("W", "YW"):
        a = _parse_weak(args.index, args.n)
        words = generators.row_frank_W(a) if kind == "W" else generators.row_frank_YW(a)
        return [generators.format_row_frank(u, a) for u in words], [list(u) for u in words], "\n"
    if kind in ("RF", "RFYC"):
        w = _parse_perm(args, args.index)
        rs = crystals.enumerate_rf(w) if kind == "RF" else crystals.rfyc(w)
        n = len(w)
        return (
            [f"{crystals.format_rf(r)}  wt {''.join(map(str, crystals.rf_weight(r, n)))}" for r in rs],
            [{"blocks": [list(b) for b in r], "weight": list(crystals.rf_weight(r, n))} for r in rs],
            "\n",
        )
    if kind == "knuth":
        v = parse_index(args.index) if "," in args.index else tuple(int(c) for c in args.index)
        words = sorted(knuth_class(v))
        return [format_word(u) for u in words], [list(u) for u in words], "\n"
    if kind == "compat":
        b = parse_index(args.index) if "," in args.index else tuple(int(c) for c in args.index)
        seqs = generators.compatible_sequences(b)
        return [format_word(s) for s in seqs], [list(s) for s in seqs], "\n"
    if kind == "ssyt":
        lam = check_partition(parse_index(args.index))
        n = args.n if args.n is not None else len(lam)
        ts = ssyt(lam, n)
        return [T.to_ascii() for T in ts], [[list(r) for r in T.rows] for T in ts], "\n\n"
    raise UsageError(f"unknown family {kind!r}")


ENUM_KINDS = sorted(FAMILIES) + ["W", "YW", "RF", "RFYC", "knuth", "compat", "ssyt"]


def cmd_enumerate(args):
    try:
        lines, objs, sep = _enumerate_items(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _emit(args, json.dumps({"family": args.family, "index": args.index, "count": len(objs), "items": objs}, indent=2))
    else:
        _emit(args, sep.join(lines) + f"\n({len(lines)} items)")
    return EXIT_OK


def cmd_expand(args):
    target = _resolve_basis(args.into)
    if args.poly is not None:
        if args.n is None:
            raise UsageError("--poly needs --n")
        p = from_text(args.poly, args.n)
        label = args.poly
    else:
        if args.basis is None or args.index is None:
            raise UsageError("give BASIS INDEX or --poly")
        basis = _resolve_basis(args.basis)
        index, n = _index_for(basis, args.index, args.n, args)
        p = analysis.basis_poly(basis, index, n) if basis not in PERM_BASES else ROUTES[basis]["ops"](index)
        label = f"{basis}_{format_perm(index) if basis in PERM_BASES else ','.join(map(str, index))}"
    if target in PERM_BASES:
        raise UsageError("expansion into Schubert bases is not supported; expand into key or ykey")
    try:
        e = analysis.expand(p, target)
    except analysis.NotInSpanError:
        raise UsageError(f"{label} is not in the span of {target}") from None
    if args.format == "json":
        obj = {
            "source": label,
            "basis": target,
            "integral": e.integral,
            "nonnegative": e.is_nonnegative(),
            "coefficients": [{"index": list(k), "coeff": str(v) if not e.integral else int(v)} for k, v in sorted(e.coeffs.items(), reverse=True)],
        }
        _emit(args, json.dumps(obj, indent=2))
    else:
        _emit(args, f"{label} = {e}")
    return EXIT_OK


def cmd_crystal(args):
    if args.key or args.ykey:
        a = _parse_weak(args.key or args.ykey, args.n)
        lam, n = partition_of(a), len(a)
        if args.key:
            G = crystals.demazure_from_highest(lam, n, sorting_word(a))
        else:
            G = crystals.demazure_from_lowest(lam, n, sorting_word(a, increasing=True))
    else:
        if args.partition is None or args.n is None:
            raise UsageError("crystal needs PARTITION and --n, or --key/--ykey")
        try:
            lam = check_partition(parse_index(args.partition))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        n = args.n
        if args.demazure:
            word = parse_index(args.demazure)
            try:
                G = crystals.demazure_from_highest(lam, n, word)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        else:
            if len(lam) > n:
                raise UsageError(f"partition has more than {n} parts")
            G = crystals.build_crystal(lam, n)
    if args.dot or args.format == "dot":
        _emit(args, G.to_dot())
    elif args.format == "json":
        obj = {
            "n": G.n,
            "vertices": [{"label": crystals.tableau_label(b), "weight": list(G.weight(b))} for b in G.vertices],
            "edges": [{"from": crystals.tableau_label(s), "i": i, "to": crystals.tableau_label(t)} for s, i, t in G.edges],
            "character": _poly_obj(G.character()),
        }
        _emit(args, json.dumps(obj, indent=2))
    else:
        lines = [f"{len(G)} vertices, {len(G.edges)} edges"]
        lines += [f"{crystals.tableau_label(s)} -{i}-> {crystals.tableau_label(t)}" for s, i, t in G.edges]
        lines.append(f"character: {to_text(G.character())}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_pipedreams(args):
    w = _parse_perm(args, args.perm)
    pds = schubert.enumerate_ypd(w) if args.young else schubert.enumerate_pd(w)
    poly = Polynomial.from_weights(len(w), (P.weight() for P in pds))
    if args.format == "json":
        _emit(args, json.dumps({"perm": list(w), "young": args.young, "count": len(pds),
                                "pipe_dreams": [P.to_json_obj() for P in pds], "polynomial": _poly_obj(poly)}, indent=2))
    else:
        blocks = [f"wt {''.join(map(str, P.weight()))}\n{P.to_ascii()}" for P in pds]
        name = "ysch" if args.young else "sch"
        _emit(args, "\n\n".join(blocks) + f"\n\n{name}_{format_perm(w)} = {to_text(poly)}")
    return EXIT_OK


def cmd_verify(args):
    name = args.theorem_opt or args.theorem
    if args.list or name is None:
        _emit(args, "\n".join(f"{k:28s} {s.summary} (default max-len {s.max_len}, max-size {s.max_size})"
                              for k, s in sorted(suites.SUITES.items())))
        return EXIT_OK
    if name not in suites.SUITES:
        raise UsageError(f"unknown theorem {name!r}; see 'verify --list'")
    max_len = args.max_len if args.max_len is not None else args.n
    bad = suites.run_suite(name, max_len, args.max_size)
    status = "PASS" if not bad else "FAIL"
    if args.format == "json":
        _emit(args, json.dumps({"theorem": name, "status": status, "counterexamples": bad}, indent=2))
    else:
        lines = [f"{name}: {status}"]
        if bad:
            lines.append(f"{len(bad)} counterexample(s):")
            lines += [json.dumps(b) for b in bad[:50]]
        _emit(args, "\n".join(lines))
    return EXIT_OK if not bad else EXIT_FAILED


def cmd_classify(args):
    ids = sorted(analysis.CLASSIFIERS) if args.classifier == "all" else [args.classifier]
    for cid in ids:
        if cid not in analysis.CLASSIFIERS:
            raise UsageError(f"unknown classifier {cid!r}; choose from {sorted(analysis.CLASSIFIERS)} or all")
    results = []
    failed = False
    if args.classifier == "all":
        idx = parse_index(args.index)
        if 0 in idx:
            ids = [c for c in ids if analysis.CLASSIFIERS[c][3] == "weak"]
        elif args.n is not None and args.n != len(idx):
            ids = [c for c in ids if analysis.CLASSIFIERS[c][3] == "composition"]
    for cid in ids:
        pred, source, target, kind = analysis.CLASSIFIERS[cid]
        if kind == "weak":
            idx = _parse_weak(args.index, args.n)
            n = len(idx)
        else:
            try:
                idx = check_composition(parse_index(args.index))
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            n = args.n if args.n is not None else len(idx)
        if kind == "composition" and len(idx) > n:
            raise UsageError(f"composition has more than {n} parts")
        row = {"classifier": cid, "source": source, "target": target, "index": list(idx), "n": n, "predicate": pred(idx, n)}
        if args.brute_force:
            w = analysis.brute_force_member(source, idx, target, n)
            row["witness"] = None if w is None else list(w)
            row["agrees"] = (w is not None) == row["predicate"]
            failed |= not row["agrees"]
        results.append(row)
    if args.format == "json":
        _emit(args, json.dumps(results, indent=2))
    else:
        lines = []
        for r in results:
            s = f"{r['classifier']}: {r['source']}_{','.join(map(str, r['index']))} in {r['target']}? {r['predicate']}"
            if "witness" in r:
                wit = "none" if r["witness"] is None else ",".join(map(str, r["witness"]))
                s += f"  (search: {wit}{'' if r['agrees'] else ', MISMATCH'})"
            lines.append(s)
        _emit(args, "\n".join(lines))
    return EXIT_FAILED if failed else EXIT_OK


def cmd_apply_op(args):
    try:
        ops = operators.parse_operator_word(args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    e = _parse_weak(args.monomial, args.n)
    for _, i in ops:
        if not 1 <= i < len(e):
            raise UsageError(f"operator index {i} out of range for n={len(e)}")
    p = operators.apply_mixed(ops, Polynomial.monomial(e))
    if args.format == "json":
        _emit(args, json.dumps(_poly_obj(p), indent=2))
    else:
        _emit(args, to_text(p))
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def build_parser():
    p = _Parser(prog="youngpoly", description="Key, Young key and related polynomial bases with exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--n", type=int, help="number of variables")
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    c = sub.add_parser("compute", help="compute a basis polynomial")
    c.add_argument("basis", help="basis id, e.g. key, ykey, atom, qkey, fslide, particle, QS, schur, sch, ysch")
    c.add_argument("index", nargs="?", help="comma-separated index, or a permutation for sch/ysch")
    c.add_argument("--via", help="construction route (default: the first listed for the basis), or 'all'")
    c.add_argument("--perm-list", help="permutation as a comma list, e.g. 2,1,5,3,4")
    common(c)
    c.set_defaults(func=cmd_compute)

    e = sub.add_parser("enumerate", help="list fillings, words or factorizations")
    e.add_argument("family", choices=ENUM_KINDS)
    e.add_argument("index", nargs="?")
    e.add_argument("--perm-list")
    common(e)
    e.set_defaults(func=cmd_enumerate)

    x = sub.add_parser("expand", help="expand a polynomial in another basis")
    x.add_argument("basis", nargs="?")
    x.add_argument("index", nargs="?")
    x.add_argument("--into", required=True, help="target basis")
    x.add_argument("--poly", help="polynomial in canonical text form instead of BASIS INDEX")
    x.add_argument("--perm-list")
    common(x)
    x.set_defaults(func=cmd_expand)

    k = sub.add_parser("crystal", help="crystal graph of a partition or a Demazure crystal")
    k.add_argument("partition", nargs="?")
    k.add_argument("--demazure", help="reduced word i1,...,ik for a Demazure truncation from the highest weight")
    k.add_argument("--key", help="Demazure crystal whose character is key_a")
    k.add_argument("--ykey", help="opposite Demazure crystal whose character is ykey_a")
    k.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    common(k, ("text", "json", "dot"))
    k.set_defaults(func=cmd_crystal)

    d = sub.add_parser("pipedreams", help="reduced pipe dreams of a permutation")
    d.add_argument("perm", nargs="?")
    d.add_argument("--young", action="store_true", help="Young pipe dreams (weights read from the bottom)")
    d.add_argument("--perm-list")
    common(d)
    d.set_defaults(func=cmd_pipedreams)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("theorem", nargs="?")
    v.add_argument("--theorem", dest="theorem_opt")
    v.add_argument("--max-len", type=int)
    v.add_argument("--max-size", type=int)
    v.add_argument("--list", action="store_true")
    common(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("classify", help="does a basis element coincide with one of the other chirality?")
    s.add_argument("classifier", help="classifier id or 'all'")
    s.add_argument("index")
    s.add_argument("--brute-force", action="store_true", help="also search for an equal polynomial")
    common(s)
    s.set_defaults(func=cmd_classify)

    o = sub.add_parser("apply-op", help="apply an operator word to a monomial")
    o.add_argument("word", help="e.g. pihat:2,pihat:1 (kinds: partial|d, pi, pibar, pihat)")
    o.add_argument("monomial", help="exponent vector, e.g. 0,2,3")
    common(o)
    o.set_defaults(func=cmd_apply_op)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compute" and args.index is None and not args.perm_list:
        parser.exit(EXIT_USAGE, "youngpoly compute: error: an index is required\n")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"youngpoly {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"youngpoly {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
