"""Command-line front end: ``thompson SUBCOMMAND ...``.

Exit status is 0 for success or a true verdict, 1 for a false verdict or
an empty search, 2 for bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import core2, jones, presentation, t3
from .dyadic import parse_dyadic
from .treepair import TreePair, evaluate, from_word, normal_form, order, reduce
from .words import WordSyntaxError, word


class InputError(ValueError):
    pass


def parse_pair(text: str) -> TreePair:
    try:
        return TreePair.parse(text)
    except ValueError as err:
        raise InputError(f"bad tree pair {text!r}: {err}") from None


def element(text: str) -> TreePair:
    """A word, or a pair in ``R ; S ; n`` form."""
    if ";" in text:
        return parse_pair(text)
    return from_word(word(text))


class Output:
    def __init__(self, as_json: bool, stream):
        self.as_json = as_json
        self.stream = stream

    def emit(self, text: str, data=None):
        if self.as_json:
            print(json.dumps(data, sort_keys=True), file=self.stream)
        else:
            print(text, file=self.stream)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_eval(args, out: Output) -> int:
    tp = element(args.word)
    try:
        t = parse_dyadic(args.point) if tp.arity == 2 else args.point
    except ValueError:
        raise InputError(f"bad point {args.point!r}") from None
    value = evaluate(tp, t)
    out.emit(str(value), {"word": args.word, "point": str(t), "value": str(value)})
    return 0


def cmd_mul(args, out: Output) -> int:
    tp = reduce(element(args.word))
    out.emit(str(tp), tp.to_json())
    return 0


def cmd_reduce(args, out: Output) -> int:
    tp = reduce(parse_pair(args.pair))
    out.emit(str(tp), tp.to_json())
    return 0


def cmd_order(args, out: Output) -> int:
    k = order(element(args.word), args.cap)
    out.emit(str(k) if k else f"none up to {args.cap}", {"order": k, "cap": args.cap})
    return 0 if k else 1


def cmd_member(args, out: Output) -> int:
    tp = element(args.word)
    bip = jones.member_vect_bipartite(tp)
    par = jones.member_vect_parity(tp)
    out.emit(f"bipartite: {_yes(bip)}; parity: {par}", {"bipartite": bip, "parity": str(par), "member": bip})
    return 0 if bip else 1


def cmd_factor(args, out: Output) -> int:
    tp = element(args.word)
    try:
        fac = jones.factorize(tp)
    except jones.NotInJonesSubgroup as err:
        out.emit(str(err), {"error": str(err)})
        return 1
    p, q = normal_form(fac.p), normal_form(fac.q)
    text = f"p = {p or '1'} ; c{2 * fac.n}^{fac.m} ; q = {q or '1'}"
    data = {"p": fac.p.to_json(), "n": fac.n, "m": fac.m, "q": fac.q.to_json(), "p_word": str(p), "q_word": str(q)}
    out.emit(text, data)
    return 0


def cmd_graph(args, out: Output) -> int:
    g = jones.thompson_graph_of_pair(element(args.word))
    bip = jones.is_bipartite(g)
    g = jones.ThompsonGraph(g.vertex_count, g.edges, bip.coloring)
    if args.dot:
        out.emit(g.to_dot(), {"dot": g.to_dot()})
        return 0
    edges = " ".join(f"{u}-{v}" for u, v in sorted(g.edges))
    text = f"vertices: {g.vertex_count}\nedges: {edges or '-'}\nbipartite: {_yes(bool(bip))}"
    if not bip:
        text += "\nodd cycle: " + " ".join(map(str, bip.odd_cycle))
    data = {
        "vertices": g.vertex_count,
        "edges": sorted(map(list, g.edges)),
        "coloring": list(bip.coloring) if bip else None,
        "odd_cycle": list(bip.odd_cycle) if not bip else None,
    }
    out.emit(text, data)
    return 0


def _core(words: Sequence[str]) -> core2.CoreGraph:
    return core2.build_core([element(w) for w in words])


def cmd_core(args, out: Output) -> int:
    core = _core(args.generators)
    pres = core2.core_presentation(core)
    parts = []
    if args.dot:
        parts.append(core.to_dot())
    if args.presentation or not args.dot:
        parts.append(str(pres))
    if not args.dot:
        parts.insert(0, f"vertices: {core.vertex_count}")
    data = {
        "vertices": core.vertex_count,
        "children": [list(k) if k else None for k in core.children],
        "presentation": str(pres),
    }
    if args.dot:
        data["dot"] = core.to_dot()
    out.emit("\n".join(parts), data)
    return 0


def cmd_accept(args, out: Output) -> int:
    gens = list(args.core_from)
    target = args.word
    if target is None:
        if len(gens) < 2:
            raise InputError("accept needs generator words and a word to test")
        target = gens.pop()
    ok = core2.accepts(_core(gens), element(target))
    out.emit("accepted" if ok else "rejected", {"accepted": ok})
    return 0 if ok else 1


def cmd_verify(args, out: Output) -> int:
    try:
        report = presentation.relation_suite(args.suite, args.range)
    except KeyError as err:
        raise InputError(err.args[0]) from None
    if out.as_json:
        out.emit("", report.to_json())
    else:
        lines = report.lines() if args.verbose else [c.line() for c in report.failures] + [report.summary()]
        out.emit("\n".join(lines))
    return 0 if report else 1


def cmd_standard_form(args, out: Output) -> int:
    sf = presentation.symbolic_standard_form(args.word)
    out.emit(str(sf), {"p": str(sf.p), "n": sf.n, "m": sf.m, "q": str(sf.q), "word": str(sf.as_word())})
    return 0


def cmd_alpha(args, out: Output) -> int:
    a = presentation.dihedral_alpha(args.word)
    out.emit(f"t -> {'-t' if a.flip else 't'} {'-' if a.translation < 0 else '+'} {abs(a.translation)}",
             {"translation": a.translation, "flip": a.flip})
    return 0


def cmd_torsion(args, out: Output) -> int:
    try:
        hits = t3.search_torsion(args.arity, args.order, args.max_leaves)
    except ValueError as err:
        raise InputError(str(err)) from None
    # the JSON list of serialized pairs is the native output here
    print(json.dumps([tp.to_json() for tp in hits], sort_keys=True), file=out.stream)
    return 0 if hits else 1


def cmd_witness(args, out: Output) -> int:
    try:
        n = jones.commensurator_witness(element(args.word), args.cap)
    except (jones.InJonesSubgroup, jones.SearchExhausted) as err:
        out.emit(str(err), {"witness": None, "reason": str(err)})
        return 1
    out.emit(str(n), {"witness": n})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thompson", description="Tree-pair computations in Thompson's group T.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("eval", cmd_eval, "image of a point")
    p.add_argument("word")
    p.add_argument("point")
    add("mul", cmd_mul, "reduced tree pair of a word").add_argument("word")
    add("reduce", cmd_reduce, "reduce a tree pair 'R ; S ; n'").add_argument("pair")
    p = add("order", cmd_order, "order of an element, up to a cap")
    p.add_argument("word")
    p.add_argument("--cap", type=int, default=64)
    add("member", cmd_member, "membership in the Jones subgroup").add_argument("word")
    add("factor", cmd_factor, "p c_2n^m q factorization of a member").add_argument("word")
    p = add("graph", cmd_graph, "Thompson graph of the reduced diagram")
    p.add_argument("word")
    p.add_argument("--dot", action="store_true")
    p = add("core", cmd_core, "2-core of the subgroup generated by the words")
    p.add_argument("generators", nargs="+")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--presentation", action="store_true")
    p = add("accept", cmd_accept, "does the core of the generators accept a word")
    p.add_argument("--core-from", nargs="+", required=True, metavar="GEN")
    p.add_argument("word", nargs="?")
    p = add("verify", cmd_verify, "check a relation suite")
    p.add_argument("suite")
    p.add_argument("--range", type=int, default=None)
    p.add_argument("-v", "--verbose", action="store_true", help="print every instance")
    add("standard-form", cmd_standard_form, "rewrite to p c_2n^m q^-1").add_argument("word")
    add("alpha", cmd_alpha, "image in the infinite dihedral group").add_argument("word")
    p = add("torsion", cmd_torsion, "elements of exact order K")
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--max-leaves", type=int, default=7)
    p = add("witness", cmd_witness, "commensurator witness exponent")
    p.add_argument("word")
    p.add_argument("--cap", type=int, default=30)
    return parser


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.json, stdout)
    try:
        return args.func(args, out)
    except WordSyntaxError as err:
        print(f"thompson: error: bad token {err.token!r} ({str(err).split(':')[0]})", file=stderr)
    except (InputError, ValueError, IndexError) as err:
        print(f"thompson: error: {err}", file=stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
