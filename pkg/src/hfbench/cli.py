"""Command-line front end: one statement language shared by scripts and the REPL.

Statements (one per line, or separated by ``;``; ``//`` starts a comment)::

    N := #10                                  bind a set (any rudimentary term)
    P := plus_graph 10                        arithmetic graph (also times_graph, leq_graph)
    E := compr v in N . exists w in N . <w,w,v> in P
    F := formula forall v in x . v sub x      bind a formula
    U := proxy 0 3/4, 1 3/4                   open proxy (balls: center radius)
    C := closed 0 0, 1 1 window -1 2          closed proxy (intervals: a b)
    r := cut lub(sqrt2, 3/2)                  computable real
    Q := quotient T by <a,b> in R             least representative per block
    R := random 3                             seeded random set of rank <= 3
    print E | ackermann T | rank T | is_delta0 φ | eval φ [over U]
    member X r | cover U p q | complement X A B | compare x y eps | bracket x eps
    lookup P a b | check P | spot x

Any other statement is evaluated and echoed.
"""
from __future__ import annotations

import argparse
import dataclasses
import random
import re
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, TextIO

from . import __version__
from .arithmetic import (
    ArithGraph, MalformedEncoding, NotANatural, NotAnEquivalence, hf_to_nat,
    is_plus_witness, is_times_witness, leq_graph, plus_graph, plus_graph_by_formula,
    plus_witness, quotient, times_graph, times_graph_by_formula, times_witness,
)
from .cuts import (
    AccuracyExhausted, Cut, CutSyntaxError, NeedsMoreAccuracy, cut_compare,
    eval_cut_expr, spot_check, try_member,
)
from .hf import (
    CapExceeded, CodeOverflow, HfError, HfSet, LiteralSyntaxError, Caps,
    ackermann_code, as_pair, format_set, parse_literal, get_caps, rank, random_set, set_caps, von_neumann,
    _tree_size,
)
from .logic import Formula, comprehend, eval_relativized, format_formula, is_delta0
from .parser import ParseError, parse_comprehension, parse_formula, parse_term
from .realline import (
    ProxyError, closed_complement, closed_member, covers_interval, format_rational, open_complement, open_member,
    parse_closed_proxy, parse_open_proxy, parse_rational, proxy_intersect, proxy_union,
)
from .rudimentary import TermError, UnboundVariable, eval_term

__all__ = ["Session", "StatementError", "Report", "run_script", "main", "error_code"]


class StatementError(HfError):
    def __init__(self, message: str, code: str = "parse"):
        self.code = code
        super().__init__(message)


def error_code(exc: BaseException) -> str:
    if isinstance(exc, StatementError):
        return exc.code
    if isinstance(exc, (ParseError, LiteralSyntaxError, CutSyntaxError)):
        return "parse"
    if isinstance(exc, (CapExceeded, CodeOverflow, RecursionError)):
        return "cap"
    if isinstance(exc, UnboundVariable):
        return "unbound"
    if isinstance(exc, (NeedsMoreAccuracy, AccuracyExhausted)):
        return "accuracy"
    if isinstance(exc, OSError):
        return "io"
    if isinstance(exc, (NotANatural, NotAnEquivalence, ProxyError, MalformedEncoding,
                        TermError, ValueError, TypeError, HfError)):
        return "domain"
    return "internal"


@dataclass(frozen=True)
class Binding:
    kind: str  # set | graph | formula | open | closed | cut
    value: object
    source: str = ""


_GRAPH_BUILDERS = {"plus_graph": plus_graph, "times_graph": times_graph}
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")
_NATIVE = {"+": lambda a, b: a + b, "*": lambda a, b: a * b}


class Session:
    """Named bindings plus caps and a seeded RNG.  Rebinding a name replaces
    the entry; bound values are never mutated."""

    def __init__(self, seed: int = 0, raw: bool = False, echo_raw: bool = False):
        self.bindings: dict[str, Binding] = {}
        self.seed = seed
        self.rng = random.Random(seed)
        self.raw = raw
        self.echo_raw = echo_raw

    # -- helpers

    def set_env(self) -> dict[str, HfSet]:
        env = {}
        for name, b in self.bindings.items():
            if b.kind == "set":
                env[name] = b.value
            elif b.kind == "graph":
                env[name] = b.value.graph
        return env

    def lookup(self, name: str, *kinds: str) -> Binding:
        b = self.bindings.get(name)
        if b is None:
            raise UnboundVariable(name)
        if kinds and b.kind not in kinds:
            raise StatementError(f"{name} is a {b.kind}, expected {' or '.join(kinds)}", "type")
        return b

    def term(self, text: str) -> HfSet:
        return eval_term(parse_term(text.strip()), self.set_env())

    def formula(self, text: str) -> Formula:
        text = text.strip()
        if _NAME.match(text) and self.bindings.get(text, Binding("")).kind == "formula":
            return self.bindings[text].value
        return parse_formula(text)

    def cuts(self) -> dict[str, Cut]:
        return {n: b.value for n, b in self.bindings.items() if b.kind == "cut"}

    def show(self, b: Binding) -> str:
        """Canonical text; re-parses (after ``name :=``) to the same binding."""
        if b.kind == "set":
            return format_set(b.value, sugar=not self.raw)
        if b.kind == "formula":
            return "formula " + format_formula(b.value)
        if b.kind == "open":
            return ("proxy " + ", ".join(f"{format_rational(x.center)} {format_rational(x.radius)}"
                                         for x in b.value.balls)).rstrip()
        if b.kind == "closed":
            s = ("closed " + ", ".join(f"{format_rational(a)} {format_rational(c)}"
                                       for a, c in b.value.intervals)).rstrip()
            if b.value.window is not None:
                s += " window " + " ".join(map(format_rational, b.value.window))
            return s
        return b.source

    def summary(self, name: str, b: Binding) -> str:
        v = b.value
        if b.kind == "set":
            return f"{name} : set, {len(v)} members, rank {rank(v)}"
        if b.kind == "graph":
            return f"{name} : graph {b.source}, {len(v)} triples"
        if b.kind == "formula":
            return f"{name} : formula, {'delta0' if is_delta0(v) else 'unbounded'}"
        if b.kind == "open":
            return f"{name} : proxy, {len(v)} balls"
        if b.kind == "closed":
            return f"{name} : closed, {len(v)} intervals"
        return f"{name} : cut"

    # -- values

    def value(self, text: str) -> Binding:
        text = text.strip()
        if not text:
            raise StatementError("empty value")
        if _NAME.match(text) and text in self.bindings:
            return self.bindings[text]
        head, _, rest = text.partition(" ")
        rest = rest.strip()
        if head == "compr":
            var, domain, f = parse_comprehension(rest)
            env = self.set_env()
            return Binding("set", comprehend(eval_term(domain, env), f, var, env))
        if head in _GRAPH_BUILDERS:
            n = _natural(rest)
            return Binding("graph", _GRAPH_BUILDERS[head](n), f"{head} {n}")
        if head == "leq_graph":
            return Binding("set", leq_graph(_natural(rest)))
        if head == "formula":
            return Binding("formula", parse_formula(rest))
        if head == "proxy":
            return Binding("open", parse_open_proxy(_list_lines(rest)))
        if head == "closed":
            body, _, window = rest.partition("window")
            w = tuple(map(parse_rational, window.split())) if window.strip() else None
            if w is not None and len(w) != 2:
                raise StatementError("window needs two rationals")
            return Binding("closed", parse_closed_proxy(_list_lines(body), w))
        if head == "cut":
            return Binding("cut", eval_cut_expr(rest, self.cuts()), "cut " + rest)
        if head == "random":
            return Binding("set", random_set(self.rng, _natural(rest)))
        if head == "quotient":
            if " by " not in rest:
                raise StatementError("usage: quotient T by φ(a,b)")
            t, _, f = rest.partition(" by ")
            return Binding("set", quotient(self.term(t), self.formula(f), params=self.set_env()))
        if head in ("proxy_union", "proxy_intersect"):
            names = rest.split()
            proxies = [self.lookup(n, "open").value for n in names]
            if head == "proxy_union":
                return Binding("open", proxy_union(proxies))
            if len(proxies) != 2:
                raise StatementError("proxy_intersect takes two proxies")
            return Binding("open", proxy_intersect(*proxies))
        if head == "complement":
            name, *w = rest.split()
            if len(w) != 2:
                raise StatementError("usage: complement X A B")
            A, B = map(parse_rational, w)
            b = self.lookup(name, "open", "closed")
            if b.kind == "open":
                return Binding("closed", open_complement(b.value, (A, B)))
            return Binding("open", closed_complement(b.value, (A, B)))
        return Binding("set", self.term(text))

    # -- statements

    def execute(self, stmt: str) -> list[str]:
        stmt = stmt.strip()
        if not stmt:
            return []
        m = re.match(r"([A-Za-z_][A-Za-z0-9_']*)\s*:=(.*)\Z", stmt, re.S)
        if m:
            name, rhs = m.group(1), m.group(2)
            b = self.value(rhs)
            self.bindings[name] = b
            return [self.summary(name, b)]
        head, _, rest = stmt.partition(" ")
        handler = getattr(self, "cmd_" + head, None)
        if handler is not None:
            return handler(rest.strip())
        b = self.value(stmt)
        text = self.show(b)
        if self.echo_raw and b.kind == "set" and not self.raw and _tree_size(b.value) <= 4096:
            raw = format_set(b.value, sugar=False)
            if raw != text:
                text = f"{text} = {raw}"
        return [text]

    def cmd_print(self, rest):
        return [self.show(self.value(rest))]

    def cmd_ackermann(self, rest):
        return [str(ackermann_code(self.term(rest)))]

    def cmd_rank(self, rest):
        return [str(rank(self.term(rest)))]

    def cmd_is_delta0(self, rest):
        return [_bool(is_delta0(self.formula(rest)))]

    def cmd_eval(self, rest):
        f, sep, u = rest.rpartition(" over ")
        if not sep:
            f, u = rest, ""
        universe = self.term(u) if u.strip() else von_neumann(0)
        return [_bool(eval_relativized(self.formula(f), universe, self.set_env()))]

    def cmd_member(self, rest):
        name, r = _split(rest, 2, "member X r")
        b = self.lookup(name, "open", "closed", "cut")
        r = parse_rational(r)
        if b.kind == "open":
            return [_bool(open_member(b.value, r))]
        if b.kind == "closed":
            return [_bool(closed_member(b.value, r))]
        result = try_member(b.value, r)
        return ["needs-more-accuracy" if result is None else _bool(result)]

    def cmd_cover(self, rest):
        name, p, q = _split(rest, 3, "cover U p q")
        res = covers_interval(self.lookup(name, "open").value, parse_rational(p), parse_rational(q))
        if res.covered:
            return ["true"] + [f"  chain {format_rational(x.center)} {format_rational(x.radius)}"
                               for x in res.chain]
        return ["false", f"  witness {format_rational(res.witness)}"]

    def cmd_compare(self, rest):
        x, y, eps = _split(rest, 3, "compare x y eps")
        cuts = self.cuts()
        return [cut_compare(eval_cut_expr(x, cuts), eval_cut_expr(y, cuts),
                            parse_rational(eps)).value]

    def cmd_bracket(self, rest):
        x, eps = _split(rest, 2, "bracket x eps")
        lo, hi = eval_cut_expr(x, self.cuts()).bracket(parse_rational(eps))
        return [f"{format_rational(lo)} {format_rational(hi)}"]

    def cmd_lookup(self, rest):
        name, a, b = _split(rest, 3, "lookup P a b")
        c = self.lookup(name, "graph").value.lookup(_natural(a), _natural(b))
        return ["undefined" if c is None else str(c)]

    def cmd_check(self, rest):
        g = self.lookup(rest, "graph").value
        return [_graph_check(g)]

    def cmd_spot(self, rest):
        problems = spot_check(self.lookup(rest, "cut").value, samples=200,
                              rng=random.Random(self.rng.random()))
        return ["ok"] if not problems else problems


def _graph_check(g: ArithGraph) -> str:
    native = _NATIVE[g.op]
    expected = {(a, b, native(a, b)) for a in range(g.bound) for b in range(g.bound)
                if native(a, b) < g.bound}
    got = set(g.triples())
    return f"{len(got)} triples, {len(got ^ expected)} mismatches"


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _natural(text: str) -> int:
    text = text.strip().lstrip("#")
    if not text.isdigit():
        raise StatementError(f"expected a natural number, got {text!r}")
    return int(text)


def _split(rest: str, n: int, usage: str) -> list[str]:
    parts = rest.split()
    if len(parts) != n:
        raise StatementError(f"usage: {usage}")
    return parts


def _list_lines(text: str) -> str:
    return "\n".join(part.strip() for part in text.split(",") if part.strip())


# -- scripts -------------------------------------------------------------------

@dataclass
class Report:
    lines: list[str]
    errors: list[str]
    status: int

    @property
    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


def _statements(text: str):
    """(line, column, statement) triples; ``//`` comments, ``;`` separators."""
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("//", 1)[0]
        col = 0
        for piece in line.split(";"):
            if piece.strip():
                lead = len(piece) - len(piece.lstrip())
                yield lineno, col + lead + 1, piece.strip()
            col += len(piece) + 1


def format_error(exc: BaseException, stmt: str, line: int | None = None, col: int | None = None) -> str:
    code = error_code(exc)
    where = ""
    if line is not None:
        offset = 0
        inner = getattr(exc, "text", None)
        pos = getattr(exc, "pos", None)
        if isinstance(inner, str) and isinstance(pos, int) and "\n" not in inner:
            found = stmt.find(inner.strip()) if inner.strip() else -1
            if found >= 0:
                offset = found + pos - (len(inner) - len(inner.lstrip()))
        where = f" line={line} col={col + offset}"
        if isinstance(exc, ParseError):
            return f"code={code}{where}: {exc.message}  [in: {stmt}]"
    return f"code={code}{where}: {exc}  [in: {stmt}]"


def run_text(text: str, session: Session | None = None, keep_going: bool = False,
             timing: bool = False, err: Callable[[str], None] | None = None) -> Report:
    session = session or Session()
    lines, errors = [], []
    status = 0
    for lineno, col, stmt in _statements(text):
        start = time.perf_counter()
        try:
            out = session.execute(stmt)
        except (HfError, ValueError, TypeError, KeyError, OSError, RecursionError) as exc:
            msg = format_error(exc, stmt, lineno, col)
            errors.append(msg)
            if err:
                err(msg)
            lines.append(f"> {stmt}")
            lines.append(f"! error code={error_code(exc)}")
            status = 1
            if not keep_going:
                break
            continue
        head = f"> {stmt}"
        if timing:
            head += f"  ({time.perf_counter() - start:.3f}s)"
        lines.append(head)
        lines.extend(out)
    return Report(lines, errors, status)


def run_script(path, seed: int = 0, raw: bool = False, keep_going: bool = False,
               timing: bool = False, err: Callable[[str], None] | None = None) -> Report:
    text = Path(path).read_text(encoding="utf-8")
    return run_text(text, Session(seed=seed, raw=raw), keep_going, timing, err)


# -- REPL ------------------------------------------------------------------------

REPL_HELP = (__doc__ or "").split("::", 1)[-1].rstrip() + """

    :help   this text
    :caps   show resource caps
    :quit   leave
"""


def repl(session: Session, stdin: TextIO = sys.stdin, stdout: TextIO = sys.stdout,
         stderr: TextIO = sys.stderr) -> int:
    interactive = stdin.isatty()
    while True:
        if interactive:
            stdout.write("hf> ")
            stdout.flush()
        line = stdin.readline()
        if not line:
            return 0
        line = line.split("//", 1)[0].strip()
        if not line:
            continue
        if line in (":quit", ":q"):
            return 0
        if line == ":help":
            stdout.write(REPL_HELP.lstrip("\n") + "\n")
            continue
        if line == ":caps":
            c = get_caps()
            stdout.write(", ".join(f"{f.name}={getattr(c, f.name)}" for f in dataclasses.fields(c)) + "\n")
            continue
        for _, _, stmt in _statements(line):
            try:
                for out in session.execute(stmt):
                    stdout.write(out + "\n")
            except (HfError, ValueError, TypeError, KeyError, OSError, RecursionError) as exc:
                stderr.write(format_error(exc, stmt) + "\n")


# -- argparse front end ------------------------------------------------------------

def _parse_caps(text: str) -> dict:
    names = {f.name for f in dataclasses.fields(Caps)}
    out = {}
    for item in filter(None, text.split(",")):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in names or not value.strip().isdigit():
            raise argparse.ArgumentTypeError(f"bad cap {item!r}; known caps: {', '.join(sorted(names))}")
        out[key] = int(value)
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hfbench", description="Hereditarily finite set workbench.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--caps", type=_parse_caps, default={}, help="e.g. rank=64,nodes=100000")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--raw", action="store_true", help="print pure braces instead of #n and <a,b>")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a term, or the truth of a formula")
    p.add_argument("expr")
    p.add_argument("--over", default="", help="universe for unbounded quantifiers")
    p.add_argument("--let", action="append", default=[], metavar="NAME=TERM")

    p = sub.add_parser("compr", help="{v in DOMAIN : FORMULA}")
    p.add_argument("var")
    p.add_argument("domain")
    p.add_argument("formula")
    p.add_argument("--let", action="append", default=[], metavar="NAME=TERM")

    p = sub.add_parser("arith", help="set-built arithmetic")
    ars = p.add_subparsers(dest="arith_command", required=True)
    for name, alias in (("plus-graph", "plus"), ("times-graph", "times"), ("leq-graph", "leq")):
        q = ars.add_parser(name, aliases=[alias], help=f"build the {alias} graph on [0,N)")
        q.set_defaults(arith_command=name)
        q.add_argument("n", type=int)
        if alias != "leq":
            q.add_argument("--route", choices=["witness", "formula", "both"], default="both")
            q.add_argument("--triples", action="store_true", help="list triples natively")
        q.add_argument("--export", action="store_true", help="print the graph as a set literal")
    q = ars.add_parser("check", help="check a claim such as 2+3=5 or 2*3=6")
    q.add_argument("claim")
    q = ars.add_parser("quotient", help="quotient of the set literal in FILE")
    q.add_argument("file")
    q.add_argument("--rel", required=True,
                   help="formula in a, b; or 'rational' for cross-multiplication equality")
    q.add_argument("--let", action="append", default=[], metavar="NAME=TERM")

    p = sub.add_parser("real", help="proxy queries")
    rs = p.add_subparsers(dest="real_command", required=True)
    q = rs.add_parser("member")
    q.add_argument("file")
    q.add_argument("points", nargs="+")
    q.add_argument("--closed", action="store_true", help="FILE is a closed proxy")
    q = rs.add_parser("cover")
    q.add_argument("file")
    q.add_argument("p")
    q.add_argument("q")
    q = rs.add_parser("complement")
    q.add_argument("file")
    q.add_argument("--window", nargs=2, required=True, metavar=("A", "B"))
    q.add_argument("--closed", action="store_true", help="FILE is a closed proxy")

    p = sub.add_parser("cut", help="computable reals")
    cs = p.add_subparsers(dest="cut_command", required=True)
    q = cs.add_parser("eval")
    q.add_argument("expr")
    q.add_argument("--member", action="append", default=[], metavar="P")
    q.add_argument("--bracket", metavar="EPS")
    q = cs.add_parser("compare")
    q.add_argument("x")
    q.add_argument("y")
    q.add_argument("--eps", required=True)

    p = sub.add_parser("script", help="run a statement script")
    p.add_argument("path")
    p.add_argument("--keep-going", action="store_true")
    p.add_argument("--timing", action="store_true", help="append wall-clock times (non-deterministic)")

    sub.add_parser("repl", help="interactive loop")
    _accept_negative_rationals(ap)
    return ap


_NEGATIVE = re.compile(r"^-(\d+(/\d+)?|\d*\.\d+)$")


def _accept_negative_rationals(parser: argparse.ArgumentParser) -> None:
    # argparse only treats -3 and -.5 as values, not -3/4
    parser._negative_number_matcher = _NEGATIVE
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for child in action.choices.values():
                _accept_negative_rationals(child)


def _let(session: Session, items):
    for item in items:
        name, sep, term = item.partition("=")
        if not sep or not _NAME.match(name.strip()):
            raise StatementError(f"bad --let {item!r}")
        session.bindings[name.strip()] = Binding("set", session.term(term))


def _run(args, session: Session, out: TextIO, err: TextIO) -> int:
    cmd = args.command
    if cmd == "eval":
        _let(session, args.let)
        try:
            term = parse_term(args.expr)
        except ParseError:
            term = None
        if term is not None:
            out.write(session.show(Binding("set", eval_term(term, session.set_env()))) + "\n")
        else:
            universe = session.term(args.over) if args.over.strip() else von_neumann(0)
            out.write(_bool(eval_relativized(parse_formula(args.expr), universe, session.set_env())) + "\n")
        return 0
    if cmd == "compr":
        _let(session, args.let)
        env = session.set_env()
        value = comprehend(session.term(args.domain), parse_formula(args.formula), args.var, env)
        out.write(session.show(Binding("set", value)) + "\n")
        return 0
    if cmd == "arith":
        return _arith(args, session, out)
    if cmd == "real":
        return _real(args, out)
    if cmd == "cut":
        x = eval_cut_expr(args.expr if args.cut_command == "eval" else args.x)
        if args.cut_command == "compare":
            y = eval_cut_expr(args.y)
            out.write(cut_compare(x, y, parse_rational(args.eps)).value + "\n")
            return 0
        for p in args.member:
            r = try_member(x, parse_rational(p))
            out.write(f"{p} {'needs-more-accuracy' if r is None else _bool(r)}\n")
        if args.bracket:
            lo, hi = x.bracket(parse_rational(args.bracket))
            out.write(f"{format_rational(lo)} {format_rational(hi)}\n")
        return 0
    if cmd == "script":
        report = run_script(args.path, seed=args.seed, raw=args.raw, keep_going=args.keep_going,
                            timing=args.timing, err=lambda m: err.write(m + "\n"))
        out.write(report.text)
        return report.status
    if cmd == "repl":
        session.echo_raw = True
        return repl(session, sys.stdin, out, err)
    raise AssertionError(cmd)


def _arith(args, session: Session, out: TextIO) -> int:
    cmd = args.arith_command
    if cmd == "check":
        return _arith_check(args.claim, session, out)
    if cmd == "quotient":
        _let(session, args.let)
        x = parse_literal(Path(args.file).read_text(encoding="utf-8").strip())
        rel = _cross_multiplication if args.rel.strip() == "rational" else session.formula(args.rel)
        q = quotient(x, rel, params=session.set_env())
        out.write(session.show(Binding("set", q)) + "\n")
        out.write(f"{len(q)} blocks\n")
        return 0
    n = args.n
    if cmd == "leq-graph":
        g = leq_graph(n)
        out.write(f"leq_graph {n}: {len(g)} pairs\n")
        if args.export:
            out.write(session.show(Binding("set", g)) + "\n")
        return 0
    op = cmd.split("-")[0]
    routes = {"plus": (plus_graph, plus_graph_by_formula),
              "times": (times_graph, times_graph_by_formula)}[op]
    graphs = []
    if args.route in ("witness", "both"):
        graphs.append(("witness", routes[0](n)))
    if args.route in ("formula", "both"):
        graphs.append(("formula", routes[1](n)))
    for route, g in graphs:
        out.write(f"{op}_graph {n} [{route}]: {_graph_check(g)}\n")
    if len(graphs) == 2:
        out.write(f"routes agree: {_bool(graphs[0][1].graph is graphs[1][1].graph)}\n")
    if args.triples:
        sym = "+" if op == "plus" else "*"
        for a, b, c in graphs[0][1].triples():
            out.write(f"{a} {sym} {b} = {c}\n")
    if args.export:
        out.write(session.show(Binding("set", graphs[0][1].graph)) + "\n")
    return 0


_CLAIM = re.compile(r"\s*(\d+)\s*([+*])\s*(\d+)\s*=\s*(\d+)\s*\Z")


def _arith_check(claim: str, session: Session, out: TextIO) -> int:
    m = _CLAIM.match(claim)
    if not m:
        raise StatementError(f"expected a claim like 2+3=5, got {claim!r}")
    a, op, b, c = int(m.group(1)), m.group(2), int(m.group(3)), int(m.group(4))
    n = max(a, b, c) + 1
    va, vb, vc = von_neumann(a), von_neumann(b), von_neumann(c)
    if op == "+":
        holds = (a, b, c) in plus_graph(n)
        witness = plus_witness(va, vb) if holds else None
        ok = witness is not None and is_plus_witness(witness, va, vb, vc)
    else:
        plus = plus_graph(n)
        holds = (a, b, c) in times_graph(n, plus)
        witness = times_witness(va, vb, plus) if holds else None
        ok = witness is not None and is_times_witness(witness, va, vb, vc, plus)
    out.write(_bool(holds) + "\n")
    if holds:
        out.write(f"witness {session.show(Binding('set', witness))} ({'verified' if ok else 'UNVERIFIED'})\n")
    return 0


def _cross_multiplication(x: HfSet, y: HfSet) -> bool:
    px, py = as_pair(x), as_pair(y)
    if px is None or py is None:
        raise MalformedEncoding("rational quotient needs pairs of naturals")
    (p1, q1), (p2, q2) = [tuple(map(hf_to_nat, p)) for p in (px, py)]
    return p1 * q2 == p2 * q1


def _real(args, out: TextIO) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    rc = args.real_command
    if rc == "member":
        proxy = parse_closed_proxy(text) if args.closed else parse_open_proxy(text)
        test = closed_member if args.closed else open_member
        for p in args.points:
            out.write(f"{p} {_bool(test(proxy, parse_rational(p)))}\n")
        return 0
    if rc == "cover":
        res = covers_interval(parse_open_proxy(text), parse_rational(args.p), parse_rational(args.q))
        if res.covered:
            out.write("true\n")
            for b in res.chain:
                out.write(f"chain {format_rational(b.center)} {format_rational(b.radius)}\n")
        else:
            out.write(f"false\nwitness {format_rational(res.witness)}\n")
        return 0
    A, B = map(parse_rational, args.window)
    if args.closed:
        result = closed_complement(parse_closed_proxy(text), (A, B))
        out.write("".join(f"{format_rational(b.center)} {format_rational(b.radius)}\n" for b in result.balls))
    else:
        result = open_complement(parse_open_proxy(text), (A, B))
        out.write("".join(f"{format_rational(a)} {format_rational(b)}\n" for a, b in result.intervals))
    return 0


def main(argv=None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    old = set_caps(**args.caps) if args.caps else None
    session = Session(seed=args.seed, raw=args.raw)
    try:
        return _run(args, session, out, err)
    except (HfError, ValueError, TypeError, KeyError, OSError, RecursionError) as exc:
        err.write(f"code={error_code(exc)}: {exc}\n")
        return 1
    finally:
        if old is not None:
            set_caps(**dataclasses.asdict(old))


if __name__ == "__main__":
    sys.exit(main())
