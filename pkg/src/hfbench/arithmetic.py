"""Natural-number arithmetic built from sets, plus quotients and a rational bridge.

Naturals are von Neumann ordinals (0 = ∅, n+1 = n ∪ {n}).  The graphs of + and
· on [0, N) are built two independent ways:

* a witness route that constructs, for each cell, the finite function that
  justifies the triple (``f(0) = b``, ``f(n+1) = f(n) ∪ {f(n)}``, ``f(a) = c``)
  and checks it with set operations;
* a comprehension route that evaluates a Δ₀ formula with the logic module over
  [0, N)³, quantifying the witness over an explicit finite slice of candidate
  functions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from .hf import (
    HfError, HfSet, as_pair, hf_compare, HfOrder, is_von_neumann, make_set,
    pair, tuple_, von_neumann, _cmp,
)
from .logic import Formula, comprehend_tuples, eval_relativized
from .rudimentary import app, dom, succ

__all__ = [
    "NotANatural", "NotAnEquivalence", "MalformedEncoding", "ArithGraph",
    "nat_to_hf", "hf_to_nat", "is_transitive", "is_epsilon_linear",
    "is_natural", "plus_witness", "is_plus_witness", "plus_graph",
    "plus_graph_by_formula", "times_witness", "is_times_witness",
    "times_graph", "times_graph_by_formula", "leq_graph", "nat_leq",
    "check_equivalence", "quotient", "int_to_hf", "hf_to_int", "rat_to_hf",
    "hf_to_rat", "rat_less_sets", "PLUS_FORMULA", "TIMES_FORMULA",
]


class NotANatural(HfError, ValueError):
    pass


class NotAnEquivalence(HfError, ValueError):
    def __init__(self, axiom: str, witnesses: tuple):
        self.axiom = axiom
        self.witnesses = witnesses
        super().__init__(f"relation is not {axiom}: witnesses {', '.join(map(str, witnesses))}")


class MalformedEncoding(HfError, ValueError):
    pass


def nat_to_hf(n: int) -> HfSet:
    return von_neumann(n)


def is_transitive(x: HfSet) -> bool:
    return all(z in x for y in x.children for z in y.children)


def is_epsilon_linear(x: HfSet) -> bool:
    ch = x.children
    return all(p in q or q in p for i, p in enumerate(ch) for q in ch[i + 1:])


_natural_memo: dict[int, bool] = {}


def is_natural(x: HfSet) -> bool:
    """Transitive and linearly ordered by ∈; exactly the von Neumann naturals
    among well-founded finite sets."""
    r = _natural_memo.get(x.serial)
    if r is None:
        r = _natural_memo[x.serial] = is_transitive(x) and is_epsilon_linear(x)
    return r


def hf_to_nat(x: HfSet) -> int:
    if not is_natural(x):
        raise NotANatural(f"{x} is not a von Neumann natural")
    return len(x.children)


@dataclass(frozen=True)
class ArithGraph:
    """Bounded graph of an operation: triples <a,b,c> with a, b, c < bound."""
    op: str
    bound: int
    graph: HfSet
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def _lookup_table(self) -> dict:
        if self._index is None:
            table = {}
            for t in self.graph.children:
                ab, c = as_pair(t)
                a, b = as_pair(ab)
                table[(len(a.children), len(b.children))] = len(c.children)
            object.__setattr__(self, "_index", table)
        return self._index

    def __contains__(self, triple) -> bool:
        a, b, c = triple
        return self._lookup_table().get((a, b)) == c

    def __len__(self) -> int:
        return len(self.graph.children)

    def lookup(self, a: int, b: int) -> int | None:
        return self._lookup_table().get((a, b))

    def triples(self) -> list[tuple[int, int, int]]:
        return sorted((a, b, c) for (a, b), c in self._lookup_table().items())


# -- + ----------------------------------------------------------------------

def plus_witness(a: HfSet, b: HfSet, limit: HfSet | None = None) -> HfSet | None:
    """The function on a+1 with f(0) = b and f(n+1) = f(n) ∪ {f(n)}.

    Returns None if a value would leave ``limit`` (when given)."""
    value = b
    graph = []
    for n in range(len(a.children) + 1):
        if limit is not None and value not in limit:
            return None
        graph.append(pair(von_neumann(n), value))
        value = succ(value)
    return make_set(graph)


def _functional(f: HfSet) -> bool:
    seen = set()
    for e in f.children:
        p = as_pair(e)
        if p is None or p[0] in seen:
            return False
        seen.add(p[0])
    return True


def is_plus_witness(f: HfSet, a: HfSet, b: HfSet, c: HfSet) -> bool:
    if not _functional(f) or dom(f) is not succ(a):
        return False
    if app(f, von_neumann(0)) is not b or app(f, a) is not c:
        return False
    return all(app(f, succ(n)) is succ(app(f, n)) for n in a.children)


def plus_graph(N: int) -> ArithGraph:
    """Graph of + on [0, N) by explicit witness functions."""
    nats = von_neumann(N)
    zero = von_neumann(0)
    triples = []
    for a in nats.children:
        for b in nats.children:
            if b is zero:
                triples.append(tuple_(a, b, a))
                continue
            f = plus_witness(a, b, limit=nats)
            if f is None:
                continue
            c = app(f, a)
            if is_plus_witness(f, a, b, c):
                triples.append(tuple_(a, b, c))
    return ArithGraph("+", N, make_set(triples))


PLUS_FORMULA = (
    "(b = #0 /\\ a = c) \\/ (~(b = #0) /\\ exists f in app(W, <a,b>) . ("
    "<a,c> in f /\\ <#0,b> in f /\\ dom(f) = succ(a)"
    " /\\ (forall n in a . forall y in ran(f) . (<n,y> in f -> <succ(n),succ(y)> in f))"
    " /\\ (forall p in f . forall q in f . (1st(p) = 1st(q) -> p = q))))"
)


def _progression(start: int, step: int, length: int, N: int) -> HfSet | None:
    values = [start + step * n for n in range(length)]
    if values[-1] >= N or values[0] >= N:
        return None
    return make_set(pair(von_neumann(n), von_neumann(v)) for n, v in enumerate(values))


def _candidate_map(N: int, candidates: Callable[[int, int], list]) -> HfSet:
    entries = []
    for a in range(N):
        for b in range(N):
            fs = [f for f in candidates(a, b) if f is not None]
            entries.append(pair(pair(von_neumann(a), von_neumann(b)), make_set(fs)))
    return make_set(entries)


def plus_candidates(N: int) -> HfSet:
    """Finite slice of candidate witnesses: for each <a,b>, functions on a+1
    into N that are arithmetic progressions from b or b+1 (one of them the true
    witness when a+b < N, the others decoys)."""
    return _candidate_map(N, lambda a, b: [
        _progression(b, 1, a + 1, N),
        _progression(b, 0, a + 1, N),
        _progression(b, 2, a + 1, N),
        _progression(b + 1, 1, a + 1, N),
    ])


def plus_graph_by_formula(N: int) -> ArithGraph:
    nats = von_neumann(N)
    graph = comprehend_tuples((nats, nats, nats), PLUS_FORMULA, ("a", "b", "c"),
                              {"W": plus_candidates(N)})
    return ArithGraph("+", N, graph)


# -- · ----------------------------------------------------------------------

def times_witness(a: HfSet, b: HfSet, plus: ArithGraph) -> HfSet | None:
    """The function on b+1 with g(0) = 0 and <g(n), a, g(n+1)> in the + graph."""
    g = [pair(von_neumann(0), von_neumann(0))]
    value = 0
    av = len(a.children)
    for n in range(1, len(b.children) + 1):
        nxt = plus.lookup(value, av)
        if nxt is None:
            return None
        value = nxt
        g.append(pair(von_neumann(n), von_neumann(value)))
    return make_set(g)


def is_times_witness(g: HfSet, a: HfSet, b: HfSet, c: HfSet, plus: ArithGraph) -> bool:
    if not _functional(g) or dom(g) is not succ(b):
        return False
    zero = von_neumann(0)
    if app(g, zero) is not zero or app(g, b) is not c:
        return False
    return all(tuple_(app(g, n), a, app(g, succ(n))) in plus.graph for n in b.children)


def times_graph(N: int, plus: ArithGraph | None = None) -> ArithGraph:
    """Graph of · on [0, N) by iterated-addition witnesses over the + graph."""
    plus = plus if plus is not None and plus.bound >= N else plus_graph(N)
    nats = von_neumann(N)
    triples = []
    for a in nats.children:
        for b in nats.children:
            g = times_witness(a, b, plus)
            if g is None:
                continue
            c = app(g, b)
            if c in nats and is_times_witness(g, a, b, c, plus):
                triples.append(tuple_(a, b, c))
    return ArithGraph("*", N, make_set(triples))


TIMES_FORMULA = (
    "exists g in app(V, <a,b>) . ("
    "<b,c> in g /\\ <#0,#0> in g /\\ dom(g) = succ(b)"
    " /\\ (forall n in b . exists y in ran(g) . exists z in ran(g) ."
    " (<n,y> in g /\\ <succ(n),z> in g /\\ <y,a,z> in P))"
    " /\\ (forall p in g . forall q in g . (1st(p) = 1st(q) -> p = q)))"
)


def times_candidates(N: int) -> HfSet:
    return _candidate_map(N, lambda a, b: [
        _progression(0, a, b + 1, N),
        _progression(0, a + 1, b + 1, N),
        _progression(1, a, b + 1, N),
    ])


def times_graph_by_formula(N: int, plus: ArithGraph | None = None) -> ArithGraph:
    plus = plus if plus is not None and plus.bound >= N else plus_graph(N)
    nats = von_neumann(N)
    graph = comprehend_tuples((nats, nats, nats), TIMES_FORMULA, ("a", "b", "c"),
                              {"V": times_candidates(N), "P": plus.graph})
    return ArithGraph("*", N, graph)


# -- ≤ ----------------------------------------------------------------------

def nat_leq(a: HfSet, b: HfSet) -> bool:
    """a ≤ b for von Neumann naturals, which is just a ⊆ b."""
    for x in (a, b):
        if not is_natural(x):
            raise NotANatural(f"{x} is not a von Neumann natural")
    return a.issubset(b)


def leq_graph(N: int) -> HfSet:
    nats = von_neumann(N)
    return comprehend_tuples((nats, nats), "m sub n", ("m", "n"))


# -- quotients ---------------------------------------------------------------

Relation = Union[Callable[[HfSet, HfSet], bool], HfSet, Formula, str]


def _relation_test(rel: Relation, universe: HfSet,
                   params: dict | None = None) -> Callable[[HfSet, HfSet], bool]:
    if isinstance(rel, HfSet):
        return lambda a, b: pair(a, b) in rel
    if isinstance(rel, (Formula, str)):
        env = dict(params or {})
        return lambda a, b: eval_relativized(rel, universe, {**env, "a": a, "b": b})
    return rel


def check_equivalence(x: HfSet, rel: Relation, params: dict | None = None) -> None:
    """Raise NotAnEquivalence naming the first violated axiom.  ``params``
    binds extra free variables of a formula relation."""
    test = _relation_test(rel, x, params)
    elems = x.children
    table = {(a, b): bool(test(a, b)) for a in elems for b in elems}
    for a in elems:
        if not table[(a, a)]:
            raise NotAnEquivalence("reflexive", (a,))
    for a in elems:
        for b in elems:
            if table[(a, b)] and not table[(b, a)]:
                raise NotAnEquivalence("symmetric", (a, b))
    for a in elems:
        for b in elems:
            if not table[(a, b)]:
                continue
            for c in elems:
                if table[(b, c)] and not table[(a, c)]:
                    raise NotAnEquivalence("transitive", (a, b, c))


def quotient(x: HfSet, rel: Relation, check: bool = True, params: dict | None = None) -> HfSet:
    """{a ∈ x : for all b ∈ x, a ~ b implies a ≼ b}: the least member of each
    block in the Ackermann order.  A formula relation has free variables a, b
    plus any names in ``params``."""
    if check:
        check_equivalence(x, rel, params)
    test = _relation_test(rel, x, params)
    kept = [a for a in x.children
            if all(_cmp(a, b) <= 0 for b in x.children if test(a, b))]
    return make_set(kept)


# -- integers and rationals ----------------------------------------------------

def int_to_hf(k: int) -> HfSet:
    """Least representative <m,n> (m - n = k) of the integer k."""
    return pair(von_neumann(max(k, 0)), von_neumann(max(-k, 0)))


def hf_to_int(x: HfSet) -> int:
    p = as_pair(x)
    if p is None or not (is_von_neumann(p[0]) and is_von_neumann(p[1])):
        raise MalformedEncoding(f"{x} is not a pair of naturals")
    return len(p[0].children) - len(p[1].children)


def rat_to_hf(r) -> HfSet:
    """Least representative <p,q> (p/q = r, as integer encodings) of r."""
    r = Fraction(r)
    p, q = r.numerator, r.denominator
    pos = pair(int_to_hf(p), int_to_hf(q))
    neg = pair(int_to_hf(-p), int_to_hf(-q))
    return pos if hf_compare(pos, neg) is HfOrder.LESS else neg


def hf_to_rat(x: HfSet) -> Fraction:
    p = as_pair(x)
    if p is None:
        raise MalformedEncoding(f"{x} is not a pair")
    num, den = hf_to_int(p[0]), hf_to_int(p[1])
    if den == 0:
        raise MalformedEncoding("zero denominator")
    return Fraction(num, den)


def _nat_add(x: HfSet, y: HfSet) -> HfSet:
    for _ in y.children:
        x = succ(x)
    return x


def _nat_mul(x: HfSet, y: HfSet) -> HfSet:
    acc = von_neumann(0)
    for _ in y.children:
        acc = _nat_add(acc, x)
    return acc


def _int_parts(x: HfSet) -> tuple[HfSet, HfSet]:
    p = as_pair(x)
    if p is None or not (is_natural(p[0]) and is_natural(p[1])):
        raise MalformedEncoding(f"{x} is not a pair of naturals")
    return p


def _int_mul(x, y):
    (m, n), (m2, n2) = x, y
    return (_nat_add(_nat_mul(m, m2), _nat_mul(n, n2)),
            _nat_add(_nat_mul(m, n2), _nat_mul(n, m2)))


def _int_less(x, y) -> bool:
    # m - n < m2 - n2  iff  m + n2 ⊊ m2 + n
    (m, n), (m2, n2) = x, y
    lhs, rhs = _nat_add(m, n2), _nat_add(m2, n)
    return lhs is not rhs and lhs.issubset(rhs)


def rat_less_sets(x: HfSet, y: HfSet) -> bool:
    """x < y for rational encodings, computed with set operations only."""
    px, py = as_pair(x), as_pair(y)
    if px is None or py is None:
        raise MalformedEncoding("rational encodings are pairs")
    (p1, q1), (p2, q2) = [(_int_parts(a), _int_parts(b)) for a, b in (px, py)]
    zero = (von_neumann(0), von_neumann(0))
    for q in (q1, q2):
        if q[0] is q[1]:
            raise MalformedEncoding("zero denominator")
    # normalise to positive denominators by swapping components (negation)
    if _int_less(q1, zero):
        p1, q1 = p1[::-1], q1[::-1]
    if _int_less(q2, zero):
        p2, q2 = p2[::-1], q2[::-1]
    return _int_less(_int_mul(p1, q2), _int_mul(p2, q1))
