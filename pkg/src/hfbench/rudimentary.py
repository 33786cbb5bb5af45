"""Rudimentary set functions and a small term language over them.

The nine basis functions ``F0`` ... ``F8`` and the derived operations (pairs,
left-nested tuples, dom/ran, products, restriction, inverse, big union and
intersection, ...) act on canonical ``HfSet`` values.  ``RudTerm`` trees compose
them with variables, set/tuple literals and the two schemes that close the
class: composition and bounded union ``bigcup y in x . H``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .hf import (
    EMPTY, HfError, HfSet, as_pair, format_set, make_set, pair,
    tuple_, _intern_sorted,
)

__all__ = [
    "RudTerm", "Var", "Const", "SetOf", "Tup", "Apply", "BigCup", "Image",
    "TermError", "UnboundVariable", "BASIS", "DERIVED", "eval_basis",
    "eval_derived", "eval_term", "compile_term", "term_free_vars", "format_term",
]


class TermError(HfError):
    """Malformed term: unknown operation or wrong arity."""


class UnboundVariable(HfError, KeyError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"unbound variable {self.name!r}"


# -- set operations ---------------------------------------------------------

def union(x: HfSet, y: HfSet) -> HfSet:
    if not y.children:
        return x
    if not x.children:
        return y
    return make_set(x.children + y.children)


def inter(x: HfSet, y: HfSet) -> HfSet:
    # a subsequence of sorted children stays sorted
    return _intern_sorted(tuple(c for c in x.children if c in y))


def diff(x: HfSet, y: HfSet) -> HfSet:
    return _intern_sorted(tuple(c for c in x.children if c not in y))


def bigcup(x: HfSet) -> HfSet:
    return make_set(z for y in x.children for z in y.children)


def bigcap(x: HfSet) -> HfSet:
    if not x.children:
        return EMPTY
    first, *rest = x.children
    return _intern_sorted(tuple(z for z in first.children if all(z in y for y in rest)))


def setof(*xs: HfSet) -> HfSet:
    return make_set(xs)


def first(x: HfSet) -> HfSet:
    p = as_pair(x)
    return p[0] if p else EMPTY


def second(x: HfSet) -> HfSet:
    p = as_pair(x)
    return p[1] if p else EMPTY


def _pairs_of(x: HfSet):
    for e in x.children:
        p = as_pair(e)
        if p is not None:
            yield p


def dom(x: HfSet) -> HfSet:
    return make_set(a for a, _ in _pairs_of(x))


def ran(x: HfSet) -> HfSet:
    return make_set(b for _, b in _pairs_of(x))


def product(x: HfSet, y: HfSet) -> HfSet:
    return make_set(pair(a, b) for a in x.children for b in y.children)


def restrict(x: HfSet, y: HfSet) -> HfSet:
    """x|_y = x ∩ (y × ran x): the pairs of x whose first coordinate lies in y."""
    return _intern_sorted(tuple(e for e in x.children if (p := as_pair(e)) and p[0] in y))


def inverse(x: HfSet) -> HfSet:
    return make_set(pair(b, a) for a, b in _pairs_of(x))


_succ_memo: dict[int, HfSet] = {}


def succ(x: HfSet) -> HfSet:
    """x ∪ {x}.  Members precede their set in the order, so appending x keeps
    the children sorted."""
    r = _succ_memo.get(x.serial)
    if r is None:
        r = _succ_memo[x.serial] = _intern_sorted(x.children + (x,))
    return r


_app_index: dict[int, dict[int, list[HfSet]]] = {}


def app(f: HfSet, x: HfSet) -> HfSet:
    """f(x) as ⋃ ran(f|_{x}); the union of all values when f is not functional."""
    index = _app_index.get(f.serial)
    if index is None:
        index = {}
        for a, b in _pairs_of(f):
            index.setdefault(a.serial, []).append(b)
        _app_index[f.serial] = index
    values = index.get(x.serial)
    if not values:
        return EMPTY
    if len(values) == 1:
        return values[0]
    return bigcup(make_set(values))


# -- the nine basis functions ----------------------------------------------

def F0(x, y):
    return make_set((x, y))


def F1(x, y):
    return diff(x, y)


def F2(x, y):
    return product(x, y)


def F3(x, y):
    return make_set(tuple_(u, z, v) for z in x.children for u, v in _pairs_of(y))


def F4(x, y):
    return make_set(tuple_(z, v, u) for z in x.children for u, v in _pairs_of(y))


def F5(x, y):
    return make_set(ran(restrict(x, z)) for z in y.children)


def F6(x):
    return bigcup(x)


def F7(x):
    return dom(x)


def F8(x):
    return make_set(pair(u, v) for v in x.children for u in v.children if u in x)


BASIS: tuple[tuple[Callable, int], ...] = (
    (F0, 2), (F1, 2), (F2, 2), (F3, 2), (F4, 2), (F5, 2), (F6, 1), (F7, 1), (F8, 1),
)


def eval_basis(index: int, args) -> HfSet:
    if not 0 <= index < len(BASIS):
        raise TermError(f"no basis function F{index}")
    fn, arity = BASIS[index]
    if len(args) != arity:
        raise TermError(f"F{index} takes {arity} argument(s), got {len(args)}")
    return fn(*args)


# name -> (function, arity); arity None means variadic (at least one argument)
DERIVED: dict[str, tuple[Callable, int | None]] = {
    "id": (lambda x: x, 1),
    "union": (union, 2),
    "inter": (inter, 2),
    "diff": (diff, 2),
    "bigcup": (bigcup, 1),
    "bigcap": (bigcap, 1),
    "set": (setof, None),
    "pair": (pair, 2),
    "tuple": (tuple_, None),
    "first": (first, 1),
    "second": (second, 1),
    "dom": (dom, 1),
    "ran": (ran, 1),
    "prod": (product, 2),
    "restrict": (restrict, 2),
    "inverse": (inverse, 1),
    "succ": (succ, 1),
    "app": (app, 2),
}
DERIVED["1st"] = DERIVED["first"]
DERIVED["2nd"] = DERIVED["second"]
for _i, (_fn, _arity) in enumerate(BASIS):
    DERIVED[f"F{_i}"] = (_fn, _arity)


def eval_derived(name: str, args) -> HfSet:
    try:
        fn, arity = DERIVED[name]
    except KeyError:
        raise TermError(f"unknown operation {name!r}") from None
    _check_arity(name, arity, len(args))
    return fn(*args)


def _check_arity(name, arity, n):
    if arity is None:
        if n < 1:
            raise TermError(f"{name} needs at least one argument")
    elif n != arity:
        raise TermError(f"{name} takes {arity} argument(s), got {n}")


# -- terms ------------------------------------------------------------------

class RudTerm:
    __slots__ = ()

    def __str__(self):
        return format_term(self)


@dataclass(frozen=True)
class Var(RudTerm):
    name: str


@dataclass(frozen=True)
class Const(RudTerm):
    value: HfSet


@dataclass(frozen=True)
class SetOf(RudTerm):
    items: tuple


@dataclass(frozen=True)
class Tup(RudTerm):
    items: tuple


@dataclass(frozen=True)
class Apply(RudTerm):
    op: str
    args: tuple

    def __post_init__(self):
        if self.op not in DERIVED:
            raise TermError(f"unknown operation {self.op!r}")
        _check_arity(self.op, DERIVED[self.op][1], len(self.args))


@dataclass(frozen=True)
class BigCup(RudTerm):
    """⋃_{var ∈ over} body"""
    var: str
    over: RudTerm
    body: RudTerm


@dataclass(frozen=True)
class Image(RudTerm):
    """{body : var ∈ over}"""
    var: str
    over: RudTerm
    body: RudTerm


def term_free_vars(t: RudTerm) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Const):
        return frozenset()
    if isinstance(t, (SetOf, Tup)):
        return frozenset().union(*(term_free_vars(i) for i in t.items))
    if isinstance(t, Apply):
        return frozenset().union(*(term_free_vars(a) for a in t.args))
    if isinstance(t, (BigCup, Image)):
        return term_free_vars(t.over) | (term_free_vars(t.body) - {t.var})
    raise TypeError(f"not a term: {t!r}")


def compile_term(t: RudTerm) -> Callable[[dict], HfSet]:
    """Compile a term to a function of a mutable environment dict."""
    if isinstance(t, Var):
        name = t.name

        def run(env):
            try:
                return env[name]
            except KeyError:
                raise UnboundVariable(name) from None
        return run
    if isinstance(t, Const):
        value = t.value
        return lambda env: value
    if isinstance(t, SetOf):
        parts = [compile_term(i) for i in t.items]
        return lambda env: make_set([p(env) for p in parts])
    if isinstance(t, Tup):
        parts = [compile_term(i) for i in t.items]
        if len(parts) == 2:
            a, b = parts
            return lambda env: pair(a(env), b(env))
        return lambda env: tuple_(*[p(env) for p in parts])
    if isinstance(t, Apply):
        fn = DERIVED[t.op][0]
        parts = [compile_term(a) for a in t.args]
        if len(parts) == 1:
            (a,) = parts
            return lambda env: fn(a(env))
        if len(parts) == 2:
            a, b = parts
            return lambda env: fn(a(env), b(env))
        return lambda env: fn(*[p(env) for p in parts])
    if isinstance(t, (BigCup, Image)):
        over = compile_term(t.over)
        body = compile_term(t.body)
        var = t.var
        flatten = isinstance(t, BigCup)

        def run(env):
            saved = env.get(var, _MISSING)
            results = []
            try:
                for y in over(env).children:
                    env[var] = y
                    v = body(env)
                    if flatten:
                        results.extend(v.children)
                    else:
                        results.append(v)
            finally:
                if saved is _MISSING:
                    env.pop(var, None)
                else:
                    env[var] = saved
            return make_set(results)
        return run
    raise TypeError(f"not a term: {t!r}")


_MISSING = object()


def eval_term(t: RudTerm, env: Mapping[str, HfSet]) -> HfSet:
    missing = term_free_vars(t) - set(env)
    if missing:
        raise UnboundVariable(sorted(missing)[0])
    return compile_term(t)(dict(env))


def format_term(t: RudTerm) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return format_set(t.value)
    if isinstance(t, SetOf):
        return "{" + ",".join(format_term(i) for i in t.items) + "}"
    if isinstance(t, Tup):
        return "<" + ",".join(format_term(i) for i in t.items) + ">"
    if isinstance(t, Apply):
        return f"{t.op}(" + ",".join(format_term(a) for a in t.args) + ")"
    if isinstance(t, BigCup):
        return f"bigcup {t.var} in {format_term(t.over)} . {format_term(t.body)}"
    if isinstance(t, Image):
        return f"image {t.var} in {format_term(t.over)} . {format_term(t.body)}"
    raise TypeError(f"not a term: {t!r}")
