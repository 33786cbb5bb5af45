"""Formulas of the language {∈, ⊆, =} and their evaluation over finite sets.

Unbounded quantifiers range over an explicit finite universe supplied by the
caller (relativization); bounded quantifiers ``forall v in t`` range over the
members of ``t``'s value, whatever the universe.  There is no implicit infinite
universe.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .hf import HfSet, make_set, tuple_, _intern_sorted
from .rudimentary import (
    RudTerm, UnboundVariable, compile_term, format_term, term_free_vars,
)

__all__ = [
    "Formula", "Atom", "Not", "And", "Or", "Implies", "Iff", "Quant",
    "free_vars", "is_delta0", "eval_relativized", "comprehend",
    "comprehend_tuples", "format_formula", "expand_bounded",
]


class Formula:
    __slots__ = ()

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    op: str  # "in" | "sub" | "="
    left: RudTerm
    right: RudTerm

    def __post_init__(self):
        if self.op not in ("in", "sub", "="):
            raise ValueError(f"bad atomic relation {self.op!r}")


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Quant(Formula):
    """``forall``/``exists`` over ``var``; ``bound`` is None for a relativized
    (unbounded) quantifier."""
    kind: str  # "forall" | "exists"
    var: str
    bound: RudTerm | None
    body: Formula

    def __post_init__(self):
        if self.kind not in ("forall", "exists"):
            raise ValueError(f"bad quantifier {self.kind!r}")


_BINARY = (And, Or, Implies, Iff)


def free_vars(f: Formula) -> frozenset[str]:
    if isinstance(f, Atom):
        return term_free_vars(f.left) | term_free_vars(f.right)
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, _BINARY):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, Quant):
        inner = free_vars(f.body) - {f.var}
        return inner | term_free_vars(f.bound) if f.bound is not None else inner
    raise TypeError(f"not a formula: {f!r}")


def is_delta0(f: Formula) -> bool:
    """True iff every quantifier is bounded."""
    if isinstance(f, Atom):
        return True
    if isinstance(f, Not):
        return is_delta0(f.body)
    if isinstance(f, _BINARY):
        return is_delta0(f.left) and is_delta0(f.right)
    if isinstance(f, Quant):
        return f.bound is not None and is_delta0(f.body)
    raise TypeError(f"not a formula: {f!r}")


def expand_bounded(f: Formula) -> Formula:
    """Rewrite bounded quantifiers into their unbounded abbreviations:
    (∀v∈w)A ≡ ∀v(v∈w ⇒ A) and (∃v∈w)A ≡ ∃v(v∈w ∧ A).

    The rewrite is faithful only when the universe contains every member of
    each bound; evaluation of the original formula does not need that."""
    from .rudimentary import Var
    if isinstance(f, Atom):
        return f
    if isinstance(f, Not):
        return Not(expand_bounded(f.body))
    if isinstance(f, _BINARY):
        return type(f)(expand_bounded(f.left), expand_bounded(f.right))
    body = expand_bounded(f.body)
    if f.bound is None:
        return Quant(f.kind, f.var, None, body)
    guard = Atom("in", Var(f.var), f.bound)
    if f.kind == "forall":
        return Quant("forall", f.var, None, Implies(guard, body))
    return Quant("exists", f.var, None, And(guard, body))


# -- evaluation -------------------------------------------------------------

_UNIVERSE = object()
_MISSING = object()


def _compile(f: Formula) -> Callable[[dict], bool]:
    if isinstance(f, Atom):
        left = compile_term(f.left)
        right = compile_term(f.right)
        if f.op == "in":
            return lambda env: left(env) in right(env)
        if f.op == "=":
            return lambda env: left(env) is right(env)
        return lambda env: left(env).issubset(right(env))
    if isinstance(f, Not):
        body = _compile(f.body)
        return lambda env: not body(env)
    if isinstance(f, And):
        a, b = _compile(f.left), _compile(f.right)
        return lambda env: a(env) and b(env)
    if isinstance(f, Or):
        a, b = _compile(f.left), _compile(f.right)
        return lambda env: a(env) or b(env)
    if isinstance(f, Implies):
        a, b = _compile(f.left), _compile(f.right)
        return lambda env: (not a(env)) or b(env)
    if isinstance(f, Iff):
        a, b = _compile(f.left), _compile(f.right)
        return lambda env: a(env) == b(env)
    if isinstance(f, Quant):
        body = _compile(f.body)
        var = f.var
        bound = compile_term(f.bound) if f.bound is not None else None
        want = f.kind == "exists"

        def run(env):
            dom = bound(env) if bound is not None else env[_UNIVERSE]
            saved = env.get(var, _MISSING)
            try:
                for y in dom.children:
                    env[var] = y
                    if body(env) == want:
                        return want
                return not want
            finally:
                if saved is _MISSING:
                    env.pop(var, None)
                else:
                    env[var] = saved
        return run
    raise TypeError(f"not a formula: {f!r}")


@lru_cache(maxsize=512)
def _compiled(f: Formula):
    return _compile(f), free_vars(f), is_delta0(f)


def _as_formula(f) -> Formula:
    if isinstance(f, str):
        from .parser import parse_formula
        return parse_formula(f)
    if not isinstance(f, Formula):
        raise TypeError(f"not a formula: {f!r}")
    return f


def eval_relativized(f: Formula | str, universe: HfSet,
                     assignment: Mapping[str, HfSet] | None = None) -> bool:
    """Truth value of ``f`` with unbounded quantifiers ranging over the members
    of ``universe`` and free variables taken from ``assignment``."""
    f = _as_formula(f)
    run, fv, _ = _compiled(f)
    env = dict(assignment or {})
    missing = fv - env.keys()
    if missing:
        raise UnboundVariable(sorted(missing)[0])
    env[_UNIVERSE] = universe
    return bool(run(env))


def _param_universe(domains: Iterable[HfSet], assignment: Mapping[str, HfSet]) -> HfSet:
    # add the parameter values to the universe so they are available as values
    pool = [c for d in domains for c in d.children]
    pool.extend(assignment.values())
    return make_set(pool)


def comprehend(domain: HfSet, f: Formula | str, var: str = "v",
               assignment: Mapping[str, HfSet] | None = None) -> HfSet:
    """{y ∈ domain : f holds with var ↦ y}.

    Δ₀ formulas are evaluated directly.  Otherwise unbounded quantifiers range
    over domain ∪ {parameter values}."""
    f = _as_formula(f)
    run, fv, delta0 = _compiled(f)
    params = dict(assignment or {})
    params.pop(var, None)
    missing = fv - {var} - params.keys()
    if missing:
        raise UnboundVariable(sorted(missing)[0])
    env = dict(params)
    env[_UNIVERSE] = domain if delta0 else _param_universe([domain], params)
    kept = []
    for y in domain.children:
        env[var] = y
        if run(env):
            kept.append(y)
    # a subsequence of sorted children is sorted
    return _intern_sorted(tuple(kept))


def comprehend_tuples(domains: Sequence[HfSet], f: Formula | str,
                      variables: Sequence[str],
                      assignment: Mapping[str, HfSet] | None = None) -> HfSet:
    """{⟨y1,...,yj⟩ ∈ d1 × ... × dj : f(y1,...,yj)} with left-nested tuples."""
    if len(domains) != len(variables) or not variables:
        raise ValueError("need one domain per variable")
    f = _as_formula(f)
    run, fv, delta0 = _compiled(f)
    params = {k: v for k, v in (assignment or {}).items() if k not in variables}
    missing = fv - set(variables) - params.keys()
    if missing:
        raise UnboundVariable(sorted(missing)[0])
    env = dict(params)
    env[_UNIVERSE] = (domains[0] if len(domains) == 1 and delta0
                      else _param_universe(domains, params))
    kept = []
    for values in itertools.product(*(d.children for d in domains)):
        env.update(zip(variables, values))
        if run(env):
            kept.append(tuple_(*values) if len(values) > 1 else values[0])
    return make_set(kept)


# -- printing ---------------------------------------------------------------

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYM = {Iff: "<->", Implies: "->", Or: "\\/", And: "/\\"}


def format_formula(f: Formula) -> str:
    return _fmt(f, 0)


def _fmt(f: Formula, ctx: int) -> str:
    if isinstance(f, Atom):
        return f"{format_term(f.left)} {f.op} {format_term(f.right)}"
    if isinstance(f, Not):
        if isinstance(f.body, Atom):
            return f"~({_fmt(f.body, 0)})"
        return "~" + _fmt(f.body, 5)
    if isinstance(f, _BINARY):
        p = _PREC[type(f)]
        # -> is right associative; the others are printed left associative
        if isinstance(f, Implies):
            s = f"{_fmt(f.left, p + 1)} -> {_fmt(f.right, p)}"
        else:
            s = f"{_fmt(f.left, p)} {_SYM[type(f)]} {_fmt(f.right, p + 1)}"
        return f"({s})" if p < ctx else s
    if isinstance(f, Quant):
        head = f"{f.kind} {f.var}"
        if f.bound is not None:
            head += f" in {format_term(f.bound)}"
        s = f"{head} . {_fmt(f.body, 0)}"
        return f"({s})" if ctx > 0 else s
    raise TypeError(f"not a formula: {f!r}")
