"""Computable reals as lower Dedekind cuts of the rationals.

A cut is intensional: it answers membership queries ``p < x`` and produces
rational brackets ``(lo, hi)`` with ``lo`` inside the cut, ``hi`` outside and
``hi - lo`` as small as requested.  Equality of reals is only semi-decidable,
so comparison works to a caller-chosen precision, and a membership query that
grazes the boundary may come back undecided rather than wrong.
"""
from __future__ import annotations

import ast
import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .hf import HfError

__all__ = [
    "Cut", "RationalCut", "PredicateCut", "LubCut", "SumCut", "NegCut",
    "LimitCut", "CauchySeq", "Order", "NeedsMoreAccuracy", "AccuracyExhausted",
    "cut", "sqrt2", "cut_member", "try_member", "cut_lub", "cauchy_limit",
    "cut_compare", "cut_add", "cut_neg", "spot_check",
    "CutSyntaxError", "eval_cut_expr",
]

DEFAULT_BUDGET = 200


class NeedsMoreAccuracy(HfError):
    """Membership could not be certified within the refinement budget."""


class AccuracyExhausted(HfError):
    pass


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Cut:
    """Base class.  Subclasses implement ``bracket`` and may override ``decide``."""

    def bracket(self, eps: Fraction) -> tuple[Fraction, Fraction]:
        """(lo, hi) with lo < x <= hi and hi - lo <= eps."""
        raise NotImplementedError

    def decide(self, p: Fraction, budget: int = DEFAULT_BUDGET) -> bool | None:
        """True/False when certified, None when the budget runs out."""
        p = _q(p)
        eps = Fraction(1)
        for _ in range(budget):
            lo, hi = self.bracket(eps)
            if p <= lo:
                return True
            if p >= hi:
                return False
            eps /= 2
        return None

    def __contains__(self, p) -> bool:
        return cut_member(self, p)

    def __add__(self, other):
        return cut_add(self, _as_cut(other))

    __radd__ = __add__

    def __neg__(self):
        return cut_neg(self)

    def __sub__(self, other):
        return cut_add(self, cut_neg(_as_cut(other)))


@dataclass(frozen=True, eq=False)
class RationalCut(Cut):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", _q(self.value))

    def bracket(self, eps):
        return self.value - _q(eps), self.value

    def decide(self, p, budget=DEFAULT_BUDGET):
        return _q(p) < self.value

    def __repr__(self):
        return f"cut({self.value})"


class PredicateCut(Cut):
    """Cut given by a decidable membership predicate and two rational witnesses:
    ``lower`` inside the cut and ``upper`` outside it.  Brackets come from the
    optional ``schedule`` (eps -> (lo, hi)) or else from bisection."""

    def __init__(self, predicate: Callable[[Fraction], bool], lower, upper,
                 schedule: Callable[[Fraction], tuple] | None = None, name: str = ""):
        self.predicate = predicate
        self.lower = _q(lower)
        self.upper = _q(upper)
        self.schedule = schedule
        self.name = name
        if not predicate(self.lower) or predicate(self.upper):
            raise ValueError("lower must be in the cut and upper outside it")
        self._best = (self.lower, self.upper)

    def bracket(self, eps):
        eps = _q(eps)
        if self.schedule is not None:
            return self.schedule(eps)
        lo, hi = self._best
        while hi - lo > eps:
            mid = (lo + hi) / 2
            if self.predicate(mid):
                lo = mid
            else:
                hi = mid
        # copy-on-refine: publish a new tuple, never mutate one in place
        if hi - lo < self._best[1] - self._best[0]:
            self._best = (lo, hi)
        return lo, hi

    def decide(self, p, budget=DEFAULT_BUDGET):
        return bool(self.predicate(_q(p)))

    def __repr__(self):
        return self.name or f"PredicateCut({self.predicate!r})"


class LubCut(Cut):
    """Union of finitely many cuts: their least upper bound."""

    def __init__(self, parts: Sequence[Cut]):
        self.parts = tuple(parts)

    def bracket(self, eps):
        bounds = [c.bracket(eps) for c in self.parts]
        return max(b[0] for b in bounds), max(b[1] for b in bounds)

    def decide(self, p, budget=DEFAULT_BUDGET):
        undecided = False
        for c in self.parts:
            r = c.decide(p, budget)
            if r:
                return True
            if r is None:
                undecided = True
        return None if undecided else False

    def __repr__(self):
        return "lub(" + ", ".join(map(repr, self.parts)) + ")"


class SumCut(Cut):
    def __init__(self, x: Cut, y: Cut):
        self.x, self.y = x, y

    def bracket(self, eps):
        half = _q(eps) / 2
        a, b = self.x.bracket(half)
        c, d = self.y.bracket(half)
        return a + c, b + d

    def __repr__(self):
        return f"({self.x!r} + {self.y!r})"


class NegCut(Cut):
    def __init__(self, x: Cut):
        self.x = x

    def bracket(self, eps):
        half = _q(eps) / 2
        lo, hi = self.x.bracket(half)
        # -hi may equal -x, which is not in the lower cut of -x
        return -hi - half, -lo

    def __repr__(self):
        return f"neg({self.x!r})"


@dataclass(frozen=True)
class CauchySeq:
    """Rational sequence with modulus: |a_n - a_k| <= 2^-j for n, k >= modulus(j).

    ``bounds``, when given, is a rational interval containing every term."""
    term: Callable[[int], Fraction]
    modulus: Callable[[int], int]
    bounds: tuple | None = None

    def __call__(self, n: int) -> Fraction:
        return _q(self.term(n))


class LimitCut(Cut):
    """Limit of a Cauchy sequence with modulus.

    At accuracy 2^-j the limit lies within 2^-j of a_m(j); ``p`` is certified
    inside when p < a_m(j) - 2·2^-j and outside when p >= a_m(j) + 2^-j (or at
    or above the upper bound on the terms)."""

    def __init__(self, seq: CauchySeq):
        self.seq = seq
        self.lo_bound, self.hi_bound = (None, None) if seq.bounds is None else map(_q, seq.bounds)

    def level(self, j: int) -> tuple[Fraction, Fraction]:
        a = self.seq(self.seq.modulus(j))
        r = Fraction(1, 2 ** j)
        lo, hi = a - 2 * r, a + r
        if self.hi_bound is not None:
            hi = min(hi, self.hi_bound)
        if self.lo_bound is not None and self.lo_bound - r > lo:
            lo = self.lo_bound - r
        return lo, hi

    def bracket(self, eps):
        eps = _q(eps)
        j = 0
        while True:
            lo, hi = self.level(j)
            if hi - lo <= eps:
                return lo, hi
            j += 1
            if j > 4096:
                raise AccuracyExhausted("modulus did not reach requested accuracy")

    def decide(self, p, budget=DEFAULT_BUDGET):
        p = _q(p)
        for j in range(budget):
            lo, hi = self.level(j)
            if p < lo:
                return True
            if p >= hi:
                return False
        return None

    def __repr__(self):
        return "limit(...)"


class Order(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    WITHIN = "within-eps"


def _as_cut(x) -> Cut:
    return x if isinstance(x, Cut) else RationalCut(_q(x))


def cut(value) -> Cut:
    """Exact rational cut."""
    return RationalCut(_q(value))


def sqrt2() -> Cut:
    return PredicateCut(lambda p: p < 0 or p * p < 2, 1, 2, name="sqrt2")


def try_member(x: Cut, p, budget: int = DEFAULT_BUDGET) -> bool | None:
    return x.decide(_q(p), budget)


def cut_member(x: Cut, p, budget: int = DEFAULT_BUDGET) -> bool:
    """p < x, or NeedsMoreAccuracy if that cannot be certified."""
    r = x.decide(_q(p), budget)
    if r is None:
        raise NeedsMoreAccuracy(f"cannot place {p} relative to {x!r} within budget")
    return r


def cut_lub(xs: Iterable[Cut]) -> Cut:
    parts = [_as_cut(x) for x in xs]
    if not parts:
        raise ValueError("least upper bound of an empty family")
    return parts[0] if len(parts) == 1 else LubCut(parts)


def cauchy_limit(s: CauchySeq) -> Cut:
    if s.modulus is None:
        raise ValueError("a modulus of convergence is required")
    return LimitCut(s)


def cut_add(x: Cut, y: Cut) -> Cut:
    x, y = _as_cut(x), _as_cut(y)
    if isinstance(x, RationalCut) and isinstance(y, RationalCut):
        return RationalCut(x.value + y.value)
    return SumCut(x, y)


def cut_neg(x: Cut) -> Cut:
    x = _as_cut(x)
    if isinstance(x, RationalCut):
        return RationalCut(-x.value)
    if isinstance(x, NegCut):
        return x.x
    return NegCut(x)


def cut_compare(x: Cut, y: Cut, eps, max_steps: int = DEFAULT_BUDGET) -> Order:
    """LESS/GREATER only when a separating rational is found; WITHIN when both
    brackets have shrunk below eps/2 and still overlap (so |x - y| < eps)."""
    x, y = _as_cut(x), _as_cut(y)
    eps = _q(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if x is y:
        return Order.WITHIN
    acc = Fraction(1)
    for _ in range(max_steps):
        xl, xh = x.bracket(acc)
        yl, yh = y.bracket(acc)
        if xh <= yl:
            return Order.LESS
        if yh <= xl:
            return Order.GREATER
        if acc <= eps / 2:
            return Order.WITHIN
        acc /= 2
    raise AccuracyExhausted("comparison did not resolve")


def spot_check(x: Cut, samples: int = 1000, rng: random.Random | None = None,
               spread=Fraction(4)) -> list[str]:
    """Randomized checks of downward closure, no greatest element, and
    properness.  Returns a list of violations (empty when all pass)."""
    rng = rng or random.Random(0)
    problems = []
    lo, hi = x.bracket(Fraction(1))
    centre = (lo + hi) / 2
    if x.decide(lo) is not True:
        problems.append(f"lower witness {lo} not in cut")
    if x.decide(hi) is not False:
        problems.append(f"upper witness {hi} in cut")

    def sample():
        return centre + Fraction(rng.randint(-10 ** 6, 10 ** 6), 10 ** 6) * spread

    for _ in range(samples):
        p, p2 = sorted((sample(), sample()))
        mp, mp2 = x.decide(p), x.decide(p2)
        if mp2 is True and mp is False:
            problems.append(f"not downward closed: {p2} in, {p} out")
        if mp2 is True:
            # a larger member must exist; brackets eventually clear p2
            eps = Fraction(1)
            for _ in range(DEFAULT_BUDGET):
                blo, _ = x.bracket(eps)
                if blo > p2:
                    break
                eps /= 2
            else:
                problems.append(f"no member above {p2} found")
    return problems


# -- expression language -------------------------------------------------------

class CutSyntaxError(HfError, ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        super().__init__(message)


_MAX_EXPONENT = 4096


class _Eval:
    """Whitelisted evaluator over a Python ``ast``.  In sequence mode the
    free index (``n`` or ``j``) is bound and only rational arithmetic is
    allowed."""

    def __init__(self, text: str, bindings: dict, index: dict | None = None):
        self.text = text
        self.bindings = bindings
        self.index = index or {}

    def fail(self, node, message):
        line_start = sum(len(l) + 1 for l in self.text.split("\n")[:getattr(node, "lineno", 1) - 1])
        raise CutSyntaxError(message, self.text, line_start + getattr(node, "col_offset", 0))

    def rational(self, node) -> Fraction:
        v = self.visit(node)
        if not isinstance(v, Fraction):
            self.fail(node, "expected a rational")
        return v

    def visit(self, node):
        if isinstance(node, ast.Constant) and type(node.value) in (int, float):
            return Fraction(str(node.value))
        if isinstance(node, ast.Name):
            if node.id in self.index:
                return Fraction(self.index[node.id])
            if node.id == "sqrt2":
                return sqrt2()
            if node.id in self.bindings:
                return self.bindings[node.id]
            self.fail(node, f"unknown name {node.id!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = self.visit(node.operand)
            if isinstance(node.op, ast.UAdd):
                return v
            return -v if isinstance(v, Fraction) else cut_neg(v)
        if isinstance(node, ast.BinOp):
            a, b = self.visit(node.left), self.visit(node.right)
            rational = isinstance(a, Fraction) and isinstance(b, Fraction)
            if isinstance(node.op, ast.Add):
                return a + b if rational else cut_add(a, b)
            if isinstance(node.op, ast.Sub):
                return a - b if rational else cut_add(a, cut_neg(b))
            if not rational:
                self.fail(node, "only + and - apply to cuts")
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if b == 0:
                    self.fail(node, "division by zero")
                return a / b
            if isinstance(node.op, ast.Pow):
                if b.denominator != 1 or abs(b) > _MAX_EXPONENT or (a == 0 and b < 0):
                    self.fail(node, "bad exponent")
                return a ** int(b)
            self.fail(node, "unsupported operator")
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
            name, args = node.func.id, node.args
            if self.index:
                self.fail(node, "calls are not allowed inside sequence terms")
            if name == "cut" and len(args) == 1:
                return RationalCut(self.rational(args[0]))
            if name == "neg" and len(args) == 1:
                return cut_neg(_as_cut(self.visit(args[0])))
            if name == "lub" and args:
                return cut_lub(self.visit(a) for a in args)
            if name == "limit" and len(args) in (2, 4):
                return self.limit(*args)
            self.fail(node, f"unknown function {name!r} or wrong arity")
        self.fail(node, "unsupported syntax")

    def limit(self, term_node, modulus_node, *bounds):
        def term(n):
            return _Eval(self.text, {}, {"n": n}).rational(term_node)

        def modulus(j):
            m = _Eval(self.text, {}, {"j": j}).rational(modulus_node)
            if m.denominator != 1 or m < 0:
                raise CutSyntaxError("modulus must be a natural number", self.text, 0)
            return int(m)
        b = tuple(self.rational(x) for x in bounds) or None
        term(0), modulus(0)  # surface errors in the term text now, not on first query
        return LimitCut(CauchySeq(term, modulus, b))


def eval_cut_expr(text: str, bindings: dict | None = None) -> Cut:
    """Evaluate e.g. ``lub(sqrt2, 3/2) + neg(1/3)`` or
    ``limit(1 - 1/2**n, j + 1, 0, 1)`` (term in n, modulus in j, optional
    bounds on the terms)."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise CutSyntaxError(f"syntax error: {exc.msg}", text, max((exc.offset or 1) - 1, 0)) from None
    return _as_cut(_Eval(text.strip(), dict(bindings or {})).visit(tree.body))
