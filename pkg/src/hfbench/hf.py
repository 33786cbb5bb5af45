"""Canonical hereditarily finite sets.

Every ``HfSet`` is hash-consed: two sets are extensionally equal exactly when
they are the same Python object, so ``is`` (and the default ``==``) decides
set equality in O(1).  Children are stored deduplicated and sorted ascending in
the Ackermann order, which ``hf_compare`` evaluates structurally without ever
building the (tower-sized) codes.
"""
from __future__ import annotations

import contextlib
import enum
import itertools
import re
import threading
from dataclasses import dataclass, replace
from functools import cmp_to_key, total_ordering
from typing import Iterable, Iterator

__all__ = [
    "HfSet", "HfOrder", "Caps", "HfError", "CapExceeded", "CodeOverflow",
    "LiteralSyntaxError", "EMPTY", "get_caps", "set_caps", "caps",
    "make_set", "canonicalize", "hf_compare", "ackermann_code",
    "from_ackermann", "rank", "von_neumann", "is_von_neumann", "pair",
    "as_pair", "tuple_", "singleton", "powerset_fin", "finite_sequences",
    "parse_literal", "format_set", "node_count", "random_set",
]


class HfError(Exception):
    """Base class for errors raised by the set engine."""


class CapExceeded(HfError):
    """A configured resource cap (rank, nodes, cardinality, output size) was hit."""


class CodeOverflow(HfError):
    """An Ackermann code would exceed the configured bit budget."""


class LiteralSyntaxError(HfError, ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


@dataclass(frozen=True)
class Caps:
    rank: int = 256
    nodes: int = 1 << 20
    cardinality: int = 1 << 20
    code_bits: int = 1 << 16
    output_chars: int = 1 << 20


_caps = Caps()


def get_caps() -> Caps:
    return _caps


def set_caps(**changes) -> Caps:
    """Replace the global caps; returns the previous value."""
    global _caps
    old = _caps
    _caps = replace(_caps, **changes)
    return old


@contextlib.contextmanager
def caps(**changes):
    old = set_caps(**changes)
    try:
        yield _caps
    finally:
        set_caps(**vars(old))


class HfOrder(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


_UNSET = object()


@total_ordering
class HfSet:
    """An interned hereditarily finite set.

    Do not instantiate directly; use ``make_set``, ``canonicalize`` or one of
    the constructors below.
    """

    __slots__ = ("children", "rank", "serial", "_members", "_pair", "_vn", "__weakref__")

    def __new__(cls, *args, **kwargs):
        raise TypeError("use make_set() or canonicalize() to build an HfSet")

    def __contains__(self, item) -> bool:
        members = self._members
        if members is None:
            members = self._members = frozenset(self.children)
        return item in members

    def __iter__(self) -> Iterator[HfSet]:
        return iter(self.children)

    def __len__(self) -> int:
        return len(self.children)

    def __bool__(self) -> bool:
        return True

    def __lt__(self, other):
        if not isinstance(other, HfSet):
            return NotImplemented
        return _cmp(self, other) < 0

    def issubset(self, other: HfSet) -> bool:
        if len(self.children) > len(other.children):
            return False
        return all(c in other for c in self.children)

    def __reduce__(self):
        # re-intern on unpickle so identity-equality survives process boundaries
        return (_from_child_list, (list(self.children),))

    def __repr__(self) -> str:
        try:
            return f"HfSet({format_set(self)})"
        except CapExceeded:
            return f"HfSet(<rank {self.rank}, {len(self.children)} children>)"

    def __str__(self) -> str:
        return format_set(self)


def _from_child_list(children):
    return make_set(children)


_table: dict[tuple, HfSet] = {}
_lock = threading.RLock()
_serial = itertools.count()


def node_count() -> int:
    """Number of distinct sets materialized so far in this process."""
    return len(_table)


def _intern_sorted(children: tuple) -> HfSet:
    """Intern a tuple of children that is already deduplicated and sorted."""
    key = tuple(c.serial for c in children)
    node = _table.get(key)
    if node is not None:
        return node
    with _lock:
        node = _table.get(key)
        if node is not None:
            return node
        r = children[-1].rank + 1 if children else 0
        if r > _caps.rank:
            raise CapExceeded(f"rank {r} exceeds cap {_caps.rank}")
        if len(_table) >= _caps.nodes:
            raise CapExceeded(f"node count exceeds cap {_caps.nodes}")
        node = object.__new__(HfSet)
        node.children = children
        node.rank = r
        node.serial = next(_serial)
        node._members = None
        node._pair = _UNSET
        node._vn = _UNSET
        _table[key] = node
        return node


_memo: dict[tuple[int, int], int] = {}


def _cmp(a: HfSet, b: HfSet) -> int:
    # Ackermann order: compare children from the largest down, like binary digits.
    if a is b:
        return 0
    if a.rank != b.rank:
        # V_r is an initial segment of the Ackermann order
        return -1 if a.rank < b.rank else 1
    key = (a.serial, b.serial)
    r = _memo.get(key)
    if r is not None:
        return r
    ca, cb = a.children, b.children
    i, j = len(ca) - 1, len(cb) - 1
    while i >= 0 and j >= 0:
        x, y = ca[i], cb[j]
        if x is not y:
            r = _cmp(x, y)
            break
        i -= 1
        j -= 1
    else:
        r = (i >= 0) - (j >= 0)
    _memo[key] = r
    _memo[(b.serial, a.serial)] = -r
    return r


_sort_key = cmp_to_key(_cmp)


def hf_compare(a: HfSet, b: HfSet) -> HfOrder:
    """Compare two sets in the Ackermann well-order."""
    return HfOrder(_cmp(a, b))


def make_set(elements: Iterable[HfSet]) -> HfSet:
    unique = {id(e): e for e in elements}
    if len(unique) > _caps.cardinality:
        raise CapExceeded(f"cardinality {len(unique)} exceeds cap {_caps.cardinality}")
    for e in unique.values():
        if not isinstance(e, HfSet):
            raise TypeError(f"not an HfSet: {e!r}")
    return _intern_sorted(tuple(sorted(unique.values(), key=_sort_key)))


EMPTY = _intern_sorted(())


def singleton(x: HfSet) -> HfSet:
    return _intern_sorted((x,))


_naturals: list[HfSet] = [EMPTY]


def von_neumann(n: int) -> HfSet:
    """The von Neumann natural n = {0, ..., n-1}."""
    if n < 0:
        raise ValueError("naturals are nonnegative")
    with _lock:
        while len(_naturals) <= n:
            k = len(_naturals)
            # children 0..k-1 are already in ascending order
            _naturals.append(_intern_sorted(tuple(_naturals[:k])))
    return _naturals[n]


def is_von_neumann(x: HfSet) -> bool:
    """Fast structural test: x == c ∪ {c} for its largest child c, recursively."""
    chain = []
    node = x
    while True:
        known = node._vn
        if known is not _UNSET:
            result = known
            break
        if not node.children:
            result = True
            break
        top = node.children[-1]
        rest = node.children[:-1]
        chain.append(node)
        if len(rest) != len(top.children) or any(p is not q for p, q in zip(rest, top.children)):
            result = False
            break
        node = top
    # a set is natural iff its shape is right and its top child is natural
    for n in chain:
        n._vn = result
    return result


def nat_value(x: HfSet) -> int | None:
    """Native value of a von Neumann natural, or None."""
    return len(x.children) if is_von_neumann(x) else None


_pairs: dict[tuple[int, int], HfSet] = {}


def pair(a: HfSet, b: HfSet) -> HfSet:
    """Kuratowski pair {{a}, {a, b}}."""
    key = (a.serial, b.serial)
    p = _pairs.get(key)
    if p is None:
        sa = singleton(a)
        if a is b:
            p = singleton(sa)
        else:
            p = _intern_sorted((sa, make_set((a, b))))
        p._pair = (a, b)
        _pairs[key] = p
    return p


def tuple_(*items: HfSet) -> HfSet:
    """Left-nested tuple <<x1, ..., x(n-1)>, xn>."""
    if not items:
        raise ValueError("empty tuple")
    acc = items[0]
    for x in items[1:]:
        acc = pair(acc, x)
    return acc


def as_pair(x: HfSet) -> tuple[HfSet, HfSet] | None:
    cached = x._pair
    if cached is not _UNSET:
        return cached
    result = None
    ch = x.children
    if len(ch) == 1:
        (s,) = ch
        if len(s.children) == 1:
            result = (s.children[0], s.children[0])
    elif len(ch) == 2:
        s, t = ch
        if len(s.children) == 1 and len(t.children) == 2:
            a = s.children[0]
            if a in t:
                b = t.children[0] if t.children[1] is a else t.children[1]
                result = (a, b)
    x._pair = result
    return result


def rank(x: HfSet) -> int:
    return x.rank


_codes: dict[int, int] = {}


def ackermann_code(x: HfSet, max_bits: int | None = None) -> int:
    """code(x) = sum of 2**code(y) over y in x."""
    budget = _caps.code_bits if max_bits is None else max_bits
    cached = _codes.get(x.serial)
    if cached is not None:
        if cached.bit_length() > budget:
            raise CodeOverflow(f"code needs {cached.bit_length()} bits, budget {budget}")
        return cached
    total = 0
    for c in x.children:
        k = ackermann_code(c, budget)
        if k >= budget:
            raise CodeOverflow(f"code needs more than {budget} bits")
        total |= 1 << k
    _codes[x.serial] = total
    return total


def from_ackermann(n: int) -> HfSet:
    if n < 0:
        raise ValueError("codes are nonnegative")
    children = []
    bit = 0
    while n:
        if n & 1:
            children.append(from_ackermann(bit))
        n >>= 1
        bit += 1
    # increasing bit positions are increasing codes
    return _intern_sorted(tuple(children))


def canonicalize(literal) -> HfSet:
    """Canonical set for a literal: an HfSet, a string in set-literal syntax,
    a native int (von Neumann natural), or a nested iterable of these."""
    if isinstance(literal, HfSet):
        return literal
    if isinstance(literal, str):
        return parse_literal(literal)
    if isinstance(literal, bool):
        raise TypeError("bool is not a set literal")
    if isinstance(literal, int):
        return von_neumann(literal)
    if isinstance(literal, dict):
        raise TypeError("dict is not a set literal")
    try:
        items = list(literal)
    except TypeError:
        raise TypeError(f"not a set literal: {literal!r}") from None
    return make_set(canonicalize(item) for item in items)


def powerset_fin(x: HfSet) -> HfSet:
    n = len(x.children)
    if n >= 63 or (1 << n) > _caps.cardinality:
        raise CapExceeded(f"powerset of a {n}-element set exceeds cardinality cap")
    subsets = []
    for mask in range(1 << n):
        subsets.append(_intern_sorted(tuple(c for i, c in enumerate(x.children) if mask >> i & 1)))
    return make_set(subsets)


def finite_sequences(x: HfSet, n: int) -> HfSet:
    """Graphs of all functions {0..k-1} -> x for 1 <= k <= n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    m = len(x.children)
    total = sum(m ** k for k in range(1, n + 1))
    if total > _caps.cardinality:
        raise CapExceeded(f"{total} sequences exceed cardinality cap")
    graphs = []
    for k in range(1, n + 1):
        idx = [von_neumann(i) for i in range(k)]
        for values in itertools.product(x.children, repeat=k):
            graphs.append(make_set(pair(i, v) for i, v in zip(idx, values)))
    return make_set(graphs)


def random_set(rng, max_rank: int, max_width: int = 3) -> HfSet:
    """Seeded random set of rank <= max_rank with at most max_width members
    per node."""
    if max_rank <= 0:
        return EMPTY
    width = rng.randint(0, max_width)
    return make_set(random_set(rng, rng.randint(0, max_rank - 1), max_width)
                    for _ in range(width))


# -- literal syntax ---------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(#\d+)|([{}<>,]))")


def parse_literal(text: str) -> HfSet:
    """Parse ``{..}`` / ``#n`` / ``<a,b,...>`` set literals."""
    pos = 0

    def peek():
        m = _TOKEN.match(text, pos)
        return (m.group(1) or m.group(2), m.end()) if m else (None, pos)

    def expect(tok):
        nonlocal pos
        got, end = peek()
        if got != tok:
            raise LiteralSyntaxError(f"expected {tok!r}", _skip_ws(text, pos), text)
        pos = end

    def element():
        nonlocal pos
        tok, end = peek()
        if tok is None:
            raise LiteralSyntaxError("expected a set literal", _skip_ws(text, pos), text)
        if tok.startswith("#"):
            pos = end
            return von_neumann(int(tok[1:]))
        if tok == "{":
            pos = end
            items = []
            tok, end = peek()
            if tok == "}":
                pos = end
                return EMPTY
            items.append(element())
            while True:
                tok, end = peek()
                if tok == ",":
                    pos = end
                    items.append(element())
                elif tok == "}":
                    pos = end
                    return make_set(items)
                else:
                    raise LiteralSyntaxError("expected ',' or '}'", _skip_ws(text, pos), text)
        if tok == "<":
            pos = end
            items = [element()]
            while True:
                tok, end = peek()
                if tok == ",":
                    pos = end
                    items.append(element())
                elif tok == ">":
                    pos = end
                    if len(items) < 2:
                        raise LiteralSyntaxError("tuple needs at least two components", pos, text)
                    return tuple_(*items)
                else:
                    raise LiteralSyntaxError("expected ',' or '>'", _skip_ws(text, pos), text)
        raise LiteralSyntaxError(f"unexpected {tok!r}", _skip_ws(text, pos), text)

    result = element()
    if text[pos:].strip():
        raise LiteralSyntaxError("trailing input", _skip_ws(text, pos), text)
    return result


def _skip_ws(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


_tree_sizes: dict[int, int] = {}


def _tree_size(x: HfSet) -> int:
    s = _tree_sizes.get(x.serial)
    if s is None:
        s = 2 + sum(_tree_size(c) + 1 for c in x.children)
        _tree_sizes[x.serial] = s
    return s


def format_set(x: HfSet, sugar: bool = True) -> str:
    """Canonical text.  With ``sugar`` naturals print as ``#n`` and pairs as
    ``<a,b>`` (left-nested tuples flattened); otherwise pure braces."""
    if not sugar and _tree_size(x) > _caps.output_chars:
        raise CapExceeded("raw form exceeds output cap; print with sugar")
    out: list[str] = []
    _format(x, sugar, out)
    return "".join(out)


def _format(x: HfSet, sugar: bool, out: list[str]) -> None:
    if sugar:
        if is_von_neumann(x):
            out.append(f"#{len(x.children)}")
            return
        p = as_pair(x)
        if p is not None:
            parts = [p[1]]
            head = p[0]
            while not is_von_neumann(head) and (q := as_pair(head)) is not None:
                parts.append(q[1])
                head = q[0]
            parts.append(head)
            out.append("<")
            for i, part in enumerate(reversed(parts)):
                if i:
                    out.append(",")
                _format(part, sugar, out)
            out.append(">")
            return
    out.append("{")
    for i, c in enumerate(x.children):
        if i:
            out.append(",")
        _format(c, sugar, out)
    out.append("}")
