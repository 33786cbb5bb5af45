"""Finite proxies for open and closed subsets of the real line.

An ``OpenProxy`` is a finite list of rational balls ``B_q(p) = (p-q, p+q)`` and
denotes their union.  A ``ClosedProxy`` is a finite sorted list of disjoint
closed rational intervals.  Complements are taken inside an explicit rational
window, where they are again finite exact objects.  Everything here is exact
``Fraction`` arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .hf import HfError, HfSet, make_set, pair

__all__ = [
    "Ball", "OpenProxy", "ClosedProxy", "CoverResult", "ProxyError",
    "open_proxy", "closed_proxy", "open_member", "closed_member",
    "proxy_union", "proxy_intersect", "widen_real_proxy", "closed_complement",
    "open_complement", "covers_interval", "check_chain", "is_dense_witness",
    "parse_rational", "format_rational", "parse_open_proxy", "parse_closed_proxy",
    "format_open_proxy", "format_closed_proxy",
]


class ProxyError(HfError, ValueError):
    pass


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Ball(NamedTuple):
    center: Fraction
    radius: Fraction

    @property
    def lo(self) -> Fraction:
        return self.center - self.radius

    @property
    def hi(self) -> Fraction:
        return self.center + self.radius

    def contains(self, r: Fraction) -> bool:
        return abs(r - self.center) < self.radius

    @classmethod
    def from_interval(cls, a, b) -> "Ball":
        a, b = _q(a), _q(b)
        return cls((a + b) / 2, (b - a) / 2)

    def __str__(self):
        return f"<{format_rational(self.center)},{format_rational(self.radius)}>"


@dataclass(frozen=True)
class OpenProxy:
    balls: tuple[Ball, ...] = ()

    def __post_init__(self):
        balls = tuple(Ball(_q(p), _q(q)) for p, q in self.balls)
        for b in balls:
            if b.radius <= 0:
                raise ProxyError(f"ball radius must be positive, got {b.radius}")
        object.__setattr__(self, "balls", balls)

    def __contains__(self, r) -> bool:
        return open_member(self, r)

    def __len__(self):
        return len(self.balls)

    def __iter__(self):
        return iter(self.balls)

    def intervals(self) -> list[tuple[Fraction, Fraction]]:
        """The union as sorted disjoint open intervals."""
        return _merge_open(self.balls)

    def to_hf(self) -> HfSet:
        """The proxy as a hereditarily finite set of pairs of encoded rationals."""
        from .arithmetic import rat_to_hf
        return make_set(pair(rat_to_hf(b.center), rat_to_hf(b.radius)) for b in self.balls)

    def __str__(self):
        return "{" + ",".join(map(str, self.balls)) + "}"


@dataclass(frozen=True)
class ClosedProxy:
    intervals: tuple[tuple[Fraction, Fraction], ...] = ()
    window: tuple[Fraction, Fraction] | None = field(default=None)

    def __post_init__(self):
        ivs = tuple((_q(a), _q(b)) for a, b in self.intervals)
        for a, b in ivs:
            if a > b:
                raise ProxyError(f"interval [{a},{b}] has a > b")
        for (_, b), (a2, _) in zip(ivs, ivs[1:]):
            if a2 <= b:
                raise ProxyError("intervals must be disjoint and sorted ascending")
        object.__setattr__(self, "intervals", ivs)
        if self.window is not None:
            A, B = map(_q, self.window)
            if A >= B:
                raise ProxyError("window needs A < B")
            object.__setattr__(self, "window", (A, B))

    def __contains__(self, r) -> bool:
        return closed_member(self, r)

    def __len__(self):
        return len(self.intervals)

    def __str__(self):
        return "{" + ",".join(f"[{format_rational(a)},{format_rational(b)}]"
                              for a, b in self.intervals) + "}"


def open_proxy(balls: Iterable = ()) -> OpenProxy:
    return OpenProxy(tuple(balls))


def closed_proxy(intervals: Iterable = (), window=None) -> ClosedProxy:
    """Normalizing constructor: sorts and merges overlapping or touching pieces."""
    ivs = sorted((_q(a), _q(b)) for a, b in intervals)
    merged: list[list[Fraction]] = []
    for a, b in ivs:
        if a > b:
            raise ProxyError(f"interval [{a},{b}] has a > b")
        if merged and a <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    return ClosedProxy(tuple(map(tuple, merged)), window)


# -- membership and Boolean structure ---------------------------------------

def open_member(u: OpenProxy, r) -> bool:
    r = _q(r)
    return any(abs(r - b.center) < b.radius for b in u.balls)


def closed_member(c: ClosedProxy, r) -> bool:
    r = _q(r)
    return any(a <= r <= b for a, b in c.intervals)


def proxy_union(us: Sequence[OpenProxy]) -> OpenProxy:
    return OpenProxy(tuple(b for u in us for b in u.balls))


def proxy_intersect(u: OpenProxy, v: OpenProxy) -> OpenProxy:
    out = []
    for b in u.balls:
        for c in v.balls:
            lo, hi = max(b.lo, c.lo), min(b.hi, c.hi)
            if lo < hi:
                out.append(Ball.from_interval(lo, hi))
    return OpenProxy(tuple(out))


def widen_real_proxy(balls, precision) -> OpenProxy:
    """Rational inner approximation of a union of balls with real (cut) centers
    and radii.  Each output ball ⟨p,q⟩ satisfies q + |p - center| <= radius."""
    from .cuts import RationalCut, _as_cut
    precision = _q(precision)
    if precision <= 0:
        raise ProxyError("precision must be positive")
    out = []
    for center, radius in balls:
        center, radius = _as_cut(center), _as_cut(radius)
        if isinstance(center, RationalCut):
            p, slack = center.value, Fraction(0)
        else:
            lo, hi = center.bracket(precision / 2)
            p, slack = hi, hi - lo  # |p - center| < hi - lo
        r_lo = radius.value if isinstance(radius, RationalCut) else radius.bracket(precision / 2)[0]
        q = r_lo - slack - precision
        if q <= 0:
            raise ProxyError(f"radius not verifiably above precision {precision}")
        out.append(Ball(p, q))
    return OpenProxy(tuple(out))


# -- complements inside a window --------------------------------------------

def _merge_open(balls) -> list[tuple[Fraction, Fraction]]:
    # open intervals that merely touch leave the touching point uncovered
    merged: list[list[Fraction]] = []
    for lo, hi in sorted((b.lo, b.hi) for b in balls):
        if merged and lo < merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return [tuple(m) for m in merged]


def closed_complement(c: ClosedProxy, window=None) -> OpenProxy:
    """(A,B) minus c, as one ball per open gap."""
    if window is None:
        window = c.window
    if window is None:
        raise ProxyError("closed_complement needs a window")
    A, B = map(_q, window)
    if A >= B:
        raise ProxyError("window needs A < B")
    out = []
    cur = A
    for a, b in c.intervals:
        right = min(a, B)
        if right > cur:
            out.append(Ball.from_interval(cur, right))
        cur = max(cur, b)
        if cur >= B:
            break
    if cur < B:
        out.append(Ball.from_interval(cur, B))
    return OpenProxy(tuple(out))


def open_complement(u: OpenProxy, window) -> ClosedProxy:
    """[A,B] minus the union of u, by endpoint sweep."""
    A, B = map(_q, window)
    if A > B:
        raise ProxyError("window needs A <= B")
    pieces = []
    cur = A  # least point of [A,B] not yet known to be covered
    for lo, hi in _merge_open(u.balls):
        if hi <= cur:
            continue
        if lo > B:
            break
        if lo >= cur:
            pieces.append((cur, lo))
        cur = hi
        if cur > B:
            break
    if cur <= B:
        pieces.append((cur, B))
    return ClosedProxy(tuple(pieces), (A, B) if A < B else None)


# -- finite subcover ---------------------------------------------------------

@dataclass(frozen=True)
class CoverResult:
    covered: bool
    chain: tuple[Ball, ...] = ()
    witness: Fraction | None = None

    def __bool__(self):
        return self.covered


def covers_interval(u: OpenProxy, p, q) -> CoverResult:
    """Decide [p,q] ⊆ ∪u.  Greedy left-to-right: from the leftmost uncovered
    point take the ball containing it that reaches furthest right."""
    p, q = _q(p), _q(q)
    if p > q:
        raise ProxyError("covers_interval needs p <= q")
    chain = []
    x = p
    while True:
        best = None
        for b in u.balls:
            if b.contains(x) and (best is None or b.hi > best.hi):
                best = b
        if best is None:
            return CoverResult(False, (), x)
        chain.append(best)
        if best.hi > q:
            return CoverResult(True, tuple(chain))
        x = best.hi


def check_chain(chain: Sequence[Ball], p, q) -> bool:
    """The three chain conditions: |p-p1| < q1, consecutive balls overlap
    (|p_i - p_{i+1}| < q_i + q_{i+1}), and |p_n - q| < q_n."""
    if not chain:
        return False
    p, q = _q(p), _q(q)
    if not abs(p - chain[0].center) < chain[0].radius:
        return False
    for b, c in zip(chain, chain[1:]):
        if not abs(b.center - c.center) < b.radius + c.radius:
            return False
    return abs(chain[-1].center - q) < chain[-1].radius


def is_dense_witness(x: Iterable, balls: Iterable, target: OpenProxy) -> bool:
    """Every listed ball that meets the target union also meets x."""
    points = [_q(r) for r in x]
    for p, q in balls:
        ball = Ball(_q(p), _q(q))
        meets_target = any(abs(ball.center - t.center) < ball.radius + t.radius
                           for t in target.balls)
        if meets_target and not any(ball.contains(r) for r in points):
            return False
    return True


# -- text formats ------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ProxyError(f"not a rational: {text!r}") from None


def format_rational(r: Fraction) -> str:
    return str(_q(r))


def _pairs_from_text(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ProxyError(f"line {lineno}: expected two rationals, got {line!r}")
        yield parse_rational(parts[0]), parse_rational(parts[1])


def parse_open_proxy(text: str) -> OpenProxy:
    """One ball per line: ``center radius``."""
    return OpenProxy(tuple(_pairs_from_text(text)))


def parse_closed_proxy(text: str, window=None) -> ClosedProxy:
    """One interval per line: ``a b``."""
    return closed_proxy(_pairs_from_text(text), window)


def format_open_proxy(u: OpenProxy) -> str:
    return "".join(f"{b.center} {b.radius}\n" for b in u.balls)


def format_closed_proxy(c: ClosedProxy) -> str:
    return "".join(f"{a} {b}\n" for a, b in c.intervals)
