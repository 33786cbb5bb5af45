"""Open and closed proxies on the real line: Boolean operations, complements, covers."""
from fractions import Fraction as F

from hfbench import (
    closed_complement, closed_proxy, covers_interval, open_complement, open_proxy,
    proxy_intersect, proxy_union,
)

u = open_proxy([(0, F(3, 4)), (1, F(3, 4))])
v = open_proxy([(0, F(1, 2)), (1, F(1, 2))])
for name, w in [("u", u), ("v", v)]:
    res = covers_interval(w, 0, 1)
    if res:
        print(f"{name} covers [0,1] via chain", " ".join(map(str, res.chain)))
    else:
        print(f"{name} misses [0,1] at", res.witness)



def show(intervals):
    return " ".join(f"({a}, {b})" for a, b in intervals)


print("u ∪ v:", show(proxy_union([u, v]).intervals()))
print("u ∩ v:", show(proxy_intersect(u, v).intervals()))
print("[0,1] minus (0,1):", open_complement(open_proxy([(F(1, 2), F(1, 2))]), (0, 1)))
print("(-1,1) minus {0}:", closed_complement(closed_proxy([(0, 0)]), (-1, 1)))
