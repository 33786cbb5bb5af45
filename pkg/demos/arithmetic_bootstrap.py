"""Arithmetic from sets: graphs of + and ·, order as inclusion, quotients, rationals."""
from fractions import Fraction

from hfbench import (
    as_pair, format_set, hf_to_nat, make_set, nat_leq, pair, plus_graph, plus_graph_by_formula,
    plus_witness, quotient, rat_less_sets, rat_to_hf, times_graph, von_neumann,
)

N = von_neumann
print("witness for 2+3=5:", format_set(plus_witness(N(2), N(3))))

g = plus_graph(16)
print("plus on [0,16):", len(g), "triples; formula route builds the same set:",
      plus_graph_by_formula(16).graph is g.graph)
t = times_graph(16)
print("7*2 =", t.lookup(7, 2), "| 5*5 =", t.lookup(5, 5), "(outside the bound)")
print("3 <= 9 as inclusion:", nat_leq(N(3), N(9)), "| 9 <= 3:", nat_leq(N(9), N(3)))

pairs = [(1, 2), (2, 4), (2, 3), (3, 6), (4, 6)]
x = make_set(pair(N(p), N(q)) for p, q in pairs)


def same_ratio(a, b):
    (p, q), (r, s) = [tuple(map(hf_to_nat, as_pair(e))) for e in (a, b)]
    return p * s == q * r


print("fractions up to equal ratio:", format_set(quotient(x, same_ratio)))
half, third = rat_to_hf(Fraction(1, 2)), rat_to_hf(Fraction(1, 3))
print("1/2 as a set:", format_set(half))
print("1/3 < 1/2 using set operations only:", rat_less_sets(third, half))
