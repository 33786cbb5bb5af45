"""Formulas over finite universes, and comprehension with set parameters."""
from hfbench import (
    comprehend, eval_relativized, format_set, is_delta0, parse_formula, plus_graph,
    times_graph, von_neumann,
)

N = von_neumann
for text in ["exists w . w in w", "forall v in w . v sub w", "forall v . exists u . v in u"]:
    print(f"{text:32} delta0={is_delta0(parse_formula(text))}")

# unbounded quantifiers range over the universe; nothing here is self-membered
print("exists w . w in w over #6:", eval_relativized("exists w . w in w", N(6)))
# bounded ones range over the bound, whatever the universe
print("forall v in #4 . v sub #4:", eval_relativized("forall v in #4 . v sub #4", N(0)))

P = plus_graph(20).graph
print("evens below 20:", format_set(comprehend(N(20), "exists w in D . <w,w,v> in P", "v",
                                               {"D": N(20), "P": P})))
T = times_graph(30).graph
prime = "~(u = #0) /\\ ~(u = #1) /\\ forall v, w in D . (<v,w,u> in T -> (v = #1 \\/ w = #1))"
print("primes below 30:", format_set(comprehend(N(30), prime, "u", {"D": N(30), "T": T})))
