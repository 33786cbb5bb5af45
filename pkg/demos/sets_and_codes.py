"""Hereditarily finite sets: canonical handles, Ackermann codes, the order."""
from hfbench import (
    ackermann_code, canonicalize, format_set, from_ackermann, hf_compare, pair, powerset_fin,
    rank, von_neumann,
)

three = canonicalize("{{},{{}},{{},{{}}}}")
print("literal for 3 ->", format_set(three), "| same handle as von_neumann(3):", three is von_neumann(3))
print("duplicates and order do not matter:", canonicalize("{#1,#0,#1}") is von_neumann(2))

for n in range(8):
    x = from_ackermann(n)
    print(f"code {n} -> {format_set(x, sugar=False):28} rank {rank(x)}")

print("code(#3) =", ackermann_code(von_neumann(3)))
a, b = pair(von_neumann(1), von_neumann(2)), pair(von_neumann(2), von_neumann(4))
print("<1,2> vs <2,4>:", hf_compare(a, b).name, "(the code of <2,4> has over 2000 binary digits)")
print("P(#2) =", format_set(powerset_fin(von_neumann(2))))
