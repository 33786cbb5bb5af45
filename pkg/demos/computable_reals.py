"""Reals as lower cuts: membership, comparison at a precision, limits."""
from fractions import Fraction as F

from hfbench import (
    CauchySeq, cauchy_limit, cut, cut_add, cut_compare, cut_lub, cut_neg, eval_cut_expr,
    sqrt2, try_member,
)



def show(bracket):
    lo, hi = bracket
    return f"[{lo}, {hi}]"


s = sqrt2()
print("sqrt2 brackets:", *(show(s.bracket(F(1, 10 ** k))) for k in (1, 3)))
print("7/5 < sqrt2:", try_member(s, F(7, 5)), "| 3/2 < sqrt2:", try_member(s, F(3, 2)))
print("compare sqrt2 with 7/5 at 1/100:", cut_compare(s, cut(F(7, 5)), F(1, 100)).value)
print("sqrt2 - sqrt2 vs 0:", cut_compare(cut_add(s, cut_neg(s)), cut(0), F(1, 10 ** 6)).value)
print("lub(0, sqrt2) vs sqrt2:", cut_compare(cut_lub([cut(0), s]), s, F(1, 10 ** 6)).value)

geom = CauchySeq(lambda n: 1 - F(1, 2 ** n), lambda j: j + 1)
for bounds in (None, (0, 1)):
    lim = cauchy_limit(CauchySeq(geom.term, geom.modulus, bounds))
    answers = {str(p): try_member(lim, p) for p in (F(9, 10), F(1), F(101, 100))}
    print(f"lim 1 - 2^-n, term bounds {bounds}:", answers)

print("lub(sqrt2, 3/2) - 1/3 lies in", show(eval_cut_expr("lub(sqrt2, 3/2) + neg(1/3)").bracket(F(1, 1000))))
