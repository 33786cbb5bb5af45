import random

import pytest
from hypothesis import given, settings, strategies as st

from hfbench.hf import EMPTY, from_ackermann, make_set, random_set, von_neumann
from hfbench.logic import (
    And, Atom, Iff, Implies, Not, Or, Quant, comprehend, comprehend_tuples, eval_relativized,
    expand_bounded, format_formula, free_vars, is_delta0,
)
from hfbench.parser import ParseError, parse_formula, parse_term
from hfbench.rudimentary import UnboundVariable, Var
from oracles import expand_eval, quantifier_depth, random_formula

N = von_neumann
PRIME = ("~(u = #1) /\\ forall v in N . forall w in N . "
         "(<v,w,u> in T -> (v = #1 \\/ w = #1))")


# parsing

def test_parse_atomic():
    assert parse_formula("v in w") == Atom("in", Var("v"), Var("w"))


def test_parse_bounded_universal():
    f = parse_formula("forall v in w . v = v")
    assert f == Quant("forall", "v", Var("w"), Atom("=", Var("v"), Var("v")))


def test_parse_prime_shape():
    f = parse_formula(PRIME)
    assert isinstance(f, And)
    assert free_vars(f) == {"u", "N", "T"}
    assert is_delta0(f)


def test_precedence():
    f = parse_formula("~a in b /\\ c in d \\/ e in f -> g in h <-> i in j")

    def at(x, y):
        return Atom("in", Var(x), Var(y))
    assert f == Iff(Implies(Or(And(Not(at("a", "b")), at("c", "d")), at("e", "f")), at("g", "h")),
                    at("i", "j"))
    assert parse_formula(format_formula(f)) == f
    # implication is right associative
    g = parse_formula("a in b -> c in d -> e in f")
    assert parse_formula("a in b -> (c in d -> e in f)") == g
    # quantifier bodies extend right
    h = parse_formula("exists v . v in a /\\ v in b")
    assert isinstance(h, Quant) and isinstance(h.body, And)


def test_unicode_and_prefix_forms():
    assert parse_formula("∀v∈w (v ⊆ w)".replace("(", ". (")) == parse_formula("forall v in w . (v sub w)")
    assert parse_formula("(exists v in w)(v sub u)") == parse_formula("exists v in w . v sub u")


def test_multi_variable_quantifier():
    assert parse_formula("forall v, w in N . v = w") == \
        parse_formula("forall v in N . forall w in N . v = w")


@pytest.mark.parametrize("text, col", [
    ("v in", 5), ("v in w /\\", 10), ("forall . v in w", 8), ("v == w", 4), ("v in w)", 7),
    ("v in nope(w)", 6), ("v $ w", 3),
])
def test_parse_errors_carry_location(text, col):
    with pytest.raises(ParseError) as info:
        parse_formula(text)
    assert info.value.line == 1
    assert info.value.column == col


def test_parse_error_line_numbers():
    with pytest.raises(ParseError) as info:
        parse_formula("v in w /\\\n  (x in")
    assert (info.value.line, info.value.column) == (2, 8)


def test_print_parse_round_trip_random():
    rng = random.Random(2)
    consts = [N(0), N(2), from_ackermann(5)]
    for _ in range(300):
        f = random_formula(rng, ["a", "b"], 3, consts)
        assert parse_formula(format_formula(f)) == f


# classification

@pytest.mark.parametrize("text, expected", [
    ("v in w", True), ("exists v in w . v sub u", True), ("exists v . v = v", False),
    ("forall v in w . exists u . u in v", False),
])
def test_is_delta0(text, expected):
    assert is_delta0(parse_formula(text)) is expected


def test_free_vars():
    f = parse_formula("forall v in w . exists u in v . u in x")
    assert free_vars(f) == {"w", "x"}


# relativized evaluation

def test_eval_examples():
    for u in (EMPTY, N(3), from_ackermann(12345)):
        assert eval_relativized("exists w . w in w", u) is False
    assert eval_relativized("forall v . (v in N -> v sub N)", N(5), {"N": N(5)}) is True
    assert eval_relativized("v sub w", EMPTY, {"v": N(2), "w": N(5)}) is True


def test_unbound_free_variable():
    with pytest.raises(UnboundVariable):
        eval_relativized("v in w", N(3), {"v": N(1)})


def test_parameters_need_not_lie_in_universe():
    assert eval_relativized("exists v . v in p", N(2), {"p": make_set([N(1), N(7)])}) is True
    assert eval_relativized("exists v . v in p", N(2), {"p": make_set([N(7)])}) is False


def test_evaluator_matches_expansion_oracle():
    rng = random.Random(20)
    consts = [N(0), N(1), N(3)]
    for _ in range(400):
        universe = random_set(rng, 4)
        f = random_formula(rng, ["a", "b"], 3, consts)
        assert quantifier_depth(f) <= 3
        assign = {"a": random_set(rng, 4), "b": rng.choice(universe.children or (EMPTY,))}
        assert eval_relativized(f, universe, assign) == expand_eval(f, universe, assign)


def test_delta0_is_universe_independent():
    rng = random.Random(21)
    consts = [N(0), N(2)]
    for _ in range(300):
        f = random_formula(rng, ["a", "b"], 3, consts, bounded_only=True)
        assert is_delta0(f)
        assign = {"a": random_set(rng, 4), "b": random_set(rng, 3)}
        u1 = make_set(list(assign.values()))
        u2 = make_set(list(assign.values()) + [random_set(rng, 4) for _ in range(3)])
        assert eval_relativized(f, u1, assign) == eval_relativized(f, u2, assign)


def test_expand_bounded_agrees_on_transitive_universe():
    rng = random.Random(22)
    consts = [N(1), N(2)]
    universe = N(4)
    for _ in range(200):
        f = random_formula(rng, ["a"], 2, consts, bounded_only=True)
        assign = {"a": rng.choice(universe.children)}
        assert eval_relativized(f, universe, assign) == \
            eval_relativized(expand_bounded(f), universe, assign)


# comprehension

def test_comprehend_examples():
    assert comprehend(N(3), "v sub #1") is N(2)
    x = from_ackermann(98765)
    assert comprehend(x, "v = v") is x


def test_even_numbers_with_plus_parameter():
    from hfbench.arithmetic import plus_graph
    P = plus_graph(10).graph
    got = comprehend(N(10), "(exists w in D)(<w,w,v> in P)", "v", {"D": N(10), "P": P})
    assert got is make_set([N(i) for i in (0, 2, 4, 6, 8)])


def test_comprehension_stays_in_domain():
    rng = random.Random(23)
    for _ in range(200):
        dom = random_set(rng, 4)
        f = random_formula(rng, ["v", "p"], 2, [N(1)])
        got = comprehend(dom, f, "v", {"p": random_set(rng, 3)})
        assert got.issubset(dom)


def test_comprehension_uses_parameter_augmented_universe():
    # "exists w . w = p" holds only if p is in the universe; p is outside the domain
    p = N(7)
    got = comprehend(N(3), "exists w . w = p", "v", {"p": p})
    assert got is N(3)


def test_de_morgan_for_bounded_quantifiers():
    rng = random.Random(24)
    for _ in range(150):
        inner = random_formula(rng, ["v", "w", "y"], 1, [N(1)], bounded_only=True)
        lhs = Not(Quant("forall", "y", Var("w"), inner))
        rhs = Quant("exists", "y", Var("w"), Not(inner))
        dom, w = random_set(rng, 4), random_set(rng, 4)
        assert comprehend(dom, lhs, "v", {"w": w}) is comprehend(dom, rhs, "v", {"w": w})


@settings(max_examples=60)
@given(st.integers(min_value=0, max_value=4095).map(from_ackermann),
       st.integers(min_value=0, max_value=4095).map(from_ackermann))
def test_tuple_comprehension_matches_filter(x, y):
    got = comprehend_tuples((x, y), "a in b \\/ a = b", ("a", "b"))
    expected = {(a, b) for a in x for b in y if a in b or a is b}
    from hfbench.hf import pair
    assert got is make_set([pair(a, b) for a, b in expected])


def test_comprehension_missing_parameter():
    with pytest.raises(UnboundVariable):
        comprehend(N(3), "v in q")


def test_terms_inside_atoms():
    assert eval_relativized("union(a, b) = #3", EMPTY, {"a": N(2), "b": make_set([N(2)])})
    assert parse_term("succ(#2)") is not None
