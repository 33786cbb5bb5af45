import pickle
import random
import threading

import pytest
from hypothesis import given, strategies as st

from hfbench.hf import (
    EMPTY, CapExceeded, CodeOverflow, HfOrder, LiteralSyntaxError, ackermann_code,
    as_pair, canonicalize, caps, finite_sequences, format_set, from_ackermann,
    hf_compare, is_von_neumann, make_set, pair, parse_literal, powerset_fin,
    random_set, rank, singleton, tuple_, von_neumann,
)
from oracles import fs_code, fs_nat, fs_rank, to_fs

codes = st.integers(min_value=0, max_value=(1 << 16) - 1)
hf_sets = codes.map(from_ackermann)


# canonicalize

def test_empty_literal():
    assert canonicalize("{}") is EMPTY


def test_duplicates_collapse():
    assert canonicalize("{{},{}}") is singleton(EMPTY)


def test_von_neumann_three_literal():
    assert canonicalize("{{},{{}},{{},{{}}}}") is von_neumann(3)
    assert to_fs(von_neumann(3)) == fs_nat(3)


def test_canonicalize_accepts_python_values():
    assert canonicalize(3) is von_neumann(3)
    assert canonicalize([[], [[]], []]) is von_neumann(2)
    with pytest.raises(TypeError):
        canonicalize(True)


@given(st.lists(codes, max_size=6), st.randoms(use_true_random=False))
def test_permuting_and_duplicating_children_gives_same_handle(cs, rng):
    items = [from_ackermann(c) for c in cs]
    shuffled = items + items[: len(items) // 2]
    rng.shuffle(shuffled)
    a = make_set(items)
    assert make_set(shuffled) is a
    assert canonicalize(format_set(a)) is a
    assert canonicalize(a) is a


# ackermann codes

@pytest.mark.parametrize("x, code", [(EMPTY, 0), (singleton(EMPTY), 1), (von_neumann(3), 11)])
def test_ackermann_examples(x, code):
    assert ackermann_code(x) == code


@given(hf_sets)
def test_code_matches_frozenset_oracle(x):
    assert ackermann_code(x) == fs_code(to_fs(x))


@given(codes)
def test_code_bijection(n):
    assert ackermann_code(from_ackermann(n)) == n


def test_code_overflow_is_explicit():
    big = pair(von_neumann(2), von_neumann(4))
    with pytest.raises(CodeOverflow):
        ackermann_code(big, max_bits=64)


# order

def test_compare_examples():
    assert hf_compare(EMPTY, singleton(EMPTY)) is HfOrder.LESS
    x = von_neumann(7)
    assert hf_compare(x, x) is HfOrder.EQUAL
    a = pair(von_neumann(1), von_neumann(2))
    b = pair(von_neumann(2), von_neumann(4))
    assert hf_compare(a, b) is HfOrder.LESS
    assert hf_compare(b, a) is HfOrder.GREATER
    # oracle: code(x) is the binary number with bits at the child codes, so
    # codes compare as the descending child-code lists; code(b) is too big
    # to materialize (its top bit sits above 2^2059)
    ka = sorted((fs_code(to_fs(c)) for c in a), reverse=True)
    kb = sorted((fs_code(to_fs(c)) for c in b), reverse=True)
    assert ka < kb
    assert kb[0] > 2 ** 2059
    with pytest.raises(CodeOverflow):
        ackermann_code(b)


@given(hf_sets, hf_sets)
def test_compare_agrees_with_code_order(a, b):
    ca, cb = ackermann_code(a), ackermann_code(b)
    expected = HfOrder.LESS if ca < cb else HfOrder.GREATER if ca > cb else HfOrder.EQUAL
    assert hf_compare(a, b) is expected
    assert (a < b) == (ca < cb)


@given(hf_sets)
def test_membership_implies_order(b):
    for a in b:
        assert hf_compare(a, b) is HfOrder.LESS


def test_children_sorted_ascending():
    rng = random.Random(3)
    for _ in range(200):
        x = random_set(rng, 5)
        cs = [ackermann_code(c) for c in x.children]
        assert cs == sorted(cs) and len(set(cs)) == len(cs)


# rank, powerset, sequences

def test_rank_examples():
    assert rank(EMPTY) == 0
    assert rank(singleton(EMPTY)) == 1
    for n in range(11):
        assert rank(von_neumann(n)) == n


@given(hf_sets)
def test_rank_matches_oracle(x):
    assert rank(x) == fs_rank(to_fs(x))


def test_powerset_examples():
    assert powerset_fin(EMPTY) is singleton(EMPTY)
    assert powerset_fin(singleton(EMPTY)) is von_neumann(2)
    p = powerset_fin(von_neumann(2))
    assert len(p) == 4
    assert {ackermann_code(s) for s in p} == {0, 1, 2, 3}


@given(st.integers(min_value=0, max_value=(1 << 8) - 1).map(from_ackermann))
def test_powerset_size_and_rank(x):
    p = powerset_fin(x)
    assert len(p) == 2 ** len(x)
    assert rank(p) == rank(x) + 1
    assert all(s.issubset(x) for s in p)


def test_powerset_cap():
    with caps(cardinality=8):
        with pytest.raises(CapExceeded):
            powerset_fin(von_neumann(4))


def test_finite_sequences_examples():
    assert finite_sequences(EMPTY, 3) is EMPTY
    seqs = finite_sequences(singleton(EMPTY), 2)
    zero, one = von_neumann(0), von_neumann(1)
    assert seqs is make_set([make_set([pair(zero, EMPTY)]),
                             make_set([pair(zero, EMPTY), pair(one, EMPTY)])])
    assert len(finite_sequences(von_neumann(2), 1)) == 2


def test_finite_sequences_count():
    assert len(finite_sequences(von_neumann(3), 3)) == 3 + 9 + 27


# naturals and pairs

def test_von_neumann_transitive_and_linear():
    for n in range(20):
        x = von_neumann(n)
        assert all(z in x for y in x for z in y)
        assert all(a is b or a in b or b in a for a in x for b in x)
        assert is_von_neumann(x)
    assert not is_von_neumann(singleton(singleton(EMPTY)))


@given(hf_sets, hf_sets)
def test_pair_round_trip(a, b):
    assert as_pair(pair(a, b)) == (a, b)


def test_tuples_left_nested():
    a, b, c = von_neumann(1), von_neumann(2), von_neumann(3)
    assert tuple_(a, b, c) is pair(pair(a, b), c)
    assert format_set(tuple_(a, b, c)) == "<#1,#2,#3>"


def test_non_pair_is_none():
    assert as_pair(singleton(EMPTY)) is None
    assert as_pair(von_neumann(3)) is None


# literals

def test_literal_round_trip_sugar_and_raw():
    rng = random.Random(11)
    for _ in range(300):
        x = random_set(rng, 5)
        assert parse_literal(format_set(x)) is x
        assert parse_literal(format_set(x, sugar=False)) is x


def test_sugar_forms():
    assert format_set(von_neumann(3)) == "#3"
    assert format_set(von_neumann(3), sugar=False) == "{{},{{}},{{},{{}}}}"
    assert format_set(pair(von_neumann(1), von_neumann(2))) == "<#1,#2>"
    assert parse_literal("<#1,#2,#3>") is tuple_(von_neumann(1), von_neumann(2), von_neumann(3))


@pytest.mark.parametrize("bad", ["{", "{,}", "#", "<#1>", "{}}", "{#1 #2}", "x"])
def test_literal_errors_carry_position(bad):
    with pytest.raises(LiteralSyntaxError) as info:
        parse_literal(bad)
    assert 0 <= info.value.pos <= len(bad)


def test_raw_output_cap():
    with caps(output_chars=100):
        with pytest.raises(CapExceeded):
            format_set(von_neumann(12), sugar=False)
        assert format_set(von_neumann(12)) == "#12"


def test_rank_cap():
    deep = "{" * 40 + "#3" + "}" * 40
    with caps(rank=5):
        with pytest.raises(CapExceeded):
            parse_literal(deep)
    assert rank(parse_literal(deep)) == 43


# sharing

def test_pickle_reinterns():
    x = tuple_(von_neumann(2), von_neumann(5))
    assert pickle.loads(pickle.dumps(x)) is x


def test_concurrent_interning_is_consistent():
    results = {}

    def work(i):
        rng = random.Random(i % 3)
        results[i] = [random_set(rng, 5) for _ in range(200)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    # threads with the same seed build the same handles
    for i in range(3):
        assert all(a is b for a, b in zip(results[i], results[i + 3]))
