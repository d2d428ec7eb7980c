import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cllc.errors import ParseError, UsageError
from cllc.perm import (
    Partition,
    Permutation,
    batch_cycle_counts,
    canonical_permutation,
    chunk_prefixes,
    class_size,
    compose,
    cycle_count,
    cycle_type,
    enumerate_n_cycles,
    insert_letter,
    n_cycle_array,
    odd_even_cycle_counts,
    parity,
    partitions,
    random_of_type,
)

from oracles import all_n_cycles, count_cycles

P = Permutation.parse


def perms(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Permutation))


def perm_pairs(max_n=8):
    return st.integers(1, max_n).flatmap(lambda n: st.tuples(
        *[st.permutations(list(range(1, n + 1))).map(Permutation)] * 3))


def test_compose_examples():
    r3 = Permutation.rho(3)
    assert compose(r3, r3) == P("(1 3 2)")
    p = P("(1 3)(2 4)")
    assert compose(Permutation.identity(4), p) == p
    assert compose(P("(1 2)"), P("(1 2)")) == Permutation.identity(2)


def test_compose_left_to_right():
    a, b = P("(1 2)", 3), P("(2 3)")
    # a first: 1 -> 2, then b: 2 -> 3
    assert compose(a, b)(1) == 3
    assert (a * b)(1) == 3


def test_compose_size_mismatch():
    with pytest.raises(UsageError):
        compose(Permutation.identity(2), Permutation.identity(3))


def test_cycle_count_examples():
    assert cycle_count(Permutation.identity(5)) == 5
    assert cycle_count(compose(Permutation.rho(3), Permutation.rho(3))) == 1
    assert cycle_count(compose(P("(1 3 2)"), Permutation.rho(3))) == 3


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(4)).parts == (1, 1, 1, 1)
    assert cycle_type(P("(1 2)(3 4)")).parts == (2, 2)
    assert cycle_type(Permutation.rho(5)).parts == (5,)


def test_parity_examples():
    assert parity(Permutation.identity(6)) == 0
    assert parity(P("(2 5)", 6)) == 1
    for n in range(1, 10):
        assert parity(Permutation.rho(n)) == (n + 1) % 2


def test_odd_even_examples():
    assert odd_even_cycle_counts(Permutation.identity(3)) == (3, 0)
    assert odd_even_cycle_counts(P("(1 2)(3 4)")) == (0, 2)
    assert odd_even_cycle_counts(Permutation.rho(5)) == (1, 0)


def test_enumerate_small():
    assert list(enumerate_n_cycles(1)) == [Permutation.identity(1)]
    assert list(enumerate_n_cycles(2)) == [P("(1 2)")]
    assert len(list(enumerate_n_cycles(4))) == 6


@pytest.mark.parametrize("n", range(1, 9))
def test_enumerate_is_q_n(n):
    got = list(enumerate_n_cycles(n))
    assert len(got) == math.factorial(n - 1)
    assert len(set(got)) == len(got)
    assert all(cycle_type(z).parts == (n,) for z in got)
    if n <= 6:
        assert {z.images for z in got} == set(all_n_cycles(n))


@pytest.mark.parametrize("n", range(1, 8))
def test_array_matches_stream(n):
    arr = n_cycle_array(n)
    assert [tuple(row + 1) for row in arr] == [z.images for z in enumerate_n_cycles(n)]
    chunks = np.vstack([n_cycle_array(n, prefix=p) for p in chunk_prefixes(n)])
    assert (chunks == arr).all()


def test_second_letter_chunks():
    n = 6
    chunks = [list(enumerate_n_cycles(n, second=s)) for s in range(2, n + 1)]
    assert all(len(c) == math.factorial(n - 2) for c in chunks)
    assert [z for c in chunks for z in c] == list(enumerate_n_cycles(n))
    with pytest.raises(UsageError):
        list(enumerate_n_cycles(n, second=1))


def test_chunk_prefixes_split_deeper_for_large_n():
    assert len(chunk_prefixes(10)) == 9
    assert len(chunk_prefixes(12)) == 11 * 10


@settings(max_examples=200)
@given(st.integers(1, 9).flatmap(lambda n: st.lists(
    st.permutations(list(range(1, n + 1))), min_size=1, max_size=20)))
def test_batch_cycle_counts(rows):
    images = np.array(rows) - 1
    assert list(batch_cycle_counts(images)) == [count_cycles(r) for r in rows]


@given(perm_pairs())
def test_compose_associative(triple):
    a, b, c = triple
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perm_pairs())
def test_parity_homomorphism(triple):
    a, b, _ = triple
    assert parity(compose(a, b)) == (parity(a) + parity(b)) % 2


@given(perms())
def test_parity_matches_even_cycles(p):
    o, e = odd_even_cycle_counts(p)
    assert o + e == cycle_count(p)
    assert parity(p) == e % 2
    assert o % 2 == p.n % 2


@pytest.mark.parametrize("n", range(2, 8))
def test_fixed_point_insertion_partitions_q_n(n):
    seen = []
    for zeta in enumerate_n_cycles(n - 1):
        block = {insert_letter(zeta, j) for j in range(1, n)}
        assert len(block) == n - 1
        seen.extend(block)
    assert len(seen) == len(set(seen)) == math.factorial(n - 1)
    assert set(seen) == set(enumerate_n_cycles(n))


def test_canonical_permutation():
    assert canonical_permutation(Partition([3])) == P("(1 2 3)")
    assert canonical_permutation(Partition([2, 2])) == P("(1 2)(3 4)")
    assert canonical_permutation(Partition([2, 1, 1])) == P("(1 2)", 4)


@pytest.mark.parametrize("lam", [p for n in range(1, 8) for p in partitions(n)], ids=str)
def test_canonical_has_its_type(lam):
    assert cycle_type(canonical_permutation(lam)) == lam


def test_random_of_type_is_uniform_enough():
    lam = Partition([2, 1, 1])
    rng = random.Random(1)
    seen = {random_of_type(lam, rng) for _ in range(300)}
    assert len(seen) == class_size(lam) == 6
    assert all(cycle_type(p) == lam for p in seen)


def test_permutation_parsing():
    assert P("(1 2 3)(4 5)").images == (2, 3, 1, 5, 4)
    assert P("[2,3,1]") == Permutation.rho(3)
    assert P("(1 2)", n=4).n == 4
    assert P("()", n=3) == Permutation.identity(3)
    assert str(P("(1 3)(2 4)")) == "(1 3)(2 4)"
    for text in ["(1 2", "(1 a)", "1 2", "[1,x]"]:
        with pytest.raises(ParseError):
            P(text)
    with pytest.raises(UsageError):
        P("(1 2)(2 3)")
    with pytest.raises(UsageError):
        Permutation([1, 1])
    with pytest.raises(UsageError):
        Permutation([])


def test_permutation_immutable_and_hashable():
    p = Permutation.rho(4)
    with pytest.raises(AttributeError):
        p.images = (1, 2, 3, 4)
    assert {p: 1}[Permutation.rho(4)] == 1


def test_partitions_listing():
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in partitions(4, no_unit_parts=True)] == [(4,), (2, 2)]
    assert [p.parts for p in partitions(1)] == [(1,)]


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 3), (5, 7), (9, 30), (10, 42), (11, 56)])
def test_partition_counts(n, count):
    lst = list(partitions(n))
    assert len(lst) == count == len(set(lst))
    assert lst == sorted(lst, key=lambda p: p.parts, reverse=True)


def test_partition_parse():
    assert Partition.parse("3,1,1").parts == (3, 1, 1)
    assert Partition.parse(" 4 , 2").parts == (4, 2)
    for text in ["", "3,,1", "1,3", "3,0", "3,", "a"]:
        with pytest.raises(ParseError):
            Partition.parse(text)
    err = pytest.raises(ParseError, Partition.parse, "2,3").value
    assert err.pos == 2
    assert err.annotated().splitlines()[-1] == "    ^"


def test_partition_forms():
    lam = Partition([3, 2, 2, 1])
    assert lam.n == 8 and str(lam) == "3,2,2,1"
    assert lam.exponent_form() == "3 2^2 1"
    assert lam.unit_reduction() == (Partition([3, 2, 2]), 1)
    assert Partition([1, 1, 1]).unit_reduction() == (Partition([1]), 2)
    with pytest.raises(UsageError):
        Partition([1, 2])
