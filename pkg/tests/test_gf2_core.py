import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_matrices, word
from gf2_core import (
    BinaryWord,
    ContractViolation,
    GF2Matrix,
    Ordering,
    OrderSpec,
    Syndrome,
    add,
    codewords,
    compare,
    distance,
    nullspace_basis,
    rank,
    supp,
    syndrome,
    weight,
)


def all_words(n):
    return [BinaryWord(n, v) for v in range(1 << n)]


def test_add():
    u = BinaryWord.from_string("1100000000")
    assert add(u, u) == BinaryWord.zero(10)
    assert add(word(1), word(2)) == BinaryWord.from_string("1100000000")
    assert word(1, 2) + word(2, 3) == word(1, 3)


def test_add_length_mismatch():
    with pytest.raises(ContractViolation):
        add(BinaryWord.zero(3), BinaryWord.zero(4))


def test_weight_and_support():
    assert weight(BinaryWord.zero(10)) == 0
    assert supp(BinaryWord.zero(10)) == []
    assert weight(word(5, 9, 10)) == 3
    assert supp(word(5, 9, 10)) == [5, 9, 10]
    assert weight(BinaryWord.from_string("1111111111")) == 10


def test_string_form_puts_coordinate_one_first():
    assert str(word(1)) == "1000000000"
    assert str(word(10)) == "0000000001"
    assert BinaryWord.from_string("0000110000") == word(5, 6)


@pytest.mark.parametrize("bits", ["", "10a1", "2"])
def test_from_string_rejects_garbage(bits):
    with pytest.raises(ContractViolation):
        BinaryWord.from_string(bits)


@pytest.mark.parametrize("bits", ["10a1", "2", "1 0", "0b11"])
def test_syndrome_from_string_rejects_garbage(bits):
    with pytest.raises(ContractViolation):
        Syndrome.from_string(bits)


def test_syndrome_from_string():
    assert Syndrome.from_string("110000") == Syndrome(6, 0b110000)
    assert str(Syndrome.from_string("000101")) == "000101"
    assert Syndrome.from_string("") == Syndrome(0, 0)


def test_word_bounds():
    with pytest.raises(ContractViolation):
        BinaryWord(0, 0)
    with pytest.raises(ContractViolation):
        BinaryWord(129, 0)
    with pytest.raises(ContractViolation):
        BinaryWord(3, 8)
    with pytest.raises(ContractViolation):
        BinaryWord.unit(3, 4)
    assert BinaryWord.unit(128, 128).weight == 1


def test_distance():
    assert distance(word(1, 2), word(5, 6)) == 4
    assert distance(word(1), word(1)) == 0


def test_compare_examples():
    order = OrderSpec(10)
    assert compare(BinaryWord.zero(10), word(1), order) is Ordering.LESS
    assert compare(word(1, 2), word(5, 6), order) is Ordering.LESS
    assert compare(word(1, 2, 4), word(1, 6, 8), order) is Ordering.LESS
    assert compare(word(5, 6), word(1, 2), order) is Ordering.GREATER
    assert compare(word(3), word(3), order) is Ordering.EQUAL


def test_compare_length_mismatch():
    with pytest.raises(ContractViolation):
        compare(BinaryWord.zero(3), BinaryWord.zero(3), OrderSpec(4))


def test_unknown_tie_break():
    with pytest.raises(ContractViolation):
        OrderSpec(4, tie_break="colex")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_order_is_total_and_weight_compatible(n):
    order = OrderSpec(n)
    words = all_words(n)
    for u, v in itertools.product(words, repeat=2):
        c = compare(u, v, order)
        assert (c is Ordering.EQUAL) == (u == v)
        assert compare(v, u, order) == -c
        if u.weight < v.weight:
            assert c is Ordering.LESS


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_order_is_transitive(n):
    order = OrderSpec(n)
    words = all_words(n)
    for u, v, w in itertools.product(words, repeat=3):
        if compare(u, v, order) is Ordering.LESS and compare(v, w, order) is Ordering.LESS:
            assert compare(u, w, order) is Ordering.LESS


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_order_translation_on_disjoint_support(n):
    order = OrderSpec(n)
    words = all_words(n)
    for u, v in itertools.product(words, repeat=2):
        if compare(u, v, order) is not Ordering.LESS:
            continue
        for w in words:
            if w.value & (u.value | v.value):
                continue
            assert compare(u + w, v + w, order) is Ordering.LESS


@pytest.mark.parametrize("n", [1, 3, 6])
def test_zero_is_unique_minimum(n):
    order = OrderSpec(n)
    words = all_words(n)
    assert min(words, key=order.key) == BinaryWord.zero(n)
    assert sum(1 for w in words if compare(w, BinaryWord.zero(n), order) is Ordering.LESS) == 0


def test_example_syndromes(example_matrix):
    assert syndrome(example_matrix, BinaryWord.zero(10)) == Syndrome(6, 0)
    assert syndrome(example_matrix, word(5)).bits() == (1, 0, 0, 0, 0, 0)
    assert syndrome(example_matrix, word(1, 2)).bits() == (1, 1, 0, 0, 0, 0)
    assert syndrome(example_matrix, word(1, 2)) == syndrome(example_matrix, word(5, 6))


def test_syndrome_dimension_mismatch(example_matrix):
    with pytest.raises(ContractViolation):
        syndrome(example_matrix, BinaryWord.zero(9))


def test_syndrome_is_column_xor(example_matrix):
    s = syndrome(example_matrix, word(2, 7, 9))
    assert s == example_matrix.column(2) ^ example_matrix.column(7) ^ example_matrix.column(9)


@given(u=st.integers(0, (1 << 10) - 1), v=st.integers(0, (1 << 10) - 1))
def test_syndrome_is_linear(u, v):
    H = GF2Matrix([
        [1, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        [1, 0, 1, 1, 0, 1, 0, 0, 0, 0],
        [1, 1, 0, 1, 0, 0, 1, 0, 0, 0],
        [1, 1, 1, 0, 0, 0, 0, 1, 0, 0],
    ])
    a, b = BinaryWord(10, u), BinaryWord(10, v)
    assert syndrome(H, a + b) == syndrome(H, a) ^ syndrome(H, b)


def test_matrix_validation():
    with pytest.raises(ContractViolation):
        GF2Matrix([[0, 2]])
    with pytest.raises(ContractViolation):
        GF2Matrix(np.zeros((0, 3)))
    with pytest.raises(ContractViolation):
        GF2Matrix([[1, 0]]).entry(2, 1)


def test_rank_and_nullspace(example_matrix, even_matrix):
    assert rank(example_matrix) == 6
    assert len(nullspace_basis(example_matrix)) == 4
    identity = GF2Matrix(np.hstack([np.eye(3, dtype=np.uint8), np.zeros((3, 2), dtype=np.uint8)]))
    assert rank(identity) == 3
    assert nullspace_basis(even_matrix) == [BinaryWord.from_string("11")]


def test_zero_matrix_rank():
    H = GF2Matrix(np.zeros((2, 4), dtype=np.uint8))
    assert rank(H) == 0
    assert len(nullspace_basis(H)) == 4


def test_redundant_rows_do_not_raise_rank():
    H = GF2Matrix([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert rank(H) == 2


@pytest.mark.parametrize("H", random_matrices(12, seed=7))
def test_nullspace_spans_the_code(H):
    basis = nullspace_basis(H)
    assert len(basis) == H.cols - rank(H)
    assert all(syndrome(H, b).value == 0 for b in basis)
    span = set(codewords(H))
    assert len(span) == 1 << len(basis)
    brute = {w for w in all_words(H.cols) if syndrome(H, w).value == 0}
    assert span == brute
