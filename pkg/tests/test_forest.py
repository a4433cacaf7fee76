import json

import pytest
from hypothesis import given, settings, strategies as st

from _oracles import brute_forests, rho_max
from grovekit.forest import (
    EMPTY, NotTrimmable, TooManyParts, enumerate_forests, extractor_word, format_forest,
    from_word, generator, is_zigzag, parse_composition, parse_forest, product, qdes, to_word,
    trim, trimming_words, zigzag_composition, zigzag_forest,
)

words = st.lists(st.integers(1, 5), max_size=5)


def test_generator_and_empty():
    assert len(EMPTY) == 0 and qdes(EMPTY) == set()
    g = generator(3)
    assert len(g) == 1 and qdes(g) == {3}
    assert trim(g, 3) == (EMPTY, "L")
    with pytest.raises(ValueError):
        generator(0)


def test_forest_224():
    F = from_word([2, 2, 4])
    assert F.trees == ((2, ((None, None), (None, None))),)
    assert qdes(F) == {2, 4}
    assert to_word(F) == [2, 2, 4]
    assert extractor_word(F) == [(2, "L"), (2, "L"), (4, "R")]
    assert sorted(trimming_words(F)) == [[2, 2, 4], [2, 3, 2]]
    assert extractor_word(F, [2, 3, 2]) == [(2, "L"), (3, "R"), (2, "L")]


def test_trim_rejects_non_descent():
    with pytest.raises(NotTrimmable):
        trim(from_word([2, 2, 4]), 1)


@settings(max_examples=80, deadline=None)
@given(words, words, words)
def test_product_is_associative(a, b, c):
    A, B, C = from_word(a), from_word(b), from_word(c)
    assert product(product(A, B), C) == product(A, product(B, C))
    assert product(A, EMPTY) == A == product(EMPTY, A)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), words)
def test_thompson_relation(i, j, w):
    if i <= j:
        i, j = j + 1, i
    base = from_word(w)
    assert product(base, from_word([i, j])) == product(base, from_word([j, i + 1]))


@settings(max_examples=80, deadline=None)
@given(words, st.integers(1, 6))
def test_trim_inverts_product(w, i):
    F = from_word(w)
    G = product(F, generator(i))
    assert i in qdes(G)
    assert trim(G, i)[0] == F


@settings(max_examples=80, deadline=None)
@given(words)
def test_canonical_word_round_trip(w):
    F = from_word(w)
    word = to_word(F)
    assert word == sorted(word)
    assert from_word(word) == F
    assert len(F) == len(w)
    # every trimming order spells a word for the same forest
    for t in list(trimming_words(F))[:20]:
        assert from_word(t) == F


@pytest.mark.parametrize("size,n", [(d, n) for d in range(4) for n in range(1, 4)])
def test_enumeration_matches_brute_force(size, n):
    got = enumerate_forests(size, n)
    assert len(got) == len(set(got))
    assert set(got) == brute_forests(size, n)
    assert all(rho_max(F) <= n for F in got)


def test_enumeration_small_cases():
    assert enumerate_forests(1, 2) == [generator(1), generator(2)]
    assert enumerate_forests(2, 1) == [from_word([1, 1])]
    assert rho_max(from_word([1, 2])) == 2


def test_zigzag():
    Z = zigzag_forest((2, 3, 1), 4)
    assert len(Z) == 6 and qdes(Z) == {4}
    assert to_word(Z) == [2, 2, 3, 3, 3, 4]
    assert zigzag_composition(Z) == (2, 3, 1)
    assert zigzag_forest((), 3) == EMPTY
    with pytest.raises(TooManyParts):
        zigzag_forest((1, 1, 1, 1), 3)
    assert zigzag_composition(from_word([1, 1, 2, 3])) == (2, 1, 1)
    assert is_zigzag(from_word([1, 1, 2, 3]), 3)


@pytest.mark.parametrize("alpha", [(1,), (3,), (1, 2), (2, 1, 2), (3, 3, 3)])
def test_zigzag_round_trip(alpha):
    for n in range(len(alpha), 5):
        Z = zigzag_forest(alpha, n)
        assert is_zigzag(Z, n)
        assert zigzag_composition(Z) == alpha


def test_text_formats():
    F = from_word([2, 3, 2])
    assert format_forest(F) == "2,2,4"
    assert parse_forest("2, 2, 4") == F
    assert parse_forest(json.dumps({"word": [2, 2, 4]})) == F
    assert parse_forest("e") == EMPTY
    assert parse_composition("(2,3,1)") == (2, 3, 1)
    for bad in ("a", "0,1", "1,,2"):
        with pytest.raises(ValueError):
            parse_forest(bad)
