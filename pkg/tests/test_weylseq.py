import pytest
from hypothesis import given
from hypothesis import strategies as st

from krkit import cartan as C
from krkit import weylseq as W


@pytest.mark.parametrize("tag", C.TYPES)
def test_sequences_exist_and_pass_structural_checks(tag):
    cd = C.build(tag)
    assert W.find_sequences(cd, "I") and W.find_sequences(cd, "J")
    rep = W.verify_lemma31(cd)
    assert rep.passed, rep.checks


def test_twisted_E6_has_unique_sequence():
    cd = C.build("E6a2")
    assert [str(w) for w in W.find_sequences(cd, "I")] == ["(4,3,2)"]


@pytest.mark.parametrize("tag", C.TYPES)
def test_every_found_sequence_passes(tag):
    cd = C.build(tag)
    for iw in W.find_sequences(cd, "I"):
        for jw in W.find_sequences(cd, "J")[:2]:
            assert W.verify_lemma31(cd, iw, jw).passed


def test_sequence_counts():
    counts = {t: len(W.find_sequences(C.build(t), "I")) for t in C.TYPES}
    assert counts == {"E6a1": 6, "E7a1": 14, "E8a1": 78, "F4a1": 1, "E6a2": 1}


def test_reducedness_examples():
    cd = C.build("E6a1")
    assert W.is_reduced(cd, (2, 3, 4))
    assert not W.is_reduced(cd, (3, 3))
    assert not W.is_reduced(cd, (2, 3, 2, 3, 2, 3))


def test_swaps_relate_sequences():
    cd = C.build("E6a1")
    a = (2, 3, 4, 5, 6)
    b = (2, 3, 4, 6, 5)
    swaps = W.normalize_by_commuting_swaps(cd, a, b)
    assert swaps is not None
    # a non-commuting swap is not allowed
    assert W.normalize_by_commuting_swaps(cd, (2, 3), (3, 2)) is None


@given(st.sampled_from(C.TYPES), st.lists(st.integers(1, 8), max_size=7))
def test_length_by_inversions_bounds(tag, word):
    cd = C.build(tag)
    word = tuple(i for i in word if i in cd.finite_nodes)
    n = W.length_by_inversions(cd, word)
    assert n <= len(word) and n % 2 == len(word) % 2
    assert W.is_reduced(cd, word) == (n == len(word))


def test_twisted_word_reaches_theta():
    cd = C.build("E6a2")
    assert W.apply(cd, (3, 4), C.simple_root(cd, 2)) == C.theta(cd, "I")
    assert W.apply(cd, (), C.simple_root(cd, 2)) == C.simple_root(cd, 2)


def test_F4_sequence_shape():
    [w] = W.find_sequences(C.build("F4a1"), "I")
    assert w.letters[0] == 2 and set(w.tail) <= {3, 4} and len(w) == 3


def test_mutated_sequence_fails():
    cd = C.build("E6a1")
    good = W.canonical(cd, "I")
    letters = list(good.letters)
    # swap two adjacent non-commuting letters
    k = next(k for k in range(len(letters) - 1) if cd.c(letters[k], letters[k + 1]) != 0)
    letters[k], letters[k + 1] = letters[k + 1], letters[k]
    assert not W.verify_lemma31(cd, W.WeylWord(tuple(letters))).passed


def test_trivial_swap_list():
    cd = C.build("E6a1")
    assert W.normalize_by_commuting_swaps(cd, (2, 3, 4), (2, 3, 4)) == []
