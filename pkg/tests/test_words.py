import pytest
from hypothesis import given, strategies as st

from derivclosure.errors import AlphabetMismatch, NotAFactor
from derivclosure.words import Alphabet, Word, all_words, extensions, factors, occurrences

from conftest import naive_factors, naive_occurrences

texts = st.text(alphabet="ab", max_size=30)


def test_alphabet_is_sorted_and_validated():
    assert Alphabet("ba") == Alphabet("ab")
    assert Alphabet("cab").letters == "abc"
    with pytest.raises(ValueError):
        Alphabet("aa")
    with pytest.raises(ValueError):
        Alphabet("a b")
    assert Alphabet.digits(3).letters == "012"
    assert Alphabet.digits(12).letters == "0123456789AB"


def test_word_rejects_foreign_symbols():
    with pytest.raises(AlphabetMismatch):
        Word("abc", Alphabet("ab"))
    assert Word.over("abba").alphabet == Alphabet("ab")


def test_word_concatenation_checks_alphabets():
    ab = Word.over("ab", "ab")
    assert (ab + "ba").text == "abba"
    assert ("b" + ab).text == "bab"
    with pytest.raises(AlphabetMismatch):
        ab + Word.over("01")


def test_slicing_and_affixes():
    w = Word.over("abaab", "ab")
    assert w[1:3].text == "ba"
    assert w[0].text == "a"
    assert w.strip_prefix("ab").text == "aab"
    assert w.strip_suffix("ab").text == "aba"
    with pytest.raises(ValueError):
        w.strip_prefix("b")
    assert Word.over("ab", "ab").is_prefix_of(w)
    assert Word.over("aab", "ab").is_suffix_of(w)
    assert w.ids() == [0, 1, 0, 0, 1]


def test_occurrences_overlap():
    assert occurrences("aa", "aaaa") == [0, 1, 2]
    assert occurrences("", "ab") == [0, 1, 2]
    assert occurrences("c", "ab") == []


def test_extensions():
    left, right = extensions("b", "abaab")
    assert left == {"a"} and right == {"a"}
    with pytest.raises(NotAFactor):
        extensions("bb", "abaab")


def test_factors_bounds():
    assert factors("abaab", 0) == {""}
    with pytest.raises(IndexError):
        factors("ab", 3)


def test_all_words_counts():
    assert len(list(all_words("ab", 4))) == 16
    assert list(all_words("ab", 0)) == [""]


@given(st.text(alphabet="ab", min_size=1, max_size=4), texts)
def test_occurrences_match_window_scan(w, x):
    assert occurrences(w, x) == naive_occurrences(w, x)


@given(texts, st.integers(0, 30))
def test_factors_match_window_scan(x, n):
    if n > len(x):
        return
    assert factors(x, n) == naive_factors(x, n)


@given(texts, texts)
def test_concatenation_lengths(u, v):
    a = Alphabet("ab")
    assert len(Word(u, a) + Word(v, a)) == len(u) + len(v)
