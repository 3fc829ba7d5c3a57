import pytest
from hypothesis import given, settings, strategies as st

from derivclosure import registry
from derivclosure.errors import InsufficientData, NotAFactor
from derivclosure.morphism import cached_oracle, fixed_point_prefix
from derivclosure.returns import ScanPolicy, complete_return_words, derived_word, return_words
from derivclosure.words import extensions

from conftest import naive_fixed_point, naive_occurrences, naive_returns

PSI = registry.psi()
Z = naive_fixed_point({"a": "ab", "b": "aa"}, "a", 1 << 15)
ORACLE = cached_oracle(PSI)


@st.composite
def factors_of_z(draw, max_len=12):
    n = draw(st.integers(1, max_len))
    i = draw(st.integers(0, 2000))
    return Z[i:i + n]


def texts(rs):
    return [r.text for r in rs.returns]


@pytest.mark.parametrize(
    "w, expected",
    [
        ("a", ["ab", "a"]),
        ("aa", ["a", "aababab", "aab"]),
        ("abaa", ["abaaabab", "abaa"]),
        ("b", ["baaa", "ba"]),
        ("ab", ["abaa", "ab"]),
        ("", ["a", "b"]),
    ],
)
def test_return_words_of_z(w, expected):
    rs = return_words(w, PSI)
    assert texts(rs) == expected
    assert rs.stable


def test_skip_prefix_and_derived():
    rs = return_words("aa", PSI)
    assert rs.skip_prefix.text == "ab"
    assert rs.derived.text.startswith("010202")
    assert derived_word("a", PSI, 13).text == "0110001101101"


def test_complete_return_words():
    rs = return_words("a", PSI)
    assert {w.text for w in complete_return_words(rs)} == {"aba", "aa"}


def test_not_a_factor():
    with pytest.raises(NotAFactor):
        return_words("bb", PSI, ScanPolicy(initial=64, budget=4096))


def test_single_occurrence_is_insufficient():
    # "abaaabab" occurs once in the first 16 letters.
    policy = ScanPolicy(initial=16, budget=16)
    with pytest.raises(InsufficientData):
        return_words("abaaabababaaabaa", PSI, policy)


def test_small_budget_gives_unstable_structure():
    rs = return_words("a", PSI, ScanPolicy(initial=4, budget=4))
    assert not rs.stable


def test_derived_word_needs_enough_letters():
    with pytest.raises(InsufficientData):
        derived_word("a", PSI, 10_000, ScanPolicy(budget=1024))


@settings(max_examples=200, deadline=None)
@given(factors_of_z())
def test_matches_window_scan(w):
    rs = return_words(w, ORACLE)
    x = Z[: rs.scan_length]
    order, coded = naive_returns(w, x)
    assert texts(rs) == order
    assert rs.derived.ids() == coded
    assert rs.skip_prefix.text == x[: naive_occurrences(w, x)[0]]


@settings(max_examples=200, deadline=None)
@given(factors_of_z())
def test_reconstruction(w):
    rs = return_words(w, ORACLE)
    assert rs.reconstruct() == ORACLE.raw(rs.covered)
    assert rs.reconstruct() + w == ORACLE.raw(rs.covered + len(w))


@settings(max_examples=200, deadline=None)
@given(factors_of_z())
def test_complete_return_words_hold_two_occurrences(w):
    for c in complete_return_words(return_words(w, ORACLE)):
        occ = naive_occurrences(w, c.text)
        assert len(occ) == 2 and occ[0] == 0 and occ[-1] == len(c) - len(w)


@settings(max_examples=200, deadline=None)
@given(factors_of_z())
def test_unique_extension_keeps_derived_word(w):
    left, right = extensions(w, Z)
    d = derived_word(w, ORACLE, 300).text
    if len(right) == 1:
        (a,) = right
        assert derived_word(w + a, ORACLE, 300).text == d
        assert texts(return_words(w + a, ORACLE)) == texts(return_words(w, ORACLE))
    if len(left) == 1:
        # Prefixes of z are left special, so w occurs first past position 0.
        (b,) = left
        assert derived_word(b + w, ORACLE, 300).text == d
        conj = [b + r[:-1] for r in texts(return_words(w, ORACLE))]
        assert conj == [r for r in texts(return_words(b + w, ORACLE))]


def test_tribonacci_returns_match_window_scan(trib_word):
    trib = registry.tribonacci()
    for w in ("a", "ab", "aba", "c", "bac", "abacaba"):
        rs = return_words(w, trib)
        order, coded = naive_returns(w, trib_word[: rs.scan_length])
        assert texts(rs) == order and rs.derived.ids() == coded
    assert fixed_point_prefix(trib, 1000).text == trib_word[:1000]
