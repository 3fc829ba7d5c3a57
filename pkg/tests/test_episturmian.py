from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from derivclosure import registry
from derivclosure.analysis import right_special_factors
from derivclosure.derivation import fixed_up_to_renaming
from derivclosure.episturmian import cyc, epi_morphism, epi_substitution, family, family_indexed, generator
from derivclosure.errors import AlphabetMismatch, NotPrimitive
from derivclosure.morphism import cached_oracle, is_primitive
from derivclosure.returns import derived_word


def apply_generators(z: str, letters: str, w: str) -> str:
    """``L_z(w)`` by applying ``L_{z_n}`` first, then ``L_{z_{n-1}}``, and so on."""
    for a in reversed(z):
        w = "".join(c if c == a else a + c for c in w)
    return w


def test_generator():
    assert generator("a", "ab").rules() == "a->a;b->ab"
    assert generator("b", "abc").rules() == "a->ba;b->b;c->bc"
    with pytest.raises(AlphabetMismatch):
        generator("c", "ab")


def test_tribonacci_cube_is_l_abc():
    assert registry.tribonacci().power(3) == epi_morphism("abc")
    assert epi_morphism("abc").rules() == "a->abacaba;b->abacab;c->abac"


def test_empty_word_gives_identity():
    assert epi_morphism("", "ab").rules() == "a->a;b->b"
    with pytest.raises(ValueError):
        epi_substitution("", "ab")


@settings(max_examples=200)
@given(st.text("abc", max_size=6), st.text("abc", max_size=6))
def test_epi_morphism_matches_generator_chain(z, w):
    assert epi_morphism(z, "abc").apply_text(w) == apply_generators(z, "abc", w)


def test_cyc():
    assert cyc("abc") == "cab"
    assert cyc("abc", 2) == "bca"
    assert cyc("abc", 3) == "abc"
    assert cyc("aab", 1) == "baa"


def test_family_of_abc():
    members = family("abc")
    assert len(members) == 3
    assert set(members) == {epi_morphism(z) for z in ("abc", "bca", "cab")}
    assert [ks for ks, _ in family_indexed("abc")] == [[1], [2], [3]]


def test_family_merges_equal_rotations():
    assert [ks for ks, _ in family_indexed("abab")] == [[1, 3], [2, 4]]


def test_family_needs_every_letter():
    with pytest.raises(NotPrimitive, match="'b'"):
        family("a", "ab")
    with pytest.raises(NotPrimitive):
        family("aa", "abc")


@pytest.mark.parametrize("letters", ["ab", "abc"])
def test_primitive_iff_every_letter_occurs(letters):
    for n in range(1, 5):
        for z in map("".join, product(letters, repeat=n)):
            assert is_primitive(epi_morphism(z, letters)) == (set(z) == set(letters)), z


def test_l_abc_fixed_point_is_arnoux_rauzy():
    found = right_special_factors(epi_substitution("abc"), 15)
    assert sorted(len(w) for w in found) == list(range(16))


@pytest.mark.parametrize("z", ["ab", "abc"])
def test_prefix_derived_words_fixed_by_family(z):
    members = family(z)
    sub = epi_substitution(z)
    oracle = cached_oracle(sub)
    for n in range(1, 41):
        d = derived_word(oracle.raw(n), oracle, 2000)
        assert any(fixed_up_to_renaming(d, m, 2000) is not None for m in members), n
