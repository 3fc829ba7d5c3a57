from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from derivclosure import registry
from derivclosure.derivation import (
    Renaming,
    check_semiconjugacy,
    conjugacy_renaming,
    decompose,
    durand_substitution,
    fixed_up_to_renaming,
    link_morphism,
)
from derivclosure.errors import DecompositionError, NotAFactor, NotPrimitive
from derivclosure.morphism import Substitution, cached_oracle, compose, fixed_point_prefix
from derivclosure.returns import derived_word

from conftest import naive_fixed_point

PSI, XI, NU = registry.psi(), registry.xi(), registry.nu()
ALPHA, ETA = registry.morphism("alpha"), registry.morphism("eta")
Z = naive_fixed_point({"a": "ab", "b": "aa"}, "a", 1 << 14)


def brute_renaming(d: str, target: str, src: str, dst: str):
    """Try every bijection; the first that maps ``d`` onto ``target``."""
    for perm in permutations(dst):
        pi = dict(zip(src, perm))
        if "".join(pi[c] for c in d) == target:
            return pi
    return None


def test_decompose():
    assert decompose("abaa", "a", {"ab": 0, "a": 1}) == [0, 1, 1]
    with pytest.raises(DecompositionError):
        decompose("abb", "a", {"ab": 0})
    with pytest.raises(DecompositionError):
        decompose("ba", "a", {"ab": 0})


@pytest.mark.parametrize("source, w", [(PSI, "a"), (PSI, "ab"), (PSI, "aba"), (PSI, "abaa"), (XI, "0")])
def test_durand_gives_xi(source, w):
    cert = durand_substitution(source, w)
    assert cert.derived == XI
    assert cert.verify()


def test_durand_certificate_contents():
    cert = durand_substitution(PSI, "a")
    assert [r.text for r in cert.returns] == ["ab", "a"]
    assert cert.decompositions == ("011", "0")
    # psi(ab) = abaa = ab.a.a and psi(a) = ab
    for r, dec in zip(cert.returns, cert.decompositions):
        assert "".join(cert.returns[int(k)].text for k in dec) == PSI.apply_text(r.text)


def test_durand_rejects_non_prefix_and_non_primitive():
    with pytest.raises(NotAFactor):
        durand_substitution(PSI, "b")
    with pytest.raises(NotPrimitive):
        durand_substitution(Substitution.parse("a->ab;b->b"), "a")


def test_tampered_certificate_fails():
    cert = durand_substitution(PSI, "a")
    bad = type(cert)(cert.source, cert.prefix, cert.returns, ("01", "0"), cert.derived, cert.scanned)
    assert not bad.verify()


def test_link_for_aa():
    link = link_morphism(PSI, "aa")
    assert link.skip.text == "ab"
    assert link.morphism == ALPHA
    assert link.verify()
    long = derived_word("abaa", PSI, 1000).text
    short = derived_word("aa", PSI, 2000).text
    image = link.morphism.apply_text(long)
    n = min(len(image), len(short))
    assert image[:n] == short[:n] and n >= 1000


def test_link_of_prefix_is_identity():
    link = link_morphism(PSI, "a")
    assert link.skip.text == ""
    assert link.morphism.images == ("0", "1")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 3000), st.integers(1, 10))
def test_link_transports_derived_words(i, n):
    w = Z[i:i + n]
    link = link_morphism(cached_oracle(PSI), w)
    assert link.verify()
    long = derived_word(link.skip.text + w, cached_oracle(PSI), 200).text
    short = derived_word(w, cached_oracle(PSI), 400).text
    image = link.morphism.apply_text(long)
    assert short.startswith(image[:400]) or image.startswith(short)


def test_semiconjugacies():
    assert check_semiconjugacy(ALPHA, XI.power(2), NU)
    assert check_semiconjugacy(ALPHA, XI, ETA)
    assert not check_semiconjugacy(ALPHA, XI, NU)
    assert compose(ALPHA, XI.power(2)).image("1") == "010202"


def test_semiconjugacy_transports_fixed_points():
    # alpha xi^2 = nu alpha, so alpha maps the xi fixed point onto the nu fixed point.
    x = fixed_point_prefix(XI, 1000).text
    y = fixed_point_prefix(NU, 2000).text
    image = ALPHA.apply_text(x)
    assert image == y[: len(image)]


def test_known_renamings():
    assert fixed_up_to_renaming(derived_word("a", PSI, 2000), XI, 2000).is_identity
    assert fixed_up_to_renaming(derived_word("aa", PSI, 2000), NU, 2000).is_identity
    assert fixed_up_to_renaming(derived_word("a", PSI, 500), PSI, 500) is None
    assert fixed_up_to_renaming(derived_word("aa", PSI, 100), XI, 100) is None


def test_renaming_found_for_swapped_letters():
    d = fixed_point_prefix(XI, 300).text.translate(str.maketrans("01", "10"))
    pi = fixed_up_to_renaming(d, XI, 300)
    assert pi is not None and pi.mapping == {"0": "1", "1": "0"}


def test_renaming_may_use_another_prolongable_letter():
    # The two fixed points of a->aab, b->bab are not renamings of each other.
    sigma = Substitution.parse("a->aab;b->bab")
    d = fixed_point_prefix(sigma.at("b"), 64)
    assert fixed_up_to_renaming(d, sigma, 64).is_identity


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2000), st.integers(1, 12), st.sampled_from([PSI, XI, NU]))
def test_renaming_inference_matches_exhaustive_search(i, n, sigma):
    d = derived_word(Z[i:i + n], cached_oracle(PSI), 300).text
    found = fixed_up_to_renaming(d, sigma, 300)
    brute = None
    if len(set(d)) == len(sigma.domain):
        for c in sigma.prolongable_letters():
            target = fixed_point_prefix(sigma.at(c), 300).text
            brute = brute_renaming(d, target, "".join(sorted(set(d))), sigma.domain.letters)
            if brute is not None:
                break
    assert (found is None) == (brute is None)
    if found is not None:
        renamed = found.apply(d, sigma.domain).text
        assert any(renamed == fixed_point_prefix(sigma.at(c), 300).text for c in sigma.prolongable_letters())


def test_conjugacy():
    assert conjugacy_renaming(XI, XI).is_identity
    swapped = XI.renamed({"0": "1", "1": "0"})
    assert conjugacy_renaming(swapped, XI).mapping == {"0": "1", "1": "0"}
    assert conjugacy_renaming(XI, Substitution.parse("x->xyy;y->x")).mapping == {"0": "x", "1": "y"}
    assert conjugacy_renaming(XI, PSI) is None
    assert conjugacy_renaming(XI, NU) is None


def test_renaming_must_be_bijective():
    with pytest.raises(ValueError):
        Renaming((("0", "a"), ("1", "a")))
    assert str(Renaming.from_dict({"1": "0", "0": "1"})) == "0->1,1->0"


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12), st.sampled_from(["pd", "trib", "xi"]))
def test_durand_fixed_point_equals_scanned_derived_word(n, name):
    sub = registry.substitution(name)
    oracle = cached_oracle(sub)
    w = oracle.raw(n)
    cert = durand_substitution(oracle, w)
    assert cert.verify()
    scanned = derived_word(w, oracle, 1000).text
    assert fixed_point_prefix(cert.derived, 1000).text == scanned


def test_durand_instance_over_xi():
    # Every prefix of the xi fixed point derives to a word fixed by xi itself.
    for n in range(1, 12):
        cert = durand_substitution(cached_oracle(XI), fixed_point_prefix(XI, n).text)
        assert conjugacy_renaming(cert.derived, XI) is not None or conjugacy_renaming(cert.derived, NU) is not None
