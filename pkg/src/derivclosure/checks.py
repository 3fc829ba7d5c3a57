"""Fixed battery of published values, run by ``verify-paper``.

Each check recomputes one reported fact from scratch and compares it with
the published value.  Order is fixed so output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import registry
from .analysis import Kind, ancestors, classify_special, right_special_factors
from .closure import ClosureParams, check_closed, derived_representatives, verify_family_theorem
from .derivation import check_semiconjugacy, durand_substitution, fixed_up_to_renaming, link_morphism
from .episturmian import epi_morphism, family, generator
from .errors import NotPrimitive
from .morphism import compose, fixed_point_prefix, is_primitive
from .returns import derived_word, return_words
from .words import extensions, factors


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[], bool]


def _z(n: int = 4096) -> str:
    return fixed_point_prefix(registry.psi(), n).text


def _returns(w: str) -> list[str]:
    return [r.text for r in return_words(w, registry.psi()).returns]


def _family_rejects_missing_letter() -> bool:
    try:
        family("a", "ab")
    except NotPrimitive as exc:
        return "'b'" in str(exc)
    return False


def _ancestors(w: str) -> tuple[set[str], bool]:
    rep = ancestors(w, registry.psi())
    return set(rep.ancestors), rep.ambiguous


def _one_right_special_per_length(max_len: int) -> bool:
    found = right_special_factors(registry.tribonacci(), max_len)
    lengths = sorted(len(w) for w in found)
    return lengths == list(range(max_len + 1))


def _representatives(sub, **kw) -> int:
    return len(derived_representatives(sub, ClosureParams(max_factor_len=kw.pop("L"), horizon=2000), **kw))


def _xi_reps_fixed_by_xi_or_nu() -> bool:
    reps = derived_representatives(registry.xi(), ClosureParams(max_factor_len=15, horizon=2000))
    members = [registry.xi(), registry.nu()]
    return bool(reps) and all(
        any(fixed_up_to_renaming(r.derived, m, 2000) is not None for m in members) for r in reps
    )


def _family_fixes_same_word() -> bool:
    report = verify_family_theorem("abc")
    words = set()
    for m in family("abc"):
        words.add(derived_word("", m, 2000).text)
    return report.verified and len(words) == 1


def _alpha():
    return registry.morphism("alpha")


CHECKS: list[Check] = [
    Check("pd fixed point, 20 letters", lambda: _z(20) == "abaaabababaaabaaabaa"),
    Check("trib fixed point, 21 letters", lambda: fixed_point_prefix(registry.tribonacci(), 21).text == "abacabaabacababacabaa"),
    Check("xi fixed point, 13 letters", lambda: fixed_point_prefix(registry.xi(), 13).text == "0110001101101"),
    Check("factors of z of length 2 are ab, ba, aa", lambda: factors(_z(), 2) == {"ab", "ba", "aa"}),
    Check("aaa is a factor of z, aaaa is not", lambda: "aaa" in factors(_z(), 3) and "aaaa" not in factors(_z(), 4)),
    Check("b is preceded and followed only by a", lambda: extensions("b", _z()) == ({"a"}, {"a"})),
    Check("a extends both ways by a and b", lambda: extensions("a", _z()) == ({"a", "b"}, {"a", "b"})),
    Check("psi(ab) = abaa", lambda: registry.psi()("ab").text == "abaa"),
    Check("tau^3 = L_abc", lambda: registry.tribonacci().power(3) == epi_morphism("abc")),
    Check("xi^2(0) = 01100", lambda: registry.xi().power(2).image("0") == "01100"),
    Check("eta is not primitive", lambda: not is_primitive(registry.morphism("eta"))),
    Check("L_a over {a,b} is not primitive", lambda: not is_primitive(epi_morphism("a", "ab"))),
    Check("L_a over {a,b}: a->a, b->ab", lambda: generator("a", "ab").rules() == "a->a;b->ab"),
    Check("return words to a: ab, a", lambda: _returns("a") == ["ab", "a"]),
    Check("return words to aa: a, aababab, aab", lambda: _returns("aa") == ["a", "aababab", "aab"]),
    Check("return words to abaa: abaaabab, abaa", lambda: _returns("abaa") == ["abaaabab", "abaa"]),
    Check("d_z(a) starts 0110001101101", lambda: derived_word("a", registry.psi(), 13).text == "0110001101101"),
    Check("Durand construction for prefix a gives xi", lambda: durand_substitution(registry.psi(), "a").derived == registry.xi()),
    Check(
        "link for aa: p = ab, 0->01, 1->02",
        lambda: (lambda lk: lk.skip.text == "ab" and lk.morphism == _alpha())(link_morphism(registry.psi(), "aa")),
    ),
    Check(
        "alpha xi^2 = nu alpha",
        lambda: check_semiconjugacy(_alpha(), registry.xi().power(2), registry.nu())
        and compose(_alpha(), registry.xi().power(2)).image("0") == "0102020101",
    ),
    Check("alpha xi = eta alpha", lambda: check_semiconjugacy(_alpha(), registry.xi(), registry.morphism("eta"))),
    Check(
        "d_z(a) is fixed by xi",
        lambda: (lambda pi: pi is not None and pi.is_identity)(
            fixed_up_to_renaming(derived_word("a", registry.psi(), 13), registry.xi(), 13)
        ),
    ),
    Check(
        "d_z(aa) is fixed by nu",
        lambda: (lambda pi: pi is not None and pi.is_identity)(
            fixed_up_to_renaming(derived_word("aa", registry.psi(), 500), registry.nu(), 500)
        ),
    ),
    Check(
        "a and aa are bispecial in z",
        lambda: all(classify_special(w, registry.psi()).kind is Kind.BI for w in ("a", "aa")),
    ),
    Check("b is neither left nor right special", lambda: classify_special("b", registry.psi()).kind is Kind.NONE),
    Check("Tribonacci word: one right special factor per length <= 10", lambda: _one_right_special_per_length(10)),
    Check("A(aa) = {b}, ambiguous", lambda: _ancestors("aa") == ({"b"}, True)),
    Check("A(aba) = {aa, ab}, unambiguous", lambda: _ancestors("aba") == ({"aa", "ab"}, False)),
    Check(
        "family(abc) = {L_abc, L_bca, L_cab}",
        lambda: set(family("abc")) == {epi_morphism(z) for z in ("abc", "bca", "cab")} and len(family("abc")) == 3,
    ),
    Check("family(a) over {a,b} is rejected (b missing)", _family_rejects_missing_letter),
    Check("non-empty factors of z: two derived words (L=20)", lambda: _representatives(registry.psi(), L=20) == 2),
    Check(
        "non-empty prefixes of z: one derived word (L=20)",
        lambda: _representatives(registry.psi(), L=20, prefixes_only=True) == 1,
    ),
    Check("derived words in the xi fixed point are fixed by xi or nu (L=15)", _xi_reps_fixed_by_xi_or_nu),
    Check("{psi, xi, nu} closed under derivation", lambda: check_closed([registry.psi(), registry.xi(), registry.nu()]).verified),
    Check("{xi, nu} closed under derivation", lambda: check_closed([registry.xi(), registry.nu()]).verified),
    Check("{L_abc, L_bca, L_cab} closed under derivation", lambda: check_closed(family("abc")).verified),
    Check("the three members of family(abc) fix the same word up to renaming", _family_fixes_same_word),
    Check("{tau} closed under derivation", lambda: check_closed([registry.tribonacci()]).verified),
]


def run_checks() -> list[tuple[str, bool, str]]:
    """Run every check; a raised exception counts as a failure with its message."""
    results = []
    for check in CHECKS:
        try:
            ok, note = bool(check.run()), ""
        except Exception as exc:  # a crash is reported, not propagated
            ok, note = False, f"{type(exc).__name__}: {exc}"
        results.append((check.name, ok, note))
    return results
