"""Named built-in substitutions and morphism literals."""

from __future__ import annotations

from .episturmian import epi_morphism, epi_substitution
from .morphism import Morphism, Substitution

LITERALS = {
    "pd": "a->ab;b->aa",
    "xi": "0->011;1->0",
    "nu": "0->01;1->02020101;2->0202",
    "eta": "0->;1->010202;2->01",
    "trib": "a->ab;b->ac;c->a",
    "alpha": "0->01;1->02",
}


def _epi_parts(spec: str) -> tuple[str, str | None]:
    # epi:<word> or epi:<word>/<alphabet>
    body = spec[len("epi:"):]
    word, _, letters = body.partition("/")
    return word, letters or None


def morphism(spec: str) -> Morphism:
    """Resolve a registry name, ``epi:<word>[/<alphabet>]`` or a rule literal."""
    spec = spec.strip()
    if spec.startswith("epi:"):
        word, letters = _epi_parts(spec)
        return epi_morphism(word, letters)
    if spec in LITERALS:
        codomain = "012" if spec == "alpha" else None
        return Morphism.parse(LITERALS[spec], codomain)
    return Morphism.parse(spec)


def substitution(spec: str, letter: str = "") -> Substitution:
    """Like :func:`morphism` but insists on a substitution (non-erasing, prolongable)."""
    spec = spec.strip()
    if spec.startswith("epi:"):
        word, letters = _epi_parts(spec)
        sub = epi_substitution(word, letters)
        return sub.at(letter) if letter else sub
    name = spec if spec in LITERALS else ""
    return Substitution.of(morphism(spec), letter, name)


def psi() -> Substitution:
    return substitution("pd")


def xi() -> Substitution:
    return substitution("xi")


def nu() -> Substitution:
    return substitution("nu")


def tribonacci() -> Substitution:
    return substitution("trib")
