"""Standard episturmian morphisms ``L_a``, their products ``L_z`` and the
cyclic families ``{L_cyc^k(z) : 1 <= k <= |z|}``."""

from __future__ import annotations

from .errors import AlphabetMismatch, NotPrimitive
from .morphism import Morphism, Substitution, compose
from .words import Alphabet, Word, WordLike


def _alphabet_of(z: WordLike, alphabet: Alphabet | str | None) -> Alphabet:
    if isinstance(alphabet, str):
        alphabet = Alphabet(alphabet)
    if alphabet is None:
        alphabet = z.alphabet if isinstance(z, Word) else Alphabet.of(str(z))
    stray = set(str(z)) - set(alphabet.letters)
    if stray:
        raise AlphabetMismatch(f"letters {''.join(sorted(stray))!r} not in {alphabet.letters!r}")
    return alphabet


def generator(a: str, alphabet: Alphabet | str) -> Morphism:
    """``L_a``: ``a -> a`` and ``b -> ab`` for every other letter ``b``."""
    if isinstance(alphabet, str):
        alphabet = Alphabet(alphabet)
    if a not in alphabet:
        raise AlphabetMismatch(f"{a!r} is not in alphabet {alphabet.letters!r}")
    return Morphism(alphabet, alphabet, tuple(b if b == a else a + b for b in alphabet.letters))


def epi_morphism(z: WordLike, alphabet: Alphabet | str | None = None) -> Morphism:
    """``L_{z_1} . L_{z_2} . ... . L_{z_n}``, so ``L_{z_n}`` acts first."""
    alphabet = _alphabet_of(z, alphabet)
    result = Morphism.identity(alphabet)
    for a in str(z):
        result = compose(result, generator(a, alphabet))
    return result


def epi_substitution(z: WordLike, alphabet: Alphabet | str | None = None) -> Substitution:
    """``L_z`` as a substitution prolonged on ``z_1``."""
    z = str(z)
    if not z:
        raise ValueError("L_epsilon is the identity, which has no prolongable letter")
    return Substitution.of(epi_morphism(z, alphabet), letter=z[0], name=f"L_{z}")


def cyc(z: WordLike, k: int = 1) -> str:
    """``k`` rotations ``z_1 z_2 ... z_n -> z_n z_1 ... z_{n-1}``."""
    z = str(z)
    if not z:
        raise ValueError("cannot rotate the empty word")
    if k < 0:
        raise ValueError("rotation count must be non-negative")
    k %= len(z)
    return z[len(z) - k:] + z[: len(z) - k]


def missing_letters(z: WordLike, alphabet: Alphabet | str | None = None) -> str:
    alphabet = _alphabet_of(z, alphabet)
    return "".join(a for a in alphabet.letters if a not in str(z))


def family_indexed(z: WordLike, alphabet: Alphabet | str | None = None) -> list[tuple[list[int], Substitution]]:
    """Distinct members of ``{L_cyc^k(z)}`` with every ``k`` in ``1..|z|`` producing each."""
    alphabet = _alphabet_of(z, alphabet)
    absent = missing_letters(z, alphabet)
    if absent:
        raise NotPrimitive(f"letter(s) {absent!r} do not occur in {str(z)!r}; L_z is not primitive")
    out: list[tuple[list[int], Substitution]] = []
    for k in range(1, len(str(z)) + 1):
        member = epi_substitution(cyc(z, k), alphabet)
        for ks, seen in out:
            if seen == member:
                ks.append(k)
                break
        else:
            out.append(([k], member))
    return out


def family(z: WordLike, alphabet: Alphabet | str | None = None) -> list[Substitution]:
    """``{L_cyc^k(z) : k = 1..|z|}`` deduplicated as morphisms, ordered by first ``k``."""
    return [member for _, member in family_indexed(z, alphabet)]
