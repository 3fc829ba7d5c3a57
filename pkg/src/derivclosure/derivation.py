"""Derived substitutions for prefixes, linking morphisms for other factors,
semiconjugacy checks and fixedness up to a renaming of letters."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Any, Mapping

from .errors import DecompositionError, NotAFactor, NotPrimitive
from .morphism import (
    Morphism,
    PrefixOracle,
    Substitution,
    cached_oracle,
    compose,
    fixed_point_prefix,
    is_primitive,
    oracle_for,
)
from .returns import DEFAULT_POLICY, ScanPolicy, return_words
from .words import Alphabet, Word, WordLike, _text, occurrences


def decompose(text: str, w: str, index: Mapping[str, int]) -> list[int]:
    """Cut ``text`` into return words to ``w`` using the occurrences of ``w`` in ``text . w``.

    ``text . w`` must start with ``w``; consecutive occurrences delimit the
    pieces, so the cut is unique.  Every piece has to be a known return word.
    """
    occ = occurrences(w, text + w)
    if not occ or occ[0] != 0 or occ[-1] != len(text):
        raise DecompositionError(f"{w!r} does not frame {text!r}")
    out = []
    for i, j in zip(occ, occ[1:]):
        piece = text[i:j]
        if piece not in index:
            raise DecompositionError(f"{piece!r} is not a known return word to {w!r}")
        out.append(index[piece])
    return out


@dataclass(frozen=True)
class DerivationCertificate:
    """A derived substitution together with the cuts that justify it.

    ``decompositions[i]`` is the digit word ``s_1 ... s_l`` with
    ``source(returns[i]) = returns[s_1] ... returns[s_l]``.
    """

    source: Substitution
    prefix: Word
    returns: tuple[Word, ...]
    decompositions: tuple[str, ...]
    derived: Substitution
    scanned: Word

    def verify(self) -> bool:
        digits = self.derived.domain
        for r, dec in zip(self.returns, self.decompositions):
            glued = "".join(self.returns[digits.index(d)].text for d in dec)
            if glued != self.source.apply_text(r.text):
                return False
        if tuple(self.derived.images) != self.decompositions:
            return False
        if not is_primitive(self.derived):
            return False
        n = len(self.scanned)
        return fixed_point_prefix(self.derived, n).text == self.scanned.text

    def to_dict(self) -> dict[str, Any]:
        return {
            "source": self.source.rules(),
            "prefix": self.prefix.text,
            "returns": [r.text for r in self.returns],
            "decompositions": list(self.decompositions),
            "derived": self.derived.rules(),
        }


def durand_substitution(
    source: Substitution | PrefixOracle,
    w: WordLike,
    policy: ScanPolicy = DEFAULT_POLICY,
    horizon: int = 200,
) -> DerivationCertificate:
    """The substitution fixing the derived word to a prefix ``w``.

    Each image of a return word is cut into return words; the digit words of
    those cuts are the images of the derived substitution.
    """
    oracle = oracle_for(source)
    phi = oracle.substitution
    if not is_primitive(phi):
        raise NotPrimitive(f"{phi.rules()} is not primitive")
    w = _text(w, oracle.alphabet)
    if oracle.raw(len(w)) != w:
        raise NotAFactor(f"{w!r} is not a prefix of the fixed point")
    rs = return_words(w, oracle, policy, min_derived=horizon)
    index = {r.text: i for i, r in enumerate(rs.returns)}
    digits = rs.derived.alphabet
    decs = []
    for r in rs.returns:
        cut = decompose(phi.apply_text(r.text), w, index)
        decs.append("".join(digits.letters[k] for k in cut))
    delta = Substitution(digits, digits, tuple(decs), letter=digits.letters[0])
    return DerivationCertificate(
        source=phi,
        prefix=Word(w, oracle.alphabet),
        returns=rs.returns,
        decompositions=tuple(decs),
        derived=delta,
        scanned=rs.derived[: min(horizon, len(rs.derived))],
    )


@dataclass(frozen=True)
class LinkMorphism:
    """``morphism`` maps the derived word to ``skip . factor`` onto the one to ``factor``.

    ``decompositions[i]`` cuts ``skip^-1 r_i skip`` (``r_i`` a return word to
    ``skip . factor``) into return words to ``factor``.
    """

    morphism: Morphism
    skip: Word
    factor: Word
    long_returns: tuple[Word, ...]
    short_returns: tuple[Word, ...]
    decompositions: tuple[str, ...]

    def verify(self) -> bool:
        p = self.skip.text
        for r, dec in zip(self.long_returns, self.decompositions):
            glued = "".join(self.short_returns[self.morphism.codomain.index(d)].text for d in dec)
            if p + glued != r.text + p:
                return False
        return tuple(self.morphism.images) == self.decompositions

    def to_dict(self) -> dict[str, Any]:
        return {
            "factor": self.factor.text,
            "skip": self.skip.text,
            "long_returns": [r.text for r in self.long_returns],
            "short_returns": [r.text for r in self.short_returns],
            "morphism": self.morphism.rules(),
        }


def link_morphism(
    source: Substitution | PrefixOracle,
    w: WordLike,
    policy: ScanPolicy = DEFAULT_POLICY,
) -> LinkMorphism:
    """Morphism ``alpha`` with ``d(w) = alpha(d(pw))``, ``pw`` the shortest prefix containing ``w``."""
    oracle = oracle_for(source)
    short = return_words(w, oracle, policy)
    p = short.skip_prefix.text
    w = short.factor.text
    long = return_words(p + w, oracle, policy)
    index = {r.text: i for i, r in enumerate(short.returns)}
    target = short.derived.alphabet
    decs = []
    for r in long.returns:
        shifted = (r.text + p)[len(p):]
        cut = decompose(shifted, w, index)
        decs.append("".join(target.letters[k] for k in cut))
    alpha = Morphism(long.derived.alphabet, target, tuple(decs))
    return LinkMorphism(alpha, short.skip_prefix, short.factor, long.returns, short.returns, tuple(decs))


def check_semiconjugacy(alpha: Morphism, gamma: Morphism, beta: Morphism) -> bool:
    """Whether ``alpha . gamma == beta . alpha`` letter by letter."""
    return compose(alpha, gamma) == compose(beta, alpha)


@dataclass(frozen=True)
class Renaming:
    """A bijection between two alphabets of equal size."""

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        src = [a for a, _ in self.pairs]
        dst = [b for _, b in self.pairs]
        if len(set(src)) != len(src) or len(set(dst)) != len(dst):
            raise ValueError(f"not a bijection: {self.pairs}")

    @classmethod
    def from_dict(cls, mapping: Mapping[str, str]) -> Renaming:
        return cls(tuple(sorted(mapping.items())))

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self.pairs)

    @property
    def is_identity(self) -> bool:
        return all(a == b for a, b in self.pairs)

    def apply(self, w: WordLike, target: Alphabet) -> Word:
        table = {ord(a): b for a, b in self.pairs}
        return Word(_text(w).translate(table), target)

    def __str__(self) -> str:
        return ",".join(f"{a}->{b}" for a, b in self.pairs)


def _infer_renaming(src: str, dst: str, src_letters: str, dst_letters: str) -> dict[str, str] | None:
    fwd: dict[str, str] = {}
    back: dict[str, str] = {}
    for a, b in zip(src, dst):
        if fwd.setdefault(a, b) != b or back.setdefault(b, a) != a:
            return None
    free_src = [a for a in src_letters if a not in fwd]
    free_dst = [b for b in dst_letters if b not in back]
    fwd.update(zip(free_src, free_dst))
    return fwd


def fixed_up_to_renaming(d: WordLike, sigma: Substitution, n: int) -> Renaming | None:
    """A bijection ``pi`` with ``pi(d[:n])`` equal to a fixed-point prefix of ``sigma``.

    Each prolongable letter of ``sigma`` is tried, the distinguished one
    first.  Since the first ``n`` letters pin the map down, inferring it
    position by position is the same as trying every bijection.  This is a
    length-``n`` check, not a proof.
    """
    d_alphabet = d.alphabet if isinstance(d, Word) else Alphabet.of(d)
    d = _text(d)
    if len(d) < n:
        raise ValueError(f"need {n} letters, got {len(d)}")
    if len(d_alphabet) != len(sigma.domain):
        return None
    letters = [sigma.letter] + [c for c in sigma.prolongable_letters() if c != sigma.letter]
    for c in letters:
        target = fixed_point_prefix(cached_oracle(sigma.at(c)), n).text
        pi = _infer_renaming(d[:n], target, d_alphabet.letters, sigma.domain.letters)
        if pi is not None:
            return Renaming.from_dict(pi)
    return None


def conjugacy_renaming(delta: Morphism, sigma: Morphism) -> Renaming | None:
    """A bijection ``pi`` with ``pi . delta . pi^-1 == sigma``, searched exhaustively."""
    if not (delta.is_endomorphism and sigma.is_endomorphism) or len(delta.domain) != len(sigma.domain):
        return None
    src = delta.domain.letters
    for perm in permutations(sigma.domain.letters):
        mapping = dict(zip(src, perm))
        if delta.renamed(mapping) == sigma:
            return Renaming.from_dict(mapping)
    return None
