"""Morphisms of free monoids, substitutions, and lazy fixed-point prefixes."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

import numpy as np

from .errors import AlphabetMismatch
from .words import Alphabet, Word, WordLike, _text


@dataclass(frozen=True, eq=False)
class Morphism:
    """A letter-to-word map from ``domain`` to ``codomain``.

    ``images[i]`` is the image of ``domain.letters[i]``.  Equality is
    image-wise, so two morphisms built from different recipes compare equal
    when they act identically.
    """

    domain: Alphabet
    codomain: Alphabet
    images: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.domain):
            raise ValueError("every domain letter needs exactly one image")
        for img in self.images:
            Word(img, self.codomain)

    @classmethod
    def from_dict(cls, rules: Mapping[str, str], codomain: Alphabet | str | None = None) -> Morphism:
        domain = Alphabet("".join(rules))
        if codomain is None:
            used = set("".join(rules.values()))
            codomain = domain if used <= set(domain.letters) else Alphabet("".join(used | set(domain.letters)))
        elif isinstance(codomain, str):
            codomain = Alphabet(codomain)
        return cls(domain, codomain, tuple(rules[c] for c in domain.letters))

    @classmethod
    def parse(cls, literal: str, codomain: Alphabet | str | None = None) -> Morphism:
        """Read ``a->ab;b->aa`` style rules; ``b->`` is an erasing rule."""
        rules: dict[str, str] = {}
        for chunk in literal.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            letter, arrow, image = chunk.partition("->")
            letter, image = letter.strip(), image.strip()
            if not arrow or len(letter) != 1:
                raise ValueError(f"malformed rule {chunk!r}; expected 'x->word'")
            if letter in rules:
                raise ValueError(f"letter {letter!r} has two rules")
            rules[letter] = image
        if not rules:
            raise ValueError("empty morphism literal")
        return cls.from_dict(rules, codomain)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> Morphism:
        return cls(alphabet, alphabet, tuple(alphabet.letters))

    @cached_property
    def _table(self) -> dict[int, str]:
        return {ord(c): img for c, img in zip(self.domain.letters, self.images)}

    def as_dict(self) -> dict[str, str]:
        return dict(zip(self.domain.letters, self.images))

    def rules(self) -> str:
        return ";".join(f"{c}->{img}" for c, img in zip(self.domain.letters, self.images))

    def image(self, letter: str) -> str:
        return self.images[self.domain.index(letter)]

    def __call__(self, w: WordLike) -> Word:
        return Word(self.apply_text(_text(w, self.domain)), self.codomain)

    def apply_text(self, text: str) -> str:
        """Unchecked application to a plain string over the domain."""
        return text.translate(self._table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.domain, self.codomain, self.images) == (other.domain, other.codomain, other.images)

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, self.images))

    def __repr__(self) -> str:
        return f"Morphism({self.rules()!r})"

    @property
    def is_endomorphism(self) -> bool:
        return self.domain == self.codomain

    @property
    def is_erasing(self) -> bool:
        return any(not img for img in self.images)

    @property
    def max_image_length(self) -> int:
        return max(len(img) for img in self.images)

    def incidence_matrix(self) -> np.ndarray:
        """Entry ``(a, b)`` counts the letter ``a`` in the image of ``b``."""
        m = np.zeros((len(self.codomain), len(self.domain)), dtype=np.int64)
        for j, img in enumerate(self.images):
            for c in img:
                m[self.codomain.index(c), j] += 1
        return m

    def power(self, k: int) -> Morphism:
        if not self.is_endomorphism:
            raise AlphabetMismatch("only endomorphisms have powers")
        if k < 0:
            raise ValueError("negative power")
        result = Morphism.identity(self.domain)
        for _ in range(k):
            result = compose(self, result)
        return result

    def renamed(self, mapping: Mapping[str, str]) -> Morphism:
        """Conjugate ``pi . self . pi^-1`` of an endomorphism by a letter bijection."""
        if not self.is_endomorphism:
            raise AlphabetMismatch("renaming is defined for endomorphisms only")
        table = {ord(k): v for k, v in mapping.items()}
        return Morphism.from_dict(
            {mapping[c]: img.translate(table) for c, img in zip(self.domain.letters, self.images)}
        )


def apply(phi: Morphism, w: WordLike) -> Word:
    return phi(w)


def compose(phi: Morphism, sigma: Morphism) -> Morphism:
    """``phi . sigma``, i.e. apply ``sigma`` first."""
    if sigma.codomain != phi.domain:
        raise AlphabetMismatch(
            f"cannot compose: codomain {sigma.codomain} of the inner map is not the domain {phi.domain}"
        )
    return Morphism(sigma.domain, phi.codomain, tuple(phi.apply_text(img) for img in sigma.images))


def primitivity_exponent(phi: Morphism) -> int | None:
    """Smallest ``k`` with a strictly positive ``k``-th incidence power, else ``None``.

    Only exponents up to Wielandt's bound ``(n-1)^2 + 1`` are tried; a
    primitive matrix always reaches positivity by then.
    """
    if not phi.is_endomorphism:
        raise AlphabetMismatch("primitivity needs a morphism from an alphabet to itself")
    n = len(phi.domain)
    base = (phi.incidence_matrix() > 0).astype(np.int64)
    power = base.copy()
    for k in range(1, (n - 1) ** 2 + 2):
        if power.all():
            return k
        power = ((base @ power) > 0).astype(np.int64)
    return None


def is_primitive(phi: Morphism) -> bool:
    return primitivity_exponent(phi) is not None


def is_injective(phi: Morphism) -> bool:
    """Decide injectivity on the free monoid.

    Images must be non-empty and pairwise distinct, and the image set must be
    uniquely decodable (Sardinas-Patterson dangling suffixes never produce a
    codeword).
    """
    return injectivity_witness(phi) is None


def injectivity_witness(phi: Morphism) -> tuple[str, str] | None:
    """Two distinct domain words with equal images, or ``None`` if injective."""
    letters, images = phi.domain.letters, phi.images
    for c, img in zip(letters, images):
        if not img:
            return (c, "")
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if images[i] == images[j]:
                return (letters[i], letters[j])
    return _sardinas_patterson(dict(zip(letters, images)))


def _sardinas_patterson(code: dict[str, str]) -> tuple[str, str] | None:
    # Each dangling suffix carries the two partial parses (domain words) that
    # produced it: top parse image = bottom parse image + suffix.
    frontier: dict[str, tuple[str, str]] = {}
    for a, x in code.items():
        for b, y in code.items():
            if a != b and y.startswith(x):
                frontier.setdefault(y[len(x):], (b, a))
    seen: set[str] = set()
    while frontier:
        nxt: dict[str, tuple[str, str]] = {}
        for suffix, (top, bottom) in frontier.items():
            if suffix in seen:
                continue
            seen.add(suffix)
            for c, img in code.items():
                if img == suffix:
                    return top, bottom + c
                if img.startswith(suffix):
                    # bottom parse overtakes top
                    nxt.setdefault(img[len(suffix):], (bottom + c, top))
                elif suffix.startswith(img):
                    nxt.setdefault(suffix[len(img):], (top, bottom + c))
        frontier = nxt
    return None


@dataclass(frozen=True, eq=False)
class Substitution(Morphism):
    """A non-erasing endomorphism with a prolongable letter.

    ``letter`` defaults to the first letter ``a`` (in alphabet order) whose
    image is ``a`` followed by a non-empty word.
    """

    letter: str = ""
    name: str = ""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_endomorphism:
            raise AlphabetMismatch("a substitution maps an alphabet to itself")
        if self.is_erasing:
            erased = [c for c, img in zip(self.domain.letters, self.images) if not img]
            raise ValueError(f"erasing morphism (letters {''.join(erased)!r} map to the empty word)")
        if not self.letter:
            candidates = self.prolongable_letters()
            if not candidates:
                raise ValueError(f"no prolongable letter in {self.rules()}")
            object.__setattr__(self, "letter", candidates[0])
        img = self.image(self.letter)
        if len(img) < 2 or img[0] != self.letter:
            raise ValueError(f"{self.letter!r} is not prolongable: its image is {img!r}")

    @classmethod
    def of(cls, phi: Morphism, letter: str = "", name: str = "") -> Substitution:
        return cls(phi.domain, phi.codomain, phi.images, letter, name)

    @classmethod
    def parse(cls, literal: str, letter: str = "", name: str = "") -> Substitution:  # type: ignore[override]
        return cls.of(Morphism.parse(literal), letter, name)

    def prolongable_letters(self) -> list[str]:
        return [c for c, img in zip(self.domain.letters, self.images) if len(img) >= 2 and img[0] == c]

    def at(self, letter: str) -> Substitution:
        """Same morphism, prolonged from another letter."""
        return Substitution.of(self, letter, self.name)

    def as_morphism(self) -> Morphism:
        return Morphism(self.domain, self.codomain, self.images)

    @property
    def label(self) -> str:
        return self.name or self.rules()

    def __repr__(self) -> str:
        return f"Substitution({self.rules()!r}, letter={self.letter!r})"


@dataclass(eq=False)
class PrefixOracle:
    """A growing prefix of the fixed point of ``substitution``.

    Growth applies the substitution to the current prefix; since the prefix
    starts with the prolongable letter, its image is a strictly longer prefix
    of the same fixed point.  Single writer: extension mutates in place.
    """

    substitution: Substitution
    text: str = field(default="")
    generation: int = 0

    def __post_init__(self) -> None:
        if not self.text:
            self.text = self.substitution.letter

    @property
    def alphabet(self) -> Alphabet:
        return self.substitution.domain

    def ensure(self, n: int) -> str:
        """Grow until at least ``n`` letters are known; return the raw prefix."""
        sub = self.substitution
        while len(self.text) < n:
            # Apply only as much of the prefix as the target needs.
            parts, total = [], 0
            for c in self.text:
                img = sub._table[ord(c)]
                parts.append(img)
                total += len(img)
                if total >= n:
                    break
            grown = "".join(parts)
            assert grown.startswith(self.text) and len(grown) > len(self.text)
            self.text = grown
            self.generation += 1
        return self.text

    def raw(self, n: int) -> str:
        return self.ensure(n)[:n]

    def prefix(self, n: int) -> Word:
        return Word(self.raw(n), self.alphabet)

    def word(self, text: str) -> Word:
        """A word over this fixed point's alphabet."""
        return Word(text, self.alphabet)


def oracle_for(source: Substitution | PrefixOracle) -> PrefixOracle:
    return source if isinstance(source, PrefixOracle) else PrefixOracle(source)


def fixed_point_prefix(source: Substitution | PrefixOracle, n: int) -> Word:
    """Length-``n`` prefix of the fixed point prolonging the distinguished letter."""
    if n < 1:
        raise ValueError("prefix length must be at least 1")
    return oracle_for(source).prefix(n)


_ORACLES: dict[tuple[Alphabet, tuple[str, ...], str], PrefixOracle] = {}


def cached_oracle(sigma: Substitution) -> PrefixOracle:
    """One shared oracle per (morphism, prolongable letter)."""
    key = (sigma.domain, sigma.images, sigma.letter)
    if key not in _ORACLES:
        _ORACLES[key] = PrefixOracle(sigma)
    return _ORACLES[key]
