"""Finite words over small explicit alphabets.

Words are thin wrappers around ``str``: every symbol is a single printable
character, and the symbol id is its rank in the (sorted) alphabet.  All
scanning below is naive sliding-window search; it is the reference every
other module is checked against.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import AlphabetMismatch, NotAFactor

DIGITS = string.digits + string.ascii_uppercase


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of single-character symbols.

    The letters are stored sorted, so two alphabets with the same symbols
    compare equal regardless of how they were written down.
    """

    letters: str

    def __post_init__(self) -> None:
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"repeated symbol in alphabet {self.letters!r}")
        if any(len(c) != 1 or not c.isprintable() or c.isspace() for c in self.letters):
            raise ValueError(f"symbols must be printable characters: {self.letters!r}")
        object.__setattr__(self, "letters", "".join(sorted(self.letters)))

    @classmethod
    def digits(cls, k: int) -> Alphabet:
        """The derived-word alphabet {0, 1, ..., k-1}."""
        if not 0 <= k <= len(DIGITS):
            raise ValueError(f"cannot build a digit alphabet of size {k}")
        return cls(DIGITS[:k])

    @classmethod
    def of(cls, text: str) -> Alphabet:
        """Smallest alphabet containing every symbol of ``text``."""
        return cls("".join(set(text)))

    def index(self, symbol: str) -> int:
        try:
            return self.letters.index(symbol)
        except ValueError:
            raise AlphabetMismatch(f"{symbol!r} is not in alphabet {self.letters!r}") from None

    def word(self, text: str) -> Word:
        return Word(text, self)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __contains__(self, symbol: object) -> bool:
        return isinstance(symbol, str) and len(symbol) == 1 and symbol in self.letters

    def __str__(self) -> str:
        return self.letters


@dataclass(frozen=True)
class Word:
    """A finite word together with the alphabet it lives on."""

    text: str
    alphabet: Alphabet

    def __post_init__(self) -> None:
        stray = set(self.text).difference(self.alphabet.letters)
        if stray:
            raise AlphabetMismatch(
                f"symbols {''.join(sorted(stray))!r} not in alphabet {self.alphabet.letters!r}"
            )

    @classmethod
    def over(cls, text: str, letters: str | None = None) -> Word:
        """Build a word, inferring the alphabet from ``text`` when not given."""
        return cls(text, Alphabet(letters) if letters is not None else Alphabet.of(text))

    def __len__(self) -> int:
        return len(self.text)

    def __str__(self) -> str:
        return self.text

    def __iter__(self) -> Iterator[str]:
        return iter(self.text)

    def __getitem__(self, key: Union[int, slice]) -> Word:
        return Word(self.text[key], self.alphabet)

    def __add__(self, other: Word | str) -> Word:
        return Word(self.text + _text(other, self.alphabet), self.alphabet)

    def __radd__(self, other: str) -> Word:
        return Word(_text(other, self.alphabet) + self.text, self.alphabet)

    def ids(self) -> list[int]:
        return [self.alphabet.index(c) for c in self.text]

    def is_prefix_of(self, other: Word | str) -> bool:
        return _text(other, self.alphabet).startswith(self.text)

    def is_suffix_of(self, other: Word | str) -> bool:
        return _text(other, self.alphabet).endswith(self.text)

    def strip_prefix(self, p: Word | str) -> Word:
        """``p^{-1} self``; raises if ``p`` is not a prefix."""
        p = _text(p, self.alphabet)
        if not self.text.startswith(p):
            raise ValueError(f"{p!r} is not a prefix of {self.text!r}")
        return Word(self.text[len(p):], self.alphabet)

    def strip_suffix(self, s: Word | str) -> Word:
        """``self s^{-1}``; raises if ``s`` is not a suffix."""
        s = _text(s, self.alphabet)
        if not self.text.endswith(s):
            raise ValueError(f"{s!r} is not a suffix of {self.text!r}")
        return Word(self.text[: len(self.text) - len(s)], self.alphabet)


WordLike = Union[Word, str]


def _text(w: WordLike, alphabet: Alphabet | None = None) -> str:
    if isinstance(w, Word):
        if alphabet is not None and w.alphabet != alphabet:
            raise AlphabetMismatch(
                f"word over {w.alphabet.letters!r} used with alphabet {alphabet.letters!r}"
            )
        return w.text
    if alphabet is not None:
        Word(w, alphabet)
    return w


def _pair(w: WordLike, x: WordLike) -> tuple[str, str]:
    if isinstance(w, Word) and isinstance(x, Word):
        return _text(w, x.alphabet), x.text
    if isinstance(x, Word):
        return _text(w, x.alphabet), x.text
    if isinstance(w, Word):
        return w.text, _text(x, w.alphabet)
    return w, x


def occurrences(w: WordLike, x: WordLike) -> list[int]:
    """All positions ``i`` with ``x[i:i+|w|] == w``, ascending, overlaps included.

    The empty word occurs at every position ``0..|x|``.
    """
    w, x = _pair(w, x)
    out = []
    i = x.find(w)
    while i != -1:
        out.append(i)
        if i == len(x):
            break
        i = x.find(w, i + 1)
    return out


def factors(x: WordLike, length: int) -> set[str]:
    """Distinct length-``length`` windows of ``x`` (as plain strings)."""
    x = _text(x)
    if not 0 <= length <= len(x):
        raise IndexError(f"factor length {length} out of range for a word of length {len(x)}")
    return {x[i:i + length] for i in range(len(x) - length + 1)}


def extensions(w: WordLike, x: WordLike) -> tuple[set[str], set[str]]:
    """Left and right one-letter extensions of ``w`` seen in ``x``.

    An occurrence at position 0 has no left neighbour and one ending at
    ``|x|`` has no right neighbour; both simply contribute nothing.
    """
    w, x = _pair(w, x)
    occ = occurrences(w, x)
    if not occ:
        raise NotAFactor(f"{w!r} does not occur in the scanned word")
    n = len(w)
    left = {x[i - 1] for i in occ if i > 0}
    right = {x[i + n] for i in occ if i + n < len(x)}
    return left, right


def all_words(alphabet: Iterable[str], length: int) -> Iterator[str]:
    """Every word of the given length, in lexicographic order."""
    letters = sorted(alphabet)
    if length == 0:
        yield ""
        return
    for head in letters:
        for tail in all_words(letters, length - 1):
            yield head + tail
