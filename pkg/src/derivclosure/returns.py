"""Return words, complete return words and derived words.

Everything is computed from a finite prefix of a fixed point.  Since no
computable recurrence bound is available, the scan doubles the prefix until
the set of return words survives a doubling unchanged; the result carries a
``stable`` flag and the scan length instead of claiming more than was seen.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import InsufficientData, NotAFactor
from .morphism import PrefixOracle, Substitution, oracle_for
from .words import Alphabet, Word, WordLike, _text, occurrences


@dataclass(frozen=True)
class ScanPolicy:
    """How far a scan may grow the oracle prefix.

    ``initial`` is the first prefix length tried; it doubles up to ``budget``.
    """

    initial: int = 512
    budget: int = 1 << 22

    def start(self, factor_length: int) -> int:
        return min(self.budget, max(self.initial, 8 * (factor_length + 1)))


DEFAULT_POLICY = ScanPolicy()


@dataclass(frozen=True)
class ReturnStructure:
    """Return words to ``factor`` numbered by first appearance.

    ``derived`` codes the factorisation ``skip_prefix . r_{d0} r_{d1} ...`` of
    the scanned prefix up to the last seen occurrence, which sits at
    position ``covered``.
    """

    factor: Word
    returns: tuple[Word, ...]
    skip_prefix: Word
    derived: Word
    stable: bool
    scan_length: int
    covered: int
    counts: tuple[int, ...]

    def reconstruct(self) -> str:
        return self.skip_prefix.text + "".join(self.returns[self.derived.alphabet.index(d)].text for d in self.derived.text)

    def to_dict(self) -> dict[str, Any]:
        return {
            "factor": self.factor.text,
            "returns": [r.text for r in self.returns],
            "skip_prefix": self.skip_prefix.text,
            "derived": self.derived.text,
            "stable": self.stable,
            "scan_length": self.scan_length,
        }


def _structure(w: str, x: str, occ: list[int], alphabet: Alphabet, stable: bool) -> ReturnStructure:
    index: dict[str, int] = {}
    counts: list[int] = []
    coded: list[int] = []
    for i, j in zip(occ, occ[1:]):
        gap = x[i:j]
        k = index.setdefault(gap, len(index))
        if k == len(counts):
            counts.append(0)
        counts[k] += 1
        coded.append(k)
    digits = Alphabet.digits(len(index))
    return ReturnStructure(
        factor=Word(w, alphabet),
        returns=tuple(Word(r, alphabet) for r in index),
        skip_prefix=Word(x[: occ[0]], alphabet),
        derived=Word("".join(digits.letters[k] for k in coded), digits),
        stable=stable,
        scan_length=len(x),
        covered=occ[-1],
        counts=tuple(counts),
    )


def return_words(
    w: WordLike,
    source: Substitution | PrefixOracle,
    policy: ScanPolicy = DEFAULT_POLICY,
    min_derived: int = 0,
) -> ReturnStructure:
    """Return words to ``w`` in the fixed point behind ``source``.

    Scanning stops once the return set is unchanged across a doubling, every
    return word has been seen twice and ``min_derived`` derived letters are
    known.  If the budget runs out first, the last structure is returned with
    ``stable=False``.
    """
    oracle = oracle_for(source)
    w = _text(w, oracle.alphabet)
    length = policy.start(len(w))
    previous: set[str] | None = None
    while True:
        x = oracle.raw(length)
        occ = occurrences(w, x)
        last = length >= policy.budget
        if not occ:
            if last:
                raise NotAFactor(f"{w!r} not found in the first {length} letters of the fixed point")
        elif len(occ) < 2:
            if last:
                raise InsufficientData(f"{w!r} occurs only once in the first {length} letters")
        else:
            rs = _structure(w, x, occ, oracle.alphabet, stable=False)
            found = {r.text for r in rs.returns}
            if found == previous and min(rs.counts) >= 2 and len(rs.derived) >= min_derived:
                return _structure(w, x, occ, oracle.alphabet, stable=True)
            if last:
                return rs
            previous = found
        length = min(2 * length, policy.budget)


def derived_word(
    w: WordLike,
    source: Substitution | PrefixOracle,
    n: int,
    policy: ScanPolicy = DEFAULT_POLICY,
) -> Word:
    """The first ``n`` letters of the derived word to ``w``."""
    rs = return_words(w, source, policy, min_derived=n)
    if len(rs.derived) < n:
        raise InsufficientData(
            f"only {len(rs.derived)} derived letters for {rs.factor.text!r} within the scan budget"
        )
    return rs.derived[:n]


def complete_return_words(rs: ReturnStructure) -> frozenset[Word]:
    """``r . w`` for every return word ``r``."""
    return frozenset(r + rs.factor for r in rs.returns)
