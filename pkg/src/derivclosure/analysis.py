"""Special factors, bispecial enumeration, the period-doubling bispecial map
and ancestors of factors under a substitution."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from .errors import NotAFactor
from .morphism import PrefixOracle, Substitution, oracle_for
from .returns import DEFAULT_POLICY, ScanPolicy
from .words import Word, WordLike, _text, extensions, occurrences


class Kind(enum.Enum):
    NONE = "none"
    LEFT = "leftSpecial"
    RIGHT = "rightSpecial"
    BI = "bispecial"

    @classmethod
    def of(cls, left: frozenset[str], right: frozenset[str]) -> Kind:
        if len(left) >= 2 and len(right) >= 2:
            return cls.BI
        if len(left) >= 2:
            return cls.LEFT
        if len(right) >= 2:
            return cls.RIGHT
        return cls.NONE


@dataclass(frozen=True)
class SpecialClass:
    factor: str
    kind: Kind
    left: frozenset[str]
    right: frozenset[str]
    scan_length: int

    @property
    def left_special(self) -> bool:
        return len(self.left) >= 2

    @property
    def right_special(self) -> bool:
        return len(self.right) >= 2

    def to_dict(self) -> dict[str, Any]:
        return {
            "factor": self.factor,
            "class": self.kind.value,
            "left": sorted(self.left),
            "right": sorted(self.right),
            "scan_length": self.scan_length,
        }


def classify_special(
    w: WordLike,
    source: Substitution | PrefixOracle,
    policy: ScanPolicy = DEFAULT_POLICY,
) -> SpecialClass:
    """Classify ``w`` from extension sets that survive one doubling of the scan."""
    oracle = oracle_for(source)
    w = _text(w, oracle.alphabet)
    length = policy.start(len(w))
    previous = None
    while True:
        x = oracle.raw(length)
        try:
            left, right = extensions(w, x)
        except NotAFactor:
            if length >= policy.budget:
                raise
        else:
            current = (frozenset(left), frozenset(right))
            if current == previous or length >= policy.budget:
                return SpecialClass(w, Kind.of(*current), *current, scan_length=length)
            previous = current
        length = min(2 * length, policy.budget)


Table = dict[str, tuple[frozenset[str], frozenset[str]]]


def _table(x: str, max_len: int) -> Table:
    table: dict[str, tuple[set[str], set[str]]] = {}
    for n in range(max_len + 1):
        for i in range(len(x) - n + 1):
            table.setdefault(x[i:i + n], (set(), set()))
        for i in range(len(x) - n):
            v = x[i:i + n + 1]
            table[v[1:]][0].add(v[0])
            table[v[:-1]][1].add(v[-1])
    return {w: (frozenset(l), frozenset(r)) for w, (l, r) in table.items()}


def extension_table(
    source: Substitution | PrefixOracle,
    max_len: int,
    policy: ScanPolicy = DEFAULT_POLICY,
) -> tuple[Table, int]:
    """Every factor of length at most ``max_len`` with its extension sets.

    The table is recomputed on doubling prefixes until it stops changing;
    the returned integer is the prefix length of the final scan.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    oracle = oracle_for(source)
    length = policy.start(max_len + 1)
    previous = None
    while True:
        current = _table(oracle.raw(length), max_len)
        if current == previous or length >= policy.budget:
            return current, length
        previous = current
        length = min(2 * length, policy.budget)


def _order(w: str) -> tuple[int, str]:
    return len(w), w


def special_factors(
    source: Substitution | PrefixOracle,
    max_len: int,
    policy: ScanPolicy = DEFAULT_POLICY,
) -> list[SpecialClass]:
    """Classification of every factor up to ``max_len``, ordered by (length, word)."""
    table, scanned = extension_table(source, max_len, policy)
    return [
        SpecialClass(w, Kind.of(l, r), l, r, scanned)
        for w, (l, r) in sorted(table.items(), key=lambda kv: _order(kv[0]))
    ]


def bispecial_factors(
    source: Substitution | PrefixOracle,
    max_len: int,
    policy: ScanPolicy = DEFAULT_POLICY,
) -> list[Word]:
    oracle = oracle_for(source)
    return [oracle.word(s.factor) for s in special_factors(oracle, max_len, policy) if s.kind is Kind.BI]


def right_special_factors(
    source: Substitution | PrefixOracle,
    max_len: int,
    policy: ScanPolicy = DEFAULT_POLICY,
) -> list[Word]:
    oracle = oracle_for(source)
    return [oracle.word(s.factor) for s in special_factors(oracle, max_len, policy) if s.right_special]


def right_special_prefixes(
    source: Substitution | PrefixOracle,
    max_len: int,
    policy: ScanPolicy = DEFAULT_POLICY,
) -> list[Word]:
    """Right special prefixes (the empty word included) up to ``max_len``."""
    oracle = oracle_for(source)
    head = oracle.raw(max_len)
    return [w for w in right_special_factors(oracle, max_len, policy) if head.startswith(w.text)]


PERIOD_DOUBLING = Substitution.parse("a->ab;b->aa", name="pd")


def phi_map(v: WordLike) -> Word:
    """``psi(v) a`` for the period-doubling substitution ``psi``.

    Maps bispecial factors of the period-doubling word to bispecial factors.
    """
    return PERIOD_DOUBLING(v) + "a"


def phi_orbit(seed: WordLike, max_len: int) -> list[Word]:
    """``seed, Phi(seed), Phi^2(seed), ...`` while the length stays within ``max_len``."""
    out = []
    v = Word(_text(seed, PERIOD_DOUBLING.domain), PERIOD_DOUBLING.domain)
    while len(v) <= max_len:
        out.append(v)
        v = phi_map(v)
    return out


@dataclass(frozen=True)
class AncestorReport:
    """Ancestors of ``factor``: candidates ``u`` with ``y . factor . y' = phi(u)``.

    ``witnesses`` maps each ancestor to its ``(y, y')``; ``ambiguous_examples``
    lists admissible candidates whose image contains ``factor`` twice or more.
    """

    factor: str
    ancestors: tuple[str, ...]
    witnesses: dict[str, tuple[str, str]]
    ambiguous_examples: tuple[str, ...]
    bound: int
    scan_length: int

    @property
    def ambiguous(self) -> bool:
        return bool(self.ambiguous_examples)

    def to_dict(self) -> dict[str, Any]:
        return {
            "factor": self.factor,
            "ancestors": list(self.ancestors),
            "witnesses": {u: list(yy) for u, yy in self.witnesses.items()},
            "ambiguous": self.ambiguous,
            "ambiguous_examples": list(self.ambiguous_examples),
            "bound": self.bound,
            "scan_length": self.scan_length,
        }


def ancestors(
    w: WordLike,
    phi: Substitution,
    source: PrefixOracle | None = None,
    policy: ScanPolicy = DEFAULT_POLICY,
) -> AncestorReport:
    """Exhaustive ancestor search for a non-empty factor ``w``.

    Candidates are all factors ``u`` with ``|u| <= |w| + 2 max|phi(a)|``; a
    longer ``u`` would put a whole letter image outside ``y`` or ``y'``.
    """
    oracle = source if source is not None else oracle_for(phi)
    w = _text(w, oracle.alphabet)
    if not w:
        raise ValueError("ancestors are defined for non-empty factors")
    bound = len(w) + 2 * phi.max_image_length
    table, scanned = extension_table(oracle, bound, policy)
    if w not in table:
        raise NotAFactor(f"{w!r} is not a factor of the fixed point")
    found: list[str] = []
    witnesses: dict[str, tuple[str, str]] = {}
    ambiguous: list[str] = []
    for u in sorted((u for u in table if u), key=_order):
        img = phi.apply_text(u)
        first, last = len(phi.image(u[0])), len(phi.image(u[-1]))
        occ = occurrences(w, img)
        placed = [i for i in occ if i < first and len(img) - i - len(w) < last]
        if not placed:
            continue
        if len(occ) == 1:
            i = placed[0]
            found.append(u)
            witnesses[u] = (img[:i], img[i + len(w):])
        else:
            ambiguous.append(u)
    return AncestorReport(w, tuple(found), witnesses, tuple(ambiguous), bound, scanned)
