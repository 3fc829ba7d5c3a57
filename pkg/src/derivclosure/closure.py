"""Checking that a finite set of substitutions is closed under derivation.

A verdict is always qualified by the factor length ``L`` and the derived
horizon ``N`` it was checked at.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .analysis import extension_table, Kind
from .derivation import (
    Renaming,
    conjugacy_renaming,
    durand_substitution,
    fixed_up_to_renaming,
)
from .episturmian import family_indexed
from .errors import NotPrimitive, WordError
from .morphism import Substitution, cached_oracle, is_primitive
from .returns import DEFAULT_POLICY, ScanPolicy, derived_word
from .words import Alphabet, Word


@dataclass(frozen=True)
class ClosureParams:
    max_factor_len: int = 30
    horizon: int = 2000
    policy: ScanPolicy = DEFAULT_POLICY
    reduction: bool = True

    def __post_init__(self) -> None:
        if self.max_factor_len < 1 or self.horizon < 1:
            raise ValueError("max_factor_len and horizon must both be at least 1")


@dataclass(frozen=True)
class Representative:
    factor: Word
    derived: Word
    kind: str  # "empty", "prefix" or "factor"
    covers: tuple[str, ...] = ()  # every candidate factor with this derived prefix

    @property
    def is_prefix(self) -> bool:
        return self.kind == "prefix"


def _candidate_factors(sigma: Substitution, params: ClosureParams, prefixes_only: bool) -> list[tuple[str, str]]:
    oracle = cached_oracle(sigma)
    table, _ = extension_table(oracle, params.max_factor_len, params.policy)
    head = oracle.raw(params.max_factor_len)
    out = []
    for w in sorted(table, key=lambda w: (len(w), w)):
        if not w:
            continue
        left, right = table[w]
        is_prefix = head.startswith(w)
        if prefixes_only and not is_prefix:
            continue
        if params.reduction:
            kind = Kind.of(left, right)
            if not (kind is Kind.BI or (is_prefix and len(right) >= 2)):
                continue
        out.append((w, "prefix" if is_prefix else "factor"))
    return out


def derived_representatives(
    sigma: Substitution,
    params: ClosureParams = ClosureParams(),
    prefixes_only: bool = False,
    include_empty: bool = False,
    failures: list[tuple[str, str]] | None = None,
) -> list[Representative]:
    """Derived words of the factors that matter, one per distinct derived prefix.

    With ``params.reduction`` only right special prefixes and bispecial
    factors are derived, which is enough to see every derived word; without
    it every non-empty factor up to ``max_factor_len`` is.  Factors are taken
    by (length, word) and the first factor giving each derived prefix is kept.
    A factor whose scan runs out of budget raises, unless ``failures`` is
    given, in which case ``(factor, message)`` is appended there.
    """
    oracle = cached_oracle(sigma)
    candidates = _candidate_factors(sigma, params, prefixes_only)
    if include_empty:
        candidates.insert(0, ("", "empty"))
    first: dict[str, tuple[str, str, Word]] = {}
    covers: dict[str, list[str]] = {}
    for w, kind in candidates:
        try:
            d = derived_word(w, oracle, params.horizon, params.policy)
        except WordError as exc:
            if failures is None:
                raise
            failures.append((w, str(exc)))
            continue
        first.setdefault(d.text, (w, kind, d))
        covers.setdefault(d.text, []).append(w)
    return [Representative(oracle.word(w), d, kind, tuple(covers[key])) for key, (w, kind, d) in first.items()]


@dataclass(frozen=True)
class FactorVerdict:
    """Outcome for one representative factor of one fixed point.

    ``member`` is ``None`` for a counterexample; ``derived`` then holds the
    whole unmatched derived prefix.
    """

    source: str
    letter: str
    factor: str
    kind: str
    derived: str
    covers: tuple[str, ...]
    member: str | None
    renaming: Renaming | None
    method: str | None
    horizon: int

    @property
    def matched(self) -> bool:
        return self.member is not None

    def to_dict(self) -> dict[str, Any]:
        return {
            "source": self.source,
            "letter": self.letter,
            "factor": self.factor,
            "kind": self.kind,
            "covers": list(self.covers),
            "derived": self.derived if not self.matched else self.derived[:40],
            "member": self.member,
            "renaming": str(self.renaming) if self.renaming is not None else None,
            "method": self.method,
            "horizon": self.horizon,
        }


@dataclass
class ClosureReport:
    members: list[Substitution]
    params: ClosureParams
    verdicts: list[FactorVerdict] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.errors and all(v.matched for v in self.verdicts)

    @property
    def counterexamples(self) -> list[FactorVerdict]:
        return [v for v in self.verdicts if not v.matched]

    @property
    def verdict(self) -> str:
        if self.verified:
            return f"verified to (L={self.params.max_factor_len}, N={self.params.horizon})"
        return "not verified"

    def to_dict(self) -> dict[str, Any]:
        return {
            "members": [{"name": m.label, "rules": m.rules()} for m in self.members],
            "max_factor_len": self.params.max_factor_len,
            "horizon": self.params.horizon,
            "reduction": self.params.reduction,
            "matches": [v.to_dict() for v in self.verdicts],
            "errors": list(self.errors),
            "verified": self.verified,
            "verdict": self.verdict,
        }


def _match(
    rep: Representative,
    sigma: Substitution,
    members: Sequence[Substitution],
    params: ClosureParams,
) -> tuple[Substitution, Renaming, str] | None:
    if rep.is_prefix:
        # Exact conjugacy of the derived substitution, confirmed on the prefix.
        cert = durand_substitution(cached_oracle(sigma), rep.factor, params.policy, horizon=params.horizon)
        for tau in members:
            if conjugacy_renaming(cert.derived, tau) is None:
                continue
            pi = fixed_up_to_renaming(rep.derived, tau, params.horizon)
            if pi is not None:
                return tau, pi, "conjugacy"
    for tau in members:
        pi = fixed_up_to_renaming(rep.derived, tau, params.horizon)
        if pi is not None:
            return tau, pi, "prefix"
    return None


def fixed_points(members: Sequence[Substitution]) -> list[Substitution]:
    """One substitution per fixed point: each member at each prolongable letter."""
    return [m.at(c) for m in members for c in m.prolongable_letters()]


def check_closed(members: Sequence[Substitution], params: ClosureParams = ClosureParams()) -> ClosureReport:
    """Check every derived representative of every fixed point against ``members``.

    The empty factor is included: its derived word is the fixed point itself
    with letters renamed.
    """
    if not members:
        raise ValueError("the set of substitutions must be non-empty")
    for m in members:
        if not is_primitive(m):
            raise NotPrimitive(f"{m.label} is not primitive")
    report = ClosureReport(list(members), params)
    for sigma in fixed_points(members):
        failures: list[tuple[str, str]] = []
        reps = derived_representatives(sigma, params, include_empty=True, failures=failures)
        report.errors.extend(f"{sigma.label} from {sigma.letter!r}, factor {w!r}: {msg}" for w, msg in failures)
        for rep in reps:
            found = _match(rep, sigma, members, params)
            member, pi, method = found if found is not None else (None, None, None)
            report.verdicts.append(
                FactorVerdict(
                    source=sigma.label,
                    letter=sigma.letter,
                    factor=rep.factor.text,
                    kind=rep.kind,
                    derived=rep.derived.text,
                    covers=rep.covers,
                    member=member.label if member is not None else None,
                    renaming=pi,
                    method=method,
                    horizon=params.horizon,
                )
            )
    return report


@dataclass
class FamilyReport(ClosureReport):
    """A closure report for an episturmian family plus, for every candidate
    factor, each rotation count ``k`` whose ``L_cyc^k(z)`` fixes its derived word."""

    z: str = ""
    rotations: list[tuple[str, str, list[int]]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        out = super().to_dict()
        out["z"] = self.z
        out["rotations"] = [{"source": s, "factor": f, "k": ks} for s, f, ks in self.rotations]
        return out


def verify_family_theorem(z: str, params: ClosureParams = ClosureParams(), alphabet: str | None = None) -> FamilyReport:
    """Run :func:`check_closed` on ``{L_cyc^k(z)}`` and record the matching ``k``."""
    indexed = family_indexed(z, alphabet)
    members = [m for _, m in indexed]
    base = check_closed(members, params)
    report = FamilyReport(base.members, params, base.verdicts, base.errors, z=str(z))
    for v in base.verdicts:
        derived = Word(v.derived, Alphabet.of(v.derived))
        ks = sorted(
            k
            for kk, tau in indexed
            if fixed_up_to_renaming(derived, tau, params.horizon) is not None
            for k in kk
        )
        for factor in v.covers:
            report.rotations.append((v.source, factor, ks))
    return report
