"""Command-line front end.

Every subcommand builds a plain dict; ``--json`` prints it as JSON, the
default text mode prints one ``path: value`` line per leaf (or the bare value
when the dict has a single entry).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Iterator, Sequence

from . import registry
from .analysis import ancestors, classify_special, special_factors
from .checks import run_checks
from .closure import ClosureParams, check_closed, verify_family_theorem
from .derivation import durand_substitution, link_morphism
from .episturmian import epi_morphism, family_indexed
from .errors import WordError
from .morphism import Substitution, fixed_point_prefix, is_injective, primitivity_exponent
from .returns import ScanPolicy, complete_return_words, derived_word, return_words

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def scalar(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def flatten(data: Any, path: str = "") -> Iterator[tuple[str, str]]:
    if isinstance(data, dict):
        if not data:
            yield path, "{}"
        for key, value in data.items():
            yield from flatten(value, f"{path}.{key}" if path else str(key))
    elif isinstance(data, (list, tuple)):
        if not data:
            yield path, "[]"
        for i, value in enumerate(data):
            yield from flatten(value, f"{path}.{i}" if path else str(i))
    else:
        yield path, scalar(data)


def render_text(data: dict[str, Any]) -> str:
    if len(data) == 1:
        (value,) = data.values()
        if not isinstance(value, (dict, list, tuple)):
            return scalar(value)
    return "\n".join(f"{path}: {value}" for path, value in flatten(data))


def render_checks(data: dict[str, Any]) -> str:
    lines = []
    width = max(len(c["name"]) for c in data["checks"])
    for c in data["checks"]:
        status = "PASS" if c["passed"] else "FAIL"
        note = f"  ({c['note']})" if c["note"] else ""
        lines.append(f"{status}  {c['name']:<{width}}{note}")
    lines.append(f"{sum(c['passed'] for c in data['checks'])}/{len(data['checks'])} checks passed")
    return "\n".join(lines)


def _substitution(spec: str, letter: str = "") -> Substitution:
    try:
        return registry.substitution(spec, letter)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"cannot use {spec!r} as a substitution: {exc}") from exc


def _checked(sub: Substitution, text: str, flag: str) -> str:
    stray = set(text) - set(sub.domain.letters)
    if stray:
        raise UsageError(f"{flag} {text!r} uses letters outside {sub.domain.letters!r}")
    return text


def _params(args: argparse.Namespace) -> ClosureParams:
    if args.max_factor_len < 1 or args.horizon < 1:
        raise UsageError("--max-factor-len and --horizon must be positive")
    return ClosureParams(args.max_factor_len, args.horizon, ScanPolicy(budget=args.budget), not args.no_reduction)


def cmd_fixpoint(args):
    if args.len < 1:
        raise UsageError("--len must be positive")
    sub = _substitution(args.morphism, args.letter)
    return {"prefix": fixed_point_prefix(sub, args.len).text}, True


def cmd_returns(args):
    sub = _substitution(args.morphism, args.letter)
    rs = return_words(_checked(sub, args.factor, '--factor'), sub, ScanPolicy(budget=args.budget))
    out = rs.to_dict()
    out["complete_returns"] = sorted(w.text for w in complete_return_words(rs))
    return out, True


def cmd_derive(args):
    if args.len < 1:
        raise UsageError("--len must be positive")
    sub = _substitution(args.morphism, args.letter)
    return {"derived": derived_word(_checked(sub, args.factor, '--factor'), sub, args.len, ScanPolicy(budget=args.budget)).text}, True


def cmd_durand(args):
    sub = _substitution(args.morphism, args.letter)
    cert = durand_substitution(sub, _checked(sub, args.prefix, '--prefix'), ScanPolicy(budget=args.budget))
    out = cert.to_dict()
    out["verified"] = cert.verify()
    return out, out["verified"]


def cmd_link(args):
    sub = _substitution(args.morphism, args.letter)
    link = link_morphism(sub, _checked(sub, args.factor, '--factor'), ScanPolicy(budget=args.budget))
    out = link.to_dict()
    out["verified"] = link.verify()
    return out, out["verified"]


def cmd_special(args):
    sub = _substitution(args.morphism, args.letter)
    policy = ScanPolicy(budget=args.budget)
    if args.factor is not None:
        return classify_special(_checked(sub, args.factor, "--factor"), sub, policy).to_dict(), True
    found = special_factors(sub, args.max_factor_len, policy)
    return {
        "bispecial": [s.factor for s in found if s.kind.value == "bispecial"],
        "right_special": [s.factor for s in found if s.right_special],
        "left_special": [s.factor for s in found if s.left_special],
        "scan_length": found[0].scan_length if found else 0,
    }, True


def cmd_ancestors(args):
    sub = _substitution(args.morphism, args.letter)
    return ancestors(_checked(sub, args.factor, '--factor'), sub, policy=ScanPolicy(budget=args.budget)).to_dict(), True


def cmd_epi(args):
    z, letters = args.word, args.alphabet
    phi = epi_morphism(z, letters)
    out: dict[str, Any] = {
        "z": z,
        "rules": phi.rules(),
        "primitivity_exponent": primitivity_exponent(phi),
        "injective": is_injective(phi),
    }
    if out["primitivity_exponent"] is not None and z:
        out["family"] = [{"k": ks, "rules": m.rules()} for ks, m in family_indexed(z, letters)]
    return out, True


def cmd_closure(args):
    params = _params(args)
    if args.family:
        report = verify_family_theorem(args.family, params)
    else:
        if not args.morphisms:
            raise UsageError("give at least one substitution or --family")
        report = check_closed([_substitution(m) for m in args.morphisms], params)
    return report.to_dict(), report.verified


def cmd_verify_paper(args):
    results = run_checks()
    data = {
        "checks": [{"name": n, "passed": ok, "note": note} for n, ok, note in results],
        "passed": all(ok for _, ok, _ in results),
    }
    return data, data["passed"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="derivclosure",
        description="Return words, derived words and closure under derivation for fixed points of substitutions.",
        epilog="Morphisms: pd, xi, nu, eta, trib, alpha, epi:<word>[/<alphabet>], or rules like 'a->ab;b->aa'.",
    )
    parser.add_argument("--json", action="store_true", help="print JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_, *, morphism=True):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print JSON instead of text")
        if morphism:
            p.add_argument("morphism", help="registry name, epi:<word> or rule literal")
            p.add_argument("--letter", default="", help="prolongable letter (default: first one)")
        p.add_argument("--budget", type=int, default=ScanPolicy().budget, help="maximum prefix length to scan")
        return p

    p = command("fixpoint", cmd_fixpoint, "prefix of the fixed point")
    p.add_argument("--len", type=int, required=True)
    p = command("returns", cmd_returns, "return words to a factor")
    p.add_argument("--factor", required=True)
    p = command("derive", cmd_derive, "prefix of the derived word to a factor")
    p.add_argument("--factor", required=True)
    p.add_argument("--len", type=int, required=True)
    p = command("durand", cmd_durand, "derived substitution of a prefix, with its certificate")
    p.add_argument("--prefix", required=True)
    p = command("link", cmd_link, "morphism from d(pw) to d(w)")
    p.add_argument("--factor", required=True)
    p = command("special", cmd_special, "classify a factor, or list special factors")
    p.add_argument("--factor")
    p.add_argument("--max-factor-len", type=int, default=10)
    p = command("ancestors", cmd_ancestors, "ancestors of a factor")
    p.add_argument("--factor", required=True)
    p = command("epi", cmd_epi, "the episturmian morphism L_z and its cyclic family", morphism=False)
    p.add_argument("word", help="the word z")
    p.add_argument("--alphabet", help="alphabet (default: letters of z)")
    p = command("closure", cmd_closure, "check closure under derivation", morphism=False)
    p.add_argument("morphisms", nargs="*", help="members of the set")
    p.add_argument("--family", help="check {L_cyc^k(z)} for this z instead")
    p.add_argument("--max-factor-len", type=int, default=ClosureParams().max_factor_len)
    p.add_argument("--horizon", type=int, default=ClosureParams().horizon)
    p.add_argument("--no-reduction", action="store_true", help="derive every factor, not only special ones")
    command("verify-paper", cmd_verify_paper, "rerun every published value and print a pass/fail table", morphism=False)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, ok = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except WordError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if args.json:
        print(json.dumps(data, indent=2))
    elif args.command == "verify-paper":
        print(render_checks(data))
    else:
        print(render_text(data))
    if not ok:
        failing = [c["name"] for c in data.get("checks", []) if not c["passed"]]
        print("failed: " + (", ".join(failing) if failing else args.command), file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
